#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "ridlab/enumerate.hpp"
#include "ridlab/graph6.hpp"

using namespace ridlab;

namespace {

// Independent decoder for cross-checks: expands the data bytes to an explicit
// bit string and reads it positionally.
Graph decode_by_bitstring(const std::string& s) {
    int n = s[0] - 63;
    std::string bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        int v = s[i] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1 ? '1' : '0');
    }
    Graph g(n);
    std::size_t pos = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits[pos++] == '1') g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("pinned encodings") {
    CHECK(to_graph6(path(2)) == "A_");
    CHECK(to_graph6(star(1)) == "@");
    CHECK(from_graph6("@") == star(1));

    Graph d = from_graph6("D?{");
    CHECK(d.n() == 5);
    CHECK(d.m() == 4);
    for (int v = 0; v < 4; ++v) CHECK(d.has_edge(v, 4));
}

TEST_CASE("header and trailing newline are tolerated") {
    CHECK(from_graph6(">>graph6<<A_") == path(2));
    CHECK(from_graph6("A_\n") == path(2));
}

TEST_CASE("parse errors name the byte offset") {
    CHECK_THROWS_AS(from_graph6(""), Graph6ParseError);
    CHECK_THROWS_AS(from_graph6("~??"), Graph6ParseError);  // long form
    CHECK_THROWS_AS(from_graph6("D?"), Graph6ParseError);   // truncated
    CHECK_THROWS_AS(from_graph6("A_X"), Graph6ParseError);  // trailing data

    try {
        from_graph6(std::string("B") + char(20));  // illegal data byte
        FAIL("expected Graph6ParseError");
    } catch (const Graph6ParseError& e) {
        CHECK(e.offset() == 1);
        CHECK(std::string(e.what()).find("offset 1") != std::string::npos);
    }

    // n = 3 uses 3 data bits; the trailing 3 bits must be zero padding
    try {
        from_graph6("B`");  // 100001 -> nonzero padding
        FAIL("expected Graph6ParseError");
    } catch (const Graph6ParseError& e) {
        CHECK(std::string(e.what()).find("padding") != std::string::npos);
    }
    CHECK(from_graph6("Bw") == complete(3));  // all six bits in use is fine at n = 4
    CHECK(from_graph6("Cw").n() == 4);

    CHECK_THROWS_AS(to_graph6(Graph(0)), std::invalid_argument);
}

TEST_CASE("round-trip identity over enumerated graphs") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : all_connected_graphs(n)) {
            std::string s = to_graph6(g);
            CHECK(from_graph6(s) == g);
            CHECK(to_graph6(from_graph6(s)) == s);
        }
    for (int n = 2; n <= 10; ++n)
        for (const Graph& t : all_trees(n)) CHECK(from_graph6(to_graph6(t)) == t);
}

TEST_CASE("agreement with an independent decoder on random graphs") {
    std::mt19937 rng(20240613);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        std::string s = to_graph6(g);
        CHECK(decode_by_bitstring(s) == g);
        CHECK(from_graph6(s) == g);
    }
}
