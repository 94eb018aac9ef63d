#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "ridlab/canonical.hpp"
#include "ridlab/enumerate.hpp"

using namespace ridlab;

namespace {

// Factorial-time oracle: try every vertex bijection.
bool isomorphic_by_permutations(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.n()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.n() && ok; ++u)
            for (int v = u + 1; v < a.n() && ok; ++v)
                if (a.has_edge(u, v) !=
                    b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n());
    for (auto [u, v] : g.edges())
        h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

}  // namespace

TEST_CASE("easy verdicts") {
    CHECK_FALSE(is_isomorphic(path(4), star(4)));
    Graph s23 = double_star(2, 3);
    CHECK(is_isomorphic(s23, relabel(s23, {6, 5, 4, 3, 2, 1, 0})));
    CHECK(is_isomorphic(cycle(5), relabel(cycle(5), {2, 4, 1, 3, 0})));
    CHECK_FALSE(is_isomorphic(path(3), path(4)));
    CHECK_THROWS_AS(is_isomorphic(Graph(17), Graph(17)), std::invalid_argument);
}

TEST_CASE("agreement with the permutation oracle on all graph pairs up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        auto graphs = detail::all_graphs_upto_iso(n);
        // distinct enumerated classes must disagree, and every relabeling
        // must agree; spot the full pair matrix against the oracle
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i; j < graphs.size(); ++j) {
                bool fast = is_isomorphic(graphs[i], graphs[j]);
                bool slow = isomorphic_by_permutations(graphs[i], graphs[j]);
                REQUIRE(fast == slow);
                CHECK(fast == (i == j));
            }
    }
}

TEST_CASE("canonical blocks are invariant under relabeling") {
    std::vector<int> perm{3, 1, 4, 0, 2, 5, 6};
    for (const Graph& t : all_trees(7))
        CHECK(free_tree_canonical_levels(t) == free_tree_canonical_levels(relabel(t, perm)));
    for (const Graph& g : all_connected_graphs(5))
        CHECK(canonical_blocks(g) ==
              canonical_blocks(relabel(g, std::vector<int>{3, 1, 4, 0, 2})));
}

TEST_CASE("automorphism counts on pinned graphs") {
    CHECK(automorphism_count(path(4)) == 2);
    CHECK(automorphism_count(cycle(5)) == 10);
    CHECK(automorphism_count(star(5)) == 24);
    CHECK(automorphism_count(complete(4)) == 24);
    CHECK(automorphism_count(double_star(2, 2)) == 8);
}
