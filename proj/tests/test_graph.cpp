#include <catch2/catch_amalgamated.hpp>

#include "ridlab/enumerate.hpp"
#include "ridlab/graph.hpp"

using namespace ridlab;

TEST_CASE("deterministic constructors") {
    Graph s = double_star(2, 2);
    CHECK(s.n() == 6);
    CHECK(s.m() == 5);
    int deg3 = 0;
    for (int v = 0; v < s.n(); ++v)
        if (s.degree(v) == 3) ++deg3;
    CHECK(deg3 == 2);
    CHECK(s.has_edge(0, 1));

    Graph c5 = cycle(5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    CHECK(complete_bipartite(1, 4) == star(5));
    CHECK(path(1).m() == 0);
    CHECK(complete(4).m() == 6);
}

TEST_CASE("constructor argument errors") {
    CHECK_THROWS_AS(path(0), std::invalid_argument);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(star(0), std::invalid_argument);
    CHECK_THROWS_AS(complete_bipartite(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(double_star(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(63), std::invalid_argument);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
}

TEST_CASE("structure queries") {
    CHECK(diameter(path(9)) == 8);
    CHECK(diameter(star(1)) == 0);
    CHECK_FALSE(is_tree(cycle(4)));
    CHECK(is_tree(double_star(2, 3)));
    CHECK(leaves(double_star(2, 2)) == std::vector<int>{2, 3, 4, 5});

    Graph two_paths(5);
    two_paths.add_edge(0, 1);
    two_paths.add_edge(2, 3);
    two_paths.add_edge(3, 4);
    auto comps = components(two_paths);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3, 4});
    CHECK_FALSE(is_connected(two_paths));
    CHECK_THROWS_AS(diameter(two_paths), std::domain_error);

    Graph sub = induced(cycle(5), std::vector<int>{0, 1, 2});
    CHECK(sub.n() == 3);
    CHECK(sub.m() == 2);  // the path 0-1-2
    CHECK_THROWS_AS(induced(cycle(5), std::vector<int>{0, 7}), std::invalid_argument);
}

TEST_CASE("graph invariants hold on every enumerated graph") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            int degsum = 0;
            for (int v = 0; v < g.n(); ++v) {
                degsum += g.degree(v);
                CHECK_FALSE(g.has_edge(v, v));
                std::uint64_t nb = g.neighbors(v);
                while (nb) {
                    int u = std::countr_zero(nb);
                    nb &= nb - 1;
                    CHECK(g.has_edge(u, v));  // symmetry
                }
            }
            CHECK(degsum == 2 * g.m());
            CHECK(is_connected(g));
        }
        for (const Graph& t : all_trees(n)) {
            CHECK(t.m() == t.n() - 1);
            CHECK(is_tree(t));
        }
    }
}
