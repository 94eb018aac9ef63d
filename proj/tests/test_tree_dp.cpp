#include <catch2/catch_amalgamated.hpp>

#include "ridlab/enumerate.hpp"
#include "ridlab/families.hpp"
#include "ridlab/tree_dp.hpp"

using namespace ridlab;

TEST_CASE("pinned tree values") {
    CHECK(rid_number_tree_dp(path(6)).value == 6);
    CHECK(rid_number_tree_dp(build_T4k(1).graph).value == 4);  // (5+3)/2
    CHECK(rid_number_tree_dp(path(1)).value == 1);
    CHECK(rid_number_tree_dp(path(2)).value == 2);
    for (int n = 3; n <= 9; ++n) CHECK(rid_number_tree_dp(star(n)).value == n);
}

TEST_CASE("rejects non-trees") {
    CHECK_THROWS_AS(rid_number_tree_dp(cycle(4)), std::domain_error);
    Graph forest(4);
    forest.add_edge(0, 1);
    forest.add_edge(2, 3);
    CHECK_THROWS_AS(rid_number_tree_dp(forest), std::domain_error);
    CHECK_THROWS_AS(rid_number_tree_dp(Graph(0)), std::invalid_argument);
}

TEST_CASE("DP equals branch-and-bound on every tree up to n = 12") {
    for (int n = 1; n <= 12; ++n)
        for (const Graph& t : all_trees(n)) {
            SolveResult dp = rid_number_tree_dp(t);
            CHECK(dp.value == rid_number_exact(t).value);
            CHECK(is_restrained_italian(t, dp.witness));
            CHECK(dp.witness.weight() == dp.value);
        }
}

TEST_CASE("DP witnesses are deterministic") {
    Graph t = build_T4k(3).graph;
    SolveResult a = rid_number_tree_dp(t);
    SolveResult b = rid_number_tree_dp(t);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
}
