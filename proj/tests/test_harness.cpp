#include <catch2/catch_amalgamated.hpp>

#include "ridlab/harness.hpp"

using namespace ridlab;

TEST_CASE("small sweeps pass") {
    CheckReport r = check("tree-lower-bound", 8);
    CHECK(r.pass());
    CHECK(r.instances_checked == 1 + 2 + 3 + 6 + 11 + 23);  // trees of order 3..8
    CHECK(r.min_n == 3);
    CHECK(r.max_n == 8);

    CheckReport eq2 = check("rid-eq-2", 5);
    CHECK(eq2.pass());
    CHECK(eq2.instances_checked == 1 + 2 + 6 + 21);

    CHECK(check("tree-extremal", 9).pass());
    CHECK(check("sandwich", 5).pass());
    CHECK(check("eta", 5).pass());
    CHECK(check("rid-eq-3", 5).pass());
    CHECK(check("rid-eq-n", 5).pass());
    CHECK(check("rid-eq-n-minus-1-discovery", 5).pass());
    CHECK(check("lemma1", 6).pass());
    CHECK(check("gadget", 4).pass());  // covers both the direct and certificate paths
}

TEST_CASE("parallel sweeps match sequential ones") {
    for (const char* tag : {"sandwich", "rid-eq-n", "tree-extremal"}) {
        CheckReport seq = check(tag, 6, 1);
        CheckReport par = check(tag, 6, 4);
        CHECK(seq.instances_checked == par.instances_checked);
        CHECK(seq.counterexample_total == par.counterexample_total);
        REQUIRE(seq.counterexamples.size() == par.counterexamples.size());
        for (std::size_t i = 0; i < seq.counterexamples.size(); ++i) {
            CHECK(seq.counterexamples[i].graph6 == par.counterexamples[i].graph6);
            CHECK(seq.counterexamples[i].expected == par.counterexamples[i].expected);
            CHECK(seq.counterexamples[i].actual == par.counterexamples[i].actual);
        }
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(check("no-such-theorem", 5), std::invalid_argument);
    CHECK_THROWS_AS(check("rid-eq-n", 9), std::invalid_argument);
    CHECK_THROWS_AS(check("tree-lower-bound", 2), std::invalid_argument);
    CHECK_THROWS_AS(check("sandwich", 5, 0), std::invalid_argument);
    CHECK(known_theorems().size() == 10);
}

TEST_CASE("report serialization") {
    CheckReport rep;
    rep.theorem = "sandwich";
    rep.min_n = 1;
    rep.max_n = 4;
    rep.instances_checked = 10;
    rep.counterexamples = {{"Ch", "a <= b", "a = 3, b = 2"}};
    rep.counterexample_total = 1;
    rep.elapsed_ms = 1.5;

    nlohmann::json j = rep.to_json();
    CHECK(j["schema"] == "rid-lab/1");
    CHECK(j["theorem"] == "sandwich");
    CHECK(j["orders_checked"]["min"] == 1);
    CHECK(j["orders_checked"]["max"] == 4);
    CHECK(j["instances_checked"] == 10);
    CHECK(j["counterexample_total"] == 1);
    CHECK(j["pass"] == false);
    CHECK(j["counterexamples"][0]["graph6"] == "Ch");

    CheckReport ok = check("gadget", 2);
    CHECK(ok.to_json()["pass"] == true);
}

TEST_CASE("gadget block bounds verify by enumeration") {
    CHECK(detail::verify_gadget_block_bounds());
}
