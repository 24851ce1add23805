#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cgkit/enumerate.hpp>
#include <cgkit/equivalence.hpp>
#include <cgkit/graph_io.hpp>
#include <cgkit/learn_mccg.hpp>
#include <cgkit/oracle.hpp>

using namespace cgkit;

TEST_CASE("output is the maximally bidirected representative") {
    // A -- B <-> C and its class mates all map to A <-> B <-> C
    MixedGraph g = graph_of("A--B, B<->C");
    MccgLearnResult res = learn_mccg(GraphOracle(g));
    CHECK(res.ok);
    CHECK(res.graph == graph_of("A<->B, B<->C"));
    CHECK(res.graph == blargest(g));
    CHECK(markov_equivalent_mccg(res.graph, g));
}

TEST_CASE("undirected path survives because its model demands it") {
    MixedGraph g = graph_of("A--B, B--C");
    MccgLearnResult res = learn_mccg(GraphOracle(g));
    CHECK(res.ok);
    CHECK(res.graph == g);
    REQUIRE(res.seps.find(0, 2).has_value());
    CHECK(*res.seps.find(0, 2) == bit(1));
}

TEST_CASE("four node counterexample fixture") {
    MixedGraph h = graph_of("A--D, A--C, B--C, C--D");
    MccgLearnResult res = learn_mccg(GraphOracle(h));
    CHECK(res.ok);
    CHECK(res.graph == blargest(h));
    CHECK(markov_equivalent_mccg(res.graph, h));
}

TEST_CASE("skeleton and separators feed the orientation step") {
    MixedGraph g = graph_of("A--B, B--C, C<->D");
    GraphOracle oracle(g);
    SkeletonResult sk = mccg_skeleton(oracle);
    CHECK(sk.graph == graph_of("A--B, B--C, C--D"));

    MixedGraph oriented = orient_mccg(sk.graph, sk.seps);
    CHECK(oriented == learn_mccg(oracle).graph);
    CHECK(is_mccg(oriented));
}

TEST_CASE("every three node MCCG is learned as its blargest") {
    int count = 0;
    for_each_mccg(3, [&](const MixedGraph& g) {
        MccgLearnResult res = learn_mccg(GraphOracle(g));
        CHECK(res.ok);
        CHECK(res.diagnostic.empty());
        CHECK(res.graph == blargest(g));
        ++count;
    });
    CHECK(count == 24);  // 3^3 assignments minus the 3 triangles mixing one bidirected edge into an undirected cycle
}

TEST_CASE("learning is deterministic") {
    MixedGraph g = random_mccg(6, 99);
    MccgLearnResult a = learn_mccg(GraphOracle(g));
    MccgLearnResult b = learn_mccg(GraphOracle(g));
    CHECK(a.ok);
    CHECK(a.graph == b.graph);
    CHECK(a.graph == blargest(g));
}

TEST_CASE("random graphs at five and six nodes") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        MixedGraph g = random_mccg(5 + static_cast<int>(seed % 2), seed);
        MccgLearnResult res = learn_mccg(GraphOracle(g));
        CHECK(res.ok);
        CHECK(res.graph == blargest(g));
    }
}
