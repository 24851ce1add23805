#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cgkit/enumerate.hpp>
#include <cgkit/errors.hpp>
#include <cgkit/independence.hpp>
#include <cgkit/oracle.hpp>

using namespace cgkit;

TEST_CASE("triple set bookkeeping") {
    TripleSet s(4);
    CHECK(s.size() == 0);
    CHECK(s.insert(bit(0), bit(1), 0));
    CHECK(!s.insert(bit(0), bit(1), 0));  // repeated
    CHECK(!s.insert(bit(1), bit(0), 0));  // symmetric orientation
    CHECK(s.size() == 1);
    CHECK(s.contains(bit(0), bit(1), 0));
    CHECK(s.contains(bit(1), bit(0), 0));
    CHECK(!s.contains(bit(0), bit(1), bit(2)));

    s.insert(bit(2), bit(0) | bit(1), bit(3));
    auto ts = s.triples();
    REQUIRE(ts.size() == 2);
    for (const CiTriple& t : ts) CHECK(lowest_node(t.x) < lowest_node(t.y));

    TripleSet o(4);
    o.insert(bit(0), bit(1), 0);
    CHECK(s != o);
    auto diff = s.difference(o);
    REQUIRE(diff.size() == 1);
    CHECK(diff[0].z == bit(3));
    CHECK(o.difference(s).empty());

    CiTriple t{bit(2), bit(0) | bit(1), bit(3)};
    CHECK(s.decode(s.code(t.x, t.y, t.z)) == t);
}

TEST_CASE("full models of the three-node textbook graphs") {
    TripleSet want(3);

    want.insert(bit(0), bit(2), bit(1));
    CHECK(full_model(graph_of("A--B, B--C"), SepKind::Mccg) == want);
    CHECK(full_model(graph_of("A->B, B->C"), SepKind::Amp) == want);

    TripleSet marginal(3);
    marginal.insert(bit(0), bit(2), 0);
    CHECK(full_model(graph_of("A->B, C->B")) == marginal);
    CHECK(full_model(graph_of("A<->B, B<->C")) == marginal);
    CHECK(full_model(graph_of("A--B, B<->C")) == marginal);
}

TEST_CASE("local base closure recovers the paper model") {
    // the H side of the mccg counterexample; its model is exactly five statements
    MixedGraph h = graph_of("A--D, A--C, B--C, C--D");
    int a = h.index_of("A"), b = h.index_of("B"), c = h.index_of("C"), d = h.index_of("D");

    // one statement per ordered non-adjacent pair in the same component
    IndependenceModel base = local_base(h);
    CHECK(base.size() == 4);
    CHECK(base.contains(bit(a), bit(b), bit(c) | bit(d)));  // A _|_ B | ne(A)
    CHECK(base.contains(bit(b), bit(a), bit(c)));           // B _|_ A | ne(B)
    CHECK(base.contains(bit(b), bit(d), bit(c)));           // B _|_ D | ne(B)
    CHECK(base.contains(bit(d), bit(b), bit(a) | bit(c)));  // D _|_ B | ne(D)

    TripleSet want(4);
    want.insert(bit(b), bit(a), bit(c));
    want.insert(bit(b), bit(a), bit(c) | bit(d));
    want.insert(bit(b), bit(d), bit(c));
    want.insert(bit(b), bit(d), bit(c) | bit(a));
    want.insert(bit(b), bit(a) | bit(d), bit(c));

    CHECK(wtc_closure(base) == want);
    CHECK(full_model(h, SepKind::Mccg) == want);
}

TEST_CASE("global local and pairwise models coincide on all 3-node mccgs") {
    for_each_mccg(3, [](const MixedGraph& g) {
        IndependenceModel full = full_model(g, SepKind::Mccg);
        CHECK(wtc_closure(local_base(g)) == full);
        CHECK(wtc_closure(pairwise_base(g, default_partition(g))) == full);
    });
}

TEST_CASE("partition consistency") {
    MixedGraph g = graph_of("A--B, B<->C");
    std::vector<NodeSet> fine{bit(0) | bit(1), bit(2)};
    CHECK_NOTHROW(check_consistent_partition(g, fine));
    CHECK_NOTHROW(pairwise_base(g, fine));

    // undirected edge across elements
    CHECK_THROWS_AS(check_consistent_partition(g, {bit(0), bit(1) | bit(2)}), input_error);
    // bidirected edge inside an element
    CHECK_THROWS_AS(check_consistent_partition(g, {bit(0) | bit(1) | bit(2)}), input_error);
    // not a partition of the nodes
    CHECK_THROWS_AS(check_consistent_partition(g, {bit(0) | bit(1)}), input_error);

    auto q = default_partition(g);
    REQUIRE(q.size() == 2);
    CHECK(q[0] == (bit(0) | bit(1)));
}

TEST_CASE("coarser consistent partitions leave the pairwise closure unchanged") {
    MixedGraph g = graph_of("A--B, C<->D", {"E"});
    IndependenceModel full = full_model(g, SepKind::Mccg);
    CHECK(wtc_closure(pairwise_base(g, default_partition(g))) == full);
    // merge the isolated node into another element
    std::vector<NodeSet> coarse{bit(0) | bit(1) | bit(4), bit(2), bit(3)};
    CHECK(wtc_closure(pairwise_base(g, coarse)) == full);
}

TEST_CASE("dependence base in component and neighbour form") {
    MixedGraph g = graph_of("A--B, B--C, C<->D");
    int a = 0, b = 1, c = 2, d = 3;

    TripleSet comp = dependence_base(g);
    CHECK(comp.size() == 3);
    CHECK(comp.contains(bit(c), bit(d), 0));              // the bidirected edge
    CHECK(comp.contains(bit(a), bit(b), bit(c)));         // A -- B given K \ {A,B}
    CHECK(comp.contains(bit(b), bit(c), bit(a)));

    TripleSet ne = dependence_base(g, true);
    CHECK(ne.contains(bit(c), bit(d), 0));
    // A -- B given ne(A) \ B = {}
    CHECK(ne.contains(bit(a), bit(b), 0));
    // B -- C given ne(B) \ C = {A} and C -- B given ne(C) \ B = {}
    CHECK((ne.contains(bit(b), bit(c), bit(a)) || ne.contains(bit(b), bit(c), 0)));
}

TEST_CASE("dependence closure derives decomposition and weak union") {
    MixedGraph g = graph_of("A--B, B<->C");
    TripleSet base = dependence_base(g);
    TripleSet closed = wtc_dependence_closure(base, full_model(g, SepKind::Mccg));

    CHECK(closed.contains(bit(0), bit(1), 0));
    CHECK(closed.contains(bit(1), bit(2), 0));
    CHECK(closed.contains(bit(0), bit(1) | bit(2), 0));  // decomposition
    CHECK(closed.contains(bit(1), bit(0) | bit(2), 0));
    // A and C are separated given {}; the closure must not invent A not_|_ C
    CHECK(!closed.contains(bit(0), bit(2), 0));
    CHECK(closed.size() >= base.size());
}

TEST_CASE("markov conditions against a faithful and an unfaithful oracle") {
    MixedGraph g = graph_of("A->C, B->C, C--D");
    GraphOracle good(g, SepKind::Amp);
    MarkovCheck ok = check_markov_c1c2(g, good);
    CHECK(ok.ok);
    CHECK(ok.failures.empty());

    // an oracle for a different structure breaks at least one condition
    GraphOracle bad(graph_of("A--C, B--C, C--D"), SepKind::Amp);
    MarkovCheck broken = check_markov_c1c2(g, bad);
    CHECK(!broken.ok);
    CHECK(!broken.failures.empty());
}

TEST_CASE("triple rendering") {
    MixedGraph g = graph_of("A--B, B--C, C--D");
    CHECK(triple_to_string(g, {bit(0), bit(2), bit(1)}) == "A|C|B");
    CHECK(triple_to_string(g, {bit(0) | bit(3), bit(2), bit(1)}) == "A,D|C|B");
    CHECK(triple_to_string(g, {bit(0), bit(2), 0}) == "A|C|");
    CHECK(triple_to_string(g, {bit(0), bit(2), bit(1) | bit(3)}) == "A|C|B,D");
}
