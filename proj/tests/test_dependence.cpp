#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include <cgkit/dependence.hpp>
#include <cgkit/enumerate.hpp>
#include <cgkit/errors.hpp>
#include <cgkit/graph_io.hpp>
#include <cgkit/independence.hpp>
#include <cgkit/separation.hpp>

using namespace cgkit;

namespace {

// every query with disjoint nonempty x, y and z over the remainder
template <typename F>
void for_all_queries(int n, F&& f) {
    NodeSet all = (NodeSet{1} << n) - 1;
    for_each_subset(all, [&](NodeSet x) {
        if (!x) return;
        for_each_subset(all & ~x, [&](NodeSet y) {
            if (!y) return;
            for_each_subset(all & ~x & ~y, [&](NodeSet z) { f(x, y, z); });
        });
    });
}

}  // namespace

TEST_CASE("mixed cycle detection") {
    // undirected and bidirected edges on one cycle
    CHECK(!mixed_cycle_free(graph_of("A--B, A--C, B<->D, C<->D")));
    CHECK(!mixed_cycle_free(graph_of("A--B, A<->C, B<->C")));

    // pure cycles of either kind are fine
    CHECK(mixed_cycle_free(graph_of("A--B, B--C, A--C")));
    CHECK(mixed_cycle_free(graph_of("A<->B, B<->C, A<->C")));
    CHECK(mixed_cycle_free(graph_of("A<->C, B<->E, C--D, C--E, D--E, D<->F")));

    CHECK_THROWS_AS(mixed_cycle_free(graph_of("A->B")), input_error);

    for (int n : {3, 4}) {
        for_each_mccg(n, [](const MixedGraph& g) {
            CHECK(mixed_cycle_free(g) == brute_force_mixed_cycle_free(g));
        });
    }
}

TEST_CASE("joined refuses unsuitable graphs") {
    MixedGraph mixed = graph_of("A--B, A--C, B<->D, C<->D");
    CHECK_THROWS_AS(joined(mixed, bit(0), bit(3), 0), input_error);
    CHECK_THROWS_AS(joined(graph_of("A->B, B->C"), bit(0), bit(2), 0), input_error);
    // x and y overlap
    CHECK_THROWS_AS(joined(graph_of("A--B, B--C"), bit(0), bit(0) | bit(2), 0), input_error);
}

TEST_CASE("single open path means dependence") {
    MixedGraph g = graph_of("A--B, A--C, B--C, C<->D, C<->E, D<->E");
    int a = g.index_of("A"), b = g.index_of("B"), c = g.index_of("C"), d = g.index_of("D");

    JoinedWitness w = joined_witness(g, bit(a), bit(d), bit(b) | bit(c));
    CHECK(w.joined);
    CHECK(w.path == std::vector<int>{a, c, d});
    CHECK(w.u == (bit(b) | bit(c)));
    CHECK(!separated(g, SepKind::Mccg, bit(a), bit(d), bit(b) | bit(c)));

    // given nothing, the triplex node C can never be opened
    CHECK(!joined(g, bit(a), bit(d), 0));

    // the covariance and concentration projections lose the dependence
    MixedGraph cov = graph_of("A<->B, A<->C, B<->C, C<->D, C<->E, D<->E");
    MixedGraph conc = graph_of("A--B, A--C, B--C, A--D, A--E, B--D, B--E, C--D, C--E, D--E");
    CHECK(!joined(cov, bit(0), bit(3), bit(1) | bit(2)));
    CHECK(!joined(conc, bit(0), bit(3), bit(1) | bit(2)));
}

TEST_CASE("two open paths spoil the reading") {
    // on the undirected triangle nothing is separated, yet A ~ B | {} fails
    // because the direct edge and A - C - B are both open given the empty set
    MixedGraph tri = graph_of("A--B, B--C, A--C");
    CHECK(!joined(tri, bit(0), bit(1), 0));
    CHECK(!separated(tri, SepKind::Mccg, bit(0), bit(1), 0));

    // conditioning on C closes the detour and the direct edge stands alone
    CHECK(joined(tri, bit(0), bit(1), bit(2)));

    // a witness on a separated pair comes back empty handed
    JoinedWitness none = joined_witness(graph_of("A--B, B--C"), bit(0), bit(2), bit(1));
    CHECK(!none.joined);
    CHECK(none.path.empty());
}

TEST_CASE("canonical u agrees with the quantified criterion") {
    for (int n = 3; n <= 4; ++n) {
        for_each_mccg(n, [&](const MixedGraph& g) {
            if (!mixed_cycle_free(g)) return;
            for_all_queries(n, [&](NodeSet x, NodeSet y, NodeSet z) {
                CHECK(joined(g, x, y, z) == brute_force_joined(g, x, y, z));
            });
        });
    }
}

TEST_CASE("conditioning a spouse reopens a blocked detour") {
    // B - A - C is dead once A is conditioned, so the edge B - C is the only
    // open route and the dependence is certain. Adding A's spouse D to the
    // conditioning set revives the detour: the two routes can now cancel, so
    // the reading declines, and so does the closure
    MixedGraph g = graph_of("A--B, A--C, A<->D, B--C");
    NodeSet b = bit(g.index_of("B")), c = bit(g.index_of("C"));
    NodeSet a = bit(g.index_of("A")), d = bit(g.index_of("D"));

    JoinedWitness w = joined_witness(g, b, c, a);
    CHECK(w.joined);
    CHECK(w.path == std::vector<int>{g.index_of("B"), g.index_of("C")});
    CHECK(!joined(g, b, c, a | d));

    TripleSet closure = wtc_dependence_closure(dependence_base(g), full_model(g, SepKind::Mccg));
    CHECK(closure.contains(b, c, a));
    CHECK(!closure.contains(b, c, a | d));
}

TEST_CASE("joined reads off exactly the dependence closure") {
    for_each_mccg(3, [](const MixedGraph& g) {
        if (!mixed_cycle_free(g)) return;
        IndependenceModel seps = full_model(g, SepKind::Mccg);
        TripleSet closure = wtc_dependence_closure(dependence_base(g), seps);
        TripleSet closure_ne = wtc_dependence_closure(dependence_base(g, true), seps);
        for_all_queries(3, [&](NodeSet x, NodeSet y, NodeSet z) {
            bool j = joined(g, x, y, z);
            CHECK(j == closure.contains(x, y, z));
            CHECK(j == closure_ne.contains(x, y, z));
        });
    });
}

TEST_CASE("forests know nothing but the model") {
    CHECK(skeleton_forest(graph_of("A--B, B<->C")));
    CHECK(!skeleton_forest(graph_of("A--B, B--C, A--C")));

    // without any cycle, joined is the exact complement of separation
    int forests = 0;
    for_each_mccg(4, [&](const MixedGraph& g) {
        if (!skeleton_forest(g)) return;
        ++forests;
        for_all_queries(4, [&](NodeSet x, NodeSet y, NodeSet z) {
            CHECK(joined(g, x, y, z) == !separated(g, SepKind::Mccg, x, y, z));
        });
    });
    CHECK(forests > 100);
}
