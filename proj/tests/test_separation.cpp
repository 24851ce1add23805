#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cgkit/enumerate.hpp>
#include <cgkit/errors.hpp>
#include <cgkit/mixed_graph.hpp>
#include <cgkit/separation.hpp>

using namespace cgkit;

namespace {

// every (x, y, z) with x, y nonempty and x, y, z pairwise disjoint
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

TEST_CASE("query validation") {
    MixedGraph g = graph_of("A--B, B--C");
    CHECK_THROWS_AS(amp_separated(g, 0, bit(1), 0), input_error);
    CHECK_THROWS_AS(amp_separated(g, bit(0), 0, 0), input_error);
    CHECK_THROWS_AS(amp_separated(g, bit(0), bit(0), 0), input_error);
    CHECK_THROWS_AS(amp_separated(g, bit(0), bit(1), bit(1)), input_error);
    CHECK_THROWS_AS(amp_separated(g, bit(0), bit(1), bit(5)), input_error);
    CHECK_THROWS_AS(amp_separated(graph_of("A--B, B<->C"), bit(0), bit(1), 0), input_error);
    CHECK_THROWS_AS(mccg_separated(graph_of("A->B"), bit(0), bit(1), 0), input_error);
}

TEST_CASE("amp separation on the directed classics") {
    MixedGraph chain = graph_of("A->B, B->C");
    CHECK(!amp_separated(chain, bit(0), bit(2), 0));
    CHECK(amp_separated(chain, bit(0), bit(2), bit(1)));

    MixedGraph fork = graph_of("B->A, B->C");
    CHECK(!amp_separated(fork, bit(0), bit(2), 0));
    CHECK(amp_separated(fork, bit(0), bit(2), bit(1)));

    MixedGraph collider = graph_of("A->B, C->B");
    CHECK(amp_separated(collider, bit(0), bit(2), 0));
    CHECK(!amp_separated(collider, bit(0), bit(2), bit(1)));
}

TEST_CASE("amp flags block like colliders") {
    // A -> B -- C carries the triplex ({A,C}, B), unlike the LWF reading
    MixedGraph flag = graph_of("A->B, B--C");
    CHECK(amp_separated(flag, bit(0), bit(2), 0));
    CHECK(!amp_separated(flag, bit(0), bit(2), bit(1)));
}

TEST_CASE("conditioning can open a longer route through a parent") {
    // C -- D <- A -> D -- E revisits D; with D given, both transits are open
    MixedGraph f = graph_of("A->D, B->E, C--D, D--E");
    int a = f.index_of("A"), c = f.index_of("C"), d = f.index_of("D"), e = f.index_of("E");
    CHECK(!amp_separated(f, bit(c), bit(e), 0));  // C -- D -- E is open
    CHECK(!amp_separated(f, bit(c), bit(e), bit(d)));
    CHECK(amp_separated(f, bit(c), bit(e), bit(a) | bit(d)));

    // the same route stays invisible to a length-limited enumeration
    CHECK(brute_force_amp_separated(f, bit(c), bit(e), bit(d), 2));
    CHECK(!brute_force_amp_separated(f, bit(c), bit(e), bit(d)));
}

TEST_CASE("reachability equals route enumeration on every 3-node chain graph") {
    for_each_chain_graph(3, [](const MixedGraph& g) {
        for_all_queries(3, [&](NodeSet x, NodeSet y, NodeSet z) {
            CHECK(amp_separated(g, x, y, z) == brute_force_amp_separated(g, x, y, z));
        });
    });
}

TEST_CASE("mccg separation basics") {
    MixedGraph g = graph_of("A--B, B<->C");
    // B is a triplex node on the only path, so conditioning opens it
    CHECK(mccg_separated(g, bit(0), bit(2), 0));
    CHECK(!mccg_separated(g, bit(0), bit(2), bit(1)));

    MixedGraph cov = graph_of("A<->B, B<->C");
    CHECK(mccg_separated(cov, bit(0), bit(2), 0));
    CHECK(!mccg_separated(cov, bit(0), bit(2), bit(1)));

    MixedGraph conc = graph_of("A--B, B--C");
    CHECK(!mccg_separated(conc, bit(0), bit(2), 0));
    CHECK(mccg_separated(conc, bit(0), bit(2), bit(1)));
}

TEST_CASE("latent expansion preserves the separation model") {
    MixedGraph g = graph_of("A--B, B<->C");
    MixedGraph ex = latent_expand(g);
    CHECK(ex.node_count() == 4);
    int l = ex.index_of("_L_B_C");
    CHECK(ex.has_edge(l, ex.index_of("B"), EdgeType::Directed));
    CHECK(ex.has_edge(l, ex.index_of("C"), EdgeType::Directed));
    CHECK(is_chain_graph(ex));

    for_each_mccg(3, [](const MixedGraph& m) {
        MixedGraph e = latent_expand(m);
        // map original indices into the expanded graph
        int where[3];
        for (int i = 0; i < m.node_count(); ++i) where[i] = e.index_of(m.name_of(i));
        auto lift = [&](NodeSet s) {
            NodeSet out = 0;
            for (int i : set_nodes(s)) out |= bit(where[i]);
            return out;
        };
        for_all_queries(m.node_count(), [&](NodeSet x, NodeSet y, NodeSet z) {
            CHECK(mccg_separated(m, x, y, z) == amp_separated(e, lift(x), lift(y), lift(z)));
        });
    });
}

TEST_CASE("simplified and general path criteria agree on mccgs") {
    for_each_mccg(3, [](const MixedGraph& m) {
        for_all_queries(3, [&](NodeSet x, NodeSet y, NodeSet z) {
            bool got = mccg_separated(m, x, y, z);
            CHECK(got == brute_force_ccg_separated(m, x, y, z, true));
            CHECK(got == brute_force_ccg_separated(m, x, y, z, false));
        });
    });
}

TEST_CASE("the spouse exception matters only off the maximal family") {
    // A -- C -- B with C spoused violates C1, so the readings may differ
    MixedGraph ccg = graph_of("A--C, C--B, C<->D");
    std::vector<int> path{ccg.index_of("A"), ccg.index_of("C"), ccg.index_of("B")};
    NodeSet z = bit(ccg.index_of("C"));
    CHECK(ccg_path_open(ccg, path, z, true));
    CHECK(!ccg_path_open(ccg, path, z, false));
    CHECK(!ccg_path_open(ccg, path, 0, false) == false);  // open when C is unconditioned
    CHECK_THROWS_AS(ccg_path_open(ccg, {0}, 0, true), input_error);
}

TEST_CASE("mag translation directs undirected edges into spoused nodes") {
    MixedGraph g = graph_of("A<->C, C--D, D--E");
    MixedGraph mag = mag_translate(g);
    CHECK(mag.has_edge(mag.index_of("A"), mag.index_of("C"), EdgeType::Bidirected));
    CHECK(mag.has_edge(mag.index_of("D"), mag.index_of("C"), EdgeType::Directed));
    CHECK(mag.has_edge(mag.index_of("D"), mag.index_of("E"), EdgeType::Undirected));

    // both ends spoused: the edge turns bidirected
    MixedGraph cascade = mag_translate(graph_of("A<->B, B--C, C<->D"));
    CHECK(cascade.has_edge(1, 2, EdgeType::Bidirected));
    CHECK(cascade.edge_list() ==
          std::vector<Edge>{bid("A", "B"), bid("B", "C"), bid("C", "D")});
}

TEST_CASE("mag separation matches mccg separation after translation") {
    MixedGraph g = graph_of("A<->C, C--D, D--E");
    MixedGraph mag = mag_translate(g);
    int a = g.index_of("A"), c = g.index_of("C"), d = g.index_of("D"), e = g.index_of("E");
    CHECK(mag_separated(mag, bit(a), bit(e), bit(c) | bit(d)));
    CHECK(mccg_separated(g, bit(a), bit(e), bit(c) | bit(d)));

    for_all_queries(4, [&](NodeSet x, NodeSet y, NodeSet z) {
        CHECK(mccg_separated(g, x, y, z) == mag_separated(mag, x, y, z));
    });

    for_each_mccg(3, [](const MixedGraph& m) {
        MixedGraph t = mag_translate(m);
        for_all_queries(3, [&](NodeSet x, NodeSet y, NodeSet z) {
            CHECK(mccg_separated(m, x, y, z) == mag_separated(t, x, y, z));
        });
    });
}

TEST_CASE("covariance and concentration projections of the four-node example") {
    MixedGraph g = graph_of("A--B, A--C, B<->D, C<->D");
    MixedGraph h = covariance_projection(g);
    MixedGraph f = concentration_projection(g);

    CHECK(h.edge_list() == std::vector<Edge>{bid("A", "B"), bid("A", "C"), bid("B", "C"),
                                             bid("B", "D"), bid("C", "D")});
    CHECK(f.edge_list() == std::vector<Edge>{und("A", "B"), und("A", "C"), und("A", "D"),
                                             und("B", "C"), und("B", "D"), und("C", "D")});

    // the mccg separates B and C given A; neither projection does
    NodeSet b = bit(1), c = bit(2), a = bit(0);
    CHECK(mccg_separated(g, b, c, a));
    CHECK(!mccg_separated(h, b, c, a));
    CHECK(!mccg_separated(f, b, c, a));
}

TEST_CASE("kind dispatch") {
    MixedGraph cg = graph_of("A->B");
    MixedGraph mccg = graph_of("A<->B");
    CHECK(auto_sep_kind(cg) == SepKind::Amp);
    CHECK(auto_sep_kind(mccg) == SepKind::Mccg);
    CHECK(separated(cg, SepKind::Amp, bit(0), bit(1), 0) == false);
    CHECK_THROWS_AS(separated(cg, SepKind::Mccg, bit(0), bit(1), 0), input_error);
    CHECK_THROWS_AS(separated(mccg, SepKind::Amp, bit(0), bit(1), 0), input_error);
    CHECK(separated_unchecked(cg, SepKind::Amp, bit(0), bit(1), 0) == false);
}
