#include "cgkit/learn_mccg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cgkit/errors.hpp"

namespace cgkit {

namespace {

template <typename F>
bool for_each_combination(const std::vector<int>& pool, int l, F&& f) {
    const int m = static_cast<int>(pool.size());
    if (l > m) return false;
    std::vector<int> idx(l);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        NodeSet s = 0;
        for (int i : idx) s |= bit(pool[i]);
        if (f(s)) return true;
        int i = l - 1;
        while (i >= 0 && idx[i] == m - l + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// the spouse edge of an induced X - M - Y breaks constraint C1
bool violates_c1(const MixedGraph& g, int a, int b) {
    for (int m : {a, b}) {
        std::vector<int> nb = set_nodes(g.neighbors(bit(m)));
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (!g.adjacent(nb[i], nb[j])) return true;
            }
        }
    }
    return false;
}

// a bidirected edge inside one undirected component breaks constraint C2
bool violates_c2(const MixedGraph& g, int a, int b) {
    return (g.component_of(bit(a)) & bit(b)) != 0;
}

}  // namespace

SkeletonResult mccg_skeleton(const IndependenceOracle& oracle) {
    const std::vector<std::string>& names = oracle.variable_names();
    if (!std::is_sorted(names.begin(), names.end()))
        throw input_error("mccg_skeleton: oracle variable names must be sorted");
    const int n = static_cast<int>(names.size());

    std::vector<NodeSet> ad(n);
    const NodeSet all = n == 64 ? ~NodeSet{0} : (NodeSet{1} << n) - 1;
    for (int i = 0; i < n; ++i) ad[i] = all & ~bit(i);

    SeparatorTable seps;
    for (int l = 0; l + 2 <= n; ++l) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (b == a || !contains(ad[a], b)) continue;
                NodeSet pool = ad[a] & ~bit(b);
                for_each_combination(set_nodes(pool), l, [&](NodeSet s) {
                    if (!oracle.independent(a, b, s)) return false;
                    seps.set(a, b, s);
                    ad[a] &= ~bit(b);
                    ad[b] &= ~bit(a);
                    return true;
                });
            }
        }
    }

    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
        for (int b : set_nodes(ad[a])) {
            if (b > a) edges.push_back(und(names[a], names[b]));
        }
    }
    return {MixedGraph(names, edges), seps};
}

MixedGraph orient_mccg(const MixedGraph& skeleton, const SeparatorTable& seps) {
    const int n = skeleton.node_count();

    std::set<std::pair<int, int>> undirect;
    for (int b = 0; b < n; ++b) {
        for (int a : set_nodes(skeleton.adjacents(bit(b)))) {
            for (int c : set_nodes(skeleton.adjacents(bit(b)))) {
                if (c <= a || skeleton.adjacent(a, c)) continue;
                std::optional<NodeSet> s = seps.find(a, c);
                if (!s) throw algorithm_error("orient_mccg: missing separator for a non-adjacent pair");
                if (!contains(*s, b)) continue;
                undirect.insert(std::minmax(a, b));
                undirect.insert(std::minmax(b, c));
            }
        }
    }

    std::vector<Edge> edges = skeleton.edge_list();
    std::vector<std::pair<int, int>> keys;
    keys.reserve(edges.size());
    for (Edge& e : edges) {
        int ia = skeleton.index_of(e.a);
        int ib = skeleton.index_of(e.b);
        std::pair<int, int> key{std::min(ia, ib), std::max(ia, ib)};
        keys.push_back(key);
        e.type = undirect.count(key) ? EdgeType::Undirected : EdgeType::Bidirected;
    }
    MixedGraph h(skeleton.names(), edges);

    // converting one edge at a time keeps the repair order well defined; the
    // loop must end because each step removes a bidirected edge
    while (!is_mccg(h)) {
        int pick = -1;
        for (int pass = 0; pass < 2 && pick < 0; ++pass) {
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (edges[i].type != EdgeType::Bidirected) continue;
                auto [a, b] = keys[i];
                bool bad = pass == 0 ? violates_c1(h, a, b) : violates_c2(h, a, b);
                if (bad) { pick = static_cast<int>(i); break; }
            }
        }
        if (pick < 0)
            throw algorithm_error("orient_mccg: constraint violation with no violating bidirected edge");
        edges[pick].type = EdgeType::Undirected;
        h = MixedGraph(skeleton.names(), edges);
    }
    return h;
}

MccgLearnResult learn_mccg(const IndependenceOracle& oracle) {
    SkeletonResult skel = mccg_skeleton(oracle);
    MixedGraph graph = orient_mccg(skel.graph, skel.seps);
    return {graph, skel.seps, true, ""};
}

}  // namespace cgkit
