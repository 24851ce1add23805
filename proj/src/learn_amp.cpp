#include "cgkit/learn_amp.hpp"

#include <algorithm>
#include <numeric>

#include "cgkit/errors.hpp"

namespace cgkit {

namespace {

// visit all size-l subsets of pool in lexicographic order; stop early when f
// returns true
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

NodeSet required_separator(const SeparatorTable& seps, int a, int b) {
    std::optional<NodeSet> s = seps.find(a, b);
    if (!s) throw algorithm_error("orientation rules: missing separator for a non-adjacent pair");
    return *s;
}

bool rule1(MarkedGraph& m, const SeparatorTable& seps) {
    bool changed = false;
    const int n = m.node_count();
    for (int b = 0; b < n; ++b) {
        for (int a : set_nodes(m.neighbors(b))) {
            for (int c : set_nodes(m.neighbors(b))) {
                if (c == a || m.adjacent(a, c)) continue;
                if (contains(required_separator(seps, a, c), b)) continue;
                changed |= m.set_block(a, b);
                changed |= m.set_block(c, b);
            }
        }
    }
    return changed;
}

bool rule2(MarkedGraph& m, const SeparatorTable& seps) {
    bool changed = false;
    const int n = m.node_count();
    for (int b = 0; b < n; ++b) {
        for (int a : set_nodes(m.neighbors(b))) {
            if (m.mark(a, b) != EndMark::Block) continue;
            for (int c : set_nodes(m.neighbors(b))) {
                if (c == a || m.adjacent(a, c)) continue;
                if (!contains(required_separator(seps, a, c), b)) continue;
                changed |= m.set_block(b, c);
            }
        }
    }
    return changed;
}

// grow chains a -| v1 -| ... -| vk whose edges all carry a block at the end
// nearer a; a chordless cycle closed by an edge back to a blocks its a end
bool rule3_dfs(MarkedGraph& m, std::vector<int>& chain, NodeSet in_chain) {
    bool changed = false;
    const int a = chain.front();
    const int t = chain.back();
    for (int w : set_nodes(m.neighbors(t) & ~in_chain)) {
        if (m.mark(t, w) != EndMark::Block) continue;
        bool chord = false;
        for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
            if (m.adjacent(chain[i], w)) { chord = true; break; }
        }
        if (chord) continue;
        if (m.adjacent(a, w)) {
            changed |= m.set_block(a, w);
            continue;  // extending past w would leave the chord a .. w in the cycle
        }
        chain.push_back(w);
        changed |= rule3_dfs(m, chain, in_chain | bit(w));
        chain.pop_back();
    }
    return changed;
}

bool rule3(MarkedGraph& m) {
    bool changed = false;
    const int n = m.node_count();
    for (int a = 0; a < n; ++a) {
        for (int v : set_nodes(m.neighbors(a))) {
            if (m.mark(a, v) != EndMark::Block) continue;
            std::vector<int> chain = {a, v};
            changed |= rule3_dfs(m, chain, bit(a) | bit(v));
        }
    }
    return changed;
}

bool rule4(MarkedGraph& m, const SeparatorTable& seps) {
    bool changed = false;
    const int n = m.node_count();
    for (int b = 0; b < n; ++b) {
        for (int c : set_nodes(m.neighbors(b))) {
            if (m.mark(c, b) != EndMark::Block) continue;
            for (int d : set_nodes(m.neighbors(b))) {
                if (d <= c || m.mark(d, b) != EndMark::Block) continue;
                if (m.adjacent(c, d)) continue;
                NodeSet s = required_separator(seps, c, d);
                for (int a : set_nodes(m.neighbors(b))) {
                    if (a == c || a == d) continue;
                    if (!m.adjacent(a, c) || !m.adjacent(a, d)) continue;
                    if (!contains(s, a)) continue;
                    changed |= m.set_block(a, b);
                }
            }
        }
    }
    return changed;
}

}  // namespace

SkeletonResult amp_skeleton(const IndependenceOracle& oracle) {
    const std::vector<std::string>& names = oracle.variable_names();
    if (!std::is_sorted(names.begin(), names.end()))
        throw input_error("amp_skeleton: oracle variable names must be sorted");
    const int n = static_cast<int>(names.size());

    std::vector<NodeSet> ad(n);
    const NodeSet all = n == 64 ? ~NodeSet{0} : (NodeSet{1} << n) - 1;
    for (int i = 0; i < n; ++i) ad[i] = all & ~bit(i);

    SeparatorTable seps;
    for (int l = 0; l + 2 <= n; ++l) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (b == a || !contains(ad[a], b)) continue;
                NodeSet reach = ad[a];
                for (int v : set_nodes(ad[a])) reach |= ad[v];
                NodeSet pool = reach & ~bit(a) & ~bit(b);
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

MarkedGraph apply_rules(const MixedGraph& skeleton, const SeparatorTable& seps,
                        RuleSchedule schedule) {
    MarkedGraph m(skeleton);
    bool changed = true;
    while (changed) {
        changed = false;
        if (schedule == RuleSchedule::Standard) {
            changed |= rule1(m, seps);
            changed |= rule2(m, seps);
            changed |= rule3(m);
            changed |= rule4(m, seps);
        } else {
            changed |= rule4(m, seps);
            changed |= rule3(m);
            changed |= rule2(m, seps);
            changed |= rule1(m, seps);
        }
    }
    return m;
}

AmpLearnResult learn_amp(const IndependenceOracle& oracle, RuleSchedule schedule) {
    SkeletonResult skel = amp_skeleton(oracle);
    MarkedGraph marked = apply_rules(skel.graph, skel.seps, schedule);
    MixedGraph graph = marked.finalize();
    bool ok = is_chain_graph(graph);
    std::string diagnostic;
    if (!ok) diagnostic = "finalized graph contains a semidirected cycle";
    return {graph, marked, skel.seps, ok, diagnostic};
}

}  // namespace cgkit
