#include "cgkit/independence.hpp"

#include <algorithm>
#include <cassert>

#include "cgkit/errors.hpp"

namespace cgkit {

namespace {

constexpr int kMaxUniverse = 10;

enum Role : std::uint32_t { kOut = 0, kX = 1, kY = 2, kZ = 3 };

}  // namespace

TripleSet::TripleSet(int n) : n_(n) {
    if (n < 1 || n > kMaxUniverse) throw input_error("triple set universe must have 1..10 nodes");
    member_.assign(std::size_t{1} << (2 * n), 0);
}

std::uint32_t TripleSet::code(NodeSet x, NodeSet y, NodeSet z) const {
    std::uint32_t c = 0;
    for (int i : set_nodes(x)) c |= kX << (2 * i);
    for (int i : set_nodes(y)) c |= kY << (2 * i);
    for (int i : set_nodes(z)) c |= kZ << (2 * i);
    return c;
}

CiTriple TripleSet::decode(std::uint32_t c) const {
    CiTriple t{0, 0, 0};
    for (int i = 0; i < n_; ++i) {
        switch ((c >> (2 * i)) & 3u) {
            case kX: t.x |= bit(i); break;
            case kY: t.y |= bit(i); break;
            case kZ: t.z |= bit(i); break;
            default: break;
        }
    }
    return t;
}

bool TripleSet::insert(NodeSet x, NodeSet y, NodeSet z) {
    assert(x && y && !(x & y) && !(x & z) && !(y & z));
    std::uint32_t c = code(x, y, z);
    if (member_[c]) return false;
    member_[c] = 1;
    member_[code(y, x, z)] = 1;
    ++count_;
    return true;
}

std::vector<CiTriple> TripleSet::triples() const {
    std::vector<CiTriple> out;
    for (std::uint32_t c = 0; c < member_.size(); ++c) {
        if (!member_[c]) continue;
        CiTriple t = decode(c);
        if (t.x && t.y && lowest_node(t.x) < lowest_node(t.y)) out.push_back(t);
    }
    return out;
}

std::vector<CiTriple> TripleSet::difference(const TripleSet& o) const {
    std::vector<CiTriple> out;
    for (std::uint32_t c = 0; c < member_.size(); ++c) {
        if (!member_[c] || o.member_[c]) continue;
        CiTriple t = decode(c);
        if (t.x && t.y && lowest_node(t.x) < lowest_node(t.y)) out.push_back(t);
    }
    return out;
}

IndependenceModel full_model(const MixedGraph& g, SepKind kind) {
    int n = g.node_count();
    if (n > 8) throw input_error("full_model supports at most 8 nodes");
    if (kind == SepKind::Amp ? !is_chain_graph(g) : !is_mccg(g))
        throw input_error("full_model: graph does not match the separation kind");
    TripleSet m(n);
    std::uint32_t limit = std::uint32_t{1} << (2 * n);
    for (std::uint32_t c = 0; c < limit; ++c) {
        CiTriple t = m.decode(c);
        if (!t.x || !t.y || lowest_node(t.x) >= lowest_node(t.y)) continue;
        if (separated_unchecked(g, kind, t.x, t.y, t.z)) m.insert(t.x, t.y, t.z);
    }
    return m;
}

IndependenceModel full_model(const MixedGraph& g) { return full_model(g, auto_sep_kind(g)); }

IndependenceModel local_base(const MixedGraph& g) {
    if (!is_mccg(g)) throw input_error("local_base requires an MCCG");
    int n = g.node_count();
    TripleSet base(n);
    for (int a = 0; a < n; ++a) {
        NodeSet comp = g.component_of(bit(a));
        for (int b = 0; b < n; ++b) {
            if (a == b || g.adjacent(a, b)) continue;
            if (contains(comp, b))
                base.insert(bit(a), bit(b), g.neighbors(bit(a)));
            else
                base.insert(bit(a), bit(b), 0);
        }
    }
    return base;
}

std::vector<NodeSet> default_partition(const MixedGraph& g) { return g.undirected_components(); }

void check_consistent_partition(const MixedGraph& g, const std::vector<NodeSet>& q) {
    NodeSet all = 0;
    for (NodeSet e : q) {
        if (!e) throw input_error("partition elements must be nonempty");
        if (all & e) throw input_error("partition elements overlap");
        all |= e;
    }
    if (all != g.all_nodes()) throw input_error("partition does not cover the node set");
    for (const Edge& e : g.edge_list()) {
        int a = g.index_of(e.a), b = g.index_of(e.b);
        bool together = false;
        for (NodeSet el : q)
            if (contains(el, a) && contains(el, b)) together = true;
        if (e.type == EdgeType::Undirected && !together)
            throw input_error("undirected edge " + e.a + " -- " + e.b + " crosses partition elements");
        if (e.type == EdgeType::Bidirected && together)
            throw input_error("bidirected edge " + e.a + " <-> " + e.b + " inside a partition element");
    }
}

IndependenceModel pairwise_base(const MixedGraph& g, const std::vector<NodeSet>& q) {
    if (!is_mccg(g)) throw input_error("pairwise_base requires an MCCG");
    check_consistent_partition(g, q);
    int n = g.node_count();
    TripleSet base(n);
    for (int a = 0; a < n; ++a) {
        NodeSet elem = 0;
        for (NodeSet el : q)
            if (contains(el, a)) elem = el;
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            if (contains(elem, b))
                base.insert(bit(a), bit(b), elem & ~bit(a) & ~bit(b));
            else
                base.insert(bit(a), bit(b), 0);
        }
    }
    return base;
}

namespace {

// worklist fixpoint shared by both closures. Every inserted statement is
// processed once in both orientations; pair rules find the partner premise in
// the current set, so an instance fires when its later premise is processed.
template <typename Apply>
TripleSet close_over(const TripleSet& base, Apply&& apply) {
    TripleSet out = base;
    std::vector<CiTriple> work;
    for (const CiTriple& t : out.triples()) {
        work.push_back(t);
        work.push_back({t.y, t.x, t.z});
    }
    auto add = [&](NodeSet x, NodeSet y, NodeSet z) {
        if (out.insert(x, y, z)) {
            work.push_back({x, y, z});
            work.push_back({y, x, z});
        }
    };
    while (!work.empty()) {
        CiTriple t = work.back();
        work.pop_back();
        apply(out, t, add);
    }
    return out;
}

}  // namespace

IndependenceModel wtc_closure(const IndependenceModel& base) {
    int n = base.universe_size();
    NodeSet all = (NodeSet{1} << n) - 1;
    return close_over(base, [all](const TripleSet& cur, CiTriple t, auto&& add) {
        NodeSet rest = all & ~t.x & ~t.y & ~t.z;
        // decomposition and weak union: split y into y' + w
        for_each_subset(t.y, [&](NodeSet yp) {
            if (!yp || yp == t.y) return;
            add(t.x, yp, t.z);
            add(t.x, yp, t.z | (t.y & ~yp));
        });
        // contraction, premise x _|_ y | z0 u w with partner x _|_ w | z0
        for_each_subset(t.z, [&](NodeSet w) {
            if (!w) return;
            NodeSet z0 = t.z & ~w;
            if (cur.contains(t.x, w, z0)) add(t.x, t.y | w, z0);
            // intersection, partner x _|_ w | z0 u y
            if (cur.contains(t.x, w, z0 | t.y)) add(t.x, t.y | w, z0);
        });
        // contraction, premise x _|_ w | z with partner x _|_ y' | z u w
        for_each_subset(rest, [&](NodeSet yp) {
            if (!yp) return;
            if (cur.contains(t.x, yp, t.z | t.y)) add(t.x, yp | t.y, t.z);
            // composition
            if (cur.contains(t.x, yp, t.z)) add(t.x, t.y | yp, t.z);
        });
    });
}

TripleSet wtc_dependence_closure(const TripleSet& base, const IndependenceModel& sep_model) {
    int n = base.universe_size();
    if (sep_model.universe_size() != n) throw input_error("universe mismatch in dependence closure");
    NodeSet all = (NodeSet{1} << n) - 1;
    const TripleSet& sep = sep_model;
    return close_over(base, [all, &sep](const TripleSet& cur, CiTriple t, auto&& add) {
        NodeSet rest = all & ~t.x & ~t.y & ~t.z;
        // contrapositive decomposition: grow the dependent side
        for_each_subset(rest, [&](NodeSet w) {
            if (w) add(t.x, t.y | w, t.z);
        });
        // contrapositive weak union: move part of z over
        for_each_subset(t.z, [&](NodeSet w) {
            if (w) add(t.x, t.y | w, t.z & ~w);
        });
        // split y into yp + w for the two contractions, intersection, composition
        for_each_subset(t.y, [&](NodeSet yp) {
            if (!yp || yp == t.y) return;
            NodeSet w = t.y & ~yp;
            if (sep.contains(t.x, yp, t.z | w)) {
                add(t.x, w, t.z);            // contraction
                add(t.x, w, t.z | yp);       // intersection
            }
            if (sep.contains(t.x, w, t.z)) add(t.x, yp, t.z | w);  // contraction
            if (sep.contains(t.x, yp, t.z)) add(t.x, w, t.z);      // composition
        });
        // weak transitivity with t = x not_|_ k | z, k a single node
        if (set_size(t.y) == 1) {
            NodeSet k = t.y;
            for_each_subset(rest, [&](NodeSet yy) {
                if (!yy || !cur.contains(k, yy, t.z)) return;
                if (sep.contains(t.x, yy, t.z)) add(t.x, yy, t.z | k);
                if (sep.contains(t.x, yy, t.z | k)) add(t.x, yy, t.z);
            });
        }
    });
}

TripleSet dependence_base(const MixedGraph& g, bool neighbour_form) {
    if (!is_mccg(g)) throw input_error("dependence_base requires an MCCG");
    TripleSet base(g.node_count());
    for (const Edge& e : g.edge_list()) {
        int a = g.index_of(e.a), b = g.index_of(e.b);
        if (e.type == EdgeType::Bidirected) {
            base.insert(bit(a), bit(b), 0);
        } else {
            if (neighbour_form) {
                base.insert(bit(a), bit(b), g.neighbors(bit(a)) & ~bit(b));
                base.insert(bit(b), bit(a), g.neighbors(bit(b)) & ~bit(a));
            } else {
                NodeSet k = g.component_of(bit(a));
                base.insert(bit(a), bit(b), k & ~bit(a) & ~bit(b));
            }
        }
    }
    return base;
}

MarkovCheck check_markov_c1c2(const MixedGraph& g, const IndependenceOracle& oracle) {
    if (!is_chain_graph(g)) throw input_error("check_markov_c1c2 requires a chain graph");
    if (oracle.variable_names() != g.names())
        throw input_error("oracle variables do not match the graph nodes");
    MarkovCheck out;
    NodeSet all = g.all_nodes();
    for (int a = 0; a < g.node_count(); ++a) {
        NodeSet A = bit(a);
        NodeSet ne = g.neighbors(A);
        NodeSet other1 = g.component_of(A) & ~A & ~ne;
        NodeSet cond1 = g.parents(A | ne) | ne;
        if (other1 && !oracle.independent_sets(A, other1, cond1)) {
            out.ok = false;
            out.failures.push_back("C1 fails at " + g.name_of(a));
        }
        NodeSet pa = g.parents(A);
        NodeSet other2 = all & ~A & ~g.descendants(A) & ~pa;
        if (other2 && !oracle.independent_sets(A, other2, pa)) {
            out.ok = false;
            out.failures.push_back("C2 fails at " + g.name_of(a));
        }
    }
    return out;
}

std::string triple_to_string(const MixedGraph& g, const CiTriple& t) {
    auto join = [&](NodeSet s) {
        std::string out;
        for (int i : set_nodes(s)) {
            if (!out.empty()) out += ",";
            out += g.name_of(i);
        }
        return out;
    };
    return join(t.x) + "|" + join(t.y) + "|" + join(t.z);
}

}  // namespace cgkit
