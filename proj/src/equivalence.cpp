#include "cgkit/equivalence.hpp"

#include <algorithm>
#include <tuple>

#include "cgkit/errors.hpp"
#include "cgkit/nodeset.hpp"

namespace cgkit {

namespace {

std::vector<Triplex> sorted_triplexes(const MixedGraph& g, TriplexKind kind) {
    std::vector<Triplex> ts = triplexes(g, kind);
    std::sort(ts.begin(), ts.end(), [](const Triplex& l, const Triplex& r) {
        return std::tie(l.a, l.b, l.mid) < std::tie(r.a, r.b, r.mid);
    });
    return ts;
}

// callers have already checked that the name lists agree, so indices align
bool same_skeleton(const MixedGraph& a, const MixedGraph& b) {
    const int n = a.node_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.adjacent(i, j) != b.adjacent(i, j)) return false;
    return true;
}

bool same_triplexes(const MixedGraph& a, const MixedGraph& b, TriplexKind kind) {
    std::vector<Triplex> ta = sorted_triplexes(a, kind);
    std::vector<Triplex> tb = sorted_triplexes(b, kind);
    if (ta.size() != tb.size()) return false;
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (ta[i].a != tb[i].a || ta[i].b != tb[i].b || ta[i].mid != tb[i].mid) return false;
    }
    return true;
}

void require_family(const MixedGraph& g, GraphFamily family, const char* who) {
    if (family == GraphFamily::ChainGraph) {
        if (!is_chain_graph(g)) throw input_error(std::string(who) + ": graph is not a chain graph");
    } else {
        if (!is_mccg(g)) throw input_error(std::string(who) + ": graph is not an MCCG");
    }
}

TriplexKind kind_of(GraphFamily family) {
    return family == GraphFamily::ChainGraph ? TriplexKind::ChainGraph : TriplexKind::Ccg;
}

bool component_complete(const MixedGraph& g, NodeSet comp) {
    for (int a : set_nodes(comp)) {
        for (int b : set_nodes(comp)) {
            if (a >= b) continue;
            if (g.edge_type(a, b) != EdgeType::Undirected) return false;
        }
    }
    return true;
}

}  // namespace

GraphFamily auto_family(const MixedGraph& g) {
    for (const Edge& e : g.edge_list()) {
        if (e.type == EdgeType::Bidirected) return GraphFamily::Mccg;
    }
    return GraphFamily::ChainGraph;
}

bool triplex_equivalent(const MixedGraph& a, const MixedGraph& b, GraphFamily family) {
    require_family(a, family, "triplex_equivalent");
    require_family(b, family, "triplex_equivalent");
    if (a.names() != b.names()) throw input_error("triplex_equivalent: node sets differ");
    if (!same_skeleton(a, b)) return false;
    return same_triplexes(a, b, kind_of(family));
}

bool triplex_equivalent(const MixedGraph& a, const MixedGraph& b) {
    GraphFamily fa = auto_family(a);
    GraphFamily fb = auto_family(b);
    // a pure undirected graph sits in both families, so let the other side decide
    GraphFamily family = fa == GraphFamily::Mccg || fb == GraphFamily::Mccg
                             ? GraphFamily::Mccg
                             : GraphFamily::ChainGraph;
    return triplex_equivalent(a, b, family);
}

bool markov_equivalent_mccg(const MixedGraph& a, const MixedGraph& b) {
    return triplex_equivalent(a, b, GraphFamily::Mccg);
}

MixedGraph feasible_bidirect(const MixedGraph& g, NodeSet component) {
    if (!is_mccg(g)) throw input_error("feasible_bidirect: graph is not an MCCG");
    std::vector<NodeSet> comps = g.undirected_components();
    if (std::find(comps.begin(), comps.end(), component) == comps.end())
        throw input_error("feasible_bidirect: not an undirected connectivity component");
    if (set_size(component) < 2)
        throw input_error("feasible_bidirect: component has fewer than two nodes");
    if (!component_complete(g, component))
        throw input_error("feasible_bidirect: component is not complete");

    std::vector<Edge> edges;
    for (const Edge& e : g.edge_list()) {
        bool inside = contains(component, g.index_of(e.a)) && contains(component, g.index_of(e.b));
        if (e.type == EdgeType::Undirected && inside) {
            edges.push_back(bid(e.a, e.b));
        } else {
            edges.push_back(e);
        }
    }
    MixedGraph out(g.names(), edges);
    if (!is_mccg(out)) throw algorithm_error("feasible_bidirect: result is not an MCCG");
    return out;
}

MixedGraph blargest(const MixedGraph& g) {
    if (!is_mccg(g)) throw input_error("blargest: graph is not an MCCG");
    MixedGraph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeSet comp : cur.undirected_components()) {
            if (set_size(comp) < 2) continue;
            if (!component_complete(cur, comp)) continue;
            cur = feasible_bidirect(cur, comp);
            changed = true;
            break;
        }
    }
    return cur;
}

std::vector<MixedGraph> enumerate_triplex_class(const MixedGraph& g, GraphFamily family) {
    require_family(g, family, "enumerate_triplex_class");
    std::vector<Triplex> target = sorted_triplexes(g, kind_of(family));

    std::vector<Edge> skeleton = g.edge_list();
    const int m = static_cast<int>(skeleton.size());
    const int radix = family == GraphFamily::ChainGraph ? 3 : 2;

    std::vector<MixedGraph> out;
    std::vector<int> digits(m, 0);
    while (true) {
        std::vector<Edge> edges;
        edges.reserve(m);
        for (int i = 0; i < m; ++i) {
            const Edge& e = skeleton[i];
            switch (digits[i]) {
                case 0: edges.push_back({e.a, e.b, EdgeType::Undirected}); break;
                case 1:
                    edges.push_back(family == GraphFamily::ChainGraph
                                        ? Edge{e.a, e.b, EdgeType::Directed}
                                        : Edge{e.a, e.b, EdgeType::Bidirected});
                    break;
                default: edges.push_back({e.b, e.a, EdgeType::Directed}); break;
            }
        }
        MixedGraph cand(g.names(), edges);
        bool valid = family == GraphFamily::ChainGraph ? is_chain_graph(cand) : is_mccg(cand);
        if (valid) {
            std::vector<Triplex> ts = sorted_triplexes(cand, kind_of(family));
            bool match = ts.size() == target.size();
            for (std::size_t i = 0; match && i < ts.size(); ++i) {
                match = ts[i].a == target[i].a && ts[i].b == target[i].b && ts[i].mid == target[i].mid;
            }
            if (match) out.push_back(cand);
        }
        int pos = 0;
        while (pos < m && digits[pos] == radix - 1) digits[pos++] = 0;
        if (pos == m) break;
        ++digits[pos];
    }
    return out;
}

std::vector<MixedGraph> enumerate_triplex_class(const MixedGraph& g) {
    return enumerate_triplex_class(g, auto_family(g));
}

bool is_deflagged(const MixedGraph& g) {
    if (!is_chain_graph(g)) throw input_error("is_deflagged: graph is not a chain graph");
    std::vector<Flag> own = flags(g);
    if (own.empty()) return true;
    for (const MixedGraph& member : enumerate_triplex_class(g, GraphFamily::ChainGraph)) {
        std::vector<Flag> fl = flags(member);
        for (const Flag& f : own) {
            bool found = false;
            for (const Flag& h : fl) {
                if (f.a == h.a && f.b == h.b && f.c == h.c) { found = true; break; }
            }
            if (!found) return false;
        }
    }
    return true;
}

}  // namespace cgkit
