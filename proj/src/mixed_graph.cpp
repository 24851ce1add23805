#include "cgkit/mixed_graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "cgkit/errors.hpp"

namespace cgkit {

namespace {

void check_name(const std::string& s) {
    if (s.empty()) throw input_error("empty node name");
    for (char c : s)
        if (c == '|' || c == ',' || std::isspace(static_cast<unsigned char>(c)))
            throw input_error("node name '" + s + "' contains a reserved character");
}

}  // namespace

MixedGraph::MixedGraph(std::vector<std::string> nodes, const std::vector<Edge>& edges) {
    std::sort(nodes.begin(), nodes.end());
    for (size_t i = 0; i + 1 < nodes.size(); ++i)
        if (nodes[i] == nodes[i + 1]) throw input_error("duplicate node '" + nodes[i] + "'");
    if (nodes.size() > 64) throw input_error("at most 64 nodes supported");
    names_ = std::move(nodes);
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        check_name(names_[i]);
        index_[names_[i]] = i;
    }
    incident_.resize(names_.size());
    for (const Edge& e : edges) {
        int a = index_of(e.a), b = index_of(e.b);
        if (a == b) throw input_error("self loop at '" + e.a + "'");
        auto key = std::minmax(a, b);
        if (edges_.count({key.first, key.second}))
            throw input_error("more than one edge between '" + e.a + "' and '" + e.b + "'");
        EdgeRec rec{e.type, e.type == EdgeType::Directed && b > a};
        edges_[{key.first, key.second}] = rec;
        switch (e.type) {
            case EdgeType::Undirected:
                incident_[a].push_back({b, End::Line, End::Line});
                incident_[b].push_back({a, End::Line, End::Line});
                ++undirected_count_;
                break;
            case EdgeType::Bidirected:
                incident_[a].push_back({b, End::Head, End::Head});
                incident_[b].push_back({a, End::Head, End::Head});
                ++bidirected_count_;
                break;
            case EdgeType::Directed:
                incident_[a].push_back({b, End::Tail, End::Head});
                incident_[b].push_back({a, End::Head, End::Tail});
                ++directed_count_;
                break;
        }
    }
    for (auto& v : incident_)
        std::sort(v.begin(), v.end(), [](const HalfEdge& x, const HalfEdge& y) { return x.to < y.to; });
}

int MixedGraph::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw input_error("unknown node '" + name + "'");
    return it->second;
}

std::optional<int> MixedGraph::find_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool MixedGraph::adjacent(int a, int b) const {
    if (a == b) return false;
    auto key = std::minmax(a, b);
    return edges_.count({key.first, key.second}) > 0;
}

std::optional<EdgeType> MixedGraph::edge_type(int a, int b) const {
    auto key = std::minmax(a, b);
    auto it = edges_.find({key.first, key.second});
    if (it == edges_.end()) return std::nullopt;
    return it->second.type;
}

bool MixedGraph::has_edge(int a, int b, EdgeType t) const {
    auto key = std::minmax(a, b);
    auto it = edges_.find({key.first, key.second});
    if (it == edges_.end() || it->second.type != t) return false;
    if (t != EdgeType::Directed) return true;
    int head = it->second.head_is_hi ? key.second : key.first;
    return head == b;
}

End MixedGraph::end_at(int node, int other) const {
    for (const HalfEdge& h : incident_[node])
        if (h.to == other) return h.at_self;
    throw input_error("no edge between requested nodes");
}

std::vector<Edge> MixedGraph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& [key, rec] : edges_) {
        const std::string& lo = names_[key.first];
        const std::string& hi = names_[key.second];
        if (rec.type == EdgeType::Directed && !rec.head_is_hi)
            out.push_back({hi, lo, rec.type});
        else
            out.push_back({lo, hi, rec.type});
    }
    return out;
}

NodeSet MixedGraph::parents(NodeSet x) const {
    NodeSet out = 0;
    for (const auto& [key, rec] : edges_) {
        if (rec.type != EdgeType::Directed) continue;
        int head = rec.head_is_hi ? key.second : key.first;
        int tail = rec.head_is_hi ? key.first : key.second;
        if (contains(x, head)) out |= bit(tail);
    }
    return out;
}

NodeSet MixedGraph::neighbors(NodeSet x) const {
    NodeSet out = 0;
    for (const auto& [key, rec] : edges_)
        if (rec.type == EdgeType::Undirected) {
            if (contains(x, key.first)) out |= bit(key.second);
            if (contains(x, key.second)) out |= bit(key.first);
        }
    return out;
}

NodeSet MixedGraph::spouses(NodeSet x) const {
    NodeSet out = 0;
    for (const auto& [key, rec] : edges_)
        if (rec.type == EdgeType::Bidirected) {
            if (contains(x, key.first)) out |= bit(key.second);
            if (contains(x, key.second)) out |= bit(key.first);
        }
    return out;
}

NodeSet MixedGraph::adjacents(NodeSet x) const {
    NodeSet out = 0;
    for (const auto& [key, rec] : edges_) {
        if (contains(x, key.first)) out |= bit(key.second);
        if (contains(x, key.second)) out |= bit(key.first);
    }
    return out & ~x;
}

NodeSet MixedGraph::descendants(NodeSet x) const {
    NodeSet reached = x;
    std::vector<int> stack = set_nodes(x);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const HalfEdge& h : incident_[u]) {
            bool descending = (h.at_self == End::Line && h.at_other == End::Line) ||
                              (h.at_self == End::Tail && h.at_other == End::Head);
            if (descending && !contains(reached, h.to)) {
                reached |= bit(h.to);
                stack.push_back(h.to);
            }
        }
    }
    return reached & ~x;
}

namespace {

std::vector<NodeSet> components_by(const MixedGraph& g, EdgeType t) {
    int n = g.node_count();
    std::vector<int> root(n);
    for (int i = 0; i < n; ++i) root[i] = i;
    std::function<int(int)> find = [&](int i) { return root[i] == i ? i : root[i] = find(root[i]); };
    for (const Edge& e : g.edge_list())
        if (e.type == t) {
            int a = find(g.index_of(e.a)), b = find(g.index_of(e.b));
            if (a != b) root[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, NodeSet> comps;
    for (int i = 0; i < n; ++i) comps[find(i)] |= bit(i);
    std::vector<NodeSet> out;
    for (const auto& [r, s] : comps) out.push_back(s);
    return out;
}

}  // namespace

std::vector<NodeSet> MixedGraph::undirected_components() const {
    return components_by(*this, EdgeType::Undirected);
}

std::vector<NodeSet> MixedGraph::bidirected_components() const {
    return components_by(*this, EdgeType::Bidirected);
}

NodeSet MixedGraph::component_of(NodeSet x) const {
    NodeSet out = 0;
    for (NodeSet c : undirected_components())
        if (c & x) out |= c;
    return out;
}

MixedGraph MixedGraph::induced_subgraph(NodeSet keep) const {
    std::vector<std::string> nodes;
    for (int i : set_nodes(keep)) nodes.push_back(names_[i]);
    std::vector<Edge> edges;
    for (const Edge& e : edge_list())
        if (contains(keep, index_of(e.a)) && contains(keep, index_of(e.b))) edges.push_back(e);
    return MixedGraph(nodes, edges);
}

bool MixedGraph::same_skeleton(const MixedGraph& o) const {
    if (names_ != o.names_) return false;
    if (edges_.size() != o.edges_.size()) return false;
    for (const auto& [key, rec] : edges_)
        if (!o.edges_.count(key)) return false;
    return true;
}

bool is_chain_graph(const MixedGraph& g) {
    if (g.has_bidirected()) return false;
    // Tarjan SCCs of the descending relation; a semidirected cycle exists iff
    // some directed edge has both endpoints in one SCC
    int n = g.node_count();
    std::vector<int> idx(n, -1), low(n, 0), comp(n, -1), stk;
    std::vector<bool> on(n, false);
    int counter = 0, ncomp = 0;
    std::function<void(int)> dfs = [&](int u) {
        idx[u] = low[u] = counter++;
        stk.push_back(u);
        on[u] = true;
        for (const HalfEdge& h : g.incident(u)) {
            bool descending = (h.at_self == End::Line && h.at_other == End::Line) ||
                              (h.at_self == End::Tail && h.at_other == End::Head);
            if (!descending) continue;
            if (idx[h.to] < 0) {
                dfs(h.to);
                low[u] = std::min(low[u], low[h.to]);
            } else if (on[h.to]) {
                low[u] = std::min(low[u], idx[h.to]);
            }
        }
        if (low[u] == idx[u]) {
            while (true) {
                int v = stk.back();
                stk.pop_back();
                on[v] = false;
                comp[v] = ncomp;
                if (v == u) break;
            }
            ++ncomp;
        }
    };
    for (int i = 0; i < n; ++i)
        if (idx[i] < 0) dfs(i);
    for (const Edge& e : g.edge_list())
        if (e.type == EdgeType::Directed && comp[g.index_of(e.a)] == comp[g.index_of(e.b)]) return false;
    return true;
}

std::vector<std::string> diagnose_mccg(const MixedGraph& g) {
    std::vector<std::string> out;
    if (g.has_directed()) out.push_back("directed edge present");
    int n = g.node_count();
    for (int c = 0; c < n; ++c) {
        if (!g.spouses(bit(c))) continue;
        auto ne = set_nodes(g.neighbors(bit(c)));
        for (size_t i = 0; i < ne.size(); ++i)
            for (size_t j = i + 1; j < ne.size(); ++j)
                if (!g.adjacent(ne[i], ne[j]))
                    out.push_back("induced " + g.name_of(ne[i]) + " -- " + g.name_of(c) + " -- " +
                                  g.name_of(ne[j]) + " but " + g.name_of(c) + " has a spouse");
    }
    auto comps = g.undirected_components();
    for (const Edge& e : g.edge_list())
        if (e.type == EdgeType::Bidirected) {
            NodeSet a = bit(g.index_of(e.a)), b = bit(g.index_of(e.b));
            for (NodeSet c : comps)
                if ((c & a) && (c & b))
                    out.push_back("cycle through " + e.a + " <-> " + e.b +
                                  " and an undirected path between them");
        }
    return out;
}

bool is_mccg(const MixedGraph& g) { return diagnose_mccg(g).empty(); }

std::vector<Triplex> triplexes(const MixedGraph& g, TriplexKind) {
    // same end-mark test for both kinds: arrowheads come from directed edges in a
    // chain graph and from bidirected edges in a CCG
    std::vector<Triplex> out;
    int n = g.node_count();
    for (int b = 0; b < n; ++b) {
        auto ad = set_nodes(g.adjacents(bit(b)));
        for (size_t i = 0; i < ad.size(); ++i)
            for (size_t j = i + 1; j < ad.size(); ++j) {
                int a = ad[i], c = ad[j];
                if (g.adjacent(a, c)) continue;
                End ea = g.end_at(b, a), ec = g.end_at(b, c);
                if (ea == End::Tail || ec == End::Tail) continue;
                if (ea == End::Head || ec == End::Head) out.push_back({a, c, b});
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Triplex> triplexes(const MixedGraph& g) {
    return triplexes(g, g.has_bidirected() ? TriplexKind::Ccg : TriplexKind::ChainGraph);
}

std::vector<Flag> flags(const MixedGraph& g) {
    std::vector<Flag> out;
    int n = g.node_count();
    for (int b = 0; b < n; ++b)
        for (const HalfEdge& h1 : g.incident(b))
            for (const HalfEdge& h2 : g.incident(b)) {
                int a = h1.to, c = h2.to;
                if (a == c || g.adjacent(a, c)) continue;
                if (g.has_edge(a, b, EdgeType::Directed) && g.edge_type(b, c) == EdgeType::Undirected)
                    out.push_back({a, b, c});
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Triplex> immoralities(const MixedGraph& g) {
    std::vector<Triplex> out;
    for (const Triplex& t : triplexes(g, TriplexKind::ChainGraph))
        if (g.has_edge(t.a, t.mid, EdgeType::Directed) && g.has_edge(t.b, t.mid, EdgeType::Directed))
            out.push_back(t);
    return out;
}

MixedGraph marginalize_mccg(const MixedGraph& g, NodeSet keep) {
    if (!is_mccg(g)) throw input_error("marginalize_mccg requires an MCCG");
    std::vector<Edge> edges;
    for (const Edge& e : g.edge_list())
        if (contains(keep, g.index_of(e.a)) && contains(keep, g.index_of(e.b))) edges.push_back(e);
    auto kept = set_nodes(keep);
    for (size_t i = 0; i < kept.size(); ++i)
        for (size_t j = i + 1; j < kept.size(); ++j) {
            int a = kept[i], b = kept[j];
            if (g.adjacent(a, b)) continue;
            // undirected path from a to b with every interior node outside keep
            std::vector<int> stack{a};
            NodeSet seen = bit(a);
            bool found = false;
            while (!stack.empty() && !found) {
                int u = stack.back();
                stack.pop_back();
                for (const HalfEdge& h : g.incident(u)) {
                    if (h.at_self != End::Line) continue;
                    if (h.to == b) {
                        found = true;
                        break;
                    }
                    if (!contains(keep, h.to) && !contains(seen, h.to)) {
                        seen |= bit(h.to);
                        stack.push_back(h.to);
                    }
                }
            }
            if (found) edges.push_back(und(g.name_of(a), g.name_of(b)));
        }
    std::vector<std::string> nodes;
    for (int i : kept) nodes.push_back(g.name_of(i));
    MixedGraph out(nodes, edges);
    if (!is_mccg(out)) throw algorithm_error("marginal graph is not an MCCG");
    return out;
}

NodeSet mask_of(const MixedGraph& g, const std::vector<std::string>& names) {
    NodeSet s = 0;
    for (const auto& n : names) s |= bit(g.index_of(n));
    return s;
}

std::vector<std::string> names_of(const MixedGraph& g, NodeSet s) {
    std::vector<std::string> out;
    for (int i : set_nodes(s)) out.push_back(g.name_of(i));
    return out;
}

MixedGraph graph_of(const std::string& edge_spec, const std::vector<std::string>& extra) {
    std::vector<Edge> edges;
    std::set<std::string> nodes(extra.begin(), extra.end());
    std::string token;
    std::istringstream in(edge_spec);
    std::string cleaned = edge_spec;
    for (char& c : cleaned)
        if (c == ',' || c == ';') c = ' ';
    std::istringstream stream(cleaned);
    while (stream >> token) {
        size_t p;
        Edge e;
        if ((p = token.find("<->")) != std::string::npos)
            e = bid(token.substr(0, p), token.substr(p + 3));
        else if ((p = token.find("->")) != std::string::npos)
            e = dir(token.substr(0, p), token.substr(p + 2));
        else if ((p = token.find("<-")) != std::string::npos)
            e = dir(token.substr(p + 2), token.substr(0, p));
        else if ((p = token.find("--")) != std::string::npos)
            e = und(token.substr(0, p), token.substr(p + 2));
        else
            throw input_error("cannot parse edge token '" + token + "'");
        nodes.insert(e.a);
        nodes.insert(e.b);
        edges.push_back(e);
    }
    return MixedGraph(std::vector<std::string>(nodes.begin(), nodes.end()), edges);
}

}  // namespace cgkit
