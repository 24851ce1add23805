#include "cgkit/separation.hpp"

#include <algorithm>
#include <vector>

#include "cgkit/errors.hpp"

namespace cgkit {

void check_query(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z) {
    NodeSet all = g.all_nodes();
    if (!x || !y) throw input_error("query sets X and Y must be nonempty");
    if ((x | y | z) & ~all) throw input_error("query mentions a node outside the graph");
    if ((x & y) || (x & z) || (y & z)) throw input_error("query sets must be pairwise disjoint");
}

namespace {

// head-no-tail in a chain graph, triplex in a CCG: same test on end marks
inline bool head_no_tail(End a, End d) {
    return (a == End::Head && d == End::Head) || (a == End::Head && d == End::Line) ||
           (a == End::Line && d == End::Head);
}

inline bool transit_allowed(End a, End d, bool in_z) {
    return head_no_tail(a, d) ? in_z : !in_z;
}

int end_index(End e) { return static_cast<int>(e); }

// reachability over (node, arrival end) states; exact because routes may
// repeat nodes, so any open route maps to a state path and back
bool z_open_reachable(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z) {
    int n = g.node_count();
    std::vector<char> seen(static_cast<size_t>(n) * 3, 0);
    std::vector<std::pair<int, End>> stack;
    for (int s : set_nodes(x))
        for (const HalfEdge& h : g.incident(s)) {
            if (contains(y, h.to)) return true;
            int id = h.to * 3 + end_index(h.at_other);
            if (!seen[id]) {
                seen[id] = 1;
                stack.push_back({h.to, h.at_other});
            }
        }
    while (!stack.empty()) {
        auto [u, arr] = stack.back();
        stack.pop_back();
        bool in_z = contains(z, u);
        for (const HalfEdge& h : g.incident(u)) {
            if (!transit_allowed(arr, h.at_self, in_z)) continue;
            if (contains(y, h.to)) return true;
            int id = h.to * 3 + end_index(h.at_other);
            if (!seen[id]) {
                seen[id] = 1;
                stack.push_back({h.to, h.at_other});
            }
        }
    }
    return false;
}

}  // namespace

bool amp_separated(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z) {
    check_query(g, x, y, z);
    if (!is_chain_graph(g)) throw input_error("amp_separated requires a chain graph");
    return !z_open_reachable(g, x, y, z);
}

namespace {

bool route_dfs(const MixedGraph& g, NodeSet y, NodeSet z, int u, End arr, bool at_start, int left) {
    if (left == 0) return false;
    bool in_z = contains(z, u);
    for (const HalfEdge& h : g.incident(u)) {
        if (!at_start && !transit_allowed(arr, h.at_self, in_z)) continue;
        if (contains(y, h.to)) return true;
        if (route_dfs(g, y, z, h.to, h.at_other, false, left - 1)) return true;
    }
    return false;
}

}  // namespace

bool brute_force_amp_separated(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z, int max_len) {
    check_query(g, x, y, z);
    if (!is_chain_graph(g)) throw input_error("brute_force_amp_separated requires a chain graph");
    if (max_len <= 0) max_len = 3 * g.node_count();
    for (int s : set_nodes(x))
        if (route_dfs(g, y, z, s, End::Line, true, max_len)) return false;
    return true;
}

bool mccg_separated(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z) {
    check_query(g, x, y, z);
    if (!is_mccg(g)) throw input_error("mccg_separated requires an MCCG");
    return !z_open_reachable(g, x, y, z);
}

namespace {

bool path_dfs(const MixedGraph& g, NodeSet y, NodeSet z, NodeSet spousy, bool general, int u, End arr,
              bool at_start, NodeSet visited) {
    bool in_z = contains(z, u);
    for (const HalfEdge& h : g.incident(u)) {
        if (contains(visited, h.to)) continue;
        if (!at_start) {
            bool triplex_here = head_no_tail(arr, h.at_self);
            bool open = triplex_here ? in_z : (!in_z || (general && contains(spousy, u)));
            if (!open) continue;
        }
        if (contains(y, h.to)) return true;
        if (path_dfs(g, y, z, spousy, general, h.to, h.at_other, false, visited | bit(h.to))) return true;
    }
    return false;
}

}  // namespace

bool brute_force_ccg_separated(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z, bool general) {
    check_query(g, x, y, z);
    if (g.has_directed()) throw input_error("brute_force_ccg_separated requires a CCG");
    NodeSet spousy = 0;
    for (int i = 0; i < g.node_count(); ++i)
        if (g.spouses(bit(i))) spousy |= bit(i);
    for (int s : set_nodes(x))
        if (path_dfs(g, y, z, spousy, general, s, End::Line, true, bit(s))) return false;
    return true;
}

bool ccg_path_open(const MixedGraph& g, const std::vector<int>& path, NodeSet z, bool general) {
    if (path.size() < 2) throw input_error("ccg_path_open needs a path with at least one edge");
    NodeSet spousy = g.spouses(g.all_nodes());
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        End arr = g.end_at(path[i], path[i - 1]);
        End dep = g.end_at(path[i], path[i + 1]);
        bool in_z = contains(z, path[i]);
        bool open = head_no_tail(arr, dep) ? in_z : (!in_z || (general && contains(spousy, path[i])));
        if (!open) return false;
    }
    return true;
}

MixedGraph latent_expand(const MixedGraph& g) {
    if (!is_mccg(g)) throw input_error("latent_expand requires an MCCG");
    std::vector<std::string> nodes = g.names();
    std::vector<Edge> edges;
    for (const Edge& e : g.edge_list()) {
        if (e.type == EdgeType::Bidirected) {
            std::string lo = std::min(e.a, e.b), hi = std::max(e.a, e.b);
            std::string latent = "_L_" + lo + "_" + hi;
            nodes.push_back(latent);
            edges.push_back(dir(latent, lo));
            edges.push_back(dir(latent, hi));
        } else {
            edges.push_back(e);
        }
    }
    return MixedGraph(nodes, edges);
}

MixedGraph mag_translate(const MixedGraph& g) {
    if (!is_mccg(g)) throw input_error("mag_translate requires an MCCG");
    // the rewrite adds an arrowhead at the spouse-having end of an undirected
    // edge. A node only gains spouse status when an incident edge turns
    // bidirected, which needs both its ends spousy already, so the spouse set
    // never grows and a single pass reaches the fixpoint.
    int n = g.node_count();
    std::vector<char> spousy(n, 0);
    for (int i = 0; i < n; ++i)
        if (g.spouses(bit(i))) spousy[i] = 1;
    std::vector<Edge> edges;
    for (const Edge& e : g.edge_list()) {
        if (e.type != EdgeType::Undirected) {
            edges.push_back(e);
            continue;
        }
        bool head_a = spousy[g.index_of(e.a)], head_b = spousy[g.index_of(e.b)];
        if (head_a && head_b)
            edges.push_back(bid(e.a, e.b));
        else if (head_a)
            edges.push_back(dir(e.b, e.a));
        else if (head_b)
            edges.push_back(dir(e.a, e.b));
        else
            edges.push_back(e);
    }
    return MixedGraph(g.names(), edges);
}

NodeSet strict_ascendants(const MixedGraph& g, NodeSet x) {
    NodeSet out = 0, frontier = x;
    while (frontier) {
        NodeSet next = g.parents(frontier) & ~out;
        out |= next;
        frontier = next;
    }
    return out;
}

namespace {

bool mag_path_dfs(const MixedGraph& g, NodeSet y, NodeSet z, NodeSet open_colliders, int u, End arr,
                  bool at_start, NodeSet visited) {
    for (const HalfEdge& h : g.incident(u)) {
        if (contains(visited, h.to)) continue;
        if (!at_start) {
            bool collider = arr == End::Head && h.at_self == End::Head;
            bool open = collider ? contains(open_colliders, u) : !contains(z, u);
            if (!open) continue;
        }
        if (contains(y, h.to)) return true;
        if (mag_path_dfs(g, y, z, open_colliders, h.to, h.at_other, false, visited | bit(h.to)))
            return true;
    }
    return false;
}

}  // namespace

bool mag_separated(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z) {
    check_query(g, x, y, z);
    NodeSet open_colliders = z | strict_ascendants(g, z);
    for (int s : set_nodes(x))
        if (mag_path_dfs(g, y, z, open_colliders, s, End::Line, true, bit(s))) return false;
    return true;
}

SepKind auto_sep_kind(const MixedGraph& g) {
    return g.has_bidirected() ? SepKind::Mccg : SepKind::Amp;
}

bool separated(const MixedGraph& g, SepKind kind, NodeSet x, NodeSet y, NodeSet z) {
    return kind == SepKind::Amp ? amp_separated(g, x, y, z) : mccg_separated(g, x, y, z);
}

bool separated_unchecked(const MixedGraph& g, SepKind, NodeSet x, NodeSet y, NodeSet z) {
    return !z_open_reachable(g, x, y, z);
}

MixedGraph covariance_projection(const MixedGraph& g) {
    if (!is_mccg(g)) throw input_error("covariance_projection requires an MCCG");
    int n = g.node_count();
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!mccg_separated(g, bit(a), bit(b), 0)) edges.push_back(bid(g.name_of(a), g.name_of(b)));
    return MixedGraph(g.names(), edges);
}

MixedGraph concentration_projection(const MixedGraph& g) {
    if (!is_mccg(g)) throw input_error("concentration_projection requires an MCCG");
    int n = g.node_count();
    NodeSet all = g.all_nodes();
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!mccg_separated(g, bit(a), bit(b), all & ~bit(a) & ~bit(b)))
                edges.push_back(und(g.name_of(a), g.name_of(b)));
    return MixedGraph(g.names(), edges);
}

}  // namespace cgkit
