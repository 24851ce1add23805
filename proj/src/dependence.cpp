#include "cgkit/dependence.hpp"

#include <algorithm>
#include <numeric>

#include "cgkit/errors.hpp"
#include "cgkit/separation.hpp"

namespace cgkit {

namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

bool mixed_cycle_free(const MixedGraph& g) {
    if (g.has_directed())
        throw input_error("mixed_cycle_free requires a graph without directed edges");
    const int n = g.node_count();
    std::vector<int> ucomp(n), bcomp(n);
    std::vector<NodeSet> ucs = g.undirected_components();
    std::vector<NodeSet> bcs = g.bidirected_components();
    for (std::size_t i = 0; i < ucs.size(); ++i)
        for (int v : set_nodes(ucs[i])) ucomp[v] = static_cast<int>(i);
    for (std::size_t i = 0; i < bcs.size(); ++i)
        for (int v : set_nodes(bcs[i])) bcomp[v] = static_cast<int>(i);

    // every node links its undirected component to its bidirected component;
    // a repeated link closes a cycle in the incidence graph, which lifts to a
    // cycle of g alternating between undirected and bidirected stretches
    const int nu = static_cast<int>(ucs.size());
    std::vector<int> parent(nu + bcs.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (int v = 0; v < n; ++v) {
        int ru = find_root(parent, ucomp[v]);
        int rb = find_root(parent, nu + bcomp[v]);
        if (ru == rb) return false;
        parent[ru] = rb;
    }
    return true;
}

namespace {

// cycles are rooted at their smallest node s; path holds the nodes so far
bool mixed_cycle_dfs(const MixedGraph& g, int s, int u, NodeSet visited, bool saw_und, bool saw_bid,
                     std::vector<int>& path) {
    for (int w : set_nodes(g.adjacents(bit(u)))) {
        if (w < s) continue;
        EdgeType t = *g.edge_type(u, w);
        bool und2 = saw_und || t == EdgeType::Undirected;
        bool bid2 = saw_bid || t == EdgeType::Bidirected;
        if (w == s) {
            if (path.size() >= 3 && path[1] < u && und2 && bid2) return true;
            continue;
        }
        if (contains(visited, w)) continue;
        path.push_back(w);
        bool found = mixed_cycle_dfs(g, s, w, visited | bit(w), und2, bid2, path);
        path.pop_back();
        if (found) return true;
    }
    return false;
}

}  // namespace

bool brute_force_mixed_cycle_free(const MixedGraph& g) {
    if (g.has_directed())
        throw input_error("brute_force_mixed_cycle_free requires a graph without directed edges");
    for (int s = 0; s < g.node_count(); ++s) {
        std::vector<int> path = {s};
        if (mixed_cycle_dfs(g, s, s, bit(s), false, false, path)) return false;
    }
    return true;
}

namespace {

void simple_paths_dfs(const MixedGraph& g, int u, int b, NodeSet visited, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    for (int w : set_nodes(g.adjacents(bit(u)))) {
        if (w == b) {
            cur.push_back(w);
            out.push_back(cur);
            cur.pop_back();
            continue;
        }
        if (contains(visited, w)) continue;
        cur.push_back(w);
        simple_paths_dfs(g, w, b, visited | bit(w), cur, out);
        cur.pop_back();
    }
}

// openness used when counting rival routes. A non-triplex node in u blocks a
// route, unless one of its spouses is in u as well: conditioning on the spouse
// couples the junction back to its bidirected company, and only then can the
// route carry dependence around the witness and spoil its uniqueness.
bool count_open(const MixedGraph& g, const std::vector<int>& path, NodeSet u) {
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        End arr = g.end_at(path[i], path[i - 1]);
        End dep = g.end_at(path[i], path[i + 1]);
        bool in_u = contains(u, path[i]);
        bool triplex = arr == End::Head || dep == End::Head;
        bool open = triplex ? in_u : (!in_u || (g.spouses(bit(path[i])) & u) != 0);
        if (!open) return false;
    }
    return true;
}

// all simple paths a .. b ordered by length, then by node sequence
std::vector<std::vector<int>> simple_paths(const MixedGraph& g, int a, int b) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur = {a};
    simple_paths_dfs(g, a, b, bit(a), cur, out);
    std::sort(out.begin(), out.end(), [](const std::vector<int>& p, const std::vector<int>& q) {
        if (p.size() != q.size()) return p.size() < q.size();
        return p < q;
    });
    return out;
}

}  // namespace

JoinedWitness joined_witness(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z) {
    check_query(g, x, y, z);
    if (!is_mccg(g)) throw input_error("joined requires an MCCG");
    if (!mixed_cycle_free(g))
        throw input_error("joined requires a graph with no cycle mixing undirected and bidirected edges");

    NodeSet nospouse = g.all_nodes() & ~g.spouses(g.all_nodes());
    for (int a : set_nodes(x)) {
        for (int b : set_nodes(y)) {
            std::vector<std::vector<int>> all_paths = simple_paths(g, a, b);
            NodeSet ends = bit(a) | bit(b);
            for (const std::vector<int>& rho : all_paths) {
                NodeSet on_path = 0;
                for (int v : rho) on_path |= bit(v);
                // a and b may be the only path nodes drawn from x and y
                if (on_path & ~ends & (x | y)) continue;
                // the one u worth trying: within x | y | z, keep z, the path
                // itself and the spouseless nodes
                NodeSet u = (x | y | z) & (z | on_path | nospouse) & ~ends;
                if (!count_open(g, rho, u)) continue;
                int open_count = 0;
                for (const std::vector<int>& q : all_paths)
                    if (count_open(g, q, u) && ++open_count > 1) break;
                if (open_count == 1) return {true, rho, u};
            }
        }
    }
    return {};
}

bool joined(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z) {
    return joined_witness(g, x, y, z).joined;
}

bool brute_force_joined(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z) {
    check_query(g, x, y, z);
    if (!is_mccg(g)) throw input_error("joined requires an MCCG");
    if (!mixed_cycle_free(g))
        throw input_error("joined requires a graph with no cycle mixing undirected and bidirected edges");

    for (int a : set_nodes(x)) {
        for (int b : set_nodes(y)) {
            std::vector<std::vector<int>> all_paths = simple_paths(g, a, b);
            NodeSet range = (x | y | z) & ~bit(a) & ~bit(b) & ~z;
            bool hit = false;
            for_each_subset(range, [&](NodeSet extra) {
                if (hit) return;
                NodeSet u = z | extra;
                int open_count = 0;
                for (const std::vector<int>& q : all_paths)
                    if (count_open(g, q, u) && ++open_count > 1) break;
                if (open_count == 1) hit = true;
            });
            if (hit) return true;
        }
    }
    return false;
}

bool skeleton_forest(const MixedGraph& g) {
    const int n = g.node_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const Edge& e : g.edge_list()) {
        int ra = find_root(parent, g.index_of(e.a));
        int rb = find_root(parent, g.index_of(e.b));
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

}  // namespace cgkit
