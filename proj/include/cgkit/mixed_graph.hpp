#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgkit/nodeset.hpp"

namespace cgkit {

enum class EdgeType { Undirected, Directed, Bidirected };

// for Directed the edge points a -> b
struct Edge {
    std::string a, b;
    EdgeType type = EdgeType::Undirected;
    bool operator==(const Edge&) const = default;
};

inline Edge und(std::string a, std::string b) { return {std::move(a), std::move(b), EdgeType::Undirected}; }
inline Edge dir(std::string a, std::string b) { return {std::move(a), std::move(b), EdgeType::Directed}; }
inline Edge bid(std::string a, std::string b) { return {std::move(a), std::move(b), EdgeType::Bidirected}; }

// what an edge looks like from one of its endpoints
enum class End { Line, Head, Tail };

struct HalfEdge {
    int to;
    End at_self;   // mark at this node
    End at_other;  // mark at the far node
};

// Node-labelled mixed graph with at most one edge per pair and no loops.
// Immutable after construction; nodes are kept sorted and addressed by index.
class MixedGraph {
  public:
    MixedGraph() = default;
    MixedGraph(std::vector<std::string> nodes, const std::vector<Edge>& edges);

    int node_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name_of(int i) const { return names_[i]; }
    int index_of(const std::string& name) const;         // throws input_error on unknown name
    std::optional<int> find_index(const std::string& name) const;

    NodeSet all_nodes() const { return node_count() == 64 ? ~NodeSet{0} : (NodeSet{1} << node_count()) - 1; }

    bool adjacent(int a, int b) const;
    std::optional<EdgeType> edge_type(int a, int b) const;  // Directed regardless of orientation
    bool has_edge(int a, int b, EdgeType t) const;          // for Directed: a -> b exactly
    End end_at(int node, int other) const;                  // mark at `node` of the edge node..other

    // edges as (lo, hi, type, head_is_hi) in lexicographic order
    std::vector<Edge> edge_list() const;
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<HalfEdge>& incident(int node) const { return incident_[node]; }

    bool has_directed() const { return directed_count_ > 0; }
    bool has_bidirected() const { return bidirected_count_ > 0; }
    bool has_undirected() const { return undirected_count_ > 0; }

    // neighbourhood operators; results are not purged of X itself except where noted
    NodeSet parents(NodeSet x) const;     // {v : v -> w for some w in x}
    NodeSet neighbors(NodeSet x) const;   // {v : v -- w}
    NodeSet spouses(NodeSet x) const;     // {v : v <-> w}
    NodeSet adjacents(NodeSet x) const;   // {v not in x : v adjacent to some w in x}
    NodeSet descendants(NodeSet x) const; // {v not in x : descending route from x to v}

    std::vector<NodeSet> undirected_components() const;  // singletons included, sorted by lowest node
    std::vector<NodeSet> bidirected_components() const;
    NodeSet component_of(NodeSet x) const;               // co(x): union of undirected components meeting x

    MixedGraph induced_subgraph(NodeSet keep) const;

    bool operator==(const MixedGraph& o) const { return names_ == o.names_ && edges_ == o.edges_; }
    bool operator!=(const MixedGraph& o) const { return !(*this == o); }
    bool same_skeleton(const MixedGraph& o) const;

  private:
    struct EdgeRec {
        EdgeType type;
        bool head_is_hi;  // only meaningful for Directed
        bool operator==(const EdgeRec&) const = default;
    };

    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::map<std::pair<int, int>, EdgeRec> edges_;  // key (lo, hi)
    std::vector<std::vector<HalfEdge>> incident_;
    int directed_count_ = 0, bidirected_count_ = 0, undirected_count_ = 0;
};

// classification
bool is_chain_graph(const MixedGraph& g);  // no bidirected edges and no semidirected cycle
bool is_mccg(const MixedGraph& g);
std::vector<std::string> diagnose_mccg(const MixedGraph& g);  // empty iff is_mccg

enum class TriplexKind { ChainGraph, Ccg };

struct Triplex {
    int a, b, mid;  // triplex ({a, b}, mid) with a < b
    bool operator==(const Triplex&) const = default;
    auto operator<=>(const Triplex&) const = default;
};

std::vector<Triplex> triplexes(const MixedGraph& g, TriplexKind kind);
std::vector<Triplex> triplexes(const MixedGraph& g);  // Ccg when bidirected edges present

struct Flag {
    int a, b, c;  // a -> b -- c, a and c non-adjacent
    bool operator==(const Flag&) const = default;
    auto operator<=>(const Flag&) const = default;
};

std::vector<Flag> flags(const MixedGraph& g);
std::vector<Triplex> immoralities(const MixedGraph& g);  // a -> mid <- b

// marginal MCCG over keep: induced subgraph plus A -- B whenever an undirected
// path connects A and B with every interior node outside keep
MixedGraph marginalize_mccg(const MixedGraph& g, NodeSet keep);

// helpers bridging between names and masks
NodeSet mask_of(const MixedGraph& g, const std::vector<std::string>& names);
std::vector<std::string> names_of(const MixedGraph& g, NodeSet s);

// compact fixture syntax: "A--B B->C C<->D" or comma separated; "B<-A" also accepted.
// extra lists isolated nodes that appear in no edge.
MixedGraph graph_of(const std::string& edge_spec, const std::vector<std::string>& extra = {});

}  // namespace cgkit
