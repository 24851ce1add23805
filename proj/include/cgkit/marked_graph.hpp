#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cgkit/mixed_graph.hpp"
#include "cgkit/nodeset.hpp"

namespace cgkit {

// edge-end annotation used while orienting a learned skeleton; Circle is the
// undecided state, Block records that no arrowhead may sit at that end
enum class EndMark { Circle, Block };

class MarkedGraph {
  public:
    MarkedGraph() = default;
    explicit MarkedGraph(const MixedGraph& skeleton);

    int node_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

    bool adjacent(int a, int b) const { return contains(adj_[a], b); }
    NodeSet neighbors(int v) const { return adj_[v]; }

    EndMark mark(int at, int other) const;

    // marks are monotone: once Block, always Block
    bool set_block(int at, int other);

    // Block at exactly one end means the arrow leaves that end; Block at both
    // ends or neither yields an undirected edge
    MixedGraph finalize() const;

  private:
    std::vector<std::string> names_;
    std::vector<NodeSet> adj_;
    // keyed (lo, hi); value = (mark at lo end, mark at hi end)
    std::map<std::pair<int, int>, std::pair<EndMark, EndMark>> marks_;
};

}  // namespace cgkit
