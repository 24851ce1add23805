#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cgkit/mixed_graph.hpp"
#include "cgkit/separation.hpp"

namespace cgkit {

// answers conditional independence queries over a fixed variable list.
// Variables are addressed by index into variable_names().
class IndependenceOracle {
  public:
    virtual ~IndependenceOracle() = default;
    virtual const std::vector<std::string>& variable_names() const = 0;
    // pre: a != b, s excludes a and b
    virtual bool independent(int a, int b, NodeSet s) const = 0;
    // set query; the default reduces to pairwise queries, which is exact for
    // any distribution satisfying composition (all models used here do)
    virtual bool independent_sets(NodeSet x, NodeSet y, NodeSet z) const;
};

// faithful oracle reading separations off a graph
class GraphOracle : public IndependenceOracle {
  public:
    explicit GraphOracle(MixedGraph g);
    GraphOracle(MixedGraph g, SepKind kind);
    const std::vector<std::string>& variable_names() const override { return g_.names(); }
    bool independent(int a, int b, NodeSet s) const override;
    bool independent_sets(NodeSet x, NodeSet y, NodeSet z) const override;
    const MixedGraph& graph() const { return g_; }

  private:
    MixedGraph g_;
    SepKind kind_;
};

}  // namespace cgkit
