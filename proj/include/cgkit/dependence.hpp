#pragma once

#include <vector>

#include "cgkit/mixed_graph.hpp"
#include "cgkit/nodeset.hpp"

namespace cgkit {

// true when no cycle of g carries both an undirected and a bidirected edge.
// Decided by union-find over component incidences: one vertex per undirected
// component, one per bidirected component, one link per node; a mixed cycle
// exists exactly when that incidence graph has a cycle.
bool mixed_cycle_free(const MixedGraph& g);

// literal simple-cycle enumeration, kept as an independent oracle
bool brute_force_mixed_cycle_free(const MixedGraph& g);

struct JoinedWitness {
    bool joined = false;
    std::vector<int> path;  // node indices from a node of x to a node of y
    NodeSet u = 0;          // conditioning set under which path is the only open one
};

// dependence reading X ~ Y | Z: some A in x and B in y admit a path that is
// the single u-open path between them, for a u squeezed between z and
// x | y | z minus the endpoints. Requires an MCCG with no mixed cycle.
bool joined(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z);

// same test, returning the first witness in (pair, path length, path order)
JoinedWitness joined_witness(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z);

// raw form of the criterion: quantifies over every u between z and
// x | y | z minus the endpoints instead of the one canonical u per path
bool brute_force_joined(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z);

// true when the skeleton of g has no cycle of any kind
bool skeleton_forest(const MixedGraph& g);

}  // namespace cgkit
