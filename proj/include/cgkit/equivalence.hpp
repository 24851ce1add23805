#pragma once

#include <vector>

#include "cgkit/mixed_graph.hpp"

namespace cgkit {

enum class GraphFamily { ChainGraph, Mccg };

GraphFamily auto_family(const MixedGraph& g);  // Mccg when bidirected edges present

// same adjacencies and same triplexes; both graphs must belong to the family
bool triplex_equivalent(const MixedGraph& a, const MixedGraph& b, GraphFamily family);
bool triplex_equivalent(const MixedGraph& a, const MixedGraph& b);

// for MCCGs Markov equivalence and triplex equivalence coincide
bool markov_equivalent_mccg(const MixedGraph& a, const MixedGraph& b);

// turn the undirected edges of a complete undirected component into bidirected
// ones; the result is an MCCG in the same triplex equivalence class
MixedGraph feasible_bidirect(const MixedGraph& g, NodeSet component);

// the member of the triplex equivalence class with the largest bidirected set:
// apply feasible bidirectings until fixpoint
MixedGraph blargest(const MixedGraph& g);

// all graphs of the family with the same skeleton and the same triplexes,
// by exhausting edge-type assignments over the skeleton
std::vector<MixedGraph> enumerate_triplex_class(const MixedGraph& g, GraphFamily family);
std::vector<MixedGraph> enumerate_triplex_class(const MixedGraph& g);

// every flag of g appears in every chain graph of its triplex class
bool is_deflagged(const MixedGraph& g);

}  // namespace cgkit
