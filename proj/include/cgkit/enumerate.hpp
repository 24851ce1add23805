#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cgkit/mixed_graph.hpp"

namespace cgkit {

std::vector<std::string> default_names(int n);  // "A", "B", ... up to 26 nodes

// all chain graphs over default names: each pair carries no edge, an
// undirected edge or a directed edge in either orientation
void for_each_chain_graph(int n, const std::function<void(const MixedGraph&)>& f);

// all MCCGs over default names: each pair carries no edge, an undirected edge
// or a bidirected edge
void for_each_mccg(int n, const std::function<void(const MixedGraph&)>& f);

// rejection samplers; deterministic in the seed
MixedGraph random_chain_graph(int n, std::uint64_t seed, double edge_prob = 0.4);
MixedGraph random_mccg(int n, std::uint64_t seed, double edge_prob = 0.4);

}  // namespace cgkit
