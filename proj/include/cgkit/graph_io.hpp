#pragma once

#include <string>

#include "cgkit/mixed_graph.hpp"

namespace cgkit {

// {"nodes":["A","B"],"edges":[["A","--","B"],["A","->","C"],["B","<->","C"]]}
// serialize emits sorted nodes and edges, so parse(serialize(g)) round-trips
// byte for byte
MixedGraph graph_from_json(const std::string& text);
std::string graph_to_json(const MixedGraph& g);

MixedGraph load_graph(const std::string& path);
void save_graph(const MixedGraph& g, const std::string& path);

std::string graph_to_dot(const MixedGraph& g);

}  // namespace cgkit
