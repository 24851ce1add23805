#pragma once

#include <string>

#include "cgkit/learn_amp.hpp"
#include "cgkit/mixed_graph.hpp"
#include "cgkit/oracle.hpp"
#include "cgkit/separator_table.hpp"

namespace cgkit {

// skeleton recovery for MCCGs; candidate pool for (A, B) is ad(A) minus B
SkeletonResult mccg_skeleton(const IndependenceOracle& oracle);

// start from an all-bidirected skeleton, undirect both edges of every path
// A - B - C whose endpoints are non-adjacent with B inside their separator
// (collected first, applied at once), then repair remaining constraint
// violations one lexicographically-first edge at a time
MixedGraph orient_mccg(const MixedGraph& skeleton, const SeparatorTable& seps);

struct MccgLearnResult {
    MixedGraph graph;
    SeparatorTable seps;
    bool ok;
    std::string diagnostic;
};

MccgLearnResult learn_mccg(const IndependenceOracle& oracle);

}  // namespace cgkit
