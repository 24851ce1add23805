#pragma once

#include <string>

#include "cgkit/marked_graph.hpp"
#include "cgkit/mixed_graph.hpp"
#include "cgkit/oracle.hpp"
#include "cgkit/separator_table.hpp"

namespace cgkit {

struct SkeletonResult {
    MixedGraph graph;  // undirected skeleton
    SeparatorTable seps;
};

// order in which the orientation rules are scanned; the fixpoint is the same
// either way, the alternative exists to let tests demonstrate that
enum class RuleSchedule { Standard, Reversed };

// skeleton recovery by separator search with a growing conditioning-set size;
// the candidate pool for a pair (A, B) is ad(A) together with the adjacents of
// ad(A), minus A and B, recomputed as the working graph loses edges
SkeletonResult amp_skeleton(const IndependenceOracle& oracle);

// orientation rules applied to a recovered skeleton until fixpoint
MarkedGraph apply_rules(const MixedGraph& skeleton, const SeparatorTable& seps,
                        RuleSchedule schedule = RuleSchedule::Standard);

struct AmpLearnResult {
    MixedGraph graph;
    MarkedGraph marked;
    SeparatorTable seps;
    bool ok;  // finalized graph is a chain graph
    std::string diagnostic;
};

AmpLearnResult learn_amp(const IndependenceOracle& oracle,
                         RuleSchedule schedule = RuleSchedule::Standard);

}  // namespace cgkit
