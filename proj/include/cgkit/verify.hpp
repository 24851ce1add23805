#pragma once

#include <string>
#include <vector>

#include "cgkit/mixed_graph.hpp"

namespace cgkit {

struct VerifyReport {
    std::string name;
    long long checked = 0;
    long long failure_count = 0;
    std::vector<std::string> failures;  // first few counterexamples
    bool ok() const { return failure_count == 0; }
};

// equality of the joined criterion and the dependence closure on one graph,
// over every valid query; the graph may not exceed bound nodes
VerifyReport verify_sound_complete(const MixedGraph& g, int bound = 5);

// on a forest MCCG the dependence reading matches non-separation exactly
bool faithful_if_acyclic(const MixedGraph& g);

// the exhaustive properties behind the library's theorems, each capped at
// min(bound, the scale its runtime budget allows); bound must lie in 2..5
std::vector<VerifyReport> verify_all(int bound = 5);

bool all_ok(const std::vector<VerifyReport>& reports);
std::string render_reports(const std::vector<VerifyReport>& reports);

}  // namespace cgkit
