#pragma once

#include "cgkit/mixed_graph.hpp"

namespace cgkit {

// throws input_error unless x, y are nonempty, x, y, z are pairwise disjoint
// and all lie inside the graph's node set
void check_query(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z);

// true iff no z-open route joins x and y in the chain graph g.
// A transit through B arriving with end a and departing with end d is allowed
// iff B is head-no-tail there (a, d one of head/head, head/line, line/head)
// and B is in z, or B is not head-no-tail there and B is outside z.
bool amp_separated(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z);

// literal route enumeration, kept as an independent oracle. Routes may repeat
// nodes; prefixes that already violate the openness condition at an interior
// node are not extended, which skips only routes that cannot be open.
// max_len bounds the edge count; 0 means 3 * node_count(), which is above the
// state-space bound, so no open route is missed.
bool brute_force_amp_separated(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z, int max_len = 0);

// true iff no z-open path joins x and y in the MCCG g (triplex nodes in z,
// non-triplex nodes outside z); path and route semantics agree on MCCGs
bool mccg_separated(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z);

// simple-path enumeration over a CCG. With general == true a non-triplex node
// inside z does not block when it has a spouse; with false the simplified
// MCCG reading is used.
bool brute_force_ccg_separated(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z, bool general);

// openness of one concrete path (a node sequence along edges of g) under the
// same criterion; endpoints are unconstrained
bool ccg_path_open(const MixedGraph& g, const std::vector<int>& path, NodeSet z, bool general);

// replace every A <-> B by A <- _L_A_B -> B; the result is a chain graph whose
// separations over the original nodes equal those of g
MixedGraph latent_expand(const MixedGraph& g);

// replace every subgraph A <-> B -- C by A <-> B <- C until fixpoint; an
// undirected edge collecting arrowheads at both ends becomes bidirected
MixedGraph mag_translate(const MixedGraph& g);

// nodes with a strictly descending (all-directed) route of length >= 1 into x
NodeSet strict_ascendants(const MixedGraph& g, NodeSet x);

// m-separation for the translated graphs: a triplex node (arrowheads at both
// ends) is open inside z or san(z), any other interior node blocks inside z
bool mag_separated(const MixedGraph& g, NodeSet x, NodeSet y, NodeSet z);

MixedGraph covariance_projection(const MixedGraph& g);     // A <-> B iff not separated marginally
MixedGraph concentration_projection(const MixedGraph& g);  // A -- B iff not separated given the rest

enum class SepKind { Amp, Mccg };

SepKind auto_sep_kind(const MixedGraph& g);  // Mccg when bidirected edges present
bool separated(const MixedGraph& g, SepKind kind, NodeSet x, NodeSet y, NodeSet z);

// same semantics without per-call validation of g or the query; for callers
// that validated once and issue many queries
bool separated_unchecked(const MixedGraph& g, SepKind kind, NodeSet x, NodeSet y, NodeSet z);

}  // namespace cgkit
