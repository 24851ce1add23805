#pragma once

#include <cstdint>
#include <vector>

#include "cgkit/mixed_graph.hpp"
#include "cgkit/oracle.hpp"
#include "cgkit/separation.hpp"

namespace cgkit {

struct CiTriple {
    NodeSet x, y, z;
    bool operator==(const CiTriple&) const = default;
};

// Set of statements (X, Y, Z) with X, Y nonempty and X, Y, Z pairwise disjoint
// over a universe of n nodes. Used both for independence and for dependence
// statements. Storage is a flag per role assignment (2 bits per node); both
// orientations of a statement are kept so rule engines can scan one-sided.
class TripleSet {
  public:
    explicit TripleSet(int n);

    int universe_size() const { return n_; }
    bool contains(NodeSet x, NodeSet y, NodeSet z) const { return member_[code(x, y, z)] != 0; }
    bool insert(NodeSet x, NodeSet y, NodeSet z);  // returns true if new
    int size() const { return count_; }            // counting each statement once

    // canonical triples (lowest node of x below lowest node of y), ascending
    std::vector<CiTriple> triples() const;

    bool operator==(const TripleSet& o) const { return n_ == o.n_ && member_ == o.member_; }
    bool operator!=(const TripleSet& o) const { return !(*this == o); }

    // statements in *this but not in o
    std::vector<CiTriple> difference(const TripleSet& o) const;

    std::uint32_t code(NodeSet x, NodeSet y, NodeSet z) const;
    CiTriple decode(std::uint32_t c) const;

  private:
    int n_;
    int count_ = 0;
    std::vector<std::uint8_t> member_;
};

using IndependenceModel = TripleSet;

// all separations of g: every valid triple is queried
IndependenceModel full_model(const MixedGraph& g, SepKind kind);
IndependenceModel full_model(const MixedGraph& g);

// A _|_ B for non-adjacent pairs in different undirected components,
// A _|_ B | ne(A) for non-adjacent pairs in the same component
IndependenceModel local_base(const MixedGraph& g);

// relative to a consistent partition q (undirected edges inside elements,
// bidirected edges across): A _|_ B for pairs in different elements,
// A _|_ B | q_i \ {A,B} for non-adjacent pairs in the same element q_i
IndependenceModel pairwise_base(const MixedGraph& g, const std::vector<NodeSet>& q);

std::vector<NodeSet> default_partition(const MixedGraph& g);  // the undirected components
void check_consistent_partition(const MixedGraph& g, const std::vector<NodeSet>& q);

// closure under symmetry, decomposition, weak union, contraction, intersection
// and composition. Weak transitivity has a disjunctive consequent, so it can
// never force a new member of a least fixpoint over known independencies; the
// closure theorems are verified against this generator set.
IndependenceModel wtc_closure(const IndependenceModel& base);

// one dependence statement per edge: A not_|_ B for A <-> B, and for A -- B
// either A not_|_ B | K \ {A,B} with K the undirected component (default) or
// A not_|_ B | ne(A) \ B
TripleSet dependence_base(const MixedGraph& g, bool neighbour_form = false);

// closure under the contrapositive graphoid, composition and weak transitivity
// rules; independence antecedents are answered by sep_model (a full model)
TripleSet wtc_dependence_closure(const TripleSet& base, const IndependenceModel& sep_model);

struct MarkovCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

// the two local Markov conditions of a chain graph:
//   C1: A _|_ co(A)\A\ne(A) | pa(A u ne(A)) u ne(A)
//   C2: A _|_ V\A\de(A)\pa(A) | pa(A)
MarkovCheck check_markov_c1c2(const MixedGraph& g, const IndependenceOracle& oracle);

std::string triple_to_string(const MixedGraph& g, const CiTriple& t);  // "A,B|C|D" with sorted sets

}  // namespace cgkit
