#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "seqcal/boolexpr.hpp"
#include "seqcal/budget.hpp"
#include "seqcal/comb.hpp"
#include "seqcal/graphs.hpp"

namespace seqcal {

// Generalized Kripke structure over finitely many states s0..s{n-1}.
// `allowed` describes the behaviors B and must be closed under taking
// contiguous pieces; leaving it empty allows every sequence.
struct Kripke {
  Props ap;
  std::size_t states = 0;
  std::vector<StateSet> labeling;  // per atom, the states where it holds
  std::function<bool(const ElementSequence&)> allowed;

  bool allows(const ElementSequence& omega) const { return !allowed || allowed(omega); }
};

// One state per truth assignment, numbered as described at atom_value().
Kripke fully_populated(const Props& ap);

StateSet lift_expr(const Kripke& k, const Expr& e);
SetSequence lift_seq(const Kripke& k, const std::vector<Expr>& alpha);
// Same vertices in the same order, labels lifted arc by arc.
SetGraph lift_graph(const Kripke& k, const BooleanGraph& g);

bool holds_tightly(const std::vector<Expr>& alpha, const ElementSequence& omega,
                   const Kripke& k);

// Every state sequence of length 1..n (allowed by k) with no contiguous piece
// on which a word accepted by g holds tightly. Subsequence-closed by
// construction.
class MaximalBehaviors {
 public:
  MaximalBehaviors(const BooleanGraph& g, const Kripke& k, std::size_t n, Budget& budget);
  MaximalBehaviors(const BooleanGraph& g, const Kripke& k, std::size_t n);

  std::size_t bound() const { return n_; }
  const std::vector<ElementSequence>& sequences() const { return seqs_; }
  bool contains(const ElementSequence& omega) const { return index_.count(omega) != 0; }

 private:
  void build(const BooleanGraph& g, const Kripke& k, Budget& budget);

  std::size_t n_;
  std::vector<ElementSequence> seqs_;
  std::set<ElementSequence> index_;
};

std::vector<ElementSequence> maximal_behaviors(const BooleanGraph& g, const Kripke& k,
                                               std::size_t n);

// No behavior of length |alpha| lies in x L(alpha). Requires |alpha| <= bound.
bool is_constraint(const std::vector<Expr>& alpha, const MaximalBehaviors& behaviors,
                   const Kripke& k);
bool is_constraint(const std::vector<Expr>& alpha, const BooleanGraph& g, const Kripke& k,
                   std::size_t n);

}  // namespace seqcal
