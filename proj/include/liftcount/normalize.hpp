#pragma once

#include <stdexcept>

#include "liftcount/ast.hpp"

namespace liftcount {

struct NormalizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NormalizeOptions {
  // Inline conjuncts of the form  forall v (P(v) <-> delta(v))  where P is a
  // unit-weight, role-free, unconstrained unary predicate and delta contains
  // an existential quantifier. Keeps the 1-type space small; the weighted
  // count is unchanged either way.
  bool inline_definitions = true;
};

// The universal pair form: psi is quantifier-free over {x, y}; grounding
// psi(i,i) for all i and psi(i,j) & psi(j,i) for all i < j is equivalent to
// the original sentence.
struct UniversalSentence {
  FormulaPtr psi;
  std::vector<Predicate> predicates;
  std::vector<WeightPair> weights;
  std::vector<CardinalityConstraint> constraints;
  int linear_order = -1;  // predicate indices, -1 when the role is absent
  int successor = -1;
};

// Eliminates every existential quantifier, one fresh unary Skolem auxiliary
// (weights 1, -1) per surviving positive occurrence. WFOMC is preserved for
// every domain size and weighting. A sentence without existentials is
// returned unchanged.
Sentence skolemize(const Sentence& s, const NormalizeOptions& opts = {});

// Requires an existential-free sentence; strips universal prefixes into the
// shared pair form.
UniversalSentence to_universal_pair_form(const Sentence& s);

// Conjoins the axiom-implied reflexive literals: L(x,x) for a linear order
// role, ~S(x,x) for a successor role.
UniversalSentence augment_axioms(UniversalSentence u);

// skolemize + to_universal_pair_form + augment_axioms.
UniversalSentence normalize(const Sentence& s, const NormalizeOptions& opts = {});

// x <-> y swap on variables, used for capture-free substitution in the
// two-variable fragment.
FormulaPtr swap_xy(const FormulaPtr& f);

}  // namespace liftcount
