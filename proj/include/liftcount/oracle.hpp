#pragma once

#include <optional>
#include <string>

#include "liftcount/ast.hpp"

namespace liftcount {

struct OracleCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  unsigned max_n = 6;
  unsigned max_free_bits = 24;  // after axiom fixing
  std::size_t threads = 0;      // 0 = LIFTCOUNT_THREADS / hardware
};

// Exhaustive WFOMC of the original sentence (quantifiers evaluated by direct
// semantics, independent of the normalize pipeline). With axiom roles
// declared, L is fixed to the reflexive natural order and S ranges over the
// n! directed Hamiltonian paths; fixed_order=false multiplies by n!
// (permutation argument). Either both roles or neither must be declared.
Rational brute_force_wfomc(const Sentence& s, unsigned n, bool fixed_order,
                           const OracleLimits& limits = {});

// First model found (a deterministic scan), as a list of the positive ground
// literals; nullopt when the sentence has no model at size n.
std::optional<std::string> oracle_witness(const Sentence& s, unsigned n,
                                          const OracleLimits& limits = {});

}  // namespace liftcount
