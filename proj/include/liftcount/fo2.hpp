#pragma once

#include "liftcount/cells.hpp"

namespace liftcount {

struct Fo2Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Fo2Options {
  std::size_t threads = 1;  // 0 = LIFTCOUNT_THREADS / hardware
};

// Axiom-free WFOMC via the count-vector closed form:
//   sum over |k| = n of  multinomial(n; k) * prod_i W(C_i)^{k_i}
//     * prod_i r_{i,i}^{k_i (k_i - 1) / 2} * prod_{i<j} r_{i,j}^{k_i k_j}.
// Cardinality constraints filter count vectors.
Rational wfomc_fo2(const CellTable& cells, unsigned long n, const Fo2Options& opts = {});

Rational wfomc_fo2(const UniversalSentence& u, unsigned long n, const Fo2Options& opts = {});

}  // namespace liftcount
