#pragma once

#include <functional>
#include <unordered_map>

#include "liftcount/cells.hpp"

namespace liftcount {

struct LosuccError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// DP state key: u 1-type counts followed by the u*u segment matrix, row
// major (entry a*u+b counts segments with head 1-type a and tail 1-type b).
using DpKey = std::vector<uint16_t>;

struct DpKeyHash {
  std::size_t operator()(const DpKey& key) const {
    std::size_t h = 1469598103934665603ull;
    for (uint16_t v : key) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct DpLayer {
  unsigned m = 0;
  int u = 0;
  std::unordered_map<DpKey, Rational, DpKeyHash> table;

  // h(m, k, s); zero when the state is absent.
  Rational value(const std::vector<unsigned>& k,
                 const std::vector<unsigned>& seg_matrix) const;
};

enum class Behavior { Merge1, Merge2, Head, Tail, Only };

// The lambda factor of one behavior, computed directly from its defining
// product over the previous elements' count vector kbar (0^0 = 1). Type
// arguments: Merge1 takes (b, c) = tail type of the first segment, head type
// of the second; Merge2 and Tail take the tail type in p; Head takes the old
// head type in p. Throws when a demanded exponent would be negative.
Rational lambda_weight(const CellTable& cells, Behavior behavior, int tau,
                       const std::vector<unsigned>& kbar, int p = -1, int q = -1);

struct LosuccOptions {
  std::size_t threads = 1;  // 0 = LIFTCOUNT_THREADS / hardware
  // Drop states whose count vector already violates a monotone upper bound
  // of a cardinality constraint; never changes the result.
  bool prune_cardinality_upper = true;
  std::function<void(const DpLayer&)> inspect;
};

// WFOMC of psi /\ L(L) /\ S(S) over [n]. fixed_order keeps L as the natural
// order (gamma); otherwise the result is n! * gamma.
Rational wfomc_losucc(const CellTable& cells, unsigned long n, bool fixed_order,
                      const LosuccOptions& opts = {});
Rational wfomc_losucc(const UniversalSentence& u, unsigned long n, bool fixed_order,
                      const LosuccOptions& opts = {});

// One DP run serving the whole range [from, to]; element i is the value for
// n = from + i. Layer tables do not depend on the target n, so this agrees
// with per-n runs exactly.
std::vector<Rational> wfomc_losucc_sequence(const CellTable& cells, unsigned long from,
                                            unsigned long to, bool fixed_order,
                                            const LosuccOptions& opts = {});

}  // namespace liftcount
