#pragma once

#include <vector>

#include "liftcount/cells.hpp"

namespace liftcount {

// Number of elements whose 1-type makes the unary predicate positive.
unsigned long positive_count(const std::vector<unsigned>& k, const CellTable& cells, int pred);

// The spec's apply_cardinality_filter: true iff every constraint holds on
// the (complete) count vector.
bool apply_cardinality_filter(const std::vector<unsigned>& k, const CellTable& cells);

// Partial-vector check: false only when a monotone upper bound (<, <= or the
// upper half of =) is already violated; counts only grow with the layer, so
// pruning on this is sound.
bool cardinality_upper_bounds_ok(const std::vector<unsigned>& k, const CellTable& cells);

}  // namespace liftcount
