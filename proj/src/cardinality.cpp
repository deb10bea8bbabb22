#include "liftcount/cardinality.hpp"

namespace liftcount {

unsigned long positive_count(const std::vector<unsigned>& k, const CellTable& cells, int pred) {
  unsigned long total = 0;
  for (int i = 0; i < cells.count(); ++i)
    if (cells.one_type_bit(i, pred)) total += k[i];
  return total;
}

bool apply_cardinality_filter(const std::vector<unsigned>& k, const CellTable& cells) {
  for (const auto& c : cells.sentence().constraints) {
    unsigned long count = positive_count(k, cells, c.pred);
    bool ok = true;
    switch (c.cmp) {
      case Cmp::Less: ok = count < c.bound; break;
      case Cmp::LessEq: ok = count <= c.bound; break;
      case Cmp::Eq: ok = count == c.bound; break;
      case Cmp::GreaterEq: ok = count >= c.bound; break;
      case Cmp::Greater: ok = count > c.bound; break;
    }
    if (!ok) return false;
  }
  return true;
}

bool cardinality_upper_bounds_ok(const std::vector<unsigned>& k, const CellTable& cells) {
  for (const auto& c : cells.sentence().constraints) {
    if (c.cmp == Cmp::Greater || c.cmp == Cmp::GreaterEq) continue;
    unsigned long count = positive_count(k, cells, c.pred);
    if (c.cmp == Cmp::Less ? count >= c.bound : count > c.bound) return false;
  }
  return true;
}

}  // namespace liftcount
