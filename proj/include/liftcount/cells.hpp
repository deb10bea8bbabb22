#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "liftcount/normalize.hpp"

namespace liftcount {

struct CellError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Literal slot patterns for atoms of psi once the pair (x, y) is fixed.
enum class Pattern : uint8_t { X, Y, XX, YY, XY, YX };

// The spec's evaluate(psi, assignment): plain Boolean evaluation of a
// quantifier-free formula under an explicit, possibly partial truth map.
// Throws on an atom slot the map does not cover.
bool evaluate_ground(const FormulaPtr& psi, const UniversalSentence& u,
                     const std::map<std::pair<int, Pattern>, bool>& assignment);

// 1-types, 2-tables, per-type weights and the r-tables of a normalized
// sentence. Slot order follows the predicate table: predicate i contributes
// 1-type slot i (U(x) for unary, R(x,x) for binary); binary predicate k (in
// table order) contributes 2-table slots 2k = R(x,y) and 2k+1 = R(y,x).
// 1-types are listed lexicographically on their slot bitvector.
class CellTable {
 public:
  struct Options {
    unsigned max_one_slots = 24;
    unsigned max_two_slots = 20;
    std::size_t threads = 1;
  };

  explicit CellTable(const UniversalSentence& u) : CellTable(u, Options{}) {}
  CellTable(const UniversalSentence& u, const Options& opts);

  int count() const { return static_cast<int>(types_.size()); }  // u
  const UniversalSentence& sentence() const { return u_; }

  bool one_type_bit(int type, int pred) const { return (types_[type] >> pred) & 1; }
  const Rational& type_weight(int type) const { return weights_[type]; }
  std::string describe_one_type(int type) const;

  unsigned two_slot_count() const { return 2 * static_cast<unsigned>(binary_preds_.size()); }
  std::size_t two_table_count() const { return std::size_t{1} << two_slot_count(); }
  Rational two_table_weight(std::size_t table) const;

  bool axiom_mode() const { return u_.linear_order >= 0 && u_.successor >= 0; }

  // r_{s,t}: all 2-tables between 1-types s (as a) and t (as b).
  const Rational& r_plain(int s, int t) const { return r_plain_[s * count() + t]; }
  // r_{s,t,k}, k in {1,2,3}: L(a,b), not L(b,a), S-bits fixed by phi_k, with
  // a the L-smaller element.
  const Rational& r_lso(int s, int t, int k) const {
    return r_lso_[(s * count() + t) * 3 + (k - 1)];
  }

  // Exhaustive check used by tests: an assignment is listed iff psi(x,x)
  // holds under it.
  bool one_type_assignment_valid(uint64_t bits) const;

 private:
  void enumerate_one_types();
  void build_r_tables(std::size_t threads);
  bool eval_pair(uint64_t cs, uint64_t ct, uint64_t table, bool swapped) const;
  bool eval_self(uint64_t c) const;

  UniversalSentence u_;
  std::vector<int> binary_preds_;          // table order
  std::vector<int> two_slot_of_pred_;      // pred -> first two-table slot or -1
  std::vector<uint64_t> types_;            // valid 1-type bitvectors
  std::vector<Rational> weights_;          // W(C_i)
  std::vector<Rational> table_weights_;    // W(pi) per 2-table index
  std::vector<Rational> r_plain_;
  std::vector<Rational> r_lso_;
  unsigned one_slots_ = 0;
};

}  // namespace liftcount
