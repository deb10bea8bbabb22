#pragma once

#include <memory>
#include <string>
#include <vector>

#include "liftcount/rational.hpp"

namespace liftcount {

enum class AxiomRole { None, LinearOrder, Successor, SkolemAux };

struct Predicate {
  std::string name;
  int arity = 1;
  AxiomRole role = AxiomRole::None;
};

enum class Cmp { Less, LessEq, Eq, GreaterEq, Greater };

const char* cmp_text(Cmp c);

struct CardinalityConstraint {
  int pred = -1;
  Cmp cmp = Cmp::LessEq;
  unsigned long bound = 0;
};

struct WeightPair {
  Rational pos = rat(1);
  Rational neg = rat(1);
  bool is_unit() const { return pos == 1 && neg == 1; }
};

enum class Kind { True, False, Atom, Not, And, Or, Implies, Iff, Forall, Exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  Kind kind;
  int pred = -1;                    // Atom
  std::vector<std::string> args;    // Atom argument variables
  std::string var;                  // Forall / Exists
  FormulaPtr lhs, rhs;              // Not and quantifiers use lhs only
};

FormulaPtr f_true();
FormulaPtr f_false();
FormulaPtr f_atom(int pred, std::vector<std::string> args);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr f_forall(std::string var, FormulaPtr body);
FormulaPtr f_exists(std::string var, FormulaPtr body);

// Conjunction of a list; empty list is true.
FormulaPtr f_and_all(const std::vector<FormulaPtr>& parts);

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

// Equality across sentences with different predicate tables: atoms compare
// by predicate name.
struct Sentence;
bool structurally_equal_named(const FormulaPtr& a, const Sentence& sa, const FormulaPtr& b,
                              const Sentence& sb);
bool contains_quantifier(const FormulaPtr& f, Kind which);
void free_variables(const FormulaPtr& f, std::vector<std::string>& out);

struct Sentence {
  FormulaPtr formula;
  std::vector<Predicate> predicates;
  std::vector<WeightPair> weights;  // parallel to predicates
  std::vector<CardinalityConstraint> constraints;

  int find_predicate(const std::string& name) const;
  int add_predicate(const std::string& name, int arity, AxiomRole role = AxiomRole::None);
  int linear_order_pred() const;  // -1 when absent
  int successor_pred() const;
  bool has_axiom_roles() const;
};

}  // namespace liftcount
