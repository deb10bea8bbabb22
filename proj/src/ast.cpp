#include "liftcount/ast.hpp"

#include <algorithm>

namespace liftcount {

const char* cmp_text(Cmp c) {
  switch (c) {
    case Cmp::Less: return "<";
    case Cmp::LessEq: return "<=";
    case Cmp::Eq: return "=";
    case Cmp::GreaterEq: return ">=";
    case Cmp::Greater: return ">";
  }
  return "?";
}

namespace {
FormulaPtr make(Kind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}
FormulaPtr make2(Kind k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}
}  // namespace

FormulaPtr f_true() {
  static FormulaPtr t = make(Kind::True);
  return t;
}
FormulaPtr f_false() {
  static FormulaPtr f = make(Kind::False);
  return f;
}
FormulaPtr f_atom(int pred, std::vector<std::string> args) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Atom;
  f->pred = pred;
  f->args = std::move(args);
  return f;
}
FormulaPtr f_not(FormulaPtr a) { return make2(Kind::Not, std::move(a), nullptr); }
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) { return make2(Kind::And, std::move(a), std::move(b)); }
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) { return make2(Kind::Or, std::move(a), std::move(b)); }
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
  return make2(Kind::Implies, std::move(a), std::move(b));
}
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b) { return make2(Kind::Iff, std::move(a), std::move(b)); }
FormulaPtr f_forall(std::string var, FormulaPtr body) {
  auto f = make2(Kind::Forall, std::move(body), nullptr);
  const_cast<Formula*>(f.get())->var = std::move(var);
  return f;
}
FormulaPtr f_exists(std::string var, FormulaPtr body) {
  auto f = make2(Kind::Exists, std::move(body), nullptr);
  const_cast<Formula*>(f.get())->var = std::move(var);
  return f;
}

FormulaPtr f_and_all(const std::vector<FormulaPtr>& parts) {
  if (parts.empty()) return f_true();
  FormulaPtr acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = f_and(acc, parts[i]);
  return acc;
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Atom:
      return a->pred == b->pred && a->args == b->args;
    case Kind::Not:
      return structurally_equal(a->lhs, b->lhs);
    case Kind::Forall:
    case Kind::Exists:
      return a->var == b->var && structurally_equal(a->lhs, b->lhs);
    default:
      return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
  }
}

bool structurally_equal_named(const FormulaPtr& a, const Sentence& sa, const FormulaPtr& b,
                              const Sentence& sb) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Atom:
      return sa.predicates[a->pred].name == sb.predicates[b->pred].name && a->args == b->args;
    case Kind::Not:
      return structurally_equal_named(a->lhs, sa, b->lhs, sb);
    case Kind::Forall:
    case Kind::Exists:
      return a->var == b->var && structurally_equal_named(a->lhs, sa, b->lhs, sb);
    default:
      return structurally_equal_named(a->lhs, sa, b->lhs, sb) &&
             structurally_equal_named(a->rhs, sa, b->rhs, sb);
  }
}

bool contains_quantifier(const FormulaPtr& f, Kind which) {
  if (!f) return false;
  if (f->kind == which) return true;
  return contains_quantifier(f->lhs, which) || contains_quantifier(f->rhs, which);
}

namespace {
void free_vars_rec(const FormulaPtr& f, std::vector<std::string>& bound,
                   std::vector<std::string>& out) {
  if (!f) return;
  switch (f->kind) {
    case Kind::Atom:
      for (const auto& v : f->args)
        if (std::find(bound.begin(), bound.end(), v) == bound.end() &&
            std::find(out.begin(), out.end(), v) == out.end())
          out.push_back(v);
      return;
    case Kind::Forall:
    case Kind::Exists:
      bound.push_back(f->var);
      free_vars_rec(f->lhs, bound, out);
      bound.pop_back();
      return;
    default:
      free_vars_rec(f->lhs, bound, out);
      free_vars_rec(f->rhs, bound, out);
      return;
  }
}
}  // namespace

void free_variables(const FormulaPtr& f, std::vector<std::string>& out) {
  std::vector<std::string> bound;
  free_vars_rec(f, bound, out);
}

int Sentence::find_predicate(const std::string& name) const {
  for (std::size_t i = 0; i < predicates.size(); ++i)
    if (predicates[i].name == name) return static_cast<int>(i);
  return -1;
}

int Sentence::add_predicate(const std::string& name, int arity, AxiomRole role) {
  predicates.push_back({name, arity, role});
  weights.push_back({});
  return static_cast<int>(predicates.size()) - 1;
}

int Sentence::linear_order_pred() const {
  for (std::size_t i = 0; i < predicates.size(); ++i)
    if (predicates[i].role == AxiomRole::LinearOrder) return static_cast<int>(i);
  return -1;
}

int Sentence::successor_pred() const {
  for (std::size_t i = 0; i < predicates.size(); ++i)
    if (predicates[i].role == AxiomRole::Successor) return static_cast<int>(i);
  return -1;
}

bool Sentence::has_axiom_roles() const {
  return linear_order_pred() >= 0 || successor_pred() >= 0;
}

}  // namespace liftcount
