#include "liftcount/normalize.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace liftcount {

namespace {

bool mentions_var(const FormulaPtr& f, const std::string& v) {
  std::vector<std::string> free;
  free_variables(f, free);
  return std::find(free.begin(), free.end(), v) != free.end();
}

bool mentions_pred(const FormulaPtr& f, int pred) {
  if (!f) return false;
  if (f->kind == Kind::Atom) return f->pred == pred;
  return mentions_pred(f->lhs, pred) || mentions_pred(f->rhs, pred);
}

// ---- conjunct splitting ----------------------------------------------------

// A universal prefix over a quantifier-bearing body. Splitting distributes
// top-level conjunctions and forall-over-conjunction.
void split_conjuncts(const FormulaPtr& f, std::vector<std::string> prefix,
                     std::vector<std::pair<std::vector<std::string>, FormulaPtr>>& out) {
  if (f->kind == Kind::And) {
    split_conjuncts(f->lhs, prefix, out);
    split_conjuncts(f->rhs, prefix, out);
    return;
  }
  if (f->kind == Kind::Forall) {
    auto inner = prefix;
    // An outer binding of the same name is shadowed and vacuous.
    inner.erase(std::remove(inner.begin(), inner.end(), f->var), inner.end());
    inner.push_back(f->var);
    split_conjuncts(f->lhs, std::move(inner), out);
    return;
  }
  // Unused prefix variables are dropped so conjunct shape checks see the
  // variables that actually matter.
  std::erase_if(prefix, [&](const std::string& v) { return !mentions_var(f, v); });
  out.emplace_back(std::move(prefix), f);
}

FormulaPtr wrap_prefix(const std::vector<std::string>& prefix, FormulaPtr body) {
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) body = f_forall(*it, body);
  return body;
}

// ---- NNF -------------------------------------------------------------------

FormulaPtr nnf(const FormulaPtr& f, bool positive) {
  switch (f->kind) {
    case Kind::True:
      return positive ? f_true() : f_false();
    case Kind::False:
      return positive ? f_false() : f_true();
    case Kind::Atom:
      return positive ? f : f_not(f);
    case Kind::Not:
      return nnf(f->lhs, !positive);
    case Kind::And:
      return positive ? f_and(nnf(f->lhs, true), nnf(f->rhs, true))
                      : f_or(nnf(f->lhs, false), nnf(f->rhs, false));
    case Kind::Or:
      return positive ? f_or(nnf(f->lhs, true), nnf(f->rhs, true))
                      : f_and(nnf(f->lhs, false), nnf(f->rhs, false));
    case Kind::Implies:
      return positive ? f_or(nnf(f->lhs, false), nnf(f->rhs, true))
                      : f_and(nnf(f->lhs, true), nnf(f->rhs, false));
    case Kind::Iff:
      return positive ? f_and(f_or(nnf(f->lhs, false), nnf(f->rhs, true)),
                              f_or(nnf(f->rhs, false), nnf(f->lhs, true)))
                      : f_or(f_and(nnf(f->lhs, true), nnf(f->rhs, false)),
                             f_and(nnf(f->lhs, false), nnf(f->rhs, true)));
    case Kind::Forall:
      return positive ? f_forall(f->var, nnf(f->lhs, true))
                      : f_exists(f->var, nnf(f->lhs, false));
    case Kind::Exists:
      return positive ? f_exists(f->var, nnf(f->lhs, true))
                      : f_forall(f->var, nnf(f->lhs, false));
  }
  throw NormalizeError("unreachable formula kind");
}

FormulaPtr simplify(const FormulaPtr& f) {
  switch (f->kind) {
    case Kind::Not: {
      FormulaPtr a = simplify(f->lhs);
      if (a->kind == Kind::True) return f_false();
      if (a->kind == Kind::False) return f_true();
      return f_not(a);
    }
    case Kind::And: {
      FormulaPtr a = simplify(f->lhs), b = simplify(f->rhs);
      if (a->kind == Kind::False || b->kind == Kind::False) return f_false();
      if (a->kind == Kind::True) return b;
      if (b->kind == Kind::True) return a;
      return f_and(a, b);
    }
    case Kind::Or: {
      FormulaPtr a = simplify(f->lhs), b = simplify(f->rhs);
      if (a->kind == Kind::True || b->kind == Kind::True) return f_true();
      if (a->kind == Kind::False) return b;
      if (b->kind == Kind::False) return a;
      return f_or(a, b);
    }
    case Kind::Forall: {
      FormulaPtr a = simplify(f->lhs);
      if (!mentions_var(a, f->var)) return a;
      return f_forall(f->var, a);
    }
    case Kind::Exists: {
      FormulaPtr a = simplify(f->lhs);
      if (!mentions_var(a, f->var)) return a;
      return f_exists(f->var, a);
    }
    default:
      return f;
  }
}

// One rewrite sweep: drop vacuous quantifiers, pull foralls out of
// disjunctions where the other side does not use the bound variable, and
// extract quantifier-free conjuncts from under existentials.
FormulaPtr rewrite_quantifiers(const FormulaPtr& f, bool& changed) {
  switch (f->kind) {
    case Kind::Not:
      return f_not(rewrite_quantifiers(f->lhs, changed));
    case Kind::And:
      return f_and(rewrite_quantifiers(f->lhs, changed), rewrite_quantifiers(f->rhs, changed));
    case Kind::Or: {
      FormulaPtr a = rewrite_quantifiers(f->lhs, changed);
      FormulaPtr b = rewrite_quantifiers(f->rhs, changed);
      if (a->kind == Kind::Forall && !mentions_var(b, a->var)) {
        changed = true;
        return f_forall(a->var, f_or(a->lhs, b));
      }
      if (b->kind == Kind::Forall && !mentions_var(a, b->var)) {
        changed = true;
        return f_forall(b->var, f_or(a, b->lhs));
      }
      return f_or(a, b);
    }
    case Kind::Forall: {
      FormulaPtr a = rewrite_quantifiers(f->lhs, changed);
      if (!mentions_var(a, f->var)) {
        changed = true;
        return a;
      }
      if (a->kind == Kind::And) {
        changed = true;
        return f_and(f_forall(f->var, a->lhs), f_forall(f->var, a->rhs));
      }
      return f_forall(f->var, a);
    }
    case Kind::Exists: {
      FormulaPtr a = rewrite_quantifiers(f->lhs, changed);
      if (!mentions_var(a, f->var)) {
        changed = true;
        return a;
      }
      if (a->kind == Kind::And) {
        if (!mentions_var(a->rhs, f->var)) {
          changed = true;
          return f_and(f_exists(f->var, a->lhs), a->rhs);
        }
        if (!mentions_var(a->lhs, f->var)) {
          changed = true;
          return f_and(a->lhs, f_exists(f->var, a->rhs));
        }
      }
      return f_exists(f->var, a);
    }
    default:
      return f;
  }
}

// ---- CNF over opaque quantified parts ---------------------------------------

using Clause = std::vector<FormulaPtr>;

bool is_clause_literal(const FormulaPtr& f) {
  if (f->kind == Kind::Atom || f->kind == Kind::Forall || f->kind == Kind::Exists) return true;
  return f->kind == Kind::Not && f->lhs->kind == Kind::Atom;
}

void cnf_opaque(const FormulaPtr& f, std::vector<Clause>& out) {
  if (f->kind == Kind::True) return;
  if (f->kind == Kind::False) {
    out.push_back({});
    return;
  }
  if (is_clause_literal(f)) {
    out.push_back({f});
    return;
  }
  if (f->kind == Kind::And) {
    cnf_opaque(f->lhs, out);
    cnf_opaque(f->rhs, out);
    return;
  }
  if (f->kind == Kind::Or) {
    std::vector<Clause> left, right;
    cnf_opaque(f->lhs, left);
    cnf_opaque(f->rhs, right);
    if (left.empty()) return;   // lhs is true, so is the disjunction
    if (right.empty()) return;
    for (const auto& cl : left)
      for (const auto& cr : right) {
        Clause merged = cl;
        merged.insert(merged.end(), cr.begin(), cr.end());
        out.push_back(std::move(merged));
      }
    return;
  }
  throw NormalizeError("formula is not in negation normal form");
}

// ---- Skolemization ----------------------------------------------------------

std::string other_var(const std::string& v) { return v == "x" ? "y" : "x"; }

class Skolemizer {
 public:
  explicit Skolemizer(Sentence s) : s_(std::move(s)) {}

  Sentence run() {
    std::vector<std::pair<std::vector<std::string>, FormulaPtr>> conjuncts;
    split_conjuncts(s_.formula, {}, conjuncts);

    std::vector<FormulaPtr> result;
    for (auto& [prefix, body] : conjuncts) {
      if (!contains_quantifier(body, Kind::Exists)) {
        result.push_back(wrap_prefix(prefix, body));
        continue;
      }
      process(prefix, body, result);
    }
    s_.formula = f_and_all(result);
    return std::move(s_);
  }

 private:
  void process(std::vector<std::string> prefix, FormulaPtr body,
               std::vector<FormulaPtr>& result) {
    body = simplify(nnf(body, true));
    bool changed = true;
    while (changed) {
      changed = false;
      body = rewrite_quantifiers(body, changed);
    }
    // Rewrites may have exposed further conjunctive structure.
    std::vector<std::pair<std::vector<std::string>, FormulaPtr>> parts;
    split_conjuncts(body, prefix, parts);
    for (auto& [pfx, part] : parts) {
      if (!contains_quantifier(part, Kind::Exists)) {
        result.push_back(wrap_prefix(pfx, part));
        continue;
      }
      if (pfx.size() >= 2)
        throw NormalizeError(
            "unsupported sentence shape: existential quantifier in the scope of two "
            "universal variables");
      std::vector<Clause> clauses;
      cnf_opaque(part, clauses);
      for (const auto& clause : clauses) process_clause(pfx, clause, result);
    }
  }

  void process_clause(const std::vector<std::string>& prefix, const Clause& clause,
                      std::vector<FormulaPtr>& result) {
    std::vector<FormulaPtr> plain, foralls, exists;
    for (const auto& lit : clause) {
      if (lit->kind == Kind::Exists)
        exists.push_back(lit);
      else if (lit->kind == Kind::Forall)
        foralls.push_back(lit);
      else
        plain.push_back(lit);
    }
    if (exists.empty() && foralls.empty()) {
      result.push_back(wrap_prefix(prefix, disjoin(plain)));
      return;
    }
    if (foralls.size() > 1 || (!foralls.empty() && !exists.empty()))
      throw NormalizeError(
          "unsupported sentence shape: a disjunction mixes multiple quantified parts");

    if (!foralls.empty()) {
      // (C(v) | forall w B) with w not free in C hoists to forall w (C | B).
      FormulaPtr part = foralls.front();
      std::string w = part->var;
      FormulaPtr inner = part->lhs;
      if (!prefix.empty() && w == prefix.front()) {
        inner = swap_xy(inner);  // rebinding of the prefix variable
        w = other_var(w);
      }
      auto pfx = prefix;
      pfx.push_back(w);
      Clause rest = clause;
      rest.erase(std::remove_if(rest.begin(), rest.end(),
                                [&](const FormulaPtr& l) { return l == part; }),
                 rest.end());
      for (const auto& l : rest)
        if (mentions_var(l, w))
          throw NormalizeError("unsupported sentence shape: hoisting a universal part would "
                               "capture a variable");
      rest.push_back(inner);
      process(pfx, disjoin(rest), result);
      return;
    }

    // Existential clause: C(v) | exists w phi. One Skolem auxiliary with
    // weights (1, -1); A(v) is implied both by C and by any witness, and the
    // sign cancellation removes the models where A holds spuriously.
    std::string v = prefix.empty() ? "" : prefix.front();
    std::string w = prefix.empty() ? "y" : other_var(v);
    FormulaPtr merged = nullptr;
    for (const auto& part : exists) {
      FormulaPtr b = part->lhs;
      if (part->var != w) b = swap_xy(b);
      merged = merged ? f_or(merged, b) : b;
    }
    std::string aux_var = prefix.empty() ? other_var(w) : v;
    int aux = fresh_aux();
    FormulaPtr aux_atom = f_atom(aux, {aux_var});

    std::vector<std::string> pair_prefix = {aux_var, w};
    result.push_back(wrap_prefix(pair_prefix, f_implies(merged, aux_atom)));
    if (!plain.empty()) {
      std::vector<std::string> unary_prefix = {aux_var};
      result.push_back(wrap_prefix(unary_prefix, f_implies(disjoin(plain), aux_atom)));
    }
  }

  static FormulaPtr disjoin(const std::vector<FormulaPtr>& lits) {
    if (lits.empty()) return f_false();
    FormulaPtr acc = lits.front();
    for (std::size_t i = 1; i < lits.size(); ++i) acc = f_or(acc, lits[i]);
    return acc;
  }

  int fresh_aux() {
    while (true) {
      std::string name = "Sk" + std::to_string(next_aux_++);
      if (s_.find_predicate(name) < 0) {
        int idx = s_.add_predicate(name, 1, AxiomRole::SkolemAux);
        s_.weights[idx].pos = rat(1);
        s_.weights[idx].neg = rat(-1);
        return idx;
      }
    }
  }

  Sentence s_;
  int next_aux_ = 0;
};

// ---- definitional inlining --------------------------------------------------

struct Definition {
  int pred;
  std::string var;
  FormulaPtr delta;
};

std::optional<Definition> match_definition(const Sentence& s,
                                           const std::vector<std::string>& prefix,
                                           const FormulaPtr& body) {
  if (prefix.size() != 1 || body->kind != Kind::Iff) return std::nullopt;
  const std::string& v = prefix.front();
  for (bool flip : {false, true}) {
    FormulaPtr head = flip ? body->rhs : body->lhs;
    FormulaPtr delta = flip ? body->lhs : body->rhs;
    if (head->kind != Kind::Atom) continue;
    const Predicate& p = s.predicates[head->pred];
    if (p.arity != 1 || p.role != AxiomRole::None) continue;
    if (head->args != std::vector<std::string>{v}) continue;
    if (!s.weights[head->pred].is_unit()) continue;
    bool constrained = std::any_of(s.constraints.begin(), s.constraints.end(),
                                   [&](const CardinalityConstraint& c) {
                                     return c.pred == head->pred;
                                   });
    if (constrained) continue;
    if (mentions_pred(delta, head->pred)) continue;
    if (!contains_quantifier(delta, Kind::Exists)) continue;
    return Definition{head->pred, v, delta};
  }
  return std::nullopt;
}

FormulaPtr substitute_pred(const FormulaPtr& f, const Definition& def) {
  if (!f) return f;
  if (f->kind == Kind::Atom) {
    if (f->pred != def.pred) return f;
    return f->args.front() == def.var ? def.delta : swap_xy(def.delta);
  }
  auto g = std::make_shared<Formula>(*f);
  g->lhs = substitute_pred(f->lhs, def);
  g->rhs = substitute_pred(f->rhs, def);
  return g;
}

FormulaPtr remap_preds(const FormulaPtr& f, const std::vector<int>& map) {
  if (!f) return f;
  if (f->kind == Kind::Atom) {
    if (map[f->pred] == f->pred) return f;
    auto g = std::make_shared<Formula>(*f);
    g->pred = map[f->pred];
    return g;
  }
  auto l = remap_preds(f->lhs, map);
  auto r = remap_preds(f->rhs, map);
  if (l == f->lhs && r == f->rhs) return f;
  auto g = std::make_shared<Formula>(*f);
  g->lhs = l;
  g->rhs = r;
  return g;
}

// Dropping the definition makes the predicate unconstrained, so it must leave
// the table too, or downstream enumeration would double-count its bit.
void remove_predicate(Sentence& s, int pred) {
  std::vector<int> map(s.predicates.size());
  for (std::size_t i = 0; i < s.predicates.size(); ++i)
    map[i] = static_cast<int>(i) - (static_cast<int>(i) > pred ? 1 : 0);
  s.predicates.erase(s.predicates.begin() + pred);
  s.weights.erase(s.weights.begin() + pred);
  for (auto& c : s.constraints) c.pred = map[c.pred];
  s.formula = remap_preds(s.formula, map);
}

Sentence inline_definitions(Sentence s) {
  bool again = true;
  while (again) {
    again = false;
    std::vector<std::pair<std::vector<std::string>, FormulaPtr>> conjuncts;
    split_conjuncts(s.formula, {}, conjuncts);
    for (std::size_t i = 0; i < conjuncts.size(); ++i) {
      auto def = match_definition(s, conjuncts[i].first, conjuncts[i].second);
      if (!def) continue;
      std::vector<FormulaPtr> rest;
      for (std::size_t j = 0; j < conjuncts.size(); ++j) {
        if (j == i) continue;
        rest.push_back(
            wrap_prefix(conjuncts[j].first, substitute_pred(conjuncts[j].second, *def)));
      }
      s.formula = f_and_all(rest);
      remove_predicate(s, def->pred);
      again = true;
      break;
    }
  }
  return s;
}

}  // namespace

FormulaPtr swap_xy(const FormulaPtr& f) {
  if (!f) return f;
  auto g = std::make_shared<Formula>(*f);
  if (f->kind == Kind::Atom) {
    for (auto& a : g->args) {
      if (a == "x")
        a = "y";
      else if (a == "y")
        a = "x";
    }
    return g;
  }
  if (f->kind == Kind::Forall || f->kind == Kind::Exists)
    g->var = g->var == "x" ? "y" : g->var == "y" ? "x" : g->var;
  g->lhs = swap_xy(f->lhs);
  g->rhs = swap_xy(f->rhs);
  return g;
}

Sentence skolemize(const Sentence& s, const NormalizeOptions& opts) {
  if (!contains_quantifier(s.formula, Kind::Exists)) return s;
  Sentence in = opts.inline_definitions ? inline_definitions(s) : s;
  if (!contains_quantifier(in.formula, Kind::Exists)) return in;
  return Skolemizer(std::move(in)).run();
}

UniversalSentence to_universal_pair_form(const Sentence& s) {
  if (contains_quantifier(s.formula, Kind::Exists))
    throw NormalizeError("input still contains an existential quantifier; skolemize first");

  std::vector<std::pair<std::vector<std::string>, FormulaPtr>> conjuncts;
  split_conjuncts(s.formula, {}, conjuncts);

  std::vector<FormulaPtr> bodies;
  for (auto& [prefix, body] : conjuncts) {
    if (contains_quantifier(body, Kind::Forall))
      throw NormalizeError("unsupported sentence shape: universal quantifier nested inside "
                           "a connective other than conjunction");
    FormulaPtr b = body;
    // Canonical names: outermost prefix variable becomes x, the inner one y.
    if (prefix.size() == 1) {
      if (prefix.front() == "y") b = swap_xy(b);
    } else if (prefix.size() == 2) {
      if (prefix.front() == "y") b = swap_xy(b);
    } else if (prefix.size() > 2) {
      throw NormalizeError("more than two universal variables in a conjunct");
    }
    bodies.push_back(b);
  }

  UniversalSentence u;
  u.psi = f_and_all(bodies);
  u.predicates = s.predicates;
  u.weights = s.weights;
  u.constraints = s.constraints;
  u.linear_order = s.linear_order_pred();
  u.successor = s.successor_pred();
  return u;
}

UniversalSentence augment_axioms(UniversalSentence u) {
  if (u.linear_order >= 0)
    u.psi = f_and(u.psi, f_atom(u.linear_order, {"x", "x"}));
  if (u.successor >= 0)
    u.psi = f_and(u.psi, f_not(f_atom(u.successor, {"x", "x"})));
  return u;
}

UniversalSentence normalize(const Sentence& s, const NormalizeOptions& opts) {
  return augment_axioms(to_universal_pair_form(skolemize(s, opts)));
}

}  // namespace liftcount
