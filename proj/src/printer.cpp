#include "liftcount/printer.hpp"

#include <sstream>

namespace liftcount {

namespace {

// Binding strength; quantifiers are weakest since their body is maximal.
int prec(Kind k) {
  switch (k) {
    case Kind::Forall:
    case Kind::Exists: return 0;
    case Kind::Iff: return 1;
    case Kind::Implies: return 2;
    case Kind::Or: return 3;
    case Kind::And: return 4;
    case Kind::Not: return 5;
    default: return 6;
  }
}

void print(const FormulaPtr& f, const Sentence& s, int min_prec, std::ostream& out) {
  int p = prec(f->kind);
  bool parens = p < min_prec;
  if (parens) out << '(';
  switch (f->kind) {
    case Kind::True:
      out << "true";
      break;
    case Kind::False:
      out << "false";
      break;
    case Kind::Atom: {
      out << s.predicates[f->pred].name << '(';
      for (std::size_t i = 0; i < f->args.size(); ++i) {
        if (i) out << ',';
        out << f->args[i];
      }
      out << ')';
      break;
    }
    case Kind::Not:
      out << '~';
      print(f->lhs, s, p, out);
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Iff:
      print(f->lhs, s, p, out);
      out << (f->kind == Kind::And ? " & " : f->kind == Kind::Or ? " | " : " <-> ");
      print(f->rhs, s, p + 1, out);
      break;
    case Kind::Implies:
      print(f->lhs, s, p + 1, out);
      out << " -> ";
      print(f->rhs, s, p, out);
      break;
    case Kind::Forall:
    case Kind::Exists:
      out << (f->kind == Kind::Forall ? "forall " : "exists ") << f->var << ". ";
      print(f->lhs, s, 0, out);
      break;
  }
  if (parens) out << ')';
}

}  // namespace

std::string pretty_print(const FormulaPtr& f, const Sentence& s) {
  std::ostringstream out;
  print(f, s, 0, out);
  return out.str();
}

std::string pretty_print(const Sentence& s) {
  std::ostringstream out;
  for (const auto& p : s.predicates) {
    if (p.role == AxiomRole::LinearOrder) out << "#axiom linear_order " << p.name << '\n';
    if (p.role == AxiomRole::Successor) out << "#axiom successor " << p.name << '\n';
  }
  for (std::size_t i = 0; i < s.predicates.size(); ++i)
    if (!s.weights[i].is_unit())
      out << "#weight " << s.predicates[i].name << ' ' << to_string(s.weights[i].pos) << ' '
          << to_string(s.weights[i].neg) << '\n';
  for (const auto& c : s.constraints)
    out << "#cardinality " << s.predicates[c.pred].name << ' ' << cmp_text(c.cmp) << ' '
        << c.bound << '\n';
  out << pretty_print(s.formula, s) << '\n';
  return out.str();
}

}  // namespace liftcount
