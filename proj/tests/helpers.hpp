#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liftcount/normalize.hpp"
#include "liftcount/parser.hpp"

namespace liftcount::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing test file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Sentence load_corpus(const std::string& name) {
  return parse_sentence(read_file(std::string(LIFTCOUNT_CORPUS_DIR) + "/" + name));
}

inline std::string corpus_path(const std::string& name) {
  return std::string(LIFTCOUNT_CORPUS_DIR) + "/" + name;
}

// Random quantifier-free formulas over a fixed small vocabulary; atoms pick
// from the given list. Depth-bounded, seeded, deterministic.
class FormulaGen {
 public:
  FormulaGen(unsigned seed, std::vector<std::string> atoms)
      : rng_(seed), atoms_(std::move(atoms)) {}

  std::string gen(int depth) {
    if (depth == 0 || chance(3)) return atom();
    switch (rng_() % 4) {
      case 0: return "~" + gen(depth - 1);
      case 1: return "(" + gen(depth - 1) + " & " + gen(depth - 1) + ")";
      case 2: return "(" + gen(depth - 1) + " | " + gen(depth - 1) + ")";
      default: return "(" + gen(depth - 1) + " -> " + gen(depth - 1) + ")";
    }
  }

  std::string atom() { return atoms_[rng_() % atoms_.size()]; }
  bool chance(unsigned one_in) { return rng_() % one_in == 0; }
  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  std::vector<std::string> atoms_;
};

// Axiom-free random sentence: forall x forall y psi over <=2 unary + 1 binary.
inline std::string random_fo2_sentence(unsigned seed, bool weighted) {
  FormulaGen g(seed, {"U1(x)", "U1(y)", "U2(x)", "U2(y)", "R(x,y)", "R(y,x)", "R(x,x)"});
  std::string psi = g.gen(3);
  std::string text;
  if (weighted) text += "#weight R 2 1\n#weight U1 3 1\n";
  // Every predicate must occur so directives resolve; fold them in harmlessly.
  text += "forall x. forall y. ((U1(x) | ~U1(x)) & (U2(x) | ~U2(x)) & (R(x,y) | ~R(x,y)) & " +
          psi + ")";
  return text;
}

// Axiom-mode random sentence over L, S, <=2 unary and optionally one extra
// binary predicate.
inline std::string random_lso_sentence(unsigned seed, bool extra_binary) {
  std::vector<std::string> atoms = {"U1(x)", "U1(y)", "U2(x)",   "U2(y)",
                                    "S(x,y)", "S(y,x)", "L(x,y)", "L(y,x)"};
  if (extra_binary) {
    atoms.push_back("B(x,y)");
    atoms.push_back("B(y,x)");
  }
  FormulaGen g(seed, atoms);
  std::string psi = g.gen(3);
  std::string text = "#axiom linear_order L\n#axiom successor S\n";
  std::string closure = "(U1(x) | ~U1(x)) & (U2(x) | ~U2(x))";
  if (extra_binary) closure += " & (B(x,y) | ~B(x,y))";
  text += "forall x. forall y. (" + closure + " & " + psi + ")";
  return text;
}

// Random sentence with one existential quantifier, for the Skolemization
// preservation suite. Shapes rotate through the supported patterns.
inline std::string random_exists_sentence(unsigned seed) {
  FormulaGen g(seed, {"P(x)", "R(x,y)", "R(y,x)", "P(y)"});
  std::string body = g.gen(2);
  std::string guard = "forall x. forall y. ((P(x) | ~P(x)) & (R(x,y) | ~R(x,y)))";
  switch (seed % 4) {
    case 0:  // plain forall-exists
      return "(forall x. exists y. " + body + ") & " + guard;
    case 1:  // clause with a unary context literal
      return "(forall x. (P(x) | (exists y. " + body + "))) & " + guard;
    case 2: {  // definition by iff, negative occurrence
      FormulaGen g2(seed * 31 + 7, {"R(x,y)", "R(y,x)"});
      return "(forall x. (P(x) <-> ~(exists y. " + g2.gen(1) + "))) & forall x. forall y. (R(x,y) | ~R(x,y))";
    }
    default: {  // propositional existential conjunct: body over y only
      FormulaGen g3(seed * 17 + 3, {"P(y)", "R(y,y)"});
      return "(exists y. (P(y) & " + g3.gen(1) + ")) & " + guard;
    }
  }
}

// Axiom-mode sentence with an existential clause, exercising Skolem
// cancellation inside the segment DP.
inline std::string random_lso_exists_sentence(unsigned seed) {
  FormulaGen g(seed, {"S(x,y)", "S(y,x)", "L(x,y)", "U1(y)", "U1(x)"});
  std::string text = "#axiom linear_order L\n#axiom successor S\n";
  text += "(forall x. (U1(x) | (exists y. " + g.gen(2) + ")))";
  text += " & (forall x. forall y. (U1(x) | ~U1(x)))";
  return text;
}

}  // namespace liftcount::testing
