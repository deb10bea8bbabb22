#include "liftcount/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace liftcount {

namespace {

enum class Tok {
  LParen,
  RParen,
  Tilde,
  Amp,
  Pipe,
  Arrow,
  IffOp,
  Dot,
  Comma,
  Forall,
  Exists,
  TrueLit,
  FalseLit,
  PredName,  // identifier starting uppercase
  VarName,   // identifier starting lowercase
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  Lexer(const std::string& src, int line) : src_(src), line_(line) {}

  void run(std::vector<Token>& out) {
    std::size_t i = 0;
    while (i < src_.size()) {
      char c = src_[i];
      int col = static_cast<int>(i) + 1;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      switch (c) {
        case '(': out.push_back({Tok::LParen, "(", line_, col}); ++i; continue;
        case ')': out.push_back({Tok::RParen, ")", line_, col}); ++i; continue;
        case '~': out.push_back({Tok::Tilde, "~", line_, col}); ++i; continue;
        case '&': out.push_back({Tok::Amp, "&", line_, col}); ++i; continue;
        case '|': out.push_back({Tok::Pipe, "|", line_, col}); ++i; continue;
        case '.': out.push_back({Tok::Dot, ".", line_, col}); ++i; continue;
        case ',': out.push_back({Tok::Comma, ",", line_, col}); ++i; continue;
        case '-':
          if (i + 1 < src_.size() && src_[i + 1] == '>') {
            out.push_back({Tok::Arrow, "->", line_, col});
            i += 2;
            continue;
          }
          throw ParseError(line_, col, "stray '-'");
        case '<':
          if (i + 2 < src_.size() && src_[i + 1] == '-' && src_[i + 2] == '>') {
            out.push_back({Tok::IffOp, "<->", line_, col});
            i += 3;
            continue;
          }
          throw ParseError(line_, col, "stray '<'");
        default:
          break;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < src_.size() && ident_char(src_[j])) ++j;
        std::string word = src_.substr(i, j - i);
        Tok kind;
        if (word == "forall")
          kind = Tok::Forall;
        else if (word == "exists")
          kind = Tok::Exists;
        else if (word == "true")
          kind = Tok::TrueLit;
        else if (word == "false")
          kind = Tok::FalseLit;
        else if (std::isupper(static_cast<unsigned char>(c)))
          kind = Tok::PredName;
        else
          kind = Tok::VarName;
        out.push_back({kind, word, line_, col});
        i = j;
        continue;
      }
      throw ParseError(line_, col, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  const std::string& src_;
  int line_;
};

// Precedence: ~ > & > | > -> > <->; '&'/'|'/'<->' left-associative,
// '->' right-associative, quantifier bodies extend as far right as possible.
class FormulaParser {
 public:
  FormulaParser(std::vector<Token> toks, Sentence& sentence)
      : toks_(std::move(toks)), s_(sentence) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_iff();
    expect_end();
    return f;
  }

 private:
  const Token& peek() const {
    static Token end_tok{Tok::End, "", 0, 0};
    return pos_ < toks_.size() ? toks_[pos_] : end_tok;
  }
  Token take() {
    Token t = peek();
    if (pos_ < toks_.size()) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    if (t.kind == Tok::End) {
      int line = toks_.empty() ? 1 : toks_.back().line;
      throw ParseError(line, 0, msg + " (at end of input)");
    }
    throw ParseError(t.line, t.col, msg + " (found '" + t.text + "')");
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail(peek(), "trailing input after formula");
  }

  FormulaPtr parse_iff() {
    FormulaPtr lhs = parse_implies();
    while (peek().kind == Tok::IffOp) {
      take();
      lhs = f_iff(lhs, parse_implies());
    }
    return lhs;
  }

  FormulaPtr parse_implies() {
    FormulaPtr lhs = parse_or();
    if (peek().kind == Tok::Arrow) {
      take();
      return f_implies(lhs, parse_implies());
    }
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    while (peek().kind == Tok::Pipe) {
      take();
      lhs = f_or(lhs, parse_and());
    }
    return lhs;
  }

  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    while (peek().kind == Tok::Amp) {
      take();
      lhs = f_and(lhs, parse_unary());
    }
    return lhs;
  }

  FormulaPtr parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
        take();
        return f_not(parse_unary());
      case Tok::Forall:
      case Tok::Exists: {
        Token q = take();
        Token v = take();
        if (v.kind != Tok::VarName)
          fail(v, "expected a variable name after '" + q.text + "'");
        Token dot = take();
        if (dot.kind != Tok::Dot) fail(dot, "expected '.' after quantified variable");
        FormulaPtr body = parse_iff();
        return q.kind == Tok::Forall ? f_forall(v.text, body) : f_exists(v.text, body);
      }
      default:
        return parse_primary();
    }
  }

  FormulaPtr parse_primary() {
    Token t = take();
    switch (t.kind) {
      case Tok::LParen: {
        FormulaPtr f = parse_iff();
        Token close = take();
        if (close.kind != Tok::RParen) fail(close, "expected ')'");
        return f;
      }
      case Tok::TrueLit:
        return f_true();
      case Tok::FalseLit:
        return f_false();
      case Tok::PredName: {
        Token open = take();
        if (open.kind != Tok::LParen)
          fail(open, "expected '(' after predicate '" + t.text + "'");
        std::vector<std::string> args;
        while (true) {
          Token a = take();
          if (a.kind != Tok::VarName) fail(a, "expected a variable in atom arguments");
          args.push_back(a.text);
          Token sep = take();
          if (sep.kind == Tok::RParen) break;
          if (sep.kind != Tok::Comma) fail(sep, "expected ',' or ')' in atom arguments");
        }
        int arity = static_cast<int>(args.size());
        if (arity < 1 || arity > 2)
          throw ParseError(t.line, t.col,
                           "predicate '" + t.text + "' used with arity " +
                               std::to_string(arity) + "; only arity 1 or 2 is supported");
        int idx = s_.find_predicate(t.text);
        if (idx < 0) {
          idx = s_.add_predicate(t.text, arity);
        } else if (s_.predicates[idx].arity != arity) {
          throw ParseError(t.line, t.col,
                           "arity mismatch for predicate '" + t.text + "': used with " +
                               std::to_string(arity) + " argument(s) but previously with " +
                               std::to_string(s_.predicates[idx].arity));
        }
        return f_atom(idx, std::move(args));
      }
      case Tok::VarName:
        fail(t, "expected a formula; predicates start with an uppercase letter");
      default:
        fail(t, "expected a formula");
    }
  }

  std::vector<Token> toks_;
  Sentence& s_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream in(line);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

struct Directive {
  int line;
  std::vector<std::string> words;
};

void apply_directives(Sentence& s, const std::vector<Directive>& directives) {
  for (const auto& d : directives) {
    const auto& w = d.words;
    auto resolve = [&](const std::string& name, const char* what) {
      int idx = s.find_predicate(name);
      if (idx < 0)
        throw ParseError(d.line, 1,
                         std::string(what) + " names unknown predicate '" + name + "'");
      return idx;
    };
    if (w[0] == "#axiom") {
      if (w.size() != 3 || (w[1] != "linear_order" && w[1] != "successor"))
        throw ParseError(d.line, 1, "expected '#axiom linear_order <P>' or '#axiom successor <P>'");
      int idx = s.find_predicate(w[2]);
      if (idx < 0) idx = s.add_predicate(w[2], 2);  // axiom relations need not occur in psi
      if (s.predicates[idx].arity != 2)
        throw ParseError(d.line, 1, "axiom predicate '" + w[2] + "' must be binary");
      AxiomRole role = w[1] == "linear_order" ? AxiomRole::LinearOrder : AxiomRole::Successor;
      for (const auto& p : s.predicates)
        if (p.role == role)
          throw ParseError(d.line, 1, "duplicate " + w[1] + " axiom declaration");
      if (s.predicates[idx].role != AxiomRole::None)
        throw ParseError(d.line, 1, "predicate '" + w[2] + "' already carries an axiom role");
      s.predicates[idx].role = role;
    } else if (w[0] == "#weight") {
      if (w.size() != 4)
        throw ParseError(d.line, 1, "expected '#weight <P> <w> <wbar>'");
      int idx = resolve(w[1], "#weight");
      try {
        s.weights[idx].pos = parse_rational(w[2]);
        s.weights[idx].neg = parse_rational(w[3]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(d.line, 1, e.what());
      }
    } else if (w[0] == "#cardinality") {
      if (w.size() != 4)
        throw ParseError(d.line, 1, "expected '#cardinality <P> <cmp> <k>'");
      int idx = s.find_predicate(w[1]);
      if (idx < 0) idx = s.add_predicate(w[1], 1);
      if (s.predicates[idx].arity != 1)
        throw ParseError(d.line, 1,
                         "cardinality constraints are supported on unary predicates only; '" +
                             w[1] + "' is binary");
      Cmp cmp;
      if (w[2] == "<")
        cmp = Cmp::Less;
      else if (w[2] == "<=")
        cmp = Cmp::LessEq;
      else if (w[2] == "=")
        cmp = Cmp::Eq;
      else if (w[2] == ">=")
        cmp = Cmp::GreaterEq;
      else if (w[2] == ">")
        cmp = Cmp::Greater;
      else
        throw ParseError(d.line, 1, "unknown comparator '" + w[2] + "'");
      unsigned long bound = 0;
      try {
        std::size_t used = 0;
        bound = std::stoul(w[3], &used);
        if (used != w[3].size()) throw std::invalid_argument(w[3]);
      } catch (const std::exception&) {
        throw ParseError(d.line, 1, "cardinality bound must be a natural number, got '" + w[3] + "'");
      }
      s.constraints.push_back({idx, cmp, bound});
    } else {
      throw ParseError(d.line, 1, "unknown directive '" + w[0] + "'");
    }
  }
}

void check_closed(const Sentence& s) {
  std::vector<std::string> free;
  free_variables(s.formula, free);
  if (!free.empty())
    throw ParseError(1, 1, "formula is not closed: variable '" + free.front() + "' is free");
}

}  // namespace

void check_two_variable(const Sentence& s) {
  struct Walker {
    const Sentence& s;
    void walk(const FormulaPtr& f) {
      if (!f) return;
      if (f->kind == Kind::Atom) {
        for (const auto& v : f->args)
          if (v != "x" && v != "y")
            throw ParseError(1, 1,
                             "atom " + s.predicates[f->pred].name +
                                 " uses variable '" + v +
                                 "'; only x and y are allowed in the two-variable fragment");
        return;
      }
      if (f->kind == Kind::Forall || f->kind == Kind::Exists) {
        if (f->var != "x" && f->var != "y")
          throw ParseError(1, 1,
                           "quantifier binds '" + f->var +
                               "'; only x and y are allowed in the two-variable fragment");
      }
      walk(f->lhs);
      walk(f->rhs);
    }
  };
  Walker{s}.walk(s.formula);
}

Sentence parse_sentence(const std::string& text) {
  Sentence s;
  std::vector<Directive> directives;
  std::vector<Token> formula_tokens;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      auto words = split_words(line);
      if (words.empty()) continue;
      directives.push_back({line_no, std::move(words)});
      continue;
    }
    Lexer lex(line, line_no);
    lex.run(formula_tokens);
  }

  if (formula_tokens.empty()) throw ParseError(line_no, 1, "input contains no formula");

  FormulaParser fp(std::move(formula_tokens), s);
  s.formula = fp.parse();
  apply_directives(s, directives);
  check_closed(s);
  check_two_variable(s);
  return s;
}

}  // namespace liftcount
