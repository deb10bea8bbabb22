#include "liftcount/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <vector>

#include "liftcount/threading.hpp"

namespace liftcount {

namespace {

// Ground truth bits per predicate: unary uses slots [0, n), binary slot
// i*n + j for the literal P(i+1, j+1). n <= 8 keeps every predicate in one
// 64-bit word.
struct Interp {
  unsigned n;
  std::vector<uint64_t> bits;

  bool get(int pred, unsigned i, unsigned j, bool binary) const {
    unsigned slot = binary ? i * n + j : i;
    return (bits[pred] >> slot) & 1;
  }
};

struct CompiledAtom {
  int pred;
  bool binary;
  int v1, v2;  // variable ids
};

// Formula with interned variables for fast recursive evaluation.
struct Compiled {
  struct Node {
    Kind kind;
    int a = -1, b = -1;
    CompiledAtom atom{};
    int var = -1;
  };
  std::vector<Node> nodes;
  int root = -1;
  unsigned num_vars = 0;
};

int compile_rec(const FormulaPtr& f, Compiled& out, std::vector<std::string>& names) {
  Compiled::Node node;
  node.kind = f->kind;
  switch (f->kind) {
    case Kind::True:
    case Kind::False:
      break;
    case Kind::Atom: {
      node.atom.pred = f->pred;
      node.atom.binary = f->args.size() == 2;
      auto intern = [&](const std::string& v) {
        auto it = std::find(names.begin(), names.end(), v);
        if (it == names.end()) {
          names.push_back(v);
          return static_cast<int>(names.size()) - 1;
        }
        return static_cast<int>(it - names.begin());
      };
      node.atom.v1 = intern(f->args[0]);
      node.atom.v2 = node.atom.binary ? intern(f->args[1]) : -1;
      break;
    }
    case Kind::Not:
      node.a = compile_rec(f->lhs, out, names);
      break;
    case Kind::Forall:
    case Kind::Exists: {
      auto it = std::find(names.begin(), names.end(), f->var);
      if (it == names.end()) {
        names.push_back(f->var);
        node.var = static_cast<int>(names.size()) - 1;
      } else {
        node.var = static_cast<int>(it - names.begin());
      }
      node.a = compile_rec(f->lhs, out, names);
      break;
    }
    default:
      node.a = compile_rec(f->lhs, out, names);
      node.b = compile_rec(f->rhs, out, names);
      break;
  }
  out.nodes.push_back(node);
  return static_cast<int>(out.nodes.size()) - 1;
}

Compiled compile(const FormulaPtr& f) {
  Compiled c;
  std::vector<std::string> names;
  c.root = compile_rec(f, c, names);
  c.num_vars = static_cast<unsigned>(names.size());
  return c;
}

bool eval_node(const Compiled& c, int idx, const Interp& w, std::vector<unsigned>& env) {
  const auto& node = c.nodes[idx];
  switch (node.kind) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: {
      unsigned i = env[node.atom.v1];
      unsigned j = node.atom.binary ? env[node.atom.v2] : 0;
      return w.get(node.atom.pred, i, j, node.atom.binary);
    }
    case Kind::Not: return !eval_node(c, node.a, w, env);
    case Kind::And: return eval_node(c, node.a, w, env) && eval_node(c, node.b, w, env);
    case Kind::Or: return eval_node(c, node.a, w, env) || eval_node(c, node.b, w, env);
    case Kind::Implies: return !eval_node(c, node.a, w, env) || eval_node(c, node.b, w, env);
    case Kind::Iff: return eval_node(c, node.a, w, env) == eval_node(c, node.b, w, env);
    case Kind::Forall:
      for (unsigned e = 0; e < w.n; ++e) {
        env[node.var] = e;
        if (!eval_node(c, node.a, w, env)) return false;
      }
      return true;
    case Kind::Exists:
      for (unsigned e = 0; e < w.n; ++e) {
        env[node.var] = e;
        if (eval_node(c, node.a, w, env)) return true;
      }
      return false;
  }
  return false;
}

struct OracleSetup {
  const Sentence& s;
  unsigned n;
  Compiled compiled;
  int lpred = -1, spred = -1;
  std::vector<std::pair<int, unsigned>> free_slots;  // (pred, slot)
  std::vector<std::vector<Rational>> pos_pow, neg_pow;
  std::vector<int> weighted_preds;
  std::vector<unsigned> slot_count;  // per pred
  std::vector<std::vector<unsigned>> perms;

  OracleSetup(const Sentence& sent, unsigned n_, const OracleLimits& limits)
      : s(sent), n(n_), compiled(compile(sent.formula)) {
    if (n < 1) throw OracleCapExceeded("oracle requires n >= 1");
    if (n > limits.max_n)
      throw OracleCapExceeded("oracle cap exceeded: n = " + std::to_string(n) + " > " +
                              std::to_string(limits.max_n));
    if (n > 8)  // one 64-bit word per binary relation
      throw OracleCapExceeded("oracle interpretations cap the domain size at 8");
    lpred = s.linear_order_pred();
    spred = s.successor_pred();
    if ((lpred >= 0) != (spred >= 0))
      throw OracleCapExceeded(
          "oracle supports either both axiom roles or neither; declare both");

    slot_count.resize(s.predicates.size());
    for (std::size_t p = 0; p < s.predicates.size(); ++p) {
      bool binary = s.predicates[p].arity == 2;
      slot_count[p] = binary ? n * n : n;
      if (static_cast<int>(p) == lpred || static_cast<int>(p) == spred) continue;
      for (unsigned slot = 0; slot < slot_count[p]; ++slot)
        free_slots.emplace_back(static_cast<int>(p), slot);
    }
    if (free_slots.size() > limits.max_free_bits)
      throw OracleCapExceeded("oracle cap exceeded: " + std::to_string(free_slots.size()) +
                              " free ground literals > " + std::to_string(limits.max_free_bits));

    pos_pow.resize(s.predicates.size());
    neg_pow.resize(s.predicates.size());
    for (std::size_t p = 0; p < s.predicates.size(); ++p) {
      if (s.weights[p].is_unit()) continue;
      weighted_preds.push_back(static_cast<int>(p));
      pos_pow[p].resize(slot_count[p] + 1);
      neg_pow[p].resize(slot_count[p] + 1);
      for (unsigned e = 0; e <= slot_count[p]; ++e) {
        pos_pow[p][e] = pow_rational(s.weights[p].pos, e);
        neg_pow[p][e] = pow_rational(s.weights[p].neg, e);
      }
    }

    if (spred >= 0) {
      std::vector<unsigned> perm(n);
      std::iota(perm.begin(), perm.end(), 0u);
      do {
        perms.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      perms.push_back({});  // single pseudo-permutation, no S to fix
    }
  }

  Interp base_interp(const std::vector<unsigned>& perm) const {
    Interp w;
    w.n = n;
    w.bits.assign(s.predicates.size(), 0);
    if (lpred >= 0)
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) w.bits[lpred] |= uint64_t{1} << (i * n + j);
    if (spred >= 0)
      for (unsigned i = 0; i + 1 < n; ++i)
        w.bits[spred] |= uint64_t{1} << (perm[i] * n + perm[i + 1]);
    return w;
  }

  bool passes_constraints(const Interp& w) const {
    for (const auto& c : s.constraints) {
      unsigned count = std::popcount(w.bits[c.pred]);
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

  bool is_model(const Interp& w, std::vector<unsigned>& env) const {
    return eval_node(compiled, compiled.root, w, env) && passes_constraints(w);
  }

  Rational model_weight(const Interp& w) const {
    Rational weight = rat(1);
    for (int p : weighted_preds) {
      unsigned pos = std::popcount(w.bits[p]);
      weight *= pos_pow[p][pos];
      weight *= neg_pow[p][slot_count[p] - pos];
    }
    return weight;
  }

  // Sum over the free-bit range [begin, end) for one fixed permutation,
  // walking interpretations in Gray-code order so each step flips one bit.
  Rational sum_range(const std::vector<unsigned>& perm, uint64_t begin, uint64_t end) const {
    Interp w = base_interp(perm);
    std::vector<unsigned> env(std::max(1u, compiled.num_vars), 0);
    auto apply_gray = [&](uint64_t gray) {
      for (std::size_t b = 0; b < free_slots.size(); ++b)
        if ((gray >> b) & 1) {
          auto [pred, slot] = free_slots[b];
          w.bits[pred] ^= uint64_t{1} << slot;
        }
    };
    uint64_t gray = begin ^ (begin >> 1);
    apply_gray(gray);
    Rational sum = rat(0);
    for (uint64_t v = begin;;) {
      if (is_model(w, env)) sum += model_weight(w);
      if (++v >= end) break;
      uint64_t next = v ^ (v >> 1);
      uint64_t flip = gray ^ next;
      auto [pred, slot] = free_slots[std::countr_zero(flip)];
      w.bits[pred] ^= uint64_t{1} << slot;
      gray = next;
    }
    return sum;
  }
};

}  // namespace

Rational brute_force_wfomc(const Sentence& s, unsigned n, bool fixed_order,
                           const OracleLimits& limits) {
  OracleSetup setup(s, n, limits);
  uint64_t combos = uint64_t{1} << setup.free_slots.size();
  std::size_t threads = limits.threads == 0 ? worker_count() : limits.threads;

  Rational total = rat(0);
  if (setup.perms.size() >= threads * 2 || combos < 4096) {
    std::vector<Rational> partial(threads, rat(0));
    parallel_chunks(setup.perms.size(), threads,
                    [&](std::size_t wk, std::size_t begin, std::size_t end) {
                      for (std::size_t p = begin; p < end; ++p)
                        partial[wk] += setup.sum_range(setup.perms[p], 0, combos);
                    });
    for (auto& p : partial) total += p;
  } else {
    for (const auto& perm : setup.perms) {
      std::vector<Rational> partial(threads, rat(0));
      parallel_chunks(combos, threads, [&](std::size_t wk, std::size_t begin, std::size_t end) {
        partial[wk] += setup.sum_range(perm, begin, end);
      });
      for (auto& p : partial) total += p;
    }
  }

  if (!fixed_order && setup.spred >= 0) total *= Rational(factorial(n));
  return total;
}

std::optional<std::string> oracle_witness(const Sentence& s, unsigned n,
                                          const OracleLimits& limits) {
  OracleSetup setup(s, n, limits);
  uint64_t combos = uint64_t{1} << setup.free_slots.size();
  std::vector<unsigned> env(std::max(1u, setup.compiled.num_vars), 0);
  for (const auto& perm : setup.perms) {
    Interp w = setup.base_interp(perm);
    for (uint64_t v = 0; v < combos; ++v) {
      uint64_t gray = v ^ (v >> 1);
      Interp cur = w;
      for (std::size_t b = 0; b < setup.free_slots.size(); ++b)
        if ((gray >> b) & 1) {
          auto [pred, slot] = setup.free_slots[b];
          cur.bits[pred] ^= uint64_t{1} << slot;
        }
      if (!setup.is_model(cur, env)) continue;
      std::ostringstream out;
      bool first = true;
      for (std::size_t p = 0; p < s.predicates.size(); ++p) {
        bool binary = s.predicates[p].arity == 2;
        for (unsigned i = 0; i < n; ++i)
          for (unsigned j = 0; j < (binary ? n : 1u); ++j) {
            if (!cur.get(static_cast<int>(p), i, j, binary)) continue;
            if (!first) out << ' ';
            first = false;
            out << s.predicates[p].name << '(' << i + 1;
            if (binary) out << ',' << j + 1;
            out << ')';
          }
      }
      if (first) out << "(empty interpretation)";
      return out.str();
    }
  }
  return std::nullopt;
}

}  // namespace liftcount
