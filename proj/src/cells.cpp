#include "liftcount/cells.hpp"


#include "liftcount/threading.hpp"

namespace liftcount {

namespace {

Pattern atom_pattern(const Formula& atom, int arity) {
  if (arity == 1) return atom.args[0] == "x" ? Pattern::X : Pattern::Y;
  bool ax = atom.args[0] == "x";
  bool bx = atom.args[1] == "x";
  if (ax && bx) return Pattern::XX;
  if (!ax && !bx) return Pattern::YY;
  if (ax) return Pattern::XY;
  return Pattern::YX;
}

template <typename Ctx>
bool eval_formula(const FormulaPtr& f, const Ctx& ctx) {
  switch (f->kind) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return ctx(f->pred, atom_pattern(*f, static_cast<int>(f->args.size())));
    case Kind::Not: return !eval_formula(f->lhs, ctx);
    case Kind::And: return eval_formula(f->lhs, ctx) && eval_formula(f->rhs, ctx);
    case Kind::Or: return eval_formula(f->lhs, ctx) || eval_formula(f->rhs, ctx);
    case Kind::Implies: return !eval_formula(f->lhs, ctx) || eval_formula(f->rhs, ctx);
    case Kind::Iff: return eval_formula(f->lhs, ctx) == eval_formula(f->rhs, ctx);
    default:
      throw CellError("psi must be quantifier-free");
  }
}

uint64_t reverse_bits(uint64_t v, unsigned width) {
  uint64_t out = 0;
  for (unsigned i = 0; i < width; ++i)
    if ((v >> i) & 1) out |= uint64_t{1} << (width - 1 - i);
  return out;
}

}  // namespace

bool evaluate_ground(const FormulaPtr& psi, const UniversalSentence& u,
                     const std::map<std::pair<int, Pattern>, bool>& assignment) {
  auto ctx = [&](int pred, Pattern p) -> bool {
    auto it = assignment.find({pred, p});
    if (it == assignment.end())
      throw CellError("unassigned atom slot for predicate '" + u.predicates[pred].name + "'");
    return it->second;
  };
  return eval_formula(psi, ctx);
}

CellTable::CellTable(const UniversalSentence& u, const Options& opts) : u_(u) {
  one_slots_ = static_cast<unsigned>(u_.predicates.size());
  if (one_slots_ > opts.max_one_slots)
    throw CellError("too many predicates for 1-type enumeration (" +
                    std::to_string(one_slots_) + " slots)");
  two_slot_of_pred_.assign(u_.predicates.size(), -1);
  for (std::size_t p = 0; p < u_.predicates.size(); ++p) {
    if (u_.predicates[p].arity == 2) {
      two_slot_of_pred_[p] = static_cast<int>(2 * binary_preds_.size());
      binary_preds_.push_back(static_cast<int>(p));
    }
  }
  if (two_slot_count() > opts.max_two_slots)
    throw CellError("too many binary predicates for 2-table enumeration");

  table_weights_.reserve(two_table_count());
  for (std::size_t t = 0; t < two_table_count(); ++t) {
    Rational w = rat(1);
    for (unsigned slot = 0; slot < two_slot_count(); ++slot) {
      int pred = binary_preds_[slot / 2];
      w *= ((t >> slot) & 1) ? u_.weights[pred].pos : u_.weights[pred].neg;
    }
    table_weights_.push_back(std::move(w));
  }

  enumerate_one_types();
  build_r_tables(opts.threads == 0 ? worker_count() : opts.threads);
}

bool CellTable::eval_self(uint64_t c) const {
  auto ctx = [&](int pred, Pattern) -> bool { return (c >> pred) & 1; };
  return eval_formula(u_.psi, ctx);
}

bool CellTable::eval_pair(uint64_t cs, uint64_t ct, uint64_t table, bool swapped) const {
  auto ctx = [&](int pred, Pattern p) -> bool {
    switch (p) {
      case Pattern::X: return ((swapped ? ct : cs) >> pred) & 1;
      case Pattern::Y: return ((swapped ? cs : ct) >> pred) & 1;
      case Pattern::XX: return ((swapped ? ct : cs) >> pred) & 1;
      case Pattern::YY: return ((swapped ? cs : ct) >> pred) & 1;
      case Pattern::XY: return (table >> (two_slot_of_pred_[pred] + (swapped ? 1 : 0))) & 1;
      case Pattern::YX: return (table >> (two_slot_of_pred_[pred] + (swapped ? 0 : 1))) & 1;
    }
    return false;
  };
  return eval_formula(u_.psi, ctx);
}

bool CellTable::one_type_assignment_valid(uint64_t bits) const { return eval_self(bits); }

void CellTable::enumerate_one_types() {
  uint64_t total = uint64_t{1} << one_slots_;
  for (uint64_t v = 0; v < total; ++v) {
    uint64_t bits = reverse_bits(v, one_slots_);  // lexicographic on slot order
    if (!eval_self(bits)) continue;
    types_.push_back(bits);
    Rational w = rat(1);
    for (unsigned p = 0; p < one_slots_; ++p)
      w *= ((bits >> p) & 1) ? u_.weights[p].pos : u_.weights[p].neg;
    weights_.push_back(std::move(w));
  }
}

Rational CellTable::two_table_weight(std::size_t table) const { return table_weights_[table]; }

void CellTable::build_r_tables(std::size_t threads) {
  int u = count();
  if (u == 0) return;
  r_plain_.assign(static_cast<std::size_t>(u) * u, rat(0));
  bool lso = axiom_mode();
  if (lso) r_lso_.assign(static_cast<std::size_t>(u) * u * 3, rat(0));

  int lslot = lso ? two_slot_of_pred_[u_.linear_order] : -1;
  int sslot = lso ? two_slot_of_pred_[u_.successor] : -1;

  std::size_t pairs = static_cast<std::size_t>(u) * u;
  parallel_chunks(pairs, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t st = begin; st < end; ++st) {
      int s = static_cast<int>(st) / u;
      int t = static_cast<int>(st) % u;
      Rational plain = rat(0);
      Rational by_k[3] = {rat(0), rat(0), rat(0)};
      for (std::size_t table = 0; table < two_table_count(); ++table) {
        if (!eval_pair(types_[s], types_[t], table, false)) continue;
        if (!eval_pair(types_[s], types_[t], table, true)) continue;
        plain += table_weights_[table];
        if (!lso) continue;
        if (((table >> lslot) & 1) == 0 || ((table >> (lslot + 1)) & 1) != 0) continue;
        bool sxy = (table >> sslot) & 1;
        bool syx = (table >> (sslot + 1)) & 1;
        if (!sxy && !syx)
          by_k[0] += table_weights_[table];
        else if (sxy && !syx)
          by_k[1] += table_weights_[table];
        else if (!sxy && syx)
          by_k[2] += table_weights_[table];
      }
      r_plain_[st] = std::move(plain);
      if (lso)
        for (int k = 0; k < 3; ++k) r_lso_[st * 3 + k] = std::move(by_k[k]);
    }
  });
}

std::string CellTable::describe_one_type(int type) const {
  std::string out;
  for (unsigned p = 0; p < one_slots_; ++p) {
    if (p) out += " ";
    bool pos = (types_[type] >> p) & 1;
    if (!pos) out += "~";
    out += u_.predicates[p].name;
    out += u_.predicates[p].arity == 1 ? "(x)" : "(x,x)";
  }
  return out;
}

}  // namespace liftcount
