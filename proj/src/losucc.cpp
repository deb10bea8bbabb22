#include "liftcount/losucc.hpp"

#include <cassert>
#include <mutex>

#include "liftcount/cardinality.hpp"
#include "liftcount/threading.hpp"

namespace liftcount {

namespace {

struct SegCell {
  int head, tail;
  unsigned count;
};

class DpEngine {
 public:
  DpEngine(const CellTable& cells, unsigned long n, const LosuccOptions& opts)
      : cells_(cells),
        u_(cells.count()),
        n_(n),
        threads_(opts.threads == 0 ? worker_count() : opts.threads),
        prune_upper_(opts.prune_cardinality_upper && !cells.sentence().constraints.empty()) {
    // r_{s,t,1} powers up to the largest exponent a count vector can reach.
    pow1_.resize(static_cast<std::size_t>(u_) * u_);
    for (int s = 0; s < u_; ++s)
      for (int t = 0; t < u_; ++t) {
        auto& column = pow1_[s * u_ + t];
        column.resize(n_ + 1);
        column[0] = rat(1);
        for (unsigned long e = 1; e <= n_; ++e) column[e] = column[e - 1] * cells.r_lso(s, t, 1);
      }
  }

  DpLayer init_layer() const {
    DpLayer layer;
    layer.m = 1;
    layer.u = u_;
    for (int t = 0; t < u_; ++t) {
      if (cells_.type_weight(t) == 0) continue;
      DpKey key(u_ + u_ * u_, 0);
      key[t] = 1;
      key[u_ + t * u_ + t] = 1;
      if (prune_upper_ && !upper_ok(key)) continue;
      layer.table.emplace(std::move(key), cells_.type_weight(t));
    }
    return layer;
  }

  DpLayer step(const DpLayer& prev, unsigned m) const {
    DpLayer next;
    next.m = m;
    next.u = u_;
    unsigned bound = static_cast<unsigned>(n_ - m + 1);  // max segments still mergeable to 1

    std::vector<const std::pair<const DpKey, Rational>*> entries;
    entries.reserve(prev.table.size());
    for (const auto& e : prev.table) entries.push_back(&e);

    std::size_t workers =
        std::min<std::size_t>(threads_, std::max<std::size_t>(1, entries.size() / 64));
    std::vector<decltype(next.table)> locals(std::max<std::size_t>(1, workers));
    parallel_chunks(entries.size(), std::max<std::size_t>(1, workers),
                    [&](std::size_t w, std::size_t begin, std::size_t end) {
                      for (std::size_t i = begin; i < end; ++i) {
                        if (entries[i]->second == 0) continue;  // cancelled out
                        expand(entries[i]->first, entries[i]->second, bound, locals[w]);
                      }
                    });
    next.table = std::move(locals[0]);
    for (std::size_t w = 1; w < locals.size(); ++w)
      for (auto& [key, val] : locals[w]) {
        auto [it, inserted] = next.table.emplace(key, val);
        if (!inserted) it->second += val;
      }
    return next;
  }

  Rational gamma(const DpLayer& layer) const {
    Rational total = rat(0);
    std::vector<unsigned> k(u_);
    for (const auto& [key, val] : layer.table) {
      unsigned segments = 0;
      for (int i = 0; i < u_ * u_; ++i) segments += key[u_ + i];
      if (segments != 1) continue;
      for (int i = 0; i < u_; ++i) k[i] = key[i];
      if (!apply_cardinality_filter(k, cells_)) continue;
      total += val;
    }
    return total;
  }

 private:
  bool upper_ok(const DpKey& key) const {
    std::vector<unsigned> k(u_);
    for (int i = 0; i < u_; ++i) k[i] = key[i];
    return cardinality_upper_bounds_ok(k, cells_);
  }

  void add(std::unordered_map<DpKey, Rational, DpKeyHash>& out, DpKey key,
           const Rational& val) const {
    auto [it, inserted] = out.emplace(std::move(key), val);
    if (!inserted) it->second += val;
  }

  // All transitions out of one predecessor state (k, s) with weight val.
  void expand(const DpKey& key, const Rational& val, unsigned bound,
              std::unordered_map<DpKey, Rational, DpKeyHash>& out) const {
    const uint16_t* k = key.data();
    const uint16_t* seg = key.data() + u_;

    std::vector<SegCell> segs;
    unsigned total_segs = 0;
    for (int a = 0; a < u_; ++a)
      for (int b = 0; b < u_; ++b)
        if (unsigned c = seg[a * u_ + b]; c > 0) {
          segs.push_back({a, b, c});
          total_segs += c;
        }

    std::vector<unsigned> kprime(u_);
    for (int tau = 0; tau < u_; ++tau) {
      const Rational& type_w = cells_.type_weight(tau);
      if (type_w == 0) continue;
      if (prune_upper_) {
        for (int i = 0; i < u_; ++i) kprime[i] = k[i];
        kprime[tau] += 1;
        if (!cardinality_upper_bounds_ok(kprime, cells_)) continue;
      }

      // prefix/suffix products of r_{s,tau,1}^{k_s} for the lambda formulas
      std::vector<Rational> prefix(u_ + 1), suffix(u_ + 1);
      prefix[0] = rat(1);
      for (int s = 0; s < u_; ++s) prefix[s + 1] = prefix[s] * pow1(s, tau, k[s]);
      suffix[u_] = rat(1);
      for (int s = u_ - 1; s >= 0; --s) suffix[s] = pow1(s, tau, k[s]) * suffix[s + 1];

      Rational scale = val * type_w;

      // only: a fresh singleton segment
      if (total_segs + 1 <= bound && prefix[u_] != 0)
        add(out, successor(key, tau, -1, -1, -1, -1, tau, tau), scale * prefix[u_]);

      if (total_segs <= bound) {
        for (const auto& cell : segs) {
          // head: tau -> S -> old head (phi_3 against the old head's type)
          assert(k[cell.head] >= 1);
          Rational lam_head = cells_.r_lso(cell.head, tau, 3) *
                              pow1(cell.head, tau, k[cell.head] - 1) * excl1(prefix, suffix, cell.head);
          if (lam_head != 0)
            add(out, successor(key, tau, cell.head, cell.tail, -1, -1, tau, cell.tail),
                scale * cell.count * lam_head);
          // tail: old tail -> S -> tau (phi_2 against the old tail's type)
          assert(k[cell.tail] >= 1);
          Rational lam_tail = cells_.r_lso(cell.tail, tau, 2) *
                              pow1(cell.tail, tau, k[cell.tail] - 1) * excl1(prefix, suffix, cell.tail);
          if (lam_tail != 0)
            add(out, successor(key, tau, cell.head, cell.tail, -1, -1, cell.head, tau),
                scale * cell.count * lam_tail);
        }
      }

      if (total_segs >= 2 && total_segs - 1 <= bound) {
        for (const auto& first : segs) {
          for (const auto& second : segs) {
            unsigned long eta =
                (first.head == second.head && first.tail == second.tail)
                    ? static_cast<unsigned long>(first.count) * (first.count - 1)
                    : static_cast<unsigned long>(first.count) * second.count;
            if (eta == 0) continue;
            int b = first.tail, c = second.head;
            Rational lam;
            if (b != c) {
              lam = cells_.r_lso(b, tau, 2) * cells_.r_lso(c, tau, 3) *
                    pow1(b, tau, k[b] - 1) * pow1(c, tau, k[c] - 1) * excl2(prefix, suffix, tau, k, b, c);
            } else {
              assert(k[b] >= 2);
              lam = cells_.r_lso(b, tau, 2) * cells_.r_lso(b, tau, 3) *
                    pow1(b, tau, k[b] - 2) * excl1(prefix, suffix, b);
            }
            if (lam == 0) continue;
            add(out,
                successor(key, tau, first.head, first.tail, second.head, second.tail,
                          first.head, second.tail),
                scale * Rational(static_cast<unsigned long>(eta)) * lam);
          }
        }
      }
    }
  }

  const Rational& pow1(int s, int tau, unsigned e) const { return pow1_[s * u_ + tau][e]; }

  // product over types != a of r_{s,tau,1}^{k_s}
  static Rational excl1(const std::vector<Rational>& prefix, const std::vector<Rational>& suffix,
                        int a) {
    return prefix[a] * suffix[a + 1];
  }

  // product over types not in {b, c} of r_{s,tau,1}^{k_s}
  Rational excl2(const std::vector<Rational>& prefix, const std::vector<Rational>& suffix,
                 int tau, const uint16_t* k, int b, int c) const {
    if (b > c) std::swap(b, c);
    Rational mid = rat(1);
    for (int s = b + 1; s < c; ++s) mid *= pow1(s, tau, k[s]);
    return prefix[b] * mid * suffix[c + 1];
  }

  // Successor key: add tau to the counts; remove up to two segment cells and
  // insert the new segment (new_a, new_b).
  DpKey successor(const DpKey& key, int tau, int rem1_a, int rem1_b, int rem2_a, int rem2_b,
                  int new_a, int new_b) const {
    DpKey next = key;
    next[tau] += 1;
    if (rem1_a >= 0) next[u_ + rem1_a * u_ + rem1_b] -= 1;
    if (rem2_a >= 0) next[u_ + rem2_a * u_ + rem2_b] -= 1;
    next[u_ + new_a * u_ + new_b] += 1;
    return next;
  }

  const CellTable& cells_;
  int u_;
  unsigned long n_;
  std::size_t threads_;
  bool prune_upper_;
  std::vector<std::vector<Rational>> pow1_;
};

}  // namespace

Rational lambda_weight(const CellTable& cells, Behavior behavior, int tau,
                       const std::vector<unsigned>& kbar, int p, int q) {
  const int u = cells.count();
  std::vector<long> exponents(kbar.begin(), kbar.end());
  Rational factor = rat(1);
  switch (behavior) {
    case Behavior::Only:
      break;
    case Behavior::Head:
      factor = cells.r_lso(p, tau, 3);
      exponents[p] -= 1;
      break;
    case Behavior::Tail:
      factor = cells.r_lso(p, tau, 2);
      exponents[p] -= 1;
      break;
    case Behavior::Merge2:
      factor = cells.r_lso(p, tau, 2) * cells.r_lso(p, tau, 3);
      exponents[p] -= 2;
      break;
    case Behavior::Merge1:
      factor = cells.r_lso(p, tau, 2) * cells.r_lso(q, tau, 3);
      exponents[p] -= 1;
      exponents[q] -= 1;
      break;
  }
  for (int s = 0; s < u; ++s) {
    if (exponents[s] < 0)
      throw LosuccError("lambda exponent would be negative; behavior not applicable");
    factor *= pow_rational(cells.r_lso(s, tau, 1), static_cast<unsigned long>(exponents[s]));
  }
  return factor;
}

Rational DpLayer::value(const std::vector<unsigned>& k,
                        const std::vector<unsigned>& seg_matrix) const {
  DpKey key;
  key.reserve(k.size() + seg_matrix.size());
  for (unsigned v : k) key.push_back(static_cast<uint16_t>(v));
  for (unsigned v : seg_matrix) key.push_back(static_cast<uint16_t>(v));
  auto it = table.find(key);
  return it == table.end() ? rat(0) : it->second;
}

Rational wfomc_losucc(const CellTable& cells, unsigned long n, bool fixed_order,
                      const LosuccOptions& opts) {
  auto seq = wfomc_losucc_sequence(cells, n, n, fixed_order, opts);
  return seq.front();
}

Rational wfomc_losucc(const UniversalSentence& u, unsigned long n, bool fixed_order,
                      const LosuccOptions& opts) {
  CellTable cells(u, {.threads = opts.threads == 0 ? worker_count() : opts.threads});
  return wfomc_losucc(cells, n, fixed_order, opts);
}

std::vector<Rational> wfomc_losucc_sequence(const CellTable& cells, unsigned long from,
                                            unsigned long to, bool fixed_order,
                                            const LosuccOptions& opts) {
  if (cells.sentence().linear_order < 0 || cells.sentence().successor < 0)
    throw LosuccError("both a linear_order and a successor axiom role are required");
  if (from < 1 || from > to) throw LosuccError("empty or invalid n range");

  std::vector<Rational> out;
  out.reserve(to - from + 1);
  if (cells.count() == 0) {
    for (unsigned long m = from; m <= to; ++m) out.push_back(rat(0));
    return out;
  }

  DpEngine engine(cells, to, opts);
  DpLayer layer = engine.init_layer();
  if (opts.inspect) opts.inspect(layer);
  auto harvest = [&](const DpLayer& l) {
    if (l.m < from) return;
    Rational g = engine.gamma(l);
    if (!fixed_order) g *= Rational(factorial(l.m));
    out.push_back(std::move(g));
  };
  harvest(layer);
  for (unsigned long m = 2; m <= to; ++m) {
    layer = engine.step(layer, static_cast<unsigned>(m));
    if (opts.inspect) opts.inspect(layer);
    harvest(layer);
  }
  return out;
}

}  // namespace liftcount
