#include "liftcount/fo2.hpp"


#include "liftcount/cardinality.hpp"
#include "liftcount/threading.hpp"

namespace liftcount {

namespace {

// Streaming composition enumeration: k starts at (n, 0, ..., 0); each step
// moves the leading stack one slot right. Visits every composition exactly
// once in a fixed order.
bool next_composition(std::vector<unsigned>& k) {
  std::size_t u = k.size();
  if (u <= 1) return false;
  std::size_t i = 0;
  while (i < u && k[i] == 0) ++i;
  if (i + 1 >= u) return false;
  unsigned v = k[i];
  k[i] = 0;
  k[0] = v - 1;
  k[i + 1] += 1;
  return true;
}

Rational composition_term(const CellTable& cells, unsigned long n,
                          const std::vector<unsigned>& k) {
  if (!apply_cardinality_filter(k, cells)) return rat(0);
  int u = cells.count();
  Rational term(multinomial(n, k));
  for (int i = 0; i < u && term != 0; ++i) {
    if (k[i] == 0) continue;
    term *= pow_rational(cells.type_weight(i), k[i]);
    term *= pow_rational(cells.r_plain(i, i),
                         static_cast<unsigned long>(k[i]) * (k[i] - 1) / 2);
    for (int j = i + 1; j < u; ++j) {
      if (k[j] == 0) continue;
      term *= pow_rational(cells.r_plain(i, j), static_cast<unsigned long>(k[i]) * k[j]);
    }
  }
  return term;
}

}  // namespace

Rational wfomc_fo2(const CellTable& cells, unsigned long n, const Fo2Options& opts) {
  if (cells.sentence().linear_order >= 0 || cells.sentence().successor >= 0)
    throw Fo2Error("sentence declares axiom roles; use the lso algorithm");
  if (n == 0) return rat(1);
  int u = cells.count();
  if (u == 0) return rat(0);

  std::size_t threads = opts.threads == 0 ? worker_count() : opts.threads;
  if (threads <= 1 || u == 1) {
    Rational sum = rat(0);
    std::vector<unsigned> k(u, 0);
    k[0] = static_cast<unsigned>(n);
    do {
      sum += composition_term(cells, n, k);
    } while (next_composition(k));
    return sum;
  }

  // Split on the count of the last 1-type; each worker streams the
  // compositions of the remainder over the other u-1 types.
  std::vector<Rational> partial(threads, rat(0));
  parallel_chunks(n + 1, threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    std::vector<unsigned> k(u, 0);
    for (std::size_t last = begin; last < end; ++last) {
      std::fill(k.begin(), k.end(), 0u);
      k[u - 1] = static_cast<unsigned>(last);
      k[0] = static_cast<unsigned>(n - last);
      std::vector<unsigned> head(k.begin(), k.end() - 1);
      do {
        std::copy(head.begin(), head.end(), k.begin());
        partial[w] += composition_term(cells, n, k);
      } while (next_composition(head));
    }
  });
  Rational sum = rat(0);
  for (auto& p : partial) sum += p;
  return sum;
}

Rational wfomc_fo2(const UniversalSentence& u, unsigned long n, const Fo2Options& opts) {
  CellTable cells(u, {.threads = opts.threads == 0 ? worker_count() : opts.threads});
  return wfomc_fo2(cells, n, opts);
}

}  // namespace liftcount
