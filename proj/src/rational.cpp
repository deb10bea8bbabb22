#include "liftcount/rational.hpp"

#include <cctype>
#include <vector>

namespace liftcount {

bool looks_like_rational(const std::string& text) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == text.size()) return true;
  if (text[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  return digits > 0 && i == text.size();
}

Rational parse_rational(const std::string& text) {
  if (!looks_like_rational(text))
    throw std::invalid_argument("not an exact rational literal: '" + text + "'");
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("not an exact rational literal: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Rational pow_rational(const Rational& base, unsigned long exp) {
  if (exp == 0) return rat(1);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  // base was canonical, so num^e / den^e already is.
  return out;
}

Integer factorial(unsigned long n) {
  Integer z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return z;
}

Integer multinomial(unsigned long n, const std::vector<unsigned>& parts) {
  Integer z = factorial(n);
  for (unsigned k : parts) {
    if (k < 2) continue;
    Integer d = factorial(k);
    mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), d.get_mpz_t());
  }
  return z;
}

}  // namespace liftcount
