#include "cartan/integer.hpp"

#include <stdexcept>

namespace cartan {

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer pow(unsigned long base, unsigned long exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer factorial(unsigned long m) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), m);
  return out;
}

unsigned long valuation(const Integer& m, unsigned long p) {
  if (m == 0) throw std::domain_error("valuation of zero is undefined");
  if (p < 2) throw std::domain_error("valuation base must be at least 2");
  Integer rest = abs(m);
  unsigned long e = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++e;
  }
  return e;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer parse_integer(const std::string& text) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0)
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("cannot factorize zero");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace cartan
