#include "cartan/bounds.hpp"

#include <stdexcept>

namespace cartan {

namespace {

void require_prime(unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

void require_positive(std::uint64_t v, const char* what) {
  if (v == 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

unsigned long padic_valuation(unsigned long p, std::uint64_t m) {
  require_prime(p);
  require_positive(m, "m");
  unsigned long e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

unsigned long legendre_valuation(unsigned long p, std::uint64_t m) {
  require_prime(p);
  unsigned long total = 0;
  for (std::uint64_t q = m / p; q > 0; q /= p) total += q;
  return total;
}

Integer differential_order_bound(unsigned long p, unsigned long r, std::uint64_t j) {
  require_positive(r, "r");
  require_positive(j, "j");
  return pow(p, r + padic_valuation(p, j));
}

Integer prime_power_index_bound(unsigned long p, unsigned long r, std::uint64_t d) {
  require_prime(p);
  require_positive(r, "r");
  require_positive(d, "d");
  Integer product = 1;
  for (std::uint64_t j = 1; j + 1 <= d; ++j) product *= differential_order_bound(p, r, j);
  Integer closed = pow(p, (d - 1) * r + legendre_valuation(p, d - 1));
  if (product != closed)
    throw std::logic_error("index bound routes disagree at p=" + std::to_string(p));
  return closed;
}

bool coprime_to_factorial(std::uint64_t n, std::uint64_t d) {
  require_positive(n, "n");
  require_positive(d, "d");
  const bool via_gcd = gcd(Integer(n), factorial(d - 1)) == 1;
  bool via_primes = true;
  for (const auto& [p, r] : factorize(n))
    if (p <= d - 1) via_primes = false;
  if (via_gcd != via_primes) throw std::logic_error("coprimality routes disagree");
  return via_gcd;
}

std::optional<SharpBound> known_sharp_bound(std::uint64_t n, std::uint64_t d) {
  require_positive(n, "n");
  require_positive(d, "d");
  switch (d) {
    case 1:
      return SharpBound{1, "trivial at d=1"};
    case 2:
      return SharpBound{n, "forced by Theorem A at d=2"};
    case 3:
      return SharpBound{index_bound(n, 3).theorem_a_bound, "Theorem A (sharp at d=3)"};
    case 4: {
      const Integer e2 = n % 2 == 0 ? 2 : 1;
      const Integer e3 = n % 3 == 0 ? 3 : 1;
      const Integer n3 = pow(Integer(n), 3);
      if (n % 4 == 0) return SharpBound{e3 * n3, "Gu d=4 with 4|n: e_3(n)n^3"};
      return SharpBound{e2 * e3 * n3, "Gu d=4: e_2(n)e_3(n)n^3"};
    }
    default:
      return std::nullopt;
  }
}

BoundReport index_bound(std::uint64_t n, std::uint64_t d) {
  require_positive(n, "n");
  require_positive(d, "d");
  BoundReport report;
  report.n = n;
  report.d = d;
  for (const auto& [p, r] : factorize(n)) {
    Integer b = prime_power_index_bound(p, r, d);
    report.theorem_a_bound *= b;
    report.primes.push_back({p, r, std::move(b)});
  }
  report.corollary_b_applies = coprime_to_factorial(n, d);
  if (d != 3) {
    report.known_sharp = known_sharp_bound(n, d);
  } else {
    report.known_sharp = SharpBound{report.theorem_a_bound, "Theorem A (sharp at d=3)"};
  }
  return report;
}

BoundComparison compare_bounds(std::uint64_t n, std::uint64_t d) {
  BoundReport report = index_bound(n, d);
  BoundComparison out;
  out.n = n;
  out.d = d;
  out.theorem_a_bound = report.theorem_a_bound;
  out.known_sharp = report.known_sharp;
  if (out.known_sharp) {
    const Integer& sharp = out.known_sharp->value;
    if (mpz_divisible_p(out.theorem_a_bound.get_mpz_t(), sharp.get_mpz_t())) {
      out.ratio = out.theorem_a_bound / sharp;
      out.sharp_strictly_better = *out.ratio > 1;
    }
  }
  return out;
}

}  // namespace cartan
