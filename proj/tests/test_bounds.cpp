#include <doctest.h>

#include <numeric>

#include "cartan/bounds.hpp"
#include "cartan/complexes.hpp"

using namespace cartan;

namespace {

// Σ_{j=2}^{m} v_p(j) by repeated division.
unsigned long summed_valuations(unsigned long p, unsigned long m) {
  unsigned long total = 0;
  for (unsigned long j = 2; j <= m; ++j)
    for (unsigned long x = j; x % p == 0; x /= p) ++total;
  return total;
}

Integer e(unsigned long p, std::uint64_t n) { return n % p == 0 ? Integer(p) : Integer(1); }

}  // namespace

TEST_CASE("valuations") {
  CHECK(padic_valuation(2, 12) == 2);
  CHECK(padic_valuation(3, 12) == 1);
  CHECK(padic_valuation(5, 12) == 0);
  CHECK_THROWS(padic_valuation(2, 0));
  CHECK_THROWS(padic_valuation(6, 12));

  CHECK(legendre_valuation(2, 3) == 1);
  CHECK(legendre_valuation(3, 3) == 1);
  CHECK(summed_valuations(2, 6) == 4);
  CHECK(legendre_valuation(2, 6) == 4);
  CHECK(legendre_valuation(7, 0) == 0);
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL})
    for (unsigned long m = 0; m <= 60; ++m) CHECK(legendre_valuation(p, m) == summed_valuations(p, m));
}

TEST_CASE("differential and prime-power bounds") {
  CHECK(differential_order_bound(2, 1, 1) == 2);
  CHECK(differential_order_bound(2, 1, 2) == 4);
  CHECK(differential_order_bound(3, 2, 9) == 81);

  CHECK(prime_power_index_bound(2, 1, 3) == 8);
  CHECK(prime_power_index_bound(7, 3, 1) == 1);
  CHECK(prime_power_index_bound(2, 1, 2) == 2);

  for (unsigned long p : {2UL, 3UL, 5UL, 7UL})
    for (unsigned long r = 1; r <= 3; ++r)
      for (std::uint64_t d = 1; d <= 10; ++d) {
        Integer product = 1;
        for (std::uint64_t j = 1; j < d; ++j) product *= differential_order_bound(p, r, j);
        CHECK(prime_power_index_bound(p, r, d) == product);
        CHECK(prime_power_index_bound(p, r, d) == pow(p, (d - 1) * r + legendre_valuation(p, d - 1)));
        CHECK(prime_power_index_bound(p, r, d + 1) % prime_power_index_bound(p, r, d) == 0);
      }
}

TEST_CASE("differential bounds match the homology exponents of X_p") {
  for (unsigned long p : {2UL, 3UL, 5UL})
    for (unsigned long r : {1UL, 2UL})
      for (std::uint64_t j = 1; j <= 12; ++j) CHECK(differential_order_bound(p, r, j) == exponent_bound(p, r, j));
}

TEST_CASE("index bound examples") {
  BoundReport six = index_bound(6, 4);
  CHECK(six.theorem_a_bound == 1296);
  REQUIRE(six.primes.size() == 2);
  CHECK(six.primes[0] == PrimeBound{2, 1, 16});
  CHECK(six.primes[1] == PrimeBound{3, 1, 81});
  CHECK_FALSE(six.corollary_b_applies);

  BoundReport five = index_bound(5, 4);
  CHECK(five.theorem_a_bound == 125);
  CHECK(five.corollary_b_applies);

  CHECK(index_bound(1, 7).theorem_a_bound == 1);
  CHECK(index_bound(1, 7).primes.empty());
  CHECK(index_bound(2, 3).theorem_a_bound == 8);
  CHECK_THROWS(index_bound(0, 3));
  CHECK_THROWS(index_bound(3, 0));
}

TEST_CASE("known sharp bounds") {
  CHECK(known_sharp_bound(4, 4)->value == 64);
  CHECK(known_sharp_bound(6, 4)->value == 1296);
  CHECK(known_sharp_bound(2, 3)->value == 8);
  CHECK(known_sharp_bound(9, 2)->value == 9);
  CHECK(known_sharp_bound(9, 1)->value == 1);
  CHECK_FALSE(known_sharp_bound(4, 5).has_value());
  CHECK(index_bound(6, 2).known_sharp->source == "forced by Theorem A at d=2");
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const Integer expected = (n % 4 == 0 ? Integer(1) : e(2, n)) * e(3, n) * pow(Integer(n), 3);
    CHECK(known_sharp_bound(n, 4)->value == expected);
  }
}

TEST_CASE("comparisons") {
  BoundComparison four = compare_bounds(4, 4);
  CHECK(four.theorem_a_bound == 128);
  CHECK(four.known_sharp->value == 64);
  CHECK(four.ratio == Integer(2));
  CHECK(four.sharp_strictly_better);

  BoundComparison five = compare_bounds(5, 4);
  CHECK(five.theorem_a_bound == 125);
  CHECK(five.known_sharp->value == 125);
  CHECK(five.ratio == Integer(1));
  CHECK_FALSE(five.sharp_strictly_better);

  BoundComparison three = compare_bounds(3, 3);
  CHECK(three.theorem_a_bound == 9);
  CHECK(three.known_sharp->value == 9);

  CHECK_FALSE(compare_bounds(3, 6).known_sharp.has_value());
  CHECK_FALSE(compare_bounds(3, 6).ratio.has_value());
}

TEST_CASE("multiplicativity over coprime periods") {
  for (std::uint64_t a = 1; a <= 50; ++a)
    for (std::uint64_t b = 1; b <= 50; b += 3) {
      if (std::gcd(a, b) != 1) continue;
      for (std::uint64_t d = 1; d <= 8; ++d)
        CHECK(index_bound(a * b, d).theorem_a_bound ==
              index_bound(a, d).theorem_a_bound * index_bound(b, d).theorem_a_bound);
    }
}

TEST_CASE("Corollary B and the lower bound n^{d-1}") {
  for (std::uint64_t n = 1; n <= 100; ++n)
    for (std::uint64_t d = 1; d <= 8; ++d) {
      BoundReport r = index_bound(n, d);
      const Integer floor_bound = pow(Integer(n), d - 1);
      CHECK(r.corollary_b_applies == (gcd(Integer(n), factorial(d - 1)) == 1));
      if (r.corollary_b_applies) CHECK(r.theorem_a_bound == floor_bound);
      if (n >= 2) {
        CHECK(r.theorem_a_bound >= floor_bound);
        CHECK((r.theorem_a_bound == floor_bound) == r.corollary_b_applies);
      }
      Integer product = 1;
      Integer reconstructed = 1;
      for (const PrimeBound& p : r.primes) {
        product *= p.bound;
        reconstructed *= pow(p.p, p.r);
      }
      CHECK(product == r.theorem_a_bound);
      CHECK(reconstructed == n);
    }
}
