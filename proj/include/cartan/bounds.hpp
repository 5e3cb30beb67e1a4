#pragma once

// Upper bounds for the index of a topological Brauer class of period n on a
// 2d-dimensional CW complex.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cartan/integer.hpp"

namespace cartan {

/// v_p(m), m >= 1.
unsigned long padic_valuation(unsigned long p, std::uint64_t m);

/// v_p(m!) by Legendre's formula Σ floor(m / p^i).
unsigned long legendre_valuation(unsigned long p, std::uint64_t m);

/// p^{r + v_p(j)}: the order bound for the image of d_{2j+1} in the twisted
/// Atiyah–Hirzebruch spectral sequence.
Integer differential_order_bound(unsigned long p, unsigned long r, std::uint64_t j);

/// p^{(d-1)r + v_p((d-1)!)}. Evaluated both as the product of the
/// differential bounds for 1 <= j <= d-1 and in closed form; a mismatch
/// throws std::logic_error.
Integer prime_power_index_bound(unsigned long p, unsigned long r, std::uint64_t d);

struct PrimeBound {
  std::uint64_t p = 0;
  unsigned r = 0;
  Integer bound;
  bool operator==(const PrimeBound&) const = default;
};

struct SharpBound {
  Integer value;
  std::string source;
  bool operator==(const SharpBound&) const = default;
};

struct BoundReport {
  std::uint64_t n = 1;
  std::uint64_t d = 1;
  std::vector<PrimeBound> primes;
  Integer theorem_a_bound{1};
  bool corollary_b_applies = true;
  std::optional<SharpBound> known_sharp;
  bool operator==(const BoundReport&) const = default;
};

/// gcd(n, (d-1)!) = 1, checked both through the factorial and through the
/// primes of n (every prime divisor exceeds d-1).
bool coprime_to_factorial(std::uint64_t n, std::uint64_t d);

/// The best known index bound for small d: 1 for d = 1, n for d = 2, the
/// general bound for d = 3 (sharp there), Gu's formula for d = 4, nothing
/// beyond.
std::optional<SharpBound> known_sharp_bound(std::uint64_t n, std::uint64_t d);

/// ind | n^{d-1} ∏_{p | n} p^{v_p((d-1)!)}, broken down by prime. n, d >= 1.
BoundReport index_bound(std::uint64_t n, std::uint64_t d);

struct BoundComparison {
  std::uint64_t n = 1;
  std::uint64_t d = 1;
  Integer theorem_a_bound;
  std::optional<SharpBound> known_sharp;
  /// theorem_a / sharp when the sharp value divides the general bound.
  std::optional<Integer> ratio;
  /// True when the sharp value is a proper divisor of the general bound.
  bool sharp_strictly_better = false;
  bool operator==(const BoundComparison&) const = default;
};

BoundComparison compare_bounds(std::uint64_t n, std::uint64_t d);

}  // namespace cartan
