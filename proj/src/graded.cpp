#include "cartan/graded.hpp"

#include <algorithm>
#include <string>

namespace cartan {

namespace {

void check_order(const CyclicOrder& order) {
  if (order < 0) throw std::invalid_argument("cyclic order must be non-negative");
}

const DegreeComponent kEmpty{};

// Prime factors of m by trial division; orders in this library are products
// of small primes, and the divisor loop stops at sqrt of the cofactor.
std::vector<Integer> prime_factors(Integer m) {
  std::vector<Integer> primes;
  for (Integer d = 2; d * d <= m; ++d) {
    if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      primes.push_back(d);
      while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) m /= d;
    }
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

}  // namespace

std::optional<CyclicOrder> tensor_summands(const CyclicOrder& a, const CyclicOrder& b) {
  check_order(a);
  check_order(b);
  // gcd(0, b) = b covers Z ⊗ Z/b and Z ⊗ Z.
  Integer g = gcd(a, b);
  if (g == 1) return std::nullopt;
  return g;
}

std::optional<CyclicOrder> tor_summands(const CyclicOrder& a, const CyclicOrder& b) {
  check_order(a);
  check_order(b);
  if (a == 0 || b == 0) return std::nullopt;
  Integer g = gcd(a, b);
  if (g == 1) return std::nullopt;
  return g;
}

DegreeComponent canonicalize(DegreeComponent c) {
  for (const Integer& t : c.torsion) {
    check_order(t);
    if (t == 0) throw std::invalid_argument("free summands belong in free_rank");
  }
  std::erase_if(c.torsion, [](const Integer& t) { return t == 1; });
  std::sort(c.torsion.begin(), c.torsion.end());
  return c;
}

DegreeComponent invariant_factor_form(const DegreeComponent& c) {
  DegreeComponent canon = canonicalize(c);
  // Collect prime-power parts per prime, then combine the largest powers of
  // every prime into the last invariant factor, the next largest into the
  // one before, and so on.
  std::map<Integer, std::vector<Integer>> powers;
  for (const Integer& t : canon.torsion) {
    for (const Integer& p : prime_factors(t)) {
      Integer q = 1;
      Integer rest = t;
      while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
  }
  std::size_t count = 0;
  for (auto& [p, qs] : powers) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    count = std::max(count, qs.size());
  }
  std::vector<Integer> factors(count, Integer(1));
  for (const auto& [p, qs] : powers)
    for (std::size_t i = 0; i < qs.size(); ++i) factors[count - 1 - i] *= qs[i];
  return canonicalize({canon.free_rank, std::move(factors)});
}

GradedAbelianGroup GradedAbelianGroup::unit(std::size_t max_degree) {
  GradedAbelianGroup g(max_degree);
  g.add_free(0, 1);
  return g;
}

void GradedAbelianGroup::add_summand(std::size_t degree, const CyclicOrder& order) {
  check_order(order);
  if (order == 1) return;
  if (degree > max_degree_)
    throw TruncationError("degree " + std::to_string(degree) + " exceeds cap " +
                          std::to_string(max_degree_));
  DegreeComponent& c = components_[degree];
  if (order == 0) {
    ++c.free_rank;
  } else {
    c.torsion.insert(std::upper_bound(c.torsion.begin(), c.torsion.end(), order), order);
  }
}

void GradedAbelianGroup::add_free(std::size_t degree, std::size_t rank) {
  if (rank == 0) return;
  if (degree > max_degree_)
    throw TruncationError("degree " + std::to_string(degree) + " exceeds cap " +
                          std::to_string(max_degree_));
  components_[degree].free_rank += rank;
}

void GradedAbelianGroup::set_component(std::size_t degree, DegreeComponent c) {
  if (degree > max_degree_)
    throw TruncationError("degree " + std::to_string(degree) + " exceeds cap " +
                          std::to_string(max_degree_));
  c = canonicalize(std::move(c));
  if (c.trivial()) {
    components_.erase(degree);
  } else {
    components_[degree] = std::move(c);
  }
}

const DegreeComponent& GradedAbelianGroup::at(std::size_t degree) const {
  if (degree > max_degree_)
    throw TruncationError("degree " + std::to_string(degree) + " exceeds cap " +
                          std::to_string(max_degree_));
  auto it = components_.find(degree);
  return it == components_.end() ? kEmpty : it->second;
}

GradedAbelianGroup GradedAbelianGroup::truncated(std::size_t max_degree) const {
  if (max_degree > max_degree_)
    throw TruncationError("cannot extend a truncated group from " +
                          std::to_string(max_degree_) + " to " + std::to_string(max_degree));
  GradedAbelianGroup out(max_degree);
  for (const auto& [deg, c] : components_)
    if (deg <= max_degree) out.components_.emplace(deg, c);
  return out;
}

bool isomorphic(const GradedAbelianGroup& a, const GradedAbelianGroup& b) {
  if (a.max_degree() != b.max_degree()) return false;
  for (std::size_t n = 0; n <= a.max_degree(); ++n)
    if (invariant_factor_form(a.at(n)) != invariant_factor_form(b.at(n))) return false;
  return true;
}

GradedAbelianGroup kunneth(const GradedAbelianGroup& a, const GradedAbelianGroup& b,
                           std::size_t max_degree) {
  if (max_degree > a.max_degree() || max_degree > b.max_degree())
    throw TruncationError("Künneth product requested to degree " + std::to_string(max_degree) +
                          " but factors are only known to " + std::to_string(a.max_degree()) +
                          " and " + std::to_string(b.max_degree()));
  GradedAbelianGroup out(max_degree);
  for (const auto& [i, ai] : a.components()) {
    if (i > max_degree) break;
    for (const auto& [j, bj] : b.components()) {
      if (i + j > max_degree) break;
      // Summands of A_i and B_j as lists of cyclic orders, Z first.
      std::vector<Integer> xs(ai.free_rank, Integer(0));
      xs.insert(xs.end(), ai.torsion.begin(), ai.torsion.end());
      std::vector<Integer> ys(bj.free_rank, Integer(0));
      ys.insert(ys.end(), bj.torsion.begin(), bj.torsion.end());
      const bool tor_fits = i + j + 1 <= max_degree;
      for (const Integer& x : xs) {
        for (const Integer& y : ys) {
          if (auto t = tensor_summands(x, y)) out.add_summand(i + j, *t);
          if (tor_fits)
            if (auto t = tor_summands(x, y)) out.add_summand(i + j + 1, *t);
        }
      }
    }
  }
  return out;
}

Exponent exponent(const GradedAbelianGroup& a, std::size_t degree) {
  const DegreeComponent& c = a.at(degree);
  Exponent e;
  e.free_rank = c.free_rank;
  for (const Integer& t : c.torsion) e.torsion_exponent = lcm(e.torsion_exponent, t);
  return e;
}

GradedAbelianGroup primary_part(const GradedAbelianGroup& a, unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("primary part needs a prime");
  GradedAbelianGroup out(a.max_degree());
  for (const auto& [deg, c] : a.components())
    for (const Integer& t : c.torsion) out.add_summand(deg, pow(p, valuation(t, p)));
  return out;
}

}  // namespace cartan
