// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Every check is exact; wall-clock limits are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cartan/bounds.hpp"
#include "cartan/chain_complex.hpp"
#include "cartan/complexes.hpp"
#include "cartan/snf.hpp"
#include "cartan/words.hpp"

using namespace cartan;

namespace {

struct Criterion {
  int id;
  std::string description;
  double time_limit_seconds;
  std::function<std::string()> run;  // empty string on success, else the first failure
};

Integer e(unsigned long p, std::uint64_t n) { return n % p == 0 ? Integer(p) : Integer(1); }

std::string theorem_a_spot_values() {
  if (index_bound(2, 3).theorem_a_bound != 8) return "index_bound(2,3) != 8";
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const Integer expected = e(2, n) * e(3, n) * pow(Integer(n), 3);
    if (index_bound(n, 4).theorem_a_bound != expected)
      return "index_bound(" + std::to_string(n) + ",4) = " + to_string(index_bound(n, 4).theorem_a_bound) +
             ", expected " + to_string(expected);
  }
  return {};
}

std::string corollary_b() {
  std::size_t checked = 0;
  for (std::uint64_t n = 1; n <= 100; ++n)
    for (std::uint64_t d = 1; d <= 8; ++d) {
      Integer fact = 1;
      for (std::uint64_t i = 2; i + 1 <= d; ++i) fact *= i;
      if (gcd(Integer(n), fact) != 1) continue;
      ++checked;
      if (index_bound(n, d).theorem_a_bound != pow(Integer(n), d - 1))
        return "n=" + std::to_string(n) + " d=" + std::to_string(d);
    }
  return checked > 0 ? std::string{} : "no cases";
}

std::string gu_comparison() {
  BoundComparison c = compare_bounds(4, 4);
  if (c.theorem_a_bound != 128) return "theorem_a = " + to_string(c.theorem_a_bound);
  if (!c.known_sharp || c.known_sharp->value != 64) return "sharp bound is not 64";
  if (!c.sharp_strictly_better) return "sharp bound not flagged as strictly better";
  return {};
}

std::string elementary_oracle() {
  for (ElementaryKind kind : {ElementaryKind::EPSecond, ElementaryKind::PESecond})
    for (unsigned long q : {1UL, 2UL, 3UL})
      for (long h : {2L, 3L, 4L, 5L, 8L, 9L}) {
        ElementaryComplex c{kind, q, h, {}};
        GradedAbelianGroup closed = closed_form_homology(c, 30);
        GradedAbelianGroup oracle = homology(realize_chain_complex(c, 30));
        for (std::size_t n = 0; n <= 30; ++n)
          if (invariant_factor_form(closed.at(n)) != invariant_factor_form(oracle.at(n)))
            return to_string(kind) + " q=" + std::to_string(q) + " h=" + std::to_string(h) +
                   " degree " + std::to_string(n);
      }
  return {};
}

std::string xp_exponent_law() {
  for (unsigned long p : {2UL, 3UL, 5UL})
    for (unsigned long r : {1UL, 2UL})
      for (unsigned long k = 1; k <= 12; ++k) {
        const std::size_t deg = 2 * k;
        const Integer full = pow(p, r) * k;
        const Integer p_part = pow(p, r + valuation(Integer(k), p));
        const std::string where =
            "p=" + std::to_string(p) + " r=" + std::to_string(r) + " k=" + std::to_string(k);

        GradedAbelianGroup via_kunneth = homology_Xp(p, r, deg);
        if (exponent(via_kunneth, deg).torsion_exponent != full) return where + " (Künneth exponent)";
        if (exponent(primary_part(via_kunneth, p), deg).torsion_exponent != p_part)
          return where + " (Künneth p-part)";

        HomologyGroup h = homology_of_complex(realize_Xp(p, r, deg), deg);
        GradedAbelianGroup via_snf(deg);
        via_snf.set_component(deg, {h.free_rank, h.torsion});
        if (exponent(via_snf, deg).torsion_exponent != full) return where + " (SNF exponent)";
        if (exponent(primary_part(via_snf, p), deg).torsion_exponent != p_part) return where + " (SNF p-part)";
        if (exponent_bound(p, r, k) != p_part) return where + " (exponent_bound)";
      }
  return {};
}

std::string multiplicativity() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint64_t> pick(1, 50);
  int pairs = 0;
  while (pairs < 200) {
    const std::uint64_t a = pick(rng), b = pick(rng);
    if (gcd(Integer(a), Integer(b)) != 1) continue;
    ++pairs;
    for (std::uint64_t d = 1; d <= 8; ++d)
      if (index_bound(a * b, d).theorem_a_bound !=
          index_bound(a, d).theorem_a_bound * index_bound(b, d).theorem_a_bound)
        return "n1=" + std::to_string(a) + " n2=" + std::to_string(b) + " d=" + std::to_string(d);
  }
  return {};
}

std::string word_census() {
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    const std::uint64_t cap = 2 + 2 * p * p;
    std::set<std::pair<std::string, std::uint64_t>> expected{{"ss", 2}, {"sy", 3}};
    for (std::uint64_t k = 0, pk = 1; 1 + 2 * pk <= cap; ++k, pk *= p) {
      expected.insert({"s" + std::string(k, 'g') + "f", 1 + 2 * pk});
      if (2 + 2 * pk * p <= cap) expected.insert({"f" + std::string(k, 'g') + "f", 2 + 2 * pk * p});
    }
    std::set<std::pair<std::string, std::uint64_t>> got;
    for (const WordEntry& w : enumerate_words(p, 1, cap)) {
      if (w.height != 2) continue;
      std::string spelled;
      for (const Symbol& s : w.word.symbols()) spelled += "sgfy"[static_cast<int>(s.kind)];
      got.insert({spelled, w.degree});
    }
    if (got != expected) return "p=" + std::to_string(p);
  }
  return {};
}

IntegerMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-9, 9);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
  return m;
}

IntegerMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  IntegerMatrix u = IntegerMatrix::identity(n);
  std::uniform_int_distribution<int> steps(0, 10);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> mult(-3, 3);
  for (int s = steps(rng); s > 0; --s) {
    const std::size_t a = idx(rng), b = idx(rng);
    if (a != b) {
      u.add_row_multiple(a, b, mult(rng));
    } else {
      u.negate_row(a);
    }
  }
  return u;
}

std::string snf_properties() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int i = 0; i < 100; ++i) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = i % 2 == 0 ? rows : dim(rng);
    IntegerMatrix m = random_matrix(rows, cols, rng);
    SmithForm s = smith_normal_form(m, true);
    const std::string where = "case " + std::to_string(i);
    for (std::size_t j = 0; j + 1 < s.invariant_factors.size(); ++j)
      if (s.invariant_factors[j + 1] % s.invariant_factors[j] != 0) return where + " divisibility";
    if (*s.left * m * *s.right != s.diagonal) return where + " U·M·V";
    if (abs(determinant(*s.left)) != 1 || abs(determinant(*s.right)) != 1) return where + " unimodularity";
    IntegerMatrix moved = random_unimodular(rows, rng) * m * random_unimodular(cols, rng);
    if (smith_normal_form(moved).invariant_factors != s.invariant_factors) return where + " invariance";
    if (rows == cols) {
      Integer product = 1;
      for (const Integer& d : s.invariant_factors) product *= d;
      if (s.rank() < rows) product = 0;
      if (product != abs(determinant(m))) return where + " determinant";
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Theorem A spot values (d=3 example, d=4 for n <= 60)", 1.0, theorem_a_spot_values},
      {2, "Corollary B: bound = n^(d-1) when gcd(n,(d-1)!) = 1, n <= 100, d <= 8", 1.0, corollary_b},
      {3, "Gu comparison at n=4, d=4: 128 vs 64", 0.1, gu_comparison},
      {4, "elementary complexes: closed forms = SNF homology, degrees <= 30", 10.0, elementary_oracle},
      {5, "X_p exponent law via Künneth and SNF, p in {2,3,5}, r in {1,2}, k <= 12", 60.0, xp_exponent_law},
      {6, "multiplicativity over 200 coprime pairs, n_i <= 50, d <= 8", 1.0, multiplicativity},
      {7, "height-2 word census up to degree 2+2p^2, p in {2,3,5}", 1.0, word_census},
      {8, "SNF properties on 100 random matrices", 5.0, snf_properties},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.run();
    } catch (const std::exception& ex) {
      failure = std::string("exception: ") + ex.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && seconds > c.time_limit_seconds)
      failure = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.time_limit_seconds) + " s";
    std::printf("%s [%d] %s (%.3f s)%s%s\n", failure.empty() ? "PASS" : "FAIL", c.id, c.description.c_str(),
                seconds, failure.empty() ? "" : ": ", failure.c_str());
    if (!failure.empty()) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
