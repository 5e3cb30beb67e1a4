#include "cartan/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "cartan/chain_complex.hpp"
#include "cartan/complexes.hpp"

namespace cartan {

namespace {

std::string describe(const DegreeComponent& c) {
  std::ostringstream os;
  os << "Z^" << c.free_rank;
  for (const Integer& t : c.torsion) os << " + Z/" << t;
  return os.str();
}

void check_elementary(std::vector<CheckResult>& out) {
  constexpr std::size_t kMaxDegree = 30;
  for (ElementaryKind kind : {ElementaryKind::EPSecond, ElementaryKind::PESecond}) {
    for (unsigned long q : {1UL, 2UL, 3UL}) {
      for (long h : {2L, 3L, 4L, 5L, 8L, 9L}) {
        ElementaryComplex c{kind, q, h, {}};
        GradedAbelianGroup closed = closed_form_homology(c, kMaxDegree);
        GradedAbelianGroup oracle = homology(realize_chain_complex(c, kMaxDegree));
        CheckResult r;
        r.name = "elementary " + to_string(kind) + " q=" + std::to_string(q) + " h=" + std::to_string(h);
        r.passed = true;
        for (std::size_t n = 0; n <= kMaxDegree; ++n) {
          DegreeComponent a = invariant_factor_form(closed.at(n));
          DegreeComponent b = invariant_factor_form(oracle.at(n));
          if (a != b) {
            r.passed = false;
            r.detail = "degree " + std::to_string(n) + ": closed form " + describe(a) +
                       ", SNF " + describe(b);
            break;
          }
        }
        out.push_back(std::move(r));
      }
    }
  }
}

void check_xp_exponent(std::vector<CheckResult>& out) {
  constexpr unsigned long kMaxK = 12;
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    for (unsigned long r : {1UL, 2UL}) {
      ChainComplex cx = realize_Xp(p, r, 2 * kMaxK);
      for (unsigned long k = 1; k <= kMaxK; ++k) {
        const Integer expected = pow(p, r) * k;
        const Integer expected_p = exponent_bound(p, r, k);
        GradedAbelianGroup via_kunneth = homology_Xp(p, r, 2 * k);
        Exponent ek = exponent(via_kunneth, 2 * k);
        Exponent ek_p = exponent(primary_part(via_kunneth, p), 2 * k);
        HomologyGroup h = homology_of_complex(cx, 2 * k);
        GradedAbelianGroup via_snf(2 * k);
        via_snf.set_component(2 * k, {h.free_rank, h.torsion});
        Exponent es = exponent(via_snf, 2 * k);
        Exponent es_p = exponent(primary_part(via_snf, p), 2 * k);

        CheckResult res;
        res.name = "xp-exponent p=" + std::to_string(p) + " r=" + std::to_string(r) +
                   " k=" + std::to_string(k);
        res.passed = ek.torsion_exponent == expected && es.torsion_exponent == expected &&
                     ek_p.torsion_exponent == expected_p && es_p.torsion_exponent == expected_p &&
                     ek.free_rank == 0 && es.free_rank == 0;
        if (!res.passed) {
          std::ostringstream os;
          os << "expected exponent " << expected << " (p-part " << expected_p << "), Künneth "
             << ek.torsion_exponent << " (" << ek_p.torsion_exponent << "), SNF "
             << es.torsion_exponent << " (" << es_p.torsion_exponent << ")";
          res.detail = os.str();
        }
        out.push_back(std::move(res));
      }
    }
  }
}

bool divisibility_chain(const std::vector<Integer>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (!mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t())) return false;
  for (const Integer& x : d)
    if (x <= 0) return false;
  return true;
}

void check_snf(std::vector<CheckResult>& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr int kCases = 100;
  for (int i = 0; i < kCases; ++i) {
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    const std::size_t rows = dim(rng), cols = dim(rng);
    IntegerMatrix m = random_matrix(rows, cols, 9, rng);
    SmithForm s = smith_normal_form(m, true);
    CheckResult res;
    res.name = "snf case " + std::to_string(i) + " (" + std::to_string(rows) + "x" +
               std::to_string(cols) + ")";
    std::vector<std::string> failures;
    if (!divisibility_chain(s.invariant_factors)) failures.push_back("divisibility chain");
    if (*s.left * m * *s.right != s.diagonal) failures.push_back("U·M·V != S");
    if (abs(determinant(*s.left)) != 1 || abs(determinant(*s.right)) != 1)
      failures.push_back("transform not unimodular");
    IntegerMatrix p = random_unimodular(rows, 10, 3, rng);
    IntegerMatrix q = random_unimodular(cols, 10, 3, rng);
    SmithForm t = smith_normal_form(p * m * q);
    if (t.invariant_factors != s.invariant_factors) failures.push_back("not invariant under P·M·Q");
    if (rows == cols) {
      Integer det = abs(determinant(m));
      Integer product = 1;
      for (const Integer& d : s.invariant_factors) product *= d;
      if (s.rank() < rows) product = 0;
      if (product != det) failures.push_back("product of invariant factors != |det|");
    }
    res.passed = failures.empty();
    for (const std::string& f : failures) res.detail += (res.detail.empty() ? "" : "; ") + f;
    out.push_back(std::move(res));
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"elementary", "xp-exponent", "snf", "all"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (!all && suite != "elementary" && suite != "xp-exponent" && suite != "snf")
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  if (all || suite == "elementary") check_elementary(out);
  if (all || suite == "xp-exponent") check_xp_exponent(out);
  if (all || suite == "snf") check_snf(out, seed);
  return out;
}

IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

IntegerMatrix random_unimodular(std::size_t n, unsigned steps, long max_multiplier,
                                std::mt19937_64& rng) {
  IntegerMatrix u = IntegerMatrix::identity(n);
  if (n == 0) return u;
  std::uniform_int_distribution<unsigned> count(0, steps);
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  std::uniform_int_distribution<long> mult(-max_multiplier, max_multiplier);
  std::uniform_int_distribution<int> op(0, 2);
  const unsigned k = count(rng);
  for (unsigned s = 0; s < k; ++s) {
    const std::size_t a = index(rng), b = index(rng);
    switch (op(rng)) {
      case 0:
        if (a != b) u.add_row_multiple(a, b, mult(rng));
        break;
      case 1: u.swap_rows(a, b); break;
      default: u.negate_row(a); break;
    }
  }
  return u;
}

}  // namespace cartan
