#include "cartan/complexes.hpp"

#include <stdexcept>

namespace cartan {

ElementaryComplex ElementaryComplex::exterior(unsigned long q, std::string label) {
  ElementaryComplex c{ElementaryKind::ExteriorFirst, q, 0, std::move(label)};
  c.validate();
  return c;
}

ElementaryComplex ElementaryComplex::divided_power(unsigned long q, std::string label) {
  ElementaryComplex c{ElementaryKind::DividedPowerFirst, q, 0, std::move(label)};
  c.validate();
  return c;
}

ElementaryComplex ElementaryComplex::exterior_divided(unsigned long q, Integer h,
                                                      std::string label) {
  ElementaryComplex c{ElementaryKind::EPSecond, q, std::move(h), std::move(label)};
  c.validate();
  return c;
}

ElementaryComplex ElementaryComplex::divided_exterior(unsigned long q, Integer h,
                                                      std::string label) {
  ElementaryComplex c{ElementaryKind::PESecond, q, std::move(h), std::move(label)};
  c.validate();
  return c;
}

void ElementaryComplex::validate() const {
  if (q == 0) throw std::invalid_argument("elementary complex needs q >= 1");
  if (second_type()) {
    if (h < 1) throw std::invalid_argument("second-type complex needs twist h >= 1");
  } else if (h != 0) {
    throw std::invalid_argument("first-type complex carries no twist");
  }
}

std::vector<std::size_t> ElementaryComplex::generator_degrees() const {
  switch (kind) {
    case ElementaryKind::ExteriorFirst: return {2 * q - 1};
    case ElementaryKind::DividedPowerFirst: return {2 * q};
    case ElementaryKind::EPSecond: return {2 * q - 1, 2 * q};
    case ElementaryKind::PESecond: return {2 * q, 2 * q + 1};
  }
  return {};
}

std::string to_string(ElementaryKind kind) {
  switch (kind) {
    case ElementaryKind::ExteriorFirst: return "E";
    case ElementaryKind::DividedPowerFirst: return "P";
    case ElementaryKind::EPSecond: return "E⊗P";
    case ElementaryKind::PESecond: return "P⊗E";
  }
  return "?";
}

GradedAbelianGroup closed_form_homology(const ElementaryComplex& c, std::size_t max_degree) {
  c.validate();
  GradedAbelianGroup out = GradedAbelianGroup::unit(max_degree);
  const std::size_t q = c.q;
  switch (c.kind) {
    case ElementaryKind::ExteriorFirst:
      if (2 * q - 1 <= max_degree) out.add_free(2 * q - 1, 1);
      break;
    case ElementaryKind::DividedPowerFirst:
      for (std::size_t deg = 2 * q; deg <= max_degree; deg += 2 * q) out.add_free(deg, 1);
      break;
    case ElementaryKind::EPSecond:
      // Z/h · xγ_k(y) in degree 2q-1+2qk.
      for (std::size_t deg = 2 * q - 1; deg <= max_degree; deg += 2 * q) out.add_summand(deg, c.h);
      break;
    case ElementaryKind::PESecond:
      // Z/hk · γ_k(x) in degree 2qk.
      for (std::size_t k = 1; 2 * q * k <= max_degree; ++k) out.add_summand(2 * q * k, c.h * k);
      break;
  }
  return out;
}

ChainComplex realize_chain_complex(const ElementaryComplex& c, std::size_t max_degree) {
  c.validate();
  const std::size_t top = max_degree + 1;
  const std::size_t q = c.q;
  std::vector<std::vector<std::string>> bases(top + 1);
  auto gamma = [](std::size_t k, const char* var) {
    return "γ_" + std::to_string(k) + "(" + var + ")";
  };

  switch (c.kind) {
    case ElementaryKind::ExteriorFirst: {
      bases[0].push_back("1");
      if (2 * q - 1 <= top) bases[2 * q - 1].push_back("x");
      return ChainComplex(std::move(bases));
    }
    case ElementaryKind::DividedPowerFirst: {
      for (std::size_t k = 0; 2 * q * k <= top; ++k) bases[2 * q * k].push_back(gamma(k, "x"));
      return ChainComplex(std::move(bases));
    }
    case ElementaryKind::EPSecond: {
      // γ_k(y) in degree 2qk; x·γ_k(y) in degree 2qk+2q-1. Degrees are
      // distinct mod 2q, so each basis has at most one element.
      for (std::size_t k = 0; 2 * q * k <= top; ++k) {
        bases[2 * q * k].push_back(gamma(k, "y"));
        if (2 * q * k + 2 * q - 1 <= top) bases[2 * q * k + 2 * q - 1].push_back("x·" + gamma(k, "y"));
      }
      ChainComplex out(std::move(bases));
      // d γ_k(y) = γ_{k-1}(y)·dy = h·x·γ_{k-1}(y).
      for (std::size_t k = 1; 2 * q * k <= top; ++k) out.boundary_entry(2 * q * k, 0, 0) = c.h;
      return out;
    }
    case ElementaryKind::PESecond: {
      // γ_k(x) in degree 2qk; y·γ_k(x) in degree 2qk+2q+1.
      for (std::size_t k = 0; 2 * q * k <= top; ++k) {
        bases[2 * q * k].push_back(gamma(k, "x"));
        if (2 * q * k + 2 * q + 1 <= top) bases[2 * q * k + 2 * q + 1].push_back("y·" + gamma(k, "x"));
      }
      ChainComplex out(std::move(bases));
      // d(y·γ_k(x)) = h·x·γ_k(x) = h(k+1)·γ_{k+1}(x).
      for (std::size_t k = 0; 2 * q * k + 2 * q + 1 <= top; ++k)
        out.boundary_entry(2 * q * k + 2 * q + 1, 0, 0) = c.h * (k + 1);
      return out;
    }
  }
  throw std::logic_error("unknown elementary complex kind");
}

ChainComplex tensor_chain_complex(const ChainComplex& a, const ChainComplex& b,
                                  std::size_t max_degree) {
  const std::size_t top = max_degree + 1;
  if (a.max_degree() < top || b.max_degree() < top)
    throw TruncationError("tensor factors must be known through degree " + std::to_string(top));
  if (!a.is_complex() || !b.is_complex())
    throw NotAComplexError("tensor factor is not a chain complex");

  // offset[m][i]: first index in degree m of the block C_i(a) ⊗ C_{m-i}(b),
  // ordered by a-basis index, then b-basis index.
  std::vector<std::vector<std::size_t>> offset(top + 1);
  std::vector<std::vector<std::string>> bases(top + 1);
  for (std::size_t m = 0; m <= top; ++m) {
    offset[m].resize(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      offset[m][i] = bases[m].size();
      for (const std::string& x : a.basis(i))
        for (const std::string& y : b.basis(m - i)) bases[m].push_back(x + "⊗" + y);
    }
  }
  ChainComplex out(std::move(bases));

  for (std::size_t m = 1; m <= top; ++m) {
    for (std::size_t i = 0; i <= m; ++i) {
      const std::size_t j = m - i;
      const std::size_t nb = b.rank(j);
      for (std::size_t s = 0; s < a.rank(i); ++s) {
        for (std::size_t t = 0; t < nb; ++t) {
          const std::size_t src = offset[m][i] + s * nb + t;
          if (i > 0) {
            const IntegerMatrix& da = a.boundary(i);
            for (std::size_t s2 = 0; s2 < da.rows(); ++s2)
              if (da(s2, s) != 0)
                out.boundary_entry(m, offset[m - 1][i - 1] + s2 * nb + t, src) += da(s2, s);
          }
          if (j > 0) {
            const IntegerMatrix& db = b.boundary(j);
            const std::size_t nb2 = b.rank(j - 1);
            for (std::size_t t2 = 0; t2 < db.rows(); ++t2)
              if (db(t2, t) != 0) {
                Integer coeff = db(t2, t);
                if (i % 2 == 1) coeff = -coeff;
                out.boundary_entry(m, offset[m - 1][i] + s * nb2 + t2, src) += coeff;
              }
          }
        }
      }
    }
  }
  return out;
}

XFactorization build_Xp(unsigned long p, unsigned long r, std::size_t max_degree) {
  if (!is_prime(p)) throw std::invalid_argument("X_p needs a prime, got " + std::to_string(p));
  if (r == 0) throw std::invalid_argument("X_p needs exponent r >= 1");
  XFactorization out{p, r, {}, max_degree};
  const std::string ps = std::to_string(p);
  out.factors.push_back(ElementaryComplex::divided_exterior(
      1, pow(p, r), "P(σ²u,2)⊗E(σψ_{" + ps + "^" + std::to_string(r) + "}u,3)"));
  // The k-th factor has generators in degrees 1+2p^{k+1} and 2+2p^{k+1}.
  Integer pk = p;  // p^{k+1}
  for (unsigned long k = 0;; ++k) {
    Integer low = 1 + 2 * pk;
    if (low > max_degree) break;
    const unsigned long q = Integer(pk + 1).get_ui();
    std::string kk = std::to_string(k);
    out.factors.push_back(ElementaryComplex::exterior_divided(
        q, p,
        "E(σγ^" + std::to_string(k + 1) + "φ v," + to_string(low) + ")⊗P(φγ^" + kk + "φ v," +
            to_string(low + 1) + ")"));
    pk *= p;
  }
  return out;
}

GradedAbelianGroup homology_Xp(unsigned long p, unsigned long r, std::size_t max_degree) {
  XFactorization x = build_Xp(p, r, max_degree);
  GradedAbelianGroup acc = GradedAbelianGroup::unit(max_degree);
  for (const ElementaryComplex& f : x.factors)
    acc = kunneth(acc, closed_form_homology(f, max_degree), max_degree);
  return acc;
}

GradedAbelianGroup homology_X(std::uint64_t n, std::size_t max_degree) {
  if (n < 2) throw std::invalid_argument("K(Z/n,2) needs n >= 2");
  GradedAbelianGroup acc = GradedAbelianGroup::unit(max_degree);
  for (const auto& [p, r] : factorize(n)) acc = kunneth(acc, homology_Xp(p, r, max_degree), max_degree);
  return acc;
}

ChainComplex realize_Xp(unsigned long p, unsigned long r, std::size_t max_degree) {
  XFactorization x = build_Xp(p, r, max_degree);
  ChainComplex acc = realize_chain_complex(x.factors.front(), max_degree);
  for (std::size_t i = 1; i < x.factors.size(); ++i)
    acc = tensor_chain_complex(acc, realize_chain_complex(x.factors[i], max_degree), max_degree);
  return acc;
}

Integer exponent_bound(unsigned long p, unsigned long r, unsigned long k) {
  if (!is_prime(p)) throw std::invalid_argument("exponent bound needs a prime");
  if (k == 0) throw std::invalid_argument("exponent bound needs k >= 1");
  return pow(p, r + valuation(Integer(k), p));
}

}  // namespace cartan
