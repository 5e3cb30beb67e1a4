#pragma once

// Elementary dg complexes and the tensor complexes X_p and X whose homology
// surjects onto the homology of K(Z/n, 2).

#include <cstddef>
#include <string>
#include <vector>

#include "cartan/chain_complex.hpp"
#include "cartan/graded.hpp"
#include "cartan/integer.hpp"

namespace cartan {

enum class ElementaryKind {
  ExteriorFirst,      // E(x, 2q-1), d = 0
  DividedPowerFirst,  // P(x, 2q), d = 0
  EPSecond,           // E(x, 2q-1) ⊗ P(y, 2q), dy = h·x
  PESecond,           // P(x, 2q) ⊗ E(y, 2q+1), dy = h·x
};

struct ElementaryComplex {
  ElementaryKind kind = ElementaryKind::ExteriorFirst;
  unsigned long q = 1;
  Integer h{0};       // twist; 0 for first-type complexes
  std::string label;  // provenance only, e.g. the Cartan words of the generators

  static ElementaryComplex exterior(unsigned long q, std::string label = {});
  static ElementaryComplex divided_power(unsigned long q, std::string label = {});
  static ElementaryComplex exterior_divided(unsigned long q, Integer h, std::string label = {});
  static ElementaryComplex divided_exterior(unsigned long q, Integer h, std::string label = {});

  bool second_type() const {
    return kind == ElementaryKind::EPSecond || kind == ElementaryKind::PESecond;
  }
  /// Degrees of (x) or (x, y).
  std::vector<std::size_t> generator_degrees() const;

  /// Throws std::invalid_argument when q = 0 or h is inconsistent with kind.
  void validate() const;
};

/// Known homology of an elementary complex, up to max_degree.
GradedAbelianGroup closed_form_homology(const ElementaryComplex& c, std::size_t max_degree);

/// The based integer chain complex of c, in degrees 0..max_degree+1 so that
/// every boundary into degree max_degree is present.
ChainComplex realize_chain_complex(const ElementaryComplex& c, std::size_t max_degree);

/// Tensor product with d(a⊗b) = da⊗b + (-1)^{|a|} a⊗db, in degrees
/// 0..max_degree+1. Inputs must reach degree max_degree+1 and satisfy ∂∘∂ = 0
/// (NotAComplexError otherwise).
ChainComplex tensor_chain_complex(const ChainComplex& a, const ChainComplex& b,
                                  std::size_t max_degree);

/// The factors of X_p that can carry homology in degrees <= max_degree.
struct XFactorization {
  unsigned long prime = 2;
  unsigned long exponent = 1;
  std::vector<ElementaryComplex> factors;
  std::size_t max_degree = 0;
};

/// X_p = P(σ²u,2) ⊗ E(σψ_{p^r}u,3) ⊗ ⊗_k E(σγ^{k+1}φ v, 1+2p^{k+1}) ⊗
/// P(φγ^kφ v, 2+2p^{k+1}), keeping the k-th factor only while
/// 1 + 2p^{k+1} <= max_degree. Dropped factors are Z in degree 0 below the
/// cap, so nothing is lost.
XFactorization build_Xp(unsigned long p, unsigned long r, std::size_t max_degree);

GradedAbelianGroup homology_Xp(unsigned long p, unsigned long r, std::size_t max_degree);

/// X = ⊗ X_{p_i} over the prime powers p_i^{r_i} exactly dividing n >= 2.
GradedAbelianGroup homology_X(std::uint64_t n, std::size_t max_degree);

/// The tensored chain complex of build_Xp, in degrees 0..max_degree+1.
ChainComplex realize_Xp(unsigned long p, unsigned long r, std::size_t max_degree);

/// p^{r + v_p(k)}: bound on the order of p-primary elements of H_{2k}.
Integer exponent_bound(unsigned long p, unsigned long r, unsigned long k);

std::string to_string(ElementaryKind kind);

}  // namespace cartan
