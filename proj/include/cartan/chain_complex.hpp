#pragma once

// Based free chain complexes of abelian groups, truncated at a top degree,
// and their integral homology computed through Smith normal forms.

#include <cstddef>
#include <string>
#include <vector>

#include "cartan/graded.hpp"
#include "cartan/snf.hpp"

namespace cartan {

class ChainComplex {
 public:
  ChainComplex() = default;
  /// bases[n] labels the basis of C_n for 0 <= n <= max_degree; all
  /// boundaries start at zero.
  explicit ChainComplex(std::vector<std::vector<std::string>> bases);

  std::size_t max_degree() const { return bases_.size() - 1; }
  std::size_t rank(std::size_t degree) const { return bases_.at(degree).size(); }
  const std::vector<std::string>& basis(std::size_t degree) const { return bases_.at(degree); }

  /// ∂_n : C_n → C_{n-1}, as a rank(n-1) × rank(n) matrix whose column j is
  /// the boundary of the j-th basis element. ∂_0 is 0 × rank(0).
  const IntegerMatrix& boundary(std::size_t degree) const { return boundaries_.at(degree); }
  /// Shape must match the adjacent bases.
  void set_boundary(std::size_t degree, IntegerMatrix m);
  Integer& boundary_entry(std::size_t degree, std::size_t target, std::size_t source) {
    return boundaries_.at(degree)(target, source);
  }

  /// True when ∂_{n-1} ∘ ∂_n = 0 for every 2 <= n <= max_degree.
  bool is_complex() const;

 private:
  std::vector<std::vector<std::string>> bases_;
  std::vector<IntegerMatrix> boundaries_;
};

/// Raised when a chain complex fails ∂∘∂ = 0.
class NotAComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, ascending
  bool operator==(const HomologyGroup&) const = default;
};

/// H_n = ker ∂_n / im ∂_{n+1}. The kernel basis comes from a column Hermite
/// reduction of ∂_n; ∂_{n+1} is rewritten in that basis and its Smith form
/// gives the torsion. Requires n < max_degree, since ∂_{n+1} is unknown at
/// the truncation degree (throws TruncationError).
HomologyGroup homology_of_complex(const ChainComplex& c, std::size_t n);

/// H_0..H_{max_degree-1} as a graded group capped at max_degree - 1.
GradedAbelianGroup homology(const ChainComplex& c);

}  // namespace cartan
