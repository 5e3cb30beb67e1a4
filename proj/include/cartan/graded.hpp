#pragma once

// Finitely generated graded abelian groups, truncated at a maximal degree.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cartan/integer.hpp"

namespace cartan {

/// Raised when a query reaches past the degree up to which a truncated
/// group is known.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Order of a cyclic group: 0 encodes Z; finite orders are >= 2 once
/// normalized (order 1 is the trivial group and is dropped).
using CyclicOrder = Integer;

/// Z/a ⊗ Z/b; std::nullopt when the product is trivial.
std::optional<CyclicOrder> tensor_summands(const CyclicOrder& a, const CyclicOrder& b);
/// Tor(Z/a, Z/b); std::nullopt when trivial.
std::optional<CyclicOrder> tor_summands(const CyclicOrder& a, const CyclicOrder& b);

/// One degree of a graded group: Z^free_rank ⊕ (⊕ Z/torsion[i]).
struct DegreeComponent {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // sorted ascending, every entry >= 2

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const DegreeComponent&) const = default;
};

/// Sorts finite orders and drops order-1 summands. Throws
/// std::invalid_argument on negative orders.
DegreeComponent canonicalize(DegreeComponent c);

/// Re-expresses the torsion as invariant factors d_1 | d_2 | ... (the form
/// a Smith normal form produces). Two components are isomorphic iff their
/// invariant-factor forms are equal.
DegreeComponent invariant_factor_form(const DegreeComponent& c);

class GradedAbelianGroup {
 public:
  explicit GradedAbelianGroup(std::size_t max_degree = 0) : max_degree_(max_degree) {}

  /// Z in degree 0 and nothing else: the homology of a point.
  static GradedAbelianGroup unit(std::size_t max_degree);

  std::size_t max_degree() const { return max_degree_; }

  /// Adds one cyclic summand (0 = Z). Order 1 is ignored.
  void add_summand(std::size_t degree, const CyclicOrder& order);
  void add_free(std::size_t degree, std::size_t rank);
  void set_component(std::size_t degree, DegreeComponent c);

  /// The component in `degree`; throws TruncationError past max_degree.
  const DegreeComponent& at(std::size_t degree) const;

  /// Nonempty components only, keyed by degree.
  const std::map<std::size_t, DegreeComponent>& components() const { return components_; }

  /// Drops everything above `max_degree`; must not exceed the current cap.
  GradedAbelianGroup truncated(std::size_t max_degree) const;

  bool operator==(const GradedAbelianGroup&) const = default;

 private:
  std::size_t max_degree_;
  std::map<std::size_t, DegreeComponent> components_;
};

/// Equality of the graded groups up to isomorphism (degree by degree, via
/// invariant factors). Caps must agree.
bool isomorphic(const GradedAbelianGroup& a, const GradedAbelianGroup& b);

/// Integral Künneth formula: degree n is ⊕_{i+j=n} A_i ⊗ B_j ⊕
/// ⊕_{i+j=n-1} Tor(A_i, B_j). Requires max_degree <= min of both caps.
GradedAbelianGroup kunneth(const GradedAbelianGroup& a, const GradedAbelianGroup& b,
                           std::size_t max_degree);

struct Exponent {
  Integer torsion_exponent{1};
  std::size_t free_rank = 0;
  bool operator==(const Exponent&) const = default;
};

/// lcm of the finite orders in `degree` (1 when there are none) and the free
/// rank.
Exponent exponent(const GradedAbelianGroup& a, std::size_t degree);

/// Replaces each Z/m by Z/p^{v_p(m)} and drops free summands.
GradedAbelianGroup primary_part(const GradedAbelianGroup& a, unsigned long p);

}  // namespace cartan
