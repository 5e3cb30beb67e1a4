#include "cartan/chain_complex.hpp"

#include <stdexcept>

namespace cartan {

ChainComplex::ChainComplex(std::vector<std::vector<std::string>> bases)
    : bases_(std::move(bases)) {
  if (bases_.empty()) throw std::invalid_argument("chain complex needs degree 0");
  boundaries_.reserve(bases_.size());
  boundaries_.emplace_back(0, bases_[0].size());
  for (std::size_t n = 1; n < bases_.size(); ++n)
    boundaries_.emplace_back(bases_[n - 1].size(), bases_[n].size());
}

void ChainComplex::set_boundary(std::size_t degree, IntegerMatrix m) {
  const IntegerMatrix& slot = boundaries_.at(degree);
  if (m.rows() != slot.rows() || m.cols() != slot.cols())
    throw std::invalid_argument("boundary shape does not match the bases in degree " +
                                std::to_string(degree));
  boundaries_[degree] = std::move(m);
}

bool ChainComplex::is_complex() const {
  for (std::size_t n = 2; n <= max_degree(); ++n)
    if (!(boundaries_[n - 1] * boundaries_[n]).is_zero()) return false;
  return true;
}

namespace {

// Column-style Hermite reduction of `m`: finds unimodular V (with inverse)
// such that m·V has its nonzero columns first. Returns the rank; the
// remaining columns of V span ker m.
struct ColumnReduction {
  IntegerMatrix reduced;
  IntegerMatrix basis;    // V
  IntegerMatrix inverse;  // V^{-1}
  std::size_t rank = 0;
};

ColumnReduction column_reduce(const IntegerMatrix& m) {
  ColumnReduction out{m, IntegerMatrix::identity(m.cols()), IntegerMatrix::identity(m.cols())};
  IntegerMatrix& a = out.reduced;
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < a.rows() && pivot_col < a.cols(); ++r) {
    // Fold every later column into pivot_col with extended-gcd steps so that
    // row r is zero beyond the pivot.
    for (std::size_t c = pivot_col + 1; c < a.cols(); ++c) {
      if (a(r, c) == 0) continue;
      if (a(r, pivot_col) == 0) {
        a.swap_cols(pivot_col, c);
        out.basis.swap_cols(pivot_col, c);
        out.inverse.swap_rows(pivot_col, c);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(r, pivot_col).get_mpz_t(),
                 a(r, c).get_mpz_t());
      Integer x = a(r, pivot_col) / g;
      Integer y = a(r, c) / g;
      // [col_p, col_c] <- [col_p, col_c] · [[s, -y], [t, x]], determinant 1.
      a.combine_cols(pivot_col, c, s, t, -y, x);
      out.basis.combine_cols(pivot_col, c, s, t, -y, x);
      // Inverse transform [[x, y], [-t, s]] acts on rows of V^{-1}.
      out.inverse.combine_rows(pivot_col, c, x, y, -t, s);
    }
    if (a(r, pivot_col) != 0) ++pivot_col;
  }
  out.rank = pivot_col;
  return out;
}

}  // namespace

HomologyGroup homology_of_complex(const ChainComplex& c, std::size_t n) {
  if (n >= c.max_degree())
    throw TruncationError("homology in degree " + std::to_string(n) +
                          " needs the boundary from degree " + std::to_string(n + 1) +
                          ", beyond the truncation at " + std::to_string(c.max_degree()));
  const IntegerMatrix& outgoing = c.boundary(n);
  const IntegerMatrix& incoming = c.boundary(n + 1);
  ColumnReduction red = column_reduce(outgoing);
  const std::size_t dim = c.rank(n);
  const std::size_t kernel_dim = dim - red.rank;

  // Coordinates of im ∂_{n+1} in the kernel basis: the last kernel_dim rows
  // of V^{-1}·∂_{n+1}. The remaining rows vanish because ∂_n ∘ ∂_{n+1} = 0.
  IntegerMatrix coords = red.inverse * incoming;
  IntegerMatrix restricted(kernel_dim, incoming.cols());
  for (std::size_t i = 0; i < red.rank; ++i)
    for (std::size_t j = 0; j < incoming.cols(); ++j)
      if (coords(i, j) != 0) throw NotAComplexError("boundary of a boundary is nonzero");
  for (std::size_t i = 0; i < kernel_dim; ++i)
    for (std::size_t j = 0; j < incoming.cols(); ++j)
      restricted(i, j) = coords(red.rank + i, j);

  SmithForm snf = smith_normal_form(std::move(restricted));
  HomologyGroup out;
  out.free_rank = kernel_dim - snf.rank();
  for (const Integer& d : snf.invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

GradedAbelianGroup homology(const ChainComplex& c) {
  if (c.max_degree() == 0) throw TruncationError("complex too short to compute any homology");
  GradedAbelianGroup out(c.max_degree() - 1);
  for (std::size_t n = 0; n < c.max_degree(); ++n) {
    HomologyGroup h = homology_of_complex(c, n);
    out.set_component(n, {h.free_rank, std::move(h.torsion)});
  }
  return out;
}

}  // namespace cartan
