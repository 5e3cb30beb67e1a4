#include "cartan/snf.hpp"

#include <stdexcept>

namespace cartan {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  for (const Integer& e : entries_)
    if (e != 0) return false;
  return true;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(src, c) != 0) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, src) != 0) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::combine_rows(std::size_t a, std::size_t b, const Integer& x,
                                 const Integer& y, const Integer& z, const Integer& w) {
  for (std::size_t c = 0; c < cols_; ++c) {
    Integer va = (*this)(a, c);
    Integer vb = (*this)(b, c);
    (*this)(a, c) = x * va + y * vb;
    (*this)(b, c) = z * va + w * vb;
  }
}

void IntegerMatrix::combine_cols(std::size_t a, std::size_t b, const Integer& x,
                                 const Integer& y, const Integer& z, const Integer& w) {
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer va = (*this)(r, a);
    Integer vb = (*this)(r, b);
    (*this)(r, a) = x * va + y * vb;
    (*this)(r, b) = z * va + w * vb;
  }
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in product");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Integer determinant(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntegerMatrix m = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Working state of the reduction: the matrix plus optional transforms with
// U·M_original·V = M_current.
struct Reduction {
  IntegerMatrix m;
  std::optional<IntegerMatrix> u;
  std::optional<IntegerMatrix> v;

  void swap_rows(std::size_t a, std::size_t b) {
    m.swap_rows(a, b);
    if (u) u->swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    m.swap_cols(a, b);
    if (v) v->swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    m.add_row_multiple(dst, src, f);
    if (u) u->add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    m.add_col_multiple(dst, src, f);
    if (v) v->add_col_multiple(dst, src, f);
  }
  void negate_row(std::size_t r) {
    m.negate_row(r);
    if (u) u->negate_row(r);
  }
};

// Position of a nonzero entry of minimal absolute value in the lower-right
// block starting at (t, t).
bool find_pivot(const IntegerMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      const Integer& e = m(r, c);
      if (e == 0) continue;
      if (!found || mpz_cmpabs(e.get_mpz_t(), best.get_mpz_t()) < 0) {
        best = e;
        pr = r;
        pc = c;
        found = true;
        if (best == 1 || best == -1) return true;
      }
    }
  return found;
}

// q = round(a / b), so |a - q·b| <= |b| / 2.
void nearest_quotient(Integer& q, const Integer& a, const Integer& b) {
  Integer twice = 2 * a + b;
  Integer denom = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), denom.get_mpz_t());
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix input, bool with_transforms) {
  Reduction red{std::move(input), std::nullopt, std::nullopt};
  if (with_transforms) {
    red.u = IntegerMatrix::identity(red.m.rows());
    red.v = IntegerMatrix::identity(red.m.cols());
  }
  IntegerMatrix& m = red.m;
  const std::size_t diag = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < diag; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(m, t, pr, pc)) break;
    red.swap_rows(t, pr);
    red.swap_cols(t, pc);
    for (;;) {
      // Bring the smallest nonzero entry of row t and column t to (t, t).
      std::size_t br = t, bc = t;
      for (std::size_t r = t; r < m.rows(); ++r)
        if (m(r, t) != 0 && (m(br, bc) == 0 || mpz_cmpabs(m(r, t).get_mpz_t(), m(br, bc).get_mpz_t()) < 0)) {
          br = r;
          bc = t;
        }
      for (std::size_t c = t + 1; c < m.cols(); ++c)
        if (m(t, c) != 0 && (m(br, bc) == 0 || mpz_cmpabs(m(t, c).get_mpz_t(), m(br, bc).get_mpz_t()) < 0)) {
          br = t;
          bc = c;
        }
      red.swap_rows(t, br);
      red.swap_cols(t, bc);

      // Reduce row t and column t by nearest-integer quotients; anything left
      // over is smaller than half the pivot and becomes the next pivot.
      bool clear = true;
      Integer q;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        nearest_quotient(q, m(r, t), m(t, t));
        red.add_row(r, t, -q);
        if (m(r, t) != 0) clear = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        nearest_quotient(q, m(t, c), m(t, t));
        red.add_col(c, t, -q);
        if (m(t, c) != 0) clear = false;
      }
      if (!clear) continue;

      // Enforce divisibility of the remaining block by folding an offending
      // row into row t.
      bool divisible = true;
      for (std::size_t r = t + 1; r < m.rows() && divisible; ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (!mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
            red.add_row(t, r, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (m(t, t) < 0) red.negate_row(t);
  }

  SmithForm out;
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(m(i, i));
  out.zero_count = diag - t;
  out.diagonal = std::move(red.m);
  out.left = std::move(red.u);
  out.right = std::move(red.v);
  return out;
}

std::size_t rank(const IntegerMatrix& m) { return smith_normal_form(m).rank(); }

}  // namespace cartan
