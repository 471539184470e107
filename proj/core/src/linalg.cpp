#include "d4/linalg.hpp"

#include <utility>

namespace d4 {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::size_t rank(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return 0;
  RatMatrix m(vectors.size(), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vectors[i][j];
  return rank(std::move(m));
}

Rational determinant(RatMatrix m) {
  ensure(m.rows() == m.cols(), "determinant: matrix not square");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& input) {
  ensure(input.rows() == input.cols(), "determinant: matrix not square");
  IntMatrix m = input;
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  ensure(m.rows() == m.cols(), "inverse: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  ensure(m.rows() == b.size(), "solve: shape mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
  return x;
}

std::vector<IntVector> integer_kernel(const RatMatrix& input) {
  RatMatrix m = input;
  auto piv = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
    basis.push_back(primitive(std::span<const Rational>(v)));
  }
  return basis;
}

std::vector<std::size_t> independent_subset(const std::vector<IntVector>& vectors) {
  std::vector<std::size_t> chosen;
  if (vectors.empty()) return chosen;
  const std::size_t d = vectors.front().size();
  // Incremental echelon basis: rows kept reduced against earlier pivots.
  std::vector<RatVector> basis;
  std::vector<std::size_t> pivot_col;
  for (std::size_t idx = 0; idx < vectors.size() && basis.size() < d; ++idx) {
    RatVector v = to_rational(vectors[idx]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = v[pivot_col[b]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < d; ++j) v[j] -= f * basis[b][j];
    }
    std::size_t p = 0;
    while (p < d && v[p] == 0) ++p;
    if (p == d) continue;
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = basis[b][p];
      if (f == 0) continue;
      for (std::size_t j = 0; j < d; ++j) basis[b][j] -= f * v[j];
    }
    basis.push_back(std::move(v));
    pivot_col.push_back(p);
    chosen.push_back(idx);
  }
  return chosen;
}

IntMatrix adjugate(const IntMatrix& m) {
  ensure(m.rows() == m.cols(), "adjugate: matrix not square");
  const Integer det = determinant(m);
  ensure(det != 0, "adjugate: singular matrix");
  auto inv = inverse(to_rational(m));
  IntMatrix adj(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational q = (*inv)(i, j) * det;
      ensure(q.get_den() == 1, "adjugate: non-integral entry");
      adj(i, j) = q.get_num();
    }
  return adj;
}

std::vector<Integer> SmithForm::invariants() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(diagonal(i, i));
  return out;
}

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= f * m(src, j);
}
void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= f * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  SmithForm s{IntMatrix::identity(rows), input, IntMatrix::identity(cols)};
  IntMatrix& d = s.diagonal;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          if (pi == rows || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) return s;
      d.swap_rows(t, pi);
      s.left.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.right.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_axpy(d, i, t, q);
        row_axpy(s.left, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_axpy(d, j, t, q);
        col_axpy(s.right, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every trailing entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) continue;
          for (std::size_t c = 0; c < cols; ++c) d(t, c) += d(i, c);
          for (std::size_t c = 0; c < rows; ++c) s.left(t, c) += s.left(i, c);
          divides = false;
          break;
        }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < rows; ++c) s.left(t, c) = -s.left(t, c);
    }
  }
  return s;
}

}  // namespace d4
