#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ncpark/bigint.hpp"
#include "ncpark/errors.hpp"
#include "ncpark/qpoly.hpp"
#include "ncpark/rational.hpp"

namespace ncpark {

// gamma_{n,j} = n! * sum over j-tuples 1 < b_1 < ... < b_j < n with gaps > 1
// of prod (n - b_i) / b_i. Computed with exact rationals; the total is asserted
// integral.
inline BigInt gamma_sum_formula(int n, int j) {
  Rational total(0);
  std::vector<int> tuple(j);
  std::function<void(int, int, Rational)> rec = [&](int idx, int lo, Rational prod) {
    if (idx == j) {
      total += prod;
      return;
    }
    for (int b = lo; b < n; ++b)
      rec(idx + 1, b + 2, prod * Rational(BigInt(n - b), BigInt(b)));
  };
  rec(0, 2, Rational(1));
  return (Rational(factorial(n)) * total).to_bigint();
}

inline GammaVector gamma_vector_sum(int n) {
  GammaVector g;
  for (int j = 0; 2 * j <= n - 1; ++j) g.push_back(gamma_sum_formula(n, j));
  return g;
}

// Product form of the gamma generating polynomial:
//   n * prod_{k=1}^{(n-1)/2} (k(n-k) + (n-2k)^2 q)        for odd n,
//   (n^2/2) * prod_{k=1}^{(n-2)/2} (k(n-k) + (n-2k)^2 q)  for even n.
inline GammaVector gamma_product_formula(int n) {
  QPolynomial prod = QPolynomial::constant(1);
  int top = (n % 2 == 1) ? (n - 1) / 2 : (n - 2) / 2;
  for (int k = 1; k <= top; ++k)
    prod *= QPolynomial{BigInt(k) * BigInt(n - k),
                        BigInt(n - 2 * k) * BigInt(n - 2 * k)};
  BigInt front = (n % 2 == 1) ? BigInt(n) : BigInt::exact_div(BigInt(n) * BigInt(n), 2);
  prod = prod.scaled(front);
  GammaVector g(prod.coefficients());
  if (g.empty()) g.push_back(0);
  return g;
}

// Fraction-free (Bareiss) determinant with row pivoting. Works in-place on a
// square matrix of polynomials with rational coefficients; every division is
// exact by construction.
inline RationalQPolynomial determinant(std::vector<std::vector<RationalQPolynomial>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw internal_error("determinant of non-square matrix");
  if (n == 0) return RationalQPolynomial::constant(Rational(1));
  int sign = 1;
  RationalQPolynomial prev = RationalQPolynomial::constant(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return RationalQPolynomial();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_poly_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  RationalQPolynomial det = m[n - 1][n - 1];
  if (sign < 0) det = det.scaled(Rational(-1));
  return det;
}

namespace detail {

// Almost-triangular matrix with -1 on the subdiagonal, (n-j)q/j in column j of
// every row at or above the diagonal, and a final all-ones column. Zeroing the
// diagonal restricts the surviving excedance sets to sparse ones.
inline std::vector<std::vector<RationalQPolynomial>> word_count_matrix(int n, bool zero_diagonal) {
  std::vector<std::vector<RationalQPolynomial>> m(
      n, std::vector<RationalQPolynomial>(n, RationalQPolynomial()));
  for (int i = 0; i < n; ++i) {
    if (i > 0) m[i][i - 1] = RationalQPolynomial::constant(Rational(-1));
    for (int j = i; j < n - 1; ++j)
      m[i][j] = RationalQPolynomial::monomial(Rational(BigInt(n - (j + 1)), BigInt(j + 1)), 1);
    m[i][n - 1] = RationalQPolynomial::constant(Rational(1));
  }
  if (zero_diagonal)
    for (int i = 0; i + 1 < n; ++i) m[i][i] = RationalQPolynomial();
  return m;
}

}  // namespace detail

// n! times the determinant of the full word-count matrix; equals the chain
// polynomial of rank n in type B.
inline QPolynomial m_determinant(int n) {
  RationalQPolynomial det = determinant(detail::word_count_matrix(n, false));
  return to_integer(det.scaled(Rational(factorial(n))));
}

// n! times the determinant with zeroed diagonal; its coefficients are the
// gamma vector.
inline QPolynomial gamma_determinant(int n) {
  RationalQPolynomial det = determinant(detail::word_count_matrix(n, true));
  return to_integer(det.scaled(Rational(factorial(n))));
}

// Determinant of the (n+1) x (n+1) tridiagonal matrix with diagonal
// x, x+y, ..., x+ny, superdiagonal u, 2u, ..., nu and subdiagonal
// nv, (n-1)v, ..., v, computed by the three-term recurrence
//   D_k = (x + k y) D_{k-1} - k u (n - k + 1) v D_{k-2}.
inline RationalQPolynomial chu_tridiagonal(int n,
                                           const RationalQPolynomial& x,
                                           const RationalQPolynomial& y,
                                           const RationalQPolynomial& u,
                                           const RationalQPolynomial& v) {
  if (n < 0) return RationalQPolynomial::constant(Rational(1));
  RationalQPolynomial prev2 = RationalQPolynomial::constant(Rational(1));
  RationalQPolynomial prev = x;
  for (int k = 1; k <= n; ++k) {
    RationalQPolynomial diag = x + y.scaled(Rational(k));
    RationalQPolynomial offdiag = (u * v).scaled(Rational(BigInt(k) * BigInt(n - k + 1)));
    RationalQPolynomial cur = diag * prev - offdiag * prev2;
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

// The same determinant as a product over k = 0..n of
//   x + ny/2 + ((n-2k)/2) sqrt(y^2 + 4uv).
// Conjugate factors k and n-k are multiplied together so only y^2 + 4uv ever
// appears; for even factor counts a lone middle term x + ny/2 remains.
inline RationalQPolynomial chu_product(int n,
                                       const RationalQPolynomial& x,
                                       const RationalQPolynomial& y,
                                       const RationalQPolynomial& u,
                                       const RationalQPolynomial& v) {
  if (n < 0) return RationalQPolynomial::constant(Rational(1));
  RationalQPolynomial center = x + y.scaled(Rational(BigInt(n), BigInt(2)));
  RationalQPolynomial disc = y * y + (u * v).scaled(Rational(4));
  RationalQPolynomial prod = RationalQPolynomial::constant(Rational(1));
  for (int k = 0; 2 * k < n; ++k) {
    Rational half_gap(BigInt(n - 2 * k), BigInt(2));
    prod *= center * center - disc.scaled(half_gap * half_gap);
  }
  if (n % 2 == 0) prod *= center;
  return prod;
}

// Gamma vector through the zero-diagonal determinant route, evaluated with the
// tridiagonal recurrence: n * f_{n-2}(1, 1; -1, q).
inline GammaVector gamma_vector_chu(int n) {
  RationalQPolynomial one = RationalQPolynomial::constant(Rational(1));
  RationalQPolynomial f = chu_tridiagonal(n - 2, one, one,
                                          one.scaled(Rational(-1)),
                                          RationalQPolynomial::q());
  QPolynomial p = to_integer(f.scaled(Rational(n)));
  GammaVector g(p.coefficients());
  if (g.empty()) g.push_back(0);
  return g;
}

}  // namespace ncpark
