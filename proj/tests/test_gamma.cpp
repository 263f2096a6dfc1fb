#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncpark/chains.hpp"
#include "ncpark/gamma.hpp"
#include "ncpark/words.hpp"

using namespace ncpark;

TEST_CASE("gap-tuple sum formula") {
  CHECK(gamma_sum_formula(3, 1) == BigInt(3));
  CHECK(gamma_sum_formula(3, 0) == BigInt(6));
  CHECK(gamma_sum_formula(5, 0) == BigInt(120));
  CHECK(gamma_sum_formula(5, 1) == BigInt(290));
  CHECK(gamma_sum_formula(5, 2) == BigInt(45));
  for (int n = 1; n <= 7; ++n) CHECK(gamma_sum_formula(n, 0) == factorial(n));
}

TEST_CASE("product formula") {
  CHECK(gamma_product_formula(3) == GammaVector{6, 3});
  CHECK(gamma_product_formula(4) == GammaVector{24, 32});
  CHECK(gamma_product_formula(1) == GammaVector{1});
  CHECK(gamma_product_formula(2) == GammaVector{2});
  CHECK(gamma_product_formula(5) == GammaVector{120, 290, 45});
}

TEST_CASE("determinant routes") {
  CHECK(to_string(m_determinant(1)) == "1");
  CHECK(to_string(m_determinant(2)) == "2 + 2*q");
  CHECK(to_string(m_determinant(3)) == "6 + 15*q + 6*q^2");
  for (int n = 1; n <= 10; ++n) CHECK(m_determinant(n) == closed_form_b(n));

  CHECK(to_string(gamma_determinant(1)) == "1");
  CHECK(to_string(gamma_determinant(3)) == "6 + 3*q");
  CHECK(to_string(gamma_determinant(5)) == "120 + 290*q + 45*q^2");
}

TEST_CASE("all gamma routes agree through rank 12") {
  for (int n = 1; n <= 12; ++n) {
    GammaVector expand = gamma_expand(closed_form_b(n), n);
    CHECK(gamma_vector_sum(n) == expand);
    CHECK(gamma_product_formula(n) == expand);
    CHECK(GammaVector(gamma_determinant(n).coefficients()) == expand);
    CHECK(gamma_vector_chu(n) == expand);
    CHECK(gamma_reconstruct(expand, n) == closed_form_b(n));
  }
  for (int n = 1; n <= 7; ++n)
    CHECK(gamma_vector_words(n) == gamma_expand(closed_form_b(n), n));
}

TEST_CASE("formula routes keep agreeing at wider ranks") {
  for (int n = 13; n <= 16; ++n) {
    GammaVector expand = gamma_expand(closed_form_b(n), n);
    CHECK(gamma_vector_sum(n) == expand);
    CHECK(gamma_product_formula(n) == expand);
    CHECK(GammaVector(gamma_determinant(n).coefficients()) == expand);
    CHECK(m_determinant(n) == closed_form_b(n));
  }
  // 14-limb-scale coefficients survive the determinant route intact.
  CHECK(gamma_expand(closed_form_b(16), 16).front() == factorial(16));
}

TEST_CASE("tridiagonal determinant basics") {
  auto c = [](long long v) { return RationalQPolynomial::constant(Rational(v)); };
  const RationalQPolynomial q = RationalQPolynomial::q();

  // 1x1 determinant is the corner entry.
  RationalQPolynomial f0 = chu_tridiagonal(0, c(7), c(3), c(2), c(5));
  CHECK(f0 == c(7));

  // f_1(1,1;-1,q) = det [[1,-1],[q,2]] = 2 + q, and 3 times it is the rank-3
  // gamma polynomial.
  RationalQPolynomial f1 = chu_tridiagonal(1, c(1), c(1), c(-1), q);
  CHECK(to_integer(f1) == QPolynomial{2, 1});
  CHECK(to_integer(f1.scaled(Rational(3))) == QPolynomial{6, 3});

  // A vanishing case: x=2, y=0, u=v=1 at size 3.
  RationalQPolynomial f2 = chu_tridiagonal(2, c(2), c(0), c(1), c(1));
  CHECK(f2.is_zero());
  CHECK(chu_product(2, c(2), c(0), c(1), c(1)).is_zero());
}

TEST_CASE("tridiagonal determinant equals the paired product") {
  auto c = [](long long v) { return RationalQPolynomial::constant(Rational(v)); };
  const RationalQPolynomial one = c(1);
  const RationalQPolynomial q = RationalQPolynomial::q();
  for (int n = 0; n <= 12; ++n)
    CHECK(chu_tridiagonal(n, one, one, c(-1), q) == chu_product(n, one, one, c(-1), q));
  // Integer spot checks where y^2 + 4uv is a perfect square.
  struct Spot {
    int n;
    long long x, y, u, v, expected;
  };
  for (const Spot& s : {Spot{1, 3, 1, 2, 1, 10}, Spot{2, 2, 0, 1, 1, 0}}) {
    RationalQPolynomial det = chu_tridiagonal(s.n, c(s.x), c(s.y), c(s.u), c(s.v));
    CHECK(det == c(s.expected));
    CHECK(chu_product(s.n, c(s.x), c(s.y), c(s.u), c(s.v)) == c(s.expected));
    // Direct evaluation of the product with the literal square root.
    long long disc = s.y * s.y + 4 * s.u * s.v;
    long long root = 0;
    while (root * root < disc) ++root;
    REQUIRE(root * root == disc);
    Rational direct(1);
    for (int k = 0; k <= s.n; ++k)
      direct *= Rational(2 * s.x + s.n * s.y + (s.n - 2 * k) * root, 2);
    CHECK(direct == Rational(s.expected));
  }
}

TEST_CASE("generic determinant routine") {
  using P = RationalQPolynomial;
  auto c = [](long long v) { return P::constant(Rational(v)); };
  // Singular matrix.
  CHECK(determinant({{c(1), c(2)}, {c(2), c(4)}}).is_zero());
  // Needs a pivot swap.
  CHECK(determinant({{c(0), c(1)}, {c(1), c(0)}}) == c(-1));
  // 3x3 with polynomial entries: det [[q,1,0],[1,q,1],[0,1,q]] = q^3 - 2q.
  P q = P::q();
  P det = determinant({{q, c(1), c(0)}, {c(1), q, c(1)}, {c(0), c(1), q}});
  CHECK(det == P{Rational(0), Rational(-2), Rational(0), Rational(1)});
}
