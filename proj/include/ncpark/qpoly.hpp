#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncpark/bigint.hpp"
#include "ncpark/errors.hpp"
#include "ncpark/rational.hpp"

namespace ncpark {

// Dense polynomial in q over an exact coefficient ring. Canonical form has no
// trailing zero coefficient; the zero polynomial has an empty coefficient list.
template <typename C>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<C> cs) : coeffs_(cs) { trim(); }
  explicit Poly(std::vector<C> cs) : coeffs_(std::move(cs)) { trim(); }

  static Poly constant(C c) { return Poly(std::vector<C>{std::move(c)}); }
  static Poly q() { return Poly(std::vector<C>{C(0), C(1)}); }
  static Poly monomial(C c, int power) {
    std::vector<C> cs(power + 1, C(0));
    cs[power] = std::move(c);
    return Poly(std::move(cs));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<C>& coefficients() const { return coeffs_; }

  C coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return C(0);
    return coeffs_[k];
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<C> r(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<C> r(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
    return Poly(std::move(r));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> r(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(r));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const C& f) const {
    std::vector<C> r = coeffs_;
    for (auto& c : r) c = c * f;
    return Poly(std::move(r));
  }

  C eval(const C& point) const {
    C acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == C(0)) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

using QPolynomial = Poly<BigInt>;
using RationalQPolynomial = Poly<Rational>;

inline RationalQPolynomial to_rational(const QPolynomial& p) {
  std::vector<Rational> cs;
  cs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) cs.emplace_back(c);
  return RationalQPolynomial(std::move(cs));
}

// Exact conversion back to integer coefficients; throws on any fractional one.
inline QPolynomial to_integer(const RationalQPolynomial& p) {
  std::vector<BigInt> cs;
  cs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (!c.is_integer())
      throw internal_error("polynomial has non-integer coefficient " + c.to_string());
    cs.push_back(c.to_bigint());
  }
  return QPolynomial(std::move(cs));
}

// Long division over a field of coefficients; used where divisibility is
// guaranteed and remainder-freeness is asserted.
inline RationalQPolynomial exact_poly_div(const RationalQPolynomial& a,
                                          const RationalQPolynomial& b) {
  if (b.is_zero()) throw internal_error("polynomial division by zero");
  std::vector<Rational> rem(a.coefficients());
  int db = b.degree();
  Rational lead = b.coeff(db);
  std::vector<Rational> q(a.degree() >= db ? a.degree() - db + 1 : 0, Rational(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational f = rem[k + db] / lead;
    q[k] = f;
    if (f.is_zero()) continue;
    for (int i = 0; i <= db; ++i) rem[k + i] -= f * b.coeff(i);
  }
  for (const auto& c : rem)
    if (!c.is_zero()) throw internal_error("inexact polynomial division");
  return RationalQPolynomial(std::move(q));
}

// Renders e.g. "6 + 15*q + 6*q^2"; the zero polynomial renders as "0".
inline std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const BigInt& c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << c.to_string();
    if (k == 1) out << "*q";
    if (k > 1) out << "*q^" << k;
  }
  return out.str();
}

inline std::vector<std::string> coefficient_strings(const QPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  if (out.empty()) out.push_back("0");
  return out;
}

// Gamma coefficients of a palindromic polynomial; entry j multiplies
// q^j (1+q)^(n-1-2j) in the reconstruction.
using GammaVector = std::vector<BigInt>;

inline QPolynomial one_plus_q_power(int e) {
  QPolynomial r = QPolynomial::constant(1);
  QPolynomial base{1, 1};
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline QPolynomial gamma_reconstruct(const GammaVector& g, int n) {
  QPolynomial sum;
  for (std::size_t j = 0; j < g.size(); ++j)
    sum += QPolynomial::monomial(g[j], static_cast<int>(j)) *
           one_plus_q_power(n - 1 - 2 * static_cast<int>(j));
  return sum;
}

// Expands a palindromic polynomial of degree <= n-1 in the basis
// q^j (1+q)^(n-1-2j). Throws invalid_input if the input is not palindromic.
inline GammaVector gamma_expand(const QPolynomial& p, int n) {
  if (p.degree() > n - 1)
    throw invalid_input("polynomial degree exceeds n-1");
  for (int i = 0; i < n; ++i)
    if (p.coeff(i) != p.coeff(n - 1 - i))
      throw invalid_input("polynomial is not palindromic: " + to_string(p));
  GammaVector g;
  QPolynomial rest = p;
  for (int j = 0; 2 * j <= n - 1; ++j) {
    BigInt gj = rest.coeff(j);
    g.push_back(gj);
    rest -= QPolynomial::monomial(gj, j) * one_plus_q_power(n - 1 - 2 * j);
  }
  if (!rest.is_zero()) throw internal_error("gamma expansion left a remainder");
  return g;
}

inline std::string to_string(const GammaVector& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ' ';
    out += g[i].to_string();
  }
  return out;
}

}  // namespace ncpark
