#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ncpark/bigint.hpp"
#include "ncpark/errors.hpp"
#include "ncpark/perm.hpp"
#include "ncpark/qpoly.hpp"
#include "ncpark/rational.hpp"

namespace ncpark {

// Words: type A has n-1 letters over 0..n, type B has n letters over 1..n.
// A letter is an excedance when it exceeds its position.

inline int exc_count(const std::vector<int>& word) {
  int count = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] > static_cast<int>(i) + 1) ++count;
  return count;
}

inline void enumerate_words(GroupType type, int n,
                            const std::function<void(const std::vector<int>&)>& yield) {
  const int len = type == GroupType::A ? n - 1 : n;
  const int lo = type == GroupType::A ? 0 : 1;
  const int hi = n;
  std::vector<int> word(len, lo);
  while (true) {
    yield(word);
    int k = len - 1;
    while (k >= 0 && word[k] == hi) word[k--] = lo;
    if (k < 0) break;
    ++word[k];
  }
}

inline QPolynomial exc_polynomial(GroupType type, int n) {
  std::vector<BigInt> hist(n + 1, BigInt(0));
  enumerate_words(type, n, [&](const std::vector<int>& w) { hist[exc_count(w)] += 1; });
  return QPolynomial(std::move(hist));
}

// Type-B words starting with 1 and containing no two consecutive excedances;
// their excedance distribution is the gamma vector.
inline bool in_f_set(const std::vector<int>& word) {
  if (word.empty() || word[0] != 1) return false;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > static_cast<int>(i) + 1 && word[i + 1] > static_cast<int>(i) + 2)
      return false;
  return true;
}

inline void enumerate_f(int n, const std::function<void(const std::vector<int>&)>& yield) {
  enumerate_words(GroupType::B, n, [&](const std::vector<int>& w) {
    if (in_f_set(w)) yield(w);
  });
}

inline GammaVector gamma_vector_words(int n) {
  GammaVector g((n + 1) / 2, BigInt(0));
  enumerate_f(n, [&](const std::vector<int>& w) { g[exc_count(w)] += 1; });
  return g;
}

// Number of type-B words of length n whose excedance set is exactly the given
// positions: n! * prod (n - b) / b, an integer for any valid position set.
inline BigInt excedance_set_count(int n, const std::vector<int>& positions) {
  Rational prod(factorial(n));
  for (int b : positions) {
    if (b < 1 || b > n - 1) throw invalid_input("excedance positions lie in 1..n-1");
    prod *= Rational(BigInt(n - b), BigInt(b));
  }
  return prod.to_bigint();
}

inline std::string to_string_word(const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

inline std::vector<int> parse_word(std::string_view text) {
  return parse_int_list(text, ' ');
}

}  // namespace ncpark
