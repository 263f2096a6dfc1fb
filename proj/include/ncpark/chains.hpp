#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ncpark/bigint.hpp"
#include "ncpark/errors.hpp"
#include "ncpark/perm.hpp"
#include "ncpark/qpoly.hpp"

namespace ncpark {

inline Permutation coxeter_a(int n) {
  std::vector<int> im(n + 1);
  for (int i = 0; i < n; ++i) im[i] = i + 2;
  im[n] = 1;
  return Permutation(std::move(im));
}

inline SignedPermutation coxeter_b(int n) {
  std::vector<int> im(n);
  for (int i = 0; i + 1 < n; ++i) im[i] = i + 2;
  im[n - 1] = -1;
  return SignedPermutation(std::move(im));
}

// A maximal chain, stored as the reflection factorization t_1..t_n of the
// Coxeter element together with the good/bad label of each cover.
struct MaximalChain {
  GroupType type = GroupType::A;
  int n = 0;
  std::vector<Reflection> reflections;
  std::vector<EdgeLabel> labels;

  friend bool operator==(const MaximalChain& a, const MaximalChain& b) {
    return a.type == b.type && a.n == b.n && a.reflections == b.reflections;
  }
  friend bool operator<(const MaximalChain& a, const MaximalChain& b) {
    return a.reflections < b.reflections;
  }
};

inline int bad_count(const MaximalChain& chain) {
  return static_cast<int>(
      std::count(chain.labels.begin(), chain.labels.end(), EdgeLabel::Bad));
}

namespace detail {

// Walks the chain downward from the Coxeter element, checking that each
// reflection splits a cycle of the current element, and labels every cover.
template <typename Elem>
inline std::vector<EdgeLabel> label_chain_downward(Elem omega,
                                                   const std::vector<Reflection>& ts,
                                                   int group_size) {
  std::vector<EdgeLabel> labels(ts.size(), EdgeLabel::Good);
  for (std::size_t i = ts.size(); i-- > 0;) {
    labels[i] = classify_cover_step(omega, ts[i]);
    if constexpr (std::is_same_v<Elem, Permutation>)
      omega = omega.compose(to_permutation(ts[i], group_size));
    else
      omega = omega.compose(to_signed_permutation(ts[i], group_size));
  }
  return labels;
}

}  // namespace detail

// Validates a factorization and builds the chain. Throws invalid_input when
// the reflections do not define a maximal chain.
inline MaximalChain make_chain(GroupType type, int n, std::vector<Reflection> ts) {
  if (static_cast<int>(ts.size()) != n)
    throw invalid_input("a maximal chain of rank n needs exactly n reflections");
  MaximalChain chain{type, n, std::move(ts), {}};
  for (const auto& t : chain.reflections) {
    bool ok = type == GroupType::A
                  ? t.kind == ReflectionKind::TypeA && t.j <= n + 1
                  : t.kind != ReflectionKind::TypeA && t.j <= n;
    if (!ok) throw invalid_input("reflection out of range for the group: " + t.to_string());
  }
  if (type == GroupType::A)
    chain.labels = detail::label_chain_downward(coxeter_a(n), chain.reflections, n + 1);
  else
    chain.labels = detail::label_chain_downward(coxeter_b(n), chain.reflections, n);
  return chain;
}

namespace detail {

template <typename Elem>
inline std::vector<Reflection> reflections_below(const Elem& omega) {
  std::vector<Reflection> out;
  if constexpr (std::is_same_v<Elem, Permutation>) {
    for (const auto& cyc : cycle_decompose(omega))
      for (std::size_t a = 0; a < cyc.size(); ++a)
        for (std::size_t b = a + 1; b < cyc.size(); ++b)
          out.push_back(Reflection::type_a(cyc[a], cyc[b]));
  } else {
    CycleDecomposition dec = signed_cycle_decompose(omega);
    std::vector<int> support;
    for (int d : dec.single_balanced()) support.push_back(std::abs(d));
    for (std::size_t a = 0; a < support.size(); ++a) {
      out.push_back(Reflection::b_long(support[a]));
      for (std::size_t b = a + 1; b < support.size(); ++b) {
        out.push_back(Reflection::b_short(support[a], support[b]));
        out.push_back(Reflection::b_mixed(support[a], support[b]));
      }
    }
    for (const auto& rep : dec.paired)
      for (std::size_t a = 0; a < rep.size(); ++a)
        for (std::size_t b = a + 1; b < rep.size(); ++b)
          out.push_back(Reflection::from_signed_pair(rep[a], rep[b]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Elem>
inline void descend(GroupType type, int n, Elem omega, int remaining,
                    std::vector<Reflection>& picked, std::vector<EdgeLabel>& labels,
                    const std::function<void(const MaximalChain&)>& yield) {
  if (remaining == 0) {
    MaximalChain chain{type, n, {}, {}};
    chain.reflections.assign(picked.rbegin(), picked.rend());
    chain.labels.assign(labels.rbegin(), labels.rend());
    yield(chain);
    return;
  }
  for (const Reflection& t : reflections_below(omega)) {
    picked.push_back(t);
    labels.push_back(classify_cover_step(omega, t));
    Elem next = [&] {
      if constexpr (std::is_same_v<Elem, Permutation>)
        return omega.compose(to_permutation(t, n + 1));
      else
        return omega.compose(to_signed_permutation(t, n));
    }();
    descend(type, n, std::move(next), remaining - 1, picked, labels, yield);
    picked.pop_back();
    labels.pop_back();
  }
}

}  // namespace detail

// Streams every minimal reflection factorization of the Coxeter element
// exactly once. Order is deterministic: depth first from the top, candidate
// reflections tried in their total order, so the last reflection varies
// slowest.
inline void enumerate_chains(GroupType type, int n,
                             const std::function<void(const MaximalChain&)>& yield) {
  std::vector<Reflection> picked;
  std::vector<EdgeLabel> labels;
  if (type == GroupType::A)
    detail::descend(type, n, coxeter_a(n), n, picked, labels, yield);
  else
    detail::descend(type, n, coxeter_b(n), n, picked, labels, yield);
}

inline std::vector<MaximalChain> all_chains(GroupType type, int n) {
  std::vector<MaximalChain> out;
  enumerate_chains(type, n, [&](const MaximalChain& c) { out.push_back(c); });
  return out;
}

inline QPolynomial chain_polynomial(GroupType type, int n) {
  std::vector<BigInt> hist(n + 1, BigInt(0));
  enumerate_chains(type, n,
                   [&](const MaximalChain& c) { hist[bad_count(c)] += 1; });
  return QPolynomial(std::move(hist));
}

// (n!/|W|) * prod_i (d_i + q (h - d_i)) for a supplied degree list; the final
// division must be exact.
inline QPolynomial closed_form(const std::vector<int>& degrees, int coxeter_number,
                               const BigInt& group_order) {
  QPolynomial prod = QPolynomial::constant(1);
  for (int d : degrees) {
    if (d > coxeter_number)
      throw invalid_input("degree exceeds the Coxeter number");
    prod *= QPolynomial{BigInt(d), BigInt(coxeter_number - d)};
  }
  prod = prod.scaled(factorial(static_cast<int>(degrees.size())));
  std::vector<BigInt> cs;
  for (const auto& c : prod.coefficients()) {
    auto [q, r] = BigInt::divmod(c, group_order);
    if (!r.is_zero())
      throw invalid_input("degree data inconsistent: division is not exact");
    cs.push_back(q);
  }
  return QPolynomial(std::move(cs));
}

// prod_{k=1}^{n-1} (n-k+1 + k q)
inline QPolynomial closed_form_a(int n) {
  QPolynomial prod = QPolynomial::constant(1);
  for (int k = 1; k <= n - 1; ++k) prod *= QPolynomial{BigInt(n - k + 1), BigInt(k)};
  return prod;
}

// prod_{k=0}^{n-1} (n-k + k q)
inline QPolynomial closed_form_b(int n) {
  QPolynomial prod = QPolynomial::constant(1);
  for (int k = 0; k <= n - 1; ++k) prod *= QPolynomial{BigInt(n - k), BigInt(k)};
  return prod;
}

// A_n = sum_k (1 + (n-k) q) C(n-1, k-1) A_{k-1} A_{n-k}, A_0 = 1.
inline QPolynomial recurrence_a(int n) {
  static std::map<int, QPolynomial> cache;
  if (n <= 0) return QPolynomial::constant(1);
  auto hit = cache.find(n);
  if (hit != cache.end()) return hit->second;
  QPolynomial sum;
  for (int k = 1; k <= n; ++k) {
    QPolynomial term{1, BigInt(n - k)};
    term = term.scaled(binomial(n - 1, k - 1));
    sum += term * recurrence_a(k - 1) * recurrence_a(n - k);
  }
  cache[n] = sum;
  return sum;
}

// B_n = (1 + (n-1) q) sum_k C(n-1, n-k) B_{n-k} A_{k-1}, B_0 = 1.
inline QPolynomial recurrence_b(int n) {
  static std::map<int, QPolynomial> cache;
  if (n <= 0) return QPolynomial::constant(1);
  auto hit = cache.find(n);
  if (hit != cache.end()) return hit->second;
  QPolynomial sum;
  for (int k = 1; k <= n; ++k)
    sum += recurrence_b(n - k).scaled(binomial(n - 1, n - k)) * recurrence_a(k - 1);
  QPolynomial result = QPolynomial{1, BigInt(n - 1)} * sum;
  cache[n] = result;
  return result;
}

// ---- partition of the reflections below a cycle into classes with exactly
// ---- one good edge each

// Type-A cycle (d_1 < ... < d_k): class j holds (d_i, d_{i+j}), i = 1..k-j.
inline std::vector<std::vector<Reflection>> split_classes_a(const std::vector<int>& cycle) {
  const int k = static_cast<int>(cycle.size());
  for (int i = 1; i < k; ++i)
    if (cycle[i] <= cycle[i - 1]) throw invalid_input("cycle entries must increase");
  std::vector<std::vector<Reflection>> classes;
  for (int j = 1; j <= k - 1; ++j) {
    std::vector<Reflection> cls;
    for (int i = 1; i + j <= k; ++i)
      cls.push_back(Reflection::type_a(cycle[i - 1], cycle[i + j - 1]));
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Balanced cycle with support d_1 < ... < d_m: classes j = 1..m-1 hold the
// pairs at signed distance j, class m the long reflections.
inline std::vector<std::vector<Reflection>> split_classes_balanced(
    const std::vector<int>& support) {
  const int m = static_cast<int>(support.size());
  for (int i = 0; i < m; ++i)
    if (support[i] <= (i ? support[i - 1] : 0))
      throw invalid_input("balanced support must be positive and increasing");
  auto entry = [&](int pos) {  // 1-based position in (d_1..d_m, -d_1..-d_m)
    pos = (pos - 1) % (2 * m) + 1;
    return pos <= m ? support[pos - 1] : -support[pos - m - 1];
  };
  std::vector<std::vector<Reflection>> classes;
  for (int j = 1; j <= m - 1; ++j) {
    std::vector<Reflection> cls;
    for (int i = 1; i <= m; ++i)
      cls.push_back(Reflection::from_signed_pair(entry(i), entry(i + j)));
    classes.push_back(std::move(cls));
  }
  std::vector<Reflection> longs;
  for (int i = 1; i <= m; ++i) longs.push_back(Reflection::b_long(support[i - 1]));
  classes.push_back(std::move(longs));
  return classes;
}

namespace detail {

// Rotates a noncrossing paired representative so its largest positive entry
// comes first; reflections below the cycle are pairs of entries of this
// sequence.
inline std::vector<int> paired_f_sequence(const std::vector<int>& rep) {
  int ell = noncrossing_paired_split(rep);
  std::vector<int> f(rep.begin() + (ell - 1), rep.end());
  f.insert(f.end(), rep.begin(), rep.begin() + (ell - 1));
  return f;
}

// Class j of a paired cycle of size k lists (f_i, f_{i+j}) for i = 1..k-j
// cyclically, starting at the unique index whose edge is good.
inline int paired_class_good_start(int k, int ell, int j) {
  return j <= k - ell - 1 ? k - ell + 1 - j : 1;
}

}  // namespace detail

inline std::vector<std::vector<Reflection>> split_classes_paired(
    const std::vector<int>& rep) {
  const int k = static_cast<int>(rep.size());
  const int ell = noncrossing_paired_split(rep);
  std::vector<int> f = detail::paired_f_sequence(rep);
  std::vector<std::vector<Reflection>> classes;
  for (int j = 1; j <= k - 1; ++j) {
    const int count = k - j;
    const int start = detail::paired_class_good_start(k, ell, j);
    std::vector<Reflection> cls;
    for (int c = 0; c < count; ++c) {
      int i = (start - 1 + c) % count + 1;
      cls.push_back(Reflection::from_signed_pair(f[i - 1], f[i + j - 1]));
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

// ---- chain text formats ----

inline std::string to_string(const MaximalChain& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.reflections.size(); ++i) {
    if (i) out += ' ';
    if (chain.type == GroupType::B) out += '[';
    out += chain.reflections[i].to_string();
    if (chain.type == GroupType::B) out += ']';
  }
  return out;
}

inline std::string label_string(const std::vector<EdgeLabel>& labels, bool ascii) {
  std::string out;
  for (EdgeLabel l : labels)
    out += l == EdgeLabel::Good ? (ascii ? "o" : "∘") : (ascii ? "x" : "×");
  return out;
}

namespace detail {

inline std::pair<int, std::size_t> parse_int_at(std::string_view s, std::size_t pos) {
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start || (pos == start + 1 && !(s[start] >= '0' && s[start] <= '9')))
    throw invalid_input("expected integer in reflection text");
  return {std::stoi(std::string(s.substr(start, pos - start))), pos};
}

// Parses "(a,b)" starting at pos; returns the pair and the next position.
inline std::pair<std::pair<int, int>, std::size_t> parse_paren_pair(std::string_view s,
                                                                    std::size_t pos) {
  if (pos >= s.size() || s[pos] != '(') throw invalid_input("expected '('");
  auto [a, p1] = parse_int_at(s, pos + 1);
  if (p1 >= s.size() || s[p1] != ',') throw invalid_input("expected ','");
  auto [b, p2] = parse_int_at(s, p1 + 1);
  if (p2 >= s.size() || s[p2] != ')') throw invalid_input("expected ')'");
  return {{a, b}, p2 + 1};
}

}  // namespace detail

inline Reflection parse_reflection(std::string_view text, GroupType type) {
  auto [first, pos] = detail::parse_paren_pair(text, 0);
  if (type == GroupType::A) {
    if (pos != text.size()) throw invalid_input("trailing text after transposition");
    if (first.first < 1 || first.second < 1)
      throw invalid_input("transposition entries must be positive");
    return Reflection::type_a(first.first, first.second);
  }
  Reflection t = Reflection::from_signed_pair(first.first, first.second);
  if (t.kind == ReflectionKind::BLong) {
    if (pos != text.size()) throw invalid_input("trailing text after long reflection");
    return t;
  }
  auto [second, end] = detail::parse_paren_pair(text, pos);
  if (end != text.size()) throw invalid_input("trailing text after reflection");
  if (second.first != -first.first || second.second != -first.second)
    throw invalid_input("second factor must mirror the first");
  return t;
}

inline MaximalChain parse_chain(std::string_view text, GroupType type, int n = -1) {
  std::vector<Reflection> ts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    std::size_t end;
    if (text[pos] == '[') {
      end = text.find(']', pos);
      if (end == std::string_view::npos) throw invalid_input("unbalanced '['");
      ts.push_back(parse_reflection(text.substr(pos + 1, end - pos - 1), type));
      ++end;
    } else {
      end = text.find(' ', pos);
      if (end == std::string_view::npos) end = text.size();
      ts.push_back(parse_reflection(text.substr(pos, end - pos), type));
    }
    pos = end;
  }
  if (n < 0) n = static_cast<int>(ts.size());
  return make_chain(type, n, std::move(ts));
}

}  // namespace ncpark
