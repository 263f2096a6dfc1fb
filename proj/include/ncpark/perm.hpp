#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ncpark/errors.hpp"

namespace ncpark {

enum class GroupType { A, B };

enum class EdgeLabel { Good, Bad };

// Permutation of {1,...,N} in one-line notation; entry i is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
        throw invalid_input("not a permutation in one-line notation");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int size) {
    std::vector<int> im(size);
    for (int i = 0; i < size; ++i) im[i] = i + 1;
    return Permutation(std::move(im));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  // (p.compose(q))(i) = p(q(i)); q acts first.
  Permutation compose(const Permutation& q) const {
    if (size() != q.size()) throw invalid_input("permutation size mismatch");
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i) im[i - 1] = images_[q(i) - 1];
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i) im[images_[i - 1] - 1] = i;
    return Permutation(std::move(im));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }

 private:
  std::vector<int> images_;
};

// Signed permutation of {±1,...,±n}, determined by the images of 1..n through
// the symmetry w(-i) = -w(i).
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      int a = std::abs(v);
      if (a < 1 || a > static_cast<int>(images_.size()) || seen[a - 1])
        throw invalid_input("not a signed permutation in one-line notation");
      seen[a - 1] = true;
    }
  }

  static SignedPermutation identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    return SignedPermutation(std::move(im));
  }

  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }

  int operator()(int i) const {
    return i > 0 ? images_[i - 1] : -images_[-i - 1];
  }

  SignedPermutation compose(const SignedPermutation& q) const {
    if (size() != q.size()) throw invalid_input("signed permutation size mismatch");
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i) im[i - 1] = (*this)(q(i));
    return SignedPermutation(std::move(im));
  }

  SignedPermutation inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i) {
      int v = images_[i - 1];
      if (v > 0)
        im[v - 1] = i;
      else
        im[-v - 1] = -i;
    }
    return SignedPermutation(std::move(im));
  }

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) {
    return !(a == b);
  }

 private:
  std::vector<int> images_;
};

// A reflection: a transposition (i,j) in type A, or one of the three type-B
// kinds (i,-i), (i,j)(-i,-j), (i,-j)(-i,j). Canonical form has 0 < i < j.
enum class ReflectionKind : int { TypeA = 0, BLong = 1, BShort = 2, BMixed = 3 };

struct Reflection {
  ReflectionKind kind = ReflectionKind::TypeA;
  int i = 0;
  int j = 0;

  static Reflection type_a(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || i == j) throw invalid_input("bad transposition indices");
    return {ReflectionKind::TypeA, i, j};
  }
  static Reflection b_long(int i) {
    if (i < 1) throw invalid_input("bad long reflection index");
    return {ReflectionKind::BLong, i, i};
  }
  static Reflection b_short(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || i == j) throw invalid_input("bad short reflection indices");
    return {ReflectionKind::BShort, i, j};
  }
  static Reflection b_mixed(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || i == j) throw invalid_input("bad mixed reflection indices");
    return {ReflectionKind::BMixed, i, j};
  }

  // The type-B reflection exchanging the signed points x and y (and -x, -y).
  static Reflection from_signed_pair(int x, int y) {
    if (x == 0 || y == 0 || x == y) throw invalid_input("bad signed pair");
    if (x == -y) return b_long(std::abs(x));
    if ((x > 0) == (y > 0)) return b_short(std::abs(x), std::abs(y));
    return b_mixed(std::abs(x), std::abs(y));
  }

  friend bool operator==(const Reflection&, const Reflection&) = default;
  friend bool operator<(const Reflection& a, const Reflection& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  std::string to_string() const {
    std::ostringstream out;
    switch (kind) {
      case ReflectionKind::TypeA:
        out << '(' << i << ',' << j << ')';
        break;
      case ReflectionKind::BLong:
        out << '(' << i << ",-" << i << ')';
        break;
      case ReflectionKind::BShort:
        out << '(' << i << ',' << j << ")(-" << i << ",-" << j << ')';
        break;
      case ReflectionKind::BMixed:
        out << '(' << i << ",-" << j << ")(-" << i << ',' << j << ')';
        break;
    }
    return out.str();
  }
};

inline Permutation to_permutation(const Reflection& t, int size) {
  if (t.kind != ReflectionKind::TypeA)
    throw invalid_input("type-B reflection used where a transposition was expected");
  std::vector<int> im(size);
  for (int i = 0; i < size; ++i) im[i] = i + 1;
  std::swap(im[t.i - 1], im[t.j - 1]);
  return Permutation(std::move(im));
}

inline SignedPermutation to_signed_permutation(const Reflection& t, int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i + 1;
  switch (t.kind) {
    case ReflectionKind::BLong:
      im[t.i - 1] = -t.i;
      break;
    case ReflectionKind::BShort:
      im[t.i - 1] = t.j;
      im[t.j - 1] = t.i;
      break;
    case ReflectionKind::BMixed:
      im[t.i - 1] = -t.j;
      im[t.j - 1] = -t.i;
      break;
    case ReflectionKind::TypeA:
      throw invalid_input("transposition used where a type-B reflection was expected");
  }
  return SignedPermutation(std::move(im));
}

// Recovers a reflection from a permutation that is one, if it is.
inline std::optional<Reflection> as_reflection(const Permutation& p) {
  std::vector<int> moved;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) != i) moved.push_back(i);
  if (moved.size() != 2) return std::nullopt;
  if (p(moved[0]) != moved[1]) return std::nullopt;
  return Reflection::type_a(moved[0], moved[1]);
}

inline std::optional<Reflection> as_reflection(const SignedPermutation& w) {
  std::vector<int> moved;
  for (int i = 1; i <= w.size(); ++i)
    if (w(i) != i) moved.push_back(i);
  if (moved.size() == 1) {
    int i = moved[0];
    if (w(i) != -i) return std::nullopt;
    return Reflection::b_long(i);
  }
  if (moved.size() != 2) return std::nullopt;
  int i = moved[0], j = moved[1];
  if (w(i) == j && w(j) == i) return Reflection::b_short(i, j);
  if (w(i) == -j && w(j) == -i) return Reflection::b_mixed(i, j);
  return std::nullopt;
}

inline int inv_count(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p(i) > p(j)) ++count;
  return count;
}

// Inversions of the one-line word plus the absolute values of the negative
// entries.
inline int inv_b_count(const SignedPermutation& w) {
  int count = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++count;
    if (w(i) < 0) count += -w(i);
  }
  return count;
}

// Disjoint cycles covering 1..N, each rotated to start at its minimum,
// sorted by minimum. Fixed points appear as singleton cycles.
inline std::vector<std::vector<int>> cycle_decompose(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(p.size(), false);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cyc;
    int cur = start;
    do {
      seen[cur - 1] = true;
      cyc.push_back(cur);
      cur = p(cur);
    } while (cur != start);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

// Cycle structure of a signed permutation. A cycle whose orbit is closed under
// negation is balanced and is stored as the half period starting at its entry
// of least absolute value, taken positive; the second half is the negation of
// the first. Every other orbit pairs with its mirror image and is stored once,
// rotated so the entry of least absolute value comes first, in the mirror
// where that entry is positive. Fixed points are singleton paired cycles.
// Arbitrary signed permutations may have several balanced cycles; elements
// below the Coxeter element have at most one.
struct CycleDecomposition {
  std::vector<std::vector<int>> balanced;  // half periods
  std::vector<std::vector<int>> paired;    // one representative per mirror pair

  std::vector<int> single_balanced() const {
    if (balanced.size() > 1)
      throw invalid_input("element has more than one balanced cycle");
    return balanced.empty() ? std::vector<int>{} : balanced.front();
  }
};

inline std::vector<int> canonical_paired_rep(std::vector<int> orbit) {
  std::size_t min_pos = 0;
  for (std::size_t k = 1; k < orbit.size(); ++k)
    if (std::abs(orbit[k]) < std::abs(orbit[min_pos])) min_pos = k;
  std::rotate(orbit.begin(), orbit.begin() + static_cast<std::ptrdiff_t>(min_pos),
              orbit.end());
  if (orbit[0] < 0)
    for (int& v : orbit) v = -v;
  return orbit;
}

inline CycleDecomposition signed_cycle_decompose(const SignedPermutation& w) {
  CycleDecomposition out;
  std::vector<bool> seen(w.size(), false);
  for (int start = 1; start <= w.size(); ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> orbit;
    int cur = start;
    do {
      seen[std::abs(cur) - 1] = true;
      orbit.push_back(cur);
      cur = w(cur);
    } while (cur != start && cur != -start);
    if (cur == -start) {
      // Balanced: the walk continues through the negated entries.
      out.balanced.push_back(std::move(orbit));
    } else {
      out.paired.push_back(canonical_paired_rep(std::move(orbit)));
    }
  }
  return out;
}

inline int reflection_length(const Permutation& p) {
  return p.size() - static_cast<int>(cycle_decompose(p).size());
}

inline int reflection_length(const SignedPermutation& w) {
  return w.size() - static_cast<int>(signed_cycle_decompose(w).paired.size());
}

inline std::vector<Reflection> all_reflections(int n, GroupType type) {
  std::vector<Reflection> out;
  if (type == GroupType::A) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n + 1; ++j) out.push_back(Reflection::type_a(i, j));
  } else {
    for (int i = 1; i <= n; ++i) out.push_back(Reflection::b_long(i));
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        out.push_back(Reflection::b_short(i, j));
        out.push_back(Reflection::b_mixed(i, j));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool leq_absolute(const Permutation& u, const Permutation& v) {
  return reflection_length(v) ==
         reflection_length(u) + reflection_length(u.inverse().compose(v));
}

inline bool leq_absolute(const SignedPermutation& u, const SignedPermutation& v) {
  return reflection_length(v) ==
         reflection_length(u) + reflection_length(u.inverse().compose(v));
}

// Number of leading positive entries of a paired-cycle representative in
// noncrossing form: positive prefix, negated suffix, absolute values strictly
// increasing. Throws if the representative is not of that shape.
inline int noncrossing_paired_split(const std::vector<int>& rep) {
  int ell = 0;
  while (ell < static_cast<int>(rep.size()) && rep[ell] > 0) ++ell;
  if (ell == 0) throw internal_error("paired cycle representative not canonical");
  for (int k = ell; k < static_cast<int>(rep.size()); ++k)
    if (rep[k] > 0)
      throw invalid_input("paired cycle is not in noncrossing form");
  for (std::size_t k = 1; k < rep.size(); ++k)
    if (std::abs(rep[k]) <= std::abs(rep[k - 1]))
      throw invalid_input("paired cycle is not in noncrossing form");
  return ell;
}

// Structural good/bad test for a cover step (nu, nu*t), reading only the cycle
// of nu that lies above t. Type A: the edge is good exactly when the larger
// entry of t is the maximum of its cycle.
inline EdgeLabel classify_cover_step(const Permutation& nu, const Reflection& t) {
  if (t.kind != ReflectionKind::TypeA)
    throw invalid_input("type-A cover step needs a transposition");
  for (const auto& cyc : cycle_decompose(nu)) {
    bool has_i = std::find(cyc.begin(), cyc.end(), t.i) != cyc.end();
    bool has_j = std::find(cyc.begin(), cyc.end(), t.j) != cyc.end();
    if (has_i != has_j)
      throw invalid_input("reflection does not lie below a single cycle");
    if (has_i && has_j)
      return *std::max_element(cyc.begin(), cyc.end()) == t.j ? EdgeLabel::Good
                                                              : EdgeLabel::Bad;
  }
  throw invalid_input("reflection support not found");
}

// Type B. Below the balanced cycle, a long reflection is good only at the
// largest support entry, a short reflection only when its larger index is the
// largest support entry, and a mixed reflection never. Below a paired cycle
// with representative (d_1..d_l, -d_{l+1}..-d_k), the good positions are
// (a, l) with a < l and (a, k) with a >= l.
inline EdgeLabel classify_cover_step(const SignedPermutation& nu, const Reflection& t) {
  if (t.kind == ReflectionKind::TypeA)
    throw invalid_input("type-B cover step needs a type-B reflection");
  CycleDecomposition dec = signed_cycle_decompose(nu);
  const std::vector<int> bal = dec.single_balanced();

  const auto in_balanced = [&](int v) {
    for (int d : bal)
      if (std::abs(d) == v) return true;
    return false;
  };

  if (t.kind == ReflectionKind::BLong) {
    if (!in_balanced(t.i))
      throw invalid_input("long reflection does not lie below the balanced cycle");
    int max_abs = 0;
    for (int d : bal) max_abs = std::max(max_abs, std::abs(d));
    return t.i == max_abs ? EdgeLabel::Good : EdgeLabel::Bad;
  }

  if (in_balanced(t.i) && in_balanced(t.j)) {
    if (t.kind == ReflectionKind::BMixed) return EdgeLabel::Bad;
    int max_abs = 0;
    for (int d : bal) max_abs = std::max(max_abs, std::abs(d));
    return t.j == max_abs ? EdgeLabel::Good : EdgeLabel::Bad;
  }

  for (const auto& rep : dec.paired) {
    int pos_i = -1, pos_j = -1;
    for (int k = 0; k < static_cast<int>(rep.size()); ++k) {
      if (std::abs(rep[k]) == t.i) pos_i = k;
      if (std::abs(rep[k]) == t.j) pos_j = k;
    }
    if ((pos_i >= 0) != (pos_j >= 0))
      throw invalid_input("reflection does not lie below a single cycle");
    if (pos_i < 0) continue;
    // The two moved points must sit in the same mirror of the pair.
    bool same_sign_in_rep = (rep[pos_i] > 0) == (rep[pos_j] > 0);
    bool wants_same_sign = t.kind == ReflectionKind::BShort;
    if (same_sign_in_rep != wants_same_sign)
      throw invalid_input("reflection does not lie below the paired cycle");
    int ell = noncrossing_paired_split(rep);
    int a = std::min(pos_i, pos_j) + 1, b = std::max(pos_i, pos_j) + 1;
    int k = static_cast<int>(rep.size());
    bool good = (b == ell && a < ell) || (b == k && a >= ell);
    return good ? EdgeLabel::Good : EdgeLabel::Bad;
  }
  throw invalid_input("reflection support not found");
}

inline EdgeLabel classify_edge(const Permutation& mu, const Permutation& nu) {
  auto t = as_reflection(mu.inverse().compose(nu));
  if (!t) throw invalid_input("pair is not a cover: quotient is not a reflection");
  return classify_cover_step(nu, *t);
}

inline EdgeLabel classify_edge(const SignedPermutation& mu, const SignedPermutation& nu) {
  auto t = as_reflection(mu.inverse().compose(nu));
  if (!t) throw invalid_input("pair is not a cover: quotient is not a reflection");
  return classify_cover_step(nu, *t);
}

// Independent route: compare one-line inversion counts across the edge.
inline EdgeLabel classify_edge_by_inversions(const Permutation& mu, const Permutation& nu) {
  int a = inv_count(mu), b = inv_count(nu);
  if (a == b) throw invalid_input("edge endpoints have equal length");
  return a < b ? EdgeLabel::Good : EdgeLabel::Bad;
}

inline EdgeLabel classify_edge_by_inversions(const SignedPermutation& mu,
                                             const SignedPermutation& nu) {
  int a = inv_b_count(mu), b = inv_b_count(nu);
  if (a == b) throw invalid_input("edge endpoints have equal length");
  return a < b ? EdgeLabel::Good : EdgeLabel::Bad;
}

// ---- text formats ----

inline std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p(i));
  }
  return out;
}

inline std::string to_string(const SignedPermutation& w) {
  std::string out;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(w(i));
  }
  return out;
}

inline std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, sep)) {
    if (token.empty()) continue;
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw invalid_input("bad integer: '" + token + "'");
    }
    if (used != token.size()) throw invalid_input("bad integer: '" + token + "'");
    out.push_back(v);
  }
  return out;
}

inline Permutation parse_permutation(std::string_view text) {
  return Permutation(parse_int_list(text, ' '));
}

inline SignedPermutation parse_signed_permutation(std::string_view text) {
  return SignedPermutation(parse_int_list(text, ' '));
}

}  // namespace ncpark
