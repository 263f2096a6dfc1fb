#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncpark/errors.hpp"
#include "ncpark/perm.hpp"
#include "ncpark/qpoly.hpp"

namespace ncpark {

// Where each car parked. lucky[i] is true when car i+1 got its preferred space.
struct Outcome {
  std::vector<int> spots;
  std::vector<bool> lucky;
};

struct ParkingFunction {
  GroupType type = GroupType::A;
  std::vector<int> prefs;
};

inline int lucky_count(const Outcome& o) {
  return static_cast<int>(std::count(o.lucky.begin(), o.lucky.end(), true));
}

inline int reluc_count(const Outcome& o) {
  return static_cast<int>(o.lucky.size()) - lucky_count(o);
}

// One-way street over an arbitrary increasing list of spaces: each car takes
// the first free space at or after its preference. Returns nothing if some
// car runs off the end.
inline std::optional<Outcome> outcome_a_on_spaces(const std::vector<int>& prefs,
                                                  const std::vector<int>& spaces) {
  const int m = static_cast<int>(spaces.size());
  std::vector<bool> taken(m, false);
  Outcome out;
  for (int pref : prefs) {
    auto it = std::lower_bound(spaces.begin(), spaces.end(), pref);
    if (it == spaces.end() || *it != pref)
      throw invalid_input("preference " + std::to_string(pref) + " is not a space");
    int idx = static_cast<int>(it - spaces.begin());
    while (idx < m && taken[idx]) ++idx;
    if (idx == m) return std::nullopt;
    taken[idx] = true;
    out.spots.push_back(spaces[idx]);
    out.lucky.push_back(spaces[idx] == pref);
  }
  return out;
}

// Circular street over an increasing list of spaces: probe the preferred
// space, then onward cyclically. Always parks when prefs are drawn from the
// space list.
inline Outcome outcome_b_on_spaces(const std::vector<int>& prefs,
                                   const std::vector<int>& spaces) {
  const int m = static_cast<int>(spaces.size());
  if (static_cast<int>(prefs.size()) > m)
    throw invalid_input("more cars than spaces");
  std::vector<bool> taken(m, false);
  Outcome out;
  for (int pref : prefs) {
    auto it = std::lower_bound(spaces.begin(), spaces.end(), pref);
    if (it == spaces.end() || *it != pref)
      throw invalid_input("preference " + std::to_string(pref) + " is not a space");
    int idx = static_cast<int>(it - spaces.begin());
    int probes = 0;
    while (taken[idx]) {
      idx = (idx + 1) % m;
      if (++probes > m) throw internal_error("circular parking did not terminate");
    }
    taken[idx] = true;
    out.spots.push_back(spaces[idx]);
    out.lucky.push_back(spaces[idx] == pref);
  }
  return out;
}

inline std::optional<Outcome> outcome_a(const std::vector<int>& prefs) {
  const int n = static_cast<int>(prefs.size());
  for (int p : prefs)
    if (p < 1 || p > n) throw invalid_input("preference out of range 1..n");
  std::vector<int> spaces(n);
  for (int i = 0; i < n; ++i) spaces[i] = i + 1;
  return outcome_a_on_spaces(prefs, spaces);
}

inline Outcome outcome_b(const std::vector<int>& prefs) {
  const int n = static_cast<int>(prefs.size());
  for (int p : prefs)
    if (p < 1 || p > n) throw invalid_input("preference out of range 1..n");
  std::vector<int> spaces(n);
  for (int i = 0; i < n; ++i) spaces[i] = i + 1;
  return outcome_b_on_spaces(prefs, spaces);
}

inline Outcome outcome_of(const ParkingFunction& pf) {
  if (pf.type == GroupType::B) return outcome_b(pf.prefs);
  auto out = outcome_a(pf.prefs);
  if (!out) throw invalid_input("preference list is not a parking function");
  return *out;
}

// Sorted-prefix criterion: the list parks iff the i-th smallest preference
// is at most i.
inline bool is_parking_function_a(const std::vector<int>& prefs) {
  const int n = static_cast<int>(prefs.size());
  for (int p : prefs)
    if (p < 1 || p > n) return false;
  std::vector<int> sorted = prefs;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[i] > i + 1) return false;
  return true;
}

// Streams preference lists in lexicographic order: all of [n]^n for type B,
// the sorted-criterion survivors for type A.
inline void enumerate_pf(GroupType type, int n,
                         const std::function<void(const std::vector<int>&)>& yield) {
  std::vector<int> prefs(n, 1);
  while (true) {
    if (type == GroupType::B || is_parking_function_a(prefs)) yield(prefs);
    int k = n - 1;
    while (k >= 0 && prefs[k] == n) prefs[k--] = 1;
    if (k < 0) break;
    ++prefs[k];
  }
}

inline BigInt pf_count(GroupType type, int n) {
  return type == GroupType::A ? BigInt(n + 1).pow(n - 1) : BigInt(n).pow(n);
}

inline QPolynomial reluc_polynomial(GroupType type, int n) {
  std::vector<BigInt> hist(n, BigInt(0));
  enumerate_pf(type, n, [&](const std::vector<int>& prefs) {
    Outcome o = type == GroupType::A ? *outcome_a(prefs) : outcome_b(prefs);
    hist[reluc_count(o)] += 1;
  });
  return QPolynomial(std::move(hist));
}

inline std::string to_string_prefs(const std::vector<int>& prefs) {
  std::string out;
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(prefs[i]);
  }
  return out;
}

inline std::vector<int> parse_prefs(std::string_view text) {
  auto prefs = parse_int_list(text, ',');
  if (prefs.empty()) throw invalid_input("empty preference list");
  return prefs;
}

}  // namespace ncpark
