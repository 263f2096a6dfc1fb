#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ncpark/chains.hpp"
#include "ncpark/errors.hpp"
#include "ncpark/parking.hpp"
#include "ncpark/perm.hpp"

namespace ncpark {

// Fault-injection seam for the verification harness: shifts the prefix part of
// the zeta-naught set by one when enabled. Leave alone in normal use.
inline bool inject_zeta_naught_off_by_one = false;

inline int modrep(int x, int m) { return ((x - 1) % m + m) % m + 1; }

// Split of the occupied spaces of a circular-parking prefix into the set Z0
// that behaves circularly and the complement Z1 that behaves linearly.
// `spaces` is the increasing space list, `outcome_prefix` the spaces in the
// order they were taken (all but `next_spot`), and `next_spot` the space the
// following car will take. Z0 is empty exactly when next_spot is the least
// space.
struct ZetaSplit {
  std::vector<int> z0, z1;
};

inline ZetaSplit zeta_naught(const std::vector<int>& outcome_prefix,
                             const std::vector<int>& spaces, int next_spot) {
  const int m = static_cast<int>(spaces.size());
  if (static_cast<int>(outcome_prefix.size()) != m - 1)
    throw invalid_input("prefix must cover all spaces but one");
  std::map<int, int> pos;
  for (int k = 0; k < m - 1; ++k) pos[outcome_prefix[k]] = k;
  if (next_spot == spaces.front()) {
    ZetaSplit out{{}, outcome_prefix};
    std::sort(out.z1.begin(), out.z1.end());
    return out;
  }

  // Greatest g such that the g-1 smallest spaces all precede the g-th.
  int g = 0;
  for (int gi = 1; gi <= m; ++gi) {
    auto it = pos.find(spaces[gi - 1]);
    if (it == pos.end()) continue;
    bool ok = true;
    for (int x = 0; x + 1 < gi && ok; ++x) {
      auto px = pos.find(spaces[x]);
      ok = px != pos.end() && px->second < it->second;
    }
    if (ok) g = gi;
  }
  if (g == 0) throw internal_error("zeta-naught: no admissible prefix point");
  if (inject_zeta_naught_off_by_one && g > 1) --g;

  // Largest h such that the h largest spaces all precede the g-th.
  int pos_g = pos.at(spaces[g - 1]);
  int h = 0;
  for (int x = m; x > g; --x) {
    auto it = pos.find(spaces[x - 1]);
    if (it == pos.end() || it->second >= pos_g) break;
    ++h;
  }

  ZetaSplit out;
  for (int x = 1; x <= g; ++x) out.z0.push_back(spaces[x - 1]);
  for (int x = m - h + 1; x <= m; ++x) out.z0.push_back(spaces[x - 1]);
  for (int v : outcome_prefix)
    if (!std::binary_search(out.z0.begin(), out.z0.end(), v)) out.z1.push_back(v);
  std::sort(out.z1.begin(), out.z1.end());
  return out;
}

// ---------------------------------------------------------------------------
// Preference list <-> maximal chain, type A.
//
// Both directions run car index i = n..1 over a workspace of cycles, each
// tied to an interval of spaces; the intervals partition 1..n+1 and only the
// largest space of each interval is still empty.
// ---------------------------------------------------------------------------

struct TypeAWorkspaceRow {
  int car = 0;
  int pref = 0, spot = 0;
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> tuples;
  Reflection t;
  EdgeLabel label = EdgeLabel::Good;
};

struct TypeATrace {
  std::vector<TypeAWorkspaceRow> rows;
  std::vector<std::vector<int>> final_cycles, final_tuples;
};

namespace detail {

struct ABlock {
  std::vector<int> cycle;  // increasing entries
  int lo = 0, hi = 0;      // interval of spaces
};

inline std::vector<std::vector<int>> a_cycles(const std::vector<ABlock>& ws) {
  std::vector<std::vector<int>> out;
  for (const auto& blk : ws) out.push_back(blk.cycle);
  return out;
}

inline std::vector<std::vector<int>> a_tuples(const std::vector<ABlock>& ws) {
  std::vector<std::vector<int>> out;
  for (const auto& blk : ws) {
    std::vector<int> t;
    for (int v = blk.lo; v <= blk.hi; ++v) t.push_back(v);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace detail

inline MaximalChain phi_a(const std::vector<int>& prefs, TypeATrace* trace = nullptr) {
  const int n = static_cast<int>(prefs.size());
  auto outcome = outcome_a(prefs);
  if (!outcome) throw invalid_input("preference list is not a parking function");

  std::vector<detail::ABlock> ws;
  {
    std::vector<int> full(n + 1);
    for (int v = 0; v <= n; ++v) full[v] = v + 1;
    ws.push_back({full, 1, n + 1});
  }
  std::vector<Reflection> ts(n, Reflection{});
  std::vector<EdgeLabel> labels(n, EdgeLabel::Good);

  for (int i = n; i >= 1; --i) {
    const int p = outcome->spots[i - 1], a = prefs[i - 1];
    std::size_t r = 0;
    while (r < ws.size() && !(ws[r].lo <= p && p <= ws[r].hi)) ++r;
    if (r == ws.size()) throw internal_error("spot not covered by any interval");
    detail::ABlock blk = ws[r];
    const int h = blk.lo - 1;
    const int men = blk.hi - blk.lo + 1;  // m + 1 entries
    const int j = a - h, k = p - h;
    if (j < 1 || j > k || k >= men)
      throw internal_error("preference/spot fall outside the expected interval");

    Reflection t = Reflection::type_a(blk.cycle[j - 1], blk.cycle[men - k + j - 1]);
    EdgeLabel label = j == k ? EdgeLabel::Good : EdgeLabel::Bad;
    ts[i - 1] = t;
    labels[i - 1] = label;
    if (trace)
      trace->rows.push_back(
          {i, a, p, detail::a_cycles(ws), detail::a_tuples(ws), t, label});

    detail::ABlock first, second;
    first.cycle.assign(blk.cycle.begin(), blk.cycle.begin() + j);
    first.cycle.insert(first.cycle.end(), blk.cycle.begin() + (men - k + j),
                       blk.cycle.end());
    second.cycle.assign(blk.cycle.begin() + j, blk.cycle.begin() + (men - k + j));
    first.lo = blk.lo;
    first.hi = h + k;
    second.lo = h + k + 1;
    second.hi = blk.hi;
    ws[r] = first;
    ws.insert(ws.begin() + static_cast<std::ptrdiff_t>(r) + 1, second);
  }
  if (trace) {
    trace->final_cycles = detail::a_cycles(ws);
    trace->final_tuples = detail::a_tuples(ws);
  }

  MaximalChain chain = make_chain(GroupType::A, n, std::move(ts));
  if (chain.labels != labels)
    throw internal_error("edge labels disagree with lucky/reluctant pattern");
  return chain;
}

inline std::vector<int> phi_a_inv(const MaximalChain& chain, TypeATrace* trace = nullptr) {
  if (chain.type != GroupType::A) throw invalid_input("type-A chain expected");
  const int n = chain.n;

  std::vector<detail::ABlock> ws;
  {
    std::vector<int> full(n + 1);
    for (int v = 0; v <= n; ++v) full[v] = v + 1;
    ws.push_back({full, 1, n + 1});
  }
  std::vector<int> prefs(n, 0), spots(n, 0);

  for (int i = n; i >= 1; --i) {
    const Reflection t = chain.reflections[i - 1];
    std::size_t r = 0;
    for (; r < ws.size(); ++r) {
      bool has_i = std::binary_search(ws[r].cycle.begin(), ws[r].cycle.end(), t.i);
      bool has_j = std::binary_search(ws[r].cycle.begin(), ws[r].cycle.end(), t.j);
      if (has_i != has_j) throw invalid_input("reflection straddles two cycles");
      if (has_i) break;
    }
    if (r == ws.size()) throw invalid_input("reflection not below any cycle");
    detail::ABlock blk = ws[r];
    const int h = blk.lo - 1;
    const int men = blk.hi - blk.lo + 1;
    const int j = static_cast<int>(std::lower_bound(blk.cycle.begin(), blk.cycle.end(), t.i) -
                                   blk.cycle.begin()) + 1;
    const int k = static_cast<int>(std::lower_bound(blk.cycle.begin(), blk.cycle.end(), t.j) -
                                   blk.cycle.begin()) + 1;
    prefs[i - 1] = h + j;
    spots[i - 1] = h + men - k + j;
    if (trace)
      trace->rows.push_back({i, prefs[i - 1], spots[i - 1], detail::a_cycles(ws),
                             detail::a_tuples(ws), t, chain.labels[i - 1]});

    detail::ABlock first, second;
    first.cycle.assign(blk.cycle.begin(), blk.cycle.begin() + j);
    first.cycle.insert(first.cycle.end(), blk.cycle.begin() + k, blk.cycle.end());
    second.cycle.assign(blk.cycle.begin() + j, blk.cycle.begin() + k);
    first.lo = blk.lo;
    first.hi = h + men - k + j;
    second.lo = first.hi + 1;
    second.hi = blk.hi;
    ws[r] = first;
    ws.insert(ws.begin() + static_cast<std::ptrdiff_t>(r) + 1, second);
  }
  if (trace) {
    trace->final_cycles = detail::a_cycles(ws);
    trace->final_tuples = detail::a_tuples(ws);
  }

  auto check = outcome_a(prefs);
  if (!check || check->spots != spots)
    throw internal_error("decoded preference list does not replay to its outcome");
  return prefs;
}

// ---------------------------------------------------------------------------
// Preference list <-> maximal chain, type B.
//
// The workspace keeps the balanced cycle (with a sorted space tuple) in front
// and the paired cycles after it; a paired tuple lists its spaces with the
// still-empty one last.
// ---------------------------------------------------------------------------

struct BBlockView {
  bool balanced = false;
  std::vector<int> cycle;  // balanced: positive support; paired: canonical rep
  std::vector<int> tuple;
};

struct TypeBWorkspaceRow {
  int car = 0;
  int pref = 0, spot = 0;
  std::optional<int> zeta_naught_size;
  std::vector<BBlockView> blocks;
  Reflection t;
  EdgeLabel label = EdgeLabel::Good;
};

struct TypeBTrace {
  std::vector<TypeBWorkspaceRow> rows;
  std::vector<BBlockView> final_blocks;
};

namespace detail {

inline std::vector<int> abs_support(const Reflection& t) {
  if (t.kind == ReflectionKind::BLong) return {t.i};
  return {t.i, t.j};
}

inline SignedPermutation balanced_cycle_perm(int n, const std::vector<int>& support) {
  std::vector<int> im(n);
  for (int v = 0; v < n; ++v) im[v] = v + 1;
  const int m = static_cast<int>(support.size());
  for (int r = 0; r + 1 < m; ++r) im[support[r] - 1] = support[r + 1];
  im[support[m - 1] - 1] = -support[0];
  return SignedPermutation(std::move(im));
}

// Splits a balanced cycle by a reflection below it; returns the new balanced
// support (possibly empty) and the canonical representative of the new paired
// cycle.
inline std::pair<std::vector<int>, std::vector<int>> split_balanced(
    int n, const std::vector<int>& support, const Reflection& t) {
  SignedPermutation next =
      balanced_cycle_perm(n, support).compose(to_signed_permutation(t, n));
  CycleDecomposition dec = signed_cycle_decompose(next);
  std::set<int> supp(support.begin(), support.end());
  std::vector<int> new_balanced;
  for (int d : dec.single_balanced())
    if (supp.count(std::abs(d))) new_balanced.push_back(std::abs(d));
  std::sort(new_balanced.begin(), new_balanced.end());
  for (const auto& rep : dec.paired)
    if (supp.count(std::abs(rep[0]))) return {new_balanced, rep};
  throw internal_error("balanced split produced no paired cycle");
}

}  // namespace detail

inline MaximalChain phi_b(const std::vector<int>& prefs, TypeBTrace* trace = nullptr) {
  const int n = static_cast<int>(prefs.size());
  Outcome outcome = outcome_b(prefs);

  std::vector<BBlockView> ws;
  {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v + 1;
    ws.push_back({true, all, all});
  }
  std::vector<Reflection> ts(n, Reflection{});
  std::vector<EdgeLabel> labels(n, EdgeLabel::Good);

  for (int i = n; i >= 1; --i) {
    const int p = outcome.spots[i - 1], a = prefs[i - 1];
    std::size_t r = 0;
    while (r < ws.size() &&
           std::find(ws[r].tuple.begin(), ws[r].tuple.end(), p) == ws[r].tuple.end())
      ++r;
    if (r == ws.size()) throw internal_error("spot not covered by any tuple");
    BBlockView blk = ws[r];

    Reflection t;
    EdgeLabel label;
    std::optional<int> zeta_size;
    std::vector<BBlockView> replacement;

    if (blk.balanced) {
      const int m = static_cast<int>(blk.cycle.size());
      const auto find_pos = [&](int v) {
        auto it = std::find(blk.tuple.begin(), blk.tuple.end(), v);
        if (it == blk.tuple.end())
          throw internal_error("preference missing from its block");
        return static_cast<int>(it - blk.tuple.begin()) + 1;
      };
      const int ell = find_pos(p), ellp = find_pos(a);
      const int j = modrep(ellp - ell, m);
      label = j == m ? EdgeLabel::Good : EdgeLabel::Bad;

      if (p == blk.tuple.front()) {
        // The least space of the block: the balanced cycle closes out into a
        // single paired cycle.
        t = Reflection::b_long(blk.cycle[j - 1]);
        BBlockView paired;
        paired.balanced = false;
        paired.cycle.assign(blk.cycle.begin(), blk.cycle.begin() + j);
        for (int x = j; x < m; ++x) paired.cycle.push_back(-blk.cycle[x]);
        paired.tuple.assign(blk.tuple.begin() + 1, blk.tuple.end());
        paired.tuple.push_back(blk.tuple.front());
        replacement.push_back(std::move(paired));
        if (m > 1) zeta_size = 0;
      } else {
        std::vector<int> prefix;
        std::set<int> tuple_set(blk.tuple.begin(), blk.tuple.end());
        for (int rr = 1; rr < i; ++rr)
          if (tuple_set.count(outcome.spots[rr - 1]))
            prefix.push_back(outcome.spots[rr - 1]);
        ZetaSplit zs = zeta_naught(prefix, blk.tuple, p);
        zeta_size = static_cast<int>(zs.z0.size());
        const int k = m - static_cast<int>(zs.z0.size());
        if (k < 1 || k > m - 1) throw internal_error("zeta-naught size out of range");

        const auto sig = [&](int x) {
          x = modrep(x, 2 * m);
          return x <= m ? blk.cycle[x - 1] : -blk.cycle[x - m - 1];
        };
        t = Reflection::from_signed_pair(sig(m - k + j), sig(m + j));

        auto [new_support, paired_rep] = detail::split_balanced(n, blk.cycle, t);
        if (static_cast<int>(new_support.size()) != m - k ||
            static_cast<int>(paired_rep.size()) != k)
          throw internal_error("balanced split sizes disagree with zeta-naught");

        std::vector<int> run;
        for (int v : blk.tuple)
          if (!std::binary_search(zs.z0.begin(), zs.z0.end(), v)) run.push_back(v);
        const int b = static_cast<int>(std::find(run.begin(), run.end(), p) - run.begin()) + 1;
        if (b > static_cast<int>(run.size()))
          throw internal_error("spot missing from the linear run");
        std::vector<int> paired_tuple(run.begin() + b, run.end());
        paired_tuple.insert(paired_tuple.end(), run.begin(), run.begin() + (b - 1));
        paired_tuple.push_back(p);

        replacement.push_back({true, new_support, zs.z0});
        replacement.push_back({false, std::move(paired_rep), std::move(paired_tuple)});
      }
    } else {
      const int k = static_cast<int>(blk.cycle.size());
      const auto find_pos = [&](int v) {
        auto it = std::find(blk.tuple.begin(), blk.tuple.end(), v);
        if (it == blk.tuple.end())
          throw internal_error("preference missing from its block");
        return static_cast<int>(it - blk.tuple.begin()) + 1;
      };
      const int j = find_pos(p), jp = find_pos(a);
      if (j > k - 1 || jp > j)
        throw internal_error("preference/spot positions out of order");
      label = jp == j ? EdgeLabel::Good : EdgeLabel::Bad;

      const int ell = noncrossing_paired_split(blk.cycle);
      std::vector<int> f = detail::paired_f_sequence(blk.cycle);
      const int jcls = k - j;
      const int count = j;  // class size
      const int start = detail::paired_class_good_start(k, ell, jcls);
      const int b = (start - 1 + (j - jp)) % count + 1;
      t = Reflection::from_signed_pair(f[b - 1], f[b - 1 + jcls]);

      std::vector<int> rep1(f.begin(), f.begin() + b);
      rep1.insert(rep1.end(), f.begin() + b + jcls, f.end());
      std::vector<int> rep2(f.begin() + b, f.begin() + b + jcls);
      std::vector<int> tup1(blk.tuple.begin(), blk.tuple.begin() + j);
      std::vector<int> tup2(blk.tuple.begin() + j, blk.tuple.end());
      replacement.push_back({false, canonical_paired_rep(std::move(rep1)), std::move(tup1)});
      replacement.push_back({false, canonical_paired_rep(std::move(rep2)), std::move(tup2)});
    }

    ts[i - 1] = t;
    labels[i - 1] = label;
    if (trace) trace->rows.push_back({i, a, p, zeta_size, ws, t, label});
    ws.erase(ws.begin() + static_cast<std::ptrdiff_t>(r));
    ws.insert(ws.begin() + static_cast<std::ptrdiff_t>(r),
              std::make_move_iterator(replacement.begin()),
              std::make_move_iterator(replacement.end()));
  }
  if (trace) trace->final_blocks = ws;

  MaximalChain chain = make_chain(GroupType::B, n, std::move(ts));
  if (chain.labels != labels)
    throw internal_error("edge labels disagree with lucky/reluctant pattern");
  return chain;
}

// ---------------------------------------------------------------------------
// Chain -> preference list, type B.
// ---------------------------------------------------------------------------

struct DecodeRow {
  int step = 0;
  Reflection t;
  std::vector<BBlockView> blocks;           // cycles of the element after step
  std::optional<std::vector<int>> zeta;     // balanced tuple at growth steps
  int pref = 0, spot = 0;
  EdgeLabel label = EdgeLabel::Good;
};

struct DecodeTrace {
  std::vector<DecodeRow> rows;
};

namespace detail {

struct IndexedReflection {
  int index = 0;
  Reflection t;
};

// Reverse of the paired-cycle step: the last reflection of the factorization
// of a paired cycle determines the preference and spot positions within the
// cycle's tuple; the split halves recurse independently.
inline void procedure_d1(const std::vector<int>& rep,
                         std::vector<IndexedReflection> items,
                         const std::vector<int>& tuple,
                         std::vector<int>& prefs, std::vector<int>& spots) {
  const int k = static_cast<int>(rep.size());
  if (static_cast<int>(items.size()) != k - 1 ||
      static_cast<int>(tuple.size()) != k)
    throw invalid_input("paired cycle has the wrong number of reflections");
  if (k == 1) return;

  auto last = std::max_element(items.begin(), items.end(),
                               [](const IndexedReflection& x, const IndexedReflection& y) {
                                 return x.index < y.index;
                               });
  IndexedReflection step = *last;
  items.erase(last);

  const int ell = noncrossing_paired_split(rep);
  std::vector<int> f = paired_f_sequence(rep);
  int q1 = -1, q2 = -1;
  for (int x = 0; x < k; ++x) {
    if (std::abs(f[x]) == step.t.i) q1 = x;
    if (std::abs(f[x]) == step.t.j) q2 = x;
  }
  if (q1 < 0 || q2 < 0) throw invalid_input("reflection not below its paired cycle");
  if (q1 > q2) std::swap(q1, q2);
  const bool same_sign = (f[q1] > 0) == (f[q2] > 0);
  if (same_sign != (step.t.kind == ReflectionKind::BShort))
    throw invalid_input("reflection not below its paired cycle");

  const int jcls = q2 - q1;
  const int count = k - jcls;
  const int start = paired_class_good_start(k, ell, jcls);
  const int ipos = ((q1 + 1 - start) % count + count) % count + 1;
  const int bigj = k - jcls;  // spot position within the tuple
  prefs[step.index] = tuple[bigj - ipos];
  spots[step.index] = tuple[bigj - 1];

  std::vector<int> rep1(f.begin(), f.begin() + q1 + 1);
  rep1.insert(rep1.end(), f.begin() + q2 + 1, f.end());
  std::vector<int> rep2(f.begin() + q1 + 1, f.begin() + q2 + 1);
  rep1 = canonical_paired_rep(std::move(rep1));
  rep2 = canonical_paired_rep(std::move(rep2));

  std::set<int> supp1;
  for (int v : rep1) supp1.insert(std::abs(v));
  std::vector<IndexedReflection> items1, items2;
  for (auto& it : items) {
    bool all1 = true, any1 = false;
    for (int v : abs_support(it.t)) {
      if (supp1.count(v)) any1 = true;
      else all1 = false;
    }
    if (any1 != all1) throw invalid_input("reflection straddles the split");
    (all1 ? items1 : items2).push_back(it);
  }
  std::vector<int> tup1(tuple.begin(), tuple.begin() + bigj);
  std::vector<int> tup2(tuple.begin() + bigj, tuple.end());
  procedure_d1(rep1, std::move(items1), tup1, prefs, spots);
  procedure_d1(rep2, std::move(items2), tup2, prefs, spots);
}

}  // namespace detail

inline std::vector<int> phi_b_inv(const MaximalChain& chain, DecodeTrace* trace = nullptr) {
  if (chain.type != GroupType::B) throw invalid_input("type-B chain expected");
  const int n = chain.n;

  // Elements of the chain from the bottom up, with their balanced supports.
  std::vector<SignedPermutation> omega{SignedPermutation::identity(n)};
  std::vector<std::vector<int>> balanced_support{{}};
  for (int i = 1; i <= n; ++i) {
    omega.push_back(omega.back().compose(to_signed_permutation(chain.reflections[i - 1], n)));
    CycleDecomposition dec = signed_cycle_decompose(omega.back());
    std::vector<int> supp;
    for (int d : dec.single_balanced()) supp.push_back(std::abs(d));
    std::sort(supp.begin(), supp.end());
    balanced_support.push_back(std::move(supp));
  }

  std::vector<int> growth;
  for (int i = 1; i <= n; ++i) {
    if (balanced_support[i] == balanced_support[i - 1]) continue;
    if (!std::includes(balanced_support[i].begin(), balanced_support[i].end(),
                       balanced_support[i - 1].begin(), balanced_support[i - 1].end()))
      throw invalid_input("balanced cycle shrank along the chain");
    growth.push_back(i);
  }
  if (growth.empty() || growth.back() != n)
    throw invalid_input("chain does not end in the full balanced cycle");

  std::vector<int> prefs(n + 1, 0), spots(n + 1, 0);
  std::vector<std::optional<std::vector<int>>> zeta_rows(n + 1);

  int prev_growth = 0;
  int ell = 0;
  std::vector<int> prev_support;

  for (int g : growth) {
    const std::vector<int>& supp = balanced_support[g];
    const int m = static_cast<int>(supp.size());
    std::set<int> supp_set(supp.begin(), supp.end());
    const auto inside = [&](const Reflection& t) {
      for (int v : detail::abs_support(t))
        if (!supp_set.count(v)) return false;
      return true;
    };

    if (prev_growth == 0) {
      // First appearance of a balanced cycle: its last reflection is long.
      const Reflection tg = chain.reflections[g - 1];
      if (tg.kind != ReflectionKind::BLong)
        throw invalid_input("balanced cycle must appear through a long reflection");
      const int h = m;
      const int j = static_cast<int>(std::lower_bound(supp.begin(), supp.end(), tg.i) -
                                     supp.begin()) + 1;
      if (j > h || supp[j - 1] != tg.i)
        throw internal_error("long reflection outside its balanced support");
      spots[g] = 1;
      prefs[g] = j == h ? 1 : n + 1 - h + j;
      std::vector<int> zeta{1};
      for (int x = n - h + 2; x <= n; ++x) zeta.push_back(x);
      std::sort(zeta.begin(), zeta.end());
      zeta_rows[g] = zeta;

      if (h > 1) {
        std::vector<int> rep(supp.begin(), supp.begin() + j);
        for (int x = j; x < h; ++x) rep.push_back(-supp[x]);
        std::vector<detail::IndexedReflection> items;
        for (int r = 1; r < g; ++r)
          if (inside(chain.reflections[r - 1]))
            items.push_back({r, chain.reflections[r - 1]});
        std::vector<int> tuple;
        for (int x = n - h + 2; x <= n; ++x) tuple.push_back(x);
        tuple.push_back(1);
        detail::procedure_d1(rep, std::move(items), tuple, prefs, spots);
      }
      ell = 1;
    } else {
      const int mp = static_cast<int>(prev_support.size());
      const auto sig = [&](int x) {
        x = modrep(x, 2 * m);
        return x <= m ? supp[x - 1] : -supp[x - m - 1];
      };
      const Reflection tg = chain.reflections[g - 1];
      int found_j = 0, matches = 0;
      for (int j = 1; j <= m; ++j) {
        if (Reflection::from_signed_pair(sig(mp + j), sig(m + j)) == tg) {
          found_j = j;
          ++matches;
        }
      }
      if (matches != 1)
        throw invalid_input("merge reflection does not fit the balanced cycle uniquely");

      std::vector<int> diff;
      std::set_difference(supp.begin(), supp.end(), prev_support.begin(),
                          prev_support.end(), std::back_inserter(diff));
      CycleDecomposition below = signed_cycle_decompose(omega[g - 1]);
      const std::vector<int>* absorbed = nullptr;
      for (const auto& rep : below.paired) {
        std::vector<int> abs_set;
        for (int v : rep) abs_set.push_back(std::abs(v));
        std::sort(abs_set.begin(), abs_set.end());
        if (abs_set == diff) {
          absorbed = &rep;
          break;
        }
      }
      if (!absorbed)
        throw invalid_input("absorbed paired cycle not found below the merge");

      std::vector<detail::IndexedReflection> items;
      std::set<int> diff_set(diff.begin(), diff.end());
      for (int r = 1; r < g; ++r) {
        bool all = true;
        for (int v : detail::abs_support(chain.reflections[r - 1]))
          if (!diff_set.count(v)) all = false;
        if (all) items.push_back({r, chain.reflections[r - 1]});
      }
      const int msize = m - mp;
      if (static_cast<int>(items.size()) != msize - 1)
        throw invalid_input("absorbed cycle has the wrong number of reflections");

      int b = 0;
      if (msize > 1) {
        // Structural pass with positional labels to find how many of the top
        // spaces of the absorbed block parked before the previous merge.
        std::vector<int> fake_tuple(msize);
        for (int x = 0; x < msize; ++x) fake_tuple[x] = x + 1;
        std::vector<int> fp(n + 1, 0), fs(n + 1, 0);
        detail::procedure_d1(*absorbed, items, fake_tuple, fp, fs);
        std::vector<int> index_of(msize, 0);
        for (const auto& it : items) index_of[fs[it.index] - 1] = it.index;
        for (int x = msize - 1; x >= 1; --x) {
          if (index_of[x - 1] < prev_growth)
            ++b;
          else
            break;
        }
      }

      spots[g] = ell + b + 1;
      const auto z_entry = [&](int x) { return x <= ell + b + 1 ? x : n - m + x; };
      prefs[g] = z_entry(modrep(ell + b + 1 + found_j, m));
      std::vector<int> zeta;
      for (int x = 1; x <= m; ++x) zeta.push_back(z_entry(x));
      zeta_rows[g] = zeta;

      if (msize > 1) {
        std::vector<int> tuple;
        for (int x = n - m + ell + b + 2; x <= n - mp + ell; ++x) tuple.push_back(x);
        for (int x = ell + 1; x <= ell + b; ++x) tuple.push_back(x);
        tuple.push_back(ell + b + 1);
        detail::procedure_d1(*absorbed, std::move(items), tuple, prefs, spots);
      }
      ell = spots[g];
    }
    prev_growth = g;
    prev_support = supp;
  }

  std::vector<int> alpha(prefs.begin() + 1, prefs.end());
  std::vector<int> pi(spots.begin() + 1, spots.end());
  for (int v : alpha)
    if (v < 1 || v > n) throw internal_error("decoded preference out of range");
  Outcome replay = outcome_b(alpha);
  if (replay.spots != pi)
    throw internal_error("decoded preference list does not replay to its outcome");
  for (int i = 0; i < n; ++i) {
    bool lucky = replay.lucky[i];
    if (lucky != (chain.labels[i] == EdgeLabel::Good))
      throw internal_error("edge labels disagree with lucky/reluctant pattern");
  }

  if (trace) {
    for (int i = 1; i <= n; ++i) {
      CycleDecomposition dec = signed_cycle_decompose(omega[i]);
      std::vector<BBlockView> blocks;
      if (!dec.balanced.empty()) {
        std::vector<int> s;
        for (int d : dec.single_balanced()) s.push_back(std::abs(d));
        std::sort(s.begin(), s.end());
        blocks.push_back({true, s, {}});
      }
      std::sort(dec.paired.begin(), dec.paired.end(),
                [](const std::vector<int>& x, const std::vector<int>& y) {
                  return std::abs(x[0]) < std::abs(y[0]);
                });
      for (auto& rep : dec.paired) blocks.push_back({false, rep, {}});
      trace->rows.push_back({i, chain.reflections[i - 1], std::move(blocks),
                             zeta_rows[i], alpha[i - 1], pi[i - 1],
                             chain.labels[i - 1]});
    }
  }
  return alpha;
}

// ---------------------------------------------------------------------------
// Preference list <-> word.
// ---------------------------------------------------------------------------

// Type A: length n-1 over 0..n, built right to left by relabeling the circle
// of spaces so the previously parked spots take the top labels.
inline std::vector<int> psi_a(const std::vector<int>& prefs) {
  const int n = static_cast<int>(prefs.size());
  auto outcome = outcome_a(prefs);
  if (!outcome) throw invalid_input("preference list is not a parking function");
  const auto& spots = outcome->spots;

  std::vector<int> word(n > 0 ? n - 1 : 0, 0);
  for (int k = 2; k <= n; ++k) {
    std::vector<int> label(n + 1, -1);  // label[v] over vertices 0..n
    for (int r = 1; r <= k - 1; ++r) label[spots[r - 1]] = n - r + 1;
    int next = 0;
    for (int step = 1; step <= n + 1; ++step) {
      int v = (spots[0] + step) % (n + 1);
      if (label[v] < 0) label[v] = next++;
    }
    word[n - k] = label[prefs[k - 1]];
  }
  return word;
}

// Intermediate data of the two-stage word decode: the circular preference
// list on spaces 0..n, its outcome, and the space left empty.
struct PsiAStage {
  std::vector<int> circular_prefs, circular_spots;
  int empty_space = 0;
};

inline std::vector<int> psi_a_inv(const std::vector<int>& word,
                                  PsiAStage* stage = nullptr) {
  const int n = static_cast<int>(word.size()) + 1;
  for (int x : word)
    if (x < 0 || x > n) throw invalid_input("word letter out of range 0..n");

  // First stage: circular parking on spaces 0..n with the first car at 0.
  std::vector<int> apr(n + 1, 0), ppr(n + 1, 0);
  std::vector<int> g(n + 1);  // g[label] = space
  for (int i = 0; i <= n; ++i) g[i] = (i + 1) % (n + 1);
  std::vector<bool> taken(n + 1, false);
  taken[0] = true;

  for (int k = 2; k <= n; ++k) {
    const int x = word[n - k];
    const int t = g[x];
    apr[k] = t;
    int spot = t;
    if (x > n - k + 1) {
      int s = 1;
      while (taken[(t + s) % (n + 1)]) ++s;
      spot = (t + s) % (n + 1);
    }
    ppr[k] = spot;
    taken[spot] = true;
    // Top labels stick to the parked spaces; the rest relabel in increasing
    // order.
    g[n - k + 1] = spot;
    std::vector<int> free_spaces;
    for (int v = 0; v <= n; ++v)
      if (!taken[v]) free_spaces.push_back(v);
    for (int lab = 0; lab <= n - k; ++lab) g[lab] = free_spaces[lab];
  }

  int empty_space = -1;
  for (int v = 1; v <= n; ++v)
    if (!taken[v]) empty_space = v;
  if (empty_space < 0) throw internal_error("circular stage left no empty space");
  if (stage) {
    stage->circular_prefs.assign(apr.begin() + 1, apr.end());
    stage->circular_spots.assign(ppr.begin() + 1, ppr.end());
    stage->empty_space = empty_space;
  }

  std::vector<int> prefs(n);
  for (int i = 1; i <= n; ++i)
    prefs[i - 1] = (apr[i] + n + 1 - empty_space) % (n + 1);
  if (!is_parking_function_a(prefs))
    throw internal_error("decoded word does not give a parking function");
  return prefs;
}

// Type B: length n over 1..n. The last letter is the first preference; lucky
// cars record the rank of their spot among the spots still to come, reluctant
// cars point back at the car blocking them.
inline std::vector<int> psi_b(const std::vector<int>& prefs) {
  const int n = static_cast<int>(prefs.size());
  Outcome outcome = outcome_b(prefs);
  const auto& spots = outcome.spots;

  std::vector<int> word(n, 0);
  word[n - 1] = prefs[0];
  for (int k = 2; k <= n; ++k) {
    if (prefs[k - 1] == spots[k - 1]) {
      int rank = 0;
      for (int r = k; r <= n; ++r)
        if (spots[r - 1] <= spots[k - 1]) ++rank;
      word[n - k] = rank;
    } else {
      int blocker = 0;
      for (int r = 1; r < k; ++r)
        if (spots[r - 1] == prefs[k - 1]) blocker = r;
      if (blocker == 0) throw internal_error("reluctant car with a free preference");
      word[n - k] = n - blocker + 1;
    }
  }
  return word;
}

inline std::vector<int> psi_b_inv(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  for (int x : word)
    if (x < 1 || x > n) throw invalid_input("word letter out of range 1..n");

  std::vector<int> prefs(n, 0), spots(n, 0);
  std::vector<bool> taken(n + 1, false);
  prefs[0] = spots[0] = word[n - 1];
  taken[word[n - 1]] = true;

  for (int k = 2; k <= n; ++k) {
    const int x = word[n - k];
    if (x <= n - k + 1) {
      int remaining = 0, space = 0;
      for (int v = 1; v <= n && space == 0; ++v)
        if (!taken[v] && ++remaining == x) space = v;
      if (space == 0) throw internal_error("rank exceeds the free spaces");
      prefs[k - 1] = spots[k - 1] = space;
      taken[space] = true;
    } else {
      const int t = spots[n - x];  // blocking car's spot
      prefs[k - 1] = t;
      int s = 1;
      while (taken[modrep(t + s, n)]) ++s;
      spots[k - 1] = modrep(t + s, n);
      taken[spots[k - 1]] = true;
    }
  }
  return prefs;
}

}  // namespace ncpark
