#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "ncpark/bijections.hpp"
#include "ncpark/chains.hpp"
#include "ncpark/parking.hpp"
#include "ncpark/perm.hpp"

namespace ncpark {

inline std::string edge_symbol(EdgeLabel l, bool ascii) {
  if (l == EdgeLabel::Good) return ascii ? "o" : "∘";
  return ascii ? "x" : "×";
}

namespace detail {

inline std::string join_ints(const std::vector<int>& xs, bool star_last = false) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  if (star_last && !xs.empty()) out += '*';
  return out;
}

inline std::string render_a_cycles(const std::vector<std::vector<int>>& cycles) {
  std::string out;
  for (const auto& c : cycles) out += "(" + join_ints(c) + ")";
  return out;
}

inline std::string render_b_blocks(const std::vector<BBlockView>& blocks, bool cycles) {
  std::string out;
  for (const auto& blk : blocks) {
    if (cycles)
      out += blk.balanced ? "[" + join_ints(blk.cycle) + "]"
                          : "(" + join_ints(blk.cycle) + ")";
    else
      out += blk.balanced ? "{" + join_ints(blk.tuple) + "}"
                          : "(" + join_ints(blk.tuple, true) + ")";
  }
  return out;
}

}  // namespace detail

// Per-step table of the preference-to-chain construction, type A. Each row
// shows the state above the step: the workspace cycles, their space
// intervals, and the reflection chosen for the car.
inline std::string render_trace(const TypeATrace& trace, bool ascii) {
  std::ostringstream out;
  for (const auto& row : trace.rows) {
    out << "i=" << row.car << " a=" << row.pref << " p=" << row.spot
        << " w=" << detail::render_a_cycles(row.cycles)
        << " z=" << detail::render_a_cycles(row.tuples)
        << " t=" << row.t.to_string() << " " << edge_symbol(row.label, ascii)
        << "\n";
  }
  out << "i=0 w=" << detail::render_a_cycles(trace.final_cycles)
      << " z=" << detail::render_a_cycles(trace.final_tuples) << "\n";
  return out.str();
}

// Same for type B; balanced cycles render as [..], their space tuples as
// {..}, and a paired tuple marks its still-empty space with a star.
inline std::string render_trace(const TypeBTrace& trace, bool ascii) {
  std::ostringstream out;
  for (const auto& row : trace.rows) {
    out << "i=" << row.car << " a=" << row.pref << " p=" << row.spot;
    if (row.zeta_naught_size) out << " Z0=" << *row.zeta_naught_size;
    out << " w=" << detail::render_b_blocks(row.blocks, true)
        << " z=" << detail::render_b_blocks(row.blocks, false)
        << " t=" << row.t.to_string() << " " << edge_symbol(row.label, ascii)
        << "\n";
  }
  out << "i=0 w=" << detail::render_b_blocks(trace.final_blocks, true)
      << " z=" << detail::render_b_blocks(trace.final_blocks, false) << "\n";
  return out.str();
}

// Chain-to-preference decode table: the elements of the chain from the bottom
// up, with the balanced-block tuple shown at the steps where the balanced
// cycle grows.
inline std::string render_trace(const DecodeTrace& trace, bool ascii) {
  std::ostringstream out;
  for (const auto& row : trace.rows) {
    out << "i=" << row.step << " t=" << row.t.to_string()
        << " w=" << detail::render_b_blocks(row.blocks, true);
    if (row.zeta) out << " z=(" << detail::join_ints(*row.zeta) << ")";
    out << " a=" << row.pref << " p=" << row.spot << " "
        << edge_symbol(row.label, ascii) << "\n";
  }
  return out.str();
}

// The complete rank-3 preference/chain correspondence for one type, ordered
// by edge pattern (good = 0, bad = 1, binary value) and then by preference
// list; one row per parking function.
struct CorrespondenceRow {
  std::vector<int> prefs;
  std::vector<int> spots;
  MaximalChain chain;
};

inline std::vector<CorrespondenceRow> correspondence_rows(GroupType type, int n) {
  std::vector<CorrespondenceRow> rows;
  enumerate_pf(type, n, [&](const std::vector<int>& prefs) {
    MaximalChain chain = type == GroupType::A ? phi_a(prefs) : phi_b(prefs);
    Outcome o = type == GroupType::A ? *outcome_a(prefs) : outcome_b(prefs);
    rows.push_back({prefs, o.spots, std::move(chain)});
  });
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CorrespondenceRow& x, const CorrespondenceRow& y) {
                     int bx = 0, by = 0;
                     for (EdgeLabel l : x.chain.labels)
                       bx = bx * 2 + (l == EdgeLabel::Bad ? 1 : 0);
                     for (EdgeLabel l : y.chain.labels)
                       by = by * 2 + (l == EdgeLabel::Bad ? 1 : 0);
                     if (bx != by) return bx < by;
                     return x.prefs < y.prefs;
                   });
  return rows;
}

inline std::string render_correspondence_text(const std::vector<CorrespondenceRow>& rows,
                                              bool ascii) {
  std::ostringstream out;
  out << "alpha outcome edges chain\n";
  for (const auto& row : rows) {
    for (int v : row.prefs) out << v;
    out << ' ';
    for (int v : row.spots) out << v;
    out << ' ' << label_string(row.chain.labels, ascii) << ' '
        << to_string(row.chain) << "\n";
  }
  return out.str();
}

inline std::string render_correspondence_csv(const std::vector<CorrespondenceRow>& rows,
                                             bool ascii) {
  std::ostringstream out;
  out << "alpha,outcome,edges,chain\n";
  for (const auto& row : rows) {
    out << '"';
    for (int v : row.prefs) out << v;
    out << "\",\"";
    for (int v : row.spots) out << v;
    out << "\",\"" << label_string(row.chain.labels, ascii) << "\",\""
        << to_string(row.chain) << "\"\n";
  }
  return out.str();
}

}  // namespace ncpark
