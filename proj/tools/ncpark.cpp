// Command-line surface: exact enumeration, the four bijections, polynomial
// and gamma computations, verification suites, and the rank-3 correspondence
// tables.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncpark/bijections.hpp"
#include "ncpark/chains.hpp"
#include "ncpark/gamma.hpp"
#include "ncpark/parking.hpp"
#include "ncpark/perm.hpp"
#include "ncpark/qpoly.hpp"
#include "ncpark/tables.hpp"
#include "ncpark/verify.hpp"
#include "ncpark/words.hpp"

namespace {

using namespace ncpark;

constexpr int kDefaultRankCap = 8;

GroupType parse_type(const std::string& s) {
  if (s == "A" || s == "a") return GroupType::A;
  if (s == "B" || s == "b") return GroupType::B;
  throw invalid_input("type must be A or B");
}

void check_rank(int n, bool force) {
  if (n < 1) throw invalid_input("rank must be at least 1");
  if (!force && n > kDefaultRankCap)
    throw invalid_input("rank " + std::to_string(n) + " exceeds the default cap of " +
                        std::to_string(kDefaultRankCap) + "; pass --force to override");
}

void print_poly(const QPolynomial& p, const std::string& format) {
  if (format == "json") {
    nlohmann::json arr = coefficient_strings(p);
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << to_string(p) << "\n";
  }
}

void print_gamma(const GammaVector& g, const std::string& format) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : g) arr.push_back(v.to_string());
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << to_string(g) << "\n";
  }
}

int cmd_poly(const std::string& type_s, int n, const std::string& method,
             const std::string& format, bool force, const std::string& degrees,
             int coxeter_h, long long order) {
  if (!degrees.empty()) {
    if (coxeter_h <= 0 || order <= 0)
      throw invalid_input("--degrees needs --coxeter-h and --order");
    auto ds = parse_int_list(degrees, ',');
    print_poly(closed_form(ds, coxeter_h, BigInt(order)), format);
    return 0;
  }
  GroupType type = parse_type(type_s);
  check_rank(n, force);
  QPolynomial p;
  if (method == "chains")
    p = chain_polynomial(type, n);
  else if (method == "parking")
    p = reluc_polynomial(type, n);
  else if (method == "closed")
    p = type == GroupType::A ? closed_form_a(n) : closed_form_b(n);
  else if (method == "recurrence")
    p = type == GroupType::A ? recurrence_a(n) : recurrence_b(n);
  else if (method == "words")
    p = exc_polynomial(type, n);
  else if (method == "determinant") {
    if (type != GroupType::B) throw invalid_input("method determinant is type B only");
    p = m_determinant(n);
  } else {
    throw invalid_input("unknown method: " + method);
  }
  print_poly(p, format);
  return 0;
}

int cmd_gamma(int n, const std::string& method, const std::string& format, bool force) {
  check_rank(n, force);
  GammaVector g;
  if (method == "expand")
    g = gamma_expand(closed_form_b(n), n);
  else if (method == "sum")
    g = gamma_vector_sum(n);
  else if (method == "product")
    g = gamma_product_formula(n);
  else if (method == "determinant")
    g = GammaVector(gamma_determinant(n).coefficients());
  else if (method == "words")
    g = gamma_vector_words(n);
  else if (method == "parking") {
    g.assign((n + 1) / 2, BigInt(0));
    enumerate_pf(GroupType::B, n, [&](const std::vector<int>& prefs) {
      Outcome o = outcome_b(prefs);
      if (!o.lucky[n - 1]) return;
      for (int i = 0; i + 1 < n; ++i)
        if (!o.lucky[i] && !o.lucky[i + 1]) return;
      g[reluc_count(o)] += 1;
    });
  } else if (method == "chains") {
    g.assign((n + 1) / 2, BigInt(0));
    enumerate_chains(GroupType::B, n, [&](const MaximalChain& c) {
      if (c.labels[n - 1] == EdgeLabel::Bad) return;
      for (int i = 0; i + 1 < n; ++i)
        if (c.labels[i] == EdgeLabel::Bad && c.labels[i + 1] == EdgeLabel::Bad) return;
      g[bad_count(c)] += 1;
    });
  } else {
    throw invalid_input("unknown method: " + method);
  }
  if (g.empty()) g.push_back(0);
  print_gamma(g, format);
  return 0;
}

int cmd_map(const std::string& direction, const std::string& type_s,
            const std::string& input, bool trace, bool ascii) {
  GroupType type = parse_type(type_s);
  if (direction == "pf2chain") {
    auto prefs = parse_prefs(input);
    if (type == GroupType::A) {
      TypeATrace t;
      MaximalChain chain = phi_a(prefs, trace ? &t : nullptr);
      if (trace) std::cout << render_trace(t, ascii);
      std::cout << to_string(chain) << "\n";
    } else {
      TypeBTrace t;
      MaximalChain chain = phi_b(prefs, trace ? &t : nullptr);
      if (trace) std::cout << render_trace(t, ascii);
      std::cout << to_string(chain) << "\n";
    }
    return 0;
  }
  if (direction == "chain2pf") {
    MaximalChain chain = parse_chain(input, type);
    if (type == GroupType::A) {
      TypeATrace t;
      auto prefs = phi_a_inv(chain, trace ? &t : nullptr);
      if (trace) std::cout << render_trace(t, ascii);
      std::cout << to_string_prefs(prefs) << "\n";
    } else {
      DecodeTrace t;
      auto prefs = phi_b_inv(chain, trace ? &t : nullptr);
      if (trace) std::cout << render_trace(t, ascii);
      std::cout << to_string_prefs(prefs) << "\n";
    }
    return 0;
  }
  if (direction == "pf2word") {
    if (trace) throw invalid_input("--trace applies to the chain maps only");
    auto prefs = parse_prefs(input);
    auto word = type == GroupType::A ? psi_a(prefs) : psi_b(prefs);
    std::cout << to_string_word(word) << "\n";
    return 0;
  }
  if (direction == "word2pf") {
    if (trace) throw invalid_input("--trace applies to the chain maps only");
    auto word = parse_word(input);
    auto prefs = type == GroupType::A ? psi_a_inv(word) : psi_b_inv(word);
    std::cout << to_string_prefs(prefs) << "\n";
    return 0;
  }
  throw invalid_input("unknown direction: " + direction);
}

int cmd_enumerate(const std::string& type_s, int n, const std::string& what,
                  const std::string& format, bool force, bool ascii) {
  GroupType type = parse_type(type_s);
  check_rank(n, force);
  const bool csv = format == "csv";
  if (what == "pf") {
    if (csv) std::cout << "prefs,outcome,reluc\n";
    enumerate_pf(type, n, [&](const std::vector<int>& prefs) {
      Outcome o = type == GroupType::A ? *outcome_a(prefs) : outcome_b(prefs);
      if (csv)
        std::cout << '"' << to_string_prefs(prefs) << "\",\""
                  << to_string_prefs(o.spots) << "\"," << reluc_count(o) << "\n";
      else
        std::cout << to_string_prefs(prefs) << " -> " << to_string_prefs(o.spots)
                  << " reluc=" << reluc_count(o) << "\n";
    });
    return 0;
  }
  if (what == "chains") {
    if (csv) std::cout << "chain,edges,bad\n";
    enumerate_chains(type, n, [&](const MaximalChain& c) {
      if (csv)
        std::cout << '"' << to_string(c) << "\",\"" << label_string(c.labels, ascii)
                  << "\"," << bad_count(c) << "\n";
      else
        std::cout << to_string(c) << " " << label_string(c.labels, ascii) << "\n";
    });
    return 0;
  }
  if (what == "words") {
    if (csv) std::cout << "word,exc\n";
    enumerate_words(type, n, [&](const std::vector<int>& w) {
      if (csv)
        std::cout << '"' << to_string_word(w) << "\"," << exc_count(w) << "\n";
      else
        std::cout << to_string_word(w) << " exc=" << exc_count(w) << "\n";
    });
    return 0;
  }
  throw invalid_input("unknown enumeration target: " + what);
}

int cmd_verify(int n_max, std::vector<std::string> suites, bool inject_fault) {
  if (n_max < 1) throw invalid_input("--n-max must be at least 1");
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all"))
    suites = all_suite_names();
  if (inject_fault) inject_zeta_naught_off_by_one = true;
  bool all_ok = true;
  for (const auto& name : suites) {
    SuiteResult result = run_suite(name, n_max);
    all_ok = all_ok && result.passed;
    std::cout << (result.passed ? "PASS " : "FAIL ") << result.name;
    if (!result.detail.empty()) std::cout << "  [" << result.detail << "]";
    std::cout << "\n";
  }
  inject_zeta_naught_off_by_one = false;
  return all_ok ? 0 : 1;
}

int cmd_table(const std::string& which, const std::string& format, bool ascii) {
  GroupType type;
  if (which == "table2")
    type = GroupType::A;
  else if (which == "table5")
    type = GroupType::B;
  else
    throw invalid_input("table must be table2 or table5");
  auto rows = correspondence_rows(type, 3);
  std::cout << (format == "csv" ? render_correspondence_csv(rows, ascii)
                                : render_correspondence_text(rows, ascii));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for parking functions, noncrossing-partition "
               "chains, and their statistic-preserving bijections"};
  app.require_subcommand(1);

  std::string type_s = "A", method = "closed", format = "text";
  std::string direction, input, what = "pf", which;
  int n = 3, n_max = 4;
  bool force = false, trace = false, ascii = false, inject = false;
  std::string degrees;
  int coxeter_h = 0;
  long long order = 0;
  std::vector<std::string> suites;

  const auto types = CLI::IsMember({"A", "B", "a", "b"});

  auto* poly = app.add_subcommand("poly", "Chain polynomial by a chosen route");
  poly->add_option("--type", type_s, "A or B")->check(types);
  poly->add_option("--n", n, "rank")->required();
  poly->add_option("--method", method,
                   "chains|parking|closed|recurrence|words|determinant")
      ->check(CLI::IsMember(
          {"chains", "parking", "closed", "recurrence", "words", "determinant"}));
  poly->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  poly->add_flag("--force", force, "lift the default rank cap");
  poly->add_option("--degrees", degrees,
                   "comma-separated degree list for the generic product");
  poly->add_option("--coxeter-h", coxeter_h, "Coxeter number for --degrees");
  poly->add_option("--order", order, "group order for --degrees");

  auto* gamma = app.add_subcommand("gamma", "Gamma vector by a chosen route");
  gamma->add_option("--n", n, "rank")->required();
  gamma->add_option("--method", method,
                    "expand|sum|product|determinant|words|parking|chains")
      ->required()
      ->check(CLI::IsMember(
          {"expand", "sum", "product", "determinant", "words", "parking", "chains"}));
  gamma->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  gamma->add_flag("--force", force, "lift the default rank cap");

  auto* map = app.add_subcommand("map", "Apply a bijection to one input");
  map->add_option("direction", direction, "pf2chain|chain2pf|pf2word|word2pf")
      ->required()
      ->check(CLI::IsMember({"pf2chain", "chain2pf", "pf2word", "word2pf"}));
  map->add_option("input", input, "preference list, chain, or word")->required();
  map->add_option("--type", type_s, "A or B")->required()->check(types);
  map->add_flag("--trace", trace, "print the per-step workspace table");
  map->add_flag("--ascii", ascii, "use o/x for good/bad edges");

  auto* enumerate = app.add_subcommand("enumerate", "List parking functions, chains, or words");
  enumerate->add_option("--type", type_s, "A or B")->required()->check(types);
  enumerate->add_option("--n", n, "rank")->required();
  enumerate->add_option("--what", what, "pf|chains|words")
      ->check(CLI::IsMember({"pf", "chains", "words"}));
  enumerate->add_option("--format", format, "text|csv")
      ->check(CLI::IsMember({"text", "csv"}));
  enumerate->add_flag("--force", force, "lift the default rank cap");
  enumerate->add_flag("--ascii", ascii, "use o/x for good/bad edges");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--n-max", n_max, "largest rank to verify exhaustively");
  verify->add_option("--suite", suites, "suite name or 'all' (repeatable)");
  verify->add_flag("--inject-zeta-off-by-one", inject,
                   "corrupt the zeta-naught split (test instrumentation)");

  auto* table = app.add_subcommand("table", "Emit a rank-3 correspondence table");
  table->add_option("which", which, "table2|table5")
      ->required()
      ->check(CLI::IsMember({"table2", "table5"}));
  table->add_option("--format", format, "text|csv")
      ->check(CLI::IsMember({"text", "csv"}));
  table->add_flag("--ascii", ascii, "use o/x for good/bad edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (poly->parsed())
      return cmd_poly(type_s, n, method, format, force, degrees, coxeter_h, order);
    if (gamma->parsed()) return cmd_gamma(n, method, format, force);
    if (map->parsed()) return cmd_map(direction, type_s, input, trace, ascii);
    if (enumerate->parsed()) return cmd_enumerate(type_s, n, what, format, force, ascii);
    if (verify->parsed()) return cmd_verify(n_max, suites, inject);
    if (table->parsed()) return cmd_table(which, format, ascii);
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
