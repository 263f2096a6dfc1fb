// Acceptance suite: each criterion prints one PASS/FAIL line. Run with no
// arguments for all criteria or with a single number for one of them.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ncpark/bijections.hpp"
#include "ncpark/chains.hpp"
#include "ncpark/gamma.hpp"
#include "ncpark/parking.hpp"
#include "ncpark/perm.hpp"
#include "ncpark/qpoly.hpp"
#include "ncpark/tables.hpp"
#include "ncpark/verify.hpp"
#include "ncpark/words.hpp"

using namespace ncpark;

namespace {

struct Failure {
  std::string detail;
};

void expect(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  std::string cmd = std::string(NCPARK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  expect(pipe != nullptr, "could not spawn the CLI");
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  if (exit_code) *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(NCPARK_GOLDEN_DIR) + "/" + name, std::ios::binary);
  expect(in.good(), "missing golden file " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// 1. Four-way agreement in type A for n = 1..6.
void criterion1() {
  for (int n = 1; n <= 6; ++n) {
    QPolynomial closed = closed_form_a(n);
    expect(chain_polynomial(GroupType::A, n) == closed,
           "chain polynomial differs at A n=" + std::to_string(n));
    expect(reluc_polynomial(GroupType::A, n) == closed,
           "parking polynomial differs at A n=" + std::to_string(n));
    expect(recurrence_a(n) == closed,
           "recurrence differs at A n=" + std::to_string(n));
  }
}

// 2. Six-way agreement in type B for n = 1..6, determinant to n = 10.
void criterion2() {
  for (int n = 1; n <= 6; ++n) {
    QPolynomial closed = closed_form_b(n);
    expect(chain_polynomial(GroupType::B, n) == closed,
           "chain polynomial differs at B n=" + std::to_string(n));
    expect(reluc_polynomial(GroupType::B, n) == closed,
           "parking polynomial differs at B n=" + std::to_string(n));
    expect(recurrence_b(n) == closed,
           "recurrence differs at B n=" + std::to_string(n));
    expect(exc_polynomial(GroupType::B, n) == closed,
           "word polynomial differs at B n=" + std::to_string(n));
  }
  for (int n = 1; n <= 10; ++n)
    expect(m_determinant(n) == closed_form_b(n),
           "determinant differs at B n=" + std::to_string(n));
}

// 3. Chain counts (n+1)^(n-1) and n^n for n = 1..6.
void criterion3() {
  for (int n = 1; n <= 6; ++n) {
    long long a = 0, b = 0;
    enumerate_chains(GroupType::A, n, [&](const MaximalChain&) { ++a; });
    enumerate_chains(GroupType::B, n, [&](const MaximalChain&) { ++b; });
    expect(BigInt(a) == BigInt(n + 1).pow(n - 1),
           "type A count differs at n=" + std::to_string(n));
    expect(BigInt(b) == BigInt(n).pow(n),
           "type B count differs at n=" + std::to_string(n));
  }
}

// 4. Chain bijections: exhaustive round trip, positionwise statistics,
//    injectivity with full image, for n <= 5.
void criterion4() {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> a_images, b_images;
    enumerate_pf(GroupType::A, n, [&](const std::vector<int>& prefs) {
      MaximalChain chain = phi_a(prefs);
      Outcome o = *outcome_a(prefs);
      for (int i = 0; i < n; ++i)
        expect((chain.labels[i] == EdgeLabel::Bad) == !o.lucky[i],
               "label/reluctant mismatch at A " + to_string_prefs(prefs));
      expect(phi_a_inv(chain) == prefs, "round trip failed at A " + to_string_prefs(prefs));
      a_images.insert(to_string(chain));
    });
    enumerate_pf(GroupType::B, n, [&](const std::vector<int>& prefs) {
      MaximalChain chain = phi_b(prefs);
      Outcome o = outcome_b(prefs);
      for (int i = 0; i < n; ++i)
        expect((chain.labels[i] == EdgeLabel::Bad) == !o.lucky[i],
               "label/reluctant mismatch at B " + to_string_prefs(prefs));
      expect(phi_b_inv(chain) == prefs, "round trip failed at B " + to_string_prefs(prefs));
      b_images.insert(to_string(chain));
    });
    std::size_t a_count = 0, b_count = 0;
    enumerate_chains(GroupType::A, n, [&](const MaximalChain& c) {
      expect(a_images.count(to_string(c)) == 1, "chain missing from the A image");
      ++a_count;
    });
    enumerate_chains(GroupType::B, n, [&](const MaximalChain& c) {
      expect(b_images.count(to_string(c)) == 1, "chain missing from the B image");
      ++b_count;
    });
    expect(a_images.size() == a_count, "A image is not injective");
    expect(b_images.size() == b_count, "B image is not injective");
  }
}

// 5. Word bijections: exhaustive round trips both ways and positionwise
//    excedance correspondence for n <= 6.
void criterion5() {
  for (int n = 1; n <= 6; ++n) {
    enumerate_pf(GroupType::A, n, [&](const std::vector<int>& prefs) {
      std::vector<int> word = psi_a(prefs);
      Outcome o = *outcome_a(prefs);
      for (int i = 2; i <= n; ++i)
        expect((word[n - i] > n - i + 1) == !o.lucky[i - 1],
               "excedance mismatch at A " + to_string_prefs(prefs));
      expect(psi_a_inv(word) == prefs,
             "word round trip failed at A " + to_string_prefs(prefs));
    });
    enumerate_words(GroupType::A, n, [&](const std::vector<int>& word) {
      expect(psi_a(psi_a_inv(word)) == word,
             "word round trip failed at A word " + to_string_word(word));
    });
    enumerate_pf(GroupType::B, n, [&](const std::vector<int>& prefs) {
      std::vector<int> word = psi_b(prefs);
      Outcome o = outcome_b(prefs);
      for (int i = 1; i <= n; ++i)
        expect((word[n - i] > n - i + 1) == !o.lucky[i - 1],
               "excedance mismatch at B " + to_string_prefs(prefs));
      expect(psi_b_inv(word) == prefs,
             "word round trip failed at B " + to_string_prefs(prefs));
    });
    enumerate_words(GroupType::B, n, [&](const std::vector<int>& word) {
      expect(psi_b(psi_b_inv(word)) == word,
             "word round trip failed at B word " + to_string_word(word));
    });
  }
}

// 6. The published tables, byte for byte.
void criterion6() {
  expect(run_cli("table table2") == golden("table2.txt"), "table2 differs");
  expect(run_cli("table table5") == golden("table5.txt"), "table5 differs");
  expect(run_cli("map pf2chain --type A \"2,2,6,1,6,1,3\" --trace --ascii") ==
             golden("trace_table1.txt"),
         "type A trace differs");
  expect(run_cli("map pf2chain --type B \"3,8,8,7,8,5,5,7\" --trace --ascii") ==
             golden("trace_table3.txt"),
         "type B trace differs");
  MaximalChain chain = parse_chain(
      "[(2,-9)(-2,9)] [(4,-7)(-4,7)] [(3,-8)(-3,8)] [(4,-4)] [(5,6)(-5,-6)] "
      "[(1,-9)(-1,9)] [(4,6)(-4,-6)] [(2,-8)(-2,8)] [(3,-7)(-3,7)]",
      GroupType::B);
  expect(phi_b_inv(chain) == std::vector<int>{3, 9, 6, 9, 8, 3, 1, 6, 8},
         "nine-step decode differs");
}

// 7. Gamma agreement across every route, with the published spot values.
void criterion7() {
  for (int n = 1; n <= 12; ++n) {
    GammaVector expand = gamma_expand(closed_form_b(n), n);
    expect(gamma_vector_sum(n) == expand, "sum route differs at n=" + std::to_string(n));
    expect(gamma_product_formula(n) == expand,
           "product route differs at n=" + std::to_string(n));
    expect(GammaVector(gamma_determinant(n).coefficients()) == expand,
           "determinant route differs at n=" + std::to_string(n));
    expect(gamma_reconstruct(expand, n) == closed_form_b(n),
           "reconstruction differs at n=" + std::to_string(n));
  }
  for (int n = 1; n <= 7; ++n)
    expect(gamma_vector_words(n) == gamma_expand(closed_form_b(n), n),
           "word route differs at n=" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) {
    GammaVector expand = gamma_expand(closed_form_b(n), n);
    GammaVector from_pf(expand.size(), BigInt(0));
    enumerate_pf(GroupType::B, n, [&](const std::vector<int>& prefs) {
      Outcome o = outcome_b(prefs);
      if (!o.lucky[n - 1]) return;
      for (int i = 0; i + 1 < n; ++i)
        if (!o.lucky[i] && !o.lucky[i + 1]) return;
      from_pf[reluc_count(o)] += 1;
    });
    expect(from_pf == expand, "parking route differs at n=" + std::to_string(n));
    GammaVector from_chains(expand.size(), BigInt(0));
    enumerate_chains(GroupType::B, n, [&](const MaximalChain& c) {
      if (c.labels[n - 1] == EdgeLabel::Bad) return;
      for (int i = 0; i + 1 < n; ++i)
        if (c.labels[i] == EdgeLabel::Bad && c.labels[i + 1] == EdgeLabel::Bad) return;
      from_chains[bad_count(c)] += 1;
    });
    expect(from_chains == expand, "chain route differs at n=" + std::to_string(n));
  }
  expect(gamma_expand(closed_form_b(3), 3) == GammaVector{6, 3}, "gamma_3 spot value");
  expect(gamma_expand(closed_form_b(4), 4) == GammaVector{24, 32}, "gamma_4 spot value");
  expect(gamma_expand(closed_form_b(5), 5) == GammaVector{120, 290, 45},
         "gamma_5 spot value");
}

// 8. The tridiagonal determinant identity.
void criterion8() {
  SuiteResult r = suite_chu(12);
  expect(r.passed, r.detail);
}

// 9. Structural edge rules against inversion counts, and the class
//    partitions, over everything reachable at n <= 5.
void criterion9() {
  SuiteResult r = suite_edge_rules(5);
  expect(r.passed, r.detail);
}

// 10. The verifier detects an injected off-by-one in the zeta-naught
//     construction at n <= 4.
void criterion10() {
  int code = 0;
  std::string out =
      run_cli("verify --n-max 4 --suite chain-bijections --inject-zeta-off-by-one", &code);
  expect(code == 1, "corrupted run should exit 1, got " + std::to_string(code));
  expect(out.find("FAIL chain-bijections") != std::string::npos,
         "corrupted run should report the failing suite");
  expect(out.find("input:") != std::string::npos,
         "corrupted run should print a counterexample");

  out = run_cli("verify --suite mutation-sanity", &code);
  expect(code == 0, "mutation suite should pass, exit " + std::to_string(code));
  expect(out.find("PASS mutation-sanity") != std::string::npos,
         "mutation suite should report success");
}

struct Criterion {
  int number;
  const char* summary;
  std::function<void()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "type A polynomial four-way agreement, n <= 6", criterion1},
      {2, "type B polynomial six-way agreement, n <= 6 (determinant to 10)", criterion2},
      {3, "chain counts (n+1)^(n-1) and n^n, n <= 6", criterion3},
      {4, "chain bijections: round trip, statistics, full image, n <= 5", criterion4},
      {5, "word bijections: round trip and excedance match, n <= 6", criterion5},
      {6, "published tables and traces, byte for byte", criterion6},
      {7, "gamma agreement across all routes, n <= 12", criterion7},
      {8, "tridiagonal determinant equals the paired product, n <= 12", criterion8},
      {9, "edge rules vs inversion counts and class partitions, n <= 5", criterion9},
      {10, "verifier catches an injected zeta-naught fault", criterion10},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failures = 0;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.number != only) continue;
    try {
      c.run();
      std::printf("PASS criterion %d: %s\n", c.number, c.summary);
    } catch (const Failure& f) {
      ++failures;
      std::printf("FAIL criterion %d: %s  [%s]\n", c.number, c.summary,
                  f.detail.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL criterion %d: %s  [exception: %s]\n", c.number, c.summary,
                  e.what());
    }
  }
  return failures == 0 ? 0 : 1;
}
