#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "ncpark/chains.hpp"
#include "ncpark/words.hpp"

using namespace ncpark;

TEST_CASE("excedance counts") {
  CHECK(exc_count({3, 3, 4, 3, 6, 2}) == 4);
  CHECK(exc_count({1, 3, 4, 6, 1}) == 3);
  for (int n = 1; n <= 5; ++n) CHECK(exc_count(std::vector<int>(n, 1)) == 0);
  CHECK(exc_count({}) == 0);
}

TEST_CASE("word enumeration sizes") {
  int count = 0;
  enumerate_words(GroupType::A, 3, [&](const std::vector<int>&) { ++count; });
  CHECK(count == 16);  // 4^2
  count = 0;
  enumerate_words(GroupType::B, 3, [&](const std::vector<int>&) { ++count; });
  CHECK(count == 27);
  count = 0;
  enumerate_words(GroupType::A, 1, [&](const std::vector<int>& w) {
    CHECK(w.empty());
    ++count;
  });
  CHECK(count == 1);
}

TEST_CASE("excedance polynomials match the closed forms") {
  CHECK(to_string(exc_polynomial(GroupType::B, 3)) == "6 + 15*q + 6*q^2");
  CHECK(to_string(exc_polynomial(GroupType::B, 1)) == "1");
  CHECK(exc_polynomial(GroupType::A, 4) == closed_form_a(4));
  for (int n = 1; n <= 5; ++n) {
    CHECK(exc_polynomial(GroupType::A, n) == closed_form_a(n));
    CHECK(exc_polynomial(GroupType::B, n) == closed_form_b(n));
  }
}

TEST_CASE("restricted word set") {
  int count = 0;
  enumerate_f(3, [&](const std::vector<int>&) { ++count; });
  CHECK(count == 9);
  CHECK(gamma_vector_words(3) == GammaVector{6, 3});
  CHECK(gamma_vector_words(5) == GammaVector{120, 290, 45});
  int singles = 0;
  enumerate_f(1, [&](const std::vector<int>& w) {
    CHECK(w == std::vector<int>{1});
    ++singles;
  });
  CHECK(singles == 1);
}

TEST_CASE("membership rule for the restricted set") {
  CHECK(in_f_set({1, 1, 1}));
  CHECK(in_f_set({1, 3, 1}));
  CHECK(!in_f_set({2, 1, 1}));     // first letter must be 1
  CHECK(!in_f_set({1, 3, 4}));     // consecutive excedances
  CHECK(in_f_set({1, 2, 3}));      // letters equal to their positions are fine
}

TEST_CASE("excedance-set counts") {
  CHECK(excedance_set_count(3, {}) == BigInt(6));
  CHECK(excedance_set_count(3, {2}) == BigInt(3));
  CHECK(excedance_set_count(5, {2, 4}) == BigInt(45));
  CHECK_THROWS_AS(excedance_set_count(3, {3}), invalid_input);
}

TEST_CASE("excedance-set counts agree with brute force") {
  for (int n = 2; n <= 5; ++n) {
    std::map<std::vector<int>, long long> by_set;
    enumerate_words(GroupType::B, n, [&](const std::vector<int>& w) {
      std::vector<int> excset;
      for (int i = 0; i < n; ++i)
        if (w[i] > i + 1) excset.push_back(i + 1);
      ++by_set[excset];
    });
    // Every subset of 1..n-1, including those hit zero times.
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::vector<int> positions;
      for (int b = 1; b <= n - 1; ++b)
        if (mask & (1 << (b - 1))) positions.push_back(b);
      long long brute = by_set.count(positions) ? by_set[positions] : 0;
      CHECK(excedance_set_count(n, positions) == BigInt(brute));
    }
  }
}

TEST_CASE("set counts sum to the chain polynomial") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<BigInt> hist(n, BigInt(0));
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::vector<int> positions;
      for (int b = 1; b <= n - 1; ++b)
        if (mask & (1 << (b - 1))) positions.push_back(b);
      hist[positions.size()] += excedance_set_count(n, positions);
    }
    CHECK(QPolynomial(hist) == closed_form_b(n));
  }
}

TEST_CASE("word text format") {
  CHECK(to_string_word({3, 3, 4, 3, 6, 2}) == "3 3 4 3 6 2");
  CHECK(parse_word("1 3 4 6 1") == std::vector<int>{1, 3, 4, 6, 1});
}
