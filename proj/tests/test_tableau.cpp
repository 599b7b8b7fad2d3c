#include <numeric>
#include <set>

#include "doctest.h"
#include "dcactus/heap.hpp"
#include "dcactus/tableau.hpp"

using namespace dcactus;

namespace {

RowTableau row(int m, std::vector<int> values) {
  std::vector<Letter> letters;
  for (int v : values) letters.push_back(Letter{v});
  return RowTableau(m, letters);
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

long long weyl_dimension(int m, int n) {
  std::vector<long long> lam(m, 0), rho(m);
  lam[0] = n;
  for (int i = 0; i < m; ++i) rho[i] = m - 1 - i;
  long long num = 1, den = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int sign : {-1, 1}) {
        num *= (lam[i] + rho[i]) + sign * (lam[j] + rho[j]);
        den *= rho[i] + sign * rho[j];
        long long g = std::gcd(num, den);
        num /= g;
        den /= g;
      }
  return num / den;
}

}  // namespace

TEST_CASE("standard crystal edges") {
  CHECK(std_f(4, 3, Letter{3}) == Letter{4});
  CHECK(std_f(4, 4, Letter{3}) == Letter{-4});
  CHECK_FALSE(std_f(4, 1, Letter{3}).has_value());
  CHECK(std_f(4, 3, Letter{-4}) == Letter{-3});
  CHECK(std_f(4, 4, Letter{4}) == Letter{-3});
  CHECK(std_f(5, 2, Letter{-3}) == Letter{-2});
  CHECK(std_e(4, 1, Letter{2}) == Letter{1});
  CHECK_FALSE(std_e(4, 1, Letter{1}).has_value());
  for (int m = 3; m <= 6; ++m) {
    int edges = 0;
    for (int i = 1; i <= m; ++i)
      for (int v = -m; v <= m; ++v) {
        if (v == 0) continue;
        if (auto t = std_f(m, i, Letter{v})) {
          ++edges;
          CHECK(std_e(m, i, *t) == Letter{v});
          CHECK(letter_weight(m, *t) == letter_weight(m, Letter{v}) - simple_root(DynkinDiagram::type_d(m), i));
        }
      }
    CHECK(edges == 2 * m);
  }
}

TEST_CASE("letter order") {
  CHECK(letter_less(4, Letter{3}, Letter{4}));
  CHECK(letter_less(4, Letter{3}, Letter{-4}));
  CHECK(letter_less(4, Letter{4}, Letter{-3}));
  CHECK_FALSE(letters_comparable(4, Letter{4}, Letter{-4}));
  CHECK(letters_comparable(4, Letter{3}, Letter{-3}));
  CHECK(letter_level(4, Letter{-4}) == 4);
  CHECK(letter_level(4, Letter{-1}) == 7);
  CHECK_FALSE(is_valid_letter(4, Letter{5}));
  CHECK_FALSE(is_valid_letter(4, Letter{0}));
  int incomparable = 0;
  for (int x = -5; x <= 5; ++x)
    for (int y = -5; y <= 5; ++y) {
      if (x == 0 || y == 0 || x == y) continue;
      bool less = letter_less(5, Letter{x}, Letter{y});
      bool greater = letter_less(5, Letter{y}, Letter{x});
      if (letters_comparable(5, Letter{x}, Letter{y})) {
        CHECK(less != greater);
      } else {
        ++incomparable;
        CHECK_FALSE(less);
      }
    }
  CHECK(incomparable == 2);
}

TEST_CASE("row crystal operators") {
  CHECK(row_f(row(4, {1, 1}), 1) == row(4, {1, 2}));
  CHECK(row_f(row(4, {1, 2}), 1) == row(4, {2, 2}));
  CHECK(row_f(row(4, {3, 3}), 4) == row(4, {3, -4}));
  CHECK_FALSE(row_f(row(4, {2, 2}), 1).has_value());
  CHECK(row_e(row(4, {1, 2}), 1) == row(4, {1, 1}));
  CHECK(row_weight(row(4, {1, 2})) == Weight({1, 1, 0, 0}));
  CHECK(row_weight(row(4, {3, -3})) == Weight::zero(4));
  CHECK(row_weight(row(4, {1, 1, 1})) == Weight({3, 0, 0, 0}));
}

TEST_CASE("row validity and parsing") {
  CHECK_THROWS_AS(row(4, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(row(4, {4, -4}), std::invalid_argument);
  CHECK_THROWS_AS(row(4, {5}), std::invalid_argument);
  CHECK(RowTableau::parse(4, "1,2,-3") == row(4, {1, 2, -3}));
  CHECK(RowTableau::parse(4, "").height() == 0);
  CHECK(RowTableau::parse(4, " 1, 2 ") == row(4, {1, 2}));
  CHECK_THROWS_AS(RowTableau::parse(4, "1,,2"), ParseError);
  CHECK_THROWS_AS(RowTableau::parse(4, "1,x"), ParseError);
  CHECK_THROWS_AS(RowTableau::parse(4, "2,1"), std::invalid_argument);
  try {
    RowTableau::parse(4, "1,2,9");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK(row(4, {1, 2, -3}).to_string() == "1,2,-3");
  CHECK(RowTableau::from_counts(4, {{-1, 1}, {2, 2}}) == row(4, {2, 2, -1}));
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_rows(4, 1).size() == 8);
  CHECK(enumerate_rows(4, 2).size() == 35);
  CHECK(enumerate_rows(4, 0).size() == 1);
  CHECK(enumerate_rows(4, 2).front() == row(4, {1, 1}));
  for (int m = 3; m <= 6; ++m)
    for (int n = 0; n <= 4; ++n) {
      auto rows = enumerate_rows(m, n);
      long long multisets = binomial(2 * m + n - 1, n) - binomial(2 * m + n - 3, n - 2);
      CHECK(static_cast<long long>(rows.size()) == multisets);
      CHECK(static_cast<long long>(rows.size()) == weyl_dimension(m, n));
      CHECK(std::set<RowTableau>(rows.begin(), rows.end()).size() == rows.size());
    }
}

TEST_CASE("toggle examples") {
  CHECK(toggle_tableau(row(4, {1, 1}), 1) == row(4, {2, 2}));
  CHECK(toggle_tableau(row(4, {3, -3}), 3) == row(4, {3, -3}));
  CHECK(toggle_tableau(row(4, {3, 3}), 4) == row(4, {-4, -4}));
  CHECK(toggle_tableau(row(4, {4, 4}), 3) == row(4, {3, 3}));
  CHECK(toggle_tableau(row(5, {1, 2, -2}), 1) == row(5, {1, 2, -1}));
}

TEST_CASE("toggle involution and weight law") {
  for (int m = 3; m <= 6; ++m) {
    DynkinDiagram d = DynkinDiagram::type_d(m);
    for (int n = 0; n <= 4; ++n)
      for (const RowTableau& r : enumerate_rows(m, n))
        for (int i = 1; i <= m; ++i) {
          RowTableau t = toggle_tableau(r, i);
          CHECK(toggle_tableau(t, i) == r);
          CHECK(row_weight(t) == reflect(d, i, row_weight(r)));
        }
  }
}

TEST_CASE("row crystal is connected with highest element 1...1") {
  for (int m = 3; m <= 5; ++m)
    for (int n = 1; n <= 3; ++n) {
      RowModel model = make_row_model(m, n);
      auto comps = components(model.graph);
      REQUIRE(comps.size() == 1);
      Elem top = highest_of(model.graph, comps[0]);
      CHECK(model.rows[top] == RowTableau(m, std::vector<Letter>(n, Letter{1})));
    }
}

TEST_CASE("tableau toggles agree with RPP toggles through the isomorphism") {
  for (int m : {4, 5})
    for (int n = 1; n <= 3; ++n) {
      RowModel rows = make_row_model(m, n);
      RppModel rpps = make_rpp_model(m, n);
      Permutation iso = canonical_iso(rows.graph, rpps.graph);
      for (int i = 1; i <= m; ++i)
        for (std::size_t b = 0; b < iso.size(); ++b) {
          Elem image = rows.rows.require(toggle_tableau(rows.rows[static_cast<Elem>(b)], i));
          CHECK(iso[static_cast<std::size_t>(image)] == rpps.toggles[i][static_cast<std::size_t>(iso[b])]);
        }
    }
}

TEST_CASE("window counts round trip") {
  RowTableau r = row(4, {1, 2, -2});
  CHECK(window_counts(r, 1) == LetterCounts{1, 1, 0, 0, 1, 0});
  for (int m = 4; m <= 5; ++m)
    for (const RowTableau& x : enumerate_rows(m, 3))
      for (int k = 1; k <= m - 2; ++k) CHECK(counts_to_row(window_counts(x, k), k, x) == x);
  LetterCounts c{0, 2, 0, 0, 0, 1};
  CHECK(counts_to_row(c, 1, r) == row(4, {2, 2, -1}));
  CHECK_THROWS(counts_to_row(LetterCounts{-1, 0, 0, 0, 0, 0}, 1, r));
}
