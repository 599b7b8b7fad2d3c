#pragma once

// One-row tableaux over the type D_m alphabet
//   1 < 2 < ... < m-1 < {m, m-bar} < (m-1)-bar < ... < 1-bar
// modelling B(n varpi_1). A letter is a signed integer: +i is the filling
// i, -i is i-bar. m and m-bar are incomparable.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dcactus/crystal.hpp"
#include "dcactus/weyl.hpp"

namespace dcactus {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Letter {
  int value = 1;
  friend bool operator==(Letter, Letter) = default;
  friend auto operator<=>(Letter, Letter) = default;
};

bool is_valid_letter(int m, Letter x);
// Rank in the chain 1..2m-1; m and m-bar share rank m.
int letter_level(int m, Letter x);
// Strict order of the alphabet; false for the incomparable pair.
bool letter_less(int m, Letter x, Letter y);
bool letters_comparable(int m, Letter x, Letter y);
// Total order used for storage: m sorts before m-bar.
int letter_sort_key(int m, Letter x);
Weight letter_weight(int m, Letter x);

// Edges of the standard crystal B(varpi_1).
std::optional<Letter> std_f(int m, int i, Letter x);
std::optional<Letter> std_e(int m, int i, Letter x);
StringStats letter_stats(int m, int i, Letter x);

class RowTableau {
 public:
  // Throws std::invalid_argument if the row is not weakly increasing or
  // contains both m and m-bar.
  RowTableau(int m, std::vector<Letter> entries);
  // Builds the sorted row with the given multiplicity per letter value.
  static RowTableau from_counts(int m, const std::map<int, int>& counts);
  // "1,2,-3"; the empty string is the empty row.
  static RowTableau parse(int m, std::string_view text);

  int rank() const { return rank_; }
  std::size_t height() const { return entries_.size(); }
  const std::vector<Letter>& entries() const { return entries_; }
  int count(int value) const;
  std::map<int, int> counts() const;
  std::string to_string() const;

  friend bool operator==(const RowTableau&, const RowTableau&) = default;
  friend auto operator<=>(const RowTableau&, const RowTableau&) = default;

 private:
  int rank_;
  std::vector<Letter> entries_;
};

// Signature rule on box_1 (x) ... (x) box_n.
std::optional<RowTableau> row_f(const RowTableau& row, int i);
std::optional<RowTableau> row_e(const RowTableau& row, int i);
Weight row_weight(const RowTableau& row);

// All rows of length n, lexicographic in the storage order; the first is
// [1,...,1].
std::vector<RowTableau> enumerate_rows(int m, int n);

// Multiplicity description of t_i on rows: for i <= m-2 swap the counts of
// i, i+1 and of their bars; t_{m-1} swaps m-1 <-> m and their bars, t_m
// swaps m-1 <-> m-bar and m <-> (m-1)-bar; both then turn each {m, m-bar}
// pair into {m-1, (m-1)-bar}.
RowTableau toggle_tableau(const RowTableau& row, int i);

// Counts of k, k+1, k+2, (k+2)-bar, (k+1)-bar, k-bar.
struct LetterCounts {
  int a = 0, b = 0, c = 0, c_bar = 0, b_bar = 0, a_bar = 0;
  friend bool operator==(const LetterCounts&, const LetterCounts&) = default;
};

LetterCounts window_counts(const RowTableau& row, int k);
// Replaces the window letters of `context`; everything else stays.
RowTableau counts_to_row(const LetterCounts& counts, int k, const RowTableau& context);

struct RowModel {
  DynkinDiagram diagram;
  Enumerated<RowTableau> rows;
  CrystalGraph graph;
  std::vector<Permutation> toggles;  // indexed by node; entry 0 empty
};

RowModel make_row_model(int m, int n);

}  // namespace dcactus
