#include "dcactus/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace dcactus {

bool is_valid_letter(int m, Letter x) {
  return x.value != 0 && x.value >= -m && x.value <= m;
}

namespace {

void require_letter(int m, Letter x) {
  if (!is_valid_letter(m, x))
    throw std::invalid_argument("letter " + std::to_string(x.value) + " outside alphabet of D" +
                                std::to_string(m));
}

}  // namespace

int letter_level(int m, Letter x) {
  require_letter(m, x);
  int v = x.value;
  if (v > 0) return v;
  if (v == -m) return m;
  return 2 * m + v;
}

bool letter_less(int m, Letter x, Letter y) { return letter_level(m, x) < letter_level(m, y); }

bool letters_comparable(int m, Letter x, Letter y) {
  return x == y || letter_level(m, x) != letter_level(m, y);
}

int letter_sort_key(int m, Letter x) { return 2 * letter_level(m, x) + (x.value < 0 ? 1 : 0); }

Weight letter_weight(int m, Letter x) {
  require_letter(m, x);
  Weight w = Weight::zero(static_cast<std::size_t>(m));
  w[static_cast<std::size_t>(std::abs(x.value) - 1)] = x.value > 0 ? 1 : -1;
  return w;
}

std::optional<Letter> std_f(int m, int i, Letter x) {
  require_letter(m, x);
  if (i < 1 || i > m) throw std::out_of_range("node " + std::to_string(i));
  int v = x.value;
  if (i <= m - 2) {
    if (v == i) return Letter{i + 1};
    if (v == -(i + 1)) return Letter{-i};
  } else if (i == m - 1) {
    if (v == m - 1) return Letter{m};
    if (v == -m) return Letter{-(m - 1)};
  } else {
    if (v == m - 1) return Letter{-m};
    if (v == m) return Letter{-(m - 1)};
  }
  return std::nullopt;
}

std::optional<Letter> std_e(int m, int i, Letter x) {
  require_letter(m, x);
  if (i < 1 || i > m) throw std::out_of_range("node " + std::to_string(i));
  int v = x.value;
  if (i <= m - 2) {
    if (v == i + 1) return Letter{i};
    if (v == -i) return Letter{-(i + 1)};
  } else if (i == m - 1) {
    if (v == m) return Letter{m - 1};
    if (v == -(m - 1)) return Letter{-m};
  } else {
    if (v == -m) return Letter{m - 1};
    if (v == -(m - 1)) return Letter{m};
  }
  return std::nullopt;
}

StringStats letter_stats(int m, int i, Letter x) {
  // Every string of B(varpi_1) has length at most one.
  return {std_e(m, i, x) ? 1 : 0, std_f(m, i, x) ? 1 : 0};
}

// ---------------------------------------------------------------------------

RowTableau::RowTableau(int m, std::vector<Letter> entries) : rank_(m), entries_(std::move(entries)) {
  if (m < 3) throw std::invalid_argument("row tableau rank must be at least 3");
  bool has_m = false, has_m_bar = false;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    require_letter(m, entries_[k]);
    has_m |= entries_[k].value == m;
    has_m_bar |= entries_[k].value == -m;
    if (k > 0 && !(entries_[k - 1] == entries_[k] || letter_less(m, entries_[k - 1], entries_[k])))
      throw std::invalid_argument("row is not weakly increasing at entry " + std::to_string(k));
  }
  if (has_m && has_m_bar)
    throw std::invalid_argument("row contains both " + std::to_string(m) + " and -" +
                                std::to_string(m));
}

RowTableau RowTableau::from_counts(int m, const std::map<int, int>& counts) {
  std::vector<Letter> entries;
  for (auto [value, count] : counts) {
    if (count < 0) throw std::invalid_argument("negative letter count");
    entries.insert(entries.end(), static_cast<std::size_t>(count), Letter{value});
  }
  std::sort(entries.begin(), entries.end(), [m](Letter x, Letter y) {
    return letter_sort_key(m, x) < letter_sort_key(m, y);
  });
  return RowTableau(m, std::move(entries));
}

RowTableau RowTableau::parse(int m, std::string_view text) {
  std::vector<Letter> entries;
  std::size_t pos = 0;
  bool has_m = false, has_m_bar = false;
  if (text.find_first_not_of(' ') == std::string_view::npos) return RowTableau(m, {});
  for (;;) {
    std::size_t start = pos;
    while (start < text.size() && text[start] == ' ') ++start;
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("expected a signed integer letter", start);
    Letter x{value};
    if (!is_valid_letter(m, x))
      throw ParseError("letter " + std::to_string(value) + " outside alphabet of D" +
                           std::to_string(m),
                       start);
    if (!entries.empty() && !(entries.back() == x || letter_less(m, entries.back(), x)))
      throw ParseError("row is not weakly increasing", start);
    has_m |= value == m;
    has_m_bar |= value == -m;
    if (has_m && has_m_bar)
      throw ParseError("row contains both " + std::to_string(m) + " and -" + std::to_string(m),
                       start);
    entries.push_back(x);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return RowTableau(m, std::move(entries));
}

int RowTableau::count(int value) const {
  return static_cast<int>(
      std::count(entries_.begin(), entries_.end(), Letter{value}));
}

std::map<int, int> RowTableau::counts() const {
  std::map<int, int> out;
  for (Letter x : entries_) ++out[x.value];
  return out;
}

std::string RowTableau::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(entries_[k].value);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<RowTableau> row_step(const RowTableau& row, int i, bool lower) {
  int m = row.rank();
  std::vector<StringStats> stats;
  stats.reserve(row.height());
  for (Letter x : row.entries()) stats.push_back(letter_stats(m, i, x));
  auto j = lower ? tensor_f(stats) : tensor_e(stats);
  if (!j) return std::nullopt;
  std::vector<Letter> entries = row.entries();
  auto moved = lower ? std_f(m, i, entries[*j]) : std_e(m, i, entries[*j]);
  if (!moved) throw std::logic_error("signature rule selected a box with no edge");
  entries[*j] = *moved;
  try {
    return RowTableau(m, std::move(entries));
  } catch (const std::invalid_argument& err) {
    throw std::logic_error(std::string("crystal operator left the row model: ") + err.what());
  }
}

}  // namespace

std::optional<RowTableau> row_f(const RowTableau& row, int i) { return row_step(row, i, true); }
std::optional<RowTableau> row_e(const RowTableau& row, int i) { return row_step(row, i, false); }

Weight row_weight(const RowTableau& row) {
  Weight w = Weight::zero(static_cast<std::size_t>(row.rank()));
  for (Letter x : row.entries()) w += letter_weight(row.rank(), x);
  return w;
}

std::vector<RowTableau> enumerate_rows(int m, int n) {
  if (m < 3) throw std::invalid_argument("rank must be at least 3");
  if (n < 0) throw std::invalid_argument("height must be nonnegative");
  // Alphabet in storage order.
  std::vector<Letter> alphabet;
  for (int v = 1; v <= m; ++v) alphabet.push_back(Letter{v});
  for (int v = m; v >= 1; --v) alphabet.push_back(Letter{-v});

  std::vector<RowTableau> out;
  std::vector<Letter> current;
  auto recurse = [&](auto&& self, std::size_t from, bool has_m, bool has_m_bar) -> void {
    if (current.size() == static_cast<std::size_t>(n)) {
      out.emplace_back(m, current);
      return;
    }
    for (std::size_t k = from; k < alphabet.size(); ++k) {
      Letter x = alphabet[k];
      bool nm = has_m || x.value == m, nmb = has_m_bar || x.value == -m;
      if (nm && nmb) continue;
      current.push_back(x);
      self(self, k, nm, nmb);
      current.pop_back();
    }
  };
  recurse(recurse, 0, false, false);
  return out;
}

RowTableau toggle_tableau(const RowTableau& row, int i) {
  int m = row.rank();
  if (i < 1 || i > m) throw std::out_of_range("node " + std::to_string(i));
  std::map<int, int> c = row.counts();
  auto swap_counts = [&c](int x, int y) { std::swap(c[x], c[y]); };
  if (i <= m - 2) {
    swap_counts(i, i + 1);
    swap_counts(-i, -(i + 1));
  } else {
    if (i == m - 1) {
      swap_counts(m - 1, m);
      swap_counts(-(m - 1), -m);
    } else {
      swap_counts(m - 1, -m);
      swap_counts(m, -(m - 1));
    }
    while (c[m] > 0 && c[-m] > 0) {
      --c[m];
      --c[-m];
      ++c[m - 1];
      ++c[-(m - 1)];
    }
  }
  return RowTableau::from_counts(m, c);
}

LetterCounts window_counts(const RowTableau& row, int k) {
  if (k < 1 || k > row.rank() - 2) throw std::out_of_range("window index " + std::to_string(k));
  return {row.count(k),          row.count(k + 1),      row.count(k + 2),
          row.count(-(k + 2)),   row.count(-(k + 1)),   row.count(-k)};
}

RowTableau counts_to_row(const LetterCounts& counts, int k, const RowTableau& context) {
  int m = context.rank();
  if (k < 1 || k > m - 2) throw std::out_of_range("window index " + std::to_string(k));
  std::map<int, int> c = context.counts();
  c[k] = counts.a;
  c[k + 1] = counts.b;
  c[k + 2] = counts.c;
  c[-(k + 2)] = counts.c_bar;
  c[-(k + 1)] = counts.b_bar;
  c[-k] = counts.a_bar;
  return RowTableau::from_counts(m, c);
}

RowModel make_row_model(int m, int n) {
  DynkinDiagram diagram = DynkinDiagram::type_d(m);
  Enumerated<RowTableau> rows(enumerate_rows(m, n));
  CrystalGraph graph = build_crystal(
      diagram, rows, [](int i, const RowTableau& r) { return row_f(r, i); },
      [](int i, const RowTableau& r) { return row_e(r, i); },
      [](const RowTableau& r) { return row_weight(r); },
      [](const RowTableau& r) { return r.to_string(); });
  std::vector<Permutation> toggles(static_cast<std::size_t>(m) + 1);
  for (int i = 1; i <= m; ++i)
    toggles[i] = rows.map_total([i](const RowTableau& r) { return toggle_tableau(r, i); });
  return RowModel{diagram, std::move(rows), std::move(graph), std::move(toggles)};
}

}  // namespace dcactus
