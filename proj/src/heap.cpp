#include "dcactus/heap.hpp"

#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace dcactus {

namespace {

constexpr std::uint64_t bit(std::size_t x) { return std::uint64_t{1} << x; }

}  // namespace

Heap::Heap(DynkinDiagram diagram, WeylWord word)
    : diagram_(std::move(diagram)), word_(std::move(word)) {
  if (word_.size() > 64) throw std::invalid_argument("heap words are limited to 64 letters");
  for (int i : word_) diagram_.check_node(i);
  std::size_t l = word_.size();
  below_.assign(l, 0);
  above_.assign(l, 0);
  for (std::size_t b = l; b-- > 0;) {
    for (std::size_t a = b + 1; a < l; ++a)
      if (diagram_.adjacent(word_[a], word_[b])) below_[b] |= bit(a) | below_[a];
  }
  for (std::size_t y = 0; y < l; ++y)
    for (std::uint64_t s = below_[y]; s; s &= s - 1) above_[std::countr_zero(s)] |= bit(y);
}

std::uint64_t Heap::full_mask() const {
  return size() == 64 ? ~std::uint64_t{0} : bit(size()) - 1;
}

std::vector<std::pair<std::size_t, std::size_t>> Heap::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = 0; y < size(); ++y) {
      if (!precedes(x, y)) continue;
      // Nothing strictly between x and y.
      if ((above_[x] & below_[y]) == 0) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<std::size_t> Heap::fiber(int i) const {
  std::vector<std::size_t> out;
  for (std::size_t x = size(); x-- > 0;)
    if (word_[x] == i) out.push_back(x);
  return out;
}

bool Heap::fibers_totally_ordered() const {
  for (int i = 1; i <= diagram_.rank(); ++i) {
    auto f = fiber(i);
    for (std::size_t p = 0; p < f.size(); ++p)
      for (std::size_t q = p + 1; q < f.size(); ++q)
        if (!comparable(f[p], f[q])) return false;
  }
  return true;
}

bool Heap::is_chain() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (!comparable(x, y)) return false;
  return true;
}

Heap heap_from_word(const DynkinDiagram& diagram, const WeylWord& word) {
  return Heap(diagram, word);
}

WeylWord minuscule_word(int m) {
  if (m < 3) throw std::invalid_argument("minuscule heap needs m >= 3");
  WeylWord w;
  for (int i = 1; i <= m - 2; ++i) w.push_back(i);
  w.push_back(m - 1);
  w.push_back(m);
  for (int i = m - 2; i >= 1; --i) w.push_back(i);
  return w;
}

Heap minuscule_heap(int m) { return Heap(DynkinDiagram::type_d(m), minuscule_word(m)); }

// ---------------------------------------------------------------------------

std::size_t OrderIdeal::size() const { return static_cast<std::size_t>(std::popcount(members)); }

bool is_order_ideal(const Heap& heap, std::uint64_t subset) {
  if (subset & ~heap.full_mask()) return false;
  for (std::uint64_t s = subset; s; s &= s - 1) {
    std::size_t x = static_cast<std::size_t>(std::countr_zero(s));
    if ((heap.below(x) & ~subset) != 0) return false;
  }
  return true;
}

std::vector<OrderIdeal> order_ideals(const Heap& heap) {
  std::vector<OrderIdeal> out;
  for (const Rpp& r : enumerate_rpps(heap, 1)) {
    OrderIdeal s;
    for (std::size_t x = 0; x < r.labels.size(); ++x)
      if (r.labels[x]) s.members |= bit(x);
    out.push_back(s);
  }
  return out;
}

std::optional<OrderIdeal> ideal_f(const Heap& heap, int i, OrderIdeal s) {
  for (std::size_t x : heap.fiber(i)) {
    if (s.contains(x)) continue;
    if ((heap.below(x) & ~s.members) != 0) return std::nullopt;
    return OrderIdeal{s.members | bit(x)};
  }
  return std::nullopt;
}

std::optional<OrderIdeal> ideal_e(const Heap& heap, int i, OrderIdeal s) {
  auto f = heap.fiber(i);
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (!s.contains(*it)) continue;
    if ((heap.above(*it) & s.members) != 0) return std::nullopt;
    return OrderIdeal{s.members & ~bit(*it)};
  }
  return std::nullopt;
}

Weight ideal_weight(const Heap& heap, OrderIdeal s, const Weight& lambda) {
  Weight w = lambda;
  for (std::size_t x = 0; x < heap.size(); ++x)
    if (s.contains(x)) w -= simple_root(heap.diagram(), heap.runner(x));
  return w;
}

CrystalGraph ideal_crystal(const Heap& heap, const Weight& lambda) {
  Enumerated<OrderIdeal> ideals(order_ideals(heap));
  return build_crystal(
      heap.diagram(), ideals, [&](int i, OrderIdeal s) { return ideal_f(heap, i, s); },
      [&](int i, OrderIdeal s) { return ideal_e(heap, i, s); },
      [&](OrderIdeal s) { return ideal_weight(heap, s, lambda); },
      [&](OrderIdeal s) {
        std::string out;
        for (std::size_t x = 0; x < heap.size(); ++x) {
          if (x) out += ',';
          out += s.contains(x) ? '1' : '0';
        }
        return out;
      });
}

// ---------------------------------------------------------------------------

bool is_rpp(const Heap& heap, const Rpp& rpp) {
  if (rpp.height < 0 || rpp.labels.size() != heap.size()) return false;
  for (std::size_t y = 0; y < heap.size(); ++y) {
    if (rpp.labels[y] < 0 || rpp.labels[y] > rpp.height) return false;
    for (std::uint64_t s = heap.below(y); s; s &= s - 1)
      if (rpp.labels[static_cast<std::size_t>(std::countr_zero(s))] < rpp.labels[y]) return false;
  }
  return true;
}

IdealChain rpp_to_chain(const Rpp& rpp) {
  IdealChain chain(static_cast<std::size_t>(rpp.height));
  for (int i = 1; i <= rpp.height; ++i) {
    for (std::size_t x = 0; x < rpp.labels.size(); ++x)
      if (rpp.labels[x] >= rpp.height - i + 1) chain[i - 1].members |= bit(x);
  }
  return chain;
}

Rpp chain_to_rpp(const Heap& heap, const IdealChain& chain) {
  Rpp out{std::vector<int>(heap.size(), 0), static_cast<int>(chain.size())};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!is_order_ideal(heap, chain[i].members))
      throw std::invalid_argument("chain link " + std::to_string(i + 1) + " is not an ideal");
    if (i > 0 && (chain[i - 1].members & ~chain[i].members) != 0)
      throw std::invalid_argument("chain is not nested at link " + std::to_string(i + 1));
    for (std::size_t x = 0; x < heap.size(); ++x)
      if (chain[i].contains(x)) ++out.labels[x];
  }
  return out;
}

OrderIdeal toggle_element(const Heap& heap, std::size_t x, OrderIdeal s) {
  if (!s.contains(x)) {
    if ((heap.below(x) & ~s.members) == 0) return OrderIdeal{s.members | bit(x)};
  } else if ((heap.above(x) & s.members) == 0) {
    return OrderIdeal{s.members & ~bit(x)};
  }
  return s;
}

OrderIdeal toggle_runner(const Heap& heap, int i, OrderIdeal s) {
  for (std::size_t x : heap.fiber(i)) s = toggle_element(heap, x, s);
  return s;
}

Rpp toggle_rpp(const Heap& heap, int i, const Rpp& rpp) {
  Rpp out{std::vector<int>(heap.size(), 0), rpp.height};
  for (OrderIdeal link : rpp_to_chain(rpp)) {
    OrderIdeal t = toggle_runner(heap, i, link);
    for (std::size_t x = 0; x < heap.size(); ++x)
      if (t.contains(x)) ++out.labels[x];
  }
  if (!is_rpp(heap, out))
    throw std::logic_error("toggled indicator sum is not a reverse plane partition");
  return out;
}

std::vector<Rpp> enumerate_rpps(const Heap& heap, int height) {
  if (height < 0) throw std::invalid_argument("height must be nonnegative");
  std::vector<Rpp> out;
  Rpp current{std::vector<int>(heap.size(), 0), height};
  // Bottom-up: every element below x sits at a later word position.
  auto recurse = [&](auto&& self, std::size_t remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    std::size_t x = remaining - 1;
    int cap = height;
    for (std::uint64_t s = heap.below(x); s; s &= s - 1)
      cap = std::min(cap, current.labels[static_cast<std::size_t>(std::countr_zero(s))]);
    for (int v = 0; v <= cap; ++v) {
      current.labels[x] = v;
      self(self, remaining - 1);
    }
    current.labels[x] = 0;
  };
  recurse(recurse, heap.size());
  return out;
}

Weight rpp_weight(const Heap& heap, const Rpp& rpp, const Weight& lambda) {
  Weight w = rpp.height * lambda;
  for (std::size_t x = 0; x < heap.size(); ++x)
    w -= rpp.labels[x] * simple_root(heap.diagram(), heap.runner(x));
  return w;
}

namespace {

StringStats ideal_stats(const Heap& heap, int i, OrderIdeal s) {
  StringStats st;
  for (auto t = ideal_f(heap, i, s); t; t = ideal_f(heap, i, *t)) ++st.phi;
  for (auto t = ideal_e(heap, i, s); t; t = ideal_e(heap, i, *t)) ++st.epsilon;
  return st;
}

std::optional<Rpp> rpp_step(const Heap& heap, int i, const Rpp& rpp, bool lower) {
  IdealChain chain = rpp_to_chain(rpp);
  std::vector<StringStats> stats;
  for (OrderIdeal link : chain) stats.push_back(ideal_stats(heap, i, link));
  auto j = lower ? tensor_f(stats) : tensor_e(stats);
  if (!j) return std::nullopt;
  auto moved = lower ? ideal_f(heap, i, chain[*j]) : ideal_e(heap, i, chain[*j]);
  if (!moved) throw std::logic_error("signature rule selected a link with no edge");
  chain[*j] = *moved;
  try {
    return chain_to_rpp(heap, chain);
  } catch (const std::invalid_argument& err) {
    throw std::logic_error(std::string("crystal operator left RPP model: ") + err.what());
  }
}

}  // namespace

std::optional<Rpp> rpp_f(const Heap& heap, int i, const Rpp& rpp) {
  return rpp_step(heap, i, rpp, true);
}

std::optional<Rpp> rpp_e(const Heap& heap, int i, const Rpp& rpp) {
  return rpp_step(heap, i, rpp, false);
}

std::string rpp_to_string(const Rpp& rpp) {
  std::string out;
  for (std::size_t x = 0; x < rpp.labels.size(); ++x) {
    if (x) out += ',';
    out += std::to_string(rpp.labels[x]);
  }
  return out;
}

Rpp parse_rpp(const Heap& heap, int height, std::string_view text) {
  Rpp out{{}, height};
  std::size_t pos = 0;
  while (pos <= text.size() && heap.size() > 0) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') {
      token.remove_prefix(1);
      ++pos;
    }
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("expected an integer label at position " + std::to_string(pos));
    out.labels.push_back(value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (out.labels.size() != heap.size())
    throw std::invalid_argument("expected " + std::to_string(heap.size()) + " labels, got " +
                                std::to_string(out.labels.size()));
  if (!is_rpp(heap, out))
    throw std::invalid_argument("labels are not an order reversing map to {0.." +
                                std::to_string(height) + "}");
  return out;
}

nlohmann::json rpp_to_json(const Heap& heap, const Rpp& rpp) {
  return {{"word", heap.word()}, {"height", rpp.height}, {"labels", rpp.labels}};
}

Rpp rpp_from_json(const DynkinDiagram& diagram, const nlohmann::json& j) {
  Heap heap(diagram, j.at("word").get<WeylWord>());
  Rpp out{j.at("labels").get<std::vector<int>>(), j.at("height").get<int>()};
  if (!is_rpp(heap, out)) throw std::invalid_argument("JSON labels are not a valid RPP");
  return out;
}

std::string heap_to_dot(const Heap& heap) {
  std::ostringstream out;
  out << "digraph heap {\n  rankdir=BT;\n";
  for (std::size_t x = 0; x < heap.size(); ++x)
    out << "  p" << x << " [label=\"" << x << ":" << heap.runner(x) << "\"];\n";
  for (auto [lo, hi] : heap.covers()) out << "  p" << lo << " -> p" << hi << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------

RppModel make_rpp_model(int m, int n) {
  Heap heap = minuscule_heap(m);
  Weight lambda = Weight::unit(static_cast<std::size_t>(m), 1);
  Enumerated<Rpp> rpps(enumerate_rpps(heap, n));
  CrystalGraph graph = build_crystal(
      heap.diagram(), rpps, [&](int i, const Rpp& r) { return rpp_f(heap, i, r); },
      [&](int i, const Rpp& r) { return rpp_e(heap, i, r); },
      [&](const Rpp& r) { return rpp_weight(heap, r, lambda); },
      [](const Rpp& r) { return rpp_to_string(r); });
  std::vector<Permutation> toggles(static_cast<std::size_t>(m) + 1);
  for (int i = 1; i <= m; ++i)
    toggles[i] = rpps.map_total([&](const Rpp& r) { return toggle_rpp(heap, i, r); });
  return RppModel{heap, lambda, std::move(rpps), std::move(graph), std::move(toggles)};
}

}  // namespace dcactus
