#pragma once

// Heaps of Weyl words, their order ideals, reverse plane partitions and
// toggles.
//
// Heap elements are the word positions 0..l-1. Position a lies below b
// (a < b in the heap) when a comes later in the word and the two nodes
// are adjacent, closed transitively; so the last letter of the word is at
// the bottom. At most 64 positions.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dcactus/crystal.hpp"
#include "dcactus/weyl.hpp"

namespace dcactus {

class Heap {
 public:
  Heap(DynkinDiagram diagram, WeylWord word);

  const DynkinDiagram& diagram() const { return diagram_; }
  const WeylWord& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  int runner(std::size_t x) const { return word_.at(x); }
  std::uint64_t full_mask() const;

  // Strictly below / above x.
  std::uint64_t below(std::size_t x) const { return below_.at(x); }
  std::uint64_t above(std::size_t x) const { return above_.at(x); }
  bool precedes(std::size_t x, std::size_t y) const { return (below_.at(y) >> x) & 1u; }
  bool comparable(std::size_t x, std::size_t y) const {
    return x == y || precedes(x, y) || precedes(y, x);
  }
  // Covering pairs (lower, upper), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  // pi^{-1}(i), bottom first.
  std::vector<std::size_t> fiber(int i) const;
  bool fibers_totally_ordered() const;
  bool is_chain() const;

 private:
  DynkinDiagram diagram_;
  WeylWord word_;
  std::vector<std::uint64_t> below_, above_;
};

Heap heap_from_word(const DynkinDiagram& diagram, const WeylWord& word);
// s_1 ... s_{m-2} s_{m-1} s_m s_{m-2} ... s_1, the minimal coset
// representative for varpi_1 in D_m.
WeylWord minuscule_word(int m);
Heap minuscule_heap(int m);

struct OrderIdeal {
  std::uint64_t members = 0;
  bool contains(std::size_t x) const { return (members >> x) & 1u; }
  std::size_t size() const;
  friend bool operator==(OrderIdeal, OrderIdeal) = default;
  friend auto operator<=>(OrderIdeal, OrderIdeal) = default;
};

bool is_order_ideal(const Heap& heap, std::uint64_t subset);
// Every ideal, ordered by the lexicographic rule used for RPPs (labels 0/1).
std::vector<OrderIdeal> order_ideals(const Heap& heap);

// Crystal operators of the ideal model: f_i adds the lowest bead of runner
// i missing from S, e_i removes the highest bead of runner i in S, when
// the result is an ideal.
std::optional<OrderIdeal> ideal_f(const Heap& heap, int i, OrderIdeal s);
std::optional<OrderIdeal> ideal_e(const Heap& heap, int i, OrderIdeal s);
// lambda minus the roots of the runners of S.
Weight ideal_weight(const Heap& heap, OrderIdeal s, const Weight& lambda);
CrystalGraph ideal_crystal(const Heap& heap, const Weight& lambda);

// Order reversing labelling by {0..height}, indexed by word position.
struct Rpp {
  std::vector<int> labels;
  int height = 0;
  friend bool operator==(const Rpp&, const Rpp&) = default;
  friend auto operator<=>(const Rpp&, const Rpp&) = default;
};

bool is_rpp(const Heap& heap, const Rpp& rpp);

// (phi_1, ..., phi_n) with phi_i the positions labelled n-i+1 or more.
using IdealChain = std::vector<OrderIdeal>;
IdealChain rpp_to_chain(const Rpp& rpp);
// Throws std::invalid_argument unless the chain is nested and every link
// is an ideal of the heap.
Rpp chain_to_rpp(const Heap& heap, const IdealChain& chain);

OrderIdeal toggle_element(const Heap& heap, std::size_t x, OrderIdeal s);
// Product of the toggles of every bead on runner i.
OrderIdeal toggle_runner(const Heap& heap, int i, OrderIdeal s);
// Toggles every link of the chain and sums the indicator functions.
Rpp toggle_rpp(const Heap& heap, int i, const Rpp& rpp);

// Lexicographic in the labels read bottom up (last word position first);
// the constant-0 RPP comes first.
std::vector<Rpp> enumerate_rpps(const Heap& heap, int height);
Weight rpp_weight(const Heap& heap, const Rpp& rpp, const Weight& lambda);
// Signature rule over the chain phi_1 (x) ... (x) phi_n.
std::optional<Rpp> rpp_f(const Heap& heap, int i, const Rpp& rpp);
std::optional<Rpp> rpp_e(const Heap& heap, int i, const Rpp& rpp);

// "0,1,1,3,2,3", labels in word order.
std::string rpp_to_string(const Rpp& rpp);
Rpp parse_rpp(const Heap& heap, int height, std::string_view text);
nlohmann::json rpp_to_json(const Heap& heap, const Rpp& rpp);
Rpp rpp_from_json(const DynkinDiagram& diagram, const nlohmann::json& j);

// Covering relations, nodes labelled "position:runner".
std::string heap_to_dot(const Heap& heap);

struct RppModel {
  Heap heap;
  Weight lambda;
  Enumerated<Rpp> rpps;
  CrystalGraph graph;
  std::vector<Permutation> toggles;  // indexed by node; entry 0 empty
};

// RPP(w_0^J, n) over the minuscule heap of D_m with lambda = varpi_1.
RppModel make_rpp_model(int m, int n);

}  // namespace dcactus
