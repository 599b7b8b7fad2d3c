#pragma once

// Model-agnostic finite crystal graphs.
//
// Elements are dense indices assigned at enumeration time. Edge maps are
// stored as total arrays per node with kNoElem marking a zero result.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dcactus/weyl.hpp"

namespace dcactus {

using Elem = std::int32_t;
inline constexpr Elem kNoElem = -1;
using Permutation = std::vector<Elem>;

struct StringStats {
  int epsilon = 0;
  int phi = 0;
  friend bool operator==(const StringStats&, const StringStats&) = default;
};

class CrystalGraph {
 public:
  // f and e are indexed [node][element]; rows for nodes outside
  // index_set must be all kNoElem. Row 0 is unused.
  CrystalGraph(DynkinDiagram diagram, NodeSet index_set, std::vector<Weight> weights,
               std::vector<std::vector<Elem>> f, std::vector<std::vector<Elem>> e,
               std::vector<std::string> labels);

  const DynkinDiagram& diagram() const { return diagram_; }
  NodeSet index_set() const { return index_set_; }
  std::size_t size() const { return weights_.size(); }
  const Weight& weight(Elem b) const { return weights_.at(static_cast<std::size_t>(b)); }
  const std::string& label(Elem b) const { return labels_.at(static_cast<std::size_t>(b)); }
  std::optional<Elem> find_label(std::string_view text) const;

  std::optional<Elem> f(int i, Elem b) const { return lookup(f_, i, b); }
  std::optional<Elem> e(int i, Elem b) const { return lookup(e_, i, b); }

  // Copy with f_i(b) redirected to `target` (kNoElem allowed). e is left
  // alone; used for fault-injection tests.
  CrystalGraph with_redirected_f(int i, Elem b, Elem target) const;

 private:
  std::optional<Elem> lookup(const std::vector<std::vector<Elem>>& table, int i, Elem b) const;

  friend CrystalGraph restrict(const CrystalGraph& graph, NodeSet subdiagram);

  DynkinDiagram diagram_;
  NodeSet index_set_;
  std::vector<Weight> weights_;
  std::vector<std::vector<Elem>> f_, e_;
  std::vector<std::string> labels_;
  std::map<std::string, Elem, std::less<>> by_label_;
};

// A fixed enumeration of model values with reverse lookup.
template <class T>
class Enumerated {
 public:
  Enumerated() = default;
  explicit Enumerated(std::vector<T> items) : items_(std::move(items)) {
    for (std::size_t k = 0; k < items_.size(); ++k) {
      if (!index_.emplace(items_[k], static_cast<Elem>(k)).second)
        throw std::invalid_argument("duplicate element in enumeration");
    }
  }

  std::size_t size() const { return items_.size(); }
  const T& operator[](Elem b) const { return items_.at(static_cast<std::size_t>(b)); }
  const std::vector<T>& items() const { return items_; }

  std::optional<Elem> find(const T& value) const {
    auto it = index_.find(value);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Elem require(const T& value) const {
    if (auto b = find(value)) return *b;
    throw std::logic_error("value outside enumerated set");
  }

  // Index table of a partial operator T -> optional<T>.
  template <class Op>
  std::vector<Elem> map_partial(Op&& op) const {
    std::vector<Elem> out(items_.size(), kNoElem);
    for (std::size_t k = 0; k < items_.size(); ++k)
      if (auto image = op(items_[k])) out[k] = require(*image);
    return out;
  }

  template <class Op>
  Permutation map_total(Op&& op) const {
    Permutation out(items_.size(), kNoElem);
    for (std::size_t k = 0; k < items_.size(); ++k) out[k] = require(op(items_[k]));
    return out;
  }

 private:
  std::vector<T> items_;
  std::map<T, Elem> index_;
};

// Crystal graph over an enumerated model. FOp/EOp: (node, T) -> optional<T>.
template <class T, class FOp, class EOp, class WeightOf, class LabelOf>
CrystalGraph build_crystal(const DynkinDiagram& diagram, const Enumerated<T>& elems, FOp&& f_op,
                           EOp&& e_op, WeightOf&& weight_of, LabelOf&& label_of) {
  std::size_t rows = static_cast<std::size_t>(diagram.rank()) + 1;
  std::vector<std::vector<Elem>> f(rows, std::vector<Elem>(elems.size(), kNoElem));
  std::vector<std::vector<Elem>> e = f;
  for (int i = 1; i <= diagram.rank(); ++i) {
    f[i] = elems.map_partial([&](const T& x) { return f_op(i, x); });
    e[i] = elems.map_partial([&](const T& x) { return e_op(i, x); });
  }
  std::vector<Weight> weights;
  std::vector<std::string> labels;
  for (const T& x : elems.items()) {
    weights.push_back(weight_of(x));
    labels.push_back(label_of(x));
  }
  return CrystalGraph(diagram, diagram.nodes(), std::move(weights), std::move(f), std::move(e),
                      std::move(labels));
}

// Walks the i-string through b. Throws std::logic_error on a cycle.
StringStats string_stats(const CrystalGraph& graph, int i, Elem b);

// Signature rule on b_1 (x) ... (x) b_n given per-factor stats: cancel "-+"
// pairs in the sign pattern. tensor_f returns the factor holding the
// rightmost unpaired "+", tensor_e the leftmost unpaired "-" (0-based).
std::optional<std::size_t> tensor_f(std::span<const StringStats> factors);
std::optional<std::size_t> tensor_e(std::span<const StringStats> factors);

// Same vertices, only edges labelled by nodes of J.
CrystalGraph restrict(const CrystalGraph& graph, NodeSet subdiagram);

// Connected components under undirected edges; each sorted, listed by
// smallest member.
std::vector<std::vector<Elem>> components(const CrystalGraph& graph);
// Component id of each element, numbered as in components().
std::vector<std::size_t> component_ids(const CrystalGraph& graph);

// Unique element of the component with every e_i (resp. f_i) zero. Throws
// std::logic_error if there is not exactly one.
Elem highest_of(const CrystalGraph& graph, std::span<const Elem> component);
Elem lowest_of(const CrystalGraph& graph, std::span<const Elem> component);

// Nodes (i_1, ..., i_k) such that applying e_{i_1}, then e_{i_2}, ...
// takes b to a highest weight element. Greedy: smallest raisable node first.
std::vector<int> raising_path(const CrystalGraph& graph, Elem b);

// Isomorphism of connected crystals matching highest elements and
// propagating along edges breadth first. Returns dst index per src element.
// Throws std::runtime_error when the structures disagree.
Permutation canonical_iso(const CrystalGraph& src, const CrystalGraph& dst);

// One node per element, one edge per f_i labelled i, in index order.
std::string to_dot(const CrystalGraph& graph, std::string_view name = "crystal");

}  // namespace dcactus
