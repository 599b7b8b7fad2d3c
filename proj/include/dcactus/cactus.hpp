#pragma once

// Partial Schuetzenberger involutions, cactus generators and formal words in
// c_J, t_i, r_k, f_i, e_i acting on a finite crystal.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcactus/crystal.hpp"
#include "dcactus/weyl.hpp"

namespace dcactus {

struct GeneratorToken {
  enum class Kind { Cactus, Toggle, RToggle, Lower, Raise };
  Kind kind = Kind::Toggle;
  NodeSet nodes;  // Cactus only
  int node = 0;   // everything else

  static GeneratorToken cactus(NodeSet j) { return {Kind::Cactus, j, 0}; }
  static GeneratorToken cactus(int i) { return {Kind::Cactus, NodeSet{i}, 0}; }
  static GeneratorToken toggle(int i) { return {Kind::Toggle, {}, i}; }
  static GeneratorToken r_toggle(int k) { return {Kind::RToggle, {}, k}; }
  static GeneratorToken lower(int i) { return {Kind::Lower, {}, i}; }
  static GeneratorToken raise(int i) { return {Kind::Raise, {}, i}; }

  friend bool operator==(const GeneratorToken&, const GeneratorToken&) = default;
};

// Written left to right, applied right to left: the last token acts first.
using GeneratorWord = std::vector<GeneratorToken>;

// "c{2,3,4} t1 r2 f3 e1"; c2 abbreviates c{2}. Throws ParseError on bad
// syntax, nodes outside the diagram or a disconnected c{...}.
GeneratorWord parse_word(const DynkinDiagram& diagram, std::string_view text);
std::string word_to_string(const GeneratorWord& word);
GeneratorWord concat(std::initializer_list<GeneratorWord> parts);
// c_{i_1} ... c_{i_l}.
GeneratorWord single_cactus_word(const WeylWord& word);

// r_m = t_m, r_{m-1} = t_{m-1}, r_k = r_{k+1} t_k r_{k+1} t_k r_{k+1}.
GeneratorWord r_word(int m, int k);

// xi_J(b) computed from the greedy raising path in restrict(graph, J).
Elem xi(const CrystalGraph& graph, NodeSet j, Elem b);
// Same value from an explicit raising path (e_{path[0]} applied first) on
// the already restricted graph.
Elem xi_along(const CrystalGraph& restricted, NodeSet j, Elem b, std::span<const int> path);
// A raising path choosing uniformly among the raisable nodes at each step.
std::vector<int> random_raising_path(const CrystalGraph& restricted, Elem b, std::mt19937_64& rng);

Permutation cactus_perm(const CrystalGraph& graph, NodeSet j);

// Resolves tokens to element tables. Cactus and RToggle tables are built on
// first use and cached; lookups are safe from several threads.
class ActionTable {
 public:
  // toggles indexed by node, entry 0 unused.
  ActionTable(CrystalGraph graph, std::vector<Permutation> toggles);

  const CrystalGraph& graph() const { return graph_; }
  std::size_t size() const { return graph_.size(); }
  // Entries are kNoElem where a Lower/Raise token gives 0.
  const std::vector<Elem>& resolve(const GeneratorToken& token) const;

 private:
  CrystalGraph graph_;
  std::vector<Permutation> toggles_;
  std::vector<std::vector<Elem>> lower_, raise_;
  std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
  mutable std::map<NodeSet, Permutation> cactus_;
  mutable std::map<int, Permutation> r_;
};

std::optional<Elem> evaluate(const GeneratorWord& word, const ActionTable& table, Elem b);

struct WordComparison {
  bool equal = true;
  std::size_t cases = 0;
  // Least element where the words disagree.
  Elem element = kNoElem;
  std::optional<Elem> lhs, rhs;
};

// Full-domain agreement with 0 = 0 counted as agreement.
WordComparison words_equal(const GeneratorWord& lhs, const GeneratorWord& rhs,
                           const ActionTable& table);

// Element label, or "0".
std::string image_to_string(const CrystalGraph& graph, std::optional<Elem> b);

}  // namespace dcactus
