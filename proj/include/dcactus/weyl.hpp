#pragma once

// Root and weight arithmetic for type D_m (and type A_n chains) in the
// epsilon basis.
//
// Conventions, fixed here and nowhere else:
//   D_m: alpha_i = e_i - e_{i+1} for i < m, alpha_m = e_{m-1} + e_m,
//        weights have m coordinates.
//   A_n: alpha_i = e_i - e_{i+1}, weights have n + 1 coordinates.
// The form is the standard dot product; both types are simply laced so
// alpha^vee = alpha and s_i(w) = w - <w, alpha_i> alpha_i.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dcactus {

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}

  static Weight zero(std::size_t dim) { return Weight(std::vector<int>(dim, 0)); }
  // e_index, 1-based.
  static Weight unit(std::size_t dim, int index);

  std::size_t dim() const { return coords_.size(); }
  const std::vector<int>& coords() const { return coords_; }
  int operator[](std::size_t k) const { return coords_[k]; }
  int& operator[](std::size_t k) { return coords_[k]; }

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a);
  Weight operator-() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  // JSON integer array, e.g. "[1,-1,0,0]".
  std::string to_string() const;

 private:
  std::vector<int> coords_;
};

int dot(const Weight& a, const Weight& b);

// A subset of Dynkin nodes {1..63}.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes);
  static NodeSet from_bits(std::uint64_t bits) { NodeSet s; s.bits_ = bits; return s; }
  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static NodeSet interval(int lo, int hi);

  bool contains(int node) const;
  void insert(int node);
  void erase(int node);
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  std::vector<int> members() const;
  int min() const;
  bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }
  std::uint64_t bits() const { return bits_; }

  friend NodeSet operator|(NodeSet a, NodeSet b) { return from_bits(a.bits_ | b.bits_); }
  friend NodeSet operator&(NodeSet a, NodeSet b) { return from_bits(a.bits_ & b.bits_); }
  friend bool operator==(NodeSet, NodeSet) = default;
  friend auto operator<=>(NodeSet, NodeSet) = default;

  // "{2,3,4}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

enum class CartanType { A, D };

class DynkinDiagram {
 public:
  static DynkinDiagram type_a(int rank);
  // Spin nodes are m-1 and m; both hang off m-2.
  static DynkinDiagram type_d(int rank);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  std::size_t weight_dim() const;
  NodeSet nodes() const { return NodeSet::interval(1, rank_); }
  bool adjacent(int i, int j) const;
  NodeSet neighbors(int i) const;
  // Throws std::out_of_range.
  void check_node(int i) const;
  bool is_connected(NodeSet nodes) const;
  // All nonempty connected subsets, ordered by bitmask.
  std::vector<NodeSet> connected_subsets() const;
  std::string name() const;

  friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;

 private:
  DynkinDiagram(CartanType type, int rank);

  CartanType type_;
  int rank_;
  std::vector<std::uint64_t> adjacency_;  // indexed by node, bit j set if i ~ j
};

// s_{i_1} ... s_{i_l}, node indices.
using WeylWord = std::vector<int>;

Weight simple_root(const DynkinDiagram& diagram, int i);
// <w, alpha_i^vee>
int pairing(const DynkinDiagram& diagram, const Weight& w, int i);
Weight reflect(const DynkinDiagram& diagram, int i, const Weight& w);
// The word s_{i_1}...s_{i_l} acts as reflect(i_1, reflect(i_2, ...)).
Weight act_by_word(const DynkinDiagram& diagram, const WeylWord& word, const Weight& w);

// Half sum of positive roots; pairs to 1 with every simple root.
Weight rho(const DynkinDiagram& diagram);
bool is_positive_root(const DynkinDiagram& diagram, const Weight& root);
// Positive roots of the parabolic subsystem spanned by J, closed under the
// reflections s_j, j in J. Sorted.
std::vector<Weight> positive_roots(const DynkinDiagram& diagram, NodeSet subdiagram);

bool is_reduced(const DynkinDiagram& diagram, const WeylWord& word);
// Same group element, compared through the action on e_1, ..., e_dim.
bool same_element(const DynkinDiagram& diagram, const WeylWord& a, const WeylWord& b);

// Reduced word for the longest element of W_J. Greedy descent from rho,
// always reflecting in the smallest eligible node. Throws
// std::invalid_argument if J is empty or disconnected.
WeylWord longest_word(const DynkinDiagram& diagram, NodeSet subdiagram);

// theta_J, indexed by node (entries outside J are 0).
std::vector<int> theta(const DynkinDiagram& diagram, NodeSet subdiagram);

// Up to `budget` reduced words for the same element reachable from `word`
// by commutation and braid moves, in breadth-first order starting with
// `word` itself.
std::vector<WeylWord> braid_alternates(const DynkinDiagram& diagram, const WeylWord& word,
                                       std::size_t budget);

std::string word_to_string(const WeylWord& word);

}  // namespace dcactus
