#include "dcactus/weyl.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dcactus {

Weight Weight::unit(std::size_t dim, int index) {
  if (index < 1 || static_cast<std::size_t>(index) > dim)
    throw std::out_of_range("unit weight index " + std::to_string(index));
  Weight w = zero(dim);
  w.coords_[index - 1] = 1;
  return w;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.dim() != dim()) throw std::invalid_argument("weight dimension mismatch");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.dim() != dim()) throw std::invalid_argument("weight dimension mismatch");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

Weight operator*(int k, Weight a) {
  for (int& c : a.coords_) c *= k;
  return a;
}

Weight Weight::operator-() const { return -1 * *this; }

std::string Weight::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(coords_[k]);
  }
  return out + "]";
}

int dot(const Weight& a, const Weight& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("weight dimension mismatch");
  int s = 0;
  for (std::size_t k = 0; k < a.dim(); ++k) s += a[k] * b[k];
  return s;
}

// ---------------------------------------------------------------------------

NodeSet::NodeSet(std::initializer_list<int> nodes) {
  for (int i : nodes) insert(i);
}

NodeSet NodeSet::interval(int lo, int hi) {
  NodeSet s;
  for (int i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

bool NodeSet::contains(int node) const {
  return node >= 1 && node < 64 && ((bits_ >> node) & 1u);
}

void NodeSet::insert(int node) {
  if (node < 1 || node >= 64) throw std::out_of_range("node " + std::to_string(node));
  bits_ |= std::uint64_t{1} << node;
}

void NodeSet::erase(int node) {
  if (node >= 1 && node < 64) bits_ &= ~(std::uint64_t{1} << node);
}

std::size_t NodeSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<int> NodeSet::members() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

int NodeSet::min() const {
  if (empty()) throw std::logic_error("min of empty node set");
  return std::countr_zero(bits_);
}

std::string NodeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

DynkinDiagram::DynkinDiagram(CartanType type, int rank)
    : type_(type), rank_(rank), adjacency_(static_cast<std::size_t>(rank) + 1, 0) {
  auto link = [this](int i, int j) {
    adjacency_[i] |= std::uint64_t{1} << j;
    adjacency_[j] |= std::uint64_t{1} << i;
  };
  if (type == CartanType::A) {
    for (int i = 1; i < rank; ++i) link(i, i + 1);
  } else {
    for (int i = 1; i <= rank - 2; ++i) link(i, i + 1);
    link(rank - 2, rank);
  }
}

DynkinDiagram DynkinDiagram::type_a(int rank) {
  if (rank < 1 || rank > 62) throw std::invalid_argument("type A rank must be in [1, 62]");
  return DynkinDiagram(CartanType::A, rank);
}

DynkinDiagram DynkinDiagram::type_d(int rank) {
  if (rank < 3 || rank > 62) throw std::invalid_argument("type D rank must be in [3, 62]");
  return DynkinDiagram(CartanType::D, rank);
}

std::size_t DynkinDiagram::weight_dim() const {
  return static_cast<std::size_t>(type_ == CartanType::A ? rank_ + 1 : rank_);
}

void DynkinDiagram::check_node(int i) const {
  if (i < 1 || i > rank_)
    throw std::out_of_range("node " + std::to_string(i) + " outside " + name());
}

bool DynkinDiagram::adjacent(int i, int j) const {
  check_node(i);
  check_node(j);
  return (adjacency_[i] >> j) & 1u;
}

NodeSet DynkinDiagram::neighbors(int i) const {
  check_node(i);
  return NodeSet::from_bits(adjacency_[i]);
}

bool DynkinDiagram::is_connected(NodeSet nodes) const {
  if (nodes.empty()) return false;
  if (!nodes.subset_of(this->nodes())) return false;
  NodeSet seen{nodes.min()};
  std::vector<int> stack{nodes.min()};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j : (neighbors(i) & nodes).members()) {
      if (!seen.contains(j)) {
        seen.insert(j);
        stack.push_back(j);
      }
    }
  }
  return seen == nodes;
}

std::vector<NodeSet> DynkinDiagram::connected_subsets() const {
  if (rank_ > 20) throw std::invalid_argument("connected_subsets: rank too large");
  std::vector<NodeSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rank_); ++mask) {
    NodeSet s = NodeSet::from_bits(mask << 1);
    if (is_connected(s)) out.push_back(s);
  }
  return out;
}

std::string DynkinDiagram::name() const {
  return (type_ == CartanType::A ? "A" : "D") + std::to_string(rank_);
}

// ---------------------------------------------------------------------------

Weight simple_root(const DynkinDiagram& diagram, int i) {
  diagram.check_node(i);
  Weight alpha = Weight::zero(diagram.weight_dim());
  if (diagram.type() == CartanType::D && i == diagram.rank()) {
    alpha[i - 2] = 1;
    alpha[i - 1] = 1;
  } else {
    alpha[i - 1] = 1;
    alpha[i] = -1;
  }
  return alpha;
}

int pairing(const DynkinDiagram& diagram, const Weight& w, int i) {
  return dot(w, simple_root(diagram, i));
}

Weight reflect(const DynkinDiagram& diagram, int i, const Weight& w) {
  return w - pairing(diagram, w, i) * simple_root(diagram, i);
}

Weight act_by_word(const DynkinDiagram& diagram, const WeylWord& word, const Weight& w) {
  Weight out = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect(diagram, *it, out);
  return out;
}

Weight rho(const DynkinDiagram& diagram) {
  std::size_t dim = diagram.weight_dim();
  Weight r = Weight::zero(dim);
  for (std::size_t k = 0; k < dim; ++k) r[k] = static_cast<int>(dim - 1 - k);
  return r;
}

bool is_positive_root(const DynkinDiagram& diagram, const Weight& root) {
  return dot(root, rho(diagram)) > 0;
}

std::vector<Weight> positive_roots(const DynkinDiagram& diagram, NodeSet subdiagram) {
  std::set<Weight> roots;
  std::deque<Weight> queue;
  for (int j : subdiagram.members()) {
    Weight a = simple_root(diagram, j);
    if (roots.insert(a).second) queue.push_back(a);
  }
  while (!queue.empty()) {
    Weight beta = queue.front();
    queue.pop_front();
    for (int j : subdiagram.members()) {
      Weight gamma = reflect(diagram, j, beta);
      if (is_positive_root(diagram, gamma) && roots.insert(gamma).second) queue.push_back(gamma);
    }
  }
  return {roots.begin(), roots.end()};
}

bool is_reduced(const DynkinDiagram& diagram, const WeylWord& word) {
  NodeSet support;
  for (int i : word) {
    diagram.check_node(i);
    support.insert(i);
  }
  // Inversions of w lie in the subsystem generated by the word's support.
  std::size_t inversions = 0;
  for (const Weight& beta : positive_roots(diagram, support))
    if (!is_positive_root(diagram, act_by_word(diagram, word, beta))) ++inversions;
  return inversions == word.size();
}

bool same_element(const DynkinDiagram& diagram, const WeylWord& a, const WeylWord& b) {
  std::size_t dim = diagram.weight_dim();
  for (std::size_t k = 1; k <= dim; ++k) {
    Weight e = Weight::unit(dim, static_cast<int>(k));
    if (act_by_word(diagram, a, e) != act_by_word(diagram, b, e)) return false;
  }
  return true;
}

WeylWord longest_word(const DynkinDiagram& diagram, NodeSet subdiagram) {
  if (subdiagram.empty()) throw std::invalid_argument("longest_word: empty subdiagram");
  if (!diagram.is_connected(subdiagram))
    throw std::invalid_argument("longest_word: subdiagram " + subdiagram.to_string() +
                                " is not connected in " + diagram.name());
  WeylWord word;
  Weight v = rho(diagram);
  for (;;) {
    int next = 0;
    for (int j : subdiagram.members()) {
      if (pairing(diagram, v, j) > 0) {
        next = j;
        break;
      }
    }
    if (next == 0) break;
    v = reflect(diagram, next, v);
    word.push_back(next);
  }
  return word;
}

std::vector<int> theta(const DynkinDiagram& diagram, NodeSet subdiagram) {
  WeylWord w0 = longest_word(diagram, subdiagram);
  std::vector<int> out(static_cast<std::size_t>(diagram.rank()) + 1, 0);
  for (int j : subdiagram.members()) {
    Weight target = -act_by_word(diagram, w0, simple_root(diagram, j));
    for (int k : subdiagram.members()) {
      if (simple_root(diagram, k) == target) {
        out[j] = k;
        break;
      }
    }
    if (out[j] == 0)
      throw std::logic_error("theta: -w0(alpha_" + std::to_string(j) + ") is not simple in " +
                             subdiagram.to_string());
  }
  return out;
}

std::vector<WeylWord> braid_alternates(const DynkinDiagram& diagram, const WeylWord& word,
                                       std::size_t budget) {
  std::vector<WeylWord> out{word};
  std::set<WeylWord> seen{word};
  std::deque<WeylWord> queue{word};
  while (!queue.empty() && out.size() < budget) {
    WeylWord w = queue.front();
    queue.pop_front();
    auto visit = [&](WeylWord v) {
      if (out.size() < budget && seen.insert(v).second) {
        out.push_back(v);
        queue.push_back(std::move(v));
      }
    };
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      int a = w[p], b = w[p + 1];
      if (a != b && !diagram.adjacent(a, b)) {
        WeylWord v = w;
        std::swap(v[p], v[p + 1]);
        visit(std::move(v));
      }
      if (p + 2 < w.size() && w[p + 2] == a && a != b && diagram.adjacent(a, b)) {
        WeylWord v = w;
        v[p] = b;
        v[p + 1] = a;
        v[p + 2] = b;
        visit(std::move(v));
      }
    }
  }
  return out;
}

std::string word_to_string(const WeylWord& word) {
  std::string out = "[";
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(word[k]);
  }
  return out + "]";
}

}  // namespace dcactus
