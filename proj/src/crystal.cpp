#include "dcactus/crystal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace dcactus {

CrystalGraph::CrystalGraph(DynkinDiagram diagram, NodeSet index_set, std::vector<Weight> weights,
                           std::vector<std::vector<Elem>> f, std::vector<std::vector<Elem>> e,
                           std::vector<std::string> labels)
    : diagram_(std::move(diagram)),
      index_set_(index_set),
      weights_(std::move(weights)),
      f_(std::move(f)),
      e_(std::move(e)),
      labels_(std::move(labels)) {
  std::size_t rows = static_cast<std::size_t>(diagram_.rank()) + 1;
  std::size_t n = weights_.size();
  if (!index_set_.subset_of(diagram_.nodes()))
    throw std::invalid_argument("crystal index set outside diagram");
  if (f_.size() != rows || e_.size() != rows || labels_.size() != n)
    throw std::invalid_argument("crystal tables have wrong shape");
  for (std::size_t i = 0; i < rows; ++i) {
    if (f_[i].size() != n || e_[i].size() != n)
      throw std::invalid_argument("crystal edge row has wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      for (Elem t : {f_[i][b], e_[i][b]}) {
        if (t < kNoElem || t >= static_cast<Elem>(n))
          throw std::invalid_argument("crystal edge target out of range");
        if (t != kNoElem && !index_set_.contains(static_cast<int>(i)))
          throw std::invalid_argument("crystal edge labelled outside index set");
      }
    }
  }
  for (std::size_t b = 0; b < n; ++b) by_label_.emplace(labels_[b], static_cast<Elem>(b));
}

std::optional<Elem> CrystalGraph::lookup(const std::vector<std::vector<Elem>>& table, int i,
                                         Elem b) const {
  diagram_.check_node(i);
  if (b < 0 || static_cast<std::size_t>(b) >= size())
    throw std::out_of_range("element " + std::to_string(b) + " outside crystal");
  Elem t = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
  if (t == kNoElem) return std::nullopt;
  return t;
}

std::optional<Elem> CrystalGraph::find_label(std::string_view text) const {
  auto it = by_label_.find(text);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

CrystalGraph CrystalGraph::with_redirected_f(int i, Elem b, Elem target) const {
  CrystalGraph copy = *this;
  copy.f_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(b)) = target;
  return copy;
}

StringStats string_stats(const CrystalGraph& graph, int i, Elem b) {
  StringStats s;
  std::size_t limit = graph.size();
  for (auto x = graph.f(i, b); x; x = graph.f(i, *x)) {
    if (static_cast<std::size_t>(++s.phi) > limit)
      throw std::logic_error("cycle along f_" + std::to_string(i) + "-string");
  }
  for (auto x = graph.e(i, b); x; x = graph.e(i, *x)) {
    if (static_cast<std::size_t>(++s.epsilon) > limit)
      throw std::logic_error("cycle along e_" + std::to_string(i) + "-string");
  }
  return s;
}

namespace {

// Scans factors left to right keeping the reduced word "+^p -^q" where the
// minuses are still open; a "+" following open minuses cancels one.
struct Reduced {
  std::vector<std::size_t> plus;   // factor index per unpaired '+'
  std::vector<std::size_t> minus;  // factor index per unpaired '-'
};

Reduced reduce_signature(std::span<const StringStats> factors) {
  Reduced r;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (int p = 0; p < factors[k].phi; ++p) {
      if (!r.minus.empty())
        r.minus.pop_back();
      else
        r.plus.push_back(k);
    }
    for (int q = 0; q < factors[k].epsilon; ++q) r.minus.push_back(k);
  }
  return r;
}

}  // namespace

std::optional<std::size_t> tensor_f(std::span<const StringStats> factors) {
  Reduced r = reduce_signature(factors);
  if (r.plus.empty()) return std::nullopt;
  return r.plus.back();
}

std::optional<std::size_t> tensor_e(std::span<const StringStats> factors) {
  Reduced r = reduce_signature(factors);
  if (r.minus.empty()) return std::nullopt;
  return r.minus.front();
}

CrystalGraph restrict(const CrystalGraph& graph, NodeSet subdiagram) {
  if (!subdiagram.subset_of(graph.index_set()))
    throw std::invalid_argument("restrict: " + subdiagram.to_string() + " not in index set");
  CrystalGraph out = graph;
  out.index_set_ = subdiagram;
  for (int i = 1; i <= graph.diagram().rank(); ++i) {
    if (subdiagram.contains(i)) continue;
    std::fill(out.f_[i].begin(), out.f_[i].end(), kNoElem);
    std::fill(out.e_[i].begin(), out.e_[i].end(), kNoElem);
  }
  return out;
}

std::vector<std::size_t> component_ids(const CrystalGraph& graph) {
  std::size_t n = graph.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i : graph.index_set().members()) {
    for (std::size_t b = 0; b < n; ++b) {
      for (auto t : {graph.f(i, static_cast<Elem>(b)), graph.e(i, static_cast<Elem>(b))}) {
        if (!t) continue;
        std::size_t x = find(b), y = find(static_cast<std::size_t>(*t));
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
  }
  // Roots are the smallest members, so numbering by first appearance
  // matches the ordering of components().
  std::vector<std::size_t> id(n), number(n, n);
  std::size_t next = 0;
  for (std::size_t b = 0; b < n; ++b) {
    std::size_t r = find(b);
    if (number[r] == n) number[r] = next++;
    id[b] = number[r];
  }
  return id;
}

std::vector<std::vector<Elem>> components(const CrystalGraph& graph) {
  std::vector<std::size_t> id = component_ids(graph);
  std::vector<std::vector<Elem>> out;
  for (std::size_t b = 0; b < id.size(); ++b) {
    if (id[b] >= out.size()) out.resize(id[b] + 1);
    out[id[b]].push_back(static_cast<Elem>(b));
  }
  return out;
}

namespace {

Elem unique_extremal(const CrystalGraph& graph, std::span<const Elem> component, bool highest) {
  Elem found = kNoElem;
  for (Elem b : component) {
    bool extremal = true;
    for (int i : graph.index_set().members()) {
      if (highest ? graph.e(i, b).has_value() : graph.f(i, b).has_value()) {
        extremal = false;
        break;
      }
    }
    if (!extremal) continue;
    if (found != kNoElem)
      throw std::logic_error(std::string("component has several ") +
                             (highest ? "highest" : "lowest") + " weight elements: " +
                             graph.label(found) + " and " + graph.label(b));
    found = b;
  }
  if (found == kNoElem)
    throw std::logic_error(std::string("component has no ") + (highest ? "highest" : "lowest") +
                           " weight element");
  return found;
}

}  // namespace

Elem highest_of(const CrystalGraph& graph, std::span<const Elem> component) {
  return unique_extremal(graph, component, true);
}

Elem lowest_of(const CrystalGraph& graph, std::span<const Elem> component) {
  return unique_extremal(graph, component, false);
}

std::vector<int> raising_path(const CrystalGraph& graph, Elem b) {
  std::vector<int> path;
  for (;;) {
    bool moved = false;
    for (int i : graph.index_set().members()) {
      if (auto up = graph.e(i, b)) {
        path.push_back(i);
        b = *up;
        moved = true;
        break;
      }
    }
    if (!moved) return path;
    if (path.size() > graph.size() * graph.index_set().size() + 1)
      throw std::logic_error("raising path does not terminate");
  }
}

Permutation canonical_iso(const CrystalGraph& src, const CrystalGraph& dst) {
  if (src.index_set() != dst.index_set())
    throw std::runtime_error("canonical_iso: index sets differ");
  if (src.size() != dst.size())
    throw std::runtime_error("canonical_iso: sizes differ (" + std::to_string(src.size()) +
                             " vs " + std::to_string(dst.size()) + ")");
  auto src_comp = components(src);
  auto dst_comp = components(dst);
  if (src_comp.size() != 1 || dst_comp.size() != 1)
    throw std::runtime_error("canonical_iso: crystals must be connected");

  Permutation map(src.size(), kNoElem);
  std::vector<bool> used(dst.size(), false);
  Elem hs = highest_of(src, src_comp[0]);
  Elem hd = highest_of(dst, dst_comp[0]);
  auto mismatch = [&](Elem b, const std::string& what) {
    return std::runtime_error("canonical_iso: structure mismatch at " + src.label(b) + ": " + what);
  };
  auto assign = [&](Elem b, Elem image, std::deque<Elem>& queue) {
    if (map[b] == kNoElem) {
      if (used[image]) throw mismatch(b, "target " + dst.label(image) + " already used");
      map[b] = image;
      used[image] = true;
      queue.push_back(b);
    } else if (map[b] != image) {
      throw mismatch(b, "inconsistent images");
    }
  };

  std::deque<Elem> queue;
  assign(hs, hd, queue);
  while (!queue.empty()) {
    Elem b = queue.front();
    queue.pop_front();
    Elem c = map[b];
    if (src.weight(b) != dst.weight(c)) throw mismatch(b, "weights differ");
    for (int i : src.index_set().members()) {
      auto sf = src.f(i, b), df = dst.f(i, c);
      if (sf.has_value() != df.has_value()) throw mismatch(b, "f_" + std::to_string(i));
      if (sf) assign(*sf, *df, queue);
      auto se = src.e(i, b), de = dst.e(i, c);
      if (se.has_value() != de.has_value()) throw mismatch(b, "e_" + std::to_string(i));
      if (se) assign(*se, *de, queue);
    }
  }
  return map;
}

std::string to_dot(const CrystalGraph& graph, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (std::size_t b = 0; b < graph.size(); ++b)
    out << "  n" << b << " [label=\"" << graph.label(static_cast<Elem>(b)) << "\"];\n";
  for (std::size_t b = 0; b < graph.size(); ++b) {
    for (int i : graph.index_set().members()) {
      if (auto t = graph.f(i, static_cast<Elem>(b)))
        out << "  n" << b << " -> n" << *t << " [label=\"" << i << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace dcactus
