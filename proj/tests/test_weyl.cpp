#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "dcactus/weyl.hpp"

using namespace dcactus;

namespace {

Weight W(std::vector<int> v) { return Weight(std::move(v)); }

// Positive roots written out by hand: e_i - e_j (i < j) and, for D, e_i + e_j.
std::set<Weight> explicit_positive_roots(const DynkinDiagram& d) {
  std::size_t dim = d.weight_dim();
  std::set<Weight> out;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      Weight minus = Weight::zero(dim), plus = Weight::zero(dim);
      minus[i] = 1;
      minus[j] = -1;
      plus[i] = 1;
      plus[j] = 1;
      out.insert(minus);
      if (d.type() == CartanType::D) out.insert(plus);
    }
  }
  return out;
}

// Roots that are nonnegative combinations (coefficients <= 2) of the simple
// roots in J.
std::size_t parabolic_root_count(const DynkinDiagram& d, NodeSet j) {
  std::set<Weight> roots = explicit_positive_roots(d);
  std::vector<int> nodes = j.members();
  std::set<Weight> found;
  std::vector<int> coeff(nodes.size(), 0);
  for (;;) {
    Weight w = Weight::zero(d.weight_dim());
    for (std::size_t k = 0; k < nodes.size(); ++k) w += coeff[k] * simple_root(d, nodes[k]);
    if (roots.count(w)) found.insert(w);
    std::size_t k = 0;
    while (k < coeff.size() && coeff[k] == 2) coeff[k++] = 0;
    if (k == coeff.size()) break;
    ++coeff[k];
  }
  return found.size();
}

// Length of every element of W, by breadth-first search on the orbit of the
// regular weight rho.
std::map<Weight, int> orbit_lengths(const DynkinDiagram& d) {
  std::map<Weight, int> dist;
  Weight r = rho(d);
  dist[r] = 0;
  std::deque<Weight> queue{r};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (int i = 1; i <= d.rank(); ++i) {
      Weight v = reflect(d, i, w);
      if (dist.emplace(v, dist[w] + 1).second) queue.push_back(v);
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("simple roots and reflections in D4") {
  DynkinDiagram d = DynkinDiagram::type_d(4);
  CHECK(simple_root(d, 1) == W({1, -1, 0, 0}));
  CHECK(simple_root(d, 4) == W({0, 0, 1, 1}));
  CHECK(simple_root(d, 3) == W({0, 0, 1, -1}));
  CHECK(reflect(d, 1, W({1, 0, 0, 0})) == W({0, 1, 0, 0}));
  CHECK(reflect(d, 4, W({0, 0, 1, 0})) == W({0, 0, 0, -1}));
  CHECK(reflect(d, 3, W({0, 0, 1, 1})) == W({0, 0, 1, 1}));
  CHECK_THROWS_AS(simple_root(d, 5), std::out_of_range);
  CHECK_THROWS_AS(simple_root(d, 0), std::out_of_range);
  CHECK_THROWS_AS(DynkinDiagram::type_d(2), std::invalid_argument);
}

TEST_CASE("reflections are involutions and s_m swaps the last coordinates with signs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int m = 3; m <= 6; ++m) {
    DynkinDiagram d = DynkinDiagram::type_d(m);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> v(m);
      for (int& x : v) x = coord(rng);
      Weight w(v);
      for (int i = 1; i <= m; ++i) CHECK(reflect(d, i, reflect(d, i, w)) == w);
      std::vector<int> s = v;
      std::swap(s[m - 2], s[m - 1]);
      s[m - 2] = -s[m - 2];
      s[m - 1] = -s[m - 1];
      CHECK(reflect(d, m, w) == Weight(s));
      std::vector<int> t = v;
      std::swap(t[0], t[1]);
      CHECK(reflect(d, 1, w) == Weight(t));
    }
  }
}

TEST_CASE("act_by_word applies the rightmost letter first") {
  DynkinDiagram d = DynkinDiagram::type_d(4);
  Weight e1 = Weight::unit(4, 1);
  CHECK(act_by_word(d, {}, e1) == e1);
  CHECK(act_by_word(d, {1, 1}, e1) == e1);
  // s_1 s_2 e_1 = s_1 e_1 = e_2; s_2 s_1 e_1 = s_2 e_2 = e_3.
  CHECK(act_by_word(d, {1, 2}, e1) == W({0, 1, 0, 0}));
  CHECK(act_by_word(d, {2, 1}, e1) == W({0, 0, 1, 0}));
}

TEST_CASE("rho pairs to one with every simple root") {
  for (int m = 3; m <= 7; ++m) {
    DynkinDiagram d = DynkinDiagram::type_d(m);
    for (int i = 1; i <= m; ++i) CHECK(pairing(d, rho(d), i) == 1);
  }
  DynkinDiagram a = DynkinDiagram::type_a(4);
  for (int i = 1; i <= 4; ++i) CHECK(pairing(a, rho(a), i) == 1);
}

TEST_CASE("positive roots match the explicit list") {
  for (int m = 3; m <= 6; ++m) {
    DynkinDiagram d = DynkinDiagram::type_d(m);
    auto roots = positive_roots(d, d.nodes());
    CHECK(std::set<Weight>(roots.begin(), roots.end()) == explicit_positive_roots(d));
    CHECK(roots.size() == static_cast<std::size_t>(m * (m - 1)));
    for (const Weight& r : roots) CHECK(is_positive_root(d, r));
    for (const Weight& r : roots) CHECK_FALSE(is_positive_root(d, -r));
  }
  for (int n = 1; n <= 5; ++n) {
    DynkinDiagram a = DynkinDiagram::type_a(n);
    CHECK(positive_roots(a, a.nodes()).size() == static_cast<std::size_t>(n * (n + 1) / 2));
  }
}

TEST_CASE("is_reduced on known words") {
  DynkinDiagram a3 = DynkinDiagram::type_a(3);
  CHECK(is_reduced(a3, {1, 3, 2, 1}));
  CHECK_FALSE(is_reduced(a3, {1, 1}));
  CHECK(is_reduced(DynkinDiagram::type_d(4), {1, 2, 3, 4, 2, 1}));
  CHECK(is_reduced(a3, {}));
}

TEST_CASE("is_reduced agrees with breadth-first lengths on random words") {
  std::mt19937 rng(11);
  for (int m : {4, 5}) {
    DynkinDiagram d = DynkinDiagram::type_d(m);
    auto lengths = orbit_lengths(d);
    std::uniform_int_distribution<int> node(1, m), len(0, 9);
    for (int trial = 0; trial < 400; ++trial) {
      WeylWord w(static_cast<std::size_t>(len(rng)));
      for (int& x : w) x = node(rng);
      int length = lengths.at(act_by_word(d, w, rho(d)));
      CHECK(is_reduced(d, w) == (length == static_cast<int>(w.size())));
    }
  }
}

TEST_CASE("longest words of connected subdiagrams") {
  DynkinDiagram d4 = DynkinDiagram::type_d(4);
  CHECK(longest_word(d4, {1}) == WeylWord{1});
  WeylWord w12 = longest_word(d4, {1, 2});
  CHECK(w12.size() == 3);
  CHECK(same_element(d4, w12, {1, 2, 1}));
  CHECK(longest_word(d4, d4.nodes()).size() == 12);
  CHECK_THROWS_AS(longest_word(d4, {}), std::invalid_argument);
  CHECK_THROWS_AS(longest_word(d4, {1, 3}), std::invalid_argument);

  for (int m = 3; m <= 6; ++m) {
    DynkinDiagram d = DynkinDiagram::type_d(m);
    auto lengths = orbit_lengths(d);
    for (NodeSet j : d.connected_subsets()) {
      WeylWord w = longest_word(d, j);
      CHECK(is_reduced(d, w));
      CHECK(w.size() == parabolic_root_count(d, j));
      CHECK(w.size() == positive_roots(d, j).size());
      std::vector<int> th = theta(d, j);
      for (int x : j.members()) {
        CHECK(act_by_word(d, w, simple_root(d, x)) ==
              -simple_root(d, th[static_cast<std::size_t>(x)]));
      }
      if (j == d.nodes()) {
        int longest = 0;
        for (const auto& [weight, length] : lengths) longest = std::max(longest, length);
        CHECK(static_cast<int>(w.size()) == longest);
      }
    }
  }
}

TEST_CASE("theta on D_m and type A chains") {
  DynkinDiagram d5 = DynkinDiagram::type_d(5);
  auto t5 = theta(d5, d5.nodes());
  CHECK(t5[1] == 1);
  CHECK(t5[2] == 2);
  CHECK(t5[3] == 3);
  CHECK(t5[4] == 5);
  CHECK(t5[5] == 4);
  DynkinDiagram d4 = DynkinDiagram::type_d(4);
  auto t4 = theta(d4, d4.nodes());
  for (int i = 1; i <= 4; ++i) CHECK(t4[i] == i);
  for (int k = 1; k <= 4; ++k) {
    NodeSet chain = NodeSet::interval(1, k);
    auto t = theta(d5, chain);
    for (int i = 1; i <= k; ++i) CHECK(t[i] == k - i + 1);
  }
  DynkinDiagram a4 = DynkinDiagram::type_a(4);
  auto ta = theta(a4, a4.nodes());
  for (int i = 1; i <= 4; ++i) CHECK(ta[i] == 5 - i);
}

TEST_CASE("theta is an involutive diagram automorphism") {
  for (int m = 3; m <= 6; ++m) {
    DynkinDiagram d = DynkinDiagram::type_d(m);
    for (NodeSet j : d.connected_subsets()) {
      auto th = theta(d, j);
      for (int x : j.members()) {
        int y = th[static_cast<std::size_t>(x)];
        CHECK(j.contains(y));
        CHECK(th[static_cast<std::size_t>(y)] == x);
        for (int z : j.members())
          CHECK(d.adjacent(x, z) == d.adjacent(y, th[static_cast<std::size_t>(z)]));
      }
    }
  }
}

TEST_CASE("braid alternates") {
  DynkinDiagram a3 = DynkinDiagram::type_a(3);
  auto c = braid_alternates(a3, {1, 3}, 2);
  CHECK(std::set<WeylWord>(c.begin(), c.end()) == std::set<WeylWord>{{1, 3}, {3, 1}});
  DynkinDiagram a2 = DynkinDiagram::type_a(2);
  auto b = braid_alternates(a2, {1, 2, 1}, 2);
  CHECK(std::set<WeylWord>(b.begin(), b.end()) == std::set<WeylWord>{{1, 2, 1}, {2, 1, 2}});
  auto e = braid_alternates(a3, {2, 1, 3, 2}, 4);
  CHECK(e.front() == WeylWord{2, 1, 3, 2});
  CHECK(std::find(e.begin(), e.end(), WeylWord{2, 3, 1, 2}) != e.end());

  for (int m : {4, 5}) {
    DynkinDiagram d = DynkinDiagram::type_d(m);
    WeylWord w0 = longest_word(d, d.nodes());
    auto alts = braid_alternates(d, w0, 25);
    CHECK(alts.size() == 25);
    CHECK(std::set<WeylWord>(alts.begin(), alts.end()).size() == alts.size());
    for (const WeylWord& w : alts) {
      CHECK(w.size() == w0.size());
      CHECK(is_reduced(d, w));
      CHECK(same_element(d, w, w0));
    }
  }
}

TEST_CASE("connected subsets and adjacency") {
  DynkinDiagram d4 = DynkinDiagram::type_d(4);
  CHECK(d4.connected_subsets().size() == 11);
  CHECK(d4.adjacent(2, 4));
  CHECK(d4.adjacent(2, 3));
  CHECK_FALSE(d4.adjacent(3, 4));
  CHECK_FALSE(d4.adjacent(1, 1));
  CHECK(d4.is_connected({1, 2, 4}));
  CHECK_FALSE(d4.is_connected({3, 4}));
  for (int m = 3; m <= 7; ++m) {
    DynkinDiagram d = DynkinDiagram::type_d(m);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) CHECK(d.adjacent(i, j) == d.adjacent(j, i));
  }
  CHECK(NodeSet{2, 3, 4}.to_string() == "{2,3,4}");
  CHECK(W({1, -1, 0}).to_string() == "[1,-1,0]");
}
