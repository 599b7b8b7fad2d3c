#include "dcactus/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dcactus/heap.hpp"

namespace dcactus {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "axioms",      "relations", "models",     "toggle_weight", "single_node", "commute",
      "intertwine",  "components", "typeA",     "typeD",         "corollary"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string suite_anchor(const std::string& name) {
  static const std::map<std::string, std::string> anchors = {
      {"axioms", "crystal axioms and the Schuetzenberger involution"},
      {"relations", "cactus group relations"},
      {"models", "B(n varpi_1) and RPP(w_0^J, n) are isomorphic crystals"},
      {"toggle_weight", "wt(t_i x) = s_i wt(x)"},
      {"single_node", "c_k ~ r_k for every single node k"},
      {"commute", "cactus-toggle commutation: c_j t_j = t_j c_j"},
      {"intertwine", "intertwining identities for t_k, c_{k+1} and f_k"},
      {"components", "t_k preserves the sl_3 components of {k,k+1}"},
      {"typeA", "c_J as a toggle word for type A subdiagrams J"},
      {"typeD", "c_J as a toggle word for type D subdiagrams J"},
      {"corollary", "length 1 and 2 subdiagrams generate the action"},
  };
  auto it = anchors.find(name);
  if (it == anchors.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second;
}

// ---------------------------------------------------------------------------

nlohmann::json SuiteResult::to_json(bool timing) const {
  nlohmann::json fails = nlohmann::json::array();
  for (const Failure& f : failures)
    fails.push_back({{"element", f.element}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return {{"suite", suite}, {"anchor", anchor}, {"m", m},           {"n", n},
          {"cases", cases}, {"failures", fails}, {"millis", timing ? millis : 0}};
}

bool VerificationReport::passed() const {
  return std::all_of(sections.begin(), sections.end(),
                     [](const SuiteResult& s) { return s.passed(); });
}

nlohmann::json VerificationReport::to_json(bool timing) const {
  nlohmann::json out = {{"sections", nlohmann::json::array()}, {"notes", notes},
                        {"passed", passed()}};
  for (const SuiteResult& s : sections) out["sections"].push_back(s.to_json(timing));
  return out;
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const SuiteResult& s : sections) {
    out << (s.passed() ? "PASS " : "FAIL ") << s.suite << " m=" << s.m << " n=" << s.n
        << " cases=" << s.cases;
    if (!s.passed()) {
      ++failed;
      out << " failures=" << s.failure_count;
    }
    out << '\n';
    for (const Failure& f : s.failures)
      out << "    at " << f.element << ": " << f.lhs << "  vs  " << f.rhs << '\n';
  }
  for (const std::string& note : notes) out << "note: " << note << '\n';
  if (failed == 0)
    out << "all " << sections.size() << " sections passed\n";
  else
    out << failed << " of " << sections.size() << " sections failed\n";
  return out.str();
}

// ---------------------------------------------------------------------------

CrystalContext make_context(RowModel model, CrystalGraph graph, std::vector<Permutation> toggles) {
  int m = model.diagram.rank();
  int n = model.rows.size() ? static_cast<int>(model.rows[0].height()) : 0;
  ActionTable table(std::move(graph), std::move(toggles));
  return CrystalContext{m, n, std::move(model), std::move(table)};
}

CrystalContext make_context(int m, int n, bool inject_fault) {
  RowModel model = make_row_model(m, n);
  std::vector<Permutation> toggles = model.toggles;
  if (inject_fault && toggles[1].size() > 1) toggles[1][0] = toggles[1][1];
  CrystalGraph graph = model.graph;
  return make_context(std::move(model), std::move(graph), std::move(toggles));
}

// ---------------------------------------------------------------------------

GeneratorWord type_a_word(const std::vector<int>& chain) {
  if (chain.empty()) throw std::invalid_argument("empty chain");
  int top = chain.back();
  GeneratorWord out;
  for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
    out.push_back(GeneratorToken::cactus(top));
    for (std::size_t u = chain.size() - 1; u-- > s;) out.push_back(GeneratorToken::toggle(chain[u]));
  }
  out.push_back(GeneratorToken::cactus(top));
  return out;
}

WeylWord p_word(int m, int i) {
  if (i == m - 1 || i == m) return {i};
  if (i < 1 || i > m) throw std::out_of_range("p_" + std::to_string(i));
  WeylWord w;
  for (int x = i; x <= m - 2; ++x) w.push_back(x);
  w.push_back(m - 1);
  w.push_back(m);
  for (int x = m - 2; x >= i; --x) w.push_back(x);
  return w;
}

WeylWord q_word(int m, int j) {
  if (j < 1 || j > m - 2) throw std::out_of_range("q_" + std::to_string(j));
  WeylWord w;
  for (int i = j; i <= m; ++i) {
    WeylWord p = p_word(m, i);
    w.insert(w.end(), p.begin(), p.end());
  }
  return w;
}

GeneratorWord eliminate_toggles(const GeneratorWord& word, int m) {
  GeneratorWord out;
  for (const GeneratorToken& t : word) {
    if (t.kind == GeneratorToken::Kind::RToggle) {
      GeneratorWord inner = eliminate_toggles(r_word(m, t.node), m);
      out.insert(out.end(), inner.begin(), inner.end());
    } else if (t.kind != GeneratorToken::Kind::Toggle) {
      out.push_back(t);
    } else if (t.node >= m - 1) {
      out.push_back(GeneratorToken::cactus(t.node));
    } else {
      out.push_back(GeneratorToken::cactus(t.node + 1));
      out.push_back(GeneratorToken::cactus(NodeSet{t.node, t.node + 1}));
      out.push_back(GeneratorToken::cactus(t.node + 1));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using Token = GeneratorToken;

class Recorder {
 public:
  Recorder(SuiteResult& result, const CrystalContext& ctx) : r_(result), ctx_(ctx) {}

  const CrystalGraph& graph() const { return ctx_.table.graph(); }
  const ActionTable& table() const { return ctx_.table; }
  std::string label(Elem b) const { return graph().label(b); }
  std::string image(std::optional<Elem> b) const { return image_to_string(graph(), b); }

  void fail(Failure f) {
    ++r_.failure_count;
    if (r_.failures.size() < SuiteResult::kMaxFailures) r_.failures.push_back(std::move(f));
  }

  void check(bool ok, const std::string& element, const std::string& lhs, const std::string& rhs) {
    ++r_.cases;
    if (!ok) fail({element, lhs, rhs});
  }

  bool compare(const GeneratorWord& lhs, const GeneratorWord& rhs) {
    WordComparison c = words_equal(lhs, rhs, table());
    r_.cases += c.cases;
    if (!c.equal)
      fail({label(c.element), word_to_string(lhs) + " => " + image(c.lhs),
            word_to_string(rhs) + " => " + image(c.rhs)});
    return c.equal;
  }

  // Runs a block; exceptions become failures and the suite continues.
  void guarded(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& err) {
      ++r_.cases;
      fail({"-", what, std::string("exception: ") + err.what()});
    }
  }

  void note(std::string text) { r_.notes.push_back(std::move(text)); }

 private:
  SuiteResult& r_;
  const CrystalContext& ctx_;
};

std::string elem_of(const Recorder& rec, Elem b) { return rec.label(b); }

GeneratorWord cactus_of(NodeSet j) { return {Token::cactus(j)}; }

// --- axioms ----------------------------------------------------------------

void suite_axioms(Recorder& rec, const CrystalContext& ctx, const SuiteConfig& config) {
  const CrystalGraph& g = rec.graph();
  const DynkinDiagram& d = g.diagram();
  std::size_t size = g.size();

  rec.guarded("partial inverse law", [&] {
    for (int i = 1; i <= d.rank(); ++i) {
      for (std::size_t x = 0; x < size; ++x) {
        Elem b = static_cast<Elem>(x);
        std::string fi = "f" + std::to_string(i), ei = "e" + std::to_string(i);
        if (auto t = g.f(i, b)) {
          auto back = g.e(i, *t);
          rec.check(back == b, elem_of(rec, b), ei + " " + fi + " => " + rec.image(back),
                    elem_of(rec, b));
        }
        if (auto t = g.e(i, b)) {
          auto back = g.f(i, *t);
          rec.check(back == b, elem_of(rec, b), fi + " " + ei + " => " + rec.image(back),
                    elem_of(rec, b));
        }
      }
    }
  });

  rec.guarded("edge weight law", [&] {
    for (int i = 1; i <= d.rank(); ++i) {
      Weight alpha = simple_root(d, i);
      for (std::size_t x = 0; x < size; ++x) {
        Elem b = static_cast<Elem>(x);
        if (auto t = g.f(i, b)) {
          Weight expect = g.weight(b) - alpha;
          rec.check(g.weight(*t) == expect, elem_of(rec, b),
                    "wt(f" + std::to_string(i) + " b) = " + g.weight(*t).to_string(),
                    expect.to_string());
        }
      }
    }
  });

  rec.guarded("connected with highest weight n varpi_1", [&] {
    auto comps = components(g);
    rec.check(comps.size() == 1, "-", "components " + std::to_string(comps.size()), "1");
    if (comps.size() != 1) return;
    Elem high = highest_of(g, comps[0]);
    std::string expect = RowTableau(ctx.m, std::vector<Letter>(static_cast<std::size_t>(ctx.n),
                                                              Letter{1}))
                             .to_string();
    rec.check(g.label(high) == expect, "-", "highest " + g.label(high), expect);
    Weight w = ctx.n * Weight::unit(d.weight_dim(), 1);
    rec.check(g.weight(high) == w, "-", "wt(highest) " + g.weight(high).to_string(), w.to_string());
  });

  for (int i = 1; i <= d.rank(); ++i) {
    rec.guarded("t" + std::to_string(i) + " involution", [&] {
      rec.compare({Token::toggle(i), Token::toggle(i)}, {});
    });
  }

  for (NodeSet j : d.connected_subsets()) {
    rec.guarded("xi on " + j.to_string(), [&] {
      const Permutation& xi_perm = rec.table().resolve(Token::cactus(j));
      WeylWord w0 = longest_word(d, j);
      std::vector<int> th = theta(d, j);
      std::string cj = "c" + j.to_string();

      rec.compare({Token::cactus(j), Token::cactus(j)}, {});
      for (std::size_t x = 0; x < size; ++x) {
        Elem b = static_cast<Elem>(x);
        Weight expect = act_by_word(d, w0, g.weight(b));
        rec.check(g.weight(xi_perm[x]) == expect, elem_of(rec, b),
                  "wt(" + cj + " b) = " + g.weight(xi_perm[x]).to_string(), expect.to_string());
      }
      for (int i : j.members()) {
        int ti = th[static_cast<std::size_t>(i)];
        rec.compare({Token::raise(i), Token::cactus(j)}, {Token::cactus(j), Token::lower(ti)});
        rec.compare({Token::lower(i), Token::cactus(j)}, {Token::cactus(j), Token::raise(ti)});
      }

      // Path independence with randomized raising paths.
      CrystalGraph r = restrict(g, j);
      auto comps = components(r);
      auto ids = component_ids(r);
      std::seed_seq seq{config.seed, static_cast<std::uint64_t>(ctx.m),
                        static_cast<std::uint64_t>(ctx.n), j.bits()};
      std::mt19937_64 rng(seq);
      for (std::size_t x = 0; x < size; ++x) {
        Elem b = static_cast<Elem>(x);
        Elem low = lowest_of(r, comps[ids[x]]);
        for (int t = 0; t < config.random_paths; ++t) {
          std::vector<int> path = random_raising_path(r, b, rng);
          std::optional<Elem> y = low;
          for (auto it = path.rbegin(); it != path.rend() && y; ++it)
            y = r.e(th[static_cast<std::size_t>(*it)], *y);
          rec.check(y == xi_perm[x], elem_of(rec, b),
                    cj + " along path " + word_to_string(path) + " => " + rec.image(y),
                    cj + " => " + rec.image(xi_perm[x]));
        }
      }
    });
  }
}

// --- relations -------------------------------------------------------------

void suite_relations(Recorder& rec, const CrystalContext&, const SuiteConfig&) {
  const DynkinDiagram& d = rec.graph().diagram();
  auto subsets = d.connected_subsets();
  for (NodeSet j : subsets) {
    rec.guarded("c" + j.to_string() + " squared", [&] { rec.compare({Token::cactus(j), Token::cactus(j)}, {}); });
  }
  for (NodeSet j : subsets) {
    for (NodeSet k : subsets) {
      rec.guarded("c" + j.to_string() + " c" + k.to_string(), [&] {
        if (!d.is_connected(j | k)) {
          rec.compare({Token::cactus(j), Token::cactus(k)}, {Token::cactus(k), Token::cactus(j)});
        } else if (j.subset_of(k)) {
          std::vector<int> th = theta(d, k);
          NodeSet image;
          for (int x : j.members()) image.insert(th[static_cast<std::size_t>(x)]);
          rec.compare({Token::cactus(j), Token::cactus(k)},
                      {Token::cactus(k), Token::cactus(image)});
        }
      });
    }
  }
}

// --- models ----------------------------------------------------------------

void suite_models(Recorder& rec, const CrystalContext& ctx, const SuiteConfig&) {
  const CrystalGraph& g = rec.graph();
  RppModel rpp = make_rpp_model(ctx.m, ctx.n);
  rec.check(rpp.heap.fibers_totally_ordered(), "-", "minuscule heap fibers totally ordered",
            "true");
  rec.check(rpp.rpps.size() == g.size(), "-", "|RPP| = " + std::to_string(rpp.rpps.size()),
            "|rows| = " + std::to_string(g.size()));

  rec.guarded("chain encoding round trip", [&] {
    for (const Rpp& phi : rpp.rpps.items()) {
      Rpp back = chain_to_rpp(rpp.heap, rpp_to_chain(phi));
      rec.check(back == phi, rpp_to_string(phi), "chain round trip => " + rpp_to_string(back),
                rpp_to_string(phi));
    }
  });

  rec.guarded("canonical isomorphism rows -> RPP", [&] {
    Permutation iso = canonical_iso(g, rpp.graph);
    rec.check(true, "-", "canonical_iso", "ok");
    for (int i = 1; i <= ctx.m; ++i) {
      const Permutation& t_row = rec.table().resolve(Token::toggle(i));
      for (std::size_t x = 0; x < g.size(); ++x) {
        Elem lhs = iso[static_cast<std::size_t>(t_row[x])];
        Elem rhs = rpp.toggles[i][static_cast<std::size_t>(iso[x])];
        rec.check(lhs == rhs, rec.label(static_cast<Elem>(x)),
                  "t" + std::to_string(i) + " => " + rec.label(t_row[x]) + " ~ RPP " +
                      rpp.graph.label(lhs),
                  "RPP t" + std::to_string(i) + " => " + rpp.graph.label(rhs));
      }
    }
  });

  if (ctx.n == 1) {
    rec.guarded("ideal crystal", [&] {
      CrystalGraph ideals = ideal_crystal(rpp.heap, rpp.lambda);
      Permutation iso = canonical_iso(g, ideals);
      rec.check(iso.size() == g.size(), "-", "ideal crystal size " + std::to_string(iso.size()),
                std::to_string(g.size()));
    });
  }
}

// --- toggle_weight ---------------------------------------------------------

void suite_toggle_weight(Recorder& rec, const CrystalContext& ctx, const SuiteConfig&) {
  const CrystalGraph& g = rec.graph();
  const DynkinDiagram& d = g.diagram();
  RppModel rpp = make_rpp_model(ctx.m, ctx.n);
  for (int i = 1; i <= ctx.m; ++i) {
    rec.guarded("RPP t" + std::to_string(i), [&] {
      for (const Rpp& phi : rpp.rpps.items()) {
        Weight lhs = rpp_weight(rpp.heap, toggle_rpp(rpp.heap, i, phi), rpp.lambda);
        Weight rhs = reflect(d, i, rpp_weight(rpp.heap, phi, rpp.lambda));
        rec.check(lhs == rhs, rpp_to_string(phi),
                  "wt(t" + std::to_string(i) + " x) = " + lhs.to_string(),
                  "s" + std::to_string(i) + " wt(x) = " + rhs.to_string());
      }
    });
    rec.guarded("row t" + std::to_string(i), [&] {
      const Permutation& t = rec.table().resolve(Token::toggle(i));
      for (std::size_t x = 0; x < g.size(); ++x) {
        Elem b = static_cast<Elem>(x);
        Weight lhs = g.weight(t[x]);
        Weight rhs = reflect(d, i, g.weight(b));
        rec.check(lhs == rhs, rec.label(b), "wt(t" + std::to_string(i) + " b) = " + lhs.to_string(),
                  "s" + std::to_string(i) + " wt(b) = " + rhs.to_string());
      }
    });
  }
}

// --- single_node -----------------------------------------------------------

// The four window cases, acting on (a, b, b-bar, a-bar).
LetterCounts window_case(LetterCounts w) {
  int a = w.a, b = w.b, bb = w.b_bar, aa = w.a_bar;
  int da = std::abs(a - aa), db = std::abs(b - bb);
  LetterCounts out = w;
  auto set = [&](int x, int y, int yb, int xb) {
    out.a = x;
    out.b = y;
    out.b_bar = yb;
    out.a_bar = xb;
  };
  if (a <= aa && b <= bb)
    set(a, b, da + b, a + db);
  else if (a <= aa)
    set(a + db, bb, da + bb, a);
  else if (b <= bb)
    set(aa, da + b, b, aa + db);
  else
    set(aa + db, da + bb, bb, aa);
  return out;
}

void suite_single_node(Recorder& rec, const CrystalContext& ctx, const SuiteConfig&) {
  const CrystalGraph& g = rec.graph();
  for (int k = 1; k <= ctx.m; ++k) {
    rec.guarded("c" + std::to_string(k) + " ~ r" + std::to_string(k), [&] {
      rec.compare({Token::cactus(k)}, {Token::r_toggle(k)});
    });
  }
  for (int k = 1; k <= ctx.m - 2; ++k) {
    rec.guarded("window cases at k=" + std::to_string(k), [&] {
      const Permutation& ck = rec.table().resolve(Token::cactus(k));
      for (std::size_t x = 0; x < g.size(); ++x) {
        Elem b = static_cast<Elem>(x);
        const RowTableau& row = ctx.model.rows[b];
        RowTableau expect = counts_to_row(window_case(window_counts(row, k)), k, row);
        rec.check(g.label(ck[x]) == expect.to_string(), rec.label(b),
                  "c{" + std::to_string(k) + "} => " + g.label(ck[x]),
                  "window case => " + expect.to_string());
        StringStats st = string_stats(g, k, b);
        bool fixed = ck[x] == b;
        rec.check(fixed == (st.phi == st.epsilon), rec.label(b),
                  std::string("c{") + std::to_string(k) + "} fixes b: " + (fixed ? "yes" : "no"),
                  "phi=" + std::to_string(st.phi) + " eps=" + std::to_string(st.epsilon));
      }
    });
  }
}

// --- commute ---------------------------------------------------------------

void suite_commute(Recorder& rec, const CrystalContext& ctx, const SuiteConfig&) {
  for (int j = 1; j <= ctx.m - 2; ++j) {
    rec.guarded("c" + std::to_string(j) + " t" + std::to_string(j), [&] {
      rec.compare({Token::cactus(j), Token::toggle(j)}, {Token::toggle(j), Token::cactus(j)});
    });
  }
}

// --- intertwine ------------------------------------------------------------

void suite_intertwine(Recorder& rec, const CrystalContext& ctx, const SuiteConfig&) {
  int m = ctx.m;
  auto t = Token::toggle;
  auto c = [](int i) { return Token::cactus(i); };
  auto f = Token::lower;
  auto e = Token::raise;
  std::vector<std::pair<GeneratorWord, GeneratorWord>> identities;
  for (int k = 1; k <= m - 2; ++k) {
    identities.push_back({{t(k), c(k + 1), f(k)}, {f(k + 1), t(k), c(k + 1)}});
    identities.push_back({{t(k), c(k + 1), e(k)}, {e(k + 1), t(k), c(k + 1)}});
    identities.push_back({{f(k), c(k + 1), t(k)}, {c(k + 1), t(k), f(k + 1)}});
    identities.push_back({{e(k), c(k + 1), t(k)}, {c(k + 1), t(k), e(k + 1)}});
    identities.push_back({{t(k + 1), c(k + 1), f(k)}, {f(k), t(k + 1), c(k + 1)}});
    identities.push_back({{t(k + 1), c(k + 1), e(k)}, {e(k), t(k + 1), c(k + 1)}});
  }
  identities.push_back({{t(m - 2), c(m), f(m - 2)}, {f(m), t(m - 2), c(m)}});
  identities.push_back({{t(m - 2), c(m), e(m - 2)}, {e(m), t(m - 2), c(m)}});
  identities.push_back({{t(m), c(m), f(m - 2)}, {f(m - 2), t(m), c(m)}});
  identities.push_back({{t(m), c(m), e(m - 2)}, {e(m - 2), t(m), c(m)}});
  for (const auto& [lhs, rhs] : identities)
    rec.guarded(word_to_string(lhs), [&] { rec.compare(lhs, rhs); });
}

// --- components ------------------------------------------------------------

void suite_components(Recorder& rec, const CrystalContext& ctx, const SuiteConfig&) {
  const CrystalGraph& g = rec.graph();
  int m = ctx.m;
  auto preserved = [&](int k, NodeSet pair) {
    rec.guarded("t" + std::to_string(k) + " on " + pair.to_string(), [&] {
      auto ids = component_ids(restrict(g, pair));
      const Permutation& t = rec.table().resolve(Token::toggle(k));
      for (std::size_t x = 0; x < g.size(); ++x) {
        rec.check(ids[x] == ids[static_cast<std::size_t>(t[x])], rec.label(static_cast<Elem>(x)),
                  "t" + std::to_string(k) + " => " + rec.label(t[x]) + " in component " +
                      std::to_string(ids[static_cast<std::size_t>(t[x])]),
                  "component " + std::to_string(ids[x]) + " of " + pair.to_string());
      }
    });
  };
  for (int k = 1; k <= m - 2; ++k) preserved(k, NodeSet{k, k + 1});
  preserved(m - 2, NodeSet{m - 2, m});

  // Highest elements of the {k,k+1} branching have window (a,0,c,c-bar,0,0)
  // with c <= c-bar; the raising path of the first window case reaches it.
  for (int k = 1; k <= m - 2; ++k) {
    rec.guarded("sl3 highest elements at k=" + std::to_string(k), [&] {
      CrystalGraph r = restrict(g, NodeSet{k, k + 1});
      for (const auto& comp : components(r)) {
        Elem h = highest_of(r, comp);
        LetterCounts w = window_counts(ctx.model.rows[h], k);
        bool ok = w.b == 0 && w.b_bar == 0 && w.a_bar == 0 && w.c <= w.c_bar;
        rec.check(ok, rec.label(h), "highest element window", "(a,0,c,c-bar,0,0), c <= c-bar");
      }
      auto raise = [&](std::optional<Elem> b, int i, int times) {
        for (int s = 0; s < times && b; ++s) b = r.e(i, *b);
        return b;
      };
      const Permutation& t = rec.table().resolve(Token::toggle(k));
      for (std::size_t x = 0; x < g.size(); ++x) {
        Elem v = static_cast<Elem>(x);
        LetterCounts w = window_counts(ctx.model.rows[v], k);
        if (!(w.a <= w.a_bar && w.b <= w.b_bar && w.c <= w.c_bar)) continue;
        auto hv = raise(raise(raise(v, k, w.a_bar), k + 1, w.a_bar + w.b_bar), k, w.b);
        auto ht = raise(raise(raise(t[x], k, w.b_bar), k + 1, w.a_bar + w.b_bar), k, w.a);
        LetterCounts expect{w.a + w.b, 0, w.c, w.a_bar + w.b_bar + w.c_bar, 0, 0};
        bool ok = hv && ht && *hv == *ht &&
                  window_counts(ctx.model.rows[*hv], k) == expect &&
                  !r.e(k, *hv) && !r.e(k + 1, *hv);
        rec.check(ok, rec.label(v), "raised v => " + rec.image(hv) + ", raised t_k v => " + rec.image(ht),
                  "common sl3 highest element");
      }
    });
  }
}

// --- typeA -----------------------------------------------------------------

void suite_type_a(Recorder& rec, const CrystalContext& ctx, const SuiteConfig&) {
  int m = ctx.m;
  for (int i = 1; i <= m - 1; ++i) {
    for (int j = i + 1; j <= m - 1; ++j) {
      rec.guarded("[" + std::to_string(i) + "," + std::to_string(j) + "]", [&] {
        std::vector<int> chain;
        for (int x = i; x <= j; ++x) chain.push_back(x);
        rec.compare(cactus_of(NodeSet::interval(i, j)), type_a_word(chain));
      });
    }
  }
  for (int i = 1; i <= m - 2; ++i) {
    rec.guarded("chain ending at the spin node " + std::to_string(m), [&] {
      std::vector<int> chain;
      NodeSet j;
      for (int x = i; x <= m - 2; ++x) chain.push_back(x);
      chain.push_back(m);
      for (int x : chain) j.insert(x);
      GeneratorWord relabeled = type_a_word(chain);
      std::string where = "J=" + j.to_string();
      if (rec.compare(cactus_of(j), relabeled)) {
        rec.note(where + ": chain-relabeled reading (" + word_to_string(relabeled) + ") holds");
        return;
      }
      std::vector<int> literal;
      for (int x = i; x <= m; ++x) literal.push_back(x);
      WordComparison l = words_equal(cactus_of(j), type_a_word(literal), rec.table());
      rec.note(where + ": chain-relabeled reading fails; literal-index reading " +
               (l.equal ? "holds" : "also fails"));
    });
  }
}

// --- typeD -----------------------------------------------------------------

void suite_type_d(Recorder& rec, const CrystalContext& ctx, const SuiteConfig& config) {
  int m = ctx.m;
  const DynkinDiagram& d = rec.graph().diagram();
  for (int j = 1; j <= m - 2; ++j) {
    NodeSet tail = NodeSet::interval(j, m);
    rec.guarded("tail " + tail.to_string(), [&] {
      WeylWord q = q_word(m, j);
      WeylWord w0 = longest_word(d, tail);
      std::size_t roots = positive_roots(d, tail).size();
      std::string qs = "q" + std::to_string(j) + " = " + word_to_string(q);
      rec.check(is_reduced(d, q), "-", qs + " reduced", "true");
      rec.check(same_element(d, q, w0), "-", qs, "w_0 of " + tail.to_string());
      rec.check(q.size() == roots, "-", "length " + std::to_string(q.size()),
                std::to_string(roots) + " positive roots");
      rec.compare(cactus_of(tail), single_cactus_word(q));

      std::vector<WeylWord> alternates = braid_alternates(d, q, config.alternates_budget);
      rec.check(alternates.size() >= config.alternates_budget, "-",
                std::to_string(alternates.size()) + " reduced words found",
                std::to_string(config.alternates_budget) + " requested");
      for (const WeylWord& w : alternates) {
        if (w == q) continue;
        rec.check(is_reduced(d, w) && same_element(d, w, w0), "-", word_to_string(w),
                  "reduced word for w_0 of " + tail.to_string());
        rec.compare(cactus_of(tail), single_cactus_word(w));
      }
    });
  }
}

// --- corollary -------------------------------------------------------------

void suite_corollary(Recorder& rec, const CrystalContext& ctx, const SuiteConfig&) {
  int m = ctx.m;
  auto small_only = [](const GeneratorWord& w) {
    return std::all_of(w.begin(), w.end(), [](const Token& t) {
      return t.kind == Token::Kind::Cactus && t.nodes.size() <= 2;
    });
  };
  auto decompose = [&](NodeSet j, const GeneratorWord& word) {
    rec.guarded("c" + j.to_string(), [&] {
      rec.check(small_only(word), "-", word_to_string(word), "word in c of length 1 and 2");
      rec.compare(cactus_of(j), word);
    });
  };

  for (int k = 1; k <= m; ++k) {
    rec.guarded("t" + std::to_string(k), [&] {
      rec.compare({Token::toggle(k)}, eliminate_toggles({Token::toggle(k)}, m));
    });
  }
  for (int j = 1; j <= m - 1; ++j) {
    std::vector<int> chain;
    for (int x = 1; x <= j; ++x) chain.push_back(x);
    decompose(NodeSet::interval(1, j), eliminate_toggles(type_a_word(chain), m));
  }
  for (int j = 1; j <= m - 2; ++j) decompose(NodeSet::interval(j, m), single_cactus_word(q_word(m, j)));
  if (m % 2 == 0) {
    std::vector<int> chain;
    for (int x = 1; x <= m - 2; ++x) chain.push_back(x);
    chain.push_back(m);
    NodeSet j = NodeSet::interval(1, m - 2);
    j.insert(m);
    decompose(j, eliminate_toggles(type_a_word(chain), m));
  }
}

using SuiteFn = void (*)(Recorder&, const CrystalContext&, const SuiteConfig&);

SuiteFn suite_fn(const std::string& name) {
  static const std::map<std::string, SuiteFn> table = {
      {"axioms", suite_axioms},         {"relations", suite_relations},
      {"models", suite_models},         {"toggle_weight", suite_toggle_weight},
      {"single_node", suite_single_node}, {"commute", suite_commute},
      {"intertwine", suite_intertwine}, {"components", suite_components},
      {"typeA", suite_type_a},          {"typeD", suite_type_d},
      {"corollary", suite_corollary},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const CrystalContext& ctx, const SuiteConfig& config) {
  SuiteFn fn = suite_fn(name);
  SuiteResult result;
  result.suite = name;
  result.anchor = suite_anchor(name);
  result.m = ctx.m;
  result.n = ctx.n;
  auto start = std::chrono::steady_clock::now();
  Recorder rec(result, ctx);
  rec.guarded(name, [&] { fn(rec, ctx, config); });
  result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return result;
}

VerificationReport run_all(const SuiteConfig& config) {
  for (const std::string& s : config.suites)
    if (!is_suite_name(s)) throw std::invalid_argument("unknown suite '" + s + "'");
  for (int m : config.ranks)
    if (m < 3) throw std::invalid_argument("rank must be at least 3");
  for (int n : config.heights)
    if (n < 0) throw std::invalid_argument("height must be nonnegative");

  VerificationReport report;
  // Canonical order, duplicates dropped.
  std::vector<std::string> suites;
  for (const std::string& s : suite_names())
    if (std::find(config.suites.begin(), config.suites.end(), s) != config.suites.end())
      suites.push_back(s);
  if (suites.empty()) return report;

  std::vector<CrystalContext> contexts;
  for (int m : config.ranks)
    for (int n : config.heights) contexts.push_back(make_context(m, n, config.inject_fault));

  struct Task {
    std::size_t suite, context;
  };
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < suites.size(); ++s)
    for (std::size_t c = 0; c < contexts.size(); ++c) tasks.push_back({s, c});

  std::vector<SuiteResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++)
      results[t] = run_suite(suites[tasks[t].suite], contexts[tasks[t].context], config);
  };
  std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, tasks.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  auto join = [](const std::vector<int>& xs) {
    std::string out;
    for (int x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
    return "{" + out + "}";
  };
  report.notes.push_back("checked exhaustively for m in " + join(config.ranks) + " and n in " +
                         join(config.heights) + " only");
  if (config.inject_fault) report.notes.push_back("fault injected: t1 maps element 0 like element 1");
  for (SuiteResult& r : results) {
    for (const std::string& note : r.notes)
      report.notes.push_back(r.suite + " m=" + std::to_string(r.m) + " n=" + std::to_string(r.n) +
                             ": " + note);
    report.sections.push_back(std::move(r));
  }
  return report;
}

}  // namespace dcactus
