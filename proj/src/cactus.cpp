#include "dcactus/cactus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <thread>

#include "dcactus/tableau.hpp"

namespace dcactus {

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }

  int number() {
    std::size_t start = pos;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("expected a node number", start);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }
};

int checked_node(const DynkinDiagram& diagram, int i, std::size_t at) {
  if (i < 1 || i > diagram.rank())
    throw ParseError("node " + std::to_string(i) + " outside " + diagram.name(), at);
  return i;
}

}  // namespace

GeneratorWord parse_word(const DynkinDiagram& diagram, std::string_view text) {
  GeneratorWord word;
  Scanner s{text};
  for (s.skip_spaces(); !s.done(); s.skip_spaces()) {
    std::size_t start = s.pos;
    char kind = text[s.pos++];
    if (kind == 'c' && s.pos < text.size() && text[s.pos] == '{') {
      ++s.pos;
      NodeSet j;
      for (;;) {
        s.skip_spaces();
        std::size_t at = s.pos;
        j.insert(checked_node(diagram, s.number(), at));
        s.skip_spaces();
        if (s.done()) throw ParseError("unterminated c{...}", start);
        if (text[s.pos] == '}') {
          ++s.pos;
          break;
        }
        if (text[s.pos] != ',') throw ParseError("expected ',' or '}'", s.pos);
        ++s.pos;
      }
      if (!diagram.is_connected(j))
        throw ParseError("subdiagram " + j.to_string() + " is not connected", start);
      word.push_back(GeneratorToken::cactus(j));
    } else if (kind == 'c' || kind == 't' || kind == 'r' || kind == 'f' || kind == 'e') {
      std::size_t at = s.pos;
      int i = checked_node(diagram, s.number(), at);
      switch (kind) {
        case 'c': word.push_back(GeneratorToken::cactus(i)); break;
        case 't': word.push_back(GeneratorToken::toggle(i)); break;
        case 'r': word.push_back(GeneratorToken::r_toggle(i)); break;
        case 'f': word.push_back(GeneratorToken::lower(i)); break;
        default: word.push_back(GeneratorToken::raise(i)); break;
      }
    } else {
      throw ParseError(std::string("unknown token '") + kind + "'", start);
    }
    if (!s.done() && !std::isspace(static_cast<unsigned char>(text[s.pos])))
      throw ParseError("tokens must be separated by spaces", s.pos);
  }
  return word;
}

std::string word_to_string(const GeneratorWord& word) {
  std::string out;
  for (const GeneratorToken& t : word) {
    if (!out.empty()) out += ' ';
    switch (t.kind) {
      case GeneratorToken::Kind::Cactus: out += "c" + t.nodes.to_string(); break;
      case GeneratorToken::Kind::Toggle: out += "t" + std::to_string(t.node); break;
      case GeneratorToken::Kind::RToggle: out += "r" + std::to_string(t.node); break;
      case GeneratorToken::Kind::Lower: out += "f" + std::to_string(t.node); break;
      case GeneratorToken::Kind::Raise: out += "e" + std::to_string(t.node); break;
    }
  }
  return out;
}

GeneratorWord concat(std::initializer_list<GeneratorWord> parts) {
  GeneratorWord out;
  for (const GeneratorWord& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

GeneratorWord single_cactus_word(const WeylWord& word) {
  GeneratorWord out;
  for (int i : word) out.push_back(GeneratorToken::cactus(i));
  return out;
}

GeneratorWord r_word(int m, int k) {
  if (k < 1 || k > m) throw std::out_of_range("r_" + std::to_string(k));
  if (k >= m - 1) return {GeneratorToken::toggle(k)};
  GeneratorWord inner = r_word(m, k + 1);
  GeneratorWord t{GeneratorToken::toggle(k)};
  return concat({inner, t, inner, t, inner});
}

// ---------------------------------------------------------------------------

Elem xi_along(const CrystalGraph& restricted, NodeSet j, Elem b, std::span<const int> path) {
  std::vector<int> th = theta(restricted.diagram(), j);
  auto comps = components(restricted);
  auto ids = component_ids(restricted);
  Elem low = lowest_of(restricted, comps[ids[static_cast<std::size_t>(b)]]);
  Elem x = low;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto up = restricted.e(th[static_cast<std::size_t>(*it)], x);
    if (!up) throw std::logic_error("xi: raising step from the lowest element is zero");
    x = *up;
  }
  return x;
}

Elem xi(const CrystalGraph& graph, NodeSet j, Elem b) {
  CrystalGraph r = restrict(graph, j);
  std::vector<int> path = raising_path(r, b);
  return xi_along(r, j, b, path);
}

std::vector<int> random_raising_path(const CrystalGraph& restricted, Elem b, std::mt19937_64& rng) {
  std::vector<int> path;
  for (;;) {
    std::vector<int> options;
    for (int i : restricted.index_set().members())
      if (restricted.e(i, b)) options.push_back(i);
    if (options.empty()) return path;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    int i = options[pick(rng)];
    path.push_back(i);
    b = *restricted.e(i, b);
  }
}

Permutation cactus_perm(const CrystalGraph& graph, NodeSet j) {
  if (j.empty() || !graph.diagram().is_connected(j))
    throw std::invalid_argument("cactus generator needs a connected subdiagram, got " +
                                j.to_string());
  CrystalGraph r = restrict(graph, j);
  std::vector<int> th = theta(graph.diagram(), j);
  auto comps = components(r);
  auto ids = component_ids(r);
  std::vector<Elem> lows;
  lows.reserve(comps.size());
  for (const auto& c : comps) lows.push_back(lowest_of(r, c));

  Permutation out(graph.size(), kNoElem);
  for (std::size_t b = 0; b < graph.size(); ++b) {
    std::vector<int> path = raising_path(r, static_cast<Elem>(b));
    Elem x = lows[ids[b]];
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      auto up = r.e(th[static_cast<std::size_t>(*it)], x);
      if (!up) throw std::logic_error("xi: raising step from the lowest element is zero");
      x = *up;
    }
    out[b] = x;
  }
  return out;
}

// ---------------------------------------------------------------------------

ActionTable::ActionTable(CrystalGraph graph, std::vector<Permutation> toggles)
    : graph_(std::move(graph)), toggles_(std::move(toggles)) {
  std::size_t rows = static_cast<std::size_t>(graph_.diagram().rank()) + 1;
  if (toggles_.size() != rows) throw std::invalid_argument("one toggle per node expected");
  for (std::size_t i = 1; i < rows; ++i)
    if (toggles_[i].size() != graph_.size())
      throw std::invalid_argument("toggle table has wrong length");
  lower_.assign(rows, std::vector<Elem>(graph_.size(), kNoElem));
  raise_ = lower_;
  for (int i = 1; i < static_cast<int>(rows); ++i) {
    for (std::size_t b = 0; b < graph_.size(); ++b) {
      if (auto t = graph_.f(i, static_cast<Elem>(b))) lower_[i][b] = *t;
      if (auto t = graph_.e(i, static_cast<Elem>(b))) raise_[i][b] = *t;
    }
  }
}

const std::vector<Elem>& ActionTable::resolve(const GeneratorToken& token) const {
  int m = graph_.diagram().rank();
  auto node = [&](int i) {
    if (i < 1 || i > m) throw std::out_of_range("token node " + std::to_string(i));
    return static_cast<std::size_t>(i);
  };
  switch (token.kind) {
    case GeneratorToken::Kind::Toggle: return toggles_[node(token.node)];
    case GeneratorToken::Kind::Lower: return lower_[node(token.node)];
    case GeneratorToken::Kind::Raise: return raise_[node(token.node)];
    case GeneratorToken::Kind::Cactus: {
      std::lock_guard lock(*mutex_);
      auto it = cactus_.find(token.nodes);
      if (it == cactus_.end()) it = cactus_.emplace(token.nodes, cactus_perm(graph_, token.nodes)).first;
      return it->second;
    }
    case GeneratorToken::Kind::RToggle: {
      node(token.node);
      GeneratorWord w = r_word(m, token.node);
      std::lock_guard lock(*mutex_);
      auto it = r_.find(token.node);
      if (it == r_.end()) {
        Permutation p(graph_.size());
        for (std::size_t b = 0; b < p.size(); ++b) {
          Elem x = static_cast<Elem>(b);
          for (auto t = w.rbegin(); t != w.rend(); ++t) x = toggles_[t->node][x];
          p[b] = x;
        }
        it = r_.emplace(token.node, std::move(p)).first;
      }
      return it->second;
    }
  }
  throw std::logic_error("unknown token kind");
}

namespace {

std::vector<const std::vector<Elem>*> resolve_all(const GeneratorWord& word,
                                                  const ActionTable& table) {
  std::vector<const std::vector<Elem>*> out;
  out.reserve(word.size());
  for (const GeneratorToken& t : word) out.push_back(&table.resolve(t));
  return out;
}

std::optional<Elem> run(const std::vector<const std::vector<Elem>*>& tables, Elem b) {
  for (auto it = tables.rbegin(); it != tables.rend(); ++it) {
    b = (**it)[static_cast<std::size_t>(b)];
    if (b == kNoElem) return std::nullopt;
  }
  return b;
}

}  // namespace

std::optional<Elem> evaluate(const GeneratorWord& word, const ActionTable& table, Elem b) {
  if (b < 0 || static_cast<std::size_t>(b) >= table.size())
    throw std::out_of_range("element " + std::to_string(b) + " outside crystal");
  return run(resolve_all(word, table), b);
}

WordComparison words_equal(const GeneratorWord& lhs, const GeneratorWord& rhs,
                           const ActionTable& table) {
  auto lt = resolve_all(lhs, table);
  auto rt = resolve_all(rhs, table);
  std::size_t n = table.size();
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, n / 256));
  std::vector<Elem> first_bad(workers, kNoElem);

  auto scan = [&](std::size_t w) {
    std::size_t lo = n * w / workers, hi = n * (w + 1) / workers;
    for (std::size_t b = lo; b < hi; ++b) {
      if (run(lt, static_cast<Elem>(b)) != run(rt, static_cast<Elem>(b))) {
        first_bad[w] = static_cast<Elem>(b);
        return;
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }

  WordComparison out;
  out.cases = n;
  for (Elem b : first_bad) {
    if (b == kNoElem) continue;
    out.equal = false;
    out.element = b;
    out.lhs = run(lt, b);
    out.rhs = run(rt, b);
    break;
  }
  return out;
}

std::string image_to_string(const CrystalGraph& graph, std::optional<Elem> b) {
  return b ? graph.label(*b) : "0";
}

}  // namespace dcactus
