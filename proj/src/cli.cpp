#include "dcactus/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>

#include "dcactus/cactus.hpp"
#include "dcactus/heap.hpp"
#include "dcactus/tableau.hpp"
#include "dcactus/verify.hpp"

namespace dcactus {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedModel {
  std::string kind;
  CrystalGraph graph;
  std::vector<Permutation> toggles;
  std::vector<nlohmann::json> json_items;
  std::function<Elem(const std::string&)> parse;
};

LoadedModel load_model(const std::string& kind, int m, int n) {
  if (m < 3) throw UsageError("--rank must be at least 3");
  if (n < 0) throw UsageError("--height must be nonnegative");
  if (kind == "row") {
    auto model = std::make_shared<RowModel>(make_row_model(m, n));
    LoadedModel out{kind, model->graph, model->toggles, {}, {}};
    for (const RowTableau& r : model->rows.items()) {
      nlohmann::json entries = nlohmann::json::array();
      for (Letter x : r.entries()) entries.push_back(x.value);
      out.json_items.push_back(entries);
    }
    out.parse = [model, m, n](const std::string& text) {
      RowTableau row = RowTableau::parse(m, text);
      if (static_cast<int>(row.height()) != n)
        throw UsageError("element has " + std::to_string(row.height()) + " boxes, expected " +
                         std::to_string(n));
      return model->rows.require(row);
    };
    return out;
  }
  auto model = std::make_shared<RppModel>(make_rpp_model(m, n));
  LoadedModel out{kind, model->graph, model->toggles, {}, {}};
  for (const Rpp& r : model->rpps.items()) out.json_items.push_back(rpp_to_json(model->heap, r));
  out.parse = [model, n](const std::string& text) {
    return model->rpps.require(parse_rpp(model->heap, n, text));
  };
  return out;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(pos, end - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UsageError(flag + ": expected a comma separated list of integers, got '" + text + "'");
    }
    pos = end + 1;
  }
  return out;
}

SuiteConfig config_from_json(const nlohmann::json& j) {
  SuiteConfig c;
  auto ints = [](const nlohmann::json& v) {
    return v.is_array() ? v.get<std::vector<int>>() : std::vector<int>{v.get<int>()};
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "rank" || key == "ranks") c.ranks = ints(value);
    else if (key == "height" || key == "heights") c.heights = ints(value);
    else if (key == "suite" || key == "suites") c.suites = value.get<std::vector<std::string>>();
    else if (key == "alternates") c.alternates_budget = value.get<std::size_t>();
    else if (key == "seed") c.seed = value.get<std::uint64_t>();
    else if (key == "fault") c.inject_fault = value.get<bool>();
    else if (key == "timing") c.timing = value.get<bool>();
    else throw UsageError("unknown config key '" + key + "'");
  }
  return c;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Type D crystals, toggles and the cactus group action", "dcactus"};
  app.require_subcommand(1);

  int m = 4, n = 1;
  std::string model = "row", word, element, out_path, format;

  auto add_shape = [&](CLI::App* sub) {
    sub->add_option("-m,--rank", m, "rank of D_m")->capture_default_str();
    sub->add_option("-n,--height", n, "height n of B(n varpi_1)")->capture_default_str();
    sub->add_option("--model", model, "element model")
        ->check(CLI::IsMember({"row", "rpp"}))
        ->capture_default_str();
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list every element with its weight");
  add_shape(enumerate);
  enumerate->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  enumerate->add_option("--out", out_path, "output file");

  CLI::App* act = app.add_subcommand("act", "apply a generator word to one element");
  add_shape(act);
  act->add_option("--word", word, "tokens such as \"c{2,3} t1 r2 f3 e1\", rightmost first")
      ->required();
  act->add_option("--element", element, "element text, e.g. \"1,2,-3\"")->required();

  CLI::App* orbit = app.add_subcommand("orbit", "iterate a word until it returns to the start");
  add_shape(orbit);
  orbit->add_option("--word", word, "generator word")->required();
  orbit->add_option("--element", element, "starting element")->required();

  CLI::App* dot = app.add_subcommand("export-dot", "write the crystal graph in DOT format");
  add_shape(dot);
  dot->add_option("--out", out_path, "output file");
  dot->add_option("--format", format, "dot")->check(CLI::IsMember({"dot"}));

  std::string ranks_text, heights_text, config_path;
  std::vector<std::string> suites;
  std::size_t alternates = 4;
  std::uint64_t seed = 1;
  bool fault = false, no_timing = false;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("-m,--rank", ranks_text, "ranks, comma separated (default 4,5)");
  verify->add_option("-n,--height", heights_text, "heights, comma separated (default 1,2,3)");
  verify->add_option("--suite", suites, "suite to run; repeatable (default all)")->take_all();
  verify->add_option("--alternates", alternates, "reduced words per type D subdiagram");
  verify->add_option("--seed", seed, "seed for random raising paths");
  verify->add_option("--out", out_path, "write the JSON report here");
  verify->add_option("--format", format, "stdout format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--config", config_path, "JSON file with the same keys as the flags");
  verify->add_flag("--fault", fault, "corrupt one toggle entry (harness check)");
  verify->add_flag("--no-timing", no_timing, "report 0 ms so reports are reproducible");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (enumerate->parsed()) {
      LoadedModel lm = load_model(model, m, n);
      std::string text;
      if (format == "json") {
        nlohmann::json j = {{"m", m}, {"n", n}, {"model", model}, {"count", lm.graph.size()},
                            {"elements", nlohmann::json::array()}};
        for (std::size_t b = 0; b < lm.graph.size(); ++b) {
          Elem e = static_cast<Elem>(b);
          j["elements"].push_back({{"element", lm.graph.label(e)},
                                   {"value", lm.json_items[b]},
                                   {"weight", lm.graph.weight(e).coords()}});
        }
        text = j.dump(2) + "\n";
      } else {
        for (std::size_t b = 0; b < lm.graph.size(); ++b) {
          Elem e = static_cast<Elem>(b);
          text += lm.graph.label(e) + "\t" + lm.graph.weight(e).to_string() + "\n";
        }
        text += "count " + std::to_string(lm.graph.size()) + "\n";
      }
      write_output(out_path, text, out);
      return 0;
    }

    if (act->parsed() || orbit->parsed()) {
      LoadedModel lm = load_model(model, m, n);
      GeneratorWord w = parse_word(lm.graph.diagram(), word);
      Elem start = lm.parse(element);
      ActionTable table(lm.graph, lm.toggles);
      if (act->parsed()) {
        out << image_to_string(table.graph(), evaluate(w, table, start)) << '\n';
        return 0;
      }
      std::optional<Elem> x = start;
      std::size_t steps = 0;
      out << table.graph().label(start) << '\n';
      do {
        x = evaluate(w, table, *x);
        ++steps;
        if (!x) {
          out << "0\nreaches 0 after " << steps << " steps\n";
          return 0;
        }
        if (*x != start) out << table.graph().label(*x) << '\n';
      } while (*x != start && steps <= table.size());
      if (*x != start) {
        out << "no return within " << table.size() << " steps\n";
        return 0;
      }
      out << "orbit length " << steps << '\n';
      return 0;
    }

    if (dot->parsed()) {
      LoadedModel lm = load_model(model, m, n);
      write_output(out_path, to_dot(lm.graph), out);
      return 0;
    }

    SuiteConfig config;
    if (!config_path.empty()) {
      std::ifstream file(config_path);
      if (!file) throw UsageError("cannot read " + config_path);
      try {
        config = config_from_json(nlohmann::json::parse(file));
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(config_path + ": " + e.what());
      }
    }
    if (verify->count("--rank")) config.ranks = parse_int_list(ranks_text, "--rank");
    if (verify->count("--height")) config.heights = parse_int_list(heights_text, "--height");
    if (verify->count("--suite")) config.suites = suites;
    if (verify->count("--alternates")) config.alternates_budget = alternates;
    if (verify->count("--seed")) config.seed = seed;
    if (fault) config.inject_fault = true;
    if (no_timing) config.timing = false;
    for (const std::string& s : config.suites)
      if (!is_suite_name(s)) throw UsageError("unknown suite '" + s + "'");

    VerificationReport report = run_all(config);
    std::string json = report.to_json(config.timing).dump(2) + "\n";
    if (!out_path.empty()) write_output(out_path, json, out);
    out << (format == "json" ? json : report.summary());
    return report.passed() ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace dcactus
