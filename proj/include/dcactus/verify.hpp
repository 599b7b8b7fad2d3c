#pragma once

// Exhaustive verification suites over ranges of (m, n).

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcactus/cactus.hpp"
#include "dcactus/crystal.hpp"
#include "dcactus/tableau.hpp"

namespace dcactus {

// Canonical suite order.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);
std::string suite_anchor(const std::string& name);

struct SuiteConfig {
  std::vector<int> ranks{4, 5};
  std::vector<int> heights{1, 2, 3};
  std::vector<std::string> suites = suite_names();
  std::size_t alternates_budget = 4;  // reduced words per J, including q_j
  std::uint64_t seed = 1;
  int random_paths = 10;
  bool inject_fault = false;
  bool timing = true;
};

struct Failure {
  std::string element, lhs, rhs;
};

struct SuiteResult {
  std::string suite, anchor;
  int m = 0, n = 0;
  std::size_t cases = 0;
  std::vector<Failure> failures;  // first kMaxFailures only
  std::size_t failure_count = 0;
  std::int64_t millis = 0;
  std::vector<std::string> notes;

  static constexpr std::size_t kMaxFailures = 16;
  bool passed() const { return failure_count == 0; }
  nlohmann::json to_json(bool timing) const;
};

struct VerificationReport {
  std::vector<SuiteResult> sections;
  std::vector<std::string> notes;
  bool passed() const;
  nlohmann::json to_json(bool timing = true) const;
  std::string summary() const;
};

// One crystal B(n varpi_1) with its action table. The table's graph and
// toggles may differ from the model's (fault injection).
struct CrystalContext {
  int m = 0, n = 0;
  RowModel model;
  ActionTable table;
};

CrystalContext make_context(int m, int n, bool inject_fault = false);
CrystalContext make_context(RowModel model, CrystalGraph graph, std::vector<Permutation> toggles);

// Unknown names throw std::invalid_argument; exceptions inside a suite are
// reported as failures.
SuiteResult run_suite(const std::string& name, const CrystalContext& ctx, const SuiteConfig& config);
VerificationReport run_all(const SuiteConfig& config);

// Words used by the suites, exposed for testing.
// (c_v t_u ... t_{v_1})(c_v t_u ... t_{v_2}) ... (c_v t_u) c_v along the chain
// v_1, ..., u, v.
GeneratorWord type_a_word(const std::vector<int>& chain);
WeylWord p_word(int m, int i);
WeylWord q_word(int m, int j);
// t_{m-1} -> c_{m-1}, t_m -> c_m, t_k -> c_{k+1} c_{k,k+1} c_{k+1}.
GeneratorWord eliminate_toggles(const GeneratorWord& word, int m);

}  // namespace dcactus
