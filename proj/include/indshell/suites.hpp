#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "indshell/constructions.hpp"
#include "indshell/execution.hpp"

namespace indshell {

inline constexpr const char* kVersion = "indshell 0.1.0";

/// Knobs shared by every suite. Negative values select the suite default.
struct SuiteOptions {
  std::uint64_t seed = 1;
  int samples = -1;
  int max_n = -1;
  std::uint64_t budget = kDefaultBudget;
  /// Directory for certificate files; empty keeps certificates in the report only.
  std::string out_dir;
  /// tree-lower: also probe r >= (largest component) - 5, reported separately.
  bool per_component = false;
  /// she-higher: also run the full search on ind_r(G) (reported, not asserted).
  bool full_search = false;
  int r = -1;
  int t = -1;
  int n = -1;
};

/// One graph instance a suite checks.
struct SuiteInstance {
  std::string name;
  LabeledGraph graph;
  int r = 0;
};

struct RunReport {
  std::string suite;
  std::string expectation;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  int instances = 0;
  int pass = 0;
  int fail = 0;
  int unknown = 0;
  /// Certificates of failures (and of the expected refutations); file paths
  /// when an output directory was given, inline JSON otherwise.
  std::vector<std::string> certificates;
  /// Shelling engine vs permutation oracle on complexes with <= 8 facets.
  int oracle_checked = 0;
  int oracle_disagreements = 0;
  /// Implication chain: w-chordal => every contraction simplicial => shellable.
  int chain_checked = 0;
  int chain_violations = 0;
  /// Named exact checks (counterexample reproductions).
  std::map<std::string, bool> checks;
  /// Observations reported but not asserted.
  std::vector<std::string> notes;
  std::string version = kVersion;

  bool ok() const;
  std::string to_json() const;
};

struct SuiteInfo {
  std::string id;
  std::string expectation;
  std::string summary;
};

const std::vector<SuiteInfo>& registered_suites();

/// Instances a shellability suite draws (empty for the special suites).
std::vector<SuiteInstance> suite_instances(const std::string& id, const SuiteOptions& options);

/// Throws UnknownSuite for an unregistered id.
RunReport run_suite(const std::string& id, const SuiteOptions& options);

}  // namespace indshell
