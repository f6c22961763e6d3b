#pragma once

// Seeded property suites checking every crossover path against independent
// reference solvers, plus those reference solvers themselves (exhaustive
// enumeration only, deliberately separate from the flow and reduction
// code they validate). Shared by the selftest command and the acceptance
// runner.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ogtc/core.hpp"
#include "ogtc/flow.hpp"
#include "ogtc/graph.hpp"
#include "ogtc/io.hpp"

namespace ogtc::selftest {

// --- reference solvers (subset enumeration) --------------------------------

/// Maximum-weight independent set by trying all vertex subsets; n <= 24.
std::pair<Genotype, Int> exhaustive_mwis(const WeightedGraph& g);

/// Size of a maximum independent set, unit weights.
int independence_number(const WeightedGraph& g);

/// Minimum s-t cut capacity by enumerating all source-side subsets.
Int exhaustive_min_cut(const FlowNetwork& net);

/// Optimal set-covering value by trying all column subsets; n <= 20.
Int exhaustive_covering_optimum(const BlpInstance& covering);

/// Random Boolean program with mixed row senses built around two planted
/// feasible parents; every row touches at most `max_support` columns.
struct MixedBlp {
  BlpInstance instance;
  Genotype p1;
  Genotype p2;
};
MixedBlp random_mixed_blp(int max_vars, int max_rows, int max_support, Sense sense,
                          std::mt19937_64& rng);

// --- suites -----------------------------------------------------------------

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;             // value disagreements, thrown invariants
  int structural_failures = 0;  // gene transmission / feasibility violations
  std::uint64_t digest = 0;     // order-sensitive hash of all outputs
  std::vector<std::string> notes;

  bool passed() const { return failures == 0 && structural_failures == 0; }
};

SuiteResult graph_oracle_suite(int trials, std::uint64_t seed);
SuiteResult packing_oracle_suite(int trials, std::uint64_t seed);
SuiteResult partition_oracle_suite(int trials, std::uint64_t seed);
SuiteResult splp_oracle_suite(int trials, std::uint64_t seed);
SuiteResult knapsack_oracle_suite(int trials, std::uint64_t seed);
SuiteResult hypergraph_identity_suite(int trials, std::uint64_t seed);
SuiteResult flow_duality_suite(int networks, std::uint64_t seed);
SuiteResult maxsat_identity_suite(int trials, std::uint64_t seed);
SuiteResult gadget_suite(int trials, std::uint64_t seed);
SuiteResult covering_suite(int random_trials, int doubled_trials, std::uint64_t seed);

struct Scale {
  int divisor = 1;  // full counts divided by this, floored at 10
};

/// Runs every suite at the acceptance trial counts divided by
/// scale.divisor, streaming one line per suite to `log` when given.
std::vector<SuiteResult> run_all_suites(const Scale& scale, std::ostream* log);

}  // namespace ogtc::selftest
