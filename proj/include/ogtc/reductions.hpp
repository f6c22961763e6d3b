#pragma once

// Reduction adapters that carry optimal recombination from one problem to
// another: set packing via conflict graphs, set partition and plant
// location via penalty objectives, a two-entries-per-row knapsack fast
// path, and set-covering restriction plus the column-doubling gadget.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ogtc/core.hpp"
#include "ogtc/graph.hpp"

namespace ogtc {

enum class CoordMode { copy, negate, constant };

struct CoordMap {
  CoordMode mode = CoordMode::constant;
  int target = -1;  // target coordinate for copy/negate
};

using CrossoverFn = std::function<CrossoverResult(const Genotype&, const Genotype&)>;

/// Transport between a source problem and a target problem whose optimal
/// recombination is already solved. `beta` maps source solutions to target
/// solutions coordinate by coordinate (each source coordinate is copied,
/// negated, or constant on the solution set), which is exactly what makes
/// gene transmission survive the round trip.
struct ReductionAdapter {
  std::string label;
  std::function<Genotype(const Genotype&)> beta;
  std::function<Genotype(const Genotype&)> beta_inverse;
  std::vector<CoordMap> coord_map;  // indexed by source coordinate
  std::function<bool(const Genotype&)> source_feasible;
  std::function<Int(const Genotype&)> source_value;
  Sense source_sense = Sense::maximize;
};

/// Identity adapter over an instance; useful as a compose_ogtc building
/// block and in tests.
ReductionAdapter identity_adapter(const BlpInstance& inst, std::string label = "identity");

/// Lifts a target-problem crossover to the source problem:
/// p1, p2 -> beta_inverse(target(beta(p1), beta(p2))). The mapped offspring
/// is checked for source feasibility and gene transmission.
CrossoverFn compose_ogtc(ReductionAdapter adapter, CrossoverFn target_ogtc);

/// Conflict graph of a set-packing instance: one vertex per column with
/// weight c_j, an edge whenever two columns share a constraint row.
/// Packings of the instance are exactly the independent sets.
WeightedGraph conflict_graph(const BlpInstance& packing);

/// Optimal recombination for maximum-weight set packing (rows of ones,
/// right-hand side one, at-most semantics).
CrossoverResult ogtc_set_packing(const BlpInstance& packing, const Genotype& p1,
                                 const Genotype& p2);

/// Penalty form of a minimum-weight set partition instance: a maximization
/// packing instance whose per-column weight lambda * (rows covered) - c_j
/// makes covering every row dominate any objective difference. Returns the
/// packing instance and the identity adapter back to the partition problem.
std::pair<BlpInstance, ReductionAdapter> partition_to_packing(const BlpInstance& partition);

/// Optimal recombination for minimum-weight set partition (rows of ones,
/// equality semantics). The offspring always satisfies every equality row.
CrossoverResult ogtc_set_partition(const BlpInstance& partition, const Genotype& p1,
                                   const Genotype& p2);

/// Uncapacitated facility location data: open facilities at cost C_k,
/// serve every client through exactly one open facility at cost c_kl.
/// Genotypes are the flattened pair (x, y): row-major x_kl first, then y_k.
struct SplpInstance {
  SplpInstance(std::vector<Int> opening_costs, std::vector<std::vector<Int>> assignment_costs);

  int facility_count() const noexcept { return static_cast<int>(opening_costs.size()); }
  int client_count() const noexcept { return clients_; }
  int var_count() const noexcept { return facility_count() * client_count() + facility_count(); }
  int x_index(int k, int l) const noexcept { return k * client_count() + l; }
  int y_index(int k) const noexcept { return facility_count() * client_count() + k; }

  std::vector<Int> opening_costs;                  // C_k
  std::vector<std::vector<Int>> assignment_costs;  // c[k][l]

 private:
  int clients_ = 0;
};

bool splp_feasible(const SplpInstance& s, const Genotype& xy);
Int splp_value(const SplpInstance& s, const Genotype& xy);

/// Boolean-program encoding of the facility location constraints; used for
/// oracle cross-checks.
BlpInstance splp_as_blp(const SplpInstance& s);

/// Packing form of a facility location instance: maximize
/// sum (lambda - c_kl) x_kl + sum C_k (1 - y_k) under at-most-one rows,
/// with lambda one more than the cheapest way to serve the worst client.
/// beta copies every x_kl and negates every y_k.
std::pair<BlpInstance, ReductionAdapter> splp_to_packing(const SplpInstance& s);

/// Optimal recombination for facility location with (x, y) genotypes.
CrossoverResult ogtc_splp(const SplpInstance& s, const Genotype& p1, const Genotype& p2);

/// Fast path for nonnegative-coefficient "knapsack" instances whose rows
/// touch at most two differing coordinates: every violating combination is
/// then a cross pair and one bipartite flow solves the crossover. Returns
/// nullopt when the structure does not apply.
std::optional<CrossoverResult> ogtc_knapsack_fastpath(const BlpInstance& inst,
                                                      const Genotype& p1, const Genotype& p2);

/// Residual set-covering problem once coordinates shared by both parents
/// are fixed: rows already covered by the fixed ones disappear and only the
/// differing columns remain free.
struct ScpRestriction {
  BlpInstance residual;
  std::vector<int> free_columns;  // ascending source columns
  Genotype base;                  // fixed coordinates, free positions zero

  Genotype expand(const Genotype& residual_solution) const;
};

ScpRestriction restrict_set_covering(const BlpInstance& covering, const Genotype& p1,
                                     const Genotype& p2);

/// Exact set-covering recombination by branch and bound over the residual
/// problem. Exponential in the diff-set size, hence the cap.
CrossoverResult ogtc_set_covering_exact(const BlpInstance& covering, const Genotype& p1,
                                        const Genotype& p2, int diff_cap = kDefaultOracleDiffCap);

/// Column-doubling construction: duplicating every column with parents
/// "all originals" and "all copies" turns plain set covering into a
/// recombination problem over the doubled instance.
struct DoubledCovering {
  BlpInstance instance;
  Genotype p1;
  Genotype p2;
};

DoubledCovering double_columns(const BlpInstance& covering);

}  // namespace ogtc
