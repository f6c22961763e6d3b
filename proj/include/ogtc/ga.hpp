#pragma once

// Steady-state genetic algorithm used to exercise the optimized crossover
// operators against a uniform-crossover baseline. One run is fully
// determined by (problem, config); randomness flows only from the seed.

#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "ogtc/core.hpp"
#include "ogtc/graph.hpp"
#include "ogtc/maxsat.hpp"
#include "ogtc/reductions.hpp"

namespace ogtc {

/// A problem the harness can optimize: feasible sampling, evaluation and an
/// optimized crossover operator.
class GaProblem {
 public:
  virtual ~GaProblem() = default;
  virtual std::string name() const = 0;
  virtual int genotype_length() const = 0;
  virtual Sense sense() const = 0;
  virtual Int value(const Genotype& x) const = 0;
  virtual bool feasible(const Genotype& x) const = 0;
  virtual Genotype sample(std::mt19937_64& rng) const = 0;
  virtual CrossoverResult crossover(const Genotype& p1, const Genotype& p2) const = 0;
};

enum class CrossoverKind { optimized, uniform };

struct GaConfig {
  int population_size = 20;
  int generations = 200;
  CrossoverKind crossover = CrossoverKind::optimized;
  double mutation_rate = 0.0;  // per-bit flip probability; infeasible flips are rejected
  std::uint64_t seed = 1;
};

struct GaRun {
  std::vector<Int> best_by_generation;  // entry 0 is the initial population
  std::vector<Int> mean_by_generation;  // integer mean, truncated toward zero
  Genotype best;
  Int best_value = 0;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
};

/// `size` feasible genotypes, deterministic per seed. Gives up with
/// SamplerFailed after bounded retries.
std::vector<Genotype> init_population(const GaProblem& problem, int size, std::uint64_t seed);

/// Gene-transmitting random offspring: every differing coordinate is drawn
/// from a uniformly random parent. May be infeasible; callers repair or
/// reject.
Genotype uniform_crossover(const Genotype& p1, const Genotype& p2, std::mt19937_64& rng);
Genotype uniform_crossover(const Genotype& p1, const Genotype& p2, std::uint64_t seed);

/// Steady-state loop: binary tournament selection, one offspring per
/// generation, replace-worst with exact-duplicate suppression.
GaRun run_ga(const GaProblem& problem, const GaConfig& config);

/// CSV schema: header "generation,best,mean", one row per generation.
void write_ga_csv(std::ostream& out, const GaRun& run);

std::unique_ptr<GaProblem> make_mwis_ga_problem(WeightedGraph graph);
std::unique_ptr<GaProblem> make_packing_ga_problem(BlpInstance packing);
std::unique_ptr<GaProblem> make_partition_ga_problem(BlpInstance partition);
std::unique_ptr<GaProblem> make_covering_ga_problem(BlpInstance covering, int diff_cap = 24);
std::unique_ptr<GaProblem> make_cnf_ga_problem(CnfInstance cnf);
std::unique_ptr<GaProblem> make_splp_ga_problem(SplpInstance splp);
/// Generic Boolean program: knapsack fast path when it applies, hypergraph
/// construction otherwise, brute force as the last resort.
std::unique_ptr<GaProblem> make_blp_ga_problem(BlpInstance inst, int combination_cap = 20,
                                               int solver_cap = 30, int oracle_cap = 24);

}  // namespace ogtc
