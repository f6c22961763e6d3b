#include "ogtc/ga.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "ogtc/hypergraph.hpp"

namespace ogtc {

namespace {

constexpr int kSampleRetries = 1000;
constexpr int kUniformRepairRetries = 32;

Genotype sample_or_fail(const GaProblem& problem, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    Genotype candidate = problem.sample(rng);
    if (problem.feasible(candidate)) return candidate;
  }
  fail(ErrorCode::sampler_failed,
       "no feasible sample for " + problem.name() + " after bounded retries");
}

}  // namespace

std::vector<Genotype> init_population(const GaProblem& problem, int size, std::uint64_t seed) {
  if (size < 1) fail(ErrorCode::bad_params, "population size must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Genotype> population;
  population.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) population.push_back(sample_or_fail(problem, rng));
  return population;
}

Genotype uniform_crossover(const Genotype& p1, const Genotype& p2, std::mt19937_64& rng) {
  if (p1.size() != p2.size())
    fail(ErrorCode::length_mismatch, "parent genotypes have different lengths");
  Genotype child = p1;
  std::bernoulli_distribution coin(0.5);
  for (int j = 0; j < p1.size(); ++j)
    if (p1[j] != p2[j] && coin(rng)) child.set(j, p2[j]);
  return child;
}

Genotype uniform_crossover(const Genotype& p1, const Genotype& p2, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return uniform_crossover(p1, p2, rng);
}

namespace {

int tournament_pick(const std::vector<Int>& values, Sense sense, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(values.size()) - 1);
  int a = pick(rng);
  int b = pick(rng);
  if (a == b) return a;
  Int va = values[static_cast<std::size_t>(a)];
  Int vb = values[static_cast<std::size_t>(b)];
  if (va == vb) return std::min(a, b);
  return value_better(sense, va, vb) ? a : b;
}

}  // namespace

GaRun run_ga(const GaProblem& problem, const GaConfig& config) {
  if (config.population_size < 2)
    fail(ErrorCode::bad_params, "population size must be at least 2");
  if (config.generations < 0) fail(ErrorCode::bad_params, "negative generation budget");
  if (config.mutation_rate < 0.0 || config.mutation_rate > 1.0)
    fail(ErrorCode::bad_params, "mutation rate outside [0, 1]");

  const auto started = std::chrono::steady_clock::now();
  const Sense sense = problem.sense();

  std::mt19937_64 rng(config.seed);
  std::vector<Genotype> population;
  population.reserve(static_cast<std::size_t>(config.population_size));
  for (int i = 0; i < config.population_size; ++i)
    population.push_back(sample_or_fail(problem, rng));
  std::vector<Int> values;
  values.reserve(population.size());
  for (const Genotype& g : population) values.push_back(problem.value(g));

  GaRun run;
  run.seed = config.seed;
  auto record = [&]() {
    int best_index = 0;
    Int sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      sum += values[i];
      if (value_better(sense, values[i], values[static_cast<std::size_t>(best_index)]))
        best_index = static_cast<int>(i);
    }
    run.best_by_generation.push_back(values[static_cast<std::size_t>(best_index)]);
    run.mean_by_generation.push_back(sum / static_cast<Int>(values.size()));
    run.best = population[static_cast<std::size_t>(best_index)];
    run.best_value = values[static_cast<std::size_t>(best_index)];
  };
  record();

  for (int gen = 0; gen < config.generations; ++gen) {
    int i = tournament_pick(values, sense, rng);
    int j = tournament_pick(values, sense, rng);
    const Genotype& p1 = population[static_cast<std::size_t>(i)];
    const Genotype& p2 = population[static_cast<std::size_t>(j)];

    Genotype child;
    if (config.crossover == CrossoverKind::optimized) {
      child = problem.crossover(p1, p2).offspring;
    } else {
      bool repaired = false;
      for (int attempt = 0; attempt < kUniformRepairRetries; ++attempt) {
        child = uniform_crossover(p1, p2, rng);
        if (problem.feasible(child)) {
          repaired = true;
          break;
        }
      }
      if (!repaired)
        child = value_not_worse(sense, values[static_cast<std::size_t>(i)],
                                values[static_cast<std::size_t>(j)])
                    ? p1
                    : p2;
    }

    if (config.mutation_rate > 0.0) {
      std::bernoulli_distribution flip(config.mutation_rate);
      Genotype mutated = child;
      for (int b = 0; b < mutated.size(); ++b)
        if (flip(rng)) mutated.set(b, !mutated[b]);
      if (problem.feasible(mutated)) child = std::move(mutated);
    }

    Int child_value = problem.value(child);
    bool duplicate = std::find(population.begin(), population.end(), child) != population.end();
    if (!duplicate) {
      int worst = 0;
      for (std::size_t k = 1; k < values.size(); ++k)
        if (value_better(sense, values[static_cast<std::size_t>(worst)], values[k]))
          worst = static_cast<int>(k);
      if (value_not_worse(sense, child_value, values[static_cast<std::size_t>(worst)])) {
        population[static_cast<std::size_t>(worst)] = std::move(child);
        values[static_cast<std::size_t>(worst)] = child_value;
      }
    }
    record();
  }

  run.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return run;
}

void write_ga_csv(std::ostream& out, const GaRun& run) {
  out << "generation,best,mean\n";
  for (std::size_t g = 0; g < run.best_by_generation.size(); ++g)
    out << g << ',' << run.best_by_generation[g] << ',' << run.mean_by_generation[g] << '\n';
}

namespace {

// Shuffled greedy construction shared by the subset-style samplers: visit
// items in random order and add each compatible one with high probability.
template <typename Compatible>
Genotype greedy_subset(int n, std::mt19937_64& rng, Compatible&& compatible) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution keep(0.8);
  Genotype g(n);
  for (int j : order) {
    if (!keep(rng)) continue;
    g.set(j, true);
    if (!compatible(g)) g.set(j, false);
  }
  return g;
}

class MwisGaProblem final : public GaProblem {
 public:
  explicit MwisGaProblem(WeightedGraph graph) : graph_(std::move(graph)) {}
  std::string name() const override { return "graph-mwis"; }
  int genotype_length() const override { return graph_.vertex_count(); }
  Sense sense() const override { return Sense::maximize; }
  Int value(const Genotype& x) const override { return subset_weight(graph_, x); }
  bool feasible(const Genotype& x) const override { return is_independent_set(graph_, x); }
  Genotype sample(std::mt19937_64& rng) const override {
    return greedy_subset(graph_.vertex_count(), rng,
                         [this](const Genotype& g) { return is_independent_set(graph_, g); });
  }
  CrossoverResult crossover(const Genotype& p1, const Genotype& p2) const override {
    return ogtc_mwis(graph_, p1, p2);
  }

 private:
  WeightedGraph graph_;
};

class BlpGaProblem : public GaProblem {
 public:
  explicit BlpGaProblem(BlpInstance inst) : inst_(std::move(inst)) {}
  int genotype_length() const override { return inst_.var_count(); }
  Sense sense() const override { return inst_.sense(); }
  Int value(const Genotype& x) const override { return objective(inst_, x); }
  bool feasible(const Genotype& x) const override { return ogtc::feasible(inst_, x); }

 protected:
  BlpInstance inst_;
};

class PackingGaProblem final : public BlpGaProblem {
 public:
  explicit PackingGaProblem(BlpInstance inst) : BlpGaProblem(std::move(inst)) {}
  std::string name() const override { return "set-packing"; }
  Genotype sample(std::mt19937_64& rng) const override {
    return greedy_subset(inst_.var_count(), rng,
                         [this](const Genotype& g) { return ogtc::feasible(inst_, g); });
  }
  CrossoverResult crossover(const Genotype& p1, const Genotype& p2) const override {
    return ogtc_set_packing(inst_, p1, p2);
  }
};

class PartitionGaProblem final : public BlpGaProblem {
 public:
  explicit PartitionGaProblem(BlpInstance inst) : BlpGaProblem(std::move(inst)) {}
  std::string name() const override { return "set-partition"; }
  Genotype sample(std::mt19937_64& rng) const override {
    // Random-restart greedy exact cover; fails honestly on hard instances.
    std::vector<int> order(static_cast<std::size_t>(inst_.var_count()));
    std::iota(order.begin(), order.end(), 0);
    for (int attempt = 0; attempt < 50; ++attempt) {
      std::shuffle(order.begin(), order.end(), rng);
      Genotype g(inst_.var_count());
      for (int j : order) {
        g.set(j, true);
        for (const Row& row : inst_.rows())
          if (row_value(row, g) > row.rhs) {
            g.set(j, false);
            break;
          }
      }
      if (ogtc::feasible(inst_, g)) return g;
    }
    return Genotype(inst_.var_count());  // let the harness count the failure
  }
  CrossoverResult crossover(const Genotype& p1, const Genotype& p2) const override {
    return ogtc_set_partition(inst_, p1, p2);
  }
};

class CoveringGaProblem final : public BlpGaProblem {
 public:
  CoveringGaProblem(BlpInstance inst, int diff_cap)
      : BlpGaProblem(std::move(inst)), diff_cap_(diff_cap) {}
  std::string name() const override { return "set-covering"; }
  Genotype sample(std::mt19937_64& rng) const override {
    Genotype g(inst_.var_count());
    std::vector<char> covered(static_cast<std::size_t>(inst_.row_count()), 0);
    int uncovered = inst_.row_count();
    while (uncovered > 0) {
      std::vector<int> candidates;
      for (int j = 0; j < inst_.var_count(); ++j) {
        if (g[j]) continue;
        for (int i = 0; i < inst_.row_count(); ++i) {
          if (covered[static_cast<std::size_t>(i)]) continue;
          for (const RowTerm& t : inst_.row(i).terms)
            if (t.col == j && t.coeff != 0) {
              candidates.push_back(j);
              goto next_column;
            }
        }
      next_column:;
      }
      if (candidates.empty()) return g;  // uncoverable; harness rejects
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      int j = candidates[pick(rng)];
      g.set(j, true);
      for (int i = 0; i < inst_.row_count(); ++i) {
        if (covered[static_cast<std::size_t>(i)]) continue;
        for (const RowTerm& t : inst_.row(i).terms)
          if (t.col == j && t.coeff != 0) {
            covered[static_cast<std::size_t>(i)] = 1;
            --uncovered;
            break;
          }
      }
    }
    return g;
  }
  CrossoverResult crossover(const Genotype& p1, const Genotype& p2) const override {
    return ogtc_set_covering_exact(inst_, p1, p2, diff_cap_);
  }

 private:
  int diff_cap_;
};

class CnfGaProblem final : public GaProblem {
 public:
  explicit CnfGaProblem(CnfInstance cnf) : cnf_(std::move(cnf)) {}
  std::string name() const override { return "max-3-sat"; }
  int genotype_length() const override { return cnf_.var_count(); }
  Sense sense() const override { return Sense::maximize; }
  Int value(const Genotype& x) const override { return f_sat(cnf_, x); }
  bool feasible(const Genotype&) const override { return true; }
  Genotype sample(std::mt19937_64& rng) const override {
    Genotype g(cnf_.var_count());
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < g.size(); ++i) g.set(i, coin(rng));
    return g;
  }
  CrossoverResult crossover(const Genotype& p1, const Genotype& p2) const override {
    Genotype child = ogtc_max3sat(cnf_, p1, p2);
    return CrossoverResult{child, f_sat(cnf_, child), {"max-3-sat:graph-representation"}};
  }

 private:
  CnfInstance cnf_;
};

class SplpGaProblem final : public GaProblem {
 public:
  explicit SplpGaProblem(SplpInstance splp) : splp_(std::move(splp)) {}
  std::string name() const override { return "facility-location"; }
  int genotype_length() const override { return splp_.var_count(); }
  Sense sense() const override { return Sense::minimize; }
  Int value(const Genotype& x) const override { return splp_value(splp_, x); }
  bool feasible(const Genotype& x) const override { return splp_feasible(splp_, x); }
  Genotype sample(std::mt19937_64& rng) const override {
    const int K = splp_.facility_count();
    Genotype g(splp_.var_count());
    if (K == 0) return g;
    std::bernoulli_distribution open_coin(0.5);
    std::vector<int> open;
    for (int k = 0; k < K; ++k)
      if (open_coin(rng)) {
        g.set(splp_.y_index(k), true);
        open.push_back(k);
      }
    if (open.empty()) {
      std::uniform_int_distribution<int> pick(0, K - 1);
      int k = pick(rng);
      g.set(splp_.y_index(k), true);
      open.push_back(k);
    }
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    for (int l = 0; l < splp_.client_count(); ++l)
      g.set(splp_.x_index(open[pick(rng)], l), true);
    return g;
  }
  CrossoverResult crossover(const Genotype& p1, const Genotype& p2) const override {
    return ogtc_splp(splp_, p1, p2);
  }

 private:
  SplpInstance splp_;
};

class GenericBlpGaProblem final : public BlpGaProblem {
 public:
  GenericBlpGaProblem(BlpInstance inst, int combination_cap, int solver_cap, int oracle_cap)
      : BlpGaProblem(std::move(inst)),
        combination_cap_(combination_cap),
        solver_cap_(solver_cap),
        oracle_cap_(oracle_cap) {}
  std::string name() const override { return "boolean-program"; }
  Genotype sample(std::mt19937_64& rng) const override {
    // Random candidates plus the all-zero vector; generic programs carry no
    // structure the sampler could exploit.
    Genotype g(inst_.var_count());
    if (ogtc::feasible(inst_, g)) {
      std::bernoulli_distribution coin(0.25);
      for (int j = 0; j < g.size(); ++j) g.set(j, coin(rng));
      if (ogtc::feasible(inst_, g)) return g;
      return Genotype(inst_.var_count());
    }
    std::bernoulli_distribution coin(0.5);
    for (int j = 0; j < g.size(); ++j) g.set(j, coin(rng));
    return g;
  }
  CrossoverResult crossover(const Genotype& p1, const Genotype& p2) const override {
    if (auto fast = ogtc_knapsack_fastpath(inst_, p1, p2)) return *fast;
    int d = diff_set(p1, p2).d();
    if (2 * d <= solver_cap_)
      return ogtc_via_hypergraph(inst_, p1, p2, combination_cap_, solver_cap_);
    return brute_force_ogtc(inst_, p1, p2, oracle_cap_);
  }

 private:
  int combination_cap_;
  int solver_cap_;
  int oracle_cap_;
};

}  // namespace

std::unique_ptr<GaProblem> make_mwis_ga_problem(WeightedGraph graph) {
  return std::make_unique<MwisGaProblem>(std::move(graph));
}
std::unique_ptr<GaProblem> make_packing_ga_problem(BlpInstance packing) {
  return std::make_unique<PackingGaProblem>(std::move(packing));
}
std::unique_ptr<GaProblem> make_partition_ga_problem(BlpInstance partition) {
  return std::make_unique<PartitionGaProblem>(std::move(partition));
}
std::unique_ptr<GaProblem> make_covering_ga_problem(BlpInstance covering, int diff_cap) {
  return std::make_unique<CoveringGaProblem>(std::move(covering), diff_cap);
}
std::unique_ptr<GaProblem> make_cnf_ga_problem(CnfInstance cnf) {
  return std::make_unique<CnfGaProblem>(std::move(cnf));
}
std::unique_ptr<GaProblem> make_splp_ga_problem(SplpInstance splp) {
  return std::make_unique<SplpGaProblem>(std::move(splp));
}
std::unique_ptr<GaProblem> make_blp_ga_problem(BlpInstance inst, int combination_cap,
                                               int solver_cap, int oracle_cap) {
  return std::make_unique<GenericBlpGaProblem>(std::move(inst), combination_cap, solver_cap,
                                               oracle_cap);
}

}  // namespace ogtc
