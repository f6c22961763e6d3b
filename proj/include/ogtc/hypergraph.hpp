#pragma once

// Recombination for general Boolean programs through a 2-colorable
// hypergraph: one vertex pair per differing coordinate, one hyperedge per
// violating combination of a constraint's free variables, plus the
// simplified nonnegative "knapsack" variant and the 3-uniform hardness
// gadget used to stress the exact solver.

#include <utility>
#include <vector>

#include "ogtc/core.hpp"
#include "ogtc/graph.hpp"

namespace ogtc {

/// Hypergraph with integer vertex weights. An independent set is a vertex
/// set containing no edge entirely. Edges are normalized (sorted, at least
/// two distinct vertices) and duplicates are removed; one edge may contain
/// another.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int vertex_count, std::vector<std::vector<int>> edges, std::vector<Int> weights);

  int vertex_count() const noexcept { return n_; }
  const std::vector<std::vector<int>>& edges() const noexcept { return edges_; }
  const std::vector<Int>& weights() const noexcept { return weights_; }
  Int weight(int v) const { return weights_[static_cast<std::size_t>(v)]; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<Int> weights_;
};

bool is_hypergraph_independent(const Hypergraph& h, const std::vector<char>& chosen);
bool is_hypergraph_independent(const Hypergraph& h, const std::vector<int>& vertices);

/// Partition of the vertices into two independent classes.
struct TwoColoring {
  std::vector<int> class1;
  std::vector<int> class2;
};

void validate_two_coloring(const Hypergraph& h, const TwoColoring& coloring);

struct HypergraphMwisResult {
  std::vector<int> vertices;  // ascending
  Int weight = 0;
};

inline constexpr int kDefaultHypergraphSolverCap = 30;
inline constexpr int kDefaultCombinationCap = 20;

/// Exact maximum-weight independent set by branch and bound, for
/// desk-scale hypergraphs only (the general problem is intractable).
/// Vertices with non-positive weight are never selected; among optima the
/// lexicographically smallest vertex set wins.
HypergraphMwisResult hypergraph_mwis_exact(const Hypergraph& h,
                                           int cap = kDefaultHypergraphSolverCap);

/// Crossover hypergraph for a Boolean program: vertices j and d+j stand for
/// "x_{D[j]} = 1" and "= 0", pairing edges keep one of each, constraint
/// edges rule out every violating combination, and the penalty lambda makes
/// any pair-less set suboptimal. Color classes are the two parent images.
struct OgtcHypergraph {
  Hypergraph hypergraph;
  TwoColoring coloring;
  Int lambda = 0;
  std::vector<int> diff;                 // differing coordinates, ascending
  std::vector<Int> effective_objective;  // objective in maximize orientation
  Int fixed_objective = 0;               // contribution of the coordinates outside diff
  Genotype parent1;
  Sense original_sense = Sense::maximize;

  int positive_vertex(int diff_pos) const noexcept { return diff_pos; }
  int negative_vertex(int diff_pos) const noexcept {
    return static_cast<int>(diff.size()) + diff_pos;
  }
};

/// Builds the crossover hypergraph. Rows are normalized to <= form first
/// (equalities split in two, >= negated). Each row may involve at most
/// `combination_cap` differing coordinates.
OgtcHypergraph build_ogtc_hypergraph(const BlpInstance& inst, const Genotype& p1,
                                     const Genotype& p2,
                                     int combination_cap = kDefaultCombinationCap,
                                     bool prune_dominated_edges = true);

/// Full crossover path: build, solve exactly, check the one-vertex-per-pair
/// property and the weight identity, and map the optimum back to a
/// feasible offspring.
CrossoverResult ogtc_via_hypergraph(const BlpInstance& inst, const Genotype& p1,
                                    const Genotype& p2,
                                    int combination_cap = kDefaultCombinationCap,
                                    int solver_cap = kDefaultHypergraphSolverCap);

/// Simplified construction for nonnegative <= rows: only the d "set it to
/// one" vertices remain (weights c_j) and every independent set, of any
/// size, maps to a feasible offspring.
Hypergraph build_knapsack_hypergraph(const BlpInstance& inst, const Genotype& p1,
                                     const Genotype& p2,
                                     int combination_cap = kDefaultCombinationCap);

/// 3-uniform hypergraph whose maximum independent sets are the n padding
/// vertices plus a maximum independent set of the input graph; ships with
/// its natural 2-coloring. A stress generator for the exact solver.
std::pair<Hypergraph, TwoColoring> hardness_gadget(const WeightedGraph& g);

}  // namespace ogtc
