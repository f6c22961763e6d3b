#pragma once

// Polynomial optimal-recombination operators on vertex-weighted graphs:
// maximum-weight independent set, maximum-weight clique (via the
// complement graph) and minimum-weight vertex cover (via complement
// solutions).

#include <utility>
#include <vector>

#include "ogtc/core.hpp"

namespace ogtc {

/// Simple undirected graph with integer vertex weights (any sign). Vertex
/// indices double as genotype positions: x_j = 1 iff vertex j is in the
/// represented subset.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
                std::vector<Int> weights);

  int vertex_count() const noexcept { return n_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::vector<Int>& weights() const noexcept { return weights_; }
  Int weight(int v) const { return weights_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
  std::vector<Int> weights_;
};

bool is_independent_set(const WeightedGraph& g, const Genotype& x);
bool is_clique(const WeightedGraph& g, const Genotype& x);
bool is_vertex_cover(const WeightedGraph& g, const Genotype& x);

Int subset_weight(const WeightedGraph& g, const Genotype& x);

/// Complement graph on the same vertices and weights. Materializes O(n^2)
/// edges; meant for library-scale clique instances.
WeightedGraph complement_graph(const WeightedGraph& g);

/// Best gene-transmitting independent set given two independent parents.
/// Differing vertices split into two sides that are independent within
/// themselves (each is a subset of one parent), so the conflict subgraph is
/// bipartite and one flow solve settles it. Non-positive-weight differing
/// vertices are always dropped.
CrossoverResult ogtc_mwis(const WeightedGraph& g, const Genotype& p1, const Genotype& p2);

/// Clique crossover: the same flow construction on the complement graph.
CrossoverResult ogtc_max_clique(const WeightedGraph& g, const Genotype& p1, const Genotype& p2);

/// Vertex-cover crossover: complement of the independent-set crossover run
/// on the complemented parents.
CrossoverResult ogtc_min_vertex_cover(const WeightedGraph& g, const Genotype& p1,
                                      const Genotype& p2);

// Boolean-program encodings of the three problems; used to cross-check the
// flow operators against the brute-force oracle.
BlpInstance mwis_as_blp(const WeightedGraph& g);
BlpInstance clique_as_blp(const WeightedGraph& g);
BlpInstance vertex_cover_as_blp(const WeightedGraph& g);

}  // namespace ogtc
