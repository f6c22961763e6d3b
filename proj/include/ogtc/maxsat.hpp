#pragma once

// Graph-based representation for MAX-3-SAT: per-variable truth-setting
// vertex pairs of weight M plus one unit-weight vertex per clause literal.
// Independent sets of weight at least N*M round-trip with assignments, so
// the independent-set crossover doubles as a satisfiability crossover.

#include <vector>

#include "ogtc/core.hpp"
#include "ogtc/graph.hpp"

namespace ogtc {

struct Literal {
  int var = 0;
  bool positive = true;
};

/// CNF with at most three literals per clause. Assignments are genotypes of
/// length var_count.
class CnfInstance {
 public:
  CnfInstance(int var_count, std::vector<std::vector<Literal>> clauses);

  int var_count() const noexcept { return n_; }
  int clause_count() const noexcept { return static_cast<int>(clauses_.size()); }
  const std::vector<std::vector<Literal>>& clauses() const noexcept { return clauses_; }

 private:
  int n_ = 0;
  std::vector<std::vector<Literal>> clauses_;
};

/// Number of satisfied clauses.
Int f_sat(const CnfInstance& cnf, const Genotype& assignment);

struct SatGraph {
  WeightedGraph graph;
  int var_count = 0;
  int clause_count = 0;

  // Vertex 2i asserts variable i, vertex 2i+1 denies it; both weigh M.
  int positive_vertex(int var) const noexcept { return 2 * var; }
  int negative_vertex(int var) const noexcept { return 2 * var + 1; }

  struct Occurrence {
    int vertex = 0;
    int clause = 0;
    Literal literal;
  };
  std::vector<Occurrence> occurrences;              // in vertex order
  std::vector<std::vector<int>> clause_occurrences;  // vertex ids per clause
};

/// Builds the representation graph: truth pairs are adjacent, occurrence
/// vertices of one clause form a clique, and each occurrence is adjacent to
/// the truth vertex contradicting its literal.
SatGraph build_sat_graph(const CnfInstance& cnf);

/// Independent set of weight N*M + f_sat(y): the matching truth vertex per
/// variable plus, for each satisfied clause, its first true occurrence.
Genotype encode_assignment(const SatGraph& sg, const Genotype& y);

/// Maps an independent set of weight at least N*M back to an assignment
/// satisfying at least weight - N*M clauses. Variables with no selected
/// truth vertex follow their first selected occurrence, defaulting to true.
Genotype decode_independent_set(const SatGraph& sg, const Genotype& selected);

/// Crossover on the graph representation: encode both parents, recombine
/// with the independent-set operator, decode. The child satisfies at least
/// as many clauses as either parent.
Genotype ogtc_max3sat(const CnfInstance& cnf, const Genotype& y1, const Genotype& y2);

}  // namespace ogtc
