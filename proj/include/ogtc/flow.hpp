#pragma once

// Exact integer max-flow (Dinic) and the bipartite maximum-weight
// independent set solver built on min-cut duality. Every polynomial
// crossover in the library bottoms out here.

#include <utility>
#include <vector>

#include "ogtc/core.hpp"

namespace ogtc {

struct FlowArc {
  int tail = 0;
  int head = 0;
  Int capacity = 0;   // ignored when infinite
  bool infinite = false;
};

/// Directed s-t network. Arcs flagged infinite receive a capacity strictly
/// larger than the sum of all finite capacities, so they can never cross a
/// minimum cut.
struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<FlowArc> arcs;
};

struct MaxFlowResult {
  Int value = 0;
  std::vector<int> source_side;  // nodes reachable from the source in the final residual
};

/// Maximum s-t flow with a minimum-cut certificate. The flow value is
/// checked against the cut capacity before returning.
MaxFlowResult max_flow(const FlowNetwork& net);

/// Vertex-weighted bipartite graph. Weights must be strictly positive;
/// callers pre-filter anything else. Labels give the total order used for
/// deterministic tie-breaking; when omitted, side A comes first.
struct BipartiteWeighted {
  std::vector<Int> a_weights;
  std::vector<Int> b_weights;
  std::vector<std::pair<int, int>> edges;  // (index into A, index into B)
  std::vector<int> a_labels;               // optional
  std::vector<int> b_labels;               // optional
};

struct BipartiteMwisResult {
  std::vector<int> a_selected;  // indices into side A, ascending
  std::vector<int> b_selected;
  Int weight = 0;
  Int cut_value = 0;
};

/// Maximum-weight independent set via flow: the complement of a
/// minimum-weight vertex cover read off a minimum cut. Among all optimal
/// sets, returns the one whose sorted label sequence is lexicographically
/// smallest. Asserts weight + cut = total weight on every call.
BipartiteMwisResult bipartite_mwis(const BipartiteWeighted& g);

}  // namespace ogtc
