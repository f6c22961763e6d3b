#include "ogtc/graph.hpp"

#include <algorithm>

#include "ogtc/flow.hpp"

namespace ogtc {

WeightedGraph::WeightedGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
                             std::vector<Int> weights)
    : n_(vertex_count), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (n_ < 0) fail(ErrorCode::bad_params, "negative vertex count");
  if (static_cast<int>(weights_.size()) != n_)
    fail(ErrorCode::validation_error, "weight list must cover every vertex");
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      fail(ErrorCode::index_out_of_range, "edge endpoint out of range");
    if (u == v) fail(ErrorCode::validation_error, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i - 1] == edges_[i])
      fail(ErrorCode::validation_error, "duplicate edge " + std::to_string(edges_[i].first) +
                                            "-" + std::to_string(edges_[i].second));
}

bool WeightedGraph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

bool is_independent_set(const WeightedGraph& g, const Genotype& x) {
  if (x.size() != g.vertex_count())
    fail(ErrorCode::length_mismatch, "genotype length does not match vertex count");
  for (auto [u, v] : g.edges())
    if (x[u] && x[v]) return false;
  return true;
}

bool is_clique(const WeightedGraph& g, const Genotype& x) {
  if (x.size() != g.vertex_count())
    fail(ErrorCode::length_mismatch, "genotype length does not match vertex count");
  std::vector<int> chosen = x.ones();
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::size_t j = i + 1; j < chosen.size(); ++j)
      if (!g.adjacent(chosen[i], chosen[j])) return false;
  return true;
}

bool is_vertex_cover(const WeightedGraph& g, const Genotype& x) {
  if (x.size() != g.vertex_count())
    fail(ErrorCode::length_mismatch, "genotype length does not match vertex count");
  for (auto [u, v] : g.edges())
    if (!x[u] && !x[v]) return false;
  return true;
}

Int subset_weight(const WeightedGraph& g, const Genotype& x) {
  Int total = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (x[v]) total += g.weight(v);
  return total;
}

WeightedGraph complement_graph(const WeightedGraph& g) {
  std::vector<std::pair<int, int>> comp;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) comp.emplace_back(u, v);
  return WeightedGraph(g.vertex_count(), std::move(comp), g.weights());
}

CrossoverResult ogtc_mwis(const WeightedGraph& g, const Genotype& p1, const Genotype& p2) {
  if (!is_independent_set(g, p1))
    fail(ErrorCode::parent_not_independent, "first parent is not an independent set");
  if (!is_independent_set(g, p2))
    fail(ErrorCode::parent_not_independent, "second parent is not an independent set");

  DiffSet diff = diff_set(p1, p2);
  Genotype offspring = p1;

  // side: 0 = not a candidate, 1 = differing vertex from p1, 2 = from p2
  std::vector<char> side(static_cast<std::size_t>(g.vertex_count()), 0);
  BipartiteWeighted sub;
  std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int j : diff.indices) {
    offspring.set(j, false);
    if (g.weight(j) <= 0) continue;
    if (p1[j]) {
      side[static_cast<std::size_t>(j)] = 1;
      position[static_cast<std::size_t>(j)] = static_cast<int>(sub.a_weights.size());
      sub.a_weights.push_back(g.weight(j));
      sub.a_labels.push_back(j);
    } else {
      side[static_cast<std::size_t>(j)] = 2;
      position[static_cast<std::size_t>(j)] = static_cast<int>(sub.b_weights.size());
      sub.b_weights.push_back(g.weight(j));
      sub.b_labels.push_back(j);
    }
  }
  for (auto [u, v] : g.edges()) {
    char su = side[static_cast<std::size_t>(u)];
    char sv = side[static_cast<std::size_t>(v)];
    if (su == 0 || sv == 0) continue;
    if (su == sv)
      throw std::logic_error("conflict subgraph between independent parents must be bipartite");
    int a = su == 1 ? u : v;
    int b = su == 1 ? v : u;
    sub.edges.emplace_back(position[static_cast<std::size_t>(a)],
                           position[static_cast<std::size_t>(b)]);
  }

  if (!sub.a_weights.empty() || !sub.b_weights.empty()) {
    BipartiteMwisResult picked = bipartite_mwis(sub);
    for (int a : picked.a_selected) offspring.set(sub.a_labels[static_cast<std::size_t>(a)], true);
    for (int b : picked.b_selected) offspring.set(sub.b_labels[static_cast<std::size_t>(b)], true);
  }

  if (!is_independent_set(g, offspring))
    throw std::logic_error("independent-set crossover produced a dependent set");
  return CrossoverResult{offspring, subset_weight(g, offspring), {"mwis:bipartite-flow"}};
}

CrossoverResult ogtc_max_clique(const WeightedGraph& g, const Genotype& p1, const Genotype& p2) {
  if (!is_clique(g, p1)) fail(ErrorCode::parent_not_clique, "first parent is not a clique");
  if (!is_clique(g, p2)) fail(ErrorCode::parent_not_clique, "second parent is not a clique");
  CrossoverResult result = ogtc_mwis(complement_graph(g), p1, p2);
  if (!is_clique(g, result.offspring))
    throw std::logic_error("clique crossover produced a non-clique");
  result.trace.insert(result.trace.begin(), "clique:complement-graph");
  return result;
}

CrossoverResult ogtc_min_vertex_cover(const WeightedGraph& g, const Genotype& p1,
                                      const Genotype& p2) {
  if (!is_vertex_cover(g, p1)) fail(ErrorCode::parent_not_cover, "first parent is not a cover");
  if (!is_vertex_cover(g, p2)) fail(ErrorCode::parent_not_cover, "second parent is not a cover");
  CrossoverResult inner = ogtc_mwis(g, p1.complement(), p2.complement());
  Genotype offspring = inner.offspring.complement();
  if (!is_vertex_cover(g, offspring))
    throw std::logic_error("cover crossover produced a non-cover");
  CrossoverResult result{offspring, subset_weight(g, offspring),
                         {"vertex-cover:complement-solutions"}};
  result.trace.insert(result.trace.end(), inner.trace.begin(), inner.trace.end());
  return result;
}

BlpInstance mwis_as_blp(const WeightedGraph& g) {
  std::vector<Row> rows;
  rows.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) rows.push_back(Row{{{u, 1}, {v, 1}}, 1, RowSense::le});
  return BlpInstance(Sense::maximize, g.weights(), std::move(rows));
}

BlpInstance clique_as_blp(const WeightedGraph& g) {
  std::vector<Row> rows;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) rows.push_back(Row{{{u, 1}, {v, 1}}, 1, RowSense::le});
  return BlpInstance(Sense::maximize, g.weights(), std::move(rows));
}

BlpInstance vertex_cover_as_blp(const WeightedGraph& g) {
  std::vector<Row> rows;
  rows.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) rows.push_back(Row{{{u, 1}, {v, 1}}, 1, RowSense::ge});
  return BlpInstance(Sense::minimize, g.weights(), std::move(rows));
}

}  // namespace ogtc
