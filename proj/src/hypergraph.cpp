#include "ogtc/hypergraph.hpp"

#include <algorithm>
#include <set>

namespace ogtc {

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<int>> edges,
                       std::vector<Int> weights)
    : n_(vertex_count), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (n_ < 0) fail(ErrorCode::bad_params, "negative vertex count");
  if (static_cast<int>(weights_.size()) != n_)
    fail(ErrorCode::validation_error, "weight list must cover every vertex");
  for (auto& edge : edges_) {
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    if (edge.size() < 2)
      fail(ErrorCode::validation_error, "hyperedges need at least two distinct vertices");
    for (int v : edge)
      if (v < 0 || v >= n_)
        fail(ErrorCode::index_out_of_range, "hyperedge vertex " + std::to_string(v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool is_hypergraph_independent(const Hypergraph& h, const std::vector<char>& chosen) {
  for (const auto& edge : h.edges()) {
    bool complete = true;
    for (int v : edge)
      if (!chosen[static_cast<std::size_t>(v)]) {
        complete = false;
        break;
      }
    if (complete) return false;
  }
  return true;
}

bool is_hypergraph_independent(const Hypergraph& h, const std::vector<int>& vertices) {
  std::vector<char> chosen(static_cast<std::size_t>(h.vertex_count()), 0);
  for (int v : vertices) chosen[static_cast<std::size_t>(v)] = 1;
  return is_hypergraph_independent(h, chosen);
}

void validate_two_coloring(const Hypergraph& h, const TwoColoring& coloring) {
  std::vector<int> seen(static_cast<std::size_t>(h.vertex_count()), 0);
  for (int v : coloring.class1) {
    if (v < 0 || v >= h.vertex_count()) fail(ErrorCode::index_out_of_range, "coloring vertex");
    ++seen[static_cast<std::size_t>(v)];
  }
  for (int v : coloring.class2) {
    if (v < 0 || v >= h.vertex_count()) fail(ErrorCode::index_out_of_range, "coloring vertex");
    ++seen[static_cast<std::size_t>(v)];
  }
  for (int v = 0; v < h.vertex_count(); ++v)
    if (seen[static_cast<std::size_t>(v)] != 1)
      fail(ErrorCode::validation_error, "coloring must partition the vertex set");
  if (!is_hypergraph_independent(h, coloring.class1) ||
      !is_hypergraph_independent(h, coloring.class2))
    fail(ErrorCode::validation_error, "color classes must be independent");
}

namespace {

// Branch and bound in decreasing-weight order over the positive-weight
// vertices. Ties between optima are settled by an explicit comparison of
// the sorted vertex sets, so equal-bound subtrees are kept.
class HypergraphSearch {
 public:
  explicit HypergraphSearch(const Hypergraph& h) : h_(h) {
    for (int v = 0; v < h.vertex_count(); ++v)
      if (h.weight(v) > 0) order_.push_back(v);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (h.weight(a) != h.weight(b)) return h.weight(a) > h.weight(b);
      return a < b;
    });
    suffix_weight_.assign(order_.size() + 1, 0);
    for (std::size_t i = order_.size(); i > 0; --i)
      suffix_weight_[i - 1] = suffix_weight_[i] + h.weight(order_[i - 1]);

    edge_size_.reserve(h.edges().size());
    for (const auto& edge : h.edges())
      edge_size_.push_back(static_cast<int>(edge.size()));
    vertex_edges_.resize(static_cast<std::size_t>(h.vertex_count()));
    for (std::size_t e = 0; e < h.edges().size(); ++e)
      for (int v : h.edges()[e]) vertex_edges_[static_cast<std::size_t>(v)].push_back(e);
  }

  HypergraphMwisResult run() {
    chosen_count_.assign(h_.edges().size(), 0);
    current_.clear();
    weight_ = 0;
    best_.clear();
    best_weight_ = 0;
    have_best_ = false;
    dfs(0);
    std::sort(best_.begin(), best_.end());
    return HypergraphMwisResult{best_, best_weight_};
  }

 private:
  bool can_take(int v) const {
    for (std::size_t e : vertex_edges_[static_cast<std::size_t>(v)])
      if (chosen_count_[e] + 1 == edge_size_[e]) return false;
    return true;
  }

  void record() {
    std::vector<int> sorted = current_;
    std::sort(sorted.begin(), sorted.end());
    if (!have_best_ || weight_ > best_weight_ ||
        (weight_ == best_weight_ &&
         std::lexicographical_compare(sorted.begin(), sorted.end(), best_.begin(),
                                      best_.end()))) {
      best_ = std::move(sorted);
      best_weight_ = weight_;
      have_best_ = true;
    }
  }

  void dfs(std::size_t idx) {
    if (have_best_ && weight_ + suffix_weight_[idx] < best_weight_) return;
    if (idx == order_.size()) {
      record();
      return;
    }
    int v = order_[idx];
    if (can_take(v)) {
      current_.push_back(v);
      weight_ += h_.weight(v);
      for (std::size_t e : vertex_edges_[static_cast<std::size_t>(v)]) ++chosen_count_[e];
      dfs(idx + 1);
      for (std::size_t e : vertex_edges_[static_cast<std::size_t>(v)]) --chosen_count_[e];
      weight_ -= h_.weight(v);
      current_.pop_back();
    }
    dfs(idx + 1);
  }

  const Hypergraph& h_;
  std::vector<int> order_;
  std::vector<Int> suffix_weight_;
  std::vector<int> edge_size_;
  std::vector<std::vector<std::size_t>> vertex_edges_;

  std::vector<int> chosen_count_;
  std::vector<int> current_;
  Int weight_ = 0;
  std::vector<int> best_;
  Int best_weight_ = 0;
  bool have_best_ = false;
};

}  // namespace

HypergraphMwisResult hypergraph_mwis_exact(const Hypergraph& h, int cap) {
  if (h.vertex_count() > cap)
    fail(ErrorCode::too_large, "hypergraph has " + std::to_string(h.vertex_count()) +
                                   " vertices, solver cap is " + std::to_string(cap));
  return HypergraphSearch(h).run();
}

namespace {

std::vector<Row> normalize_to_le(const BlpInstance& inst) {
  std::vector<Row> rows;
  for (const Row& row : inst.rows()) {
    switch (row.sense) {
      case RowSense::le:
        rows.push_back(row);
        break;
      case RowSense::ge: {
        Row flipped = row;
        for (RowTerm& t : flipped.terms) t.coeff = -t.coeff;
        flipped.rhs = -row.rhs;
        flipped.sense = RowSense::le;
        rows.push_back(std::move(flipped));
        break;
      }
      case RowSense::eq: {
        Row upper = row;
        upper.sense = RowSense::le;
        Row lower = row;
        for (RowTerm& t : lower.terms) t.coeff = -t.coeff;
        lower.rhs = -row.rhs;
        lower.sense = RowSense::le;
        rows.push_back(std::move(upper));
        rows.push_back(std::move(lower));
        break;
      }
    }
  }
  return rows;
}

void prune_dominated(std::vector<std::vector<int>>& edges) {
  // An edge containing another edge can never be the binding one.
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::vector<int>> kept;
  for (const auto& edge : edges) {
    bool dominated = false;
    for (const auto& small : kept) {
      if (std::includes(edge.begin(), edge.end(), small.begin(), small.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(edge);
  }
  edges = std::move(kept);
}

// Appends one edge per violating assignment of the row's differing
// coordinates. `vertex_of(col, value)` names the vertex standing for
// "column = value"; a negative id means that side has no vertex.
template <typename VertexOf>
void append_violation_edges(const Row& row, const std::vector<int>& diff_position,
                            const Genotype& p1, int combination_cap,
                            std::vector<std::vector<int>>& edges, VertexOf vertex_of) {
  Int fixed = 0;
  std::vector<std::pair<int, Int>> free_terms;  // (diff position, coefficient)
  for (const RowTerm& t : row.terms) {
    if (t.coeff == 0) continue;
    int pos = diff_position[static_cast<std::size_t>(t.col)];
    if (pos >= 0)
      free_terms.emplace_back(pos, t.coeff);
    else if (p1[t.col])
      fixed += t.coeff;
  }
  if (static_cast<int>(free_terms.size()) > combination_cap)
    fail(ErrorCode::combination_blowup,
         "a row involves " + std::to_string(free_terms.size()) +
             " differing coordinates, cap is " + std::to_string(combination_cap));
  const std::uint32_t count = std::uint32_t{1} << free_terms.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    Int lhs = fixed;
    for (std::size_t k = 0; k < free_terms.size(); ++k)
      if (mask >> k & 1u) lhs += free_terms[k].second;
    if (lhs <= row.rhs) continue;
    std::vector<int> edge;
    for (std::size_t k = 0; k < free_terms.size(); ++k) {
      int v = vertex_of(free_terms[k].first, (mask >> k & 1u) != 0);
      if (v >= 0) edge.push_back(v);
    }
    if (edge.size() < 2)
      throw std::logic_error("violating combination with fewer than two vertices");
    edges.push_back(std::move(edge));
  }
}

}  // namespace

OgtcHypergraph build_ogtc_hypergraph(const BlpInstance& inst, const Genotype& p1,
                                     const Genotype& p2, int combination_cap,
                                     bool prune_dominated_edges) {
  if (!feasible(inst, p1)) fail(ErrorCode::infeasible_parents, "first parent is infeasible");
  if (!feasible(inst, p2)) fail(ErrorCode::infeasible_parents, "second parent is infeasible");

  OgtcHypergraph out;
  out.parent1 = p1;
  out.original_sense = inst.sense();
  out.effective_objective = inst.objective_coeffs();
  if (inst.sense() == Sense::minimize)
    for (Int& c : out.effective_objective) c = -c;
  out.diff = diff_set(p1, p2).indices;
  const int d = static_cast<int>(out.diff.size());

  std::vector<int> diff_position(static_cast<std::size_t>(inst.var_count()), -1);
  for (int k = 0; k < d; ++k)
    diff_position[static_cast<std::size_t>(out.diff[static_cast<std::size_t>(k)])] = k;

  out.lambda = 1;
  for (int j : out.diff) {
    Int c = out.effective_objective[static_cast<std::size_t>(j)];
    out.lambda += 2 * (c < 0 ? -c : c);
  }
  for (int j = 0; j < inst.var_count(); ++j)
    if (diff_position[static_cast<std::size_t>(j)] < 0 && p1[j])
      out.fixed_objective += out.effective_objective[static_cast<std::size_t>(j)];

  std::vector<std::vector<int>> edges;
  for (int k = 0; k < d; ++k) edges.push_back({k, d + k});
  for (const Row& row : normalize_to_le(inst))
    append_violation_edges(row, diff_position, p1, combination_cap, edges,
                           [d](int pos, bool one) { return one ? pos : d + pos; });
  if (prune_dominated_edges) prune_dominated(edges);

  std::vector<Int> weights(static_cast<std::size_t>(2 * d), out.lambda);
  for (int k = 0; k < d; ++k)
    weights[static_cast<std::size_t>(k)] +=
        out.effective_objective[static_cast<std::size_t>(out.diff[static_cast<std::size_t>(k)])];

  out.hypergraph = Hypergraph(2 * d, std::move(edges), std::move(weights));
  for (int k = 0; k < d; ++k) {
    bool one_in_p1 = p1[out.diff[static_cast<std::size_t>(k)]];
    out.coloring.class1.push_back(one_in_p1 ? k : d + k);
    out.coloring.class2.push_back(one_in_p1 ? d + k : k);
  }
  return out;
}

CrossoverResult ogtc_via_hypergraph(const BlpInstance& inst, const Genotype& p1,
                                    const Genotype& p2, int combination_cap, int solver_cap) {
  OgtcHypergraph built = build_ogtc_hypergraph(inst, p1, p2, combination_cap);
  const int d = static_cast<int>(built.diff.size());
  if (d == 0)
    return CrossoverResult{p1, objective(inst, p1), {"blp:hypergraph", "trivial:no-diff"}};

  HypergraphMwisResult best = hypergraph_mwis_exact(built.hypergraph, solver_cap);

  std::vector<char> selected(static_cast<std::size_t>(2 * d), 0);
  for (int v : best.vertices) selected[static_cast<std::size_t>(v)] = 1;
  for (int k = 0; k < d; ++k) {
    int picks = selected[static_cast<std::size_t>(built.positive_vertex(k))] +
                selected[static_cast<std::size_t>(built.negative_vertex(k))];
    if (picks != 1)
      fail(ErrorCode::pair_property_violated,
           "optimal set does not pick exactly one vertex per coordinate pair");
  }

  Genotype offspring = p1;
  for (int k = 0; k < d; ++k)
    offspring.set(built.diff[static_cast<std::size_t>(k)],
                  selected[static_cast<std::size_t>(built.positive_vertex(k))] != 0);

  Int effective_value = built.fixed_objective;
  for (int k = 0; k < d; ++k)
    if (offspring[built.diff[static_cast<std::size_t>(k)]])
      effective_value +=
          built.effective_objective[static_cast<std::size_t>(built.diff[static_cast<std::size_t>(k)])];
  if (best.weight != effective_value + built.lambda * d - built.fixed_objective)
    throw std::logic_error("hypergraph weight identity failed");
  if (!feasible(inst, offspring))
    throw std::logic_error("hypergraph crossover produced an infeasible offspring");

  return CrossoverResult{offspring, objective(inst, offspring),
                         {"blp:hypergraph", "hypergraph:exact-mwis"}};
}

Hypergraph build_knapsack_hypergraph(const BlpInstance& inst, const Genotype& p1,
                                     const Genotype& p2, int combination_cap) {
  if (inst.sense() != Sense::maximize)
    fail(ErrorCode::validation_error, "the simplified construction applies to maximization");
  for (int i = 0; i < inst.row_count(); ++i) {
    const Row& row = inst.row(i);
    if (row.sense != RowSense::le)
      fail(ErrorCode::validation_error, "row " + std::to_string(i) + " is not a <= row");
    for (const RowTerm& t : row.terms)
      if (t.coeff < 0)
        fail(ErrorCode::negative_coefficient,
             "row " + std::to_string(i) + ", column " + std::to_string(t.col));
  }
  if (!feasible(inst, p1)) fail(ErrorCode::infeasible_parents, "first parent is infeasible");
  if (!feasible(inst, p2)) fail(ErrorCode::infeasible_parents, "second parent is infeasible");

  std::vector<int> diff = diff_set(p1, p2).indices;
  std::vector<int> diff_position(static_cast<std::size_t>(inst.var_count()), -1);
  for (std::size_t k = 0; k < diff.size(); ++k)
    diff_position[static_cast<std::size_t>(diff[k])] = static_cast<int>(k);

  std::vector<std::vector<int>> edges;
  for (const Row& row : inst.rows())
    append_violation_edges(row, diff_position, p1, combination_cap, edges,
                           [](int pos, bool one) { return one ? pos : -1; });

  std::vector<Int> weights;
  weights.reserve(diff.size());
  for (int j : diff) weights.push_back(inst.objective_coeff(j));
  return Hypergraph(static_cast<int>(diff.size()), std::move(edges), std::move(weights));
}

std::pair<Hypergraph, TwoColoring> hardness_gadget(const WeightedGraph& g) {
  const int n = g.vertex_count();
  if (n < 1) fail(ErrorCode::bad_params, "gadget needs at least one vertex");
  std::vector<std::vector<int>> edges;
  edges.reserve(g.edges().size() * static_cast<std::size_t>(n));
  for (auto [u, v] : g.edges())
    for (int k = 0; k < n; ++k) edges.push_back({u, v, n + k});
  Hypergraph h(2 * n, std::move(edges), std::vector<Int>(static_cast<std::size_t>(2 * n), 1));
  TwoColoring coloring;
  for (int v = 0; v < n; ++v) coloring.class1.push_back(v);
  for (int v = n; v < 2 * n; ++v) coloring.class2.push_back(v);
  return {std::move(h), std::move(coloring)};
}

}  // namespace ogtc
