#include "ogtc/reductions.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ogtc/flow.hpp"

namespace ogtc {

namespace {

// Rows of ones with the given sense and right-hand side one.
void check_unit_rows(const BlpInstance& inst, RowSense sense, ErrorCode code,
                     const char* what) {
  for (int i = 0; i < inst.row_count(); ++i) {
    const Row& row = inst.row(i);
    if (row.sense != sense || row.rhs != 1)
      fail(code, std::string("row ") + std::to_string(i) + " is not a " + what + " row");
    for (const RowTerm& t : row.terms)
      if (t.coeff != 1)
        fail(code, std::string("row ") + std::to_string(i) + " has a non-unit coefficient");
  }
}

void check_parent(const BlpInstance& inst, const Genotype& p, const char* which) {
  if (!feasible(inst, p))
    fail(ErrorCode::infeasible_parents, std::string(which) + " parent is infeasible");
}

}  // namespace

ReductionAdapter identity_adapter(const BlpInstance& inst, std::string label) {
  ReductionAdapter adapter;
  adapter.label = std::move(label);
  adapter.beta = [](const Genotype& x) { return x; };
  adapter.beta_inverse = [](const Genotype& x) { return x; };
  adapter.coord_map.resize(static_cast<std::size_t>(inst.var_count()));
  for (int j = 0; j < inst.var_count(); ++j)
    adapter.coord_map[static_cast<std::size_t>(j)] = {CoordMode::copy, j};
  adapter.source_feasible = [inst](const Genotype& x) { return feasible(inst, x); };
  adapter.source_value = [inst](const Genotype& x) { return objective(inst, x); };
  adapter.source_sense = inst.sense();
  return adapter;
}

CrossoverFn compose_ogtc(ReductionAdapter adapter, CrossoverFn target_ogtc) {
  return [adapter = std::move(adapter), target = std::move(target_ogtc)](
             const Genotype& p1, const Genotype& p2) {
    CrossoverResult inner = target(adapter.beta(p1), adapter.beta(p2));
    Genotype mapped = adapter.beta_inverse(inner.offspring);
    if (!gene_transmitting(mapped, p1, p2))
      fail(ErrorCode::adapter_contract_violation,
           "mapped offspring violates gene transmission in the source problem");
    if (!adapter.source_feasible(mapped))
      fail(ErrorCode::adapter_contract_violation,
           "mapped offspring is infeasible in the source problem");
    CrossoverResult out{mapped, adapter.source_value(mapped), {adapter.label}};
    out.trace.insert(out.trace.end(), inner.trace.begin(), inner.trace.end());
    return out;
  };
}

WeightedGraph conflict_graph(const BlpInstance& packing) {
  check_unit_rows(packing, RowSense::le, ErrorCode::not_a_packing_instance, "packing");
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < packing.row_count(); ++i) {
    std::vector<int> cols = packing.support(i);
    for (std::size_t a = 0; a < cols.size(); ++a)
      for (std::size_t b = a + 1; b < cols.size(); ++b)
        edges.emplace(cols[a], cols[b]);
  }
  return WeightedGraph(packing.var_count(), {edges.begin(), edges.end()},
                       packing.objective_coeffs());
}

CrossoverResult ogtc_set_packing(const BlpInstance& packing, const Genotype& p1,
                                 const Genotype& p2) {
  if (packing.sense() != Sense::maximize)
    fail(ErrorCode::not_a_packing_instance, "packing instances maximize");
  WeightedGraph graph = conflict_graph(packing);
  check_parent(packing, p1, "first");
  check_parent(packing, p2, "second");
  CrossoverFn lifted = compose_ogtc(
      identity_adapter(packing, "set-packing:conflict-graph"),
      [graph](const Genotype& a, const Genotype& b) { return ogtc_mwis(graph, a, b); });
  return lifted(p1, p2);
}

std::pair<BlpInstance, ReductionAdapter> partition_to_packing(const BlpInstance& partition) {
  check_unit_rows(partition, RowSense::eq, ErrorCode::validation_error, "partition");
  if (partition.sense() != Sense::minimize)
    fail(ErrorCode::validation_error, "partition instances minimize");

  Int lambda = 1;
  for (Int c : partition.objective_coeffs()) lambda += 2 * (c < 0 ? -c : c);
  std::vector<Int> coverage(static_cast<std::size_t>(partition.var_count()), 0);
  std::vector<Row> le_rows;
  le_rows.reserve(static_cast<std::size_t>(partition.row_count()));
  for (const Row& row : partition.rows()) {
    for (const RowTerm& t : row.terms) coverage[static_cast<std::size_t>(t.col)] += 1;
    le_rows.push_back(Row{row.terms, 1, RowSense::le});
  }
  std::vector<Int> weights(static_cast<std::size_t>(partition.var_count()));
  for (int j = 0; j < partition.var_count(); ++j)
    weights[static_cast<std::size_t>(j)] =
        lambda * coverage[static_cast<std::size_t>(j)] - partition.objective_coeff(j);

  BlpInstance packing(Sense::maximize, std::move(weights), std::move(le_rows));
  ReductionAdapter adapter = identity_adapter(partition, "set-partition:penalty-packing");
  return {std::move(packing), std::move(adapter)};
}

CrossoverResult ogtc_set_partition(const BlpInstance& partition, const Genotype& p1,
                                   const Genotype& p2) {
  auto [packing, adapter] = partition_to_packing(partition);
  check_parent(partition, p1, "first");
  check_parent(partition, p2, "second");
  CrossoverFn lifted = compose_ogtc(
      std::move(adapter), [packing = std::move(packing)](const Genotype& a, const Genotype& b) {
        return ogtc_set_packing(packing, a, b);
      });
  try {
    return lifted(p1, p2);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::adapter_contract_violation)
      fail(ErrorCode::partition_violated, "offspring does not satisfy every equality row");
    throw;
  }
}

SplpInstance::SplpInstance(std::vector<Int> opening, std::vector<std::vector<Int>> assignment)
    : opening_costs(std::move(opening)), assignment_costs(std::move(assignment)) {
  if (assignment_costs.size() != opening_costs.size())
    fail(ErrorCode::validation_error, "one assignment-cost row per facility");
  clients_ = assignment_costs.empty() ? 0 : static_cast<int>(assignment_costs[0].size());
  for (const auto& row : assignment_costs)
    if (static_cast<int>(row.size()) != clients_)
      fail(ErrorCode::validation_error, "ragged assignment-cost matrix");
  for (Int c : opening_costs)
    if (c < 0) fail(ErrorCode::validation_error, "opening costs must be nonnegative");
  for (const auto& row : assignment_costs)
    for (Int c : row)
      if (c < 0) fail(ErrorCode::validation_error, "assignment costs must be nonnegative");
}

bool splp_feasible(const SplpInstance& s, const Genotype& xy) {
  if (xy.size() != s.var_count())
    fail(ErrorCode::length_mismatch, "genotype length does not match facility-location layout");
  for (int l = 0; l < s.client_count(); ++l) {
    int served = 0;
    for (int k = 0; k < s.facility_count(); ++k) served += xy[s.x_index(k, l)];
    if (served != 1) return false;
  }
  for (int k = 0; k < s.facility_count(); ++k)
    for (int l = 0; l < s.client_count(); ++l)
      if (xy[s.x_index(k, l)] && !xy[s.y_index(k)]) return false;
  return true;
}

Int splp_value(const SplpInstance& s, const Genotype& xy) {
  Int total = 0;
  for (int k = 0; k < s.facility_count(); ++k) {
    if (xy[s.y_index(k)]) total += s.opening_costs[static_cast<std::size_t>(k)];
    for (int l = 0; l < s.client_count(); ++l)
      if (xy[s.x_index(k, l)])
        total += s.assignment_costs[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
  }
  return total;
}

BlpInstance splp_as_blp(const SplpInstance& s) {
  const int n = s.var_count();
  std::vector<Int> c(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < s.facility_count(); ++k) {
    c[static_cast<std::size_t>(s.y_index(k))] = s.opening_costs[static_cast<std::size_t>(k)];
    for (int l = 0; l < s.client_count(); ++l)
      c[static_cast<std::size_t>(s.x_index(k, l))] =
          s.assignment_costs[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
  }
  std::vector<Row> rows;
  for (int l = 0; l < s.client_count(); ++l) {
    Row row;
    for (int k = 0; k < s.facility_count(); ++k) row.terms.push_back({s.x_index(k, l), 1});
    row.rhs = 1;
    row.sense = RowSense::eq;
    rows.push_back(std::move(row));
  }
  for (int k = 0; k < s.facility_count(); ++k)
    for (int l = 0; l < s.client_count(); ++l)
      rows.push_back(Row{{{s.x_index(k, l), 1}, {s.y_index(k), -1}}, 0, RowSense::le});
  return BlpInstance(Sense::minimize, std::move(c), std::move(rows));
}

namespace {

std::pair<BlpInstance, ReductionAdapter> splp_packing_form(const SplpInstance& s, Int lambda) {
  const int n = s.var_count();
  const int K = s.facility_count();
  const int L = s.client_count();

  std::vector<Int> weights(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < K; ++k) {
    weights[static_cast<std::size_t>(s.y_index(k))] =
        s.opening_costs[static_cast<std::size_t>(k)];
    for (int l = 0; l < L; ++l)
      weights[static_cast<std::size_t>(s.x_index(k, l))] =
          lambda - s.assignment_costs[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
  }
  std::vector<Row> rows;
  for (int l = 0; l < L; ++l) {
    Row row;
    for (int k = 0; k < K; ++k) row.terms.push_back({s.x_index(k, l), 1});
    row.rhs = 1;
    row.sense = RowSense::le;
    rows.push_back(std::move(row));
  }
  for (int k = 0; k < K; ++k)
    for (int l = 0; l < L; ++l)
      rows.push_back(Row{{{s.y_index(k), 1}, {s.x_index(k, l), 1}}, 1, RowSense::le});
  BlpInstance packing(Sense::maximize, std::move(weights), std::move(rows));

  // Facility-open flags are stored complemented on the packing side.
  ReductionAdapter adapter;
  adapter.label = "splp:penalty-packing";
  auto flip_y = [s](const Genotype& g) {
    Genotype out = g;
    for (int k = 0; k < s.facility_count(); ++k)
      out.set(s.y_index(k), !g[s.y_index(k)]);
    return out;
  };
  adapter.beta = flip_y;
  adapter.beta_inverse = flip_y;
  adapter.coord_map.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < K * L; ++j)
    adapter.coord_map[static_cast<std::size_t>(j)] = {CoordMode::copy, j};
  for (int k = 0; k < K; ++k)
    adapter.coord_map[static_cast<std::size_t>(s.y_index(k))] = {CoordMode::negate,
                                                                 s.y_index(k)};
  adapter.source_feasible = [s](const Genotype& xy) { return splp_feasible(s, xy); };
  adapter.source_value = [s](const Genotype& xy) { return splp_value(s, xy); };
  adapter.source_sense = Sense::minimize;
  return {std::move(packing), std::move(adapter)};
}

Int splp_base_lambda(const SplpInstance& s) {
  Int worst = 0;
  for (int l = 0; l < s.client_count(); ++l) {
    Int cheapest = std::numeric_limits<Int>::max();
    for (int k = 0; k < s.facility_count(); ++k)
      cheapest = std::min(cheapest,
                          s.opening_costs[static_cast<std::size_t>(k)] +
                              s.assignment_costs[static_cast<std::size_t>(k)]
                                                [static_cast<std::size_t>(l)]);
    if (s.facility_count() > 0) worst = std::max(worst, cheapest);
  }
  return worst + 1;
}

}  // namespace

std::pair<BlpInstance, ReductionAdapter> splp_to_packing(const SplpInstance& s) {
  return splp_packing_form(s, splp_base_lambda(s));
}

CrossoverResult ogtc_splp(const SplpInstance& s, const Genotype& p1, const Genotype& p2) {
  if (!splp_feasible(s, p1))
    fail(ErrorCode::infeasible_parents, "first parent violates the facility constraints");
  if (!splp_feasible(s, p2))
    fail(ErrorCode::infeasible_parents, "second parent violates the facility constraints");

  // The penalty must beat the cost of serving each client through either
  // parent's facility, otherwise the packing optimum may drop a client that
  // both parents serve expensively.
  Int lambda = splp_base_lambda(s);
  for (int l = 0; l < s.client_count(); ++l) {
    Int parental = std::numeric_limits<Int>::max();
    for (int k = 0; k < s.facility_count(); ++k) {
      if (p1[s.x_index(k, l)] || p2[s.x_index(k, l)])
        parental = std::min(parental,
                            s.opening_costs[static_cast<std::size_t>(k)] +
                                s.assignment_costs[static_cast<std::size_t>(k)]
                                                  [static_cast<std::size_t>(l)]);
    }
    lambda = std::max(lambda, parental + 1);
  }

  auto [packing, adapter] = splp_packing_form(s, lambda);
  CrossoverFn lifted = compose_ogtc(
      std::move(adapter), [packing = std::move(packing)](const Genotype& a, const Genotype& b) {
        return ogtc_set_packing(packing, a, b);
      });
  return lifted(p1, p2);
}

std::optional<CrossoverResult> ogtc_knapsack_fastpath(const BlpInstance& inst,
                                                      const Genotype& p1, const Genotype& p2) {
  if (inst.sense() != Sense::maximize) return std::nullopt;
  for (const Row& row : inst.rows()) {
    if (row.sense != RowSense::le) return std::nullopt;
    for (const RowTerm& t : row.terms)
      if (t.coeff < 0) return std::nullopt;
  }
  check_parent(inst, p1, "first");
  check_parent(inst, p2, "second");

  DiffSet diff = diff_set(p1, p2);
  std::vector<char> in_diff(static_cast<std::size_t>(inst.var_count()), 0);
  for (int j : diff.indices) in_diff[static_cast<std::size_t>(j)] = 1;

  std::vector<std::pair<int, int>> conflicts;
  for (const Row& row : inst.rows()) {
    Int fixed = 0;
    std::vector<std::pair<int, Int>> free_terms;
    for (const RowTerm& t : row.terms) {
      if (t.coeff == 0) continue;
      if (in_diff[static_cast<std::size_t>(t.col)])
        free_terms.emplace_back(t.col, t.coeff);
      else if (p1[t.col])
        fixed += t.coeff;
    }
    if (free_terms.size() > 2) return std::nullopt;
    if (free_terms.size() == 2 &&
        fixed + free_terms[0].second + free_terms[1].second > row.rhs) {
      int u = free_terms[0].first;
      int v = free_terms[1].first;
      // Feasible parents rule out a violating pair on the same side.
      if (p1[u] == p1[v])
        throw std::logic_error("violating pair on one parent side despite feasible parents");
      conflicts.emplace_back(u, v);
    }
  }

  Genotype offspring = p1;
  BipartiteWeighted sub;
  std::vector<int> position(static_cast<std::size_t>(inst.var_count()), -1);
  std::vector<char> on_a(static_cast<std::size_t>(inst.var_count()), 0);
  for (int j : diff.indices) {
    offspring.set(j, false);
    if (inst.objective_coeff(j) <= 0) continue;
    if (p1[j]) {
      on_a[static_cast<std::size_t>(j)] = 1;
      position[static_cast<std::size_t>(j)] = static_cast<int>(sub.a_weights.size());
      sub.a_weights.push_back(inst.objective_coeff(j));
      sub.a_labels.push_back(j);
    } else {
      position[static_cast<std::size_t>(j)] = static_cast<int>(sub.b_weights.size());
      sub.b_weights.push_back(inst.objective_coeff(j));
      sub.b_labels.push_back(j);
    }
  }
  for (auto [u, v] : conflicts) {
    if (position[static_cast<std::size_t>(u)] < 0 || position[static_cast<std::size_t>(v)] < 0)
      continue;  // a dropped coordinate cannot violate anything
    int a = on_a[static_cast<std::size_t>(u)] ? u : v;
    int b = on_a[static_cast<std::size_t>(u)] ? v : u;
    sub.edges.emplace_back(position[static_cast<std::size_t>(a)],
                           position[static_cast<std::size_t>(b)]);
  }
  if (!sub.a_weights.empty() || !sub.b_weights.empty()) {
    BipartiteMwisResult picked = bipartite_mwis(sub);
    for (int a : picked.a_selected) offspring.set(sub.a_labels[static_cast<std::size_t>(a)], true);
    for (int b : picked.b_selected) offspring.set(sub.b_labels[static_cast<std::size_t>(b)], true);
  }
  if (!feasible(inst, offspring))
    throw std::logic_error("knapsack fast path produced an infeasible offspring");
  return CrossoverResult{offspring, objective(inst, offspring), {"knapsack:fastpath-bipartite"}};
}

Genotype ScpRestriction::expand(const Genotype& residual_solution) const {
  if (residual_solution.size() != static_cast<int>(free_columns.size()))
    fail(ErrorCode::length_mismatch, "residual solution length mismatch");
  Genotype full = base;
  for (std::size_t i = 0; i < free_columns.size(); ++i)
    full.set(free_columns[i], residual_solution[static_cast<int>(i)]);
  return full;
}

ScpRestriction restrict_set_covering(const BlpInstance& covering, const Genotype& p1,
                                     const Genotype& p2) {
  check_unit_rows(covering, RowSense::ge, ErrorCode::validation_error, "covering");
  if (covering.sense() != Sense::minimize)
    fail(ErrorCode::validation_error, "covering instances minimize");
  check_parent(covering, p1, "first");
  check_parent(covering, p2, "second");

  DiffSet diff = diff_set(p1, p2);
  std::vector<int> position(static_cast<std::size_t>(covering.var_count()), -1);
  for (std::size_t i = 0; i < diff.indices.size(); ++i)
    position[static_cast<std::size_t>(diff.indices[i])] = static_cast<int>(i);

  Genotype base = p1;
  for (int j : diff.indices) base.set(j, false);

  std::vector<Int> costs;
  costs.reserve(diff.indices.size());
  for (int j : diff.indices) costs.push_back(covering.objective_coeff(j));

  std::vector<Row> residual_rows;
  for (int i = 0; i < covering.row_count(); ++i) {
    const Row& row = covering.row(i);
    bool covered = false;
    Row reduced;
    for (const RowTerm& t : row.terms) {
      if (t.coeff == 0) continue;
      int pos = position[static_cast<std::size_t>(t.col)];
      if (pos < 0) {
        if (base[t.col]) covered = true;
      } else {
        reduced.terms.push_back({pos, 1});
      }
    }
    if (covered) continue;
    if (reduced.terms.empty())
      throw std::logic_error("uncovered row with no free column despite feasible parents");
    reduced.rhs = 1;
    reduced.sense = RowSense::ge;
    residual_rows.push_back(std::move(reduced));
  }

  ScpRestriction out{BlpInstance(Sense::minimize, std::move(costs), std::move(residual_rows)),
                     diff.indices, std::move(base)};
  return out;
}

namespace {

// Exact minimum-cost cover over the residual problem. Depth-first search in
// index order with the zero branch first, so the first optimum found is the
// lexicographically smallest; the bound sums each uncovered row's cheapest
// remaining column and divides by the best remaining coverage.
class CoverSearch {
 public:
  explicit CoverSearch(const BlpInstance& residual) : inst_(residual) {
    n_ = inst_.var_count();
    m_ = inst_.row_count();
    col_rows_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < m_; ++i)
      for (int j : inst_.support(i)) col_rows_[static_cast<std::size_t>(j)].push_back(i);
    suffix_min_.assign(static_cast<std::size_t>(m_),
                       std::vector<Int>(static_cast<std::size_t>(n_) + 1,
                                        std::numeric_limits<Int>::max()));
    for (int i = 0; i < m_; ++i) {
      auto& mins = suffix_min_[static_cast<std::size_t>(i)];
      for (int j = n_ - 1; j >= 0; --j) {
        mins[static_cast<std::size_t>(j)] = mins[static_cast<std::size_t>(j) + 1];
        if (covers(j, i))
          mins[static_cast<std::size_t>(j)] =
              std::min(mins[static_cast<std::size_t>(j)],
                       std::max<Int>(inst_.objective_coeff(j), 0));
      }
    }
    suffix_maxcov_.assign(static_cast<std::size_t>(n_) + 1, 1);
    for (int j = n_ - 1; j >= 0; --j)
      suffix_maxcov_[static_cast<std::size_t>(j)] =
          std::max(suffix_maxcov_[static_cast<std::size_t>(j) + 1],
                   std::max<Int>(1, static_cast<Int>(col_rows_[static_cast<std::size_t>(j)].size())));
  }

  Genotype solve() {
    chosen_ = Genotype(n_);
    counts_.assign(static_cast<std::size_t>(m_), 0);
    uncovered_ = m_;
    cost_ = 0;
    have_best_ = false;
    // Negative-cost columns belong to every optimum.
    for (int j = 0; j < n_; ++j)
      if (inst_.objective_coeff(j) < 0) take(j);
    dfs(0);
    if (!have_best_) throw std::logic_error("residual covering problem has no solution");
    return best_;
  }

  Int best_cost() const { return best_cost_; }

 private:
  bool covers(int col, int row) const {
    const auto& rows = col_rows_[static_cast<std::size_t>(col)];
    return std::find(rows.begin(), rows.end(), row) != rows.end();
  }

  void take(int j) {
    chosen_.set(j, true);
    cost_ += inst_.objective_coeff(j);
    for (int i : col_rows_[static_cast<std::size_t>(j)])
      if (counts_[static_cast<std::size_t>(i)]++ == 0) --uncovered_;
  }

  void drop(int j) {
    chosen_.set(j, false);
    cost_ -= inst_.objective_coeff(j);
    for (int i : col_rows_[static_cast<std::size_t>(j)])
      if (--counts_[static_cast<std::size_t>(i)] == 0) ++uncovered_;
  }

  void record() {
    if (!have_best_ || cost_ < best_cost_ ||
        (cost_ == best_cost_ && lex_less(chosen_, best_))) {
      best_ = chosen_;
      best_cost_ = cost_;
      have_best_ = true;
    }
  }

  Int lower_bound(int idx) const {
    Int total = 0;
    for (int i = 0; i < m_; ++i) {
      if (counts_[static_cast<std::size_t>(i)] > 0) continue;
      Int cheapest = suffix_min_[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx)];
      if (cheapest == std::numeric_limits<Int>::max()) return cheapest;  // dead branch
      total += cheapest;
    }
    Int maxcov = suffix_maxcov_[static_cast<std::size_t>(idx)];
    return (total + maxcov - 1) / maxcov;
  }

  void dfs(int idx) {
    if (uncovered_ == 0) {
      record();  // remaining free columns stay zero
      return;
    }
    if (idx >= n_) return;
    Int bound = lower_bound(idx);
    if (bound == std::numeric_limits<Int>::max()) return;
    if (have_best_ && cost_ + bound >= best_cost_) return;
    if (chosen_[idx]) {  // pre-forced negative column
      dfs(idx + 1);
      return;
    }
    dfs(idx + 1);
    take(idx);
    dfs(idx + 1);
    drop(idx);
  }

  const BlpInstance& inst_;
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> col_rows_;
  std::vector<std::vector<Int>> suffix_min_;
  std::vector<Int> suffix_maxcov_;

  Genotype chosen_;
  std::vector<int> counts_;
  int uncovered_ = 0;
  Int cost_ = 0;
  Genotype best_;
  Int best_cost_ = 0;
  bool have_best_ = false;
};

}  // namespace

CrossoverResult ogtc_set_covering_exact(const BlpInstance& covering, const Genotype& p1,
                                        const Genotype& p2, int diff_cap) {
  ScpRestriction restriction = restrict_set_covering(covering, p1, p2);
  if (static_cast<int>(restriction.free_columns.size()) > diff_cap)
    fail(ErrorCode::diff_set_too_large,
         "diff set size " + std::to_string(restriction.free_columns.size()) + " exceeds cap " +
             std::to_string(diff_cap));
  CoverSearch search(restriction.residual);
  Genotype offspring = restriction.expand(search.solve());
  if (!feasible(covering, offspring))
    throw std::logic_error("exact covering search produced an infeasible offspring");
  return CrossoverResult{offspring, objective(covering, offspring),
                         {"set-covering:restriction", "set-covering:branch-and-bound"}};
}

DoubledCovering double_columns(const BlpInstance& covering) {
  check_unit_rows(covering, RowSense::ge, ErrorCode::validation_error, "covering");
  if (covering.sense() != Sense::minimize)
    fail(ErrorCode::validation_error, "covering instances minimize");
  const int n = covering.var_count();
  std::vector<Int> doubled_costs = covering.objective_coeffs();
  doubled_costs.insert(doubled_costs.end(), covering.objective_coeffs().begin(),
                       covering.objective_coeffs().end());
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(covering.row_count()));
  for (const Row& row : covering.rows()) {
    Row doubled = row;
    for (const RowTerm& t : row.terms) doubled.terms.push_back({t.col + n, t.coeff});
    rows.push_back(std::move(doubled));
  }
  DoubledCovering out{BlpInstance(Sense::minimize, std::move(doubled_costs), std::move(rows)),
                      Genotype(2 * n), Genotype(2 * n)};
  for (int j = 0; j < n; ++j) {
    out.p1.set(j, true);
    out.p2.set(j + n, true);
  }
  return out;
}

}  // namespace ogtc
