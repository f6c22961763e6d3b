#include "ogtc/maxsat.hpp"

namespace ogtc {

CnfInstance::CnfInstance(int var_count, std::vector<std::vector<Literal>> clauses)
    : n_(var_count), clauses_(std::move(clauses)) {
  if (n_ < 0) fail(ErrorCode::bad_params, "negative variable count");
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    const auto& clause = clauses_[i];
    if (clause.empty())
      fail(ErrorCode::validation_error, "clause " + std::to_string(i) + " is empty");
    if (clause.size() > 3)
      fail(ErrorCode::validation_error,
           "clause " + std::to_string(i) + " has more than three literals");
    for (const Literal& lit : clause)
      if (lit.var < 0 || lit.var >= n_)
        fail(ErrorCode::index_out_of_range,
             "clause " + std::to_string(i) + " references variable " + std::to_string(lit.var));
  }
}

namespace {

bool literal_true(const Literal& lit, const Genotype& y) {
  return y[lit.var] == lit.positive;
}

}  // namespace

Int f_sat(const CnfInstance& cnf, const Genotype& assignment) {
  if (assignment.size() != cnf.var_count())
    fail(ErrorCode::length_mismatch, "assignment length does not match variable count");
  Int satisfied = 0;
  for (const auto& clause : cnf.clauses()) {
    for (const Literal& lit : clause) {
      if (literal_true(lit, assignment)) {
        ++satisfied;
        break;
      }
    }
  }
  return satisfied;
}

SatGraph build_sat_graph(const CnfInstance& cnf) {
  const int n = cnf.var_count();
  const Int m = cnf.clause_count();

  SatGraph sg;
  sg.var_count = n;
  sg.clause_count = cnf.clause_count();

  int vertex_count = 2 * n;
  for (const auto& clause : cnf.clauses()) vertex_count += static_cast<int>(clause.size());

  std::vector<Int> weights(static_cast<std::size_t>(vertex_count), 1);
  for (int v = 0; v < 2 * n; ++v) weights[static_cast<std::size_t>(v)] = m;

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(sg.positive_vertex(i), sg.negative_vertex(i));

  int next = 2 * n;
  for (int c = 0; c < cnf.clause_count(); ++c) {
    const auto& clause = cnf.clauses()[static_cast<std::size_t>(c)];
    std::vector<int> members;
    for (const Literal& lit : clause) {
      int v = next++;
      members.push_back(v);
      sg.occurrences.push_back({v, c, lit});
      // The occurrence contradicts the opposite truth vertex.
      edges.emplace_back(v, lit.positive ? sg.negative_vertex(lit.var)
                                         : sg.positive_vertex(lit.var));
    }
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        edges.emplace_back(members[a], members[b]);
    sg.clause_occurrences.push_back(std::move(members));
  }

  sg.graph = WeightedGraph(vertex_count, std::move(edges), std::move(weights));
  return sg;
}

Genotype encode_assignment(const SatGraph& sg, const Genotype& y) {
  if (y.size() != sg.var_count)
    fail(ErrorCode::length_mismatch, "assignment length does not match variable count");
  Genotype selected(sg.graph.vertex_count());
  for (int i = 0; i < sg.var_count; ++i)
    selected.set(y[i] ? sg.positive_vertex(i) : sg.negative_vertex(i), true);
  for (const auto& members : sg.clause_occurrences) {
    for (int v : members) {
      const auto& occ = sg.occurrences[static_cast<std::size_t>(v - 2 * sg.var_count)];
      if (literal_true(occ.literal, y)) {
        selected.set(v, true);
        break;
      }
    }
  }
  return selected;
}

Genotype decode_independent_set(const SatGraph& sg, const Genotype& selected) {
  if (selected.size() != sg.graph.vertex_count())
    fail(ErrorCode::length_mismatch, "selection length does not match vertex count");
  if (!is_independent_set(sg.graph, selected))
    fail(ErrorCode::validation_error, "selection is not an independent set");
  Int threshold = static_cast<Int>(sg.var_count) * sg.clause_count;
  if (subset_weight(sg.graph, selected) < threshold)
    fail(ErrorCode::weight_below_threshold,
         "independent set weighs less than variables times clauses");

  Genotype y(sg.var_count);
  std::vector<char> decided(static_cast<std::size_t>(sg.var_count), 0);
  for (int i = 0; i < sg.var_count; ++i) {
    if (selected[sg.positive_vertex(i)]) {
      y.set(i, true);
      decided[static_cast<std::size_t>(i)] = 1;
    } else if (selected[sg.negative_vertex(i)]) {
      decided[static_cast<std::size_t>(i)] = 1;
    }
  }
  for (int i = 0; i < sg.var_count; ++i) {
    if (decided[static_cast<std::size_t>(i)]) continue;
    y.set(i, true);  // default when nothing constrains the variable
    for (const auto& occ : sg.occurrences) {
      if (occ.literal.var == i && selected[occ.vertex]) {
        y.set(i, occ.literal.positive);
        break;
      }
    }
  }
  return y;
}

Genotype ogtc_max3sat(const CnfInstance& cnf, const Genotype& y1, const Genotype& y2) {
  SatGraph sg = build_sat_graph(cnf);
  CrossoverResult best =
      ogtc_mwis(sg.graph, encode_assignment(sg, y1), encode_assignment(sg, y2));
  return decode_independent_set(sg, best.offspring);
}

}  // namespace ogtc
