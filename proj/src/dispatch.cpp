#include "ogtc/dispatch.hpp"

#include <sstream>

#include "ogtc/hypergraph.hpp"

namespace ogtc {

Method method_from_string(const std::string& name) {
  if (name == "flow") return Method::flow;
  if (name == "hypergraph") return Method::hypergraph;
  if (name == "oracle") return Method::oracle;
  fail(ErrorCode::bad_params, "unknown method '" + name + "'");
}

const char* to_string(Method method) {
  switch (method) {
    case Method::flow: return "flow";
    case Method::hypergraph: return "hypergraph";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

BlpInstance encode_as_blp(const ParsedProblem& problem) {
  switch (problem.kind) {
    case ProblemKind::graph_mwis: return mwis_as_blp(problem.graph());
    case ProblemKind::graph_clique: return clique_as_blp(problem.graph());
    case ProblemKind::graph_cover: return vertex_cover_as_blp(problem.graph());
    case ProblemKind::splp: return splp_as_blp(problem.splp());
    case ProblemKind::cnf: return mwis_as_blp(build_sat_graph(problem.cnf()).graph);
    default: return problem.blp();
  }
}

namespace {

CrossoverResult cnf_crossover(const CnfInstance& cnf, Method method, const Genotype& y1,
                              const Genotype& y2, const DispatchCaps& caps) {
  SatGraph sg = build_sat_graph(cnf);
  Genotype child;
  std::vector<std::string> trace{"max-3-sat:graph-representation"};
  if (method == Method::flow) {
    CrossoverResult inner = ogtc_mwis(sg.graph, encode_assignment(sg, y1),
                                      encode_assignment(sg, y2));
    child = decode_independent_set(sg, inner.offspring);
    trace.insert(trace.end(), inner.trace.begin(), inner.trace.end());
  } else {
    BlpInstance encoded = mwis_as_blp(sg.graph);
    CrossoverResult inner =
        method == Method::oracle
            ? brute_force_ogtc(encoded, encode_assignment(sg, y1), encode_assignment(sg, y2),
                               caps.oracle_diff_cap)
            : ogtc_via_hypergraph(encoded, encode_assignment(sg, y1),
                                  encode_assignment(sg, y2), caps.combination_cap,
                                  caps.solver_cap);
    child = decode_independent_set(sg, inner.offspring);
    trace.insert(trace.end(), inner.trace.begin(), inner.trace.end());
  }
  return CrossoverResult{child, f_sat(cnf, child), std::move(trace)};
}

}  // namespace

CrossoverResult dispatch_crossover(const ParsedProblem& problem, Method method,
                                   const Genotype& p1, const Genotype& p2,
                                   const DispatchCaps& caps) {
  if (problem.kind == ProblemKind::cnf)
    return cnf_crossover(problem.cnf(), method, p1, p2, caps);

  if (method == Method::oracle)
    return brute_force_ogtc(encode_as_blp(problem), p1, p2, caps.oracle_diff_cap);
  if (method == Method::hypergraph)
    return ogtc_via_hypergraph(encode_as_blp(problem), p1, p2, caps.combination_cap,
                               caps.solver_cap);

  switch (problem.kind) {
    case ProblemKind::graph_mwis: return ogtc_mwis(problem.graph(), p1, p2);
    case ProblemKind::graph_clique: return ogtc_max_clique(problem.graph(), p1, p2);
    case ProblemKind::graph_cover: return ogtc_min_vertex_cover(problem.graph(), p1, p2);
    case ProblemKind::packing: return ogtc_set_packing(problem.blp(), p1, p2);
    case ProblemKind::partition: return ogtc_set_partition(problem.blp(), p1, p2);
    case ProblemKind::covering:
      return ogtc_set_covering_exact(problem.blp(), p1, p2, caps.oracle_diff_cap);
    case ProblemKind::splp: return ogtc_splp(problem.splp(), p1, p2);
    case ProblemKind::knapsack:
    case ProblemKind::blp: {
      if (auto fast = ogtc_knapsack_fastpath(problem.blp(), p1, p2)) return *fast;
      fail(ErrorCode::validation_error,
           "the fast path does not apply here; rerun with --method hypergraph or oracle");
    }
    case ProblemKind::cnf: break;  // handled above
  }
  fail(ErrorCode::bad_params, "unsupported problem kind");
}

VerifyReport verify_solution(const ParsedProblem& problem, const Genotype& x) {
  VerifyReport report;
  std::ostringstream detail;
  switch (problem.kind) {
    case ProblemKind::graph_mwis:
      report.feasible = is_independent_set(problem.graph(), x);
      report.objective = subset_weight(problem.graph(), x);
      detail << (report.feasible ? "independent set" : "not an independent set");
      break;
    case ProblemKind::graph_clique:
      report.feasible = is_clique(problem.graph(), x);
      report.objective = subset_weight(problem.graph(), x);
      detail << (report.feasible ? "clique" : "not a clique");
      break;
    case ProblemKind::graph_cover:
      report.feasible = is_vertex_cover(problem.graph(), x);
      report.objective = subset_weight(problem.graph(), x);
      detail << (report.feasible ? "vertex cover" : "not a vertex cover");
      break;
    case ProblemKind::cnf:
      report.feasible = true;
      report.objective = f_sat(problem.cnf(), x);
      detail << report.objective << " of " << problem.cnf().clause_count()
             << " clauses satisfied";
      break;
    case ProblemKind::splp:
      report.feasible = splp_feasible(problem.splp(), x);
      report.objective = splp_value(problem.splp(), x);
      detail << (report.feasible ? "assignment constraints hold" : "assignment constraints fail");
      break;
    default: {
      const BlpInstance& inst = problem.blp();
      report.feasible = feasible(inst, x);
      report.objective = objective(inst, x);
      int violated = 0;
      for (const Row& row : inst.rows())
        if (!row_satisfied(row, x)) ++violated;
      detail << violated << " of " << inst.row_count() << " rows violated";
      break;
    }
  }
  report.detail = detail.str();
  return report;
}

std::unique_ptr<GaProblem> make_ga_problem(const ParsedProblem& problem,
                                           const DispatchCaps& caps) {
  switch (problem.kind) {
    case ProblemKind::graph_mwis: return make_mwis_ga_problem(problem.graph());
    case ProblemKind::packing: return make_packing_ga_problem(problem.blp());
    case ProblemKind::partition: return make_partition_ga_problem(problem.blp());
    case ProblemKind::covering:
      return make_covering_ga_problem(problem.blp(), caps.oracle_diff_cap);
    case ProblemKind::cnf: return make_cnf_ga_problem(problem.cnf());
    case ProblemKind::splp: return make_splp_ga_problem(problem.splp());
    case ProblemKind::knapsack:
    case ProblemKind::blp:
      return make_blp_ga_problem(problem.blp(), caps.combination_cap, caps.solver_cap,
                                 caps.oracle_diff_cap);
    case ProblemKind::graph_clique:
    case ProblemKind::graph_cover:
      fail(ErrorCode::bad_params,
           "the harness runs on mwis graphs; clique and cover are crossover-only kinds");
  }
  fail(ErrorCode::bad_params, "unsupported problem kind");
}

}  // namespace ogtc
