#include <doctest.h>

#include "ogtc/dispatch.hpp"
#include "ogtc/io.hpp"

using namespace ogtc;

TEST_CASE("json program round trip") {
  std::string text = R"({"sense":"max","c":[3,1,2],
    "rows":[{"coeffs":[[0,1],[1,1],[2,1]],"b":2,"sense":"le"}]})";
  BlpInstance inst = parse_json_blp(text);
  CHECK(inst.var_count() == 3);
  CHECK(inst.row_count() == 1);
  CHECK(inst.sense() == Sense::maximize);

  BlpInstance again = parse_json_blp(serialize_json_blp(inst));
  CHECK(again.objective_coeffs() == inst.objective_coeffs());
  CHECK(again.row_count() == inst.row_count());
  CHECK(again.row(0).rhs == inst.row(0).rhs);

  BlpInstance minimal = parse_json_blp(R"({"sense":"min","c":[7]})");
  CHECK(minimal.var_count() == 1);
  CHECK(minimal.row_count() == 0);
}

TEST_CASE("json parse diagnostics") {
  try {
    parse_json_blp(R"({"sense":"max","c":[1],"rows":[{"coeffs":[[0,1]],"b":1,"sense":"lt"}]})");
    FAIL("bad sense token accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
    CHECK(std::string(e.what()).find("lt") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_json_blp("{"), Error);
  CHECK_THROWS_AS(parse_json_blp(R"({"c":[1]})"), Error);
}

TEST_CASE("dimacs graph round trip") {
  std::string text =
      "c the path used across the test suite\n"
      "p edge 3 2\n"
      "w 2 5\n"
      "e 1 2\n"
      "e 2 3\n";
  WeightedGraph g = parse_dimacs_graph(text);
  CHECK(g.vertex_count() == 3);
  CHECK(g.weights() == std::vector<Int>{1, 5, 1});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  WeightedGraph again = parse_dimacs_graph(serialize_dimacs_graph(g));
  CHECK(again.vertex_count() == g.vertex_count());
  CHECK(again.edges() == g.edges());
  CHECK(again.weights() == g.weights());

  CHECK_THROWS_AS(parse_dimacs_graph("e 1 2\n"), Error);
  CHECK_THROWS_AS(parse_dimacs_graph("p edge 2 1\ne 1 5\n"), Error);
}

TEST_CASE("dimacs cnf round trip") {
  std::string text = "p cnf 3 2\n1 -2 3 0\n-1 0\n";
  CnfInstance cnf = parse_dimacs_cnf(text);
  CHECK(cnf.var_count() == 3);
  CHECK(cnf.clause_count() == 2);
  CHECK(cnf.clauses()[0].size() == 3);
  CHECK_FALSE(cnf.clauses()[0][1].positive);

  CnfInstance again = parse_dimacs_cnf(serialize_dimacs_cnf(cnf));
  CHECK(again.var_count() == cnf.var_count());
  CHECK(again.clause_count() == cnf.clause_count());

  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 1 1\n2 0\n"), Error);
  CHECK_THROWS_AS(parse_dimacs_cnf("1 0\n"), Error);
}

TEST_CASE("orlib round trip") {
  std::string text =
      "2 3\n"
      "4 2 3\n"
      "2 1 2\n"
      "1 3\n";
  BlpInstance covering = parse_orlib(text, RowSense::ge, Sense::minimize);
  CHECK(covering.var_count() == 3);
  CHECK(covering.row_count() == 2);
  CHECK(covering.objective_coeffs() == std::vector<Int>{4, 2, 3});
  CHECK(covering.support(0) == std::vector<int>{0, 1});
  CHECK(covering.support(1) == std::vector<int>{2});

  BlpInstance again = parse_orlib(serialize_orlib(covering), RowSense::ge, Sense::minimize);
  CHECK(again.objective_coeffs() == covering.objective_coeffs());
  CHECK(again.support(0) == covering.support(0));

  CHECK_THROWS_AS(parse_orlib("2 3\n1 2\n", RowSense::ge, Sense::minimize), Error);
  CHECK_THROWS_AS(parse_orlib("1 1\n5\n1 7\n", RowSense::ge, Sense::minimize), Error);
}

TEST_CASE("json facility-location round trip") {
  SplpInstance s({5, 1}, {{2, 4}, {10, 0}});
  SplpInstance again = parse_json_splp(serialize_json_splp(s));
  CHECK(again.facility_count() == 2);
  CHECK(again.client_count() == 2);
  CHECK(again.opening_costs == s.opening_costs);
  CHECK(again.assignment_costs == s.assignment_costs);
}

TEST_CASE("generator contracts") {
  GeneratedInstance part = generate("random-partition", {}, 3);
  const BlpInstance& inst = part.problem.blp();
  CHECK(feasible(inst, part.p1));
  CHECK(feasible(inst, part.p2));
  CHECK_FALSE(part.p1 == part.p2);

  GeneratedInstance same_a = generate("random-packing", {{"n", 10}, {"m", 5}}, 9);
  GeneratedInstance same_b = generate("random-packing", {{"n", 10}, {"m", 5}}, 9);
  CHECK(serialize_problem(same_a.problem, FileFormat::json) ==
        serialize_problem(same_b.problem, FileFormat::json));
  CHECK(same_a.p1 == same_b.p1);
  CHECK(same_a.p2 == same_b.p2);

  GeneratedInstance graph = generate("random-graph", {{"n", 16}, {"p100", 30}}, 12);
  CHECK(is_independent_set(graph.problem.graph(), graph.p1));
  CHECK(is_independent_set(graph.problem.graph(), graph.p2));

  GeneratedInstance knap = generate("random-knapsack", {}, 5);
  CHECK(feasible(knap.problem.blp(), knap.p1));
  CHECK(feasible(knap.problem.blp(), knap.p2));

  GeneratedInstance splp = generate("random-splp", {{"k", 3}, {"l", 2}}, 8);
  CHECK(splp_feasible(splp.problem.splp(), splp.p1));

  CHECK_THROWS_AS(generate("no-such-family", {}, 1), Error);
  CHECK_THROWS_AS(generate("random-graph", {{"n", -4}}, 1), Error);
}

TEST_CASE("flow and oracle methods agree through the dispatcher") {
  GeneratedInstance graph = generate("random-graph", {{"n", 12}, {"p100", 35}}, 21);
  CrossoverResult flow = dispatch_crossover(graph.problem, Method::flow, graph.p1, graph.p2);
  CrossoverResult oracle =
      dispatch_crossover(graph.problem, Method::oracle, graph.p1, graph.p2);
  CrossoverResult hyper =
      dispatch_crossover(graph.problem, Method::hypergraph, graph.p1, graph.p2);
  CHECK(flow.value == oracle.value);
  CHECK(flow.value == hyper.value);

  GeneratedInstance pack = generate("random-packing", {{"n", 10}, {"m", 6}}, 22);
  CHECK(dispatch_crossover(pack.problem, Method::flow, pack.p1, pack.p2).value ==
        dispatch_crossover(pack.problem, Method::oracle, pack.p1, pack.p2).value);

  GeneratedInstance knap = generate("random-knapsack", {{"n", 10}}, 23);
  CHECK(dispatch_crossover(knap.problem, Method::flow, knap.p1, knap.p2).value ==
        dispatch_crossover(knap.problem, Method::oracle, knap.p1, knap.p2).value);
}

TEST_CASE("format helpers") {
  CHECK(format_from_path("x.json") == FileFormat::json);
  CHECK(format_from_path("x.cnf") == FileFormat::dimacs_cnf);
  CHECK(format_from_path("x.col") == FileFormat::dimacs_graph);
  CHECK_FALSE(format_from_path("noext").has_value());
  CHECK_THROWS_AS(format_from_string("yaml"), Error);
  CHECK_THROWS_AS(kind_from_string("sudoku"), Error);
}
