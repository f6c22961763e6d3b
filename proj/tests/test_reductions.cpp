#include <doctest.h>

#include "ogtc/io.hpp"
#include "ogtc/reductions.hpp"
#include "ogtc/selftest.hpp"

using namespace ogtc;

namespace {

BlpInstance packing_rows(std::vector<std::vector<int>> rows, std::vector<Int> c,
                         RowSense sense = RowSense::le, Sense obj = Sense::maximize) {
  std::vector<Row> out;
  for (auto& cols : rows) {
    Row row;
    for (int j : cols) row.terms.push_back({j, 1});
    row.rhs = 1;
    row.sense = sense;
    out.push_back(std::move(row));
  }
  return BlpInstance(obj, std::move(c), std::move(out));
}

}  // namespace

TEST_CASE("conflict graph construction") {
  BlpInstance packing = packing_rows({{0, 1}, {1, 2}}, {1, 5, 1});
  WeightedGraph g = conflict_graph(packing);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(g.weights() == std::vector<Int>{1, 5, 1});

  CHECK(conflict_graph(packing_rows({}, {1, 1, 1})).edges().empty());

  WeightedGraph triangle = conflict_graph(packing_rows({{0, 1, 2}}, {1, 1, 1}));
  CHECK(triangle.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  try {
    conflict_graph(BlpInstance(Sense::maximize, {1}, {Row{{{0, 2}}, 1, RowSense::le}}));
    FAIL("non-unit coefficient accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_packing_instance);
  }
}

TEST_CASE("set-packing crossover") {
  BlpInstance packing = packing_rows({{0, 1}, {1, 2}}, {1, 5, 1});
  CrossoverResult r =
      ogtc_set_packing(packing, Genotype::from_string("101"), Genotype::from_string("010"));
  CHECK(r.offspring.to_string() == "010");
  CHECK(r.value == 5);

  CHECK(ogtc_set_packing(packing, Genotype::from_string("010"), Genotype::from_string("010"))
            .offspring.to_string() == "010");

  BlpInstance disjoint = packing_rows({{0}, {1}}, {2, 7});
  CrossoverResult d =
      ogtc_set_packing(disjoint, Genotype::from_string("10"), Genotype::from_string("01"));
  CHECK(d.offspring.to_string() == "11");
  CHECK(d.value == 9);

  try {
    ogtc_set_packing(packing, Genotype::from_string("110"), Genotype::from_string("010"));
    FAIL("infeasible parent accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::infeasible_parents);
  }
}

TEST_CASE("set-partition penalty instance and crossover") {
  // columns {r0}, {r0,r1}, {r1} with unit costs
  BlpInstance part =
      packing_rows({{0, 1}, {1, 2}}, {1, 1, 1}, RowSense::eq, Sense::minimize);
  auto [penalty, adapter] = partition_to_packing(part);
  CHECK(penalty.objective_coeffs() == std::vector<Int>{6, 13, 6});  // lambda = 7
  CHECK(penalty.sense() == Sense::maximize);

  Genotype p1 = Genotype::from_string("010");
  Genotype p2 = Genotype::from_string("101");
  CrossoverResult r = ogtc_set_partition(part, p1, p2);
  CHECK(r.offspring.to_string() == "010");
  CHECK(r.value == 1);
  for (const Row& row : part.rows()) CHECK(row_value(row, r.offspring) == 1);

  CHECK(ogtc_set_partition(part, p2, p2).offspring == p2);

  BlpInstance identity =
      packing_rows({{0}, {1}}, {4, 9}, RowSense::eq, Sense::minimize);
  CrossoverResult unique =
      ogtc_set_partition(identity, Genotype::from_string("11"), Genotype::from_string("11"));
  CHECK(unique.offspring.to_string() == "11");
  CHECK(unique.value == 13);
}

TEST_CASE("compose with the identity adapter is a no-op") {
  BlpInstance packing = packing_rows({{0, 1}, {1, 2}}, {1, 5, 1});
  CrossoverFn direct = [&](const Genotype& a, const Genotype& b) {
    return ogtc_set_packing(packing, a, b);
  };
  CrossoverFn composed = compose_ogtc(identity_adapter(packing), direct);
  Genotype p1 = Genotype::from_string("101");
  Genotype p2 = Genotype::from_string("010");
  CHECK(composed(p1, p2).offspring == direct(p1, p2).offspring);
  CHECK(composed(p1, p2).value == direct(p1, p2).value);
}

TEST_CASE("negation adapter over the independent-set operator reproduces the cover operator") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    int n = 3 + static_cast<int>(rng() % 10);
    WeightedGraph g = random_graph(n, 0.3, 1, 9, rng);

    ReductionAdapter negate;
    negate.label = "vertex-cover:negation";
    negate.beta = [](const Genotype& x) { return x.complement(); };
    negate.beta_inverse = [](const Genotype& x) { return x.complement(); };
    for (int j = 0; j < n; ++j) negate.coord_map.push_back({CoordMode::negate, j});
    negate.source_feasible = [&g](const Genotype& x) { return is_vertex_cover(g, x); };
    negate.source_value = [&g](const Genotype& x) { return subset_weight(g, x); };
    negate.source_sense = Sense::minimize;
    CrossoverFn lifted = compose_ogtc(negate, [&g](const Genotype& a, const Genotype& b) {
      return ogtc_mwis(g, a, b);
    });

    Genotype c1 = random_independent_set(g, rng).complement();
    Genotype c2 = random_independent_set(g, rng).complement();
    CrossoverResult via_adapter = lifted(c1, c2);
    CrossoverResult direct = ogtc_min_vertex_cover(g, c1, c2);
    CHECK(via_adapter.offspring == direct.offspring);
    CHECK(via_adapter.value == direct.value);
  }
}

TEST_CASE("adapter soundness on sampled solutions") {
  std::mt19937_64 rng(37);
  BlpInstance part =
      packing_rows({{0, 1}, {1, 2}}, {1, 1, 1}, RowSense::eq, Sense::minimize);
  auto [penalty, adapter] = partition_to_packing(part);

  std::vector<Genotype> feasible_points;
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    Genotype x(3);
    for (int j = 0; j < 3; ++j)
      if (mask >> j & 1u) x.set(j, true);
    if (feasible(part, x)) feasible_points.push_back(x);
  }
  REQUIRE(feasible_points.size() >= 2);
  for (const Genotype& x : feasible_points) {
    CHECK(adapter.beta_inverse(adapter.beta(x)) == x);
    for (int j = 0; j < 3; ++j) {
      const CoordMap& cm = adapter.coord_map[static_cast<std::size_t>(j)];
      if (cm.mode == CoordMode::copy) CHECK(adapter.beta(x)[cm.target] == x[j]);
      if (cm.mode == CoordMode::negate) CHECK(adapter.beta(x)[cm.target] != x[j]);
    }
  }
  // order preservation with reversed sign (min source, max target)
  for (const Genotype& x : feasible_points)
    for (const Genotype& y : feasible_points)
      if (objective(part, x) < objective(part, y))
        CHECK(objective(penalty, adapter.beta(x)) > objective(penalty, adapter.beta(y)));
  (void)rng;
}

TEST_CASE("facility-location penalty constant") {
  SplpInstance s({5, 1}, {{2}, {10}});
  auto [packing, adapter] = splp_to_packing(s);
  // lambda = 1 + min(5+2, 1+10) = 8; x weights are lambda - c
  CHECK(packing.objective_coeffs() == std::vector<Int>{6, -2, 5, 1});
  CHECK(adapter.coord_map[0].mode == CoordMode::copy);
  CHECK(adapter.coord_map[2].mode == CoordMode::negate);  // first open flag
  CHECK(adapter.coord_map[3].mode == CoordMode::negate);

  SplpInstance zero({0}, {{0}});
  auto [zero_packing, zero_adapter] = splp_to_packing(zero);
  CHECK(zero_packing.objective_coeffs() == std::vector<Int>{1, 0});  // lambda = 1
}

TEST_CASE("facility-location crossover") {
  SplpInstance s({5, 1}, {{2}, {10}});
  // (x11, x21, y1, y2): p1 serves through facility 1, p2 through facility 2
  Genotype p1 = Genotype::from_string("1010");
  Genotype p2 = Genotype::from_string("0101");
  REQUIRE(splp_feasible(s, p1));
  REQUIRE(splp_feasible(s, p2));
  // gene-transmitting candidates cost 7, 8, 11, 16
  CrossoverResult r = ogtc_splp(s, p1, p2);
  CHECK(r.value == 7);
  CHECK(r.offspring == p1);

  CHECK(ogtc_splp(s, p2, p2).offspring == p2);

  SplpInstance free_open({0, 0}, {{1}, {3}});
  CrossoverResult f = ogtc_splp(free_open, p1, p2);
  CHECK(f.value == 1);      // serve through facility 1
  CHECK(f.offspring[0]);    // x11
  CHECK_FALSE(f.offspring[1]);

  try {
    ogtc_splp(s, Genotype::from_string("0010"), p2);
    FAIL("unserved client accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::infeasible_parents);
  }
}

TEST_CASE("facility-location crossover survives expensive parental facilities") {
  // Both parents serve the client through a facility pricier than the
  // instance-wide penalty baseline.
  SplpInstance s({0, 0, 0}, {{0}, {50}, {70}});
  Genotype p1(s.var_count()), p2(s.var_count());
  p1.set(s.x_index(1, 0), true);
  p1.set(s.y_index(1), true);
  p2.set(s.x_index(2, 0), true);
  p2.set(s.y_index(2), true);
  REQUIRE(splp_feasible(s, p1));
  REQUIRE(splp_feasible(s, p2));
  CrossoverResult r = ogtc_splp(s, p1, p2);
  CHECK(splp_feasible(s, r.offspring));
  CHECK(r.value == brute_force_ogtc(splp_as_blp(s), p1, p2).value);
  CHECK(r.value == 50);
}

TEST_CASE("the crossover strengthens the baseline penalty when parents need it") {
  SplpInstance s({0, 0, 0}, {{0}, {50}, {70}});
  Genotype p1(s.var_count()), p2(s.var_count());
  p1.set(s.x_index(1, 0), true);
  p1.set(s.y_index(1), true);
  p2.set(s.x_index(2, 0), true);
  p2.set(s.y_index(2), true);

  // With the instance-wide baseline penalty the packing optimum drops the
  // client both parents serve expensively; the mapped offspring is then
  // rejected as infeasible. The crossover's parent-aware penalty avoids it.
  auto [packing, adapter] = splp_to_packing(s);
  CrossoverFn lifted = compose_ogtc(
      adapter, [packing = std::move(packing)](const Genotype& a, const Genotype& b) {
        return ogtc_set_packing(packing, a, b);
      });
  try {
    lifted(p1, p2);
    FAIL("baseline penalty unexpectedly sufficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::adapter_contract_violation);
  }
  CHECK(ogtc_splp(s, p1, p2).value == 50);
}

TEST_CASE("facility-location matches the oracle on random instances") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 150; ++t) {
    SplpInstance s = random_splp(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4),
                                 12, 10, rng);
    Genotype p1 = random_splp_solution(s, rng);
    Genotype p2 = random_splp_solution(s, rng);
    CrossoverResult r = ogtc_splp(s, p1, p2);
    CHECK(r.value == brute_force_ogtc(splp_as_blp(s), p1, p2).value);
    CHECK(splp_feasible(s, r.offspring));
    CHECK(gene_transmitting(r.offspring, p1, p2));
  }
}

TEST_CASE("knapsack fast path") {
  BlpInstance knap(Sense::maximize, {2, 2},
                   {Row{{{0, 2}, {1, 3}}, 3, RowSense::le}});
  auto r = ogtc_knapsack_fastpath(knap, Genotype::from_string("10"), Genotype::from_string("01"));
  REQUIRE(r.has_value());
  CHECK(r->offspring.to_string() == "10");  // equal values; side-A preference
  CHECK(r->value == 2);

  BlpInstance free_inst(Sense::maximize, {3, -1, 2}, {});
  auto f = ogtc_knapsack_fastpath(free_inst, Genotype::from_string("110"),
                                  Genotype::from_string("001"));
  REQUIRE(f.has_value());
  CHECK(f->offspring.to_string() == "101");  // positive diff coordinates only
  CHECK(f->value == 5);

  // a row touching three differing coordinates disables the fast path
  BlpInstance wide(Sense::maximize, {1, 1, 1},
                   {Row{{{0, 1}, {1, 1}, {2, 1}}, 2, RowSense::le}});
  CHECK_FALSE(
      ogtc_knapsack_fastpath(wide, Genotype::from_string("110"), Genotype::from_string("001"))
          .has_value());
}

TEST_CASE("knapsack fast path matches the oracle") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 200; ++t) {
    GeneratedInstance inst = random_two_column_knapsack(
        6 + static_cast<int>(rng() % 11), 1 + static_cast<int>(rng() % 10), 5, 10, rng);
    const BlpInstance& knap = inst.problem.blp();
    auto r = ogtc_knapsack_fastpath(knap, inst.p1, inst.p2);
    REQUIRE(r.has_value());
    CHECK(r->value == brute_force_ogtc(knap, inst.p1, inst.p2).value);
    CHECK(feasible(knap, r->offspring));
    CHECK(gene_transmitting(r->offspring, inst.p1, inst.p2));
  }
}

TEST_CASE("set-covering restriction") {
  BlpInstance scp =
      packing_rows({{0, 1}, {1}}, {3, 4}, RowSense::ge, Sense::minimize);
  Genotype p1 = Genotype::from_string("11");
  Genotype p2 = Genotype::from_string("01");
  ScpRestriction restriction = restrict_set_covering(scp, p1, p2);
  CHECK(restriction.free_columns == std::vector<int>{0});
  CHECK(restriction.residual.row_count() == 0);  // column 1 covers both rows
  CHECK(restriction.base.to_string() == "01");

  CrossoverResult r = ogtc_set_covering_exact(scp, p1, p2);
  CHECK(r.offspring.to_string() == "01");
  CHECK(r.value == 4);

  // identical parents leave nothing free
  ScpRestriction fixed = restrict_set_covering(scp, p2, p2);
  CHECK(fixed.free_columns.empty());

  BlpInstance full =
      packing_rows({{0, 1}, {1, 2}}, {1, 1, 1}, RowSense::ge, Sense::minimize);
  ScpRestriction everything =
      restrict_set_covering(full, Genotype::from_string("101"), Genotype::from_string("010"));
  CHECK(everything.free_columns == std::vector<int>{0, 1, 2});
  CHECK(everything.residual.row_count() == 2);
}

TEST_CASE("exact covering crossover matches the oracle") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 150; ++t) {
    BlpInstance covering = random_covering(4 + static_cast<int>(rng() % 9),
                                           1 + static_cast<int>(rng() % 8), 10, rng);
    Genotype p1 = random_cover_solution(covering, rng);
    Genotype p2 = random_cover_solution(covering, rng);
    CrossoverResult r = ogtc_set_covering_exact(covering, p1, p2, 16);
    CrossoverResult expected = brute_force_ogtc(covering, p1, p2, 16);
    CHECK(r.value == expected.value);
    CHECK(r.offspring == expected.offspring);  // same lexicographic tie rule
  }

  BlpInstance one = packing_rows({{0}}, {1}, RowSense::ge, Sense::minimize);
  try {
    ogtc_set_covering_exact(one, Genotype::from_string("1"), Genotype::from_string("1"), 0);
    // d == 0 fits any cap
  } catch (const Error&) {
    FAIL("identical parents need no search");
  }
}

TEST_CASE("negative-cost columns are always taken by the exact covering search") {
  BlpInstance scp(Sense::minimize, {-2, 3},
                  {Row{{{1, 1}}, 1, RowSense::ge}});
  CrossoverResult r = ogtc_set_covering_exact(scp, Genotype::from_string("11"),
                                              Genotype::from_string("01"));
  CHECK(r.offspring.to_string() == "11");
  CHECK(r.value == 1);
}

TEST_CASE("column doubling") {
  BlpInstance identity2 =
      packing_rows({{0}, {1}}, {1, 1}, RowSense::ge, Sense::minimize);
  DoubledCovering doubled = double_columns(identity2);
  CHECK(doubled.instance.var_count() == 4);
  CHECK(doubled.instance.objective_coeffs() == std::vector<Int>{1, 1, 1, 1});
  CHECK(doubled.p1.to_string() == "1100");
  CHECK(doubled.p2.to_string() == "0011");
  CHECK(doubled.instance.support(0) == std::vector<int>{0, 2});

  CrossoverResult r = ogtc_set_covering_exact(doubled.instance, doubled.p1, doubled.p2);
  CHECK(r.value == 2);
  CHECK(r.value == selftest::exhaustive_covering_optimum(identity2));

  BlpInstance empty(Sense::minimize, {1, 1}, {});
  DoubledCovering trivial = double_columns(empty);
  CHECK(feasible(trivial.instance, trivial.p1));
}

TEST_CASE("doubled instances recover the plain covering optimum") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 60; ++t) {
    BlpInstance covering = random_covering(2 + static_cast<int>(rng() % 11),
                                           1 + static_cast<int>(rng() % 8), 10, rng);
    DoubledCovering doubled = double_columns(covering);
    CrossoverResult r = ogtc_set_covering_exact(doubled.instance, doubled.p1, doubled.p2, 24);
    CHECK(r.value == selftest::exhaustive_covering_optimum(covering));
  }
}
