#include <doctest.h>

#include "ogtc/hypergraph.hpp"
#include "ogtc/io.hpp"
#include "ogtc/selftest.hpp"

using namespace ogtc;

TEST_CASE("hypergraph normalization") {
  Hypergraph h(4, {{2, 0, 2}, {0, 2}, {1, 3}}, {1, 1, 1, 1});
  CHECK(h.edges().size() == 2);  // {0,2} deduplicated after sorting
  CHECK_THROWS_AS(Hypergraph(2, {{0, 0}}, {1, 1}), Error);
  CHECK_THROWS_AS(Hypergraph(2, {{0, 5}}, {1, 1}), Error);
}

TEST_CASE("exact solver basics") {
  Hypergraph edgeless(3, {}, {4, -1, 2});
  HypergraphMwisResult r = hypergraph_mwis_exact(edgeless);
  CHECK(r.vertices == std::vector<int>{0, 2});  // positive weights only
  CHECK(r.weight == 6);

  Hypergraph full(4, {{0, 1, 2, 3}}, {1, 1, 1, 1});
  HypergraphMwisResult one_out = hypergraph_mwis_exact(full);
  CHECK(one_out.weight == 3);
  CHECK(one_out.vertices == std::vector<int>{0, 1, 2});  // drop the last vertex

  try {
    hypergraph_mwis_exact(Hypergraph(31, {}, std::vector<Int>(31, 1)), 30);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::too_large);
  }
}

TEST_CASE("exact solver returns the lexicographically smallest optimum") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 120; ++t) {
    int n = 2 + static_cast<int>(rng() % 9);
    std::vector<Int> weights(static_cast<std::size_t>(n));
    for (Int& w : weights) w = static_cast<Int>(rng() % 5) - 1;  // some non-positive
    std::vector<std::vector<int>> edges;
    int m = static_cast<int>(rng() % 6);
    for (int e = 0; e < m; ++e) {
      std::vector<int> edge;
      for (int v = 0; v < n; ++v)
        if (rng() % 3 == 0) edge.push_back(v);
      if (edge.size() >= 2) edges.push_back(edge);
    }
    Hypergraph h(n, std::move(edges), std::move(weights));
    HypergraphMwisResult got = hypergraph_mwis_exact(h);

    // enumerate subsets of the positive-weight vertices
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v)
      if (h.weight(v) > 0) candidates.push_back(v);
    Int best_weight = 0;
    std::vector<int> best_set;
    const std::uint32_t count = std::uint32_t{1} << candidates.size();
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      std::vector<int> set;
      Int w = 0;
      for (std::size_t k = 0; k < candidates.size(); ++k)
        if (mask >> k & 1u) {
          set.push_back(candidates[k]);
          w += h.weight(candidates[k]);
        }
      if (!is_hypergraph_independent(h, set)) continue;
      if (w > best_weight ||
          (w == best_weight && std::lexicographical_compare(set.begin(), set.end(),
                                                            best_set.begin(), best_set.end()))) {
        best_weight = w;
        best_set = std::move(set);
      }
    }
    CHECK(got.weight == best_weight);
    CHECK(got.vertices == best_set);
  }
}

TEST_CASE("crossover hypergraph for the worked row") {
  // one row: x0 + x1 + x2 <= 1, parents 100 and 010
  BlpInstance inst(Sense::maximize, {1, 1, 0},
                   {Row{{{0, 1}, {1, 1}, {2, 1}}, 1, RowSense::le}});
  Genotype p1 = Genotype::from_string("100");
  Genotype p2 = Genotype::from_string("010");

  OgtcHypergraph built = build_ogtc_hypergraph(inst, p1, p2);
  CHECK(built.diff == std::vector<int>{0, 1});
  CHECK(built.lambda == 5);
  CHECK(built.hypergraph.weights() == std::vector<Int>{6, 6, 5, 5});
  // pairing edges {0,2}, {1,3} and the violating combination {0,1}
  CHECK(built.hypergraph.edges() ==
        std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 3}});
  validate_two_coloring(built.hypergraph, built.coloring);
  CHECK(built.coloring.class1 == std::vector<int>{0, 3});  // the first parent's image

  HypergraphMwisResult best = hypergraph_mwis_exact(built.hypergraph);
  CHECK(best.weight == 11);
  CHECK(best.vertices == std::vector<int>{0, 3});  // lexicographically smallest optimum

  CrossoverResult r = ogtc_via_hypergraph(inst, p1, p2);
  CHECK(r.offspring.to_string() == "100");
  CHECK(r.value == 1);
}

TEST_CASE("crossover hypergraph trivial cases") {
  BlpInstance inst(Sense::maximize, {1, 1}, {Row{{{0, 1}, {1, 1}}, 5, RowSense::le}});
  Genotype p = Genotype::from_string("10");
  CHECK(ogtc_via_hypergraph(inst, p, p).offspring == p);

  // every combination satisfied: only pairing edges remain
  OgtcHypergraph loose =
      build_ogtc_hypergraph(inst, Genotype::from_string("10"), Genotype::from_string("01"));
  CHECK(loose.hypergraph.edges() == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
}

TEST_CASE("combination cap triggers") {
  std::vector<Row> rows;
  Row row;
  for (int j = 0; j < 6; ++j) row.terms.push_back({j, 1});
  row.rhs = 3;
  row.sense = RowSense::le;
  rows.push_back(row);
  BlpInstance inst(Sense::maximize, std::vector<Int>(6, 1), rows);
  try {
    build_ogtc_hypergraph(inst, Genotype::from_string("111000"), Genotype::from_string("000111"),
                          4);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::combination_blowup);
  }
}

TEST_CASE("pair-selection bijection on small instances") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 60; ++t) {
    selftest::MixedBlp mixed = selftest::random_mixed_blp(8, 4, 3, Sense::maximize, rng);
    OgtcHypergraph built = build_ogtc_hypergraph(mixed.instance, mixed.p1, mixed.p2);
    const int d = static_cast<int>(built.diff.size());
    if (d == 0) continue;
    // Every one-per-pair selection is independent exactly when its induced
    // offspring is feasible.
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
      Genotype x = mixed.p1;
      std::vector<char> chosen(static_cast<std::size_t>(2 * d), 0);
      for (int k = 0; k < d; ++k) {
        bool one = (mask >> k & 1u) != 0;
        x.set(built.diff[static_cast<std::size_t>(k)], one);
        chosen[static_cast<std::size_t>(one ? built.positive_vertex(k)
                                            : built.negative_vertex(k))] = 1;
      }
      CHECK(is_hypergraph_independent(built.hypergraph, chosen) ==
            feasible(mixed.instance, x));
    }
  }
}

TEST_CASE("dominated-edge pruning does not change the optimum") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 40; ++t) {
    selftest::MixedBlp mixed = selftest::random_mixed_blp(9, 5, 4, Sense::maximize, rng);
    OgtcHypergraph pruned = build_ogtc_hypergraph(mixed.instance, mixed.p1, mixed.p2, 20, true);
    OgtcHypergraph kept = build_ogtc_hypergraph(mixed.instance, mixed.p1, mixed.p2, 20, false);
    CHECK(pruned.hypergraph.edges().size() <= kept.hypergraph.edges().size());
    if (pruned.hypergraph.vertex_count() == 0) continue;
    HypergraphMwisResult a = hypergraph_mwis_exact(pruned.hypergraph);
    HypergraphMwisResult b = hypergraph_mwis_exact(kept.hypergraph);
    CHECK(a.weight == b.weight);
    CHECK(a.vertices == b.vertices);
  }
}

TEST_CASE("hypergraph route matches the oracle, mixed row senses") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 150; ++t) {
    Sense sense = t % 3 == 0 ? Sense::minimize : Sense::maximize;
    selftest::MixedBlp mixed = selftest::random_mixed_blp(12, 6, 4, sense, rng);
    CrossoverResult via = ogtc_via_hypergraph(mixed.instance, mixed.p1, mixed.p2);
    CrossoverResult oracle = brute_force_ogtc(mixed.instance, mixed.p1, mixed.p2);
    CHECK(via.value == oracle.value);
    CHECK(feasible(mixed.instance, via.offspring));
    CHECK(gene_transmitting(via.offspring, mixed.p1, mixed.p2));
  }
}

TEST_CASE("simplified nonnegative construction") {
  BlpInstance knap(Sense::maximize, {2, 2}, {Row{{{0, 2}, {1, 3}}, 3, RowSense::le}});
  Hypergraph h =
      build_knapsack_hypergraph(knap, Genotype::from_string("10"), Genotype::from_string("01"));
  CHECK(h.vertex_count() == 2);
  CHECK(h.edges() == std::vector<std::vector<int>>{{0, 1}});
  CHECK(h.weights() == std::vector<Int>{2, 2});

  BlpInstance loose(Sense::maximize, {2, 2}, {Row{{{0, 2}, {1, 3}}, 99, RowSense::le}});
  CHECK(build_knapsack_hypergraph(loose, Genotype::from_string("10"),
                                  Genotype::from_string("01"))
            .edges()
            .empty());

  BlpInstance negative(Sense::maximize, {1, 1}, {Row{{{0, -1}, {1, 1}}, 1, RowSense::le}});
  try {
    build_knapsack_hypergraph(negative, Genotype::from_string("00"),
                              Genotype::from_string("11"));
    FAIL("negative coefficient accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::negative_coefficient);
  }
}

TEST_CASE("simplified construction reproduces the conflict graph on incidence rows") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 50; ++t) {
    int n = 3 + static_cast<int>(rng() % 8);
    WeightedGraph g = random_graph(n, 0.4, 1, 9, rng);
    if (g.edges().empty()) continue;
    std::vector<Row> rows;
    for (auto [u, v] : g.edges()) rows.push_back(Row{{{u, 1}, {v, 1}}, 1, RowSense::le});
    BlpInstance packing(Sense::maximize, g.weights(), rows);

    Genotype p1 = random_independent_set(g, rng);
    Genotype p2 = random_independent_set(g, rng);
    Hypergraph h = build_knapsack_hypergraph(packing, p1, p2);

    // the hyperedges are exactly the conflict-graph edges between the
    // parents' differing vertices
    DiffSet diff = diff_set(p1, p2);
    std::vector<std::vector<int>> expected;
    for (auto [u, v] : g.edges()) {
      auto pu = std::find(diff.indices.begin(), diff.indices.end(), u);
      auto pv = std::find(diff.indices.begin(), diff.indices.end(), v);
      if (pu == diff.indices.end() || pv == diff.indices.end()) continue;
      // with both endpoints free the pair (1,1) always violates u + v <= 1
      expected.push_back({static_cast<int>(pu - diff.indices.begin()),
                          static_cast<int>(pv - diff.indices.begin())});
    }
    std::sort(expected.begin(), expected.end());
    CHECK(h.edges() == expected);
  }
}

TEST_CASE("hardness gadget") {
  WeightedGraph one_edge(2, {{0, 1}}, {1, 1});
  auto [h, coloring] = hardness_gadget(one_edge);
  CHECK(h.vertex_count() == 4);
  CHECK(h.edges() == std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}});
  validate_two_coloring(h, coloring);

  WeightedGraph edgeless(3, {}, {1, 1, 1});
  auto [h2, coloring2] = hardness_gadget(edgeless);
  CHECK(h2.edges().empty());
  CHECK(hypergraph_mwis_exact(h2).weight == 6);

  WeightedGraph triangle(3, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 1});
  auto [h3, coloring3] = hardness_gadget(triangle);
  CHECK(h3.edges().size() == 9);
  CHECK(hypergraph_mwis_exact(h3).weight == 4);  // 3 padding vertices + alpha = 1
}
