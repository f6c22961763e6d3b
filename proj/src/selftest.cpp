#include "ogtc/selftest.hpp"

#include <algorithm>
#include <ostream>

#include "ogtc/dispatch.hpp"
#include "ogtc/hypergraph.hpp"
#include "ogtc/maxsat.hpp"
#include "ogtc/reductions.hpp"

namespace ogtc::selftest {

namespace {

void mix(std::uint64_t& digest, const std::string& bytes) {
  if (digest == 0) digest = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    digest ^= b;
    digest *= 1099511628211ull;
  }
}

void mix(std::uint64_t& digest, Int value) { mix(digest, std::to_string(value)); }

void note_failure(SuiteResult& suite, const std::string& what) {
  ++suite.failures;
  if (suite.notes.size() < 5) suite.notes.push_back(what);
}

void note_structural(SuiteResult& suite, const std::string& what) {
  ++suite.structural_failures;
  if (suite.notes.size() < 5) suite.notes.push_back(what);
}

Int rand_int(Int lo, Int hi, std::mt19937_64& rng) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

}  // namespace

std::pair<Genotype, Int> exhaustive_mwis(const WeightedGraph& g) {
  const int n = g.vertex_count();
  if (n > 24) fail(ErrorCode::too_large, "exhaustive search handles at most 24 vertices");
  Genotype best(n);
  Int best_weight = 0;  // the empty set is always independent
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Genotype x(n);
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) x.set(v, true);
    if (!is_independent_set(g, x)) continue;
    Int w = subset_weight(g, x);
    if (w > best_weight) {
      best = x;
      best_weight = w;
    }
  }
  return {best, best_weight};
}

int independence_number(const WeightedGraph& g) {
  WeightedGraph unit(g.vertex_count(), g.edges(),
                     std::vector<Int>(static_cast<std::size_t>(g.vertex_count()), 1));
  return static_cast<int>(exhaustive_mwis(unit).second);
}

Int exhaustive_min_cut(const FlowNetwork& net) {
  const int n = net.node_count;
  if (n > 20) fail(ErrorCode::too_large, "cut enumeration handles at most 20 nodes");
  Int best = -1;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (!(mask >> net.source & 1u)) continue;
    if (mask >> net.sink & 1u) continue;
    Int cut = 0;
    for (const FlowArc& arc : net.arcs)
      if ((mask >> arc.tail & 1u) && !(mask >> arc.head & 1u)) cut += arc.capacity;
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

Int exhaustive_covering_optimum(const BlpInstance& covering) {
  const int n = covering.var_count();
  if (n > 20) fail(ErrorCode::too_large, "covering enumeration handles at most 20 columns");
  bool found = false;
  Int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Genotype x(n);
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1u) x.set(j, true);
    if (!feasible(covering, x)) continue;
    Int value = objective(covering, x);
    if (!found || value < best) {
      best = value;
      found = true;
    }
  }
  if (!found) fail(ErrorCode::validation_error, "covering instance has no feasible solution");
  return best;
}

MixedBlp random_mixed_blp(int max_vars, int max_rows, int max_support, Sense sense,
                          std::mt19937_64& rng) {
  const int n = static_cast<int>(rand_int(3, max_vars, rng));
  Genotype p1(n), p2(n);
  std::bernoulli_distribution coin(0.5);
  for (int j = 0; j < n; ++j) {
    p1.set(j, coin(rng));
    p2.set(j, coin(rng));
  }
  DiffSet diff = diff_set(p1, p2);

  std::vector<Int> c(static_cast<std::size_t>(n));
  for (Int& v : c) v = rand_int(-5, 10, rng);

  const int m = static_cast<int>(rand_int(1, max_rows, rng));
  std::vector<Row> rows;
  while (static_cast<int>(rows.size()) < m) {
    int size = static_cast<int>(rand_int(1, max_support, rng));
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    Row row;
    for (int t = 0; t < size && t < n; ++t) {
      Int coeff = rand_int(1, 3, rng) * (rand_int(0, 1, rng) == 0 ? 1 : -1);
      row.terms.push_back({cols[static_cast<std::size_t>(t)], coeff});
    }
    std::sort(row.terms.begin(), row.terms.end(),
              [](const RowTerm& a, const RowTerm& b) { return a.col < b.col; });
    Int v1 = 0, v2 = 0;
    for (const RowTerm& t : row.terms) {
      if (p1[t.col]) v1 += t.coeff;
      if (p2[t.col]) v2 += t.coeff;
    }
    switch (rand_int(0, 2, rng)) {
      case 0:
        row.sense = RowSense::le;
        row.rhs = std::max(v1, v2) + rand_int(0, 1, rng);
        break;
      case 1:
        row.sense = RowSense::ge;
        row.rhs = std::min(v1, v2) - rand_int(0, 1, rng);
        break;
      default: {
        // Equalities must hold for both parents: balance the row with one
        // extra differing coordinate when the parents disagree on it.
        row.sense = RowSense::eq;
        if (v1 != v2) {
          int balance = -1;
          for (int j : diff.indices) {
            bool used = false;
            for (const RowTerm& t : row.terms)
              if (t.col == j) used = true;
            if (!used) {
              balance = j;
              break;
            }
          }
          if (balance < 0) continue;  // no free coordinate; redraw the row
          Int delta = v2 - v1;  // want v1 + coeff*p1 == v2 + coeff*p2
          Int coeff = p1[balance] ? delta : -delta;
          if (coeff == 0) continue;
          row.terms.push_back({balance, coeff});
          std::sort(row.terms.begin(), row.terms.end(),
                    [](const RowTerm& a, const RowTerm& b) { return a.col < b.col; });
          if (p1[balance]) v1 += coeff;
          if (p2[balance]) v2 += coeff;
          if (v1 != v2) continue;
        }
        row.rhs = v1;
        break;
      }
    }
    rows.push_back(std::move(row));
  }
  return MixedBlp{BlpInstance(sense, std::move(c), std::move(rows)), std::move(p1),
                  std::move(p2)};
}

namespace {

// Shared trial body: run the operator, run the oracle on the Boolean
// encoding, compare values exactly and verify gene transmission plus
// parent dominance.
template <typename Op>
void oracle_trial(SuiteResult& suite, const BlpInstance& encoded, const Genotype& p1,
                  const Genotype& p2, Op&& op, const char* label) {
  ++suite.cases;
  try {
    CrossoverResult actual = op();
    CrossoverResult expected = brute_force_ogtc(encoded, p1, p2);
    mix(suite.digest, actual.offspring.to_string());
    mix(suite.digest, actual.value);
    if (actual.value != expected.value)
      note_failure(suite, std::string(label) + ": value " + std::to_string(actual.value) +
                              " != oracle " + std::to_string(expected.value));
    if (!gene_transmitting(actual.offspring, p1, p2))
      note_structural(suite, std::string(label) + ": offspring not gene-transmitting");
    if (!feasible(encoded, actual.offspring))
      note_structural(suite, std::string(label) + ": offspring infeasible");
    Int vp1 = objective(encoded, p1);
    Int vp2 = objective(encoded, p2);
    Int better_parent = value_not_worse(encoded.sense(), vp1, vp2) ? vp1 : vp2;
    if (!value_not_worse(encoded.sense(), actual.value, better_parent))
      note_structural(suite, std::string(label) + ": offspring worse than a parent");
  } catch (const std::exception& e) {
    note_failure(suite, std::string(label) + ": " + e.what());
  }
}

}  // namespace

SuiteResult graph_oracle_suite(int trials, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "graph-oracle-equivalence";
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int n = static_cast<int>(rand_int(4, 16, rng));
    double p = 0.2 + 0.3 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    WeightedGraph g = random_graph(n, p, -5, 10, rng);

    Genotype i1 = random_independent_set(g, rng);
    Genotype i2 = random_independent_set(g, rng);
    oracle_trial(suite, mwis_as_blp(g), i1, i2,
                 [&] { return ogtc_mwis(g, i1, i2); }, "mwis");

    Genotype q1 = random_clique(g, rng);
    Genotype q2 = random_clique(g, rng);
    oracle_trial(suite, clique_as_blp(g), q1, q2,
                 [&] { return ogtc_max_clique(g, q1, q2); }, "clique");

    Genotype c1 = random_independent_set(g, rng).complement();
    Genotype c2 = random_independent_set(g, rng).complement();
    oracle_trial(suite, vertex_cover_as_blp(g), c1, c2,
                 [&] { return ogtc_min_vertex_cover(g, c1, c2); }, "vertex-cover");
  }
  return suite;
}

SuiteResult packing_oracle_suite(int trials, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "set-packing-oracle-equivalence";
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int n = static_cast<int>(rand_int(6, 14, rng));
    int m = static_cast<int>(rand_int(1, 10, rng));
    BlpInstance packing = random_packing(n, m, -3, 10, rng);
    Genotype p1 = random_packing_solution(packing, rng);
    Genotype p2 = random_packing_solution(packing, rng);
    oracle_trial(suite, packing, p1, p2,
                 [&] { return ogtc_set_packing(packing, p1, p2); }, "packing");
  }
  return suite;
}

SuiteResult partition_oracle_suite(int trials, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "set-partition-oracle-equivalence";
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int rows = static_cast<int>(rand_int(2, 8, rng));
    int extras = static_cast<int>(rand_int(0, 4, rng));
    GeneratedInstance inst = random_partition(rows, extras, -3, 9, rng);
    const BlpInstance& part = inst.problem.blp();
    oracle_trial(suite, part, inst.p1, inst.p2,
                 [&] { return ogtc_set_partition(part, inst.p1, inst.p2); }, "partition");
    // The exact-partition guarantee, beyond plain feasibility.
    try {
      CrossoverResult r = ogtc_set_partition(part, inst.p1, inst.p2);
      for (const Row& row : part.rows())
        if (row_value(row, r.offspring) != 1)
          note_structural(suite, "partition: a row is not covered exactly once");
    } catch (const std::exception&) {
      // already counted by oracle_trial
    }
  }
  return suite;
}

SuiteResult splp_oracle_suite(int trials, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "facility-location-oracle-equivalence";
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int k = static_cast<int>(rand_int(1, 4, rng));
    int l = static_cast<int>(rand_int(1, 4, rng));
    SplpInstance s = random_splp(k, l, 12, 10, rng);
    Genotype p1 = random_splp_solution(s, rng);
    Genotype p2 = random_splp_solution(s, rng);
    oracle_trial(suite, splp_as_blp(s), p1, p2,
                 [&] { return ogtc_splp(s, p1, p2); }, "splp");
    try {
      CrossoverResult r = ogtc_splp(s, p1, p2);
      if (!splp_feasible(s, r.offspring))
        note_structural(suite, "splp: offspring violates the assignment constraints");
    } catch (const std::exception&) {
    }
  }
  return suite;
}

SuiteResult knapsack_oracle_suite(int trials, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "knapsack-fastpath-oracle-equivalence";
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int n = static_cast<int>(rand_int(6, 16, rng));
    int m = static_cast<int>(rand_int(1, 10, rng));
    GeneratedInstance inst = random_two_column_knapsack(n, m, 5, 10, rng);
    const BlpInstance& knap = inst.problem.blp();
    oracle_trial(
        suite, knap, inst.p1, inst.p2,
        [&] {
          auto fast = ogtc_knapsack_fastpath(knap, inst.p1, inst.p2);
          if (!fast)
            fail(ErrorCode::validation_error, "fast path unexpectedly inapplicable");
          return *fast;
        },
        "knapsack");
  }
  return suite;
}

SuiteResult hypergraph_identity_suite(int trials, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "hypergraph-identities";
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    MixedBlp mixed = random_mixed_blp(12, 6, 4, Sense::maximize, rng);
    ++suite.cases;
    try {
      CrossoverResult actual = ogtc_via_hypergraph(mixed.instance, mixed.p1, mixed.p2);
      CrossoverResult expected = brute_force_ogtc(mixed.instance, mixed.p1, mixed.p2);
      mix(suite.digest, actual.offspring.to_string());
      mix(suite.digest, actual.value);
      if (actual.value != expected.value)
        note_failure(suite, "hypergraph value " + std::to_string(actual.value) +
                                " != oracle " + std::to_string(expected.value));
      if (!gene_transmitting(actual.offspring, mixed.p1, mixed.p2))
        note_structural(suite, "hypergraph offspring not gene-transmitting");

      // Re-derive the weight identity and the one-per-pair property from an
      // independently solved copy of the construction.
      OgtcHypergraph built = build_ogtc_hypergraph(mixed.instance, mixed.p1, mixed.p2);
      validate_two_coloring(built.hypergraph, built.coloring);
      const int d = static_cast<int>(built.diff.size());
      if (d > 0) {
        HypergraphMwisResult best = hypergraph_mwis_exact(built.hypergraph);
        std::vector<char> in_set(static_cast<std::size_t>(2 * d), 0);
        for (int v : best.vertices) in_set[static_cast<std::size_t>(v)] = 1;
        for (int k = 0; k < d; ++k)
          if (in_set[static_cast<std::size_t>(k)] + in_set[static_cast<std::size_t>(d + k)] != 1)
            note_failure(suite, "one-per-pair property failed");
        Int cx = built.fixed_objective;
        for (int k = 0; k < d; ++k)
          if (in_set[static_cast<std::size_t>(k)])
            cx += built.effective_objective[static_cast<std::size_t>(
                built.diff[static_cast<std::size_t>(k)])];
        if (best.weight != cx + built.lambda * d - built.fixed_objective)
          note_failure(suite, "weight identity failed");
      }
    } catch (const std::exception& e) {
      note_failure(suite, std::string("hypergraph: ") + e.what());
    }
  }
  return suite;
}

SuiteResult flow_duality_suite(int networks, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "flow-duality";
  std::mt19937_64 rng(seed);
  for (int t = 0; t < networks; ++t) {
    ++suite.cases;
    int nodes = static_cast<int>(rand_int(2, 12, rng));
    FlowNetwork net;
    net.node_count = nodes;
    net.source = 0;
    net.sink = nodes - 1;
    int arcs = static_cast<int>(rand_int(1, 25, rng));
    for (int a = 0; a < arcs; ++a) {
      int u = static_cast<int>(rand_int(0, nodes - 1, rng));
      int v = static_cast<int>(rand_int(0, nodes - 1, rng));
      if (u == v) continue;
      net.arcs.push_back({u, v, rand_int(0, 10, rng), false});
    }
    try {
      MaxFlowResult flow = max_flow(net);
      mix(suite.digest, flow.value);
      Int reference = exhaustive_min_cut(net);
      if (flow.value != reference)
        note_failure(suite, "max flow " + std::to_string(flow.value) + " != min cut " +
                                std::to_string(reference));
    } catch (const std::exception& e) {
      note_failure(suite, std::string("flow: ") + e.what());
    }

    // Bipartite solver against subset enumeration.
    ++suite.cases;
    try {
      int na = static_cast<int>(rand_int(1, 8, rng));
      int nb = static_cast<int>(rand_int(1, 8, rng));
      BipartiteWeighted bg;
      for (int a = 0; a < na; ++a) bg.a_weights.push_back(rand_int(1, 9, rng));
      for (int b = 0; b < nb; ++b) bg.b_weights.push_back(rand_int(1, 9, rng));
      std::bernoulli_distribution edge(0.4);
      for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
          if (edge(rng)) bg.edges.emplace_back(a, b);
      BipartiteMwisResult got = bipartite_mwis(bg);
      mix(suite.digest, got.weight);

      std::vector<std::pair<int, int>> graph_edges;
      for (auto [a, b] : bg.edges) graph_edges.emplace_back(a, na + b);
      std::sort(graph_edges.begin(), graph_edges.end());
      graph_edges.erase(std::unique(graph_edges.begin(), graph_edges.end()),
                        graph_edges.end());
      std::vector<Int> weights = bg.a_weights;
      weights.insert(weights.end(), bg.b_weights.begin(), bg.b_weights.end());
      WeightedGraph whole(na + nb, std::move(graph_edges), std::move(weights));
      Int reference = exhaustive_mwis(whole).second;
      if (got.weight != reference)
        note_failure(suite, "bipartite mwis " + std::to_string(got.weight) +
                                " != exhaustive " + std::to_string(reference));
    } catch (const std::exception& e) {
      note_failure(suite, std::string("bipartite: ") + e.what());
    }
  }
  return suite;
}

SuiteResult maxsat_identity_suite(int trials, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "maxsat-identities";
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int n = static_cast<int>(rand_int(1, 8, rng));
    int m = static_cast<int>(rand_int(0, 12, rng));
    CnfInstance cnf = random_cnf(n, m, rng);
    SatGraph sg = build_sat_graph(cnf);
    const Int threshold = static_cast<Int>(n) * m;

    auto random_assignment = [&]() {
      Genotype y(n);
      std::bernoulli_distribution coin(0.5);
      for (int i = 0; i < n; ++i) y.set(i, coin(rng));
      return y;
    };

    for (int s = 0; s < 50; ++s) {
      ++suite.cases;
      Genotype y = random_assignment();
      try {
        Genotype encoded = encode_assignment(sg, y);
        if (!is_independent_set(sg.graph, encoded))
          note_structural(suite, "encode produced a dependent set");
        if (subset_weight(sg.graph, encoded) != threshold + f_sat(cnf, y))
          note_failure(suite, "weight identity failed for an encoded assignment");
      } catch (const std::exception& e) {
        note_failure(suite, std::string("encode: ") + e.what());
      }
    }

    ++suite.cases;
    try {
      Genotype y1 = random_assignment();
      Genotype y2 = random_assignment();
      CrossoverResult inner =
          ogtc_mwis(sg.graph, encode_assignment(sg, y1), encode_assignment(sg, y2));
      Genotype decoded = decode_independent_set(sg, inner.offspring);
      mix(suite.digest, decoded.to_string());
      if (f_sat(cnf, decoded) < inner.value - threshold)
        note_failure(suite, "decode guarantee failed on a solver-produced set");
      Genotype child = ogtc_max3sat(cnf, y1, y2);
      if (f_sat(cnf, child) < std::max(f_sat(cnf, y1), f_sat(cnf, y2)))
        note_failure(suite, "crossover dominance failed");
    } catch (const std::exception& e) {
      note_failure(suite, std::string("maxsat: ") + e.what());
    }
  }
  return suite;
}

SuiteResult gadget_suite(int trials, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "hardness-gadget";
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    ++suite.cases;
    int n = static_cast<int>(rand_int(1, 9, rng));
    double p = 0.2 + 0.4 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    WeightedGraph g = random_graph(n, p, 1, 1, rng);
    try {
      auto [h, coloring] = hardness_gadget(g);
      validate_two_coloring(h, coloring);
      HypergraphMwisResult best = hypergraph_mwis_exact(h);
      mix(suite.digest, best.weight);
      Int expected = static_cast<Int>(n) + independence_number(g);
      if (best.weight != expected)
        note_failure(suite, "gadget optimum " + std::to_string(best.weight) + " != n + alpha " +
                                std::to_string(expected));
    } catch (const std::exception& e) {
      note_failure(suite, std::string("gadget: ") + e.what());
    }
  }
  return suite;
}

SuiteResult covering_suite(int random_trials, int doubled_trials, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "set-covering";
  std::mt19937_64 rng(seed);
  for (int t = 0; t < random_trials; ++t) {
    int n = static_cast<int>(rand_int(4, 12, rng));
    int m = static_cast<int>(rand_int(1, 8, rng));
    BlpInstance covering = random_covering(n, m, 10, rng);
    Genotype p1 = random_cover_solution(covering, rng);
    Genotype p2 = random_cover_solution(covering, rng);
    oracle_trial(suite, covering, p1, p2,
                 [&] { return ogtc_set_covering_exact(covering, p1, p2, 16); }, "covering");
  }
  for (int t = 0; t < doubled_trials; ++t) {
    ++suite.cases;
    int n = static_cast<int>(rand_int(2, 12, rng));
    int m = static_cast<int>(rand_int(1, 8, rng));
    BlpInstance covering = random_covering(n, m, 10, rng);
    try {
      DoubledCovering doubled = double_columns(covering);
      CrossoverResult r =
          ogtc_set_covering_exact(doubled.instance, doubled.p1, doubled.p2, 24);
      mix(suite.digest, r.value);
      Int reference = exhaustive_covering_optimum(covering);
      if (r.value != reference)
        note_failure(suite, "doubled-instance optimum " + std::to_string(r.value) +
                                " != covering optimum " + std::to_string(reference));
    } catch (const std::exception& e) {
      note_failure(suite, std::string("doubled: ") + e.what());
    }
  }
  return suite;
}

std::vector<SuiteResult> run_all_suites(const Scale& scale, std::ostream* log) {
  auto scaled = [&](int full) { return std::max(10, full / std::max(1, scale.divisor)); };
  std::vector<SuiteResult> results;
  auto push = [&](SuiteResult r) {
    if (log) {
      *log << r.name << ": " << r.cases << " cases, " << r.failures << " failures, "
           << r.structural_failures << " structural violations\n";
      for (const std::string& note : r.notes) *log << "    " << note << '\n';
    }
    results.push_back(std::move(r));
  };
  push(graph_oracle_suite(scaled(1000), 101));
  push(packing_oracle_suite(scaled(1000), 102));
  push(partition_oracle_suite(scaled(1000), 103));
  push(splp_oracle_suite(scaled(1000), 104));
  push(knapsack_oracle_suite(scaled(1000), 105));
  push(hypergraph_identity_suite(scaled(500), 106));
  push(flow_duality_suite(scaled(200), 107));
  push(maxsat_identity_suite(scaled(300), 108));
  push(gadget_suite(scaled(100), 109));
  push(covering_suite(scaled(300), scaled(100), 110));
  return results;
}

}  // namespace ogtc::selftest
