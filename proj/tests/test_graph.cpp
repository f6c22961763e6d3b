#include <doctest.h>

#include "ogtc/graph.hpp"
#include "ogtc/io.hpp"
#include "ogtc/selftest.hpp"

using namespace ogtc;

namespace {

WeightedGraph path3() { return WeightedGraph(3, {{0, 1}, {1, 2}}, {1, 5, 1}); }

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(WeightedGraph(2, {{0, 0}}, {1, 1}), Error);
  CHECK_THROWS_AS(WeightedGraph(2, {{0, 1}, {1, 0}}, {1, 1}), Error);
  CHECK_THROWS_AS(WeightedGraph(2, {{0, 2}}, {1, 1}), Error);
  CHECK_THROWS_AS(WeightedGraph(2, {}, {1}), Error);
  WeightedGraph g = path3();
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("independent-set crossover on the path") {
  WeightedGraph g = path3();
  Genotype p1 = Genotype::from_string("101");
  Genotype p2 = Genotype::from_string("010");
  CrossoverResult r = ogtc_mwis(g, p1, p2);
  CHECK(r.offspring.to_string() == "010");
  CHECK(r.value == 5);

  CHECK(ogtc_mwis(g, p1, p1).offspring == p1);

  WeightedGraph edge(2, {{0, 1}}, {3, 1});
  CrossoverResult e = ogtc_mwis(edge, Genotype::from_string("10"), Genotype::from_string("01"));
  CHECK(e.offspring.to_string() == "10");
  CHECK(e.value == 3);

  try {
    ogtc_mwis(edge, Genotype::from_string("11"), Genotype::from_string("01"));
    FAIL("dependent parent accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::parent_not_independent);
  }
}

TEST_CASE("clique crossover") {
  WeightedGraph triangle(3, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 1});
  CrossoverResult r =
      ogtc_max_clique(triangle, Genotype::from_string("110"), Genotype::from_string("011"));
  CHECK(r.offspring.to_string() == "111");
  CHECK(r.value == 3);

  CHECK(ogtc_max_clique(triangle, Genotype::from_string("110"), Genotype::from_string("110"))
            .offspring.to_string() == "110");

  WeightedGraph isolated(2, {}, {2, 7});
  CrossoverResult iso =
      ogtc_max_clique(isolated, Genotype::from_string("10"), Genotype::from_string("01"));
  CHECK(iso.offspring.to_string() == "01");
  CHECK(iso.value == 7);

  try {
    ogtc_max_clique(isolated, Genotype::from_string("11"), Genotype::from_string("01"));
    FAIL("non-clique parent accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::parent_not_clique);
  }
}

TEST_CASE("vertex-cover crossover") {
  WeightedGraph g = path3();
  CrossoverResult r =
      ogtc_min_vertex_cover(g, Genotype::from_string("010"), Genotype::from_string("101"));
  CHECK(r.offspring.to_string() == "101");
  CHECK(r.value == 2);

  CHECK(ogtc_min_vertex_cover(g, Genotype::from_string("010"), Genotype::from_string("010"))
            .offspring.to_string() == "010");

  WeightedGraph edge(2, {{0, 1}}, {1, 4});
  CrossoverResult e =
      ogtc_min_vertex_cover(edge, Genotype::from_string("10"), Genotype::from_string("01"));
  CHECK(e.offspring.to_string() == "10");
  CHECK(e.value == 1);

  try {
    ogtc_min_vertex_cover(edge, Genotype::from_string("00"), Genotype::from_string("01"));
    FAIL("non-cover parent accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::parent_not_cover);
  }
}

TEST_CASE("graph operators match the oracle on random graphs") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 150; ++t) {
    int n = 4 + static_cast<int>(rng() % 13);
    WeightedGraph g = random_graph(n, 0.2 + 0.3 * (static_cast<double>(rng() % 100) / 100.0),
                                   -5, 10, rng);

    Genotype i1 = random_independent_set(g, rng);
    Genotype i2 = random_independent_set(g, rng);
    CrossoverResult mwis = ogtc_mwis(g, i1, i2);
    CHECK(mwis.value == brute_force_ogtc(mwis_as_blp(g), i1, i2).value);
    CHECK(is_independent_set(g, mwis.offspring));
    CHECK(gene_transmitting(mwis.offspring, i1, i2));
    CHECK(mwis.value >= std::max(subset_weight(g, i1), subset_weight(g, i2)));

    Genotype q1 = random_clique(g, rng);
    Genotype q2 = random_clique(g, rng);
    CrossoverResult clique = ogtc_max_clique(g, q1, q2);
    CHECK(clique.value == brute_force_ogtc(clique_as_blp(g), q1, q2).value);
    CHECK(is_clique(g, clique.offspring));

    Genotype c1 = random_independent_set(g, rng).complement();
    Genotype c2 = random_independent_set(g, rng).complement();
    CrossoverResult cover = ogtc_min_vertex_cover(g, c1, c2);
    CHECK(cover.value == brute_force_ogtc(vertex_cover_as_blp(g), c1, c2).value);
    CHECK(is_vertex_cover(g, cover.offspring));
    CHECK(cover.value <= std::min(subset_weight(g, c1), subset_weight(g, c2)));
  }
}

TEST_CASE("negative and zero weights are never selected from the diff") {
  WeightedGraph g(4, {}, {-3, 0, 2, -1});
  CrossoverResult r =
      ogtc_mwis(g, Genotype::from_string("1111"), Genotype::from_string("0000"));
  CHECK(r.offspring.to_string() == "0010");
  CHECK(r.value == 2);
}
