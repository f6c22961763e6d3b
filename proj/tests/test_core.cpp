#include <doctest.h>

#include "ogtc/core.hpp"
#include "ogtc/selftest.hpp"

using namespace ogtc;

namespace {

BlpInstance tiny_max_instance() {
  // maximize 3a + b + 2c subject to a + b + c <= 2
  return BlpInstance(Sense::maximize, {3, 1, 2},
                     {Row{{{0, 1}, {1, 1}, {2, 1}}, 2, RowSense::le}});
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_NOTHROW(BlpInstance(Sense::maximize, {}, {}));
  CHECK_NOTHROW(BlpInstance(Sense::maximize, {1}, {Row{{{0, 1}}, 1, RowSense::le}}));

  CHECK_THROWS_WITH_AS(BlpInstance(Sense::maximize, {1}, {Row{{{1, 1}}, 1, RowSense::le}}),
                       doctest::Contains("column 1"), Error);
  try {
    BlpInstance(Sense::maximize, {1}, {Row{{{1, 1}}, 1, RowSense::le}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::index_out_of_range);
  }

  try {
    BlpInstance(Sense::maximize, {1, 2}, {Row{{{0, 1}, {0, 2}}, 1, RowSense::le}});
    FAIL("duplicate column accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::duplicate_column);
  }

  try {
    BlpInstance(Sense::maximize, {kExactBudget}, {});
    FAIL("oversized objective accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::overflow_risk);
  }

  CHECK_NOTHROW(validate_instance(tiny_max_instance()));
}

TEST_CASE("objective evaluation") {
  BlpInstance inst = tiny_max_instance();
  CHECK(objective(inst, Genotype::from_string("110")) == 4);
  CHECK(objective(inst, Genotype::from_string("000")) == 0);
  BlpInstance signed_inst(Sense::maximize, {-2, 5}, {});
  CHECK(objective(signed_inst, Genotype::from_string("11")) == 3);
  CHECK_THROWS_AS(objective(inst, Genotype::from_string("1")), Error);
}

TEST_CASE("feasibility per row sense") {
  BlpInstance inst = tiny_max_instance();
  CHECK(feasible(inst, Genotype::from_string("110")));
  CHECK_FALSE(feasible(inst, Genotype::from_string("111")));

  BlpInstance eq_inst(Sense::maximize, {0, 0}, {Row{{{0, 1}, {1, 1}}, 1, RowSense::eq}});
  CHECK_FALSE(feasible(eq_inst, Genotype::from_string("11")));
  CHECK(feasible(eq_inst, Genotype::from_string("10")));

  BlpInstance no_rows(Sense::maximize, {1, 1}, {});
  CHECK(feasible(no_rows, Genotype::from_string("11")));
  CHECK(feasible(no_rows, Genotype::from_string("00")));
}

TEST_CASE("diff set") {
  DiffSet d = diff_set(Genotype::from_string("110"), Genotype::from_string("011"));
  CHECK(d.indices == std::vector<int>{0, 2});
  CHECK(d.d() == 2);

  CHECK(diff_set(Genotype::from_string("10"), Genotype::from_string("10")).d() == 0);

  DiffSet full = diff_set(Genotype::from_string("1111"), Genotype::from_string("0000"));
  CHECK(full.indices == std::vector<int>{0, 1, 2, 3});

  CHECK_THROWS_AS(diff_set(Genotype::from_string("1"), Genotype::from_string("10")), Error);
}

TEST_CASE("brute-force crossover on the worked example") {
  BlpInstance inst = tiny_max_instance();
  Genotype p1 = Genotype::from_string("110");
  Genotype p2 = Genotype::from_string("011");

  // Candidates: 110 -> 4, 011 -> 3, 111 infeasible, 010 -> 1.
  CrossoverResult best = brute_force_ogtc(inst, p1, p2);
  CHECK(best.offspring.to_string() == "110");
  CHECK(best.value == 4);

  BlpInstance min_inst(Sense::minimize, inst.objective_coeffs(), inst.rows());
  CrossoverResult worst = brute_force_ogtc(min_inst, p1, p2);
  CHECK(worst.offspring.to_string() == "010");
  CHECK(worst.value == 1);

  CrossoverResult same = brute_force_ogtc(inst, p1, p1);
  CHECK(same.offspring == p1);
}

TEST_CASE("brute-force error paths") {
  BlpInstance inst = tiny_max_instance();
  try {
    brute_force_ogtc(inst, Genotype::from_string("111"), Genotype::from_string("000"));
    FAIL("infeasible parent accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::infeasible_parents);
  }

  BlpInstance wide(Sense::maximize, std::vector<Int>(30, 1), {});
  try {
    brute_force_ogtc(wide, Genotype(30, false), Genotype(30, true), 24);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::diff_set_too_large);
  }
}

TEST_CASE("genotype utilities") {
  Genotype g = Genotype::from_string("0101");
  CHECK(g.complement().to_string() == "1010");
  CHECK(g.ones() == std::vector<int>{1, 3});
  CHECK(lex_less(Genotype::from_string("010"), Genotype::from_string("100")));
  CHECK_FALSE(lex_less(Genotype::from_string("100"), Genotype::from_string("010")));
  CHECK_THROWS_AS(Genotype::from_string("01x"), Error);
  CHECK(gene_transmitting(Genotype::from_string("110"), Genotype::from_string("100"),
                          Genotype::from_string("010")));
  CHECK_FALSE(gene_transmitting(Genotype::from_string("001"), Genotype::from_string("100"),
                                Genotype::from_string("010")));
}

TEST_CASE("oracle contract on random mixed instances") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto mixed = selftest::random_mixed_blp(10, 5, 4, t % 2 ? Sense::maximize : Sense::minimize,
                                            rng);
    REQUIRE(feasible(mixed.instance, mixed.p1));
    REQUIRE(feasible(mixed.instance, mixed.p2));
    CrossoverResult r = brute_force_ogtc(mixed.instance, mixed.p1, mixed.p2);

    CHECK(gene_transmitting(r.offspring, mixed.p1, mixed.p2));
    CHECK(feasible(mixed.instance, r.offspring));
    CHECK(r.value == objective(mixed.instance, r.offspring));

    Int v1 = objective(mixed.instance, mixed.p1);
    Int v2 = objective(mixed.instance, mixed.p2);
    Int better = value_not_worse(mixed.instance.sense(), v1, v2) ? v1 : v2;
    CHECK(value_not_worse(mixed.instance.sense(), r.value, better));

    // identical inputs, identical outputs
    CrossoverResult again = brute_force_ogtc(mixed.instance, mixed.p1, mixed.p2);
    CHECK(again.offspring == r.offspring);
  }
}
