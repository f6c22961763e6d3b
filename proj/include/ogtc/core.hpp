#pragma once

// Boolean linear programming data model, feasibility checking, and the
// brute-force optimal-recombination oracle that every other crossover
// path is validated against.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ogtc {

using Int = std::int64_t;

enum class ErrorCode {
  index_out_of_range,
  duplicate_column,
  overflow_risk,
  length_mismatch,
  diff_set_too_large,
  infeasible_parents,
  parent_not_independent,
  parent_not_clique,
  parent_not_cover,
  not_a_packing_instance,
  adapter_contract_violation,
  partition_violated,
  combination_blowup,
  too_large,
  negative_coefficient,
  weight_below_threshold,
  malformed_network,
  pair_property_violated,
  parse_error,
  validation_error,
  bad_params,
  sampler_failed,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

/// Fixed-length bit vector; represents candidate solutions, parents and
/// offspring. Position j corresponds to variable x_j.
class Genotype {
 public:
  Genotype() = default;
  explicit Genotype(int length, bool value = false);

  /// Parses a 0/1 string such as "0101".
  static Genotype from_string(std::string_view bits);
  static Genotype from_indices(int length, const std::vector<int>& ones);

  int size() const noexcept { return static_cast<int>(bits_.size()); }
  bool operator[](int i) const { return bits_[static_cast<std::size_t>(i)] != 0; }
  void set(int i, bool value) { bits_[static_cast<std::size_t>(i)] = value ? 1 : 0; }

  Genotype complement() const;
  std::vector<int> ones() const;
  int count_ones() const;
  std::string to_string() const;

  friend bool operator==(const Genotype&, const Genotype&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Bit-vector order with 0 < 1 position by position; the deterministic tie
/// rule of the brute-force oracle.
bool lex_less(const Genotype& a, const Genotype& b);

/// True iff x_j equals p1_j or p2_j for every position.
bool gene_transmitting(const Genotype& x, const Genotype& p1, const Genotype& p2);

/// Positions where two equal-length genotypes differ.
struct DiffSet {
  std::vector<int> indices;  // sorted ascending
  int d() const noexcept { return static_cast<int>(indices.size()); }
};

DiffSet diff_set(const Genotype& p1, const Genotype& p2);

enum class Sense { maximize, minimize };
enum class RowSense { le, ge, eq };

struct RowTerm {
  int col = 0;
  Int coeff = 0;
};

struct Row {
  std::vector<RowTerm> terms;
  Int rhs = 0;
  RowSense sense = RowSense::le;
};

// All arithmetic on an instance (objectives, row sums, penalty constants,
// flow capacities derived from them) stays exact in 64 bits as long as
// 4*sum|c_j| + sum_ij |a_ij| does not exceed this budget. Construction
// rejects anything larger.
inline constexpr Int kExactBudget = Int{1} << 31;

/// Integer linear program over Boolean variables: optimize c*x subject to
/// one linear constraint per row. Immutable after construction; the
/// constructor validates all invariants.
class BlpInstance {
 public:
  BlpInstance(Sense sense, std::vector<Int> objective, std::vector<Row> rows);

  int var_count() const noexcept { return n_; }
  int row_count() const noexcept { return static_cast<int>(rows_.size()); }
  Sense sense() const noexcept { return sense_; }
  const std::vector<Int>& objective_coeffs() const noexcept { return c_; }
  Int objective_coeff(int j) const { return c_[static_cast<std::size_t>(j)]; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const Row& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  /// Columns with a nonzero coefficient in row i.
  std::vector<int> support(int i) const;

 private:
  int n_ = 0;
  Sense sense_ = Sense::maximize;
  std::vector<Int> c_;
  std::vector<Row> rows_;
};

/// Re-checks every instance invariant; throws on violation. Construction
/// already guarantees these, so this is mainly useful for values that have
/// crossed a serialization boundary.
void validate_instance(const BlpInstance& inst);

Int row_value(const Row& row, const Genotype& x);
bool row_satisfied(const Row& row, const Genotype& x);

Int objective(const BlpInstance& inst, const Genotype& x);
bool feasible(const BlpInstance& inst, const Genotype& x);

/// Offspring of a crossover: the genotype, its objective value recomputed
/// from scratch, and the chain of reduction steps that produced it.
struct CrossoverResult {
  Genotype offspring;
  Int value = 0;
  std::vector<std::string> trace;
};

inline constexpr int kDefaultOracleDiffCap = 24;

/// Enumerates all 2^d gene-transmitting candidates (coordinates outside the
/// diff set stay at the common parent value), keeps the feasible ones and
/// returns one optimizing the instance's sense. Ties go to the
/// lexicographically smallest bit vector. Both parents must be feasible, so
/// a feasible offspring always exists.
CrossoverResult brute_force_ogtc(const BlpInstance& inst, const Genotype& p1,
                                 const Genotype& p2,
                                 int diff_cap = kDefaultOracleDiffCap);

/// True iff `value` is at least as good as `than` under `sense`.
inline bool value_not_worse(Sense sense, Int value, Int than) {
  return sense == Sense::maximize ? value >= than : value <= than;
}

inline bool value_better(Sense sense, Int value, Int than) {
  return sense == Sense::maximize ? value > than : value < than;
}

}  // namespace ogtc
