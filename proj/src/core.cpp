#include "ogtc/core.hpp"

#include <algorithm>
#include <sstream>

namespace ogtc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::duplicate_column: return "DuplicateColumn";
    case ErrorCode::overflow_risk: return "OverflowRisk";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::diff_set_too_large: return "DiffSetTooLarge";
    case ErrorCode::infeasible_parents: return "InfeasibleParents";
    case ErrorCode::parent_not_independent: return "ParentNotIndependent";
    case ErrorCode::parent_not_clique: return "ParentNotClique";
    case ErrorCode::parent_not_cover: return "ParentNotCover";
    case ErrorCode::not_a_packing_instance: return "NotAPackingInstance";
    case ErrorCode::adapter_contract_violation: return "AdapterContractViolation";
    case ErrorCode::partition_violated: return "PartitionViolated";
    case ErrorCode::combination_blowup: return "CombinationBlowup";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::negative_coefficient: return "NegativeCoefficient";
    case ErrorCode::weight_below_threshold: return "WeightBelowThreshold";
    case ErrorCode::malformed_network: return "MalformedNetwork";
    case ErrorCode::pair_property_violated: return "PairPropertyViolated";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::validation_error: return "ValidationError";
    case ErrorCode::bad_params: return "BadParams";
    case ErrorCode::sampler_failed: return "SamplerFailed";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

Genotype::Genotype(int length, bool value) {
  if (length < 0) fail(ErrorCode::bad_params, "negative genotype length");
  bits_.assign(static_cast<std::size_t>(length), value ? 1 : 0);
}

Genotype Genotype::from_string(std::string_view bits) {
  Genotype g(static_cast<int>(bits.size()));
  for (int i = 0; i < g.size(); ++i) {
    char c = bits[static_cast<std::size_t>(i)];
    if (c != '0' && c != '1')
      fail(ErrorCode::parse_error, "genotype strings may contain only 0 and 1");
    g.set(i, c == '1');
  }
  return g;
}

Genotype Genotype::from_indices(int length, const std::vector<int>& ones) {
  Genotype g(length);
  for (int i : ones) {
    if (i < 0 || i >= length)
      fail(ErrorCode::index_out_of_range, "genotype index " + std::to_string(i));
    g.set(i, true);
  }
  return g;
}

Genotype Genotype::complement() const {
  Genotype g(size());
  for (int i = 0; i < size(); ++i) g.set(i, !(*this)[i]);
  return g;
}

std::vector<int> Genotype::ones() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if ((*this)[i]) out.push_back(i);
  return out;
}

int Genotype::count_ones() const {
  int k = 0;
  for (int i = 0; i < size(); ++i) k += (*this)[i];
  return k;
}

std::string Genotype::to_string() const {
  std::string s(static_cast<std::size_t>(size()), '0');
  for (int i = 0; i < size(); ++i)
    if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

bool lex_less(const Genotype& a, const Genotype& b) {
  int n = std::min(a.size(), b.size());
  for (int i = 0; i < n; ++i) {
    if (a[i] != b[i]) return !a[i];
  }
  return a.size() < b.size();
}

bool gene_transmitting(const Genotype& x, const Genotype& p1, const Genotype& p2) {
  if (x.size() != p1.size() || x.size() != p2.size()) return false;
  for (int j = 0; j < x.size(); ++j)
    if (x[j] != p1[j] && x[j] != p2[j]) return false;
  return true;
}

DiffSet diff_set(const Genotype& p1, const Genotype& p2) {
  if (p1.size() != p2.size())
    fail(ErrorCode::length_mismatch, "parent genotypes have different lengths");
  DiffSet out;
  for (int j = 0; j < p1.size(); ++j)
    if (p1[j] != p2[j]) out.indices.push_back(j);
  return out;
}

namespace {

void validate_parts(int n, const std::vector<Int>& c, const std::vector<Row>& rows) {
  using Wide = __int128;
  Wide budget = 0;
  for (Int cj : c) budget += cj < 0 ? -Wide(cj) : Wide(cj);
  budget *= 4;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    for (const RowTerm& t : row.terms) {
      if (t.col < 0 || t.col >= n)
        fail(ErrorCode::index_out_of_range,
             "row " + std::to_string(i) + " references column " + std::to_string(t.col));
      if (seen[static_cast<std::size_t>(t.col)])
        fail(ErrorCode::duplicate_column,
             "row " + std::to_string(i) + " repeats column " + std::to_string(t.col));
      seen[static_cast<std::size_t>(t.col)] = 1;
      budget += t.coeff < 0 ? -Wide(t.coeff) : Wide(t.coeff);
    }
    for (const RowTerm& t : row.terms) seen[static_cast<std::size_t>(t.col)] = 0;
    Wide b = row.rhs < 0 ? -Wide(row.rhs) : Wide(row.rhs);
    if (b > Wide(kExactBudget))
      fail(ErrorCode::overflow_risk,
           "row " + std::to_string(i) + " right-hand side exceeds the exact range");
  }
  if (budget > Wide(kExactBudget))
    fail(ErrorCode::overflow_risk,
         "coefficient magnitudes exceed the guaranteed-exact range");
}

}  // namespace

BlpInstance::BlpInstance(Sense sense, std::vector<Int> objective, std::vector<Row> rows)
    : n_(static_cast<int>(objective.size())),
      sense_(sense),
      c_(std::move(objective)),
      rows_(std::move(rows)) {
  validate_parts(n_, c_, rows_);
}

std::vector<int> BlpInstance::support(int i) const {
  std::vector<int> cols;
  for (const RowTerm& t : row(i).terms)
    if (t.coeff != 0) cols.push_back(t.col);
  std::sort(cols.begin(), cols.end());
  return cols;
}

void validate_instance(const BlpInstance& inst) {
  validate_parts(inst.var_count(), inst.objective_coeffs(), inst.rows());
}

Int row_value(const Row& row, const Genotype& x) {
  Int lhs = 0;
  for (const RowTerm& t : row.terms)
    if (x[t.col]) lhs += t.coeff;
  return lhs;
}

bool row_satisfied(const Row& row, const Genotype& x) {
  Int lhs = row_value(row, x);
  switch (row.sense) {
    case RowSense::le: return lhs <= row.rhs;
    case RowSense::ge: return lhs >= row.rhs;
    case RowSense::eq: return lhs == row.rhs;
  }
  return false;
}

Int objective(const BlpInstance& inst, const Genotype& x) {
  if (x.size() != inst.var_count())
    fail(ErrorCode::length_mismatch, "genotype length does not match variable count");
  Int v = 0;
  for (int j = 0; j < inst.var_count(); ++j)
    if (x[j]) v += inst.objective_coeff(j);
  return v;
}

bool feasible(const BlpInstance& inst, const Genotype& x) {
  if (x.size() != inst.var_count())
    fail(ErrorCode::length_mismatch, "genotype length does not match variable count");
  for (const Row& row : inst.rows())
    if (!row_satisfied(row, x)) return false;
  return true;
}

CrossoverResult brute_force_ogtc(const BlpInstance& inst, const Genotype& p1,
                                 const Genotype& p2, int diff_cap) {
  if (!feasible(inst, p1)) fail(ErrorCode::infeasible_parents, "first parent is infeasible");
  if (!feasible(inst, p2)) fail(ErrorCode::infeasible_parents, "second parent is infeasible");
  DiffSet diff = diff_set(p1, p2);
  int d = diff.d();
  if (d > diff_cap)
    fail(ErrorCode::diff_set_too_large,
         "diff set size " + std::to_string(d) + " exceeds cap " + std::to_string(diff_cap));

  Genotype candidate = p1;
  Genotype best;
  Int best_value = 0;
  bool have_best = false;
  const std::uint64_t count = std::uint64_t{1} << d;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (int k = 0; k < d; ++k)
      candidate.set(diff.indices[static_cast<std::size_t>(k)], (mask >> k) & 1u);
    if (!feasible(inst, candidate)) continue;
    Int v = objective(inst, candidate);
    if (!have_best || value_better(inst.sense(), v, best_value) ||
        (v == best_value && lex_less(candidate, best))) {
      best = candidate;
      best_value = v;
      have_best = true;
    }
  }
  // Both parents are candidates, so the loop always found something.
  return CrossoverResult{best, best_value, {"brute-force"}};
}

}  // namespace ogtc
