#pragma once

// Instance file formats, seeded instance generators and the problem value
// handed between the CLI and the library.
//
// Formats:
//   json         Boolean programs  {"sense","c","rows":[{"coeffs":[[col,a]],
//                "b","sense"}]}  or facility location under a "splp" key
//   dimacs-graph "p edge N M" / "e u v" plus optional "w v weight" lines
//                (weights default to 1; DIMACS has no standard weight syntax)
//   dimacs-cnf   "p cnf N M" and zero-terminated clause lines
//   orlib        set covering layout: "m n", n column costs, then per row a
//                count and 1-based column indices; the problem kind decides
//                whether rows mean >=, <= or = 1

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>

#include "ogtc/core.hpp"
#include "ogtc/graph.hpp"
#include "ogtc/maxsat.hpp"
#include "ogtc/reductions.hpp"

namespace ogtc {

enum class FileFormat { json, dimacs_graph, dimacs_cnf, orlib };
enum class ProblemKind {
  blp,
  packing,
  partition,
  covering,
  knapsack,
  splp,
  graph_mwis,
  graph_clique,
  graph_cover,
  cnf,
};

FileFormat format_from_string(const std::string& name);
ProblemKind kind_from_string(const std::string& name);
const char* to_string(FileFormat format);
const char* to_string(ProblemKind kind);

/// Guesses the format from a file extension; empty optional when unknown.
std::optional<FileFormat> format_from_path(const std::string& path);

struct ParsedProblem {
  ProblemKind kind = ProblemKind::blp;
  std::variant<BlpInstance, WeightedGraph, CnfInstance, SplpInstance> payload;

  const BlpInstance& blp() const;
  const WeightedGraph& graph() const;
  const CnfInstance& cnf() const;
  const SplpInstance& splp() const;
};

BlpInstance parse_json_blp(const std::string& text);
SplpInstance parse_json_splp(const std::string& text);
WeightedGraph parse_dimacs_graph(const std::string& text);
CnfInstance parse_dimacs_cnf(const std::string& text);
/// OR-Library covering layout, reinterpreted per the requested row sense.
BlpInstance parse_orlib(const std::string& text, RowSense row_sense, Sense sense);

std::string serialize_json_blp(const BlpInstance& inst);
std::string serialize_json_splp(const SplpInstance& splp);
std::string serialize_dimacs_graph(const WeightedGraph& graph);
std::string serialize_dimacs_cnf(const CnfInstance& cnf);
std::string serialize_orlib(const BlpInstance& inst);

ParsedProblem parse_problem_text(const std::string& text, FileFormat format, ProblemKind kind);
ParsedProblem parse_problem_file(const std::string& path, FileFormat format, ProblemKind kind);
std::string serialize_problem(const ParsedProblem& problem, FileFormat format);

/// Natural on-disk format for each problem kind.
FileFormat default_format(ProblemKind kind);

struct GeneratedInstance {
  ParsedProblem problem;
  Genotype p1;
  Genotype p2;
};

using GenParams = std::map<std::string, Int>;

/// Families: random-graph(n,p100,wmin,wmax), random-packing(n,m,cmin,cmax),
/// random-partition(rows,extras,cmin,cmax), random-splp(k,l,cmax,openmax),
/// random-cnf(n,m), random-knapsack(n,m,amax,cmax). p100 is the edge
/// probability in percent. Instances come with two distinct feasible
/// parents and are deterministic per seed.
GeneratedInstance generate(const std::string& family, const GenParams& params,
                           std::uint64_t seed);

// rng-level generators shared by the property suites
WeightedGraph random_graph(int n, double edge_prob, Int wmin, Int wmax, std::mt19937_64& rng);
Genotype random_independent_set(const WeightedGraph& g, std::mt19937_64& rng);
Genotype random_clique(const WeightedGraph& g, std::mt19937_64& rng);
BlpInstance random_packing(int n, int m, Int cmin, Int cmax, std::mt19937_64& rng);
Genotype random_packing_solution(const BlpInstance& packing, std::mt19937_64& rng);
/// Planted partition instance; the two plants are returned as parents.
GeneratedInstance random_partition(int rows, int extras, Int cmin, Int cmax,
                                   std::mt19937_64& rng);
SplpInstance random_splp(int facilities, int clients, Int cmax, Int open_max,
                         std::mt19937_64& rng);
Genotype random_splp_solution(const SplpInstance& s, std::mt19937_64& rng);
CnfInstance random_cnf(int vars, int clauses, std::mt19937_64& rng);
/// Knapsack with two-column rows; both parents stay feasible by choosing
/// right-hand sides above their row values.
GeneratedInstance random_two_column_knapsack(int n, int m, Int amax, Int cmax,
                                             std::mt19937_64& rng);
BlpInstance random_covering(int n, int m, Int cmax, std::mt19937_64& rng);
Genotype random_cover_solution(const BlpInstance& covering, std::mt19937_64& rng);

}  // namespace ogtc
