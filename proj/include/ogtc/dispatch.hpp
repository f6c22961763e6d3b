#pragma once

// Routes a (problem, method) pair to the right crossover implementation and
// provides the solution checker behind the CLI.

#include <memory>
#include <string>

#include "ogtc/ga.hpp"
#include "ogtc/io.hpp"

namespace ogtc {

enum class Method { flow, hypergraph, oracle };

Method method_from_string(const std::string& name);
const char* to_string(Method method);

struct DispatchCaps {
  int oracle_diff_cap = kDefaultOracleDiffCap;
  int combination_cap = 20;
  int solver_cap = 30;
};

/// flow: the problem's dedicated operator (bipartite flow for graph
/// problems and the reductions; branch and bound for set covering).
/// hypergraph: the general construction over the Boolean encoding.
/// oracle: brute-force enumeration over the diff set.
/// CNF problems run on their graph representation in all three cases and
/// report satisfied-clause counts.
CrossoverResult dispatch_crossover(const ParsedProblem& problem, Method method,
                                   const Genotype& p1, const Genotype& p2,
                                   const DispatchCaps& caps = {});

struct VerifyReport {
  bool feasible = false;
  Int objective = 0;
  std::string detail;
};

VerifyReport verify_solution(const ParsedProblem& problem, const Genotype& x);

std::unique_ptr<GaProblem> make_ga_problem(const ParsedProblem& problem,
                                           const DispatchCaps& caps = {});

/// Boolean encoding used by the oracle and hypergraph methods.
BlpInstance encode_as_blp(const ParsedProblem& problem);

}  // namespace ogtc
