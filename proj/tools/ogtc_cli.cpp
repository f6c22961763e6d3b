// Command-line front end: crossover, verify, ga, gen and selftest.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ogtc/dispatch.hpp"
#include "ogtc/selftest.hpp"

namespace {

using namespace ogtc;

FileFormat resolve_format(const std::string& flag, const std::string& path, ProblemKind kind) {
  if (!flag.empty()) return format_from_string(flag);
  if (auto guessed = format_from_path(path)) return *guessed;
  return default_format(kind);
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::infeasible_parents:
    case ErrorCode::parent_not_independent:
    case ErrorCode::parent_not_clique:
    case ErrorCode::parent_not_cover:
      return 2;
    default:
      return 1;
  }
}

struct CrossoverArgs {
  std::string in, format, problem = "blp", p1, p2, method = "flow";
  int oracle_cap = kDefaultOracleDiffCap;
};

int run_crossover(const CrossoverArgs& args) {
  ProblemKind kind = kind_from_string(args.problem);
  ParsedProblem problem =
      parse_problem_file(args.in, resolve_format(args.format, args.in, kind), kind);
  DispatchCaps caps;
  caps.oracle_diff_cap = args.oracle_cap;
  CrossoverResult result =
      dispatch_crossover(problem, method_from_string(args.method),
                         Genotype::from_string(args.p1), Genotype::from_string(args.p2), caps);
  std::cout << "offspring " << result.offspring.to_string() << '\n';
  std::cout << "value " << result.value << '\n';
  std::cout << "trace ";
  for (std::size_t i = 0; i < result.trace.size(); ++i)
    std::cout << (i ? ";" : "") << result.trace[i];
  std::cout << '\n';
  return 0;
}

struct VerifyArgs {
  std::string in, format, problem = "blp", x;
};

int run_verify(const VerifyArgs& args) {
  ProblemKind kind = kind_from_string(args.problem);
  ParsedProblem problem =
      parse_problem_file(args.in, resolve_format(args.format, args.in, kind), kind);
  VerifyReport report = verify_solution(problem, Genotype::from_string(args.x));
  std::cout << "feasible " << (report.feasible ? "true" : "false") << '\n';
  std::cout << "objective " << report.objective << '\n';
  std::cout << "detail " << report.detail << '\n';
  return report.feasible ? 0 : 2;
}

struct GaArgs {
  std::string in, format, problem = "blp", crossover = "optimized", csv;
  std::uint64_t seed = 1;
  int pop = 20;
  int gens = 200;
  double mutation = 0.0;
  int oracle_cap = kDefaultOracleDiffCap;
};

int run_ga_command(const GaArgs& args) {
  ProblemKind kind = kind_from_string(args.problem);
  ParsedProblem problem =
      parse_problem_file(args.in, resolve_format(args.format, args.in, kind), kind);
  DispatchCaps caps;
  caps.oracle_diff_cap = args.oracle_cap;
  std::unique_ptr<GaProblem> ga_problem = make_ga_problem(problem, caps);

  GaConfig config;
  config.population_size = args.pop;
  config.generations = args.gens;
  config.mutation_rate = args.mutation;
  config.seed = args.seed;
  if (args.crossover == "optimized")
    config.crossover = CrossoverKind::optimized;
  else if (args.crossover == "uniform")
    config.crossover = CrossoverKind::uniform;
  else
    fail(ErrorCode::bad_params, "crossover must be 'optimized' or 'uniform'");

  GaRun run = run_ga(*ga_problem, config);
  if (!args.csv.empty()) {
    std::ofstream out(args.csv, std::ios::binary);
    if (!out) fail(ErrorCode::bad_params, "cannot write '" + args.csv + "'");
    write_ga_csv(out, run);
  } else {
    write_ga_csv(std::cout, run);
  }
  std::cerr << "best " << run.best_value << " genotype " << run.best.to_string() << '\n';
  return 0;
}

struct GenArgs {
  std::string family, out;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
};

int run_gen(const GenArgs& args) {
  GenParams params;
  for (const std::string& kv : args.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::bad_params, "parameters look like key=value, got '" + kv + "'");
    try {
      params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::bad_params, "non-integer parameter value in '" + kv + "'");
    }
  }
  GeneratedInstance generated = generate(args.family, params, args.seed);
  FileFormat format = default_format(generated.problem.kind);
  std::string text = serialize_problem(generated.problem, format);
  if (!args.out.empty()) {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) fail(ErrorCode::bad_params, "cannot write '" + args.out + "'");
    out << text;
    std::cout << "wrote " << args.out << " (" << to_string(format) << ", problem "
              << to_string(generated.problem.kind) << ")\n";
  } else {
    std::cout << text;
  }
  std::cout << "p1 " << generated.p1.to_string() << '\n';
  std::cout << "p2 " << generated.p2.to_string() << '\n';
  return 0;
}

int run_selftest(const std::string& scale) {
  selftest::Scale s;
  if (scale == "small")
    s.divisor = 20;
  else if (scale == "full")
    s.divisor = 1;
  else
    fail(ErrorCode::bad_params, "scale must be 'small' or 'full'");
  std::vector<selftest::SuiteResult> results = selftest::run_all_suites(s, &std::cout);
  int failed_suites = 0;
  for (const auto& r : results)
    if (!r.passed()) ++failed_suites;
  int total_cases = 0;
  for (const auto& r : results) total_cases += r.cases;
  std::cout << (failed_suites == 0 ? "PASS" : "FAIL") << ": " << results.size() << " suites, "
            << total_cases << " cases, " << failed_suites << " failing suites\n";
  return failed_suites == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal recombination operators for binary-encoded optimization problems"};
  app.require_subcommand(1);

  CrossoverArgs cross;
  CLI::App* sub = app.add_subcommand(
      "crossover", "Recombine two parent solutions into the best gene-transmitting offspring");
  sub->add_option("--in", cross.in, "instance file")->required();
  sub->add_option("--format", cross.format, "json|dimacs-graph|dimacs-cnf|orlib");
  sub->add_option("--problem", cross.problem,
                  "blp|packing|partition|covering|knapsack|splp|mwis|clique|vertex-cover|cnf");
  sub->add_option("--p1", cross.p1, "first parent as a 0/1 string")->required();
  sub->add_option("--p2", cross.p2, "second parent as a 0/1 string")->required();
  sub->add_option("--method", cross.method, "flow|hypergraph|oracle (default flow)");
  sub->add_option("--oracle-cap", cross.oracle_cap,
                  "largest diff-set size the enumeration methods accept");

  VerifyArgs verify;
  CLI::App* vsub = app.add_subcommand("verify", "Check feasibility and report the objective");
  vsub->add_option("--in", verify.in, "instance file")->required();
  vsub->add_option("--format", verify.format, "json|dimacs-graph|dimacs-cnf|orlib");
  vsub->add_option("--problem", verify.problem, "problem kind, as for crossover");
  vsub->add_option("--x", verify.x, "solution as a 0/1 string")->required();

  GaArgs ga;
  CLI::App* gsub = app.add_subcommand("ga", "Run the steady-state harness");
  gsub->add_option("--in", ga.in, "instance file")->required();
  gsub->add_option("--format", ga.format, "json|dimacs-graph|dimacs-cnf|orlib");
  gsub->add_option("--problem", ga.problem, "problem kind, as for crossover");
  gsub->add_option("--crossover", ga.crossover, "optimized|uniform");
  gsub->add_option("--seed", ga.seed, "random seed");
  gsub->add_option("--pop", ga.pop, "population size (>= 2)");
  gsub->add_option("--gens", ga.gens, "generation budget");
  gsub->add_option("--mutation", ga.mutation, "per-bit flip probability (default 0)");
  gsub->add_option("--csv", ga.csv,
                   "output file; schema: header 'generation,best,mean', one row per "
                   "generation, integer values (mean truncated toward zero)");
  gsub->add_option("--oracle-cap", ga.oracle_cap, "diff-set cap for enumeration fallbacks");

  GenArgs gen;
  CLI::App* nsub = app.add_subcommand("gen", "Generate a random instance with two parents");
  nsub->add_option("--family", gen.family,
                   "random-graph|random-packing|random-partition|random-splp|random-cnf|"
                   "random-knapsack")
      ->required();
  nsub->add_option("--param,--params", gen.params, "family parameter key=value (repeatable)");
  nsub->add_option("--seed", gen.seed, "random seed");
  nsub->add_option("--out", gen.out, "output file (stdout when omitted)");

  std::string scale = "small";
  CLI::App* ssub = app.add_subcommand("selftest", "Run the oracle-equivalence property suites");
  ssub->add_option("--scale", scale, "small|full");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sub->parsed()) return run_crossover(cross);
    if (vsub->parsed()) return run_verify(verify);
    if (gsub->parsed()) return run_ga_command(ga);
    if (nsub->parsed()) return run_gen(gen);
    if (ssub->parsed()) return run_selftest(scale);
  } catch (const ogtc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
