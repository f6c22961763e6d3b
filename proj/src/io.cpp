#include "ogtc/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace ogtc {

using nlohmann::json;

FileFormat format_from_string(const std::string& name) {
  if (name == "json") return FileFormat::json;
  if (name == "dimacs-graph" || name == "graph") return FileFormat::dimacs_graph;
  if (name == "dimacs-cnf" || name == "cnf") return FileFormat::dimacs_cnf;
  if (name == "orlib") return FileFormat::orlib;
  fail(ErrorCode::bad_params, "unknown format '" + name + "'");
}

ProblemKind kind_from_string(const std::string& name) {
  if (name == "blp") return ProblemKind::blp;
  if (name == "packing") return ProblemKind::packing;
  if (name == "partition") return ProblemKind::partition;
  if (name == "covering") return ProblemKind::covering;
  if (name == "knapsack") return ProblemKind::knapsack;
  if (name == "splp") return ProblemKind::splp;
  if (name == "mwis") return ProblemKind::graph_mwis;
  if (name == "clique") return ProblemKind::graph_clique;
  if (name == "vertex-cover") return ProblemKind::graph_cover;
  if (name == "cnf") return ProblemKind::cnf;
  fail(ErrorCode::bad_params, "unknown problem kind '" + name + "'");
}

const char* to_string(FileFormat format) {
  switch (format) {
    case FileFormat::json: return "json";
    case FileFormat::dimacs_graph: return "dimacs-graph";
    case FileFormat::dimacs_cnf: return "dimacs-cnf";
    case FileFormat::orlib: return "orlib";
  }
  return "unknown";
}

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::blp: return "blp";
    case ProblemKind::packing: return "packing";
    case ProblemKind::partition: return "partition";
    case ProblemKind::covering: return "covering";
    case ProblemKind::knapsack: return "knapsack";
    case ProblemKind::splp: return "splp";
    case ProblemKind::graph_mwis: return "mwis";
    case ProblemKind::graph_clique: return "clique";
    case ProblemKind::graph_cover: return "vertex-cover";
    case ProblemKind::cnf: return "cnf";
  }
  return "unknown";
}

std::optional<FileFormat> format_from_path(const std::string& path) {
  auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return std::nullopt;
  std::string ext = path.substr(dot + 1);
  if (ext == "json") return FileFormat::json;
  if (ext == "col" || ext == "graph" || ext == "dimacs") return FileFormat::dimacs_graph;
  if (ext == "cnf") return FileFormat::dimacs_cnf;
  if (ext == "scp" || ext == "orlib" || ext == "txt") return FileFormat::orlib;
  return std::nullopt;
}

const BlpInstance& ParsedProblem::blp() const {
  if (const auto* p = std::get_if<BlpInstance>(&payload)) return *p;
  fail(ErrorCode::validation_error, "problem value is not a Boolean program");
}
const WeightedGraph& ParsedProblem::graph() const {
  if (const auto* p = std::get_if<WeightedGraph>(&payload)) return *p;
  fail(ErrorCode::validation_error, "problem value is not a graph");
}
const CnfInstance& ParsedProblem::cnf() const {
  if (const auto* p = std::get_if<CnfInstance>(&payload)) return *p;
  fail(ErrorCode::validation_error, "problem value is not a CNF");
}
const SplpInstance& ParsedProblem::splp() const {
  if (const auto* p = std::get_if<SplpInstance>(&payload)) return *p;
  fail(ErrorCode::validation_error, "problem value is not a facility-location instance");
}

namespace {

json parse_json_or_fail(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::parse_error, e.what());
  }
}

RowSense row_sense_from_string(const std::string& s) {
  if (s == "le") return RowSense::le;
  if (s == "ge") return RowSense::ge;
  if (s == "eq") return RowSense::eq;
  fail(ErrorCode::parse_error, "unknown row sense token '" + s + "'");
}

const char* row_sense_name(RowSense s) {
  switch (s) {
    case RowSense::le: return "le";
    case RowSense::ge: return "ge";
    case RowSense::eq: return "eq";
  }
  return "?";
}

}  // namespace

BlpInstance parse_json_blp(const std::string& text) {
  json doc = parse_json_or_fail(text);
  try {
    if (!doc.is_object()) fail(ErrorCode::parse_error, "expected a JSON object");
    std::string sense_token = doc.at("sense").get<std::string>();
    Sense sense;
    if (sense_token == "max")
      sense = Sense::maximize;
    else if (sense_token == "min")
      sense = Sense::minimize;
    else
      fail(ErrorCode::parse_error, "unknown objective sense token '" + sense_token + "'");
    std::vector<Int> c = doc.at("c").get<std::vector<Int>>();
    std::vector<Row> rows;
    for (const json& jrow : doc.value("rows", json::array())) {
      Row row;
      for (const json& term : jrow.at("coeffs")) {
        if (!term.is_array() || term.size() != 2)
          fail(ErrorCode::parse_error, "row coefficients are [column, value] pairs");
        row.terms.push_back({term[0].get<int>(), term[1].get<Int>()});
      }
      row.rhs = jrow.at("b").get<Int>();
      row.sense = row_sense_from_string(jrow.at("sense").get<std::string>());
      rows.push_back(std::move(row));
    }
    return BlpInstance(sense, std::move(c), std::move(rows));
  } catch (const json::exception& e) {
    fail(ErrorCode::parse_error, e.what());
  }
}

SplpInstance parse_json_splp(const std::string& text) {
  json doc = parse_json_or_fail(text);
  try {
    const json& body = doc.contains("splp") ? doc.at("splp") : doc;
    std::vector<Int> opening = body.at("opening_costs").get<std::vector<Int>>();
    std::vector<std::vector<Int>> assignment =
        body.at("assignment_costs").get<std::vector<std::vector<Int>>>();
    return SplpInstance(std::move(opening), std::move(assignment));
  } catch (const json::exception& e) {
    fail(ErrorCode::parse_error, e.what());
  }
}

std::string serialize_json_blp(const BlpInstance& inst) {
  json doc;
  doc["sense"] = inst.sense() == Sense::maximize ? "max" : "min";
  doc["c"] = inst.objective_coeffs();
  json rows = json::array();
  for (const Row& row : inst.rows()) {
    json jrow;
    json coeffs = json::array();
    for (const RowTerm& t : row.terms) coeffs.push_back({t.col, t.coeff});
    jrow["coeffs"] = std::move(coeffs);
    jrow["b"] = row.rhs;
    jrow["sense"] = row_sense_name(row.sense);
    rows.push_back(std::move(jrow));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string serialize_json_splp(const SplpInstance& splp) {
  json body;
  body["opening_costs"] = splp.opening_costs;
  body["assignment_costs"] = splp.assignment_costs;
  json doc;
  doc["splp"] = std::move(body);
  return doc.dump(2) + "\n";
}

WeightedGraph parse_dimacs_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<Int> weights;
  auto bad = [&](const std::string& what) {
    fail(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long edge_count;
      if (!(ls >> kind >> n >> edge_count) || kind != "edge")
        bad("expected 'p edge <vertices> <edges>'");
      if (n < 0) bad("negative vertex count");
      weights.assign(static_cast<std::size_t>(n), 1);
    } else if (tag == "e") {
      int u, v;
      if (n < 0) bad("edge before the problem line");
      if (!(ls >> u >> v)) bad("expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n) bad("vertex out of range");
      edges.emplace_back(u - 1, v - 1);
    } else if (tag == "w") {
      int v;
      Int w;
      if (n < 0) bad("weight before the problem line");
      if (!(ls >> v >> w)) bad("expected 'w <vertex> <weight>'");
      if (v < 1 || v > n) bad("vertex out of range");
      weights[static_cast<std::size_t>(v - 1)] = w;
    } else {
      bad("unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) fail(ErrorCode::parse_error, "missing 'p edge' line");
  // Files may list an edge in both directions.
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return WeightedGraph(n, std::move(edges), std::move(weights));
}

std::string serialize_dimacs_graph(const WeightedGraph& graph) {
  std::ostringstream out;
  out << "p edge " << graph.vertex_count() << ' ' << graph.edges().size() << '\n';
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (graph.weight(v) != 1) out << "w " << v + 1 << ' ' << graph.weight(v) << '\n';
  for (auto [u, v] : graph.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

CnfInstance parse_dimacs_cnf(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  long long expected_clauses = -1;
  std::vector<std::vector<Literal>> clauses;
  std::vector<Literal> current;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string kind;
      if (!(ls >> kind >> n >> expected_clauses) || kind != "cnf")
        fail(ErrorCode::parse_error,
             "line " + std::to_string(line_no) + ": expected 'p cnf <vars> <clauses>'");
      continue;
    }
    if (n < 0)
      fail(ErrorCode::parse_error,
           "line " + std::to_string(line_no) + ": clause before the problem line");
    ls.clear();
    ls.str(line);
    long long lit;
    while (ls >> lit) {
      if (lit == 0) {
        clauses.push_back(current);
        current.clear();
      } else {
        int var = static_cast<int>(lit > 0 ? lit : -lit) - 1;
        if (var >= n)
          fail(ErrorCode::parse_error,
               "line " + std::to_string(line_no) + ": literal out of range");
        current.push_back({var, lit > 0});
      }
    }
  }
  if (n < 0) fail(ErrorCode::parse_error, "missing 'p cnf' line");
  if (!current.empty()) clauses.push_back(current);
  if (expected_clauses >= 0 && expected_clauses != static_cast<long long>(clauses.size()))
    fail(ErrorCode::parse_error, "clause count does not match the problem line");
  return CnfInstance(n, std::move(clauses));
}

std::string serialize_dimacs_cnf(const CnfInstance& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.var_count() << ' ' << cnf.clause_count() << '\n';
  for (const auto& clause : cnf.clauses()) {
    for (const Literal& lit : clause) out << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << ' ';
    out << "0\n";
  }
  return out.str();
}

BlpInstance parse_orlib(const std::string& text, RowSense row_sense, Sense sense) {
  std::istringstream in(text);
  long long m, n;
  if (!(in >> m >> n) || m < 0 || n < 0)
    fail(ErrorCode::parse_error, "expected 'rows columns' header");
  std::vector<Int> costs(static_cast<std::size_t>(n));
  for (long long j = 0; j < n; ++j)
    if (!(in >> costs[static_cast<std::size_t>(j)]))
      fail(ErrorCode::parse_error, "expected " + std::to_string(n) + " column costs");
  std::vector<Row> rows;
  for (long long i = 0; i < m; ++i) {
    long long k;
    if (!(in >> k) || k < 0)
      fail(ErrorCode::parse_error, "row " + std::to_string(i) + ": expected a column count");
    Row row;
    for (long long t = 0; t < k; ++t) {
      long long col;
      if (!(in >> col) || col < 1 || col > n)
        fail(ErrorCode::parse_error,
             "row " + std::to_string(i) + ": column index out of range");
      row.terms.push_back({static_cast<int>(col - 1), 1});
    }
    row.rhs = 1;
    row.sense = row_sense;
    rows.push_back(std::move(row));
  }
  return BlpInstance(sense, std::move(costs), std::move(rows));
}

std::string serialize_orlib(const BlpInstance& inst) {
  std::ostringstream out;
  out << inst.row_count() << ' ' << inst.var_count() << '\n';
  for (int j = 0; j < inst.var_count(); ++j)
    out << inst.objective_coeff(j) << (j + 1 == inst.var_count() ? '\n' : ' ');
  if (inst.var_count() == 0) out << '\n';
  for (int i = 0; i < inst.row_count(); ++i) {
    std::vector<int> cols = inst.support(i);
    out << cols.size() << '\n';
    for (std::size_t t = 0; t < cols.size(); ++t)
      out << cols[t] + 1 << (t + 1 == cols.size() ? '\n' : ' ');
    if (cols.empty()) out << '\n';
  }
  return out.str();
}

namespace {

struct OrlibShape {
  RowSense row_sense;
  Sense sense;
};

OrlibShape orlib_shape(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::packing: return {RowSense::le, Sense::maximize};
    case ProblemKind::partition: return {RowSense::eq, Sense::minimize};
    default: return {RowSense::ge, Sense::minimize};  // covering layout
  }
}

}  // namespace

ParsedProblem parse_problem_text(const std::string& text, FileFormat format, ProblemKind kind) {
  switch (kind) {
    case ProblemKind::graph_mwis:
    case ProblemKind::graph_clique:
    case ProblemKind::graph_cover:
      if (format != FileFormat::dimacs_graph)
        fail(ErrorCode::bad_params, "graph problems read dimacs-graph files");
      return ParsedProblem{kind, parse_dimacs_graph(text)};
    case ProblemKind::cnf:
      if (format != FileFormat::dimacs_cnf)
        fail(ErrorCode::bad_params, "cnf problems read dimacs-cnf files");
      return ParsedProblem{kind, parse_dimacs_cnf(text)};
    case ProblemKind::splp:
      if (format != FileFormat::json)
        fail(ErrorCode::bad_params, "facility-location problems read json files");
      return ParsedProblem{kind, parse_json_splp(text)};
    default:
      if (format == FileFormat::json) return ParsedProblem{kind, parse_json_blp(text)};
      if (format == FileFormat::orlib) {
        OrlibShape shape = orlib_shape(kind);
        return ParsedProblem{kind, parse_orlib(text, shape.row_sense, shape.sense)};
      }
      fail(ErrorCode::bad_params, "Boolean programs read json or orlib files");
  }
}

ParsedProblem parse_problem_file(const std::string& path, FileFormat format, ProblemKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_text(buffer.str(), format, kind);
}

std::string serialize_problem(const ParsedProblem& problem, FileFormat format) {
  switch (format) {
    case FileFormat::json:
      if (problem.kind == ProblemKind::splp) return serialize_json_splp(problem.splp());
      return serialize_json_blp(problem.blp());
    case FileFormat::dimacs_graph: return serialize_dimacs_graph(problem.graph());
    case FileFormat::dimacs_cnf: return serialize_dimacs_cnf(problem.cnf());
    case FileFormat::orlib: return serialize_orlib(problem.blp());
  }
  fail(ErrorCode::bad_params, "unknown format");
}

FileFormat default_format(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::graph_mwis:
    case ProblemKind::graph_clique:
    case ProblemKind::graph_cover: return FileFormat::dimacs_graph;
    case ProblemKind::cnf: return FileFormat::dimacs_cnf;
    default: return FileFormat::json;
  }
}

// ---------------------------------------------------------------------------
// generators

namespace {

Int param_or(const GenParams& params, const std::string& key, Int fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

Int rand_int(Int lo, Int hi, std::mt19937_64& rng) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

}  // namespace

WeightedGraph random_graph(int n, double edge_prob, Int wmin, Int wmax, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  std::vector<Int> weights(static_cast<std::size_t>(n));
  for (Int& w : weights) w = rand_int(wmin, wmax, rng);
  return WeightedGraph(n, std::move(edges), std::move(weights));
}

Genotype random_independent_set(const WeightedGraph& g, std::mt19937_64& rng) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution keep(0.7);
  Genotype x(g.vertex_count());
  for (int v : order) {
    if (!keep(rng)) continue;
    bool ok = true;
    for (int u : adj[static_cast<std::size_t>(v)])
      if (x[u]) {
        ok = false;
        break;
      }
    if (ok) x.set(v, true);
  }
  return x;
}

Genotype random_clique(const WeightedGraph& g, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution keep(0.7);
  Genotype x(g.vertex_count());
  for (int v : order) {
    if (!keep(rng)) continue;
    bool ok = true;
    for (int u = 0; u < g.vertex_count() && ok; ++u)
      if (x[u] && u != v && !g.adjacent(u, v)) ok = false;
    if (ok) x.set(v, true);
  }
  return x;
}

BlpInstance random_packing(int n, int m, Int cmin, Int cmax, std::mt19937_64& rng) {
  std::vector<Row> rows;
  for (int i = 0; i < m; ++i) {
    int size = static_cast<int>(rand_int(2, std::min<Int>(4, n), rng));
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    Row row;
    for (int t = 0; t < size; ++t) row.terms.push_back({cols[static_cast<std::size_t>(t)], 1});
    std::sort(row.terms.begin(), row.terms.end(),
              [](const RowTerm& a, const RowTerm& b) { return a.col < b.col; });
    row.rhs = 1;
    row.sense = RowSense::le;
    rows.push_back(std::move(row));
  }
  std::vector<Int> c(static_cast<std::size_t>(n));
  for (Int& v : c) v = rand_int(cmin, cmax, rng);
  return BlpInstance(Sense::maximize, std::move(c), std::move(rows));
}

Genotype random_packing_solution(const BlpInstance& packing, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(packing.var_count()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution keep(0.7);
  Genotype x(packing.var_count());
  for (int j : order) {
    if (!keep(rng)) continue;
    x.set(j, true);
    if (!feasible(packing, x)) x.set(j, false);
  }
  return x;
}

GeneratedInstance random_partition(int rows, int extras, Int cmin, Int cmax,
                                   std::mt19937_64& rng) {
  if (rows < 1) fail(ErrorCode::bad_params, "a partition instance needs at least one row");
  // Two random groupings of the rows become the planted parents; every
  // group is one column.
  auto plant = [&](std::vector<std::vector<int>>& columns) {
    int groups = static_cast<int>(rand_int(1, std::min<Int>(rows, 5), rng));
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(groups));
    for (int r = 0; r < rows; ++r)
      buckets[static_cast<std::size_t>(rand_int(0, groups - 1, rng))].push_back(r);
    int planted = 0;
    for (auto& bucket : buckets)
      if (!bucket.empty()) {
        columns.push_back(bucket);
        ++planted;
      }
    return planted;
  };
  std::vector<std::vector<int>> columns;
  int first = plant(columns);
  int second = plant(columns);
  for (int e = 0; e < extras; ++e) {
    std::vector<int> decoy;
    for (int r = 0; r < rows; ++r)
      if (rand_int(0, 2, rng) == 0) decoy.push_back(r);
    if (!decoy.empty()) columns.push_back(decoy);
  }
  const int n = static_cast<int>(columns.size());
  std::vector<Row> instance_rows(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    instance_rows[static_cast<std::size_t>(r)].rhs = 1;
    instance_rows[static_cast<std::size_t>(r)].sense = RowSense::eq;
  }
  for (int j = 0; j < n; ++j)
    for (int r : columns[static_cast<std::size_t>(j)])
      instance_rows[static_cast<std::size_t>(r)].terms.push_back({j, 1});
  std::vector<Int> c(static_cast<std::size_t>(n));
  for (Int& v : c) v = rand_int(cmin, cmax, rng);
  BlpInstance inst(Sense::minimize, std::move(c), std::move(instance_rows));

  GeneratedInstance out{ParsedProblem{ProblemKind::partition, std::move(inst)}, Genotype(n),
                        Genotype(n)};
  for (int j = 0; j < first; ++j) out.p1.set(j, true);
  for (int j = first; j < first + second; ++j) out.p2.set(j, true);
  return out;
}

SplpInstance random_splp(int facilities, int clients, Int cmax, Int open_max,
                         std::mt19937_64& rng) {
  std::vector<Int> opening(static_cast<std::size_t>(facilities));
  for (Int& c : opening) c = rand_int(0, open_max, rng);
  std::vector<std::vector<Int>> assignment(static_cast<std::size_t>(facilities),
                                           std::vector<Int>(static_cast<std::size_t>(clients)));
  for (auto& row : assignment)
    for (Int& c : row) c = rand_int(0, cmax, rng);
  return SplpInstance(std::move(opening), std::move(assignment));
}

Genotype random_splp_solution(const SplpInstance& s, std::mt19937_64& rng) {
  const int K = s.facility_count();
  Genotype g(s.var_count());
  if (K == 0) return g;
  std::vector<int> open;
  std::bernoulli_distribution coin(0.5);
  for (int k = 0; k < K; ++k)
    if (coin(rng)) open.push_back(k);
  if (open.empty()) open.push_back(static_cast<int>(rand_int(0, K - 1, rng)));
  for (int k : open) g.set(s.y_index(k), true);
  // Deliberately random assignments, not cheapest-open: stresses the
  // penalty bound with badly matched parents.
  std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
  for (int l = 0; l < s.client_count(); ++l) g.set(s.x_index(open[pick(rng)], l), true);
  return g;
}

CnfInstance random_cnf(int vars, int clauses, std::mt19937_64& rng) {
  std::vector<std::vector<Literal>> all;
  for (int c = 0; c < clauses; ++c) {
    int size = static_cast<int>(rand_int(1, std::min<Int>(3, vars), rng));
    std::vector<int> pool(static_cast<std::size_t>(vars));
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Literal> clause;
    for (int t = 0; t < size; ++t)
      clause.push_back({pool[static_cast<std::size_t>(t)], rand_int(0, 1, rng) == 1});
    all.push_back(std::move(clause));
  }
  return CnfInstance(vars, std::move(all));
}

GeneratedInstance random_two_column_knapsack(int n, int m, Int amax, Int cmax,
                                             std::mt19937_64& rng) {
  if (n < 2) fail(ErrorCode::bad_params, "two-column rows need at least two variables");
  Genotype p1(n), p2(n);
  std::bernoulli_distribution coin(0.5);
  for (int j = 0; j < n; ++j) {
    p1.set(j, coin(rng));
    p2.set(j, coin(rng));
  }
  std::vector<Row> rows;
  for (int i = 0; i < m; ++i) {
    int u = static_cast<int>(rand_int(0, n - 1, rng));
    int v = static_cast<int>(rand_int(0, n - 2, rng));
    if (v >= u) ++v;
    if (u > v) std::swap(u, v);
    Row row;
    row.terms.push_back({u, rand_int(1, amax, rng)});
    row.terms.push_back({v, rand_int(1, amax, rng)});
    row.sense = RowSense::le;
    Int v1 = 0, v2 = 0;
    for (const RowTerm& t : row.terms) {
      if (p1[t.col]) v1 += t.coeff;
      if (p2[t.col]) v2 += t.coeff;
    }
    row.rhs = std::max(v1, v2) + rand_int(0, 1, rng);
    rows.push_back(std::move(row));
  }
  std::vector<Int> c(static_cast<std::size_t>(n));
  for (Int& v : c) v = rand_int(-2, cmax, rng);
  BlpInstance inst(Sense::maximize, std::move(c), std::move(rows));
  return GeneratedInstance{ParsedProblem{ProblemKind::knapsack, std::move(inst)}, std::move(p1),
                           std::move(p2)};
}

BlpInstance random_covering(int n, int m, Int cmax, std::mt19937_64& rng) {
  std::vector<Row> rows;
  for (int i = 0; i < m; ++i) {
    int size = static_cast<int>(rand_int(1, std::min<Int>(4, n), rng));
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    Row row;
    for (int t = 0; t < size; ++t) row.terms.push_back({cols[static_cast<std::size_t>(t)], 1});
    std::sort(row.terms.begin(), row.terms.end(),
              [](const RowTerm& a, const RowTerm& b) { return a.col < b.col; });
    row.rhs = 1;
    row.sense = RowSense::ge;
    rows.push_back(std::move(row));
  }
  std::vector<Int> c(static_cast<std::size_t>(n));
  for (Int& v : c) v = rand_int(0, cmax, rng);
  return BlpInstance(Sense::minimize, std::move(c), std::move(rows));
}

Genotype random_cover_solution(const BlpInstance& covering, std::mt19937_64& rng) {
  Genotype x(covering.var_count());
  std::bernoulli_distribution keep(0.5);
  for (int j = 0; j < covering.var_count(); ++j) x.set(j, keep(rng));
  // Repair: add a random column for every uncovered row.
  for (int i = 0; i < covering.row_count(); ++i) {
    if (row_satisfied(covering.row(i), x)) continue;
    std::vector<int> cols = covering.support(i);
    if (cols.empty()) fail(ErrorCode::validation_error, "row without columns cannot be covered");
    std::uniform_int_distribution<std::size_t> pick(0, cols.size() - 1);
    x.set(cols[pick(rng)], true);
  }
  return x;
}

GeneratedInstance generate(const std::string& family, const GenParams& params,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto distinct_or_retry = [&rng](GeneratedInstance inst, auto resample) {
    for (int attempt = 0; attempt < 64 && inst.p1 == inst.p2; ++attempt)
      inst.p2 = resample(rng);
    if (inst.p1 == inst.p2) fail(ErrorCode::sampler_failed, "could not plant distinct parents");
    return inst;
  };

  if (family == "random-graph") {
    int n = static_cast<int>(param_or(params, "n", 12));
    double p = static_cast<double>(param_or(params, "p100", 30)) / 100.0;
    Int wmin = param_or(params, "wmin", -5);
    Int wmax = param_or(params, "wmax", 10);
    if (n < 1 || p < 0.0 || p > 1.0 || wmin > wmax)
      fail(ErrorCode::bad_params, "random-graph needs n >= 1, 0 <= p100 <= 100, wmin <= wmax");
    WeightedGraph g = random_graph(n, p, wmin, wmax, rng);
    GeneratedInstance out{ParsedProblem{ProblemKind::graph_mwis, g},
                          random_independent_set(g, rng), random_independent_set(g, rng)};
    return distinct_or_retry(std::move(out),
                             [&g](std::mt19937_64& r) { return random_independent_set(g, r); });
  }
  if (family == "random-packing") {
    int n = static_cast<int>(param_or(params, "n", 12));
    int m = static_cast<int>(param_or(params, "m", 6));
    Int cmin = param_or(params, "cmin", 1);
    Int cmax = param_or(params, "cmax", 10);
    if (n < 2 || m < 0 || cmin > cmax) fail(ErrorCode::bad_params, "random-packing parameters");
    BlpInstance inst = random_packing(n, m, cmin, cmax, rng);
    GeneratedInstance out{ParsedProblem{ProblemKind::packing, inst},
                          random_packing_solution(inst, rng),
                          random_packing_solution(inst, rng)};
    return distinct_or_retry(std::move(out), [&inst](std::mt19937_64& r) {
      return random_packing_solution(inst, r);
    });
  }
  if (family == "random-partition") {
    int rows = static_cast<int>(param_or(params, "rows", 8));
    int extras = static_cast<int>(param_or(params, "extras", 4));
    Int cmin = param_or(params, "cmin", 0);
    Int cmax = param_or(params, "cmax", 9);
    if (rows < 1 || extras < 0 || cmin > cmax)
      fail(ErrorCode::bad_params, "random-partition parameters");
    return random_partition(rows, extras, cmin, cmax, rng);
  }
  if (family == "random-splp") {
    int k = static_cast<int>(param_or(params, "k", 3));
    int l = static_cast<int>(param_or(params, "l", 3));
    Int cmax = param_or(params, "cmax", 10);
    Int open_max = param_or(params, "openmax", 10);
    if (k < 1 || l < 0 || cmax < 0 || open_max < 0)
      fail(ErrorCode::bad_params, "random-splp parameters");
    SplpInstance inst = random_splp(k, l, cmax, open_max, rng);
    GeneratedInstance out{ParsedProblem{ProblemKind::splp, inst},
                          random_splp_solution(inst, rng), random_splp_solution(inst, rng)};
    return distinct_or_retry(std::move(out), [&inst](std::mt19937_64& r) {
      return random_splp_solution(inst, r);
    });
  }
  if (family == "random-cnf") {
    int n = static_cast<int>(param_or(params, "n", 6));
    int m = static_cast<int>(param_or(params, "m", 10));
    if (n < 1 || m < 0) fail(ErrorCode::bad_params, "random-cnf parameters");
    CnfInstance cnf = random_cnf(n, m, rng);
    auto sample = [n](std::mt19937_64& r) {
      Genotype g(n);
      std::bernoulli_distribution coin(0.5);
      for (int i = 0; i < n; ++i) g.set(i, coin(r));
      return g;
    };
    GeneratedInstance out{ParsedProblem{ProblemKind::cnf, std::move(cnf)}, sample(rng),
                          sample(rng)};
    return distinct_or_retry(std::move(out), sample);
  }
  if (family == "random-knapsack") {
    int n = static_cast<int>(param_or(params, "n", 12));
    int m = static_cast<int>(param_or(params, "m", 8));
    Int amax = param_or(params, "amax", 5);
    Int cmax = param_or(params, "cmax", 10);
    if (n < 2 || m < 0 || amax < 1 || cmax < 0)
      fail(ErrorCode::bad_params, "random-knapsack parameters");
    GeneratedInstance out = random_two_column_knapsack(n, m, amax, cmax, rng);
    if (out.p1 == out.p2) {
      // Same parents still make a valid instance; flip one free coordinate.
      for (int j = 0; j < out.p2.size() && out.p1 == out.p2; ++j) {
        Genotype flipped = out.p2;
        flipped.set(j, !flipped[j]);
        if (feasible(out.problem.blp(), flipped)) out.p2 = flipped;
      }
    }
    return out;
  }
  fail(ErrorCode::bad_params, "unknown family '" + family + "'");
}

}  // namespace ogtc
