// dimers: count perfect matchings of fabric graphs and cross-check the
// product formulas against the exact engine and the oracles.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dimers/closed_forms.hpp"
#include "dimers/error.hpp"
#include "dimers/factorization.hpp"
#include "dimers/graph_io.hpp"
#include "dimers/oracle.hpp"
#include "dimers/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::size_t m = 0, n = 0, s = 0;
  std::string x = "1";
  bool oracle = false;
  bool json = false;
  bool table = false;
  bool timing = false;
  std::size_t limit = 24;
  std::size_t cases = 200;
  std::uint64_t seed = 20231101;
  unsigned workers = 0;
  std::string suite;
  std::string family;
  std::string path;
  std::string expect;
};

/// Integer, "p/q" or terminating decimal.
dimers::Rational parse_rational(const std::string& text, const std::string& flag) {
  const auto bad = [&] { return dimers::Error(dimers::ErrorCode::ParseError, flag + ": cannot parse '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto dot = text.find('.');
  dimers::Rational r;
  try {
    if (dot == std::string::npos) {
      if (r.set_str(text, 10) != 0) throw bad();
      if (r.get_den() == 0) throw bad();
    } else {
      const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      dimers::BigInt num;
      if (digits.empty() || digits == "-" || num.set_str(digits, 10) != 0) throw bad();
      dimers::BigInt den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      r = dimers::make_rational(num, den);
    }
  } catch (const std::invalid_argument&) {
    throw bad();
  }
  r.canonicalize();
  return r;
}

dimers::SuiteOptions suite_options(const Options& o) {
  dimers::SuiteOptions s;
  s.oracle_limit = o.limit;
  s.random_cases = o.cases;
  s.seed = o.seed;
  s.force_oracle = o.oracle;
  s.workers = o.workers;
  return s;
}

int emit(const dimers::Report& report, const Options& o) {
  if (o.json)
    std::cout << report.to_json(o.timing).dump(2) << "\n";
  else
    std::cout << report.to_table();
  return report.failures() == 0 ? kExitOk : kExitFailure;
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += ' ';
    out += argv[i];
  }
  return out;
}

void add_output_flags(CLI::App* cmd, Options& o) {
  auto* json = cmd->add_flag("--json", o.json, "JSON report");
  auto* table = cmd->add_flag("--table", o.table, "human-readable table (default)");
  json->excludes(table);
  cmd->add_flag("--timing", o.timing, "include per-case timings in JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dimer counts for fabric graphs, with formula and oracle cross-checks"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "count matchings of a graph family");
  count->require_subcommand(1);
  struct CountCmd {
    CLI::App* cmd;
    std::string family;
  };
  std::vector<CountCmd> count_cmds;
  for (const char* family : {"honeycomb", "square-cylinder", "grid"}) {
    auto* c = count->add_subcommand(family, std::string("count ") + family);
    c->add_option("-m", o.m, "first size parameter")->required();
    c->add_option("-n", o.n, "second size parameter")->required();
    if (std::string(family) == "honeycomb") c->add_option("--x", o.x, "vertical edge weight (integer, p/q or decimal)");
    c->add_flag("--oracle", o.oracle, "run the exhaustive oracle even above --limit");
    c->add_option("--expect", o.expect, "fail (exit 1) unless the exact count equals this value");
    c->add_option("--limit", o.limit, "exhaustive oracle vertex cap")->check(CLI::Range(1, 64));
    add_output_flags(c, o);
    count_cmds.push_back({c, family});
  }

  auto* file = count->add_subcommand("file", "count matchings of a graph given as JSON");
  file->add_option("path", o.path, "graph JSON file")->required()->check(CLI::ExistingFile);
  file->add_option("--limit", o.limit, "exhaustive oracle vertex cap")->check(CLI::Range(1, 64));
  add_output_flags(file, o);

  auto* partitions = app.add_subcommand("partitions", "count cylindric partitions by enumeration and coefficient extraction");
  partitions->add_option("-m", o.m, "rows")->required();
  partitions->add_option("-s", o.s, "row length")->required();
  partitions->add_option("-n", o.n, "largest entry")->required();
  add_output_flags(partitions, o);

  auto* cliffs = app.add_subcommand("cliffs", "count m-periodic cliffs");
  cliffs->add_option("-m", o.m, "period")->required();
  cliffs->add_option("-n", o.n, "height")->required();
  cliffs->add_option("-s", o.s, "horizontal displacement")->required();
  add_output_flags(cliffs, o);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = dimers::suite_names();
  suites.push_back("all");
  verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--limit", o.limit, "exhaustive oracle vertex cap")->check(CLI::Range(1, 64));
  verify->add_option("--cases", o.cases, "random cases for the engine suite");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--workers", o.workers, "worker threads (default: $DIMERS_WORKERS or all cores)");
  verify->add_flag("--oracle", o.oracle, "run the exhaustive oracle even above --limit");
  add_output_flags(verify, o);

  auto* eigen = app.add_subcommand("eigen", "check closed-form eigenvalues against the exact characteristic polynomial");
  eigen->add_option("family", o.family, "matrix family")->required()->check(CLI::IsMember(dimers::eigen_families()));
  eigen->add_option("-n", o.n, "matrix size")->required()->check(CLI::Range(1, 40));
  add_output_flags(eigen, o);

  auto* chain = app.add_subcommand("chain", "exact cylinder/grid factorization chain for C_{2m+1,2n}");
  chain->add_option("-m", o.m, "half girth parameter")->required();
  chain->add_option("-n", o.n, "half length parameter")->required();
  add_output_flags(chain, o);

  auto* graph = app.add_subcommand("graph", "export a graph family as JSON");
  graph->add_option("family", o.family, "family")
      ->required()
      ->check(CLI::IsMember({"honeycomb", "square-cylinder", "grid", "half-grid", "symmetric-cylinder", "g-prime"}));
  graph->add_option("-m", o.m, "first size parameter")->required();
  graph->add_option("-n", o.n, "second size parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto opts = suite_options(o);
  dimers::Report report;
  report.command = join_args(argc, argv);
  try {
    for (const auto& c : count_cmds) {
      if (!c.cmd->parsed()) continue;
      if (c.family == "honeycomb")
        report.cases.push_back(dimers::honeycomb_case(o.m, o.n, parse_rational(o.x, "--x"), opts));
      else if (c.family == "square-cylinder")
        report.cases.push_back(dimers::square_cylinder_case(o.m, o.n, opts));
      else
        report.cases.push_back(dimers::grid_case(o.m, o.n, opts));
      if (!o.expect.empty()) {
        auto& r = report.cases.back();
        const auto exact = r.engine_value ? r.engine_value : r.oracle_value;
        r.values["expected"] = dimers::to_decimal(parse_rational(o.expect, "--expect"));
        r.checks["expected"] = exact && dimers::Rational(*exact) == parse_rational(o.expect, "--expect");
      }
      return emit(report, o);
    }
    if (file->parsed()) {
      std::ifstream in(o.path);
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw dimers::Error(dimers::ErrorCode::ParseError, o.path + ": " + e.what());
      }
      const auto g = dimers::graph_from_json(j);
      dimers::CaseRecord r;
      r.family = "file";
      r.label = g.kind;
      r.params = {{"vertices", static_cast<long long>(g.vertex_count())}};
      const auto poly = dimers::count_matchings(g, std::max<std::size_t>(o.limit, dimers::kOracleVertexLimit));
      r.oracle_value = poly.degree() <= 0 ? dimers::to_decimal(poly.coefficient(0)) : poly.to_string();
      if (!g.columns().empty() && !g.has_formal_weights()) {
        const auto profile = dimers::count_matchings_profile(g);
        r.engine_value = dimers::to_decimal(profile);
        r.checks["transfer"] = poly == dimers::RatPolynomial::constant(profile) || (poly.is_zero() && profile == 0);
      }
      report.cases.push_back(std::move(r));
      return emit(report, o);
    }
    if (partitions->parsed()) {
      report.cases.push_back(dimers::partitions_case(o.m, o.s, o.n));
      return emit(report, o);
    }
    if (cliffs->parsed()) {
      report.cases.push_back(dimers::cliff_case(o.m, o.n, o.s));
      return emit(report, o);
    }
    if (verify->parsed()) {
      report = dimers::run_suite(o.suite, opts);
      report.command = join_args(argc, argv);
      return emit(report, o);
    }
    if (eigen->parsed()) {
      auto r = dimers::eigen_case(o.family, o.n);
      std::string list;
      for (double v : dimers::eigen_family_values(o.family, o.n)) {
        std::ostringstream os;
        os.precision(15);
        os << v;
        list += (list.empty() ? "" : ",") + os.str();
      }
      r.values["eigenvalues"] = list;
      report.cases.push_back(std::move(r));
      return emit(report, o);
    }
    if (chain->parsed()) {
      report.cases.push_back(dimers::chain_case(o.m, o.n));
      return emit(report, o);
    }
    if (graph->parsed()) {
      nlohmann::json j;
      if (o.family == "honeycomb")
        j = dimers::to_json(dimers::fabric_to_multigraph(dimers::honeycomb_cylinder(o.m, o.n)));
      else if (o.family == "square-cylinder")
        j = dimers::to_json(dimers::square_cylinder_graph(o.m, o.n));
      else if (o.family == "grid")
        j = dimers::to_json(dimers::rect_grid(o.m, o.n));
      else if (o.family == "half-grid")
        j = dimers::to_json(dimers::rect_grid(o.m, o.n, true));
      else if (o.family == "symmetric-cylinder")
        j = dimers::to_json(dimers::symmetric_cylinder(o.m, o.n));
      else
        j = dimers::to_json(dimers::build_g_prime(dimers::symmetric_cylinder(o.m, o.n)));
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const dimers::Error& e) {
    std::cerr << "error [" << dimers::to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
