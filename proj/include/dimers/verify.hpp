#pragma once

// Verification suites: every case computes a value by the determinant
// engine, the product formula and the oracles, and records whether they
// agree. Shared by the command-line front end and the Python module.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dimers/graph.hpp"

namespace dimers {

inline constexpr int kReportVersion = 1;

struct CaseRecord {
  std::string family;
  std::vector<std::pair<std::string, long long>> params;
  std::optional<std::string> engine_value;
  std::optional<double> formula_value;
  std::optional<std::string> oracle_value;
  std::map<std::string, bool> checks;
  std::map<std::string, std::string> values;  ///< further exact values, decimal strings
  std::string label;                          ///< display name such as C_{3,4}
  std::string note;
  double millis = 0.0;

  bool ok() const;
  nlohmann::json to_json(bool with_timing = false) const;
};

struct Report {
  std::string command;
  std::vector<CaseRecord> cases;

  std::size_t failures() const;
  /// Cases sorted by (family, parameter tuple).
  void sort_cases();
  nlohmann::json to_json(bool with_timing = false) const;
  std::string to_table() const;
};

struct SuiteOptions {
  std::size_t oracle_limit = 24;     ///< exhaustive oracle vertex cap
  std::size_t random_cases = 200;
  std::uint64_t seed = 20231101;
  bool force_oracle = false;         ///< run the exhaustive oracle even above the cap (up to 64)
  unsigned workers = 0;              ///< 0: DIMERS_WORKERS or hardware concurrency
};

/// Worker count: `requested` if nonzero, else $DIMERS_WORKERS, else the
/// hardware concurrency.
unsigned resolve_workers(unsigned requested);

/// Runs fn(0..count-1) on a small thread pool; results keep their index.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned workers, const std::function<T(std::size_t)>& fn);

std::vector<std::string> suite_names();

/// Throws InvalidArgument for an unknown suite name.
Report run_suite(const std::string& name, const SuiteOptions& opts);

// Single cases, as produced by the suites and the `count` commands.
CaseRecord honeycomb_case(std::size_t m, std::size_t n, const Rational& x, const SuiteOptions& opts);
CaseRecord honeycomb_polynomial_case(std::size_t m, std::size_t n, const SuiteOptions& opts);
CaseRecord square_cylinder_case(std::size_t m, std::size_t n, const SuiteOptions& opts);
CaseRecord grid_case(std::size_t m, std::size_t n, const SuiteOptions& opts);
CaseRecord cliff_case(std::size_t m, std::size_t n, std::size_t s);
CaseRecord partitions_case(std::size_t m, std::size_t s, std::size_t n);
CaseRecord chain_case(std::size_t m, std::size_t n);
CaseRecord factorization_case(const SymmetricGraph& sg, const std::string& family,
                              std::vector<std::pair<std::string, long long>> params, const SuiteOptions& opts);

std::vector<std::string> eigen_families();

struct EigenCheck {
  std::vector<double> eigenvalues;
  double max_residual = 0.0;   ///< max |chi(lambda)| / (1 + |lambda|^n)
  double max_coeff_gap = 0.0;  ///< max |float coeff - exact| / max(1, |exact|)
  bool ok() const { return max_residual < 1e-6 && max_coeff_gap < 1e-6; }
};

/// Integer matrix of an eigenvalue family: "path" (path adjacency),
/// "wilted" (path adjacency with -1 in the last diagonal entry) or
/// "square-gram" (A A^T for the square strand matrix A).
Matrix eigen_family_matrix(const std::string& family, std::size_t n);
std::vector<double> eigen_family_values(const std::string& family, std::size_t n);
EigenCheck eigen_check(const std::string& family, std::size_t n);
CaseRecord eigen_case(const std::string& family, std::size_t n);

/// Random strand with monotone support: cells on a random down/right
/// staircase, each kept with probability 5/6, weights drawn from `weights`.
Strand random_strand(std::mt19937_64& rng, std::size_t bottom, std::size_t top, const std::vector<int>& weights);

/// Random balanced fabric with 1..max_strands strands and level sizes in
/// 0..max_level (l_m = l_0).
FabricGraph random_fabric(std::mt19937_64& rng, FabricKind kind, std::size_t max_strands, std::size_t max_level,
                          const std::vector<int>& weights = {0, 1, 2});

}  // namespace dimers

#include "dimers/verify_impl.hpp"
