#include <doctest.h>

#include "dimers/verify.hpp"
#include "helpers.hpp"

using namespace dimers;

TEST_CASE("single cases") {
  SuiteOptions opts;
  const CaseRecord c = square_cylinder_case(3, 4, opts);
  CHECK(c.label == "C_{3,4}");
  CHECK(c.engine_value == "19");
  CHECK(c.oracle_value == "19");
  CHECK(c.ok());
  CHECK(grid_case(3, 4, opts).engine_value == "11");
  CHECK(honeycomb_case(2, 3, Rational(2), opts).engine_value == "12");
  CHECK(partitions_case(1, 1, 1).oracle_value == "2");
  CHECK(chain_case(1, 2).values.at("half_grid") == "19/4");
  CHECK(eigen_case("wilted", 5).ok());
  // No exhaustive oracle above the cap unless forced.
  opts.oracle_limit = 10;
  CHECK_FALSE(square_cylinder_case(3, 4, opts).oracle_value.has_value());
  opts.force_oracle = true;
  CHECK(square_cylinder_case(3, 4, opts).oracle_value == "19");
}

TEST_CASE("report JSON shape") {
  Report r;
  r.command = "test";
  CaseRecord good;
  good.family = "a";
  good.checks["x"] = true;
  good.formula_value = 1.0 / 3.0;
  CaseRecord bad;
  bad.family = "b";
  bad.checks["x"] = false;
  bad.engine_value = "5";
  bad.oracle_value = "6";
  r.cases = {bad, good};
  r.sort_cases();
  CHECK(r.cases.front().family == "a");
  const auto j = r.to_json();
  CHECK(j["report_version"] == kReportVersion);
  CHECK(j["summary"]["cases"] == 2);
  CHECK(j["summary"]["failures"] == 1);
  CHECK(j["failures"].size() == 1);
  CHECK(j["failures"][0]["engine_value"] == "5");
  CHECK(j["failures"][0]["oracle_value"] == "6");
  CHECK(j["cases"][0]["formula_value"].get<double>() == 0.333333333333333);
  CHECK_FALSE(j["cases"][0].contains("millis"));
  CHECK(r.to_json(true)["cases"][0].contains("millis"));
  CHECK(r.to_table().find("FAIL x") != std::string::npos);
}

TEST_CASE("failure list is capped at ten") {
  Report r;
  for (int i = 0; i < 15; ++i) {
    CaseRecord c;
    c.family = "f";
    c.params = {{"i", i}};
    c.checks["x"] = false;
    r.cases.push_back(c);
  }
  CHECK(r.to_json()["failures"].size() == 10);
  CHECK(r.failures() == 15);
}

TEST_CASE("suites are deterministic across worker counts") {
  SuiteOptions one;
  one.workers = 1;
  one.random_cases = 40;
  SuiteOptions many = one;
  many.workers = 4;
  for (const auto& name : {"engine", "square", "lemmas", "factorization"}) {
    CAPTURE(name);
    const Report a = run_suite(name, one);
    const Report b = run_suite(name, many);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.failures() == 0);
  }
  CHECK_ERROR_CODE(run_suite("nope", one), ErrorCode::InvalidArgument);
}

TEST_CASE("parallel_map keeps order and propagates errors") {
  const auto out = parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));
  CHECK_THROWS_AS(parallel_map<int>(10, 3, [](std::size_t i) -> int {
                    if (i == 7) throw std::runtime_error("boom");
                    return 0;
                  }),
                  std::runtime_error);
}

TEST_CASE("worker count resolution") {
  CHECK(resolve_workers(3) == 3);
  CHECK(resolve_workers(0) >= 1);
}

TEST_CASE("eigen families") {
  CHECK(eigen_family_matrix("wilted", 1) == Matrix{{-1}});
  CHECK(eigen_family_matrix("path", 3) == Matrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  for (const auto& family : eigen_families())
    for (std::size_t n = 1; n <= 12; ++n) {
      CAPTURE(family);
      CAPTURE(n);
      CHECK(eigen_check(family, n).ok());
    }
  CHECK_ERROR_CODE(eigen_family_matrix("nope", 3), ErrorCode::InvalidArgument);
  CHECK_ERROR_CODE(eigen_family_matrix("path", 0), ErrorCode::InvalidArgument);
}
