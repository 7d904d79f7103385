#include <doctest.h>

#include <string>
#include <vector>

#include "segcalc/errors.hpp"
#include "segcalc/verify.hpp"

using namespace segcalc;

TEST_CASE("the suite registry is fixed and misspellings are rejected") {
  const std::vector<std::string> names{"hopf",
                                       "jacquet-grading",
                                       "pole-characterization",
                                       "ep-consistency",
                                       "howe-crosscheck",
                                       "upper-rank-ext",
                                       "lowrank-g3"};
  CHECK(suite_names() == names);
  CHECK_THROWS_AS(run_suite("nope"), UnknownSuiteError);
}

TEST_CASE("randomized suites pass at reduced sample counts") {
  SuiteParams p;
  p.seed = 7;
  p.samples = 40;

  const SuiteReport hopf = run_suite("hopf", p);
  CHECK(hopf.ok());
  CHECK(hopf.cases == 40);
  CHECK(hopf.text() == "PASS 40/40\n");

  const SuiteReport jac = run_suite("jacquet-grading", p);
  CHECK(jac.ok());
  CHECK(jac.cases == 40);
}

TEST_CASE("deterministic suites report their full case grids") {
  const SuiteReport pole = run_suite("pole-characterization");
  CHECK(pole.ok());
  CHECK(pole.cases == 4224);

  const SuiteReport low = run_suite("lowrank-g3");
  CHECK(low.ok());
  CHECK(low.cases == 4);
  CHECK(low.text() == "PASS 4/4\n");
}

TEST_CASE("reports serialize with suite, cases, and failures") {
  const SuiteReport low = run_suite("lowrank-g3");
  const auto j = low.json();
  CHECK(j.at("kind") == "suite_report");
  CHECK(j.at("suite") == "lowrank-g3");
  CHECK(j.at("cases") == 4);
  CHECK(j.at("failures").is_array());
  CHECK(j.at("failures").empty());
}

TEST_CASE("a fixed seed replays the identical run") {
  SuiteParams p;
  p.seed = 42;
  p.samples = 25;
  const SuiteReport a = run_suite("hopf", p);
  const SuiteReport b = run_suite("hopf", p);
  CHECK(a.text() == b.text());
  CHECK(a.json() == b.json());
}
