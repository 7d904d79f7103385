#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace segcalc {

struct SuiteFailure {
  std::string input;  // case description, canonical form
  std::string lhs;
  std::string rhs;
  std::string repro;  // single CLI command reproducing the case
};

struct SuiteReport {
  std::string suite;
  long long cases = 0;
  std::vector<SuiteFailure> failures;

  bool ok() const { return failures.empty(); }
  std::string text() const;
  nlohmann::json json() const;
};

struct SuiteParams {
  std::uint64_t seed = 42;
  long long samples = 500;
};

// Suites:
//   hopf                 ring/coring laws of product and coproduct (randomized)
//   jacquet-grading      depth lattice, term counts, swap symmetry (randomized)
//   pole-characterization  both-pole locus of characters vs the closed form (grid)
//   ep-consistency       Ext alternating sum vs the product formula (grid)
//   howe-crosscheck      socle of the degenerate series vs the dual small lift (grid)
//   upper-rank-ext       rank-piece Ext tables vs the upper-rank closed form (grid)
//   lowrank-g3           exhaustive both-pole search in ranks 1-3
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteParams& params = {});

}  // namespace segcalc
