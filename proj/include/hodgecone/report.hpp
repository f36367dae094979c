#pragma once

#include <string>
#include <vector>

#include "hodgecone/catalog.hpp"
#include "hodgecone/cone.hpp"
#include "hodgecone/lyubeznik.hpp"

namespace hodgecone {

struct CrossCheck {
  std::string name;
  bool agree = false;
  std::string lhs;
  std::string rhs;
};

// Everything computed for one singularity, with every invariant derived
// along at least two routes and the agreements recorded.
struct Report {
  std::string source;
  ConeSetup setup;
  HodgeDiamond diamond{1};
  LocalCohomologyProfile profile;
  LcdefResult lcdef;
  CResult c;                 // branch casework route
  CResult c_vanishing;       // direct filtration-vanishing route
  ExtendedLevel c_table = ExtendedLevel::neg();
  ExtendedLevel hrh = ExtendedLevel::neg();
  ExtendedLevel hrh_table = ExtendedLevel::neg();
  InequalityVerdict verdict = InequalityVerdict::NotApplicable;
  std::map<int, GenLevelEntry> gen_levels;
  IHTable ih;
  LyubeznikTable table;
  PushforwardReport pushforward;
  std::vector<CrossCheck> checks;

  bool all_agree() const;
};

Report cone_report(const CatalogEntry& entry, const ConeSetup& setup);

std::string report_text(const Report& r);
std::string report_json(const Report& r);

// Batch property suites, shared by the verify subcommand and the tests.
struct SuiteResult {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

SuiteResult suite_lefschetz();
SuiteResult suite_routes();
SuiteResult suite_inequality();
SuiteResult suite_roundtrip(unsigned seed, int count);
SuiteResult suite_qbinomial(int max_a);
SuiteResult suite_determinantal();
SuiteResult suite_validation();
std::vector<SuiteResult> run_all_suites();

// Random valid diamond built from random primitive data; used by the
// roundtrip suite and the tests.
HodgeDiamond random_diamond(unsigned seed);

}  // namespace hodgecone
