// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hodgecone/determinantal.hpp"
#include "hodgecone/report.hpp"

using namespace hodgecone;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& what,
               const std::function<std::string()>& body) {
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  bool ok = detail.empty();
  if (!ok) ++g_failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << what;
  if (!ok) std::cout << "  [" << detail << "]";
  std::cout << "\n";
}

Report make_report(const std::string& name, int delta, int codim = 1) {
  ConeSetup setup;
  const auto& e = catalog_entry(name);
  setup.d = e.diamond.dim();
  setup.delta = delta;
  setup.embed_codim = codim;
  return cone_report(e, setup);
}

std::string check(bool cond, const std::string& msg) {
  return cond ? "" : msg;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

std::string suite_to_detail(const SuiteResult& s) {
  if (s.ok()) return "";
  return s.name + ": " + s.failures.front() + " (+" +
         std::to_string(s.failures.size() - 1) + " more)";
}

}  // namespace

int main() {
  criterion(1, "quadric threefold cone, both presentations", [] {
    auto a = make_report("p1xp1", 0);
    auto b = make_report("p1", 1);
    std::vector<std::string> bad;
    for (const auto* r : {&a, &b}) {
      bad.push_back(check(r->lcdef.lcdef == 0, "lcdef != 0"));
      bad.push_back(check(r->c.value.is_inf(), "c != inf"));
      bad.push_back(check(r->hrh == ExtendedLevel::finite(0), "HRH != 0"));
      bad.push_back(check(r->ih.ih.count(0) && r->ih.ih.at(0).total() == 1,
                          "IH^0 wrong"));
      bad.push_back(check(r->ih.ih.count(2) && r->ih.ih.at(2).total() == 1 &&
                              r->ih.ih.at(2).dim(1, 1) == 1,
                          "IH^2 wrong"));
      for (const auto& [j, hs] : r->ih.ih)
        if (j != 0 && j != 2) bad.push_back("IH^" + std::to_string(j) + " != 0");
      bad.push_back(check(r->table.lambda.size() == 1 &&
                              r->table.lambda_at(3, 3, 0, 0) == 1,
                          "lambda table wrong"));
      bad.push_back(check(r->table.ilambda_at(1, -1, -1) == 1 &&
                              r->table.ilambda_at(3, 0, 0) == 1 &&
                              r->table.ilambda.size() == 2,
                          "ilambda table wrong"));
    }
    bad.push_back(check(a.ih.ih == b.ih.ih, "IH differs between presentations"));
    bad.push_back(check(a.table.lambda == b.table.lambda &&
                            a.table.ilambda == b.table.ilambda,
                        "tables differ between presentations"));
    return join(bad);
  });

  criterion(2, "route agreement sweep over the catalog", [] {
    return suite_to_detail(suite_routes());
  });

  criterion(3, "Lefschetz closed forms vs summand enumeration", [] {
    return suite_to_detail(suite_lefschetz());
  });

  criterion(4, "defect inequality, sharp for the rank-2 cone", [] {
    return suite_to_detail(suite_inequality());
  });

  criterion(5, "determinantal numbers and grid sweep", [] {
    std::vector<std::string> bad;
    DeterminantalCase c{MatrixFamily::Generic, 3, 3, 1};
    auto poly = local_cohomology_poly(c);
    bad.push_back(check(poly.str() == "[D_0]*(q^4 + q^6) + [D_1]*q^4",
                        "generic 3,3,1 classes wrong: " + poly.str()));
    auto cl = codim_and_lcdef(c);
    bad.push_back(check(cl.lcdef == 2 && cl.lcdef == 3 + 3 - 2 * 1 - 2,
                        "generic 3,3,1 lcdef wrong"));
    bad.push_back(suite_to_detail(suite_determinantal()));
    return join(bad);
  });

  criterion(6, "cones over projective spaces degenerate to a smooth point", [] {
    std::vector<std::string> bad;
    for (const auto& name : {"p1", "p2", "p3", "p4"}) {
      auto r = make_report(name, 0);
      auto smooth = smooth_point_table(r.setup.n());
      bad.push_back(check(r.c.value.is_inf(), std::string(name) + ": c != inf"));
      bad.push_back(check(r.hrh.is_inf(), std::string(name) + ": HRH != inf"));
      bad.push_back(check(r.table.lambda == smooth.lambda &&
                              r.table.ilambda == smooth.ilambda,
                          std::string(name) + ": table not smooth-point"));
      for (const auto& [j, hs] : r.ih.ih)
        if (j > 0 && hs.total() != 0)
          bad.push_back(std::string(name) + ": IH^" + std::to_string(j) +
                        " != 0");
    }
    return join(bad);
  });

  criterion(7, "elliptic cone", [] {
    auto r = make_report("elliptic", 0);
    std::vector<std::string> bad;
    bad.push_back(check(r.hrh.is_neg(), "HRH != neg"));
    bad.push_back(check(r.c.value.is_inf(), "c != inf"));
    bad.push_back(check(r.profile.topweight_h0.size() == 1, "H0 piece missing"));
    if (r.profile.topweight_h0.size() == 1) {
      auto hs = r.profile.topweight_h0[0].hs.twist(r.setup.embed_codim);
      bad.push_back(check(hs.weight() == 3 && hs.total() == 2 &&
                              hs.dim(2, 1) == 1 && hs.dim(1, 2) == 1,
                          "top weight types wrong"));
    }
    return join(bad);
  });

  criterion(8, "structural invariants", [] {
    std::vector<std::string> bad;
    bad.push_back(suite_to_detail(suite_validation()));
    bad.push_back(suite_to_detail(suite_roundtrip(20260826, 200)));
    bad.push_back(suite_to_detail(suite_qbinomial(12)));
    return join(bad);
  });

  if (g_failures == 0) {
    std::cout << "all acceptance criteria pass\n";
    return 0;
  }
  std::cout << g_failures << " acceptance criteria failing\n";
  return 1;
}
