#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hodgecone/determinantal.hpp"
#include "hodgecone/report.hpp"

using namespace hodgecone;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitCheckFailed = 2;

struct ConeArgs {
  std::string catalog;
  std::string file;
  int rank = 0;
  int delta = -1;
  int codim = 1;
  std::string hrh_base;
  std::string format = "text";
};

int run_cone(const ConeArgs& a) {
  if (a.catalog.empty() == a.file.empty())
    throw InputError("pass exactly one of --catalog or --file");
  CatalogEntry entry =
      a.catalog.empty() ? load_diamond(a.file) : catalog_entry(a.catalog);

  ConeSetup setup;
  setup.d = entry.diamond.dim();
  if ((a.rank > 0) == (a.delta >= 0))
    throw InputError("pass exactly one of --rank or --delta");
  setup.delta = a.rank > 0 ? a.rank - 1 : a.delta;
  setup.embed_codim = a.codim;
  setup.hrh_base = a.hrh_base.empty() ? entry.hrh_bound
                                      : ExtendedLevel::parse(a.hrh_base);

  auto report = cone_report(entry, setup);
  if (a.format == "json")
    std::cout << report_json(report) << "\n";
  else
    std::cout << report_text(report);
  return report.all_agree() ? 0 : kExitCheckFailed;
}

void print_determinantal_row(const DeterminantalCase& c) {
  auto poly = local_cohomology_poly(c);
  auto cl = codim_and_lcdef(c);
  std::cout << family_name(c.family);
  if (c.family == MatrixFamily::Generic) std::cout << " m=" << c.m;
  std::cout << " n=" << c.n << " p=" << c.p << "\n";
  std::cout << "  H_p(q)         " << poly.str() << "\n";
  std::cout << "  codim          " << cl.codim << "\n";
  std::cout << "  lcdef          " << cl.lcdef << "\n";
  bool corollaries =
      c.family == MatrixFamily::Symmetric ? c.p >= 2 : c.p >= 1;
  if (!corollaries) {
    std::cout << "  (stratification invariants need p >= "
              << (c.family == MatrixFamily::Symmetric ? 2 : 1) << ")\n";
    return;
  }
  std::cout << "  lcdef_gen^{>0} " << lcdef_gen_pos(c) << "\n";
  auto locus = ncci_locus(c);
  std::cout << "  nCCI locus     "
            << (locus.empty ? std::string("empty")
                            : "Z_" + std::to_string(locus.stratum))
            << "\n";
  std::cout << "  c range        {";
  bool first = true;
  for (const auto& v : c_value_range(c)) {
    if (!first) std::cout << ", ";
    first = false;
    std::cout << v.str();
  }
  std::cout << "}\n";
}

int run_determinantal(const std::string& family, const std::vector<int>& dims,
                      bool sweep) {
  MatrixFamily f = parse_family(family);
  if (sweep) {
    if (f == MatrixFamily::Generic) {
      for (int n = 1; n <= 6; ++n)
        for (int m = n; m <= 6; ++m)
          for (int p = 1; p < n; ++p) print_determinantal_row({f, m, n, p});
    } else if (f == MatrixFamily::Symmetric) {
      for (int n = 3; n <= 6; ++n)
        for (int p = 2; p < n; ++p) print_determinantal_row({f, 0, n, p});
    } else {
      int first = f == MatrixFamily::OddSkew ? 3 : 2;
      for (int n = first; n <= 9; n += 2)
        for (int p = 1; p < n / 2; ++p) print_determinantal_row({f, 0, n, p});
    }
    return 0;
  }
  DeterminantalCase c;
  c.family = f;
  if (f == MatrixFamily::Generic) {
    if (dims.size() != 3) throw InputError("generic case needs: m n p");
    c.m = dims[0];
    c.n = dims[1];
    c.p = dims[2];
  } else {
    if (dims.size() != 2) throw InputError("this family needs: n p");
    c.n = dims[0];
    c.p = dims[1];
  }
  c.check();
  print_determinantal_row(c);
  return 0;
}

int run_catalog(const std::string& action, const std::string& name,
                const std::string& path, const std::string& format) {
  if (action == "list") {
    for (const auto& e : builtin_catalog())
      std::cout << e.name << "  dim " << e.diamond.dim() << "  ("
                << e.provenance << ")\n";
    return 0;
  }
  const auto& e = catalog_entry(name);
  if (action == "show") {
    if (format == "json") {
      std::cout << diamond_to_json(e) << "\n";
      return 0;
    }
    std::cout << e.name << "  dim " << e.diamond.dim() << "  ("
              << e.provenance << ")\n";
    for (int k = 0; k <= 2 * e.diamond.dim(); ++k) {
      if (e.diamond.betti(k) == 0) continue;
      std::cout << "  H^" << k << ":";
      for (const auto& [pq, v] : e.diamond.level(k).table())
        std::cout << " h^{" << pq.p << "," << pq.q << "}=" << v;
      std::cout << "\n";
    }
    return 0;
  }
  if (action == "export") {
    if (path.empty())
      std::cout << diamond_to_json(e) << "\n";
    else
      save_diamond(e, path);
    return 0;
  }
  throw InputError("unknown catalog action: " + action);
}

int run_verify(bool all, const std::string& suite) {
  std::vector<SuiteResult> results;
  if (!suite.empty()) {
    if (suite == "lefschetz") results.push_back(suite_lefschetz());
    else if (suite == "routes") results.push_back(suite_routes());
    else if (suite == "inequality") results.push_back(suite_inequality());
    else if (suite == "roundtrip") results.push_back(suite_roundtrip(20260826, 200));
    else if (suite == "qbinomial") results.push_back(suite_qbinomial(12));
    else if (suite == "determinantal") results.push_back(suite_determinantal());
    else if (suite == "validation") results.push_back(suite_validation());
    else throw InputError("unknown suite: " + suite);
  } else {
    (void)all;
    results = run_all_suites();
  }
  bool ok = true;
  for (const auto& r : results) {
    std::cout << r.name << ": " << r.checks << " checks, "
              << r.failures.size() << " failures\n";
    for (const auto& f : r.failures) std::cout << "  FAIL " << f << "\n";
    if (!r.ok()) ok = false;
  }
  std::cout << (ok ? "all suites passed" : "verification failed") << "\n";
  return ok ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of cone singularities from Hodge diamonds"};
  app.require_subcommand(1);

  ConeArgs cone_args;
  auto* cone = app.add_subcommand("cone", "Full report for a cone/contraction");
  cone->add_option("--catalog", cone_args.catalog, "builtin diamond name");
  cone->add_option("--file", cone_args.file, "diamond JSON file");
  cone->add_option("--rank", cone_args.rank, "polarization rank e = delta+1");
  cone->add_option("--delta", cone_args.delta, "contraction defect");
  cone->add_option("--codim", cone_args.codim, "ambient embedding codimension");
  cone->add_option("--hrh-base", cone_args.hrh_base,
                   "override the base HRH bound (integer or inf)");
  cone->add_option("--format", cone_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string det_family;
  std::vector<int> det_dims;
  bool det_sweep = false;
  auto* det = app.add_subcommand("determinantal",
                                 "Local cohomology classes of rank strata");
  det->add_option("family", det_family,
                  "generic | odd-skew | even-skew | symmetric")
      ->required();
  det->add_option("dims", det_dims, "m n p (generic) or n p");
  det->add_flag("--sweep", det_sweep, "print the whole small-parameter grid");

  std::string cat_action, cat_name, cat_path, cat_format = "text";
  auto* cat = app.add_subcommand("catalog", "Builtin diamond catalog");
  cat->add_option("action", cat_action, "list | show | export")->required();
  cat->add_option("name", cat_name, "entry name");
  cat->add_option("path", cat_path, "output file for export");
  cat->add_option("--format", cat_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  bool verify_all = false;
  std::string verify_suite;
  auto* ver = app.add_subcommand("verify", "Run the property suites");
  ver->add_flag("--all", verify_all, "run every suite (default)");
  ver->add_option("--suite", verify_suite,
                  "lefschetz | routes | inequality | roundtrip | qbinomial | "
                  "determinantal | validation");

  try {
    app.parse(argc, argv);
    if (cone->parsed()) return run_cone(cone_args);
    if (det->parsed()) return run_determinantal(det_family, det_dims, det_sweep);
    if (cat->parsed())
      return run_catalog(cat_action, cat_name, cat_path, cat_format);
    if (ver->parsed()) return run_verify(verify_all, verify_suite);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
