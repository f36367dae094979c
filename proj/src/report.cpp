#include "hodgecone/report.hpp"

#include <random>
#include <sstream>

#include "json.hpp"

#include "hodgecone/determinantal.hpp"
#include "hodgecone/qpoly.hpp"

namespace hodgecone {

namespace {

std::string hs_str(const PureHodgeStructure& hs) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [pq, dim] : hs.table()) {
    if (!first) os << ", ";
    first = false;
    os << "(" << pq.p << "," << pq.q << "):" << dim;
  }
  os << "}";
  return os.str();
}

std::string cres_str(const CResult& c) {
  std::string s = c.value.str();
  if (c.saturated) s += " (at base bound)";
  return s;
}

std::string verdict_str(InequalityVerdict v) {
  switch (v) {
    case InequalityVerdict::Holds: return "holds";
    case InequalityVerdict::Violated: return "violated";
    case InequalityVerdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

void push_check(Report& r, const std::string& name, bool agree,
                const std::string& lhs, const std::string& rhs) {
  r.checks.push_back({name, agree, lhs, rhs});
}

}  // namespace

bool Report::all_agree() const {
  for (const auto& c : checks)
    if (!c.agree) return false;
  return true;
}

Report cone_report(const CatalogEntry& entry, const ConeSetup& setup) {
  setup.check();
  Report r;
  r.source = entry.name;
  r.setup = setup;
  r.diamond = entry.diamond;
  validate_diamond(r.diamond);

  auto pd = primitive_decomposition(r.diamond);
  r.profile = local_cohomology_profile(pd, setup);
  r.lcdef = lcdef_from_profile(r.profile);
  r.c = c_invariant_closed_form(pd, setup);
  r.c_vanishing = c_invariant_vanishing_route(pd, setup);
  r.table = hodge_lyubeznik_table(pd, setup);
  r.c_table = c_from_table(r.table);
  r.hrh = hrh_invariant(pd, setup, r.c.value);
  r.hrh_table = hrh_from_table(r.table, r.c_table);
  r.verdict = cci_inequality(r.lcdef, r.c);
  r.gen_levels = generation_levels(pd, setup);
  r.ih = intersection_cohomology_of_cone(pd, setup.delta + 1);
  r.pushforward = pushforward_decomposition(r.diamond, setup);

  // Route agreements.
  push_check(r, "c: casework vs filtration-vanishing",
             r.c.value == r.c_vanishing.value &&
                 r.c.saturated == r.c_vanishing.saturated,
             cres_str(r.c), cres_str(r.c_vanishing));
  bool c_table_ok = r.c.saturated
                        ? r.c_table >= r.c.value
                        : r.c_table == r.c.value;
  push_check(r, "c: casework vs Lyubeznik table", c_table_ok, cres_str(r.c),
             r.c_table.str());
  bool hrh_ok = r.c.saturated ? r.hrh_table >= r.hrh
                              : r.hrh_table == r.hrh;
  push_check(r, "HRH: direct vs Lyubeznik table", hrh_ok, r.hrh.str(),
             r.hrh_table.str());

  // The two Lefschetz routes, across the whole (c, j) range used above.
  {
    bool ok = true;
    std::string bad;
    int d = pd.dim;
    for (int c = 1; c <= d + 1 && ok; ++c)
      for (int j = 1; j <= 2 * d + 2 && ok; ++j) {
        if (!(lefschetz_kernel(pd, c, j) ==
              lefschetz_kernel_enumerated(pd, c, j)) ||
            !(lefschetz_cokernel(pd, c, j) ==
              lefschetz_cokernel_enumerated(pd, c, j))) {
          ok = false;
          bad = "c=" + std::to_string(c) + " j=" + std::to_string(j);
        }
      }
    push_check(r, "Lefschetz kernel/cokernel: closed form vs enumeration", ok,
               ok ? "equal" : bad, "");
  }

  // Purity of the profile: each summand in degree j has weight n+j+1
  // plus twice the ambient codimension.
  {
    bool ok = true;
    int n = setup.n();
    for (const auto& [j, list] : r.profile.summands)
      for (const auto& s : list)
        if (s.hs.weight() != n + j + 1 + 2 * setup.embed_codim) ok = false;
    push_check(r, "profile weight purity", ok, "", "");
  }

  // Primitive decomposition roundtrip on the input diamond.
  push_check(r, "primitive decomposition roundtrip",
             reconstruct_from_primitive(pd) == r.diamond, "", "");

  // Decomposition-theorem Betti identity.
  push_check(r, "pushforward Betti identity", r.pushforward.betti_identity_ok,
             "", "");

  // Mass of the intersection Lyubeznik column against Betti numbers.
  {
    bool ok = true;
    std::string bad;
    int n = setup.n();
    for (int rr = 1; rr <= n; ++rr) {
      long long expect = r.diamond.betti(n - rr) - r.diamond.betti(n + rr);
      if (ilambda_mass(r.table, rr) != expect) {
        ok = false;
        bad = "r=" + std::to_string(rr);
      }
    }
    push_check(r, "ilambda mass vs Betti numbers", ok, ok ? "equal" : bad, "");
  }
  return r;
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "source: " << r.source << "\n";
  os << "setup: d=" << r.setup.d << " delta=" << r.setup.delta
     << " n=" << r.setup.n() << " embed_codim=" << r.setup.embed_codim
     << " hrh_base=" << r.setup.hrh_base.str() << "\n\n";

  os << "invariants\n";
  os << "  lcdef          " << r.lcdef.lcdef << "\n";
  os << "  lcdef_gen_pos  " << r.lcdef.lcdef_gen_pos << "\n";
  os << "  ncci_codim     " << r.lcdef.ncci_codim.str() << "\n";
  os << "  c              " << cres_str(r.c) << (r.c.cci ? " (CCI)" : "")
     << "\n";
  os << "  HRH            " << r.hrh.str() << "\n";
  os << "  inequality     " << verdict_str(r.verdict) << "\n\n";

  os << "local cohomology profile (top weight pieces)\n";
  if (r.profile.summands.empty()) os << "  all vanish for j >= 1\n";
  for (const auto& [j, list] : r.profile.summands) {
    os << "  j=" << j << ":";
    for (const auto& s : list)
      os << "  prim^" << s.prim_degree << "(" << s.twist << ") "
         << hs_str(s.hs);
    os << "\n";
  }
  os << "  H0 top weight:";
  if (r.profile.topweight_h0.empty()) os << " 0";
  for (const auto& s : r.profile.topweight_h0)
    os << " prim^" << s.prim_degree << "(" << s.twist << ") " << hs_str(s.hs);
  os << "\n\n";

  os << "generation levels\n";
  for (const auto& [j, e] : r.gen_levels) {
    os << "  j=" << j << ": ";
    if (e.zero_module)
      os << "zero module\n";
    else
      os << e.value << "\n";
  }
  os << "\n";

  os << "intersection cohomology of the cone (dim " << r.ih.cone_dim << ")\n";
  for (const auto& [j, hs] : r.ih.ih)
    os << "  IH^" << j << " dim " << hs.total() << " " << hs_str(hs) << "\n";
  os << "\n";

  os << "Lyubeznik table (n=" << r.table.n << ")\n";
  for (const auto& [key, v] : r.table.lambda) {
    auto [rr, s, p, q] = key;
    os << "  lambda_{" << rr << "," << s << "}^{" << p << "," << q
       << "} = " << v << "\n";
  }
  for (const auto& [key, v] : r.table.ilambda) {
    auto [rr, p, q] = key;
    os << "  ilambda_" << rr << "^{" << p << "," << q << "} = " << v << "\n";
  }
  os << "\n";

  os << "cross-checks\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.agree ? "agree" : "DISAGREE") << "] " << c.name;
    if (!c.agree) os << "  " << c.lhs << " vs " << c.rhs;
    os << "\n";
  }
  return os.str();
}

namespace {

nlohmann::ordered_json hs_json(const PureHodgeStructure& hs) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [pq, dim] : hs.table()) rows.push_back({pq.p, pq.q, dim});
  nlohmann::ordered_json j;
  j["weight"] = hs.weight();
  j["pieces"] = rows;
  return j;
}

nlohmann::ordered_json level_json(const ExtendedLevel& l) {
  if (l.is_finite()) return l.value();
  return l.str();
}

}  // namespace

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["source"] = r.source;
  j["setup"] = {{"d", r.setup.d},
                {"delta", r.setup.delta},
                {"n", r.setup.n()},
                {"embed_codim", r.setup.embed_codim},
                {"hrh_base", level_json(r.setup.hrh_base)}};
  j["invariants"] = {{"lcdef", r.lcdef.lcdef},
                     {"lcdef_gen_pos", r.lcdef.lcdef_gen_pos},
                     {"ncci_codim", level_json(r.lcdef.ncci_codim)},
                     {"c", level_json(r.c.value)},
                     {"c_saturated", r.c.saturated},
                     {"cci", r.c.cci},
                     {"hrh", level_json(r.hrh)},
                     {"inequality", verdict_str(r.verdict)}};

  auto profile = nlohmann::ordered_json::array();
  for (const auto& [deg, list] : r.profile.summands) {
    auto summands = nlohmann::ordered_json::array();
    for (const auto& s : list)
      summands.push_back({{"prim_degree", s.prim_degree},
                          {"twist", s.twist},
                          {"hs", hs_json(s.hs)}});
    profile.push_back({{"j", deg}, {"summands", summands}});
  }
  j["profile"] = profile;
  auto h0 = nlohmann::ordered_json::array();
  for (const auto& s : r.profile.topweight_h0)
    h0.push_back({{"prim_degree", s.prim_degree},
                  {"twist", s.twist},
                  {"hs", hs_json(s.hs)}});
  j["topweight_h0"] = h0;

  auto gl = nlohmann::ordered_json::array();
  for (const auto& [deg, e] : r.gen_levels) {
    nlohmann::ordered_json row;
    row["j"] = deg;
    if (e.zero_module)
      row["value"] = "zero";
    else
      row["value"] = e.value;
    gl.push_back(row);
  }
  j["generation_levels"] = gl;

  auto ih = nlohmann::ordered_json::array();
  for (const auto& [deg, hs] : r.ih.ih)
    ih.push_back({{"j", deg}, {"dim", hs.total()}, {"hs", hs_json(hs)}});
  j["ih"] = ih;
  auto ihc = nlohmann::ordered_json::array();
  for (const auto& [deg, hs] : r.ih.ih_c)
    ihc.push_back({{"j", deg}, {"dim", hs.total()}, {"hs", hs_json(hs)}});
  j["ih_c"] = ihc;

  auto lam = nlohmann::ordered_json::array();
  for (const auto& [key, v] : r.table.lambda) {
    auto [rr, s, p, q] = key;
    lam.push_back({rr, s, p, q, v});
  }
  auto ilam = nlohmann::ordered_json::array();
  for (const auto& [key, v] : r.table.ilambda) {
    auto [rr, p, q] = key;
    ilam.push_back({rr, p, q, v});
  }
  j["lyubeznik"] = {{"n", r.table.n}, {"lambda", lam}, {"ilambda", ilam}};

  auto push = nlohmann::ordered_json::array();
  for (const auto& s : r.pushforward.skyscrapers)
    push.push_back({{"shift", s.shift},
                    {"degree", s.degree},
                    {"twist", s.twist},
                    {"dim", s.dim}});
  j["pushforward"] = {{"skyscrapers", push},
                      {"betti_identity", r.pushforward.betti_identity_ok}};

  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json row;
    row["name"] = c.name;
    row["agree"] = c.agree;
    if (!c.agree) {
      row["lhs"] = c.lhs;
      row["rhs"] = c.rhs;
    }
    checks.push_back(row);
  }
  j["cross_checks"] = checks;
  return j.dump(2);
}

namespace {

void expect(SuiteResult& s, bool cond, const std::string& msg) {
  ++s.checks;
  if (!cond) s.failures.push_back(msg);
}

std::vector<ConeSetup> sweep_setups(int d) {
  std::vector<ConeSetup> out;
  for (int delta : {0, 1, 2})
    for (int q : {1, 2}) {
      ConeSetup s;
      s.d = d;
      s.delta = delta;
      s.embed_codim = q;
      out.push_back(s);
    }
  return out;
}

}  // namespace

SuiteResult suite_lefschetz() {
  SuiteResult s{"lefschetz"};
  for (const auto& e : builtin_catalog()) {
    auto pd = primitive_decomposition(e.diamond);
    int d = pd.dim;
    for (int c = 1; c <= d + 1; ++c)
      for (int j = 1; j <= 2 * d + 2; ++j) {
        std::string where =
            e.name + " c=" + std::to_string(c) + " j=" + std::to_string(j);
        expect(s,
               lefschetz_kernel(pd, c, j) ==
                   lefschetz_kernel_enumerated(pd, c, j),
               "kernel mismatch at " + where);
        expect(s,
               lefschetz_cokernel(pd, c, j) ==
                   lefschetz_cokernel_enumerated(pd, c, j),
               "cokernel mismatch at " + where);
      }
  }
  return s;
}

SuiteResult suite_routes() {
  SuiteResult s{"routes"};
  for (const auto& e : builtin_catalog())
    for (const auto& setup : sweep_setups(e.diamond.dim())) {
      auto r = cone_report(e, setup);
      for (const auto& c : r.checks)
        expect(s, c.agree,
               e.name + " delta=" + std::to_string(setup.delta) +
                   " q=" + std::to_string(setup.embed_codim) + ": " + c.name +
                   " (" + c.lhs + " vs " + c.rhs + ")");
    }
  return s;
}

SuiteResult suite_inequality() {
  SuiteResult s{"inequality"};
  for (const auto& e : builtin_catalog())
    for (const auto& setup : sweep_setups(e.diamond.dim())) {
      auto r = cone_report(e, setup);
      if (r.c.value >= ExtendedLevel::finite(0))
        expect(s, r.verdict != InequalityVerdict::Violated,
               "inequality violated for " + e.name +
                   " delta=" + std::to_string(setup.delta));
    }
  // Sharpness: rank-2 matrices through the cone over P^3.
  {
    ConeSetup setup;
    setup.d = 3;
    setup.delta = 1;
    auto r = cone_report(catalog_entry("p3"), setup);
    bool sharp = r.lcdef.lcdef_gen_pos == 2 &&
                 r.c.value == ExtendedLevel::finite(0) &&
                 r.lcdef.ncci_codim == ExtendedLevel::finite(5);
    expect(s, sharp, "rank-2 cone over p3 is not sharp");
  }
  return s;
}

HodgeDiamond random_diamond(unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> dim_pick(1, 4);
  std::uniform_int_distribution<long long> dim_val(0, 2);
  int d = dim_pick(gen);
  PrimitiveDecomposition pd;
  pd.dim = d;
  for (int k = 0; k <= d; ++k) {
    PureHodgeStructure pk(k);
    if (k == 0) {
      pk.add(0, 0, 1);
    } else {
      for (int p = k; 2 * p >= k; --p) {
        long long v = dim_val(gen);
        if (v == 0) continue;
        pk.add(p, k - p, v);
        if (p != k - p) pk.add(k - p, p, v);
      }
    }
    pd.prim.push_back(std::move(pk));
  }
  return reconstruct_from_primitive(pd);
}

SuiteResult suite_roundtrip(unsigned seed, int count) {
  SuiteResult s{"roundtrip"};
  for (int i = 0; i < count; ++i) {
    unsigned si = seed + static_cast<unsigned>(i);
    auto dia = random_diamond(si);
    std::string where = "seed " + std::to_string(si);
    bool valid = true;
    try {
      validate_diamond(dia);
    } catch (const ValidationError&) {
      valid = false;
    }
    expect(s, valid, "random diamond fails validation at " + where);
    if (!valid) continue;
    auto pd = primitive_decomposition(dia);
    expect(s, reconstruct_from_primitive(pd) == dia,
           "roundtrip mismatch at " + where);
  }
  return s;
}

SuiteResult suite_qbinomial(int max_a) {
  SuiteResult s{"qbinomial"};
  for (int a = 0; a <= max_a; ++a)
    for (int b = 0; b <= a; ++b) {
      auto pas = q_binomial(a, b);
      auto div = q_binomial_by_division(a, b);
      std::string ab = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      expect(s, pas == div, "recurrence vs division differ at " + ab);
      expect(s, pas == q_binomial(a, a - b), "reflection fails at " + ab);
      int deg = b * (a - b);
      bool sym = true, unimodal = true;
      long long prev = -1;
      for (int e = 0; e <= deg; ++e) {
        if (pas.coeff(e) != pas.coeff(deg - e)) sym = false;
        if (2 * e <= deg) {
          if (pas.coeff(e) < prev) unimodal = false;
          prev = pas.coeff(e);
        }
      }
      expect(s, sym, "coefficients not symmetric at " + ab);
      expect(s, unimodal, "coefficients not unimodal at " + ab);
    }
  return s;
}

SuiteResult suite_determinantal() {
  SuiteResult s{"determinantal"};
  auto run_case = [&s](const DeterminantalCase& c) {
    std::string where = family_name(c.family) + " m=" + std::to_string(c.m) +
                        " n=" + std::to_string(c.n) +
                        " p=" + std::to_string(c.p);
    try {
      auto poly = local_cohomology_poly(c);
      expect(s, poly.nonnegative(), "negative coefficient at " + where);
      auto cl = codim_and_lcdef(c);  // throws if min degree != codim
      expect(s, cl.codim == stratum_codim(c), "codim mismatch at " + where);
      bool corollaries_apply =
          c.family == MatrixFamily::Symmetric ? c.p >= 2 : c.p >= 1;
      if (corollaries_apply) {
        int gen = lcdef_gen_pos(c);
        expect(s, gen <= cl.lcdef, "lcdef_gen_pos > lcdef at " + where);
        auto locus = ncci_locus(c);
        auto range = c_value_range(c);
        if (gen == 0) {
          // Hypersurface branches.
          expect(s, cl.lcdef == 0, "hypersurface branch lcdef != 0 at " + where);
          expect(s, locus.empty, "hypersurface branch locus not empty at " + where);
          expect(s,
                 range.size() == 1 && range[0] == ExtendedLevel::inf(),
                 "hypersurface branch c != inf at " + where);
        } else {
          expect(s, !locus.empty, "positive defect with empty locus at " + where);
        }
      }
    } catch (const std::exception& ex) {
      expect(s, false, where + ": " + ex.what());
    }
  };

  for (int n = 1; n <= 6; ++n)
    for (int m = n; m <= 6; ++m)
      for (int p = 0; p < n; ++p)
        run_case({MatrixFamily::Generic, m, n, p});
  for (int n = 3; n <= 9; n += 2)
    for (int p = 0; p < n / 2; ++p)
      run_case({MatrixFamily::OddSkew, 0, n, p});
  for (int n = 2; n <= 8; n += 2)
    for (int p = 0; p < n / 2; ++p)
      run_case({MatrixFamily::EvenSkew, 0, n, p});
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p < n; ++p)
      run_case({MatrixFamily::Symmetric, 0, n, p});
  return s;
}

SuiteResult suite_validation() {
  SuiteResult s{"validation"};
  auto rejected = [](const HodgeDiamond& d) {
    try {
      validate_diamond(d);
    } catch (const ValidationError&) {
      return true;
    }
    return false;
  };

  {
    HodgeDiamond d(1);  // disconnected: two classes in H^0
    d.set(0, 0, 0, 2);
    d.set(2, 1, 1, 2);
    expect(s, rejected(d), "disconnected diamond accepted");
  }
  {
    HodgeDiamond d(2);  // duality broken in the middle row
    d.set(0, 0, 0, 1);
    d.set(2, 1, 1, 3);
    d.set(4, 2, 2, 1);
    d.set(1, 1, 0, 1);
    d.set(1, 0, 1, 1);
    expect(s, rejected(d), "duality violation accepted");
  }
  {
    HodgeDiamond d(2);  // Lefschetz broken: H^0 does not inject into H^2
    d.set(0, 0, 0, 1);
    d.set(2, 0, 2, 1);
    d.set(2, 2, 0, 1);
    d.set(4, 2, 2, 1);
    expect(s, rejected(d), "hard Lefschetz violation accepted");
  }
  {
    HodgeDiamond d(1);  // Hodge symmetry broken in H^1
    d.set(0, 0, 0, 1);
    d.set(1, 1, 0, 2);
    d.set(1, 0, 1, 1);
    d.set(2, 1, 1, 1);
    expect(s, rejected(d), "Hodge symmetry violation accepted");
  }
  {
    HodgeDiamond d(1);  // type outside the [0,dim] square
    d.set(0, 0, 0, 1);
    d.set(2, 1, 1, 1);
    d.set(1, 2, -1, 1);
    d.set(1, -1, 2, 1);
    expect(s, rejected(d), "out-of-range Hodge type accepted");
  }
  for (const auto& e : builtin_catalog())
    expect(s, !rejected(e.diamond), e.name + " rejected by validation");
  return s;
}

std::vector<SuiteResult> run_all_suites() {
  return {suite_lefschetz(),    suite_routes(),       suite_inequality(),
          suite_roundtrip(20260826, 200), suite_qbinomial(12),
          suite_determinantal(), suite_validation()};
}

}  // namespace hodgecone
