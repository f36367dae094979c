#include "hodgecone/cone.hpp"

#include <algorithm>
#include <string>

namespace hodgecone {

void ConeSetup::check() const {
  if (d < 1) throw InputError("divisor dimension must be >= 1");
  if (delta < 0) throw InputError("contraction defect must be >= 0");
  if (embed_codim < 1) throw InputError("embedding codimension must be >= 1");
  if (hrh_base.is_neg()) throw InputError("hrh_base must be >= 0 or inf");
}

long long LocalCohomologyProfile::dim_at(int j) const {
  auto it = summands.find(j);
  if (it == summands.end()) return 0;
  long long t = 0;
  for (const auto& s : it->second) t += s.hs.total();
  return t;
}

bool LocalCohomologyProfile::empty_above_zero() const {
  for (const auto& [j, list] : summands)
    if (!list.empty()) return false;
  return true;
}

namespace {

void push_summand(std::vector<ProfileSummand>& out,
                  const PrimitiveDecomposition& pd, int degree, int twist) {
  if (degree < 0 || degree > pd.dim) return;
  const auto& pr = pd.prim[degree];
  if (pr.empty()) return;
  out.push_back({degree, twist, pr.twist(twist)});
}

}  // namespace

LocalCohomologyProfile local_cohomology_profile(const PrimitiveDecomposition& pd,
                                                const ConeSetup& setup) {
  setup.check();
  if (pd.dim != setup.d)
    throw InputError("primitive data has dimension " + std::to_string(pd.dim) +
                     ", setup expects " + std::to_string(setup.d));
  int d = setup.d, delta = setup.delta, q = setup.embed_codim;
  int n = setup.n();

  LocalCohomologyProfile out;
  out.setup = setup;
  for (int j = 1; j <= n - 2; ++j) {
    std::vector<ProfileSummand> list;
    if (delta <= j) {
      for (int r = 0; r <= delta; ++r)
        push_summand(list, pd, d - (j - delta + 2 * r), -q - j - r - 1);
    } else {
      for (int r = 0; r <= j; ++r)
        push_summand(list, pd, d - (delta - j + 2 * r), -q - delta - r - 1);
    }
    if (!list.empty()) out.summands[j] = std::move(list);
  }
  push_summand(out.topweight_h0, pd, d - delta, -q - delta - 1);
  return out;
}

LcdefResult lcdef_from_profile(const LocalCohomologyProfile& profile) {
  LcdefResult out;
  for (const auto& [j, list] : profile.summands)
    if (!list.empty()) out.lcdef = std::max(out.lcdef, j);
  out.lcdef_gen_pos = out.lcdef;
  out.ncci_codim = out.lcdef > 0 ? ExtendedLevel::finite(profile.setup.n())
                                 : ExtendedLevel::inf();
  return out;
}

namespace {

// F^p of a primitive piece vanishes iff every type (p',q') has p' < p.
bool fvan(const PrimitiveDecomposition& pd, int degree, int p) {
  if (degree < 0 || degree > pd.dim) return true;
  return pd.prim[degree].filtration_vanishes(p);
}

bool is_cci(const PrimitiveDecomposition& pd, const ConeSetup& setup) {
  return local_cohomology_profile(pd, setup).empty_above_zero();
}

CResult clamp_to_base(int best, bool hit_base, const ConeSetup& setup) {
  CResult out;
  out.value = ExtendedLevel::finite(best);
  out.saturated = hit_base;
  return out;
}

}  // namespace

CResult c_invariant_closed_form(const PrimitiveDecomposition& pd,
                                const ConeSetup& setup) {
  setup.check();
  int d = setup.d, delta = setup.delta;

  if (is_cci(pd, setup)) {
    CResult out;
    out.value = ExtendedLevel::inf();
    out.cci = true;
    return out;
  }

  if ((delta > 0 && d > 1) || (delta > 1 && d == 1)) {
    CResult out;
    bool ok = true;
    for (int b = 0; b <= d - 1; ++b)
      if (!fvan(pd, d - b, d - b)) ok = false;
    out.value = ok ? ExtendedLevel::finite(0) : ExtendedLevel::neg();
    return out;
  }
  if (delta == 1 && d == 1) {
    // Non-CCI here means the middle primitive group survives, which rules
    // out every nonnegative level.
    CResult out;
    return out;
  }

  // delta == 0: climb l while F^{d-b-l} of each intermediate primitive
  // group vanishes.
  auto holds = [&](int l) {
    for (int b = 1; b <= d - 1; ++b)
      if (!fvan(pd, d - b, d - b - l)) return false;
    return true;
  };
  if (!holds(0)) return CResult{};
  int l = 0;
  while (true) {
    if (setup.hrh_base.is_finite() && l == setup.hrh_base.value())
      return clamp_to_base(l, true, setup);
    if (!holds(l + 1)) return clamp_to_base(l, false, setup);
    ++l;
  }
}

CResult c_invariant_vanishing_route(const PrimitiveDecomposition& pd,
                                    const ConeSetup& setup) {
  setup.check();
  int d = setup.d, delta = setup.delta;
  int n = setup.n();

  if (is_cci(pd, setup)) {
    CResult out;
    out.value = ExtendedLevel::inf();
    out.cci = true;
    return out;
  }

  // Direct evaluation of the two filtration-vanishing families that
  // characterize level >= l.
  auto holds = [&](int l) {
    for (int j = std::max(delta, 1); j <= n - 2; ++j)
      for (int r = 0; r <= delta; ++r)
        if (!fvan(pd, d - (j - delta + 2 * r), n - l - r - j - 1))
          return false;
    for (int j = 1; j < delta; ++j)
      for (int r = 0; r <= j; ++r)
        if (!fvan(pd, d - (delta - j + 2 * r), n - l - r - delta - 1))
          return false;
    return true;
  };

  if (!holds(0)) return CResult{};
  int sentinel = n + 2 * d + 2;
  int l = 0;
  while (true) {
    if (setup.hrh_base.is_finite() && l == setup.hrh_base.value())
      return clamp_to_base(l, true, setup);
    if (!holds(l + 1)) return clamp_to_base(l, false, setup);
    ++l;
    if (l > sentinel) {
      // All constrained groups vanish outright, so every level works.
      CResult out;
      out.value = ExtendedLevel::inf();
      return out;
    }
  }
}

ExtendedLevel hrh_invariant(const PrimitiveDecomposition& pd,
                            const ConeSetup& setup, const ExtendedLevel& c) {
  setup.check();
  if (c.is_neg()) return ExtendedLevel::neg();
  if (setup.delta > 0) return min(ExtendedLevel::finite(0), setup.hrh_base);

  int d = setup.d;
  ExtendedLevel middle = ExtendedLevel::inf();
  if (d >= 0 && !pd.piece(d).empty()) {
    const auto& pr = pd.prim[d];
    if (!pr.filtration_vanishes(d)) return ExtendedLevel::neg();
    int max_p = 0;
    for (const auto& [pq, dim] : pr.table()) max_p = std::max(max_p, pq.p);
    middle = ExtendedLevel::finite(d - max_p - 1);
  }
  return min(min(c, middle), setup.hrh_base);
}

std::map<int, GenLevelEntry> generation_levels(const PrimitiveDecomposition& pd,
                                               const ConeSetup& setup) {
  setup.check();
  int d = setup.d, delta = setup.delta;
  int n = setup.n();
  std::map<int, GenLevelEntry> out;

  auto mu = [&](int degree) -> int {
    return pd.prim[degree].min_p();
  };
  auto alive = [&](int degree) {
    return degree >= 0 && degree <= d && !pd.prim[degree].empty();
  };

  {
    GenLevelEntry e;
    if (alive(d - delta))
      e.value = d - mu(d - delta);
    else
      e.zero_module = true;
    out[0] = e;
  }
  for (int j = 1; j <= n - 2; ++j) {
    GenLevelEntry e;
    bool any = false;
    int best = 0;
    if (delta <= j) {
      for (int r = 0; r <= delta; ++r) {
        int degree = d - (j - delta + 2 * r);
        if (!alive(degree)) continue;
        int cand = mu(degree) + r;
        if (!any || cand < best) best = cand;
        any = true;
      }
      if (any) e.value = d - (j - delta) - best;
    } else {
      for (int r = 0; r <= j; ++r) {
        int degree = d - (delta - j + 2 * r);
        if (!alive(degree)) continue;
        int cand = mu(degree) + r;
        if (!any || cand < best) best = cand;
        any = true;
      }
      if (any) e.value = d - best;
    }
    e.zero_module = !any;
    out[j] = e;
  }
  return out;
}

IHTable intersection_cohomology_of_cone(const PrimitiveDecomposition& pd,
                                        int e) {
  if (e < 1) throw InputError("polarization rank must be >= 1");
  int dY = pd.dim;
  int n = dY + e;
  IHTable out;
  out.cone_dim = n;
  for (int j = 0; j < 2 * n; ++j) {
    PureHodgeStructure hj(j);
    if (j <= dY) {
      for (int a = 0; a < e && j - 2 * a >= 0; ++a)
        for (const auto& [pq, dim] : pd.prim[j - 2 * a].table())
          hj.add(pq.p + a, pq.q + a, dim);
    } else if (j < n) {
      // Cokernel of L^e in degree j: the Lefschetz summands L^a prim^m
      // with a < e; the constraint a >= j - dY caps the range below n - j.
      for (int a = 0; a < dY + e - j; ++a) {
        int degree = 2 * dY - j - 2 * a;
        if (degree < 0 || degree > dY) continue;
        int t = dY - a - j;  // Tate twist carried by this summand
        for (const auto& [pq, dim] : pd.prim[degree].table())
          hj.add(pq.p - t, pq.q - t, dim);
      }
    }
    if (!hj.empty()) out.ih.insert_or_assign(j, hj);
  }
  // Compact supports by duality against degree 2n - j.
  for (int j = 1; j <= 2 * n; ++j) {
    auto it = out.ih.find(2 * n - j);
    if (it == out.ih.end()) continue;
    PureHodgeStructure hc(2 * n - it->second.weight());
    for (const auto& [pq, dim] : it->second.table())
      hc.add(n - pq.p, n - pq.q, dim);
    out.ih_c.insert_or_assign(j, hc);
  }
  return out;
}

PushforwardReport pushforward_decomposition(const HodgeDiamond& base,
                                            const ConeSetup& setup) {
  setup.check();
  if (base.dim() != setup.d)
    throw InputError("diamond dimension does not match setup");
  int d = setup.d, delta = setup.delta;
  int n = setup.n();
  PushforwardReport out;
  for (int l = -(d - delta - 1); l <= d - delta - 1; ++l) {
    int degree = n + std::abs(l);
    long long dim = base.betti(degree);
    if (dim == 0) continue;
    int twist = l > 0 ? l : 0;
    out.skyscrapers.push_back({l, degree, twist, dim});
  }

  auto ihtab = intersection_cohomology_of_cone(primitive_decomposition(base),
                                               delta + 1);
  out.betti_identity_ok = true;
  for (int j = 0; j <= 2 * d; ++j) {
    long long ih = 0;
    if (auto it = ihtab.ih.find(j); it != ihtab.ih.end())
      ih = it->second.total();
    long long point = j >= n ? base.betti(j) : base.betti(2 * n - j);
    if (base.betti(j) != ih + point) out.betti_identity_ok = false;
  }
  return out;
}

InequalityVerdict cci_inequality(const LcdefResult& lcdef, const CResult& c) {
  if (c.value.is_neg()) return InequalityVerdict::NotApplicable;
  if (lcdef.ncci_codim.is_inf()) return InequalityVerdict::NotApplicable;
  if (c.value.is_inf()) return InequalityVerdict::Violated;
  long long lhs = lcdef.lcdef_gen_pos + 2LL * c.value.value() + 3;
  return lhs <= lcdef.ncci_codim.value() ? InequalityVerdict::Holds
                                         : InequalityVerdict::Violated;
}

}  // namespace hodgecone
