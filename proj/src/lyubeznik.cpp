#include "hodgecone/lyubeznik.hpp"

#include <algorithm>

namespace hodgecone {

long long LyubeznikTable::lambda_at(int r, int s, int p, int q) const {
  auto it = lambda.find({r, s, p, q});
  return it == lambda.end() ? 0 : it->second;
}

long long LyubeznikTable::ilambda_at(int r, int p, int q) const {
  auto it = ilambda.find({r, p, q});
  return it == ilambda.end() ? 0 : it->second;
}

namespace {

// Dimension of the (x,y) piece of the primitive group in degree x+y.
long long hprim(const PrimitiveDecomposition& pd, int x, int y) {
  int k = x + y;
  if (k < 0 || k > pd.dim) return 0;
  return pd.prim[k].dim(x, y);
}

}  // namespace

LyubeznikTable hodge_lyubeznik_table(const PrimitiveDecomposition& pd,
                                     const ConeSetup& setup) {
  setup.check();
  int d = setup.d, delta = setup.delta;
  int n = setup.n();
  LyubeznikTable out;
  out.n = n;

  // Non-corner entries lambda_{0,s}, 2 <= s < n.
  for (int s = 2; s < n; ++s) {
    for (int p = -n - d; p <= d; ++p) {
      int q = 1 - s - p;
      long long v = 0;
      if (delta <= n - s) {
        for (int a = 0; a <= delta; ++a) v += hprim(pd, -q - a, -p - a);
      } else {
        for (int a = 0; a <= n - s; ++a)
          v += hprim(pd, n - s - delta - q - a, n - s - delta - p - a);
      }
      if (v != 0) out.lambda[{0, s, p, q}] = v;
    }
  }

  // Intersection variants ilambda_r, r >= 1, supported on p + q = r - n.
  for (int r = 1; r <= n; ++r) {
    for (int p = -n - d; p <= d; ++p) {
      int q = r - n - p;
      long long v = 0;
      if (r > delta) {
        for (int a = 0; a <= delta; ++a) v += hprim(pd, -q - a, -p - a);
      } else {
        for (int a = 0; a <= r - 1; ++a)
          v += hprim(pd, d - a + p, d - a + q);
      }
      if (v != 0) out.ilambda[{r, p, q}] = v;
    }
  }

  // The corner column agrees with the intersection variants from r = 2 on;
  // lambda_{0,n} and lambda_{1,n} vanish for an irreducible singularity.
  for (const auto& [key, v] : out.ilambda) {
    auto [r, p, q] = key;
    if (r >= 2) out.lambda[{r, n, p, q}] = v;
  }
  return out;
}

LyubeznikTable smooth_point_table(int n) {
  LyubeznikTable out;
  out.n = n;
  out.lambda[{n, n, 0, 0}] = 1;
  out.ilambda[{n, 0, 0}] = 1;
  return out;
}

std::map<std::pair<int, int>, long long> classical_lyubeznik(
    const LyubeznikTable& t) {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [key, v] : t.lambda) {
    auto [r, s, p, q] = key;
    out[{r, s}] += v;
  }
  return out;
}

ExtendedLevel c_from_table(const LyubeznikTable& t) {
  bool any = false;
  int max_p = 0;
  for (const auto& [key, v] : t.lambda) {
    auto [r, s, p, q] = key;
    if (s >= t.n) continue;
    if (!any || p > max_p) max_p = p;
    any = true;
  }
  if (!any) return ExtendedLevel::inf();
  return ExtendedLevel::finite(-max_p - 1);  // collapses to neg when max_p >= 0
}

ExtendedLevel hrh_from_table(const LyubeznikTable& t, const ExtendedLevel& c) {
  bool any = false;
  int max_p = 0;
  for (const auto& [key, v] : t.ilambda) {
    auto [r, p, q] = key;
    if (r != 1) continue;
    if (!any || p > max_p) max_p = p;
    any = true;
  }
  ExtendedLevel cap =
      any ? ExtendedLevel::finite(-max_p - 1) : ExtendedLevel::inf();
  return min(c, cap);
}

long long ilambda_mass(const LyubeznikTable& t, int r) {
  long long m = 0;
  for (const auto& [key, v] : t.ilambda)
    if (std::get<0>(key) == r) m += v;
  return m;
}

}  // namespace hodgecone
