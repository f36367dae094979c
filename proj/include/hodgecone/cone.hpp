#pragma once

#include <map>
#include <vector>

#include "hodgecone/extended_level.hpp"
#include "hodgecone/hodge.hpp"

namespace hodgecone {

// Parameters of an isolated singularity presented through a resolution
// with smooth projective exceptional divisor of dimension d.
//   d           exceptional divisor dimension; the singular space has
//               dimension n = d + delta + 1
//   delta       contraction defect (0 for a cone over the divisor itself)
//   embed_codim codimension q of the ambient embedding used for local
//               cohomology; q >= 1
//   hrh_base    how far the ambient smooth data is licensed: inf for a
//               rational homology manifold base, a finite bound otherwise
struct ConeSetup {
  int d = 1;
  int delta = 0;
  int embed_codim = 1;
  ExtendedLevel hrh_base = ExtendedLevel::inf();

  int n() const { return d + delta + 1; }
  void check() const;
};

// One Lefschetz summand of a graded piece of local cohomology:
// prim^{prim_degree} of the divisor, Tate twisted by `twist` (the ambient
// codimension twist by -embed_codim is already folded in).
struct ProfileSummand {
  int prim_degree;
  int twist;
  PureHodgeStructure hs;
};

// Top-weight graded pieces of the local cohomology modules H^j_I at the
// singular point, j in [1, n-2], together with the top-weight piece of
// the degree-0 module of the dualizing-type complex.
struct LocalCohomologyProfile {
  ConeSetup setup;
  std::map<int, std::vector<ProfileSummand>> summands;
  std::vector<ProfileSummand> topweight_h0;

  long long dim_at(int j) const;
  bool empty_above_zero() const;
};

LocalCohomologyProfile local_cohomology_profile(const PrimitiveDecomposition& pd,
                                                const ConeSetup& setup);

struct LcdefResult {
  int lcdef = 0;          // largest j >= 1 with nonvanishing profile, else 0
  int lcdef_gen_pos = 0;  // same count after generic projection, equal here
  ExtendedLevel ncci_codim = ExtendedLevel::inf();  // codim of non-CCI locus
};

LcdefResult lcdef_from_profile(const LocalCohomologyProfile& profile);

// The level invariant c: largest l such that the singularity is a
// cohomologically complete intersection to order l, in {neg,0,1,...,inf}.
struct CResult {
  ExtendedLevel value = ExtendedLevel::neg();
  // True when the computation hit a finite hrh_base with all conditions
  // still holding, so the reported value is only a lower bound.
  bool saturated = false;
  // True when the profile vanishes entirely (the CCI case), which forces
  // value == inf regardless of branch.
  bool cci = false;
};

CResult c_invariant_closed_form(const PrimitiveDecomposition& pd,
                                const ConeSetup& setup);
CResult c_invariant_vanishing_route(const PrimitiveDecomposition& pd,
                                    const ConeSetup& setup);

ExtendedLevel hrh_invariant(const PrimitiveDecomposition& pd,
                            const ConeSetup& setup, const ExtendedLevel& c);

// Generation level of the j-th local cohomology module as a D-module
// (j >= 1), and of the top-weight degree-0 piece (j == 0).
struct GenLevelEntry {
  bool zero_module = false;
  int value = 0;
};

std::map<int, GenLevelEntry> generation_levels(const PrimitiveDecomposition& pd,
                                               const ConeSetup& setup);

// Intersection cohomology of the affine cone over a projective base of
// dimension dim_base, contracted through a polarization of rank e
// (e = delta + 1).  ih[j] has weight j; ih_c is the compactly supported
// dual, normalized so ih_c[j] has weight j + 2*(dim of the dual twist).
struct IHTable {
  int cone_dim = 0;
  std::map<int, PureHodgeStructure> ih;
  std::map<int, PureHodgeStructure> ih_c;
};

IHTable intersection_cohomology_of_cone(const PrimitiveDecomposition& pd,
                                        int e);

// Decomposition-theorem bookkeeping for the contraction: skyscraper
// summands supported at the cone point, plus a numeric check of the
// resulting identity between Betti numbers of the base, the cone and the
// intersection cohomology.
struct PushforwardSummand {
  int shift;      // placement [shift] in the derived category
  int degree;     // which H^* of the base contributes
  int twist;      // Tate twist carried by the summand
  long long dim;
};

struct PushforwardReport {
  std::vector<PushforwardSummand> skyscrapers;
  bool betti_identity_ok = false;
};

PushforwardReport pushforward_decomposition(const HodgeDiamond& base,
                                            const ConeSetup& setup);

enum class InequalityVerdict { Holds, Violated, NotApplicable };

// The bound lcdef_gen_pos + 2c + 3 <= ncci_codim, checked whenever both
// sides are finite and c >= 0.
InequalityVerdict cci_inequality(const LcdefResult& lcdef, const CResult& c);

}  // namespace hodgecone
