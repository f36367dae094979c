#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodgecone/extended_level.hpp"
#include "hodgecone/qpoly.hpp"

namespace hodgecone {

enum class MatrixFamily { Generic, OddSkew, EvenSkew, Symmetric };

MatrixFamily parse_family(const std::string& s);
std::string family_name(MatrixFamily f);

// Laurent-polynomial combination of classes [D_s] of the simple modules
// supported on rank strata; the exponent of q records the local
// cohomology degree.
class GrothendieckClassPoly {
public:
  void add(int s, const QPolynomial& p);
  const std::map<int, QPolynomial>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  int min_exp() const;
  int max_exp() const;
  bool nonnegative() const;
  std::string str() const;  // e.g. "[D_0]*(q^4 + q^6) + [D_1]*q^4"
  friend bool operator==(const GrothendieckClassPoly&,
                         const GrothendieckClassPoly&) = default;

private:
  std::map<int, QPolynomial> terms_;
};

// A rank stratum Z_p of one of the four classical matrix spaces.
// Generic: m x n with m >= n, rank <= p, 0 <= p < n.
// Skew (n odd or even): n x n skew, rank <= 2p, 0 <= p < floor(n/2).
// Symmetric: n x n symmetric, rank <= p, 0 <= p < n.
struct DeterminantalCase {
  MatrixFamily family = MatrixFamily::Generic;
  int m = 0;  // rows; only meaningful for Generic
  int n = 0;
  int p = 0;

  void check() const;
  // Additional range restrictions needed by the stratification
  // corollaries: p >= 1, and p >= 2 in the symmetric case.
  void check_for_corollaries() const;
  int half() const { return n / 2; }  // the m of the skew cases
};

// The generating polynomial sum_j [H^j_{Z_p}(O_X)] q^j.
GrothendieckClassPoly local_cohomology_poly(const DeterminantalCase& c);

struct CodimLcdef {
  int codim = 0;  // minimum exponent, asserted against the closed form
  int lcdef = 0;  // maximum exponent minus codim
};
CodimLcdef codim_and_lcdef(const DeterminantalCase& c);

// Closed-form codimension of Z_p in the matrix space.
int stratum_codim(const DeterminantalCase& c);

// Generic local cohomological defect localized at the non-CCI stratum.
int lcdef_gen_pos(const DeterminantalCase& c);

struct NcciLocus {
  bool empty = true;
  int stratum = 0;  // index s with locus Z_s, meaningful when !empty
};
NcciLocus ncci_locus(const DeterminantalCase& c);

// Possible values of the level invariant along Z_p; a singleton when the
// theory pins it down, the unresolved pair {0,1} otherwise.
std::vector<ExtendedLevel> c_value_range(const DeterminantalCase& c);

}  // namespace hodgecone
