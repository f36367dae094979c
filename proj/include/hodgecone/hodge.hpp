#pragma once

#include <compare>
#include <map>
#include <vector>

#include "hodgecone/errors.hpp"

namespace hodgecone {

struct PQ {
  int p;
  int q;
  auto operator<=>(const PQ&) const = default;
};

// A pure Hodge structure of fixed weight, stored as a sparse table
// (p,q) -> dimension with p+q equal to the weight.  Negative p,q are
// allowed (Tate twists move the table diagonally).
class PureHodgeStructure {
public:
  explicit PureHodgeStructure(int weight) : weight_(weight) {}

  int weight() const { return weight_; }

  void add(int p, int q, long long d);
  long long dim(int p, int q) const;
  long long total() const;
  bool empty() const { return dims_.empty(); }
  const std::map<PQ, long long>& table() const { return dims_; }

  // Whether dim(p,q) == dim(q,p) throughout.
  bool symmetric() const;

  // Tate twist by k: (p,q) -> (p-k, q-k), weight -> weight - 2k.
  PureHodgeStructure twist(int k) const;

  // Smallest p with a nonzero (p,q) piece; only valid on nonempty tables.
  int min_p() const;

  // True when every piece (p',q') has p' < p, i.e. the p-th Hodge
  // filtration step vanishes.
  bool filtration_vanishes(int p) const;

  PureHodgeStructure& operator+=(const PureHodgeStructure& other);

  friend bool operator==(const PureHodgeStructure& a,
                         const PureHodgeStructure& b) {
    return a.weight_ == b.weight_ && a.dims_ == b.dims_;
  }

private:
  int weight_;
  std::map<PQ, long long> dims_;
};

// Hodge numbers of a compact space of dimension d: one pure structure of
// weight k for each cohomological degree k in [0, 2d].
class HodgeDiamond {
public:
  explicit HodgeDiamond(int dim);

  int dim() const { return dim_; }
  long long hodge(int k, int p, int q) const;
  void set(int k, int p, int q, long long d);
  const PureHodgeStructure& level(int k) const;
  long long betti(int k) const;

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

private:
  int dim_;
  std::vector<PureHodgeStructure> levels_;
};

// Checks connectedness, Poincare duality, Hodge symmetry and the hard
// Lefschetz monotonicity dims_k(p,q) <= dims_{k+2}(p+1,q+1) for k < dim.
// Throws ValidationError on the first failure.
void validate_diamond(const HodgeDiamond& d);

// Primitive pieces: prim[k] is a pure structure of weight k for k in
// [0, dim], with prim_k(p,q) = dims_k(p,q) - dims_{k-2}(p-1,q-1).
struct PrimitiveDecomposition {
  int dim = 0;
  std::vector<PureHodgeStructure> prim;

  const PureHodgeStructure& at(int k) const { return prim.at(k); }
  // Zero structure for degrees outside [0, dim].
  PureHodgeStructure piece(int k) const;
};

PrimitiveDecomposition primitive_decomposition(const HodgeDiamond& d);
HodgeDiamond reconstruct_from_primitive(const PrimitiveDecomposition& pd);

HodgeDiamond kunneth_product(const HodgeDiamond& a, const HodgeDiamond& b);

// Kernel of L^c on H^{d+c-j} and cokernel of L^j into H^{d+j-c}, where L
// is the Lefschetz operator of the d-dimensional space underlying pd.
// Each result is pure (weight d+c-j resp. d+j-c).  Two routes: the
// closed-form expressions and an independent enumeration of Lefschetz
// summands; tests and the verify suites require them to agree.
PureHodgeStructure lefschetz_kernel(const PrimitiveDecomposition& pd, int c,
                                    int j);
PureHodgeStructure lefschetz_kernel_enumerated(const PrimitiveDecomposition& pd,
                                               int c, int j);
PureHodgeStructure lefschetz_cokernel(const PrimitiveDecomposition& pd, int c,
                                      int j);
PureHodgeStructure lefschetz_cokernel_enumerated(
    const PrimitiveDecomposition& pd, int c, int j);

}  // namespace hodgecone
