#include "hodgecone/hodge.hpp"

#include <string>

namespace hodgecone {

namespace {

std::string pq_str(int p, int q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

void PureHodgeStructure::add(int p, int q, long long d) {
  if (p + q != weight_)
    throw ValidationError("piece " + pq_str(p, q) + " has weight " +
                          std::to_string(p + q) + ", expected " +
                          std::to_string(weight_));
  if (d < 0) throw ValidationError("negative dimension at " + pq_str(p, q));
  if (d == 0) return;
  dims_[{p, q}] += d;
}

long long PureHodgeStructure::dim(int p, int q) const {
  auto it = dims_.find({p, q});
  return it == dims_.end() ? 0 : it->second;
}

long long PureHodgeStructure::total() const {
  long long t = 0;
  for (const auto& [pq, d] : dims_) t += d;
  return t;
}

bool PureHodgeStructure::symmetric() const {
  for (const auto& [pq, d] : dims_)
    if (dim(pq.q, pq.p) != d) return false;
  return true;
}

PureHodgeStructure PureHodgeStructure::twist(int k) const {
  PureHodgeStructure out(weight_ - 2 * k);
  for (const auto& [pq, d] : dims_) out.add(pq.p - k, pq.q - k, d);
  return out;
}

int PureHodgeStructure::min_p() const {
  if (dims_.empty()) throw InputError("min_p of zero structure");
  int m = dims_.begin()->first.p;
  for (const auto& [pq, d] : dims_)
    if (pq.p < m) m = pq.p;
  return m;
}

bool PureHodgeStructure::filtration_vanishes(int p) const {
  for (const auto& [pq, d] : dims_)
    if (pq.p >= p) return false;
  return true;
}

PureHodgeStructure& PureHodgeStructure::operator+=(
    const PureHodgeStructure& other) {
  if (other.weight_ != weight_)
    throw ValidationError("cannot add structures of weights " +
                          std::to_string(weight_) + " and " +
                          std::to_string(other.weight_));
  for (const auto& [pq, d] : other.dims_) add(pq.p, pq.q, d);
  return *this;
}

HodgeDiamond::HodgeDiamond(int dim) : dim_(dim) {
  if (dim < 0) throw InputError("negative dimension");
  levels_.reserve(2 * dim + 1);
  for (int k = 0; k <= 2 * dim; ++k) levels_.emplace_back(k);
}

long long HodgeDiamond::hodge(int k, int p, int q) const {
  if (k < 0 || k > 2 * dim_) return 0;
  return levels_[k].dim(p, q);
}

void HodgeDiamond::set(int k, int p, int q, long long d) {
  if (k < 0 || k > 2 * dim_)
    throw ValidationError("degree " + std::to_string(k) + " out of range");
  levels_[k].add(p, q, d);
}

const PureHodgeStructure& HodgeDiamond::level(int k) const {
  if (k < 0 || k > 2 * dim_)
    throw InputError("degree " + std::to_string(k) + " out of range");
  return levels_[k];
}

long long HodgeDiamond::betti(int k) const {
  if (k < 0 || k > 2 * dim_) return 0;
  return levels_[k].total();
}

void validate_diamond(const HodgeDiamond& d) {
  int n = d.dim();
  if (d.betti(0) != 1 || d.hodge(0, 0, 0) != 1)
    throw ValidationError("H^0 must be one-dimensional of type (0,0)");
  for (int k = 0; k <= 2 * n; ++k) {
    const auto& lev = d.level(k);
    for (const auto& [pq, dim] : lev.table()) {
      if (pq.p < 0 || pq.q < 0 || pq.p > n || pq.q > n)
        throw ValidationError("type (" + std::to_string(pq.p) + "," +
                              std::to_string(pq.q) + ") in H^" +
                              std::to_string(k) + " out of range");
      if (lev.dim(pq.q, pq.p) != dim)
        throw ValidationError("Hodge symmetry fails in H^" +
                              std::to_string(k));
      if (d.hodge(2 * n - k, n - pq.p, n - pq.q) != dim)
        throw ValidationError("Poincare duality fails in H^" +
                              std::to_string(k));
    }
  }
  // Hard Lefschetz: injectivity of L below the middle degree.
  for (int k = 0; k < n; ++k)
    for (const auto& [pq, dim] : d.level(k).table())
      if (d.hodge(k + 2, pq.p + 1, pq.q + 1) < dim)
        throw ValidationError("hard Lefschetz monotonicity fails from H^" +
                              std::to_string(k));
}

PureHodgeStructure PrimitiveDecomposition::piece(int k) const {
  if (k >= 0 && k <= dim) return prim[k];
  return PureHodgeStructure(k);
}

PrimitiveDecomposition primitive_decomposition(const HodgeDiamond& d) {
  PrimitiveDecomposition out;
  out.dim = d.dim();
  for (int k = 0; k <= d.dim(); ++k) {
    PureHodgeStructure pk(k);
    for (const auto& [pq, dim] : d.level(k).table()) {
      long long below = d.hodge(k - 2, pq.p - 1, pq.q - 1);
      if (dim - below < 0)
        throw ValidationError("hard Lefschetz monotonicity fails into H^" +
                              std::to_string(k));
      pk.add(pq.p, pq.q, dim - below);
    }
    out.prim.push_back(std::move(pk));
  }
  return out;
}

HodgeDiamond reconstruct_from_primitive(const PrimitiveDecomposition& pd) {
  int d = pd.dim;
  HodgeDiamond out(d);
  // H^{d-j} = sum_a prim^{d-j-2a}(-a); H^{d+j} = sum_a prim^{d-j-2a}(-j-a).
  for (int j = 0; j <= d; ++j) {
    for (int a = 0; d - j - 2 * a >= 0; ++a) {
      const auto& pr = pd.prim[d - j - 2 * a];
      for (const auto& [pq, dim] : pr.table()) {
        out.set(d - j, pq.p + a, pq.q + a, dim);
        if (j > 0) out.set(d + j, pq.p + j + a, pq.q + j + a, dim);
      }
    }
  }
  return out;
}

HodgeDiamond kunneth_product(const HodgeDiamond& a, const HodgeDiamond& b) {
  HodgeDiamond out(a.dim() + b.dim());
  for (int ka = 0; ka <= 2 * a.dim(); ++ka)
    for (const auto& [pa, da] : a.level(ka).table())
      for (int kb = 0; kb <= 2 * b.dim(); ++kb)
        for (const auto& [pb, db] : b.level(kb).table())
          out.set(ka + kb, pa.p + pb.p, pa.q + pb.q, da * db);
  return out;
}

namespace {

// Lefschetz summand (m,a): the image L^a prim^m sitting inside H^{m+2a},
// carrying a Tate twist by -a.  Valid iff 0 <= m <= d and 0 <= a <= d-m.
bool summand_valid(int d, int m, int a) {
  return m >= 0 && m <= d && a >= 0 && a <= d - m;
}

void accumulate(PureHodgeStructure& out, const PrimitiveDecomposition& pd,
                int m, int twist) {
  if (m < 0 || m > pd.dim) return;
  for (const auto& [pq, dim] : pd.prim[m].table())
    out.add(pq.p - twist, pq.q - twist, dim);
}

}  // namespace

PureHodgeStructure lefschetz_kernel(const PrimitiveDecomposition& pd, int c,
                                    int j) {
  int d = pd.dim;
  PureHodgeStructure out(d + c - j);
  if (c <= j) {
    for (int r = 0; r < c; ++r) accumulate(out, pd, d + c - j - 2 * r, -r);
  } else {
    for (int r = 0; r < j; ++r)
      accumulate(out, pd, d + j - c - 2 * r, j - c - r);
  }
  return out;
}

PureHodgeStructure lefschetz_kernel_enumerated(const PrimitiveDecomposition& pd,
                                               int c, int j) {
  int d = pd.dim;
  // Summands (m,a) of H^{d+c-j}; L^j kills (m,a) iff a+j > d-m.
  PureHodgeStructure out(d + c - j);
  for (int m = 0; m <= d; ++m) {
    int a2 = d + c - j - m;
    if (a2 < 0 || a2 % 2 != 0) continue;
    int a = a2 / 2;
    if (!summand_valid(d, m, a)) continue;
    if (a + j > d - m) accumulate(out, pd, m, -a);
  }
  return out;
}

PureHodgeStructure lefschetz_cokernel(const PrimitiveDecomposition& pd, int c,
                                      int j) {
  int d = pd.dim;
  PureHodgeStructure out(d + j - c);
  if (c > j) {
    for (int r = 0; r < j; ++r) accumulate(out, pd, d + j - c - 2 * r, -r);
  } else {
    for (int r = 0; r < c; ++r)
      accumulate(out, pd, d + c - j - 2 * r, c - j - r);
  }
  return out;
}

PureHodgeStructure lefschetz_cokernel_enumerated(
    const PrimitiveDecomposition& pd, int c, int j) {
  int d = pd.dim;
  // Summands (m,b) of H^{d+j-c} not hit by L^j, i.e. with b < j.
  PureHodgeStructure out(d + j - c);
  for (int m = 0; m <= d; ++m) {
    int b2 = d + j - c - m;
    if (b2 < 0 || b2 % 2 != 0) continue;
    int b = b2 / 2;
    if (!summand_valid(d, m, b)) continue;
    if (b < j) accumulate(out, pd, m, -b);
  }
  return out;
}

}  // namespace hodgecone
