#pragma once

#include <map>
#include <tuple>

#include "hodgecone/cone.hpp"

namespace hodgecone {

// Hodge-refined Lyubeznik numbers of the n-dimensional singularity.
// lambda is indexed by (r, s, p, q); the classical number lambda_{r,s}
// is the sum over (p,q).  ilambda holds the intersection-cohomology
// variants, indexed by (r, p, q) with p + q = r - n.  Only nonzero
// entries are stored.
struct LyubeznikTable {
  int n = 0;
  std::map<std::tuple<int, int, int, int>, long long> lambda;
  std::map<std::tuple<int, int, int>, long long> ilambda;

  long long lambda_at(int r, int s, int p, int q) const;
  long long ilambda_at(int r, int p, int q) const;
};

LyubeznikTable hodge_lyubeznik_table(const PrimitiveDecomposition& pd,
                                     const ConeSetup& setup);

// The table of a smooth (or empty-singularity) point of dimension n:
// lambda_{n,n}^{0,0} = 1 and nothing else.
LyubeznikTable smooth_point_table(int n);

// Classical Lyubeznik numbers lambda_{r,s}, forgetting the Hodge grading.
std::map<std::pair<int, int>, long long> classical_lyubeznik(
    const LyubeznikTable& t);

// Reads the level invariant c off the table: the highest-unit-root slot of
// the entries with s < n determines it; absence of such entries gives inf.
ExtendedLevel c_from_table(const LyubeznikTable& t);

// Reads HRH off the table given c: the discrepancy between lambda_{1,n}
// (always zero) and ilambda_1 caps the level.
ExtendedLevel hrh_from_table(const LyubeznikTable& t, const ExtendedLevel& c);

// Total mass of ilambda_r, which must equal betti(n-r) - betti(n+r) of the
// resolution divisor's ambient contraction target for r >= 1.
long long ilambda_mass(const LyubeznikTable& t, int r);

}  // namespace hodgecone
