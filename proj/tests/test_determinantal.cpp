#include "doctest.h"

#include "hodgecone/determinantal.hpp"
#include "hodgecone/report.hpp"

using namespace hodgecone;

TEST_CASE("gaussian binomials: small values") {
  CHECK(q_binomial(3, 1).str() == "1 + q + q^2");
  CHECK(q_binomial(5, 0) == QPolynomial::one());
  CHECK(q_binomial(4, 2).str() == "1 + q + 2*q^2 + q^3 + q^4");
  CHECK_THROWS_AS(q_binomial(2, 3), InputError);
  CHECK_THROWS_AS(q_binomial(-1, 0), InputError);
}

TEST_CASE("gaussian binomials: the two routes agree") {
  auto s = suite_qbinomial(12);
  for (const auto& f : s.failures) MESSAGE(f);
  CHECK(s.failures.empty());
}

TEST_CASE("substitution") {
  auto p = QPolynomial::one() + QPolynomial::monomial(1);
  CHECK(p.substitute_power(2).str() == "1 + q^2");
  auto lau = p.substitute_power(-4);
  CHECK(lau.coeff(-4) == 1);
  CHECK(lau.min_exp() == -4);
  CHECK(q_binomial(3, 1).substitute_power(2).str() == "1 + q^2 + q^4");
}

TEST_CASE("generic 3x3 rank one") {
  DeterminantalCase c{MatrixFamily::Generic, 3, 3, 1};
  auto poly = local_cohomology_poly(c);
  REQUIRE(poly.terms().count(0) == 1);
  REQUIRE(poly.terms().count(1) == 1);
  CHECK(poly.terms().at(0).str() == "q^4 + q^6");
  CHECK(poly.terms().at(1).str() == "q^4");
  CHECK(poly.terms().size() == 2);
  auto cl = codim_and_lcdef(c);
  CHECK(cl.codim == 4);
  CHECK(cl.lcdef == 2);
  CHECK(lcdef_gen_pos(c) == 2);
  auto locus = ncci_locus(c);
  CHECK_FALSE(locus.empty);
  CHECK(locus.stratum == 0);
}

TEST_CASE("generic 2x2 rank one: the determinant hypersurface") {
  DeterminantalCase c{MatrixFamily::Generic, 2, 2, 1};
  auto poly = local_cohomology_poly(c);
  CHECK(poly.str() == "[D_0]*q + [D_1]*q");
  auto cl = codim_and_lcdef(c);
  CHECK(cl.codim == 1);
  CHECK(cl.lcdef == 0);
  CHECK(lcdef_gen_pos(c) == 0);
  CHECK(ncci_locus(c).empty);
  auto range = c_value_range(c);
  REQUIRE(range.size() == 1);
  CHECK(range[0].is_inf());
}

TEST_CASE("closed-form generic defects") {
  CHECK(lcdef_gen_pos({MatrixFamily::Generic, 4, 3, 1}) == 3);
  CHECK(lcdef_gen_pos({MatrixFamily::OddSkew, 0, 7, 1}) == 6);
  CHECK(lcdef_gen_pos({MatrixFamily::Symmetric, 0, 4, 2}) == 2);
}

TEST_CASE("even skew hypersurface branch") {
  DeterminantalCase c{MatrixFamily::EvenSkew, 0, 8, 3};  // p = m-1
  auto cl = codim_and_lcdef(c);
  CHECK(cl.lcdef == 0);
  CHECK(lcdef_gen_pos(c) == 0);
  CHECK(ncci_locus(c).empty);
  CHECK(c_value_range(c)[0].is_inf());
}

TEST_CASE("odd skew pfaffian strata") {
  DeterminantalCase c{MatrixFamily::OddSkew, 0, 5, 1};
  auto poly = local_cohomology_poly(c);
  CHECK(poly.terms().at(1).str() == "q^3");
  CHECK(poly.terms().at(0).str() == "q^5");
  auto cl = codim_and_lcdef(c);
  CHECK(cl.codim == 3);
  CHECK(cl.lcdef == 2);
  auto range = c_value_range(c);
  REQUIRE(range.size() == 2);
  CHECK(range[0] == ExtendedLevel::finite(0));
  CHECK(range[1] == ExtendedLevel::finite(1));
  CHECK_FALSE(ncci_locus(c).empty);
}

TEST_CASE("symmetric strata and the Laurent prefactor") {
  DeterminantalCase small{MatrixFamily::Symmetric, 0, 3, 2};
  auto p1 = local_cohomology_poly(small);
  CHECK(p1.str() == "[D_0]*q + [D_2]*q");
  CHECK(codim_and_lcdef(small).lcdef == 0);
  CHECK(ncci_locus(small).empty);

  DeterminantalCase c{MatrixFamily::Symmetric, 0, 5, 2};
  auto p2 = local_cohomology_poly(c);
  CHECK(p2.terms().at(2).str() == "q^6");
  CHECK(p2.terms().at(0).str() == "q^6 + q^10");
  auto cl = codim_and_lcdef(c);
  CHECK(cl.codim == 6);
  CHECK(cl.lcdef == 4);
  CHECK(lcdef_gen_pos(c) == 4);

  DeterminantalCase s53{MatrixFamily::Symmetric, 0, 5, 3};
  auto locus = ncci_locus(s53);
  CHECK_FALSE(locus.empty);
  CHECK(locus.stratum == 1);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(DeterminantalCase({MatrixFamily::Generic, 2, 3, 1}).check(),
                  InputError);
  CHECK_THROWS_AS(DeterminantalCase({MatrixFamily::Generic, 3, 3, 3}).check(),
                  InputError);
  CHECK_THROWS_AS(DeterminantalCase({MatrixFamily::OddSkew, 0, 4, 1}).check(),
                  InputError);
  CHECK_THROWS_AS(ncci_locus({MatrixFamily::Symmetric, 0, 5, 1}), InputError);
  CHECK_THROWS_AS(lcdef_gen_pos({MatrixFamily::Generic, 3, 3, 0}), InputError);
}

TEST_CASE("grid sweep invariants") {
  auto s = suite_determinantal();
  for (const auto& f : s.failures) MESSAGE(f);
  CHECK(s.failures.empty());
  CHECK(s.checks > 100);
}
