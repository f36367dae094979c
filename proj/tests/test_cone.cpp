#include "doctest.h"

#include "hodgecone/report.hpp"

using namespace hodgecone;

namespace {

Report make_report(const std::string& name, int delta, int codim = 1) {
  ConeSetup setup;
  const auto& e = catalog_entry(name);
  setup.d = e.diamond.dim();
  setup.delta = delta;
  setup.embed_codim = codim;
  return cone_report(e, setup);
}

}  // namespace

TEST_CASE("quadric cone invariants, both presentations") {
  // The threefold xy = zw: once as the cone over a quadric surface with a
  // rank 1 polarization, once as the cone over a line with a rank 2 one.
  auto a = make_report("p1xp1", 0);
  auto b = make_report("p1", 1);

  for (const auto* r : {&a, &b}) {
    CHECK(r->lcdef.lcdef == 0);
    CHECK(r->c.value.is_inf());
    CHECK(r->c.cci);
    CHECK(r->hrh == ExtendedLevel::finite(0));
    CHECK(r->all_agree());
  }

  for (const auto* r : {&a, &b}) {
    REQUIRE(r->ih.ih.count(0) == 1);
    CHECK(r->ih.ih.at(0).total() == 1);
    CHECK(r->ih.ih.count(1) == 0);
    REQUIRE(r->ih.ih.count(2) == 1);
    CHECK(r->ih.ih.at(2).dim(1, 1) == 1);
    CHECK(r->ih.ih.at(2).total() == 1);
  }
  CHECK(a.ih.ih == b.ih.ih);
  CHECK(a.table.lambda == b.table.lambda);
  CHECK(a.table.ilambda == b.table.ilambda);

  CHECK(a.table.lambda_at(3, 3, 0, 0) == 1);
  CHECK(a.table.lambda.size() == 1);
  CHECK(a.table.ilambda_at(1, -1, -1) == 1);
  CHECK(a.table.ilambda_at(3, 0, 0) == 1);
  CHECK(a.table.ilambda.size() == 2);
}

TEST_CASE("quadric cone top weight piece of the dual complex") {
  auto r = make_report("p1xp1", 0);
  REQUIRE(r.profile.topweight_h0.size() == 1);
  const auto& s = r.profile.topweight_h0[0];
  CHECK(s.prim_degree == 2);
  CHECK(s.twist == -2);
  CHECK(s.hs.dim(3, 3) == 1);
  CHECK(s.hs.total() == 1);
  CHECK(s.hs.weight() == 6);
}

TEST_CASE("rank-2 matrix cone over p3") {
  auto r = make_report("p3", 1);
  CHECK(r.lcdef.lcdef == 2);
  CHECK(r.lcdef.lcdef_gen_pos == 2);
  CHECK(r.lcdef.ncci_codim == ExtendedLevel::finite(5));
  CHECK(r.c.value == ExtendedLevel::finite(0));
  CHECK(r.hrh == ExtendedLevel::finite(0));
  CHECK(r.verdict == InequalityVerdict::Holds);
  CHECK(r.all_agree());
  // Sharp: 2 + 2*0 + 3 == 5.

  // Only j = 2 survives, carried by prim^0 with twist -(q+j+r+1) = -5.
  CHECK(r.profile.summands.size() == 1);
  REQUIRE(r.profile.summands.count(2) == 1);
  const auto& list = r.profile.summands.at(2);
  REQUIRE(list.size() == 1);
  CHECK(list[0].prim_degree == 0);
  CHECK(list[0].twist == -5);
  CHECK(list[0].hs.dim(5, 5) == 1);

  // Generation level of the surviving module.
  REQUIRE(r.gen_levels.count(2) == 1);
  CHECK_FALSE(r.gen_levels.at(2).zero_module);
  CHECK(r.gen_levels.at(2).value == 1);
}

TEST_CASE("rank-2 cone agrees with its resolution-bundle presentation") {
  // The same singularity resolves through a bundle over p3 x p1; with the
  // product base the contraction has delta = 0.
  auto a = make_report("p3", 1);
  auto b = make_report("p3xp1", 0);
  CHECK(a.c.value == b.c.value);
  CHECK(a.hrh == b.hrh);
  CHECK(a.lcdef.lcdef == b.lcdef.lcdef);
  CHECK(a.table.lambda == b.table.lambda);
  CHECK(a.table.ilambda == b.table.ilambda);
  CHECK(a.ih.ih == b.ih.ih);
}

TEST_CASE("elliptic cone") {
  auto r = make_report("elliptic", 0);
  CHECK(r.c.value.is_inf());  // a plane cubic cone is a hypersurface
  CHECK(r.hrh.is_neg());
  CHECK(r.all_agree());

  REQUIRE(r.profile.topweight_h0.size() == 1);
  auto intrinsic = r.profile.topweight_h0[0].hs.twist(r.setup.embed_codim);
  CHECK(intrinsic.weight() == 3);
  CHECK(intrinsic.total() == 2);
  CHECK(intrinsic.dim(2, 1) == 1);
  CHECK(intrinsic.dim(1, 2) == 1);
}

TEST_CASE("cones over projective space are rational homology manifolds") {
  for (const auto& name : {"p1", "p2", "p3", "p4"}) {
    auto r = make_report(name, 0);
    CHECK(r.c.value.is_inf());
    CHECK(r.hrh.is_inf());
    auto smooth = smooth_point_table(r.setup.n());
    CHECK(r.table.lambda == smooth.lambda);
    CHECK(r.table.ilambda == smooth.ilambda);
    for (const auto& [j, hs] : r.ih.ih)
      if (j > 0) CHECK(hs.total() == 0);
    CHECK(r.all_agree());
  }
}

TEST_CASE("genus two cone has negative level") {
  auto r = make_report("genus2", 0);
  CHECK(r.hrh.is_neg());
  CHECK(r.all_agree());
}

TEST_CASE("finite base bound saturates the level") {
  ConeSetup setup;
  const auto& e = catalog_entry("p2");
  setup.d = 2;
  setup.delta = 0;
  setup.hrh_base = ExtendedLevel::finite(3);
  auto pd = primitive_decomposition(e.diamond);
  // The cone over p2 is CCI, so no saturation: the override wins.
  auto c = c_invariant_closed_form(pd, setup);
  CHECK(c.value.is_inf());

  // A base with nonvanishing intermediate primitive cohomology saturates.
  const auto& g = catalog_entry("gr24");
  ConeSetup s2;
  s2.d = 4;
  s2.delta = 0;
  s2.hrh_base = ExtendedLevel::finite(0);
  auto pdg = primitive_decomposition(g.diamond);
  auto c2 = c_invariant_closed_form(pdg, s2);
  auto c2v = c_invariant_vanishing_route(pdg, s2);
  CHECK(c2.value == c2v.value);
  CHECK(c2.saturated == c2v.saturated);
}

TEST_CASE("pushforward bookkeeping balances") {
  for (const auto& name : {"p3", "gr24", "p1xelliptic"}) {
    for (int delta : {0, 1, 2}) {
      ConeSetup setup;
      const auto& e = catalog_entry(name);
      setup.d = e.diamond.dim();
      setup.delta = delta;
      auto push = pushforward_decomposition(e.diamond, setup);
      CHECK(push.betti_identity_ok);
    }
  }
}

TEST_CASE("profile and invariants reject mismatched dimensions") {
  ConeSetup setup;
  setup.d = 3;
  auto pd = primitive_decomposition(catalog_entry("p2").diamond);
  CHECK_THROWS_AS(local_cohomology_profile(pd, setup), InputError);
}

TEST_CASE("setup validation") {
  ConeSetup bad;
  bad.embed_codim = 0;
  CHECK_THROWS_AS(bad.check(), InputError);
  bad = ConeSetup{};
  bad.delta = -1;
  CHECK_THROWS_AS(bad.check(), InputError);
}
