#include "doctest.h"

#include "hodgecone/lyubeznik.hpp"
#include "hodgecone/report.hpp"

using namespace hodgecone;

namespace {

LyubeznikTable table_for(const std::string& name, int delta) {
  ConeSetup setup;
  const auto& e = catalog_entry(name);
  setup.d = e.diamond.dim();
  setup.delta = delta;
  return hodge_lyubeznik_table(primitive_decomposition(e.diamond), setup);
}

}  // namespace

TEST_CASE("elliptic cone table") {
  auto t = table_for("elliptic", 0);
  CHECK(t.n == 2);
  CHECK(t.ilambda_at(1, -1, 0) == 1);
  CHECK(t.ilambda_at(1, 0, -1) == 1);
  CHECK(t.ilambda_at(2, 0, 0) == 1);
  CHECK(t.ilambda.size() == 3);
  CHECK(t.lambda_at(2, 2, 0, 0) == 1);
  CHECK(t.lambda.size() == 1);  // no s < n entries: the cone is CCI
}

TEST_CASE("tables are Hodge symmetric") {
  for (const auto& name : {"elliptic", "genus3", "gr24", "p1xelliptic"})
    for (int delta : {0, 1, 2}) {
      auto t = table_for(name, delta);
      for (const auto& [key, v] : t.lambda) {
        auto [r, s, p, q] = key;
        CHECK(t.lambda_at(r, s, q, p) == v);
      }
      for (const auto& [key, v] : t.ilambda) {
        auto [r, p, q] = key;
        CHECK(t.ilambda_at(r, q, p) == v);
      }
    }
}

TEST_CASE("classical numbers forget the grading") {
  auto t = table_for("elliptic", 0);
  auto cl = classical_lyubeznik(t);
  CHECK(cl.at({2, 2}) == 1);
  CHECK(cl.size() == 1);
}

TEST_CASE("level read off the table") {
  // Cone over the rank-2 presentation base: a single lambda_{0,3}^{-1,-1}
  // entry pins c = 0.
  auto t = table_for("p3", 1);
  CHECK(t.lambda_at(0, 3, -1, -1) == 1);
  CHECK(c_from_table(t) == ExtendedLevel::finite(0));
  CHECK(hrh_from_table(t, c_from_table(t)) == ExtendedLevel::finite(0));

  auto smooth = smooth_point_table(4);
  CHECK(c_from_table(smooth).is_inf());
  CHECK(hrh_from_table(smooth, ExtendedLevel::inf()).is_inf());
}

TEST_CASE("negative level from the table") {
  auto t = table_for("elliptic", 0);
  CHECK(c_from_table(t).is_inf());
  CHECK(hrh_from_table(t, c_from_table(t)).is_neg());
}

TEST_CASE("ilambda masses match Betti differences") {
  for (const auto& name : {"elliptic", "gr24", "quadric4"})
    for (int delta : {0, 1}) {
      const auto& e = catalog_entry(name);
      ConeSetup setup;
      setup.d = e.diamond.dim();
      setup.delta = delta;
      auto t = hodge_lyubeznik_table(primitive_decomposition(e.diamond), setup);
      for (int r = 1; r <= setup.n(); ++r)
        CHECK(ilambda_mass(t, r) ==
              e.diamond.betti(setup.n() - r) - e.diamond.betti(setup.n() + r));
    }
}
