#include <doctest.h>

#include "fan_test_util.hpp"
#include "toric/analysis.hpp"
#include "toric/builtins.hpp"

using namespace toric;

namespace {

Fan pspace(int n) { return builtin_fan("projective_space", n); }

Fan product_with_p1(const Fan& f) { return product(f, pspace(1)); }

// Blow-up of P^{n-1} x P^1 along the P^{n-2} sitting over a point: subdivide
// the 2-cone on one fiber-factor ray and one base-factor ray.
Fan blown_up_product(int n) {
  Fan base = product(pspace(n - 1), pspace(1));
  return star_subdivide(base, Cone::of({0, n}));
}

}  // namespace

TEST_CASE("check_bounds equality cases") {
  Fan p1xp1 = product(pspace(1), pspace(1));
  BoundsReport a = check_bounds(p1xp1);
  CHECK(a.per_degree_counts == std::map<int, int>{{0, 2}});
  CHECK(a.bound_i_lhs == 4);
  CHECK(a.bound_i_rhs == 4);
  CHECK(a.bound_i_ok);
  CHECK(a.bound_ii_ok);
  CHECK(a.bound_iii_ok);
  CHECK_FALSE(a.alarm());

  BoundsReport b = check_bounds(product_with_p1(builtin_fan("del_pezzo_s3")));
  CHECK(b.n == 3);
  CHECK(b.rho == 5);
  CHECK(b.bound_i_lhs == 8);
  CHECK(b.bound_i_rhs == 8);
  CHECK(b.per_degree_counts == std::map<int, int>{{0, 4}});
  CHECK_FALSE(b.alarm());

  BoundsReport c = check_bounds(pspace(3));
  CHECK(c.per_degree_counts == std::map<int, int>{{2, 1}});
  CHECK(c.bound_i_lhs == 4);
  CHECK(c.bound_i_rhs == 4);
  CHECK(c.bound_iii_ok);  // p = 2 >= (n-1)/2 with n_2 = 1
  CHECK_FALSE(c.alarm());
}

TEST_CASE("check_bounds lhs is recomputable from the raw component list") {
  for (const auto& [name, fan] : testutil::fuzz_seeds()) {
    BoundsReport rep = check_bounds(fan);
    Int lhs = 0;
    for (const auto& [p, count] : rep.per_degree_counts) lhs += Int(count) * (p + 2);
    CHECK(lhs == rep.bound_i_lhs);
    CHECK(rep.bound_i_rhs == fan.dim() + picard_number(fan));
    CHECK_FALSE(rep.alarm());
  }
}

TEST_CASE("check_conjecture equality families") {
  ConjectureReport s3p2 = check_conjecture(product(builtin_fan("del_pezzo_s3"), pspace(2)));
  CHECK(s3p2.applicable);
  CHECK(s3p2.n == 4);
  CHECK(s3p2.rho == 5);
  CHECK(s3p2.rhs == 10);
  bool equality_seen = false;
  for (const auto& c : s3p2.per_component) {
    CHECK(c.ok);
    if (c.p == 1) {
      CHECK(c.lhs == 10);
      CHECK(c.equality);
      equality_seen = true;
    }
  }
  CHECK(equality_seen);
  CHECK(s3p2.mukai_rho_ok);
  CHECK(s3p2.mukai_iota_ok);
  CHECK_FALSE(s3p2.counterexample_candidate);

  ConjectureReport bl = check_conjecture(blown_up_product(3));
  CHECK(bl.applicable);
  CHECK(bl.rhs == 6);
  bool bl_equality = false;
  for (const auto& c : bl.per_component)
    if (c.p == 1 && c.lhs == 6 && c.equality) bl_equality = true;
  CHECK(bl_equality);

  for (int n = 3; n <= 6; ++n) {
    ConjectureReport pn = check_conjecture(pspace(n));
    CHECK(pn.applicable);
    REQUIRE(pn.per_component.size() == 1);
    CHECK(pn.per_component[0].lhs == n);  // rho = 1, p = n-1
    CHECK(pn.per_component[0].ok);
    CHECK_FALSE(pn.per_component[0].equality);
  }
}

TEST_CASE("check_conjecture on non-Fano fans is not applicable") {
  ConjectureReport rep = check_conjecture(builtin_fan("oda_3fold"));
  CHECK_FALSE(rep.applicable);
  CHECK_FALSE(rep.fano);
  CHECK_FALSE(rep.iota.has_value());
  CHECK_FALSE(rep.counterexample_candidate);
}

TEST_CASE("classify_degree_n identifies the three families") {
  for (int n = 3; n <= 5; ++n) {
    DegNClassification prod = classify_degree_n(product(pspace(n - 1), pspace(1)));
    CHECK(prod.kind == DegNClass::ProductPn1P1);
    CHECK(prod.alarms.empty());
    CHECK(prod.outside_rays.size() == 2);

    DegNClassification bundle = classify_degree_n(builtin_fan("split_bundle", n));
    CHECK(bundle.kind == DegNClass::SplitBundle);
    CHECK(bundle.alarms.empty());

    DegNClassification blowup = classify_degree_n(blown_up_product(n));
    CHECK(blowup.kind == DegNClass::BlowupOfProduct);
    CHECK(blowup.alarms.empty());
    CHECK(blowup.outside_rays.size() == 3);
  }
}

TEST_CASE("classify_degree_n is NotApplicable off the theorem's hypotheses") {
  CHECK(classify_degree_n(pspace(4)).kind == DegNClass::NotApplicable);  // degree n+1, not n
  CHECK(classify_degree_n(builtin_fan("oda_3fold")).kind == DegNClass::NotApplicable);
  CHECK(classify_degree_n(builtin_fan("del_pezzo_s3")).kind == DegNClass::NotApplicable);  // n=2
}

TEST_CASE("summarize composes the sections consistently") {
  AnalysisReport oda = summarize(builtin_fan("oda_3fold"), "oda_3fold");
  CHECK_FALSE(oda.projective);
  CHECK_FALSE(oda.fano);
  CHECK(oda.components.empty());
  CHECK_FALSE(oda.collections.empty());
  CHECK(oda.rho == oda.num_rays - oda.n);

  AnalysisReport p4 = summarize(pspace(4), "p4");
  CHECK(p4.rho == 1);
  REQUIRE(p4.components.size() == 1);
  CHECK(p4.components[0].degree == 5);
  CHECK(p4.projective);
  CHECK(p4.fano);

  AnalysisReport y = summarize(builtin_fan("oda_blowup_e1e3"), "y");
  CHECK_FALSE(y.projective);
  REQUIRE(y.components.size() == 1);
  CHECK(y.components[0].order == 2);

  // Every numeric field is reproducible by calling the operation directly.
  CHECK(y.bounds.bound_i_lhs == check_bounds(builtin_fan("oda_blowup_e1e3")).bound_i_lhs);
  CHECK(y.conjecture.applicable ==
        check_conjecture(builtin_fan("oda_blowup_e1e3")).applicable);
  CHECK(y.classification.kind == classify_degree_n(builtin_fan("oda_blowup_e1e3")).kind);
}
