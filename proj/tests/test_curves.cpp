#include <doctest.h>

#include <algorithm>

#include "fan_test_util.hpp"
#include "toric/builtins.hpp"
#include "toric/curves.hpp"

using namespace toric;

namespace {

Fan hirzebruch(int twist) {
  // rays e1, e2, -e1 + twist*e2, -e2; smooth complete for any twist.
  return build_fan_or_throw(2,
                            {LatticeVector{1, 0}, LatticeVector{0, 1},
                             LatticeVector(std::vector<Int>{-1, twist}), LatticeVector{0, -1}},
                            {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

const PrimitiveCollection* find_collection(const std::vector<PrimitiveCollection>& list,
                                           const std::vector<int>& ids) {
  for (const auto& pc : list)
    if (pc.ray_ids == ids) return &pc;
  return nullptr;
}

}  // namespace

TEST_CASE("primitive_collections on the textbook fans") {
  Fan p2 = builtin_fan("projective_space", 2);
  auto pcs = primitive_collections(p2);
  REQUIRE(pcs.size() == 1);
  CHECK(pcs[0].ray_ids == std::vector<int>{0, 1, 2});
  CHECK(pcs[0].sum.is_zero());
  CHECK(pcs[0].degree == 3);

  Fan p1xp1 = product(builtin_fan("projective_space", 1), builtin_fan("projective_space", 1));
  auto qcs = primitive_collections(p1xp1);
  REQUIRE(qcs.size() == 2);
  CHECK(qcs[0].ray_ids == std::vector<int>{0, 1});
  CHECK(qcs[1].ray_ids == std::vector<int>{2, 3});
  for (const auto& pc : qcs) {
    CHECK(pc.sum.is_zero());
    CHECK(pc.degree == 2);
  }
}

TEST_CASE("the non-projective 3-fold has {e2,e5} but not {e1,e2,e5}") {
  Fan oda = builtin_fan("oda_3fold");
  auto pcs = primitive_collections(oda);
  CHECK(find_collection(pcs, {1, 4}) != nullptr);
  CHECK(find_collection(pcs, {0, 1, 4}) == nullptr);
  // e1+e2+e5 = 0 even though the set is not a primitive collection.
  CHECK((oda.ray(0) + oda.ray(1) + oda.ray(4)).is_zero());
  CHECK_FALSE(is_cone(oda, {1, 4}));
}

TEST_CASE("primitive_relation on bundle fans") {
  Fan h1 = builtin_fan("split_bundle", 2);
  // base collection {e1, -e1+e2}: ids 0 and 3 in the builtin layout
  PrimitiveCollection base = primitive_relation(h1, {0, 3});
  CHECK(base.sum == LatticeVector{0, 1});
  CHECK(base.relation_coeffs == std::vector<Int>{1});
  CHECK(base.degree == 1);

  Fan p3 = builtin_fan("projective_space", 3);
  PrimitiveCollection all = primitive_relation(p3, {0, 1, 2, 3});
  CHECK(all.sum.is_zero());
  CHECK(all.degree == 4);
  CHECK(all.relation_cone.is_zero());

  Fan h2 = hirzebruch(2);
  PrimitiveCollection tw = primitive_relation(h2, {0, 2});
  CHECK(tw.sum == LatticeVector{0, 2});
  CHECK(tw.relation_coeffs == std::vector<Int>{2});
  CHECK(tw.degree == 0);

  CHECK_THROWS_AS(primitive_relation(h1, {0, 1}), NotPrimitiveError);  // a cone
  CHECK_THROWS_AS(primitive_relation(p3, {0, 1}), NotPrimitiveError);  // a face
}

TEST_CASE("minimal_components across the examples") {
  for (int n = 1; n <= 5; ++n) {
    auto mcs = minimal_components(builtin_fan("projective_space", n));
    REQUIRE(mcs.size() == 1);
    CHECK(mcs[0].degree == n + 1);
    CHECK(mcs[0].order == n + 1);
    CHECK(mcs[0].vmrt_dim == n - 1);
    CHECK(mcs[0].locus_dim == n);
  }

  CHECK(minimal_components(builtin_fan("oda_3fold")).empty());

  auto y = minimal_components(builtin_fan("oda_blowup_e3e7"));
  REQUIRE(y.size() == 1);
  CHECK(y[0].order == 2);
  CHECK(y[0].vmrt_dim == 0);
}

TEST_CASE("wall_curves on P^2, the 3-fold, and the fiber of a bundle") {
  Fan p2 = builtin_fan("projective_space", 2);
  for (const WallCurve& wc : wall_curves(p2)) {
    CHECK(wc.anticanonical_degree == 3);
    CHECK(wc.relation_coeffs == std::vector<Int>{1});
    CHECK(wc.is_standard);
  }

  Fan oda = builtin_fan("oda_3fold");
  bool seen = false;
  for (const WallCurve& wc : wall_curves(oda)) {
    if (wc.wall.ray_ids != std::vector<int>{0, 2}) continue;
    seen = true;
    CHECK(wc.anticanonical_degree == 3);
    CHECK(wc.splitting_type == std::vector<Int>{1, 0});
    CHECK(wc.is_standard);
  }
  CHECK(seen);

  Fan h1 = builtin_fan("split_bundle", 2);
  bool fiber_seen = false;
  for (const WallCurve& wc : wall_curves(h1)) {
    if (wc.anticanonical_degree != 2) continue;
    fiber_seen = true;
    CHECK(wc.splitting_type == std::vector<Int>{0});
  }
  CHECK(fiber_seen);
}

TEST_CASE("wall relations have unit border coefficients by construction") {
  for (const auto& [name, fan] : testutil::fuzz_seeds()) {
    for (const WallCurve& wc : wall_curves(fan)) {
      LatticeVector res = fan.ray(wc.wall.left_opposite) + fan.ray(wc.wall.right_opposite);
      for (size_t i = 0; i < wc.relation_coeffs.size(); ++i)
        res += wc.relation_coeffs[i] * fan.ray(wc.wall.ray_ids[i]);
      CHECK(res.is_zero());
    }
  }
}

TEST_CASE("projectivity decisions") {
  CHECK(is_projective(builtin_fan("projective_space", 2)));
  CHECK_FALSE(is_projective(builtin_fan("oda_3fold")));
  CHECK_FALSE(is_projective(builtin_fan("oda_blowup_e1e3")));
  CHECK(is_projective(builtin_fan("oda_blowup_e3e7")));

  // The witness really is ample: positive on every invariant curve.
  Fan s3 = builtin_fan("del_pezzo_s3");
  auto witness = projective_witness(s3);
  REQUIRE(witness.has_value());
  for (const auto& row : projectivity_system(s3).rows) CHECK(dot(*witness, row) > 0);

  // The system over the 7 rays of the non-projective 3-fold is infeasible.
  StrictLPSystem oda_sys = projectivity_system(builtin_fan("oda_3fold"));
  CHECK(oda_sys.num_vars == 7);
  CHECK_FALSE(lp_strict_feasible(oda_sys).has_value());
}

TEST_CASE("Fano decisions agree with the primitive-relation criterion") {
  for (int n = 1; n <= 5; ++n) CHECK(is_fano(builtin_fan("projective_space", n)));
  CHECK(is_fano(builtin_fan("del_pezzo_s3")));
  CHECK_FALSE(is_fano(hirzebruch(2)));
  CHECK_FALSE(is_fano(builtin_fan("oda_3fold")));
  // is_fano re-checks both criteria internally and throws on mismatch, so the
  // calls above already exercise the cross-oracle.
}

TEST_CASE("pseudo_index on the Fano examples") {
  for (int n = 1; n <= 5; ++n)
    CHECK(pseudo_index(builtin_fan("projective_space", n)) == n + 1);
  Fan p1xp1 = product(builtin_fan("projective_space", 1), builtin_fan("projective_space", 1));
  CHECK(pseudo_index(p1xp1) == 2);
  CHECK(pseudo_index(builtin_fan("del_pezzo_s3")) == 1);
  CHECK_THROWS_AS(pseudo_index(builtin_fan("oda_3fold")), NotFanoError);
}

TEST_CASE("P^1 base case: one collection of order 2 and degree 2") {
  Fan p1 = builtin_fan("projective_space", 1);
  auto pcs = primitive_collections(p1);
  REQUIRE(pcs.size() == 1);
  CHECK(pcs[0].order == 2);
  CHECK(pcs[0].degree == 2);
  auto wcs = wall_curves(p1);
  REQUIRE(wcs.size() == 1);
  CHECK(wcs[0].wall.ray_ids.empty());
  CHECK(wcs[0].anticanonical_degree == 2);
  CHECK(wcs[0].is_standard);
  CHECK(is_fano(p1));
  CHECK(pseudo_index(p1) == 2);
}

TEST_CASE("zero-sum collections are pairwise disjoint on every seed fan") {
  for (const auto& [name, fan] : testutil::fuzz_seeds()) {
    auto mcs = minimal_components(fan);  // throws on overlap
    for (size_t i = 0; i < mcs.size(); ++i)
      for (size_t j = i + 1; j < mcs.size(); ++j) {
        std::vector<int> common;
        std::set_intersection(mcs[i].collection.ray_ids.begin(),
                              mcs[i].collection.ray_ids.end(),
                              mcs[j].collection.ray_ids.begin(),
                              mcs[j].collection.ray_ids.end(), std::back_inserter(common));
        CHECK(common.empty());
      }
  }
}

TEST_CASE("enumeration equals the exhaustive oracle on every seed fan") {
  for (const auto& [name, fan] : testutil::fuzz_seeds()) {
    if (fan.num_rays() > 12) continue;
    std::vector<std::vector<int>> mine;
    for (const auto& pc : primitive_collections(fan)) mine.push_back(pc.ray_ids);
    CHECK(mine == testutil::brute_force_minimal_nonfaces(fan));
  }
}
