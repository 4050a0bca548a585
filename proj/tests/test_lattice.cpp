#include <doctest.h>

#include "test_util.hpp"
#include "toric/lattice.hpp"

using namespace toric;
using testutil::minor_gcd_invariant_factors;
using testutil::rand_in;
using testutil::random_vector;

TEST_CASE("normalize_primitive divides out the content") {
  auto [v, f] = normalize_primitive(LatticeVector{2, 4, -6});
  CHECK(v == LatticeVector{1, 2, -3});
  CHECK(f == 2);

  auto [w, g] = normalize_primitive(LatticeVector{-3, 0, 0});
  CHECK(w == LatticeVector{-1, 0, 0});
  CHECK(g == 3);

  CHECK_THROWS_AS(normalize_primitive(LatticeVector{0, 0, 0}), ZeroVectorError);
}

TEST_CASE("normalize_primitive is idempotent") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    LatticeVector v = random_vector(rng, rand_in(rng, 1, 6), -30, 30);
    if (v.is_zero()) continue;
    auto [p, f] = normalize_primitive(v);
    CHECK(f * p == v);
    auto [p2, f2] = normalize_primitive(p);
    CHECK(p2 == p);
    CHECK(f2 == 1);
  }
}

TEST_CASE("invariant_factors on pinned matrices") {
  IntMatrix id2(2, 2);
  id2.at(0, 0) = 1;
  id2.at(1, 1) = 1;
  CHECK(invariant_factors(id2) == std::vector<Int>{1, 1});

  IntMatrix diag(2, 2);
  diag.at(0, 0) = 1;
  diag.at(1, 1) = 2;
  CHECK(invariant_factors(diag) == std::vector<Int>{1, 2});

  // Rows (1,0,0),(1,0,1) extend to a basis of Z^3.
  IntMatrix m = IntMatrix::from_rows({LatticeVector{1, 0, 0}, LatticeVector{1, 0, 1}});
  CHECK(invariant_factors(m) == std::vector<Int>{1, 1});
}

TEST_CASE("invariant_factors agrees with the minor-gcd oracle and transposition") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int r = rand_in(rng, 1, 4), c = rand_in(rng, 1, 4);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = rand_in(rng, -9, 9);
    auto mine = invariant_factors(m);
    CHECK(mine == minor_gcd_invariant_factors(m));
    CHECK(mine == invariant_factors(m.transposed()));
  }
}

TEST_CASE("determinant matches Laplace expansion") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rand_in(rng, 1, 5);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rand_in(rng, -7, 7);
    CHECK(m.determinant() == testutil::laplace_det(m));
  }
}

TEST_CASE("solve_in_basis on pinned systems") {
  const LatticeVector e1{1, 0}, e2{0, 1};

  auto c = solve_in_basis({e1, e2}, RationalVector{3, 5});
  REQUIRE(c.has_value());
  CHECK(*c == RationalVector{3, 5});

  auto d = solve_in_basis({e2, LatticeVector{-1, -1}}, RationalVector{-1, 0});
  REQUIRE(d.has_value());
  CHECK(*d == RationalVector{1, 1});
  // Re-verify the relation 1*e2 + 1*(-e1-e2) = (-1,0) directly.
  CHECK(e2 + LatticeVector{-1, -1} == LatticeVector{-1, 0});

  CHECK_FALSE(solve_in_basis({e1}, RationalVector{0, 1}).has_value());

  CHECK_THROWS_AS(solve_in_basis({e1, e1}, RationalVector{1, 0}), DependentGeneratorsError);
  CHECK_THROWS_AS(
      solve_in_basis({LatticeVector{1, 1}, LatticeVector{2, 2}}, RationalVector{1, 1}),
      DependentGeneratorsError);
}

TEST_CASE("solve_in_basis with no generators") {
  CHECK(solve_in_basis({}, RationalVector{0, 0}).has_value());
  CHECK_FALSE(solve_in_basis({}, RationalVector{1, 0}).has_value());
}

TEST_CASE("solve_in_basis round-trips random rational coefficients") {
  std::mt19937 rng(17);
  int done = 0;
  while (done < 120) {
    const int n = rand_in(rng, 1, 5);
    const int k = rand_in(rng, 1, n);
    std::vector<LatticeVector> gens;
    for (int i = 0; i < k; ++i) gens.push_back(random_vector(rng, n, -5, 5));

    std::vector<Rat> coeffs(k);
    for (int i = 0; i < k; ++i)
      coeffs[i] = Rat(rand_in(rng, -12, 12)) / Rat(rand_in(rng, 1, 6));
    RationalVector target = rational_zero(n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) target[j] += coeffs[i] * Rat(gens[i][j]);

    try {
      auto solved = solve_in_basis(gens, target);
      REQUIRE(solved.has_value());
      CHECK(*solved == RationalVector(coeffs));
      ++done;
    } catch (const DependentGeneratorsError&) {
      // random generators happened to be dependent; draw again
    }
  }
}
