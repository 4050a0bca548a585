#pragma once

#include <optional>
#include <vector>

#include "toric/fan.hpp"
#include "toric/linprog.hpp"

namespace toric {

// A minimal non-face together with its relation: the generator sum written in
// the unique cone containing it in its relative interior, with positive
// integer coefficients. Degree is order minus the coefficient sum.
struct PrimitiveCollection {
  std::vector<int> ray_ids;  // strictly increasing, size = order >= 2
  int order = 0;
  LatticeVector sum;
  Cone relation_cone;                // the zero cone when sum = 0
  std::vector<Int> relation_coeffs;  // aligned with relation_cone.ray_ids, all > 0
  Int degree;
  bool zero_sum() const { return relation_cone.is_zero(); }
};

// Zero-sum primitive collection decorated as a family of rational curves.
struct MinimalComponent {
  PrimitiveCollection collection;
  int order = 0;
  Int degree;         // equals order
  int p = 0;          // order - 2
  int vmrt_dim = 0;   // = p
  int locus_dim = 0;  // = p + 1
};

// The invariant curve on a wall with its splitting data. The relation
//   left_opposite + sum a_i * wall_i + right_opposite = 0
// holds exactly; both border coefficients are 1 by smoothness.
struct WallCurve {
  Wall wall;
  std::vector<Int> relation_coeffs;  // the a_i, aligned with wall.ray_ids
  Int anticanonical_degree;          // 2 + sum a_i
  std::vector<Int> splitting_type;   // the a_i sorted descending
  bool is_standard = false;          // every a_i in {0, 1}
};

// All primitive collections (minimal non-faces), each with its relation,
// sorted by order then lexicographically.
std::vector<PrimitiveCollection> primitive_collections(const Fan& fan);

// Relation for one collection; throws NotPrimitiveError when ray_ids fails
// the minimal-non-face condition.
PrimitiveCollection primitive_relation(const Fan& fan, const std::vector<int>& ray_ids);

// The zero-sum collections, decorated. Distinct components are pairwise
// disjoint on legal fans; a violation throws InternalError.
std::vector<MinimalComponent> minimal_components(const Fan& fan);

std::vector<WallCurve> wall_curves(const Fan& fan);

// Ample-divisor feasibility: one variable per ray, one strict positivity row
// per invariant curve. The witness is an ample divisor's coefficients.
std::optional<RationalVector> projective_witness(const Fan& fan);
bool is_projective(const Fan& fan);
StrictLPSystem projectivity_system(const Fan& fan);

// Positivity of -K on every invariant curve plus projectivity, cross-checked
// against the positive-degree criterion on primitive collections. A
// disagreement throws CriterionMismatchError.
bool is_fano(const Fan& fan);

// Minimum anticanonical degree over invariant curves; Fano fans only.
Int pseudo_index(const Fan& fan);

}  // namespace toric
