#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

struct Ray {
  int id = 0;
  LatticeVector vector;
};

// Cone of a simplicial fan, canonically a strictly increasing ray-id tuple.
// The empty tuple is the zero cone.
struct Cone {
  std::vector<int> ray_ids;

  static Cone of(std::vector<int> ids);  // sorts; throws BadIndexError on duplicates
  int dim() const { return static_cast<int>(ray_ids.size()); }
  bool is_zero() const { return ray_ids.empty(); }
  std::string str() const;  // "{0,2,5}"

  friend bool operator==(const Cone& a, const Cone& b) = default;
  friend bool operator<(const Cone& a, const Cone& b) { return a.ray_ids < b.ray_ids; }
};

// An (n-1)-cone shared by exactly two maximal cones; carries the invariant
// curve used by the projectivity and Fano tests.
struct Wall {
  std::vector<int> ray_ids;    // the shared (n-1)-subset, sorted
  Cone left_cone, right_cone;  // the two incident maximal cones, left < right
  int left_opposite = -1;      // ray completing left_cone beyond the wall
  int right_opposite = -1;
};

enum class FailureKind { Rays, Smooth, FaceCompat, Complete };
std::string to_string(FailureKind k);

struct ValidationFailure {
  FailureKind kind;
  std::vector<int> rays;   // offending ray ids
  std::vector<int> cones;  // offending maximal-cone indices, in input order
  std::string message;
};

struct ValidationReport {
  bool smooth_ok = true;
  bool axioms_ok = true;
  bool complete_ok = true;
  std::vector<ValidationFailure> failures;
  bool ok() const { return smooth_ok && axioms_ok && complete_ok; }
};

// Smooth complete fan. Instances are produced only by build_fan after full
// validation, so every query below may assume smoothness and completeness.
// Values are immutable; all queries are pure and safe to call concurrently.
class Fan {
 public:
  int dim() const { return n_; }
  int num_rays() const { return static_cast<int>(rays_.size()); }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const LatticeVector& ray(int id) const;
  std::vector<Ray> ray_entries() const;
  const std::vector<Cone>& max_cones() const { return cones_; }
  const std::vector<Wall>& walls() const { return walls_; }

  // True iff the ids form a face of some maximal cone (smooth fans are
  // simplicial, so faces are exactly the subsets).
  bool contains_cone(std::vector<int> ray_ids) const;

  // All faces as sorted ray-id tuples, the empty tuple included.
  const std::set<std::vector<int>>& faces() const { return faces_; }

  // Rows w_0..w_{n-1} dual to the cone's rays: w_i . ray_j = delta_ij.
  // Integral because maximal cones are unimodular.
  const std::vector<LatticeVector>& dual_basis(int cone_index) const;

 private:
  friend struct FanFactory;
  Fan() = default;

  int n_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> cones_;  // sorted lexicographically
  std::vector<std::vector<LatticeVector>> dual_;
  std::vector<Wall> walls_;  // sorted by ray_ids
  std::set<std::vector<int>> faces_;
};

struct BuildResult {
  std::optional<Fan> fan;  // set iff report.ok()
  ValidationReport report;
};

// Primitivizes the ray vectors, rejects duplicates, and checks the three
// invariant groups (smooth, fan axioms, complete). All failures are
// collected, not just the first. Malformed cone indices are hard errors.
BuildResult build_fan(int n, std::vector<LatticeVector> ray_vectors,
                      std::vector<std::vector<int>> max_cone_index_sets);

// Same, but throws toric::Error carrying the first failure message.
Fan build_fan_or_throw(int n, std::vector<LatticeVector> ray_vectors,
                       std::vector<std::vector<int>> max_cone_index_sets);

bool is_cone(const Fan& fan, const std::vector<int>& ray_ids);

struct PointLocation {
  Cone max_cone;
  RationalVector coefficients;  // aligned with max_cone.ray_ids, all >= 0
  Cone supporting_face;         // rays with strictly positive coefficient
};

// Finds a maximal cone containing the point (exists by completeness); the
// supporting face is the unique cone holding the point in its relative
// interior.
PointLocation locate_point(const Fan& fan, const RationalVector& point);

// Inserts the primitivized generator sum of `target` as a new ray and
// re-triangulates the incident maximal cones. The result is re-validated and
// must pass; smooth complete is preserved.
Fan star_subdivide(const Fan& fan, const Cone& target);

Fan product(const Fan& a, const Fan& b);

int picard_number(const Fan& fan);  // ray count minus dimension

namespace detail {
// Exact test that cone(a) and cone(b) intersect precisely in the cone on
// their shared rays, via a separating functional that vanishes on the shared
// rays and is strictly signed on the rest. Exposed for property tests.
bool cones_meet_in_shared_face(const std::vector<LatticeVector>& rays,
                               const std::vector<int>& a, const std::vector<int>& b);
}  // namespace detail

}  // namespace toric
