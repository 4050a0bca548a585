#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "toric/linprog.hpp"

namespace toric {

Cone Cone::of(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  for (size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0) throw BadIndexError("negative ray index in cone");
    if (i > 0 && ids[i] == ids[i - 1])
      throw BadIndexError("duplicate ray index " + std::to_string(ids[i]) + " in cone");
  }
  Cone c;
  c.ray_ids = std::move(ids);
  return c;
}

std::string Cone::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < ray_ids.size(); ++i) {
    if (i) os << ',';
    os << ray_ids[i];
  }
  os << '}';
  return os.str();
}

std::string to_string(FailureKind k) {
  switch (k) {
    case FailureKind::Rays: return "rays";
    case FailureKind::Smooth: return "smooth";
    case FailureKind::FaceCompat: return "face";
    case FailureKind::Complete: return "complete";
  }
  return "?";
}

const LatticeVector& Fan::ray(int id) const {
  if (id < 0 || id >= num_rays()) throw BadIndexError("ray index out of range");
  return rays_[id];
}

std::vector<Ray> Fan::ray_entries() const {
  std::vector<Ray> out;
  out.reserve(rays_.size());
  for (int i = 0; i < num_rays(); ++i) out.push_back(Ray{i, rays_[i]});
  return out;
}

bool Fan::contains_cone(std::vector<int> ray_ids) const {
  Cone c = Cone::of(std::move(ray_ids));
  for (int id : c.ray_ids)
    if (id >= num_rays()) throw BadIndexError("ray index out of range");
  return faces_.count(c.ray_ids) > 0;
}

const std::vector<LatticeVector>& Fan::dual_basis(int cone_index) const {
  if (cone_index < 0 || cone_index >= static_cast<int>(cones_.size()))
    throw BadIndexError("cone index out of range");
  return dual_[cone_index];
}

struct FanFactory {
  static Fan make(int n, std::vector<LatticeVector> rays, std::vector<Cone> cones,
                  std::vector<std::vector<LatticeVector>> dual);
};

namespace {

// Rows w_i with w_i . ray_j = |det| * delta_ij for the matrix whose rows are
// the cone's ray vectors. Exact dual basis when the cone is unimodular; a
// positively scaled one otherwise, which is all the sign tests need.
std::vector<LatticeVector> scaled_dual_rows(const IntMatrix& basis, const Int& det) {
  const int n = basis.rows();
  IntMatrix cof = basis.cofactor_matrix();
  const int sign = det < 0 ? -1 : 1;
  std::vector<LatticeVector> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Int> r(n);
    for (int j = 0; j < n; ++j) r[j] = sign < 0 ? Int(-cof.at(i, j)) : cof.at(i, j);
    rows.emplace_back(std::move(r));
  }
  return rows;
}

std::vector<int> shared_ids(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> s;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s));
  return s;
}

// Separating-functional test: cone(a) and cone(b) meet exactly in the cone on
// their shared rays iff some functional vanishes on the shared rays, is
// strictly positive on a's remaining rays and strictly negative on b's.
bool pair_meets_in_shared_face(const std::vector<LatticeVector>& rays,
                               const std::vector<int>& a, const std::vector<int>& b,
                               const std::vector<LatticeVector>& dual_a,
                               const std::vector<LatticeVector>& dual_b) {
  if (a == b) return true;
  const std::vector<int> s = shared_ids(a, b);
  std::vector<int> pos_a, pos_b;
  for (size_t p = 0; p < a.size(); ++p)
    if (!std::binary_search(s.begin(), s.end(), a[p])) pos_a.push_back(static_cast<int>(p));
  for (size_t p = 0; p < b.size(); ++p)
    if (!std::binary_search(s.begin(), s.end(), b[p])) pos_b.push_back(static_cast<int>(p));

  // Cheap certificate first: the sum of a's free dual rows is positive on
  // a's free rays and zero on the shared ones; if it is negative on all of
  // b's free rays it separates. Then the same from b's side.
  auto try_sum = [&](const std::vector<LatticeVector>& dual, const std::vector<int>& pos,
                     const std::vector<int>& other, const std::vector<int>& other_pos) {
    LatticeVector u = zero_vector(rays[0].dim());
    for (int p : pos) u += dual[p];
    for (int q : other_pos)
      if (dot(u, rays[other[q]]) >= 0) return false;
    return true;
  };
  if (try_sum(dual_a, pos_a, b, pos_b)) return true;
  if (try_sum(dual_b, pos_b, a, pos_a)) return true;

  // Full test: functional u = sum over a's free positions of y_p * w_p needs
  // y_p > 0 and u . b_q < 0 for each free ray of b.
  StrictLPSystem sys;
  sys.num_vars = static_cast<int>(pos_a.size());
  for (int v = 0; v < sys.num_vars; ++v) {
    RationalVector unit = rational_zero(sys.num_vars);
    unit[v] = 1;
    sys.rows.push_back(std::move(unit));
  }
  for (int q : pos_b) {
    RationalVector row = rational_zero(sys.num_vars);
    for (int v = 0; v < sys.num_vars; ++v)
      row[v] = Rat(-dot(dual_a[pos_a[v]], rays[b[q]]));
    sys.rows.push_back(std::move(row));
  }
  return lp_strict_feasible(sys).has_value();
}

struct WallCensusEntry {
  std::vector<int> cone_indices;
};

std::map<std::vector<int>, WallCensusEntry> wall_census(const std::vector<Cone>& cones) {
  std::map<std::vector<int>, WallCensusEntry> census;
  for (size_t ci = 0; ci < cones.size(); ++ci) {
    const auto& ids = cones[ci].ray_ids;
    for (size_t drop = 0; drop < ids.size(); ++drop) {
      std::vector<int> wall;
      wall.reserve(ids.size() - 1);
      for (size_t p = 0; p < ids.size(); ++p)
        if (p != drop) wall.push_back(ids[p]);
      census[wall].cone_indices.push_back(static_cast<int>(ci));
    }
  }
  return census;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

}  // namespace

Fan FanFactory::make(int n, std::vector<LatticeVector> rays, std::vector<Cone> cones,
                     std::vector<std::vector<LatticeVector>> dual) {
  // Canonical cone order, keeping the dual rows aligned.
  std::vector<size_t> perm(cones.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](size_t x, size_t y) { return cones[x] < cones[y]; });

  Fan f;
  f.n_ = n;
  f.rays_ = std::move(rays);
  f.cones_.reserve(cones.size());
  f.dual_.reserve(cones.size());
  for (size_t i : perm) {
    f.cones_.push_back(cones[i]);
    f.dual_.push_back(std::move(dual[i]));
  }

  for (const Cone& c : f.cones_) {
    const auto& ids = c.ray_ids;
    const size_t k = ids.size();
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
      std::vector<int> face;
      for (size_t p = 0; p < k; ++p)
        if (mask & (size_t{1} << p)) face.push_back(ids[p]);
      f.faces_.insert(std::move(face));
    }
  }

  auto census = wall_census(f.cones_);
  for (auto& [wall_ids, entry] : census) {
    const Cone& c0 = f.cones_[entry.cone_indices[0]];
    const Cone& c1 = f.cones_[entry.cone_indices[1]];
    Wall w;
    w.ray_ids = wall_ids;
    w.left_cone = std::min(c0, c1);
    w.right_cone = std::max(c0, c1);
    for (int id : w.left_cone.ray_ids)
      if (!std::binary_search(wall_ids.begin(), wall_ids.end(), id)) w.left_opposite = id;
    for (int id : w.right_cone.ray_ids)
      if (!std::binary_search(wall_ids.begin(), wall_ids.end(), id)) w.right_opposite = id;
    f.walls_.push_back(std::move(w));
  }
  return f;
}

BuildResult build_fan(int n, std::vector<LatticeVector> ray_vectors,
                      std::vector<std::vector<int>> max_cone_index_sets) {
  if (n < 1) throw Error("fan dimension must be at least 1");
  if (max_cone_index_sets.empty()) throw Error("a fan needs at least one maximal cone");
  for (const auto& v : ray_vectors)
    if (v.dim() != n) throw Error("ray " + v.str() + " does not have dimension " + std::to_string(n));

  const int num_rays = static_cast<int>(ray_vectors.size());
  ValidationReport rep;
  auto fail = [&rep](FailureKind kind, std::vector<int> rays, std::vector<int> cones,
                     std::string msg) {
    switch (kind) {
      case FailureKind::Rays:
      case FailureKind::FaceCompat: rep.axioms_ok = false; break;
      case FailureKind::Smooth: rep.smooth_ok = false; break;
      case FailureKind::Complete: rep.complete_ok = false; break;
    }
    rep.failures.push_back({kind, std::move(rays), std::move(cones), std::move(msg)});
  };

  // Rays: primitivize, reject zero vectors and duplicates.
  std::vector<LatticeVector> rays;
  rays.reserve(ray_vectors.size());
  bool rays_usable = true;
  for (int i = 0; i < num_rays; ++i) {
    if (ray_vectors[i].is_zero()) {
      fail(FailureKind::Rays, {i}, {}, "ray " + std::to_string(i) + " is the zero vector");
      rays_usable = false;
      rays.push_back(ray_vectors[i]);
    } else {
      rays.push_back(normalize_primitive(ray_vectors[i]).first);
    }
  }
  {
    std::map<LatticeVector, int> seen;
    for (int i = 0; i < num_rays; ++i) {
      auto [it, fresh] = seen.emplace(rays[i], i);
      if (!fresh) {
        fail(FailureKind::Rays, {it->second, i}, {},
             "rays " + std::to_string(it->second) + " and " + std::to_string(i) +
                 " primitivize to the same vector " + rays[i].str());
        rays_usable = false;
      }
    }
  }

  // Cones: canonical form; malformed indices are hard errors.
  std::vector<Cone> cones;
  cones.reserve(max_cone_index_sets.size());
  for (auto& ids : max_cone_index_sets) {
    Cone c = Cone::of(std::move(ids));
    for (int id : c.ray_ids)
      if (id >= num_rays) throw BadIndexError("cone references ray " + std::to_string(id) +
                                              " but only " + std::to_string(num_rays) +
                                              " rays were given");
    cones.push_back(std::move(c));
  }
  const int num_cones = static_cast<int>(cones.size());
  {
    std::map<Cone, int> seen;
    for (int i = 0; i < num_cones; ++i) {
      auto [it, fresh] = seen.emplace(cones[i], i);
      if (!fresh)
        fail(FailureKind::FaceCompat, {}, {it->second, i},
             "maximal cones " + std::to_string(it->second) + " and " + std::to_string(i) +
                 " are identical");
    }
  }
  {
    std::vector<bool> used(num_rays, false);
    for (const Cone& c : cones)
      for (int id : c.ray_ids) used[id] = true;
    for (int i = 0; i < num_rays; ++i)
      if (!used[i])
        fail(FailureKind::Rays, {i}, {},
             "ray " + std::to_string(i) + " does not appear in any maximal cone");
  }

  if (!rays_usable) return {std::nullopt, std::move(rep)};

  // Smoothness: every maximal cone full-dimensional and unimodular.
  std::vector<std::optional<std::vector<LatticeVector>>> geom(num_cones);
  bool all_full_dim = true;
  for (int ci = 0; ci < num_cones; ++ci) {
    const Cone& c = cones[ci];
    if (c.dim() != n) {
      fail(FailureKind::Smooth, {}, {ci},
           "maximal cone " + c.str() + " has " + std::to_string(c.dim()) +
               " rays; expected " + std::to_string(n));
      all_full_dim = false;
      continue;
    }
    std::vector<LatticeVector> gens;
    gens.reserve(c.ray_ids.size());
    for (int id : c.ray_ids) gens.push_back(rays[id]);
    IntMatrix basis = IntMatrix::from_rows(gens);
    std::vector<Int> factors = invariant_factors(basis);
    bool smooth = static_cast<int>(factors.size()) == n &&
                  std::all_of(factors.begin(), factors.end(), [](const Int& d) { return d == 1; });
    if (!smooth) {
      std::ostringstream os;
      os << "cone " << c.str() << " is not smooth (invariant factors [";
      for (size_t i = 0; i < factors.size(); ++i) os << (i ? "," : "") << factors[i];
      os << "])";
      fail(FailureKind::Smooth, {}, {ci}, os.str());
    }
    Int det = basis.determinant();
    if (det != 0) geom[ci] = scaled_dual_rows(basis, det);
  }

  // Fan axioms: every pair of maximal cones meets in the cone on its shared rays.
  for (int i = 0; i < num_cones; ++i) {
    if (!geom[i]) continue;
    for (int j = i + 1; j < num_cones; ++j) {
      if (!geom[j] || cones[i] == cones[j]) continue;
      if (!pair_meets_in_shared_face(rays, cones[i].ray_ids, cones[j].ray_ids, *geom[i],
                                     *geom[j]))
        fail(FailureKind::FaceCompat, {}, {i, j},
             "cones " + cones[i].str() + " and " + cones[j].str() +
                 " intersect outside their shared face");
    }
  }

  // Completeness: every wall in exactly two maximal cones, wall graph connected.
  if (!all_full_dim) {
    fail(FailureKind::Complete, {}, {},
         "completeness not checkable: some maximal cone is not full-dimensional");
  } else {
    auto census = wall_census(cones);
    std::vector<std::vector<int>> adjacency(num_cones);
    for (const auto& [wall_ids, entry] : census) {
      if (entry.cone_indices.size() != 2) {
        fail(FailureKind::Complete, wall_ids, entry.cone_indices,
             "wall {" + join_ints(wall_ids) + "} lies in " +
                 std::to_string(entry.cone_indices.size()) + " maximal cones; expected 2");
      } else {
        adjacency[entry.cone_indices[0]].push_back(entry.cone_indices[1]);
        adjacency[entry.cone_indices[1]].push_back(entry.cone_indices[0]);
      }
    }
    if (rep.complete_ok && num_cones > 0) {
      std::vector<bool> seen(num_cones, false);
      std::queue<int> q;
      q.push(0);
      seen[0] = true;
      int reached = 1;
      while (!q.empty()) {
        int c = q.front();
        q.pop();
        for (int nb : adjacency[c])
          if (!seen[nb]) {
            seen[nb] = true;
            ++reached;
            q.push(nb);
          }
      }
      if (reached != num_cones)
        fail(FailureKind::Complete, {}, {},
             "wall-adjacency graph is disconnected (" + std::to_string(reached) + " of " +
                 std::to_string(num_cones) + " cones reachable)");
    }
  }

  if (!rep.ok()) return {std::nullopt, std::move(rep)};

  std::vector<std::vector<LatticeVector>> dual;
  dual.reserve(geom.size());
  for (auto& g : geom) dual.push_back(std::move(*g));
  BuildResult out;
  out.fan = FanFactory::make(n, std::move(rays), std::move(cones), std::move(dual));
  out.report = std::move(rep);
  return out;
}

Fan build_fan_or_throw(int n, std::vector<LatticeVector> ray_vectors,
                       std::vector<std::vector<int>> max_cone_index_sets) {
  BuildResult r = build_fan(n, std::move(ray_vectors), std::move(max_cone_index_sets));
  if (!r.fan) {
    std::string msg = "fan validation failed";
    if (!r.report.failures.empty()) msg += ": " + r.report.failures.front().message;
    throw Error(msg);
  }
  return std::move(*r.fan);
}

bool is_cone(const Fan& fan, const std::vector<int>& ray_ids) {
  return fan.contains_cone(ray_ids);
}

PointLocation locate_point(const Fan& fan, const RationalVector& point) {
  if (point.dim() != fan.dim()) throw Error("point dimension does not match the fan");
  const auto& cones = fan.max_cones();
  for (size_t ci = 0; ci < cones.size(); ++ci) {
    const auto& dual = fan.dual_basis(static_cast<int>(ci));
    std::vector<Rat> coeffs(dual.size());
    bool inside = true;
    for (size_t p = 0; p < dual.size(); ++p) {
      coeffs[p] = dot(point, dual[p]);
      if (coeffs[p] < 0) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    std::vector<int> face;
    for (size_t p = 0; p < coeffs.size(); ++p)
      if (coeffs[p] > 0) face.push_back(cones[ci].ray_ids[p]);
    return {cones[ci], RationalVector(std::move(coeffs)), Cone::of(std::move(face))};
  }
  throw InternalError("complete fan does not cover point " + point.str());
}

Fan star_subdivide(const Fan& fan, const Cone& target) {
  if (target.dim() < 2)
    throw DimensionTooSmallError("star subdivision target must have dimension >= 2, got " +
                                 std::to_string(target.dim()));
  Cone t = Cone::of(target.ray_ids);
  if (!fan.contains_cone(t.ray_ids))
    throw NotAConeError("star subdivision target " + t.str() + " is not a cone of the fan");

  LatticeVector sum = zero_vector(fan.dim());
  for (int id : t.ray_ids) sum += fan.ray(id);
  // Smooth cones have primitive generator sums; normalize regardless.
  LatticeVector new_ray = normalize_primitive(sum).first;

  std::vector<LatticeVector> rays = fan.rays();
  const int new_id = fan.num_rays();
  rays.push_back(new_ray);

  std::vector<std::vector<int>> sets;
  for (const Cone& c : fan.max_cones()) {
    const bool incident = std::includes(c.ray_ids.begin(), c.ray_ids.end(), t.ray_ids.begin(),
                                        t.ray_ids.end());
    if (!incident) {
      sets.push_back(c.ray_ids);
      continue;
    }
    for (int drop : t.ray_ids) {
      std::vector<int> ids;
      ids.reserve(c.ray_ids.size());
      for (int id : c.ray_ids)
        if (id != drop) ids.push_back(id);
      ids.push_back(new_id);
      sets.push_back(std::move(ids));
    }
  }

  BuildResult r = build_fan(fan.dim(), std::move(rays), std::move(sets));
  if (!r.fan)
    throw InternalError("star subdivision of a valid fan failed re-validation: " +
                        (r.report.failures.empty() ? std::string("?")
                                                   : r.report.failures.front().message));
  return std::move(*r.fan);
}

Fan product(const Fan& a, const Fan& b) {
  const int n = a.dim() + b.dim();
  std::vector<LatticeVector> rays;
  rays.reserve(a.num_rays() + b.num_rays());
  for (const auto& v : a.rays()) {
    std::vector<Int> c(n);
    for (int i = 0; i < a.dim(); ++i) c[i] = v[i];
    rays.emplace_back(std::move(c));
  }
  for (const auto& w : b.rays()) {
    std::vector<Int> c(n);
    for (int i = 0; i < b.dim(); ++i) c[a.dim() + i] = w[i];
    rays.emplace_back(std::move(c));
  }

  std::vector<std::vector<int>> sets;
  sets.reserve(a.max_cones().size() * b.max_cones().size());
  for (const Cone& ca : a.max_cones())
    for (const Cone& cb : b.max_cones()) {
      std::vector<int> ids = ca.ray_ids;
      for (int id : cb.ray_ids) ids.push_back(a.num_rays() + id);
      sets.push_back(std::move(ids));
    }

  BuildResult r = build_fan(n, std::move(rays), std::move(sets));
  if (!r.fan) throw InternalError("product of valid fans failed validation");
  return std::move(*r.fan);
}

int picard_number(const Fan& fan) { return fan.num_rays() - fan.dim(); }

namespace detail {

bool cones_meet_in_shared_face(const std::vector<LatticeVector>& rays, const std::vector<int>& a,
                               const std::vector<int>& b) {
  auto geometry = [&](const std::vector<int>& ids) {
    std::vector<LatticeVector> gens;
    gens.reserve(ids.size());
    for (int id : ids) gens.push_back(rays[id]);
    IntMatrix basis = IntMatrix::from_rows(gens);
    Int det = basis.determinant();
    if (det == 0) throw DependentGeneratorsError();
    return scaled_dual_rows(basis, det);
  };
  Cone ca = Cone::of(a), cb = Cone::of(b);
  return pair_meets_in_shared_face(rays, ca.ray_ids, cb.ray_ids, geometry(ca.ray_ids),
                                   geometry(cb.ray_ids));
}

}  // namespace detail

}  // namespace toric
