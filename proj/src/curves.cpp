#include "toric/curves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace toric {

namespace {

std::string ids_str(const std::vector<int>& ids) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  os << '}';
  return os.str();
}

}  // namespace

PrimitiveCollection primitive_relation(const Fan& fan, const std::vector<int>& ray_ids) {
  Cone collection = Cone::of(ray_ids);
  const auto& ids = collection.ray_ids;
  const int k = collection.dim();

  if (fan.contains_cone(ids))
    throw NotPrimitiveError(ids_str(ids) + " generates a cone of the fan");
  for (int drop : ids) {
    std::vector<int> sub;
    sub.reserve(ids.size() - 1);
    for (int id : ids)
      if (id != drop) sub.push_back(id);
    if (!fan.contains_cone(sub))
      throw NotPrimitiveError(ids_str(ids) + " is not minimal: subset " + ids_str(sub) +
                              " is already a non-face");
  }

  PrimitiveCollection pc;
  pc.ray_ids = ids;
  pc.order = k;
  pc.sum = zero_vector(fan.dim());
  for (int id : ids) pc.sum += fan.ray(id);

  if (pc.sum.is_zero()) {
    pc.relation_cone = Cone{};
    pc.degree = k;
    return pc;
  }

  PointLocation loc = locate_point(fan, to_rational(pc.sum));
  pc.relation_cone = loc.supporting_face;
  Int coeff_sum = 0;
  for (int id : loc.supporting_face.ray_ids) {
    // Coefficient of this ray inside the located maximal cone.
    const auto& cone_ids = loc.max_cone.ray_ids;
    const auto pos = std::find(cone_ids.begin(), cone_ids.end(), id) - cone_ids.begin();
    const Rat& c = loc.coefficients[static_cast<int>(pos)];
    if (!is_integral(c) || c <= 0)
      throw NonIntegralRelationError("relation coefficient " + c.str() + " for ray " +
                                     std::to_string(id) + " in collection " + ids_str(ids));
    pc.relation_coeffs.push_back(numerator(c));
    coeff_sum += numerator(c);
  }
  pc.degree = Int(k) - coeff_sum;
  return pc;
}

std::vector<PrimitiveCollection> primitive_collections(const Fan& fan) {
  // Candidates are F + {v} for a face F and a non-member ray v; every minimal
  // non-face arises this way because dropping any element leaves a face.
  std::set<std::vector<int>> found;
  std::set<std::vector<int>> rejected;
  const int num_rays = fan.num_rays();
  const auto& faces = fan.faces();

  for (const auto& face : faces) {
    for (int v = 0; v < num_rays; ++v) {
      if (std::binary_search(face.begin(), face.end(), v)) continue;
      std::vector<int> cand = face;
      cand.insert(std::lower_bound(cand.begin(), cand.end(), v), v);
      if (faces.count(cand) || found.count(cand) || rejected.count(cand)) continue;
      bool minimal = true;
      for (size_t drop = 0; drop < cand.size() && minimal; ++drop) {
        std::vector<int> sub;
        sub.reserve(cand.size() - 1);
        for (size_t p = 0; p < cand.size(); ++p)
          if (p != drop) sub.push_back(cand[p]);
        if (!faces.count(sub)) minimal = false;
      }
      if (minimal)
        found.insert(std::move(cand));
      else
        rejected.insert(std::move(cand));
    }
  }

  std::vector<std::vector<int>> ordered(found.begin(), found.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<PrimitiveCollection> out;
  out.reserve(ordered.size());
  for (const auto& ids : ordered) out.push_back(primitive_relation(fan, ids));
  return out;
}

std::vector<MinimalComponent> minimal_components(const Fan& fan) {
  std::vector<MinimalComponent> out;
  for (PrimitiveCollection& pc : primitive_collections(fan)) {
    if (!pc.zero_sum()) continue;
    MinimalComponent mc;
    mc.order = pc.order;
    mc.degree = pc.order;
    mc.p = pc.order - 2;
    mc.vmrt_dim = mc.p;
    mc.locus_dim = mc.p + 1;
    mc.collection = std::move(pc);
    out.push_back(std::move(mc));
  }
  // Distinct zero-sum collections are pairwise disjoint on legal fans.
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(out[i].collection.ray_ids.begin(), out[i].collection.ray_ids.end(),
                            out[j].collection.ray_ids.begin(), out[j].collection.ray_ids.end(),
                            std::back_inserter(common));
      if (!common.empty())
        throw InternalError("zero-sum collections " + ids_str(out[i].collection.ray_ids) +
                            " and " + ids_str(out[j].collection.ray_ids) + " overlap");
    }
  return out;
}

std::vector<WallCurve> wall_curves(const Fan& fan) {
  std::vector<WallCurve> out;
  out.reserve(fan.walls().size());
  for (const Wall& w : fan.walls()) {
    std::vector<LatticeVector> wall_gens;
    wall_gens.reserve(w.ray_ids.size());
    for (int id : w.ray_ids) wall_gens.push_back(fan.ray(id));
    // u0 + sum a_i u_i + un = 0, so the a_i solve sum a_i u_i = -(u0 + un).
    LatticeVector borders = fan.ray(w.left_opposite) + fan.ray(w.right_opposite);
    auto coeffs = solve_in_basis(wall_gens, to_rational(-borders));
    if (!coeffs || !coeffs->is_integral())
      throw InternalError("wall " + ids_str(w.ray_ids) + " has no integral relation");

    WallCurve wc;
    wc.wall = w;
    Int coeff_sum = 0;
    bool standard = true;
    for (int i = 0; i < coeffs->dim(); ++i) {
      Int a = numerator((*coeffs)[i]);
      coeff_sum += a;
      if (a != 0 && a != 1) standard = false;
      wc.relation_coeffs.push_back(std::move(a));
    }
    wc.anticanonical_degree = Int(2) + coeff_sum;
    wc.splitting_type = wc.relation_coeffs;
    std::sort(wc.splitting_type.begin(), wc.splitting_type.end(), std::greater<Int>());
    wc.is_standard = standard;
    out.push_back(std::move(wc));
  }
  return out;
}

StrictLPSystem projectivity_system(const Fan& fan) {
  // One variable per ray; a divisor is ample iff it is positive on every
  // invariant curve, whose class is read off the wall relation.
  StrictLPSystem sys;
  sys.num_vars = fan.num_rays();
  std::set<std::vector<Rat>> distinct;
  for (const WallCurve& wc : wall_curves(fan)) {
    RationalVector row = rational_zero(sys.num_vars);
    row[wc.wall.left_opposite] += 1;
    row[wc.wall.right_opposite] += 1;
    for (size_t i = 0; i < wc.wall.ray_ids.size(); ++i)
      row[wc.wall.ray_ids[i]] += Rat(wc.relation_coeffs[i]);
    if (distinct.insert(row.coords()).second) sys.rows.push_back(std::move(row));
  }
  return sys;
}

std::optional<RationalVector> projective_witness(const Fan& fan) {
  return lp_strict_feasible(projectivity_system(fan));
}

bool is_projective(const Fan& fan) { return projective_witness(fan).has_value(); }

bool is_fano(const Fan& fan) {
  bool walls_positive = true;
  for (const WallCurve& wc : wall_curves(fan))
    if (wc.anticanonical_degree <= 0) {
      walls_positive = false;
      break;
    }
  const bool by_walls = walls_positive && is_projective(fan);

  bool by_collections = true;
  for (const PrimitiveCollection& pc : primitive_collections(fan))
    if (pc.degree <= 0) {
      by_collections = false;
      break;
    }

  if (by_walls != by_collections)
    throw CriterionMismatchError(
        "invariant-curve criterion says " + std::string(by_walls ? "Fano" : "not Fano") +
        " but the primitive-relation criterion says " +
        std::string(by_collections ? "Fano" : "not Fano"));
  return by_walls;
}

Int pseudo_index(const Fan& fan) {
  if (!is_fano(fan)) throw NotFanoError("pseudo-index is defined for Fano fans only");
  std::optional<Int> min;
  for (const WallCurve& wc : wall_curves(fan))
    if (!min || wc.anticanonical_degree < *min) min = wc.anticanonical_degree;
  if (!min) throw InternalError("complete fan has no walls");
  return *min;
}

}  // namespace toric
