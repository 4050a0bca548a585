#include "toric/builtins.hpp"

#include <algorithm>

namespace toric {

namespace {

constexpr int kMaxParam = 16;  // desk-scale guard

Fan make_projective_space(int n) {
  std::vector<LatticeVector> rays;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> c(n);
    c[i] = 1;
    rays.emplace_back(std::move(c));
  }
  std::vector<Int> last(n, Int(-1));
  rays.emplace_back(std::move(last));

  std::vector<std::vector<int>> cones;
  for (int drop = 0; drop <= n; ++drop) {
    std::vector<int> ids;
    for (int i = 0; i <= n; ++i)
      if (i != drop) ids.push_back(i);
    cones.push_back(std::move(ids));
  }
  return build_fan_or_throw(n, std::move(rays), std::move(cones));
}

Fan make_del_pezzo_s3() {
  // Hexagonal fan: P^2 star-subdivided at its three 2-cones.
  std::vector<LatticeVector> rays = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
  std::vector<std::vector<int>> cones;
  for (int i = 0; i < 6; ++i) cones.push_back({i, (i + 1) % 6});
  return build_fan_or_throw(2, std::move(rays), std::move(cones));
}

// P(O^{n-1} + O(1)) over P^1: a P^{n-1}-bundle whose fiber rays are
// e_2..e_n and -(e_2+...+e_n), with base rays e_1 and -e_1+e_2.
Fan make_split_bundle(int n) {
  std::vector<LatticeVector> rays;
  {
    std::vector<Int> c(n);
    c[0] = 1;
    rays.emplace_back(std::move(c));  // id 0: base ray
  }
  for (int i = 1; i < n; ++i) {
    std::vector<Int> c(n);
    c[i] = 1;
    rays.emplace_back(std::move(c));  // ids 1..n-1: fiber rays
  }
  {
    std::vector<Int> c(n);
    for (int i = 1; i < n; ++i) c[i] = -1;
    rays.emplace_back(std::move(c));  // id n: last fiber ray
  }
  {
    std::vector<Int> c(n);
    c[0] = -1;
    c[1] = 1;
    rays.emplace_back(std::move(c));  // id n+1: twisted base ray
  }

  std::vector<std::vector<int>> cones;
  for (int base : {0, n + 1}) {
    for (int omit = 1; omit <= n; ++omit) {
      std::vector<int> ids = {base};
      for (int f = 1; f <= n; ++f)
        if (f != omit) ids.push_back(f);
      cones.push_back(std::move(ids));
    }
  }
  return build_fan_or_throw(n, std::move(rays), std::move(cones));
}

// Oda's smooth complete non-projective 3-fold: the tetrahedron fan of P^3
// with the three lower edges subdivided and the side quadrilaterals
// triangulated cyclically. Several symmetric triangulations realize the same
// constraints; this is the one the library pins (see README).
Fan make_oda_3fold() {
  std::vector<LatticeVector> rays = {
      {1, 0, 0},     // 0: e1
      {0, 1, 0},     // 1: e2
      {0, 0, 1},     // 2: e3
      {-1, -1, -1},  // 3: e4
      {-1, -1, 0},   // 4: e5 = e3 + e4
      {0, -1, -1},   // 5: e6 = e1 + e4
      {-1, 0, -1},   // 6: e7 = e2 + e4
  };
  std::vector<std::vector<int>> cones = {
      {0, 1, 2},  // top facet
      {3, 5, 6}, {0, 1, 5}, {1, 5, 6},  // facet e1,e2,e4 with diagonal e2-e6
      {3, 4, 5}, {0, 2, 4}, {0, 4, 5},  // facet e1,e3,e4 with diagonal e1-e5
      {3, 4, 6}, {1, 2, 6}, {2, 4, 6},  // facet e2,e3,e4 with diagonal e3-e7
  };
  return build_fan_or_throw(3, std::move(rays), std::move(cones));
}

int require_param(const std::string& name, std::optional<int> param, int min) {
  if (!param) throw UnknownBuiltinError("builtin '" + name + "' needs --param");
  if (*param < min || *param > kMaxParam)
    throw UnknownBuiltinError("builtin '" + name + "' expects a parameter in [" +
                              std::to_string(min) + "," + std::to_string(kMaxParam) + "]");
  return *param;
}

void forbid_param(const std::string& name, std::optional<int> param) {
  if (param) throw UnknownBuiltinError("builtin '" + name + "' takes no parameter");
}

}  // namespace

const std::vector<BuiltinInfo>& builtin_catalog() {
  static const std::vector<BuiltinInfo> catalog = {
      {"projective_space", true, "P^n; param = dimension n >= 1"},
      {"del_pezzo_s3", false, "degree-6 del Pezzo surface: P^2 blown up at three points"},
      {"split_bundle", true, "P(O^{n-1}+O(1)) over P^1; param = dimension n >= 2"},
      {"oda_3fold", false, "Oda's smooth complete non-projective 3-fold"},
      {"oda_blowup_e1e3", false, "oda_3fold blown up along the invariant curve on rays 0,2"},
      {"oda_blowup_e3e7", false, "oda_3fold blown up along the invariant curve on rays 2,6"},
  };
  return catalog;
}

Fan builtin_fan(const std::string& name, std::optional<int> param) {
  if (name == "projective_space") return make_projective_space(require_param(name, param, 1));
  if (name == "split_bundle") return make_split_bundle(require_param(name, param, 2));
  if (name == "del_pezzo_s3") {
    forbid_param(name, param);
    return make_del_pezzo_s3();
  }
  if (name == "oda_3fold") {
    forbid_param(name, param);
    return make_oda_3fold();
  }
  if (name == "oda_blowup_e1e3") {
    forbid_param(name, param);
    return star_subdivide(make_oda_3fold(), Cone::of({0, 2}));
  }
  if (name == "oda_blowup_e3e7") {
    forbid_param(name, param);
    return star_subdivide(make_oda_3fold(), Cone::of({2, 6}));
  }
  throw UnknownBuiltinError("unknown builtin fan '" + name + "'");
}

}  // namespace toric
