#include "toric/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

std::string to_string(DegNClass k) {
  switch (k) {
    case DegNClass::ProductPn1P1: return "ProductPn1P1";
    case DegNClass::SplitBundle: return "SplitBundle";
    case DegNClass::BlowupOfProduct: return "BlowupOfProduct";
    case DegNClass::NotApplicable: return "NotApplicable";
  }
  return "?";
}

BoundsReport check_bounds(const Fan& fan) {
  BoundsReport rep;
  rep.n = fan.dim();
  rep.rho = picard_number(fan);
  const auto components = minimal_components(fan);

  rep.bound_i_lhs = 0;
  for (const MinimalComponent& mc : components) {
    rep.per_degree_counts[mc.p] += 1;
    rep.bound_i_lhs += mc.order;  // each component of degree p+2 contributes p+2
  }
  rep.bound_i_rhs = Int(rep.n) + rep.rho;
  rep.bound_i_ok = rep.bound_i_lhs <= rep.bound_i_rhs;
  if (!rep.bound_i_ok) {
    std::ostringstream os;
    os << "bound (i) violated: sum n_p(p+2) = " << rep.bound_i_lhs << " > " << rep.bound_i_rhs
       << " = n + rho";
    rep.violations.push_back(os.str());
  }

  // (ii) two distinct components of degrees p+2 and q+2 force p+q <= n-2.
  for (size_t i = 0; i < components.size(); ++i)
    for (size_t j = i + 1; j < components.size(); ++j) {
      const int p = components[i].p, q = components[j].p;
      if (p + q > rep.n - 2) {
        rep.bound_ii_ok = false;
        std::ostringstream os;
        os << "bound (ii) violated: components of degrees " << p + 2 << " and " << q + 2
           << " give p+q = " << p + q << " > " << rep.n - 2;
        rep.violations.push_back(os.str());
      }
    }

  // (iii) n_p <= 1 once 2p >= n-1.
  for (const auto& [p, count] : rep.per_degree_counts) {
    if (2 * p >= rep.n - 1 && count > 1) {
      rep.bound_iii_ok = false;
      std::ostringstream os;
      os << "bound (iii) violated: n_" << p << " = " << count << " with p >= (n-1)/2";
      rep.violations.push_back(os.str());
    }
  }
  return rep;
}

ConjectureReport check_conjecture(const Fan& fan) {
  ConjectureReport rep;
  rep.n = fan.dim();
  rep.rho = picard_number(fan);
  rep.rhs = Int(rep.n) * (rep.n + 1) / 2;
  rep.fano = is_fano(fan);

  const auto components = minimal_components(fan);
  rep.applicable = rep.fano && rep.n >= 3 && !components.empty();

  for (const MinimalComponent& mc : components) {
    ConjectureComponentCheck check;
    check.p = mc.p;
    check.lhs = Int(rep.rho) * (mc.p + 1);
    check.ok = check.lhs <= rep.rhs;
    check.equality = check.lhs == rep.rhs;
    rep.per_component.push_back(check);
  }

  if (rep.fano) {
    rep.iota = pseudo_index(fan);
    rep.mukai_rho_ok = rep.rho <= 2 * rep.n;
    rep.mukai_iota_ok = Int(rep.rho) * (*rep.iota - 1) <= rep.n;
  }

  rep.counterexample_candidate =
      rep.applicable && std::any_of(rep.per_component.begin(), rep.per_component.end(),
                                    [](const auto& c) { return !c.ok; });
  return rep;
}

DegNClassification classify_degree_n(const Fan& fan) {
  DegNClassification out;
  const int n = fan.dim();
  if (n < 3) {
    out.notes.push_back("dimension below 3");
    return out;
  }
  if (!is_fano(fan)) {
    out.notes.push_back("not Fano");
    return out;
  }
  const auto components = minimal_components(fan);
  const MinimalComponent* witness = nullptr;
  for (const MinimalComponent& mc : components)
    if (mc.order == n) witness = &mc;
  if (!witness) {
    out.notes.push_back("no minimal component of degree n");
    return out;
  }
  out.witness = witness->collection;

  for (int id = 0; id < fan.num_rays(); ++id)
    if (!std::binary_search(witness->collection.ray_ids.begin(),
                            witness->collection.ray_ids.end(), id))
      out.outside_rays.push_back(id);
  const int rho = picard_number(fan);
  out.notes.push_back("rho = " + std::to_string(rho) + ", " +
                      std::to_string(out.outside_rays.size()) +
                      " rays outside the spanning hyperplane");
  if (rho != static_cast<int>(out.outside_rays.size()))
    out.alarms.push_back("outside-ray count does not equal rho");

  if (rho < 2 || rho > 3) {
    out.alarms.push_back("rho = " + std::to_string(rho) +
                         " outside {2,3}; contradicts the classification");
    return out;
  }

  auto describe_pair_sum = [&](int a, int b) -> std::string {
    LatticeVector s = fan.ray(a) + fan.ray(b);
    if (s.is_zero()) return "zero";
    for (int id : witness->collection.ray_ids)
      if (fan.ray(id) == s) return "collection ray " + std::to_string(id);
    return "vector " + s.str();
  };

  if (rho == 2) {
    const int y = out.outside_rays[0], z = out.outside_rays[1];
    const std::string sum = describe_pair_sum(y, z);
    out.notes.push_back("outside rays " + std::to_string(y) + "," + std::to_string(z) +
                        " sum to " + sum);
    if (sum == "zero") {
      out.kind = DegNClass::ProductPn1P1;
    } else if (sum.rfind("collection ray", 0) == 0) {
      out.kind = DegNClass::SplitBundle;
    } else {
      out.alarms.push_back("rho = 2 but the outside pair sums neither to zero nor to a "
                           "collection ray");
    }
    return out;
  }

  // rho == 3: a blow-up of P^{n-2} on P^{n-1} x P^1. Record the pair pattern.
  out.kind = DegNClass::BlowupOfProduct;
  bool zero_pair = false;
  for (size_t i = 0; i < out.outside_rays.size(); ++i)
    for (size_t j = i + 1; j < out.outside_rays.size(); ++j) {
      const std::string sum = describe_pair_sum(out.outside_rays[i], out.outside_rays[j]);
      out.notes.push_back("outside rays " + std::to_string(out.outside_rays[i]) + "," +
                          std::to_string(out.outside_rays[j]) + " sum to " + sum);
      if (sum == "zero") zero_pair = true;
    }
  if (!zero_pair)
    out.alarms.push_back("rho = 3 without an opposite pair among the outside rays");
  return out;
}

AnalysisReport summarize(const Fan& fan, const std::string& name) {
  AnalysisReport rep;
  rep.name = name;
  rep.n = fan.dim();
  rep.num_rays = fan.num_rays();
  rep.rho = picard_number(fan);
  // Fans exist only after validation, so the flags are all set.
  rep.validation = ValidationReport{};

  rep.ample_witness = projective_witness(fan);
  rep.projective = rep.ample_witness.has_value();
  rep.fano = is_fano(fan);
  if (rep.fano) rep.iota = pseudo_index(fan);

  rep.collections = primitive_collections(fan);
  for (PrimitiveCollection& pc : rep.collections) {
    if (!pc.zero_sum()) continue;
    MinimalComponent mc;
    mc.collection = pc;
    mc.order = pc.order;
    mc.degree = pc.order;
    mc.p = pc.order - 2;
    mc.vmrt_dim = mc.p;
    mc.locus_dim = mc.p + 1;
    rep.components.push_back(std::move(mc));
  }

  rep.bounds = check_bounds(fan);
  rep.conjecture = check_conjecture(fan);
  rep.classification = classify_degree_n(fan);
  return rep;
}

}  // namespace toric
