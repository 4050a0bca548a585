#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/curves.hpp"

namespace toric {

// Component-count bounds. These are theorems for validated fans, so any
// violation is recorded and flagged as an internal-consistency alarm.
struct BoundsReport {
  int n = 0;
  int rho = 0;
  std::map<int, int> per_degree_counts;  // p -> number of components of degree p+2
  Int bound_i_lhs;                       // sum over p of n_p * (p+2)
  Int bound_i_rhs;                       // n + rho
  bool bound_i_ok = true;
  bool bound_ii_ok = true;   // p+q <= n-2 for every pair of distinct components
  bool bound_iii_ok = true;  // n_p <= 1 whenever 2p >= n-1
  std::vector<std::string> violations;
  bool alarm() const { return !violations.empty(); }
};

struct ConjectureComponentCheck {
  int p = 0;
  Int lhs;  // rho * (p + 1)
  bool ok = true;
  bool equality = false;
};

// The conjectured bound rho*(p+1) <= n(n+1)/2 per component, plus the Mukai
// bounds. A violation of the conjectured bound is a counterexample candidate,
// not an error.
struct ConjectureReport {
  bool applicable = false;  // Fano, n >= 3, and at least one component
  bool fano = false;
  int n = 0;
  int rho = 0;
  Int rhs;  // n(n+1)/2, from n only
  std::optional<Int> iota;
  std::vector<ConjectureComponentCheck> per_component;
  bool mukai_rho_ok = true;   // rho <= 2n, evaluated when Fano
  bool mukai_iota_ok = true;  // rho*(iota-1) <= n, evaluated when Fano
  bool counterexample_candidate = false;
};

enum class DegNClass { ProductPn1P1, SplitBundle, BlowupOfProduct, NotApplicable };
std::string to_string(DegNClass k);

// Classification of Fano fans carrying an order-n zero-sum collection, by the
// case split on the rays outside the hyperplane spanned by the collection.
struct DegNClassification {
  DegNClass kind = DegNClass::NotApplicable;
  std::optional<PrimitiveCollection> witness;
  std::vector<int> outside_rays;
  std::vector<std::string> notes;
  std::vector<std::string> alarms;  // rho outside {2,3} etc.
};

struct AnalysisReport {
  std::string name;
  int n = 0;
  int num_rays = 0;
  int rho = 0;
  ValidationReport validation;
  bool projective = false;
  std::optional<RationalVector> ample_witness;
  bool fano = false;
  std::optional<Int> iota;
  std::vector<PrimitiveCollection> collections;
  std::vector<MinimalComponent> components;
  BoundsReport bounds;
  ConjectureReport conjecture;
  DegNClassification classification;
};

BoundsReport check_bounds(const Fan& fan);
ConjectureReport check_conjecture(const Fan& fan);
DegNClassification classify_degree_n(const Fan& fan);
AnalysisReport summarize(const Fan& fan, const std::string& name = "");

}  // namespace toric
