#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

struct BuiltinInfo {
  std::string name;
  bool takes_param = false;
  std::string description;
};

const std::vector<BuiltinInfo>& builtin_catalog();

// Known fans:
//   projective_space(n)  n >= 1
//   del_pezzo_s3         the degree-6 del Pezzo surface (P^2 blown up at 3 points)
//   split_bundle(n)      P(O^{n-1} + O(1)) over P^1, n >= 2
//   oda_3fold            Oda's smooth complete non-projective 3-fold
//   oda_blowup_e1e3      oda_3fold blown up along the cone on rays 0,2
//   oda_blowup_e3e7      oda_3fold blown up along the cone on rays 2,6
// Throws UnknownBuiltinError for anything else or for bad parameters.
Fan builtin_fan(const std::string& name, std::optional<int> param = std::nullopt);

}  // namespace toric
