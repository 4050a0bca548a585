#pragma once

#include <optional>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// Homogeneous strict-inequality system: every row demands row . x > 0.
struct StrictLPSystem {
  int num_vars = 0;
  std::vector<RationalVector> rows;
};

struct LPFeasibility {
  std::optional<RationalVector> witness;   // present iff the system is feasible
  std::optional<std::vector<Rat>> farkas;  // y >= 0 with yA = 0 and y.b = 1 otherwise
  bool feasible() const { return witness.has_value(); }
};

// Decides whether { x free : rows . x >= rhs } is nonempty, by an exact
// rational phase-I simplex (Bland's rule) on the Farkas alternative. The
// witness or certificate is re-verified against the input before returning.
LPFeasibility lp_feasible_geq(const std::vector<RationalVector>& rows,
                              const std::vector<Rat>& rhs, int num_vars);

// Strictness is reduced to ">= 1" right-hand sides, valid because the system
// is homogeneous. The returned witness exactly satisfies every strict row;
// the empty system is feasible with witness 0.
std::optional<RationalVector> lp_strict_feasible(const StrictLPSystem& sys);

}  // namespace toric
