#include "toric/linprog.hpp"

#include <algorithm>

namespace toric {

namespace {

// Phase-I simplex for  minimize sum(artificials)  s.t.  E y + a = g, y,a >= 0,
// dense exact-rational tableau, Bland's rule on all columns (no cycling).
class PhaseOne {
 public:
  PhaseOne(std::vector<std::vector<Rat>> eq, std::vector<Rat> rhs)
      : nrows_(static_cast<int>(eq.size())),
        nstruct_(nrows_ > 0 ? static_cast<int>(eq[0].size()) : 0),
        t_(std::move(eq)),
        rhs_(std::move(rhs)) {
    // Normalize signs so every right-hand side is nonnegative.
    for (int i = 0; i < nrows_; ++i) {
      if (rhs_[i] < 0) {
        rhs_[i] = -rhs_[i];
        for (auto& v : t_[i]) v = -v;
      }
    }
    // Append the artificial identity block.
    for (int i = 0; i < nrows_; ++i) {
      t_[i].resize(nstruct_ + nrows_);
      t_[i][nstruct_ + i] = 1;
    }
    ncols_ = nstruct_ + nrows_;
    basis_.resize(nrows_);
    for (int i = 0; i < nrows_; ++i) basis_[i] = nstruct_ + i;
    // Reduced costs with the initial all-artificial basis (multipliers = 1).
    z_.assign(ncols_, Rat(0));
    for (int j = 0; j < ncols_; ++j) {
      Rat colsum = 0;
      for (int i = 0; i < nrows_; ++i) colsum += t_[i][j];
      z_[j] = cost(j) - colsum;
    }
  }

  void solve() {
    // Bland's rule terminates; the cap is only a tripwire against bugs.
    for (long iter = 0; iter < 1000000; ++iter) {
      int enter = -1;
      for (int j = 0; j < ncols_; ++j)
        if (z_[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return;  // optimal

      int leave = -1;
      Rat best_ratio = 0;
      for (int i = 0; i < nrows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = rhs_[i] / t_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0)
        throw InternalError("phase-I simplex unbounded; objective is bounded below by 0");
      pivot(leave, enter);
    }
    throw InternalError("phase-I simplex failed to terminate");
  }

  Rat objective() const {
    Rat obj = 0;
    for (int i = 0; i < nrows_; ++i)
      if (basis_[i] >= nstruct_) obj += rhs_[i];
    return obj;
  }

  std::vector<Rat> structural_solution() const {
    std::vector<Rat> y(nstruct_, Rat(0));
    for (int i = 0; i < nrows_; ++i)
      if (basis_[i] < nstruct_) y[basis_[i]] = rhs_[i];
    return y;
  }

  // Simplex multipliers, read off the artificial columns (cost 1 each).
  std::vector<Rat> multipliers() const {
    std::vector<Rat> pi(nrows_);
    for (int i = 0; i < nrows_; ++i) pi[i] = Rat(1) - z_[nstruct_ + i];
    return pi;
  }

 private:
  Rat cost(int j) const { return j < nstruct_ ? Rat(0) : Rat(1); }

  void pivot(int row, int col) {
    const Rat p = t_[row][col];
    for (auto& v : t_[row]) v /= p;
    rhs_[row] /= p;
    for (int i = 0; i < nrows_; ++i) {
      if (i == row || t_[i][col] == 0) continue;
      const Rat f = t_[i][col];
      for (int j = 0; j < ncols_; ++j) t_[i][j] -= f * t_[row][j];
      rhs_[i] -= f * rhs_[row];
    }
    if (z_[col] != 0) {
      const Rat f = z_[col];
      for (int j = 0; j < ncols_; ++j) z_[j] -= f * t_[row][j];
    }
    basis_[row] = col;
  }

  int nrows_, nstruct_, ncols_ = 0;
  std::vector<std::vector<Rat>> t_;
  std::vector<Rat> rhs_;
  std::vector<Rat> z_;
  std::vector<int> basis_;
};

}  // namespace

LPFeasibility lp_feasible_geq(const std::vector<RationalVector>& rows,
                              const std::vector<Rat>& rhs, int num_vars) {
  const int m = static_cast<int>(rows.size());
  if (static_cast<int>(rhs.size()) != m) throw Error("rhs size does not match row count");
  for (const auto& r : rows)
    if (r.dim() != num_vars) throw Error("row width does not match num_vars");

  LPFeasibility out;
  if (m == 0) {
    out.witness = rational_zero(num_vars);
    return out;
  }

  // Farkas alternative: A x >= b is infeasible exactly when some y >= 0 has
  // yA = 0 and y.b = 1. Solve for such y by phase-I on the equality system.
  std::vector<std::vector<Rat>> eq(num_vars + 1, std::vector<Rat>(m));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < num_vars; ++i) eq[i][j] = rows[j][i];
    eq[num_vars][j] = rhs[j];
  }
  std::vector<Rat> g(num_vars + 1, Rat(0));
  g[num_vars] = 1;

  PhaseOne sim(std::move(eq), std::move(g));
  sim.solve();

  if (sim.objective() == 0) {
    std::vector<Rat> y = sim.structural_solution();
    // Re-verify the certificate exactly.
    Rat ydotb = 0;
    std::vector<Rat> combo(num_vars, Rat(0));
    for (int j = 0; j < m; ++j) {
      if (y[j] < 0) throw InternalError("negative multiplier in Farkas certificate");
      for (int i = 0; i < num_vars; ++i) combo[i] += y[j] * rows[j][i];
      ydotb += y[j] * rhs[j];
    }
    for (const Rat& v : combo)
      if (v != 0) throw InternalError("Farkas certificate does not annihilate the rows");
    if (ydotb != 1) throw InternalError("Farkas certificate has wrong right-hand value");
    out.farkas = std::move(y);
    return out;
  }

  // Infeasible alternative: the optimal multipliers give A.(-u/t) >= b.
  std::vector<Rat> pi = sim.multipliers();
  const Rat t = pi[num_vars];
  if (t != sim.objective() || t <= 0)
    throw InternalError("simplex multipliers inconsistent with the optimum");
  std::vector<Rat> x(num_vars);
  for (int i = 0; i < num_vars; ++i) x[i] = -pi[i] / t;
  RationalVector witness(std::move(x));
  for (int j = 0; j < m; ++j)
    if (dot(witness, rows[j]) < rhs[j])
      throw InternalError("LP witness fails re-verification");
  out.witness = std::move(witness);
  return out;
}

std::optional<RationalVector> lp_strict_feasible(const StrictLPSystem& sys) {
  std::vector<Rat> ones(sys.rows.size(), Rat(1));
  LPFeasibility fs = lp_feasible_geq(sys.rows, ones, sys.num_vars);
  if (!fs.feasible()) return std::nullopt;
  // The homogenized witness must satisfy every original strict row.
  for (const auto& row : sys.rows)
    if (dot(*fs.witness, row) <= 0)
      throw InternalError("strict LP witness fails re-verification");
  return fs.witness;
}

}  // namespace toric
