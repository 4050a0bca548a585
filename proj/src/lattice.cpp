#include "toric/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

LatticeVector::LatticeVector(std::initializer_list<long long> coords) {
  c_.reserve(coords.size());
  for (long long v : coords) c_.emplace_back(v);
}

bool LatticeVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v == 0; });
}

Int LatticeVector::content() const {
  Int g = 0;
  for (const Int& v : c_) g = gcd(g, v);
  return g;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ')';
  return os.str();
}

LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }

LatticeVector operator-(const LatticeVector& a) {
  std::vector<Int> c(a.coords());
  for (Int& v : c) v = -v;
  return LatticeVector(std::move(c));
}

LatticeVector operator*(const Int& s, LatticeVector v) {
  for (int i = 0; i < v.dim(); ++i) v[i] *= s;
  return v;
}

Int dot(const LatticeVector& a, const LatticeVector& b) {
  Int s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

LatticeVector zero_vector(int dim) {
  return LatticeVector(std::vector<Int>(static_cast<size_t>(dim)));
}

bool RationalVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
}

bool RationalVector::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return toric::is_integral(v); });
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

std::string RationalVector::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ')';
  return os.str();
}

RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }

RationalVector operator*(const Rat& s, RationalVector v) {
  for (int i = 0; i < v.dim(); ++i) v[i] *= s;
  return v;
}

Rat dot(const RationalVector& a, const RationalVector& b) {
  Rat s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RationalVector& a, const LatticeVector& b) {
  Rat s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

RationalVector to_rational(const LatticeVector& v) {
  std::vector<Rat> c;
  c.reserve(static_cast<size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) c.emplace_back(v[i]);
  return RationalVector(std::move(c));
}

RationalVector rational_zero(int dim) {
  return RationalVector(std::vector<Rat>(static_cast<size_t>(dim)));
}

IntMatrix::IntMatrix(int rows, int cols)
    : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

IntMatrix IntMatrix::from_rows(const std::vector<LatticeVector>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? rows[0].dim() : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (rows[i].dim() != c) throw Error("ragged rows in matrix");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Int IntMatrix::determinant() const {
  if (r_ != c_) throw Error("determinant of a non-square matrix");
  const int n = r_;
  if (n == 0) return 1;
  IntMatrix m(*this);
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        // Bareiss update: exact division by the previous pivot.
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

IntMatrix IntMatrix::cofactor_matrix() const {
  if (r_ != c_) throw Error("cofactors of a non-square matrix");
  const int n = r_;
  IntMatrix cof(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int a = 0, mi = 0; a < n; ++a) {
        if (a == i) continue;
        for (int b = 0, mj = 0; b < n; ++b) {
          if (b == j) continue;
          minor.at(mi, mj) = at(a, b);
          ++mj;
        }
        ++mi;
      }
      Int d = minor.determinant();
      cof.at(i, j) = ((i + j) % 2 == 0) ? d : Int(-d);
    }
  }
  return cof;
}

std::pair<LatticeVector, Int> normalize_primitive(const LatticeVector& v) {
  Int g = v.content();
  if (g == 0) throw ZeroVectorError();
  std::vector<Int> c(v.coords());
  for (Int& x : c) x /= g;
  return {LatticeVector(std::move(c)), g};
}

std::vector<Int> invariant_factors(IntMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  const int steps = std::min(rows, cols);
  std::vector<Int> diag;
  int r = 0;
  auto swap_rows = [&](int a, int b) {
    for (int j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
  };
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
  };
  while (r < steps) {
    // Smallest-magnitude nonzero pivot in the trailing block.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = r; i < rows; ++i)
      for (int j = r; j < cols; ++j) {
        const Int& v = m.at(i, j);
        if (v != 0 && (pi < 0 || abs_int(v) < best)) {
          pi = i;
          pj = j;
          best = abs_int(v);
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != r) swap_rows(pi, r);
    if (pj != r) swap_cols(pj, r);

    // Clear row r and column r by euclidean steps; a nonzero remainder is
    // strictly smaller than the pivot, so swapping it up terminates.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m.at(i, r) == 0) continue;
        Int q = m.at(i, r) / m.at(r, r);
        for (int j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(r, j);
        if (m.at(i, r) != 0) {
          swap_rows(i, r);
          clean = false;
        }
      }
      for (int j = r + 1; j < cols; ++j) {
        if (m.at(r, j) == 0) continue;
        Int q = m.at(r, j) / m.at(r, r);
        for (int i = 0; i < rows; ++i) m.at(i, j) -= q * m.at(i, r);
        if (m.at(r, j) != 0) {
          swap_cols(j, r);
          clean = false;
        }
      }
    }

    // Divisibility: fold a bad entry's row into row r and redo the pivot.
    bool bumped = false;
    for (int i = r + 1; i < rows && !bumped; ++i)
      for (int j = r + 1; j < cols && !bumped; ++j)
        if (m.at(i, j) % m.at(r, r) != 0) {
          for (int jj = 0; jj < cols; ++jj) m.at(r, jj) += m.at(i, jj);
          bumped = true;
        }
    if (bumped) continue;

    diag.push_back(abs_int(m.at(r, r)));
    ++r;
  }
  return diag;
}

std::optional<RationalVector> solve_in_basis(const std::vector<LatticeVector>& generators,
                                             const RationalVector& target) {
  const int k = static_cast<int>(generators.size());
  const int n = target.dim();
  for (const auto& g : generators)
    if (g.dim() != n) throw Error("generator dimension does not match target");
  if (k == 0) {
    if (target.is_zero()) return RationalVector{};
    return std::nullopt;
  }

  // Augmented column system: columns are the generators, last column is the
  // target; reduced by exact Gauss-Jordan elimination.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = Rat(generators[j][i]);
    a[i][k] = target[i];
  }

  std::vector<int> pivot_row(k, -1);
  int rank = 0;
  for (int col = 0; col < k && rank < n; ++col) {
    int pr = -1;
    for (int i = rank; i < n; ++i)
      if (a[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[pr], a[rank]);
    const Rat p = a[rank][col];
    for (auto& x : a[rank]) x /= p;
    for (int i = 0; i < n; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (int j = col; j <= k; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_row[col] = rank;
    ++rank;
  }

  for (int col = 0; col < k; ++col)
    if (pivot_row[col] < 0) throw DependentGeneratorsError();

  for (int i = rank; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;

  std::vector<Rat> c(k);
  for (int col = 0; col < k; ++col) c[col] = a[pivot_row[col]][k];
  return RationalVector(std::move(c));
}

}  // namespace toric
