#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/errors.hpp"
#include "toric/numeric.hpp"

namespace toric {

// Exact integer coordinate tuple.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Int> coords) : c_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long long> coords);

  int dim() const { return static_cast<int>(c_.size()); }
  const Int& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  Int& operator[](int i) { return c_[static_cast<size_t>(i)]; }
  const std::vector<Int>& coords() const { return c_; }

  bool is_zero() const;
  Int content() const;  // gcd of coordinate magnitudes; 0 only for the zero vector

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);

  std::string str() const;  // "(1,0,-2)"

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) = default;
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) { return a.c_ < b.c_; }

 private:
  std::vector<Int> c_;
};

LatticeVector operator+(LatticeVector a, const LatticeVector& b);
LatticeVector operator-(LatticeVector a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);
LatticeVector operator*(const Int& s, LatticeVector v);
Int dot(const LatticeVector& a, const LatticeVector& b);
LatticeVector zero_vector(int dim);

// Exact rational coordinate tuple. Entries stay in lowest terms with positive
// denominator because cpp_rational maintains that on every operation.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::vector<Rat> coords) : c_(std::move(coords)) {}
  RationalVector(std::initializer_list<Rat> coords) : c_(coords) {}

  int dim() const { return static_cast<int>(c_.size()); }
  const Rat& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  Rat& operator[](int i) { return c_[static_cast<size_t>(i)]; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const;
  bool is_integral() const;

  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);

  std::string str() const;  // "(1,-1/2)"

  friend bool operator==(const RationalVector& a, const RationalVector& b) = default;

 private:
  std::vector<Rat> c_;
};

RationalVector operator+(RationalVector a, const RationalVector& b);
RationalVector operator-(RationalVector a, const RationalVector& b);
RationalVector operator*(const Rat& s, RationalVector v);
Rat dot(const RationalVector& a, const RationalVector& b);
Rat dot(const RationalVector& a, const LatticeVector& b);
RationalVector to_rational(const LatticeVector& v);
RationalVector rational_zero(int dim);

// Dense row-major arbitrary-precision integer matrix.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols);
  static IntMatrix from_rows(const std::vector<LatticeVector>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  IntMatrix transposed() const;
  Int determinant() const;            // square only; Bareiss fraction-free elimination
  IntMatrix cofactor_matrix() const;  // square only; C[i][j] = (-1)^{i+j} minor_ij

 private:
  int r_, c_;
  std::vector<Int> a_;
};

// v = factor * primitive with gcd(primitive coords) = 1 and factor > 0.
// Throws ZeroVectorError on v = 0.
std::pair<LatticeVector, Int> normalize_primitive(const LatticeVector& v);

// Nonzero Smith invariant factors d1 | d2 | ... of m, in divisibility order.
// A set of k rows extends to a basis of Z^n exactly when there are k factors,
// all equal to 1.
std::vector<Int> invariant_factors(IntMatrix m);

// Unique rational coefficients c with sum c_i * generators_i = target, or
// nullopt when target is outside the span. Throws DependentGeneratorsError
// when the generators are not linearly independent.
std::optional<RationalVector> solve_in_basis(const std::vector<LatticeVector>& generators,
                                             const RationalVector& target);

}  // namespace toric
