#pragma once

// Exact integer/rational linear algebra on small dense matrices.
//
// All arithmetic is arbitrary precision (GMP).  Matrices are stored row-major
// as a list of IntVector rows.  Dimensions in this project never exceed 4,
// but nothing here depends on that.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace stringy {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced rational num/den.  Throws InvalidArgument on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& value);
/// "p/q" with q > 0; integers print as "p/1" only when `force_fraction`.
std::string to_string(const Rational& value, bool force_fraction = false);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil(const Rational& q);
Integer floor(const Rational& q);

class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t dim) : coords_(dim) {}
  explicit IntVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  IntVector(std::initializer_list<long> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }

  auto begin() { return coords_.begin(); }
  auto end() { return coords_.end(); }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  IntVector& operator+=(const IntVector& other);
  IntVector& operator-=(const IntVector& other);
  IntVector& operator*=(const Integer& k);

  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(const Integer& k, IntVector a) { return a *= k; }
  friend IntVector operator-(IntVector a) { return a *= Integer(-1); }

  friend bool operator==(const IntVector& a, const IntVector& b) { return a.coords_ == b.coords_; }
  /// Lexicographic order; shorter vectors sort first.
  friend bool operator<(const IntVector& a, const IntVector& b);

 private:
  std::vector<Integer> coords_;
};

class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t dim) : coords_(dim) {}
  explicit RatVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  explicit RatVector(const IntVector& v);

  std::size_t dim() const noexcept { return coords_.size(); }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  /// Least common multiple of the coordinate denominators.
  Integer denominator() const;
  /// `k * this`; throws InvalidArgument unless every coordinate becomes integral.
  IntVector scaled_to_integer(const Integer& k) const;

  friend bool operator==(const RatVector& a, const RatVector& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const RatVector& a, const RatVector& b);

 private:
  std::vector<Rational> coords_;
};

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const IntVector& b);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix from_rows(std::span<const IntVector> rows);
  static IntMatrix from_columns(std::span<const IntVector> columns);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_.size() == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const IntVector& row(std::size_t r) const { return rows_[r]; }
  const std::vector<IntVector>& row_vectors() const noexcept { return rows_; }
  IntVector column(std::size_t c) const;

  IntMatrix transpose() const;
  IntVector operator*(const IntVector& x) const;
  IntMatrix operator*(const IntMatrix& other) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<IntVector> rows_;
  std::size_t cols_ = 0;
};

/// v divided by the gcd of its coordinates.  Throws ZeroVector for v = 0.
IntVector make_primitive(const IntVector& v);

/// gcd of |coords|; 0 for the zero vector.
Integer content(const IntVector& v);

/// Fraction-free (Bareiss) determinant.  Throws ShapeMismatch if not square.
Integer integer_det(const IntMatrix& m);

/// Exact x with A x = b.  Throws ShapeMismatch / SingularMatrix.
RatVector solve_linear(const IntMatrix& a, const IntVector& b);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);
std::size_t affine_rank(std::span<const IntVector> points);

/// Row-style Hermite normal form of the row lattice: echelon rows with positive
/// pivots, entries above each pivot reduced into [0, pivot).  Zero rows dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Z-basis of {x in Z^n : A x = 0}, in Hermite normal form.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// Z-basis (Hermite normal form) of span_Q(generators) ∩ Z^n.
std::vector<IntVector> saturate(std::span<const IntVector> generators);

/// Basis of the lattice span(points - points[0]) ∩ Z^n, in Hermite normal form.
/// Throws EmptyInput for an empty point list; a single point gives an empty basis.
std::vector<IntVector> sublattice_basis(std::span<const IntVector> points);

/// Coordinates of `v` in a lattice basis (rows).  Throws InvalidArgument if v
/// is not an integral combination of the basis.
IntVector lattice_coordinates(std::span<const IntVector> basis, const IntVector& v);

}  // namespace stringy
