#include "stringy/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "stringy/error.hpp"

namespace stringy {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value, bool force_fraction) {
  if (!force_fraction && value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------

IntVector::IntVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool IntVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

IntVector& IntVector::operator+=(const IntVector& other) {
  if (other.dim() != dim()) fail(ErrorCode::ShapeMismatch, "vector dimensions differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& other) {
  if (other.dim() != dim()) fail(ErrorCode::ShapeMismatch, "vector dimensions differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

IntVector& IntVector::operator*=(const Integer& k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

bool operator<(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    int s = cmp(a[i], b[i]);
    if (s != 0) return s < 0;
  }
  return false;
}

RatVector::RatVector(const IntVector& v) {
  coords_.reserve(v.dim());
  for (const auto& c : v) coords_.emplace_back(c);
}

Integer RatVector::denominator() const {
  Integer l = 1;
  for (const auto& c : coords_) l = lcm(l, c.get_den());
  return l;
}

IntVector RatVector::scaled_to_integer(const Integer& k) const {
  IntVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational s = coords_[i] * k;
    if (s.get_den() != 1) fail(ErrorCode::InvalidArgument, "scaled vector is not integral");
    out[i] = s.get_num();
  }
  return out;
}

bool operator<(const RatVector& a, const RatVector& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    int s = cmp(a[i], b[i]);
    if (s != 0) return s < 0;
  }
  return false;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::ShapeMismatch, "dot product of vectors of different dimension");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const IntVector& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::ShapeMismatch, "dot product of vectors of different dimension");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows, IntVector(cols)), cols_(cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  cols_ = rows.size() ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::ShapeMismatch, "ragged matrix literal");
    rows_.emplace_back(r);
  }
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows) {
  IntMatrix m;
  m.cols_ = rows.empty() ? 0 : rows.front().dim();
  for (const auto& r : rows) {
    if (r.dim() != m.cols_) fail(ErrorCode::ShapeMismatch, "ragged matrix rows");
    m.rows_.push_back(r);
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns) {
  return from_rows(columns).transpose();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) v[r] = rows_[r][c];
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = rows_[r][c];
  return t;
}

IntVector IntMatrix::operator*(const IntVector& x) const {
  if (x.dim() != cols_) fail(ErrorCode::ShapeMismatch, "matrix-vector shape mismatch");
  IntVector y(rows());
  for (std::size_t r = 0; r < rows(); ++r) y[r] = dot(rows_[r], x);
  return y;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (other.rows() != cols_) fail(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  IntMatrix p(rows(), other.cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < other.cols(); ++c)
      for (std::size_t k = 0; k < cols_; ++k) p(r, c) += rows_[r][k] * other(k, c);
  return p;
}

// ---------------------------------------------------------------------------

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  return g;
}

IntVector make_primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) fail(ErrorCode::ZeroVector, "cannot make the zero vector primitive");
  IntVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

Integer integer_det(const IntMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  Integer d = a[n - 1][n - 1];
  return sign > 0 ? d : Integer(-d);
}

RatVector solve_linear(const IntMatrix& a, const IntVector& b) {
  if (!a.is_square() || b.dim() != a.rows()) fail(ErrorCode::ShapeMismatch, "solve_linear shape mismatch");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) fail(ErrorCode::SingularMatrix, "matrix is singular");
    std::swap(m[col], m[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

namespace {

// Unimodular row reduction over the first `pivot_cols` columns (Euclid-style).
// Returns the number of pivots.  With `reduce_above`, entries above each pivot
// are brought into [0, pivot).
std::size_t echelonize(std::vector<IntVector>& rows, std::size_t pivot_cols, bool reduce_above) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || mpz_cmpabs(rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = floor_div(rows[i][c], rows[r][c]);
        rows[i] -= q * rows[r];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0) rows[r] = -rows[r];
    if (reduce_above) {
      for (std::size_t i = 0; i < r; ++i) {
        Integer q = floor_div(rows[i][c], rows[r][c]);
        if (q != 0) rows[i] -= q * rows[r];
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  std::vector<IntVector> rows = m.row_vectors();
  return echelonize(rows, m.cols(), false);
}

std::size_t affine_rank(std::span<const IntVector> points) {
  if (points.empty()) return 0;
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  if (diffs.empty()) return 0;
  return echelonize(diffs, points[0].dim(), false);
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  std::vector<IntVector> rows = m.row_vectors();
  std::size_t r = echelonize(rows, m.cols(), true);
  rows.resize(r);
  IntMatrix h = IntMatrix::from_rows(rows);
  if (r == 0) h = IntMatrix(0, m.cols());
  return h;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  // Rows [A^T | I]; after unimodular row reduction on the A^T block the rows
  // whose A^T part vanishes carry a kernel basis in their identity part.
  std::vector<IntVector> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector row(m + n);
    for (std::size_t j = 0; j < m; ++j) row[j] = a(j, i);
    row[m + i] = 1;
    rows.push_back(std::move(row));
  }
  std::size_t r = echelonize(rows, m, false);
  std::vector<IntVector> kernel;
  for (std::size_t i = r; i < n; ++i) {
    IntVector k(n);
    for (std::size_t j = 0; j < n; ++j) k[j] = rows[i][m + j];
    kernel.push_back(std::move(k));
  }
  if (kernel.empty()) return kernel;
  return hermite_normal_form(IntMatrix::from_rows(kernel)).row_vectors();
}

std::vector<IntVector> saturate(std::span<const IntVector> generators) {
  if (generators.empty()) return {};
  const std::size_t n = generators.front().dim();
  std::vector<IntVector> complement = integer_kernel(IntMatrix::from_rows(generators));
  if (complement.empty()) return IntMatrix::identity(n).row_vectors();
  return integer_kernel(IntMatrix::from_rows(complement));
}

std::vector<IntVector> sublattice_basis(std::span<const IntVector> points) {
  if (points.empty()) fail(ErrorCode::EmptyInput, "sublattice_basis of an empty point set");
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVector d = points[i] - points[0];
    if (!d.is_zero()) diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return {};
  return saturate(diffs);
}

IntVector lattice_coordinates(std::span<const IntVector> basis, const IntVector& v) {
  const std::size_t k = basis.size();
  if (k == 0) {
    if (!v.is_zero()) fail(ErrorCode::InvalidArgument, "vector outside the zero lattice");
    return IntVector();
  }
  const std::size_t n = basis.front().dim();
  // Any k coordinates on which the basis is independent determine the combination.
  std::vector<std::size_t> cols(k);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    cols.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (pick[j]) cols.push_back(j);
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(j, i) = basis[i][cols[j]];
    if (integer_det(sub) == 0) continue;
    IntVector rhs(k);
    for (std::size_t j = 0; j < k; ++j) rhs[j] = v[cols[j]];
    RatVector x = solve_linear(sub, rhs);
    IntVector coords(k);
    IntVector check(n);
    for (std::size_t i = 0; i < k; ++i) {
      if (x[i].get_den() != 1) fail(ErrorCode::InvalidArgument, "vector is not in the lattice");
      coords[i] = x[i].get_num();
      check += coords[i] * basis[i];
    }
    if (!(check == v)) fail(ErrorCode::InvalidArgument, "vector is not in the span of the basis");
    return coords;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  fail(ErrorCode::SingularMatrix, "basis vectors are linearly dependent");
}

}  // namespace stringy
