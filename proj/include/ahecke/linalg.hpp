#pragma once

// Exact integer and rational linear algebra used by the lattice computations.

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ahecke {

using Rational = mpq_class;

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Parses "p", "p/q" or "-p/q"; canonicalizes. Throws Error(InvalidInput).
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

std::vector<std::int64_t> to_std(const IntVector& v);
IntVector from_std(const std::vector<std::int64_t>& v);
std::vector<std::int64_t> flatten(const IntMatrix& m);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Dense matrix over Q, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
  static QMatrix identity(int n);
  static QMatrix from_int(const IntMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  bool operator==(const QMatrix& o) const;
  QMatrix transpose() const;

  int rank() const;
  /// Basis of {v : M v = 0} as columns.
  QMatrix kernel() const;
  std::optional<QMatrix> inverse() const;
  /// Unique or any particular solution of M x = b; nullopt when inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  bool is_integral() const;
  IntMatrix to_int() const;
  Eigen::MatrixXd to_double() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Row echelon reduction in place; returns pivot columns.
std::vector<int> row_reduce(QMatrix& m);

/// Smith normal form U * A * V = D with U, V unimodular.
struct SmithForm {
  IntMatrix U, Uinv, V, Vinv;
  std::vector<std::int64_t> divisors;  // nonzero diagonal entries, d_i | d_{i+1}
  int rank() const { return static_cast<int>(divisors.size()); }
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Columns spanning the integer kernel {x : A x = 0}; the result is saturated.
IntMatrix integer_kernel(const IntMatrix& a);

/// Surjection Z^n -> Z^r whose kernel is exactly ker(A); r = rank A.
IntMatrix quotient_projection(const IntMatrix& a);

/// Columns spanning Z^n ∩ Q·span(columns of S).
IntMatrix saturate(const IntMatrix& s);

/// Z^n / span(columns of S) when it is finite: divisors > 1 and the rows of U
/// giving the coordinate maps x -> (U x)_i mod d_i.
struct FiniteQuotient {
  std::vector<std::int64_t> divisors;
  IntMatrix coordinate_rows;  // one row per divisor
  IntMatrix generator_lifts;  // column i maps to the i-th unit vector
  std::int64_t order() const;
};

/// Throws Error(InvalidInput) if the quotient is infinite.
FiniteQuotient finite_quotient(const IntMatrix& s, int ambient_dim);

std::int64_t gcd_of(const std::vector<std::int64_t>& v);

}  // namespace ahecke
