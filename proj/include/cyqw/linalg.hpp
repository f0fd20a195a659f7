#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cyqw/rational.hpp"

namespace cyqw {

using Vector = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Vector operator*(const Vector& v) const;
  bool operator==(const Matrix& other) const = default;

  Matrix transpose() const;
  bool is_zero() const;
  Vector column(std::size_t c) const;
  Matrix columns(const std::vector<std::size_t>& idx) const;
  Matrix rows_of(const std::vector<std::size_t>& idx) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form over the rationals.
Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
// Columns span the null space.
Matrix kernel(const Matrix& m);
// Columns form a basis of the column space, chosen among the given columns.
std::vector<std::size_t> column_basis(const Matrix& m);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& m);
Rational determinant(Matrix m);

// Coordinates of vectors lying in the span of a full-column-rank basis.
class SpanCoordinates {
 public:
  explicit SpanCoordinates(const Matrix& basis);
  Vector operator()(const Vector& v) const;
  Matrix operator()(const Matrix& m) const;
  std::size_t dim() const { return left_.rows(); }

 private:
  Matrix left_;
};

// Extends the column space of `sub` (inside k^n) to a complement basis;
// returns the indices of standard basis vectors chosen.
std::vector<std::size_t> complement_indices(const Matrix& sub, std::size_t n);

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational eval(const Rational& x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial& o) const = default;

  // Quotient and remainder.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial monic() const;
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial gcd(Polynomial a, Polynomial b);
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
// det(tI - m) by Faddeev-LeVerrier.
Polynomial characteristic_polynomial(const Matrix& m);

}  // namespace cyqw
