#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orehopf/cyclotomic.hpp"

namespace orehopf {

using Vector = std::vector<Cyclotomic>;

// Dense exact matrix over Q(zeta_N), row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Cyclotomic& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const Vector& data() const { return data_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Cyclotomic& s, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix pow(long k) const;  // negative k inverts
  Matrix transpose() const;
  bool is_zero() const;
  // s when the matrix is s * identity.
  std::optional<Cyclotomic> scalar_value() const;

  std::size_t rank() const;
  Cyclotomic determinant() const;
  std::optional<Matrix> inverse() const;
  // Basis of {v : A v = 0}.
  std::vector<Vector> nullspace() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Vector data_;
};

// Columns as a matrix.
Matrix from_columns(const std::vector<Vector>& cols, std::size_t height);

// Incrementally maintained echelon basis of a subspace of K^len.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t len) : len_(len) {}
  // Adds v when it is independent; returns whether it was added.
  bool insert(Vector v);
  bool contains(Vector v) const;
  std::size_t dimension() const { return rows_.size(); }

 private:
  Vector reduce(Vector v) const;

  std::size_t len_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace orehopf
