#include "orehopf/matrix.hpp"

#include <sstream>

namespace orehopf {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Cyclotomic inv = m[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Cyclotomic f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Vector> as_rows(const Matrix& a) {
  std::vector<Vector> m(a.rows(), Vector(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  }
  return m;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyclotomic& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

Matrix operator*(const Cyclotomic& s, const Matrix& a) {
  Matrix r = a;
  for (auto& v : r.data_) v *= s;
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw Error("matrix shape mismatch");
  Vector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
    }
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::pow(long k) const {
  if (rows_ != cols_) throw Error("matrix is not square");
  Matrix base = *this;
  if (k < 0) {
    auto inv = inverse();
    if (!inv) throw Error("matrix is singular");
    base = *inv;
    k = -k;
  }
  Matrix r = identity(rows_);
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::optional<Cyclotomic> Matrix::scalar_value() const {
  if (rows_ != cols_) return std::nullopt;
  Cyclotomic s = rows_ == 0 ? Cyclotomic(0) : (*this)(0, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Cyclotomic& v = (*this)(i, j);
      if (i == j ? v != s : !v.is_zero()) return std::nullopt;
    }
  }
  return s;
}

std::size_t Matrix::rank() const {
  auto m = as_rows(*this);
  return rref(m, cols_).size();
}

Cyclotomic Matrix::determinant() const {
  if (rows_ != cols_) throw Error("matrix is not square");
  auto m = as_rows(*this);
  Cyclotomic det(1);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && m[p][c].is_zero()) ++p;
    if (p == rows_) return Cyclotomic(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Cyclotomic inv = m[c][c].inverse();
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (m[i][c].is_zero()) continue;
      Cyclotomic f = m[i][c] * inv;
      for (std::size_t k = c; k < cols_; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw Error("matrix is not square");
  std::size_t n = rows_;
  std::vector<Vector> m(n, Vector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (*this)(i, j);
    m[i][n + i] = Cyclotomic(1);
  }
  auto pivots = rref(m, 2 * n);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r(i, j) = m[i][n + j];
  }
  return r;
}

std::vector<Vector> Matrix::nullspace() const {
  auto m = as_rows(*this);
  auto pivots = rref(m, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols_);
    v[f] = Cyclotomic(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).to_string();
  }
  out << "]";
  return out.str();
}

Matrix from_columns(const std::vector<Vector>& cols, std::size_t height) {
  Matrix m(height, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector SpanBuilder::reduce(Vector v) const {
  if (v.size() != len_) throw Error("vector length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    Cyclotomic f = v[p];
    for (std::size_t k = 0; k < len_; ++k) {
      if (!rows_[r][k].is_zero()) v[k] -= f * rows_[r][k];
    }
  }
  return v;
}

bool SpanBuilder::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < len_ && v[p].is_zero()) ++p;
  if (p == len_) return false;
  Cyclotomic inv = v[p].inverse();
  for (auto& e : v) e *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(Vector v) const {
  v = reduce(std::move(v));
  for (const auto& e : v) {
    if (!e.is_zero()) return false;
  }
  return true;
}

}  // namespace orehopf
