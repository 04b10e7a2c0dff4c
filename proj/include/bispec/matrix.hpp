#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "bispec/bicomplex.hpp"
#include "bispec/errors.hpp"

namespace bispec {

/// Dense n x n matrix, row-major.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;

  /// Zero matrix of order n.
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n) {}

  /// Row-major nested list; throws DimensionError unless square.
  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw DimensionError("matrix rows must all have length n");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1.0);
    return m;
  }

  static SquareMatrix diagonal(std::span<const T> d) {
    SquareMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static SquareMatrix diagonal(std::initializer_list<T> d) {
    return diagonal(std::span<const T>(d.begin(), d.size()));
  }

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  std::span<const T> data() const noexcept { return data_; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    require_same_size(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    require_same_size(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  SquareMatrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(const T& s, SquareMatrix a) { return a *= s; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  void require_same_size(const SquareMatrix& o) const {
    if (o.n_ != n_) throw DimensionError("matrix order mismatch");
  }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = SquareMatrix<Complex>;
using BicomplexMatrix = SquareMatrix<Bicomplex>;

// Complex matrix helpers used by the component pipeline.

ComplexMatrix conj_transpose(const ComplexMatrix& a);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> multiply(const ComplexMatrix& a, std::span<const Complex> v);
double frobenius_norm(const ComplexMatrix& a);
/// Largest |a_ij - conj(a_ji)| over all i, j.
double hermitian_defect(const ComplexMatrix& a);
/// (A + A^H) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& a);
/// Column j as a vector.
std::vector<Complex> column(const ComplexMatrix& a, std::size_t j);

}  // namespace bispec
