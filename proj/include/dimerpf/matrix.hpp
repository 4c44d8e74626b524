#pragma once

#include <cstddef>
#include <vector>

#include "dimerpf/error.hpp"

namespace dimerpf {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

// Antisymmetric matrix; writes keep both triangles consistent.
template <class T>
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(std::size_t n) : full_(n, n) {}

  std::size_t size() const { return full_.rows(); }
  const T& operator()(std::size_t i, std::size_t j) const { return full_(i, j); }

  void set(std::size_t i, std::size_t j, const T& value) {
    if (i == j) fail(ErrorKind::InvalidArgument, "skew matrix diagonal must be zero");
    full_(i, j) = value;
    full_(j, i) = -value;
  }

  // Keeps rows/columns listed in `keep`, in the given order.
  SkewMatrix submatrix(const std::vector<std::size_t>& keep) const {
    SkewMatrix out(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = a + 1; b < keep.size(); ++b) {
        out.full_(a, b) = full_(keep[a], keep[b]);
        out.full_(b, a) = full_(keep[b], keep[a]);
      }
    return out;
  }

  // Deletes the listed rows/columns; the remaining order is preserved.
  SkewMatrix without(const std::vector<std::size_t>& removed) const {
    std::vector<char> drop(size(), 0);
    for (std::size_t r : removed) {
      if (r >= size()) fail(ErrorKind::InvalidArgument, "index out of range");
      if (drop[r]) fail(ErrorKind::InvalidArgument, "repeated index");
      drop[r] = 1;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < size(); ++i)
      if (!drop[i]) keep.push_back(i);
    return submatrix(keep);
  }

  template <class F>
  auto map(F f) const -> SkewMatrix<decltype(f(std::declval<const T&>()))> {
    SkewMatrix<decltype(f(std::declval<const T&>()))> out(size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j) out.set(i, j, f(full_(i, j)));
    return out;
  }

  const Matrix<T>& dense() const { return full_; }

 private:
  Matrix<T> full_;
};

}  // namespace dimerpf
