#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectree {

/// Row-major dense square matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n, T fill = T{}) : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

  int rows() const noexcept { return n_; }
  int cols() const noexcept { return n_; }
  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out(i, j) = static_cast<U>((*this)(i, j));
    return out;
  }

  bool symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < i; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int n_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;

class EigenError : public std::runtime_error {
 public:
  EigenError(const std::string& what, int index, int iterations)
      : std::runtime_error(what), index_(index), iterations_(iterations) {}
  int index() const noexcept { return index_; }
  int iterations() const noexcept { return iterations_; }

 private:
  int index_;
  int iterations_;
};

struct EigenOptions {
  int max_iterations = 60;  // QL sweeps allowed per eigenvalue
};

/// All eigenvalues of a real symmetric matrix in descending order.
/// Householder reduction to tridiagonal form, then implicit-shift QL.
/// Throws EigenError if an eigenvalue fails to converge.
std::vector<double> symmetric_eigenvalues(const RealMatrix& a, const EigenOptions& opts = {});

}  // namespace spectree
