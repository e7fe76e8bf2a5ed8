#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace proxmetric {

/// Dimension or value mismatch between operands.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite values, failed convergence, or other numeric breakdown.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pivot below tolerance during LU factorization.
struct SingularMatrixError : NumericError {
  using NumericError::NumericError;
};

/// No candidate active set yields a feasible point.
struct InfeasibleError : NumericError {
  using NumericError::NumericError;
};

/// File read/write or format failure.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of doubles. Vectors are n-by-1, scalars 1-by-1.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int rows, int cols);

  static Tensor zeros(int rows, int cols);
  static Tensor identity(int n);
  static Tensor scalar(double v);
  static Tensor column(std::vector<double> v);
  // Row-major fill; throws if the initializer length is not rows*cols.
  static Tensor from_rows(int rows, int cols, std::initializer_list<double> v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }

  double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  double& operator[](int i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int i) const { return data_[static_cast<size_t>(i)]; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const Tensor& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }
  bool all_finite() const;

  // Value of a 1x1 tensor; throws ShapeError otherwise.
  double item() const;

  std::string shape_str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

}  // namespace proxmetric
