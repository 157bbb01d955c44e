#pragma once

#include <cstddef>
#include <vector>

#include "oad/errors.hpp"

namespace oad {

using Vector = std::vector<double>;

// Dense row-major matrix of 64-bit floats.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double* row(std::size_t r) { return data_.data() + r * cols_; }
  const double* row(std::size_t r) const { return data_.data() + r * cols_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// w x
Vector matvec(const Matrix& w, const Vector& x);
// out += wT y
void matvec_transpose_acc(const Matrix& w, const Vector& y, Vector& out);
// a += u vT
void outer_acc(Matrix& a, const Vector& u, const Vector& v);
// y += alpha x
void axpy(double alpha, const Vector& x, Vector& y);

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector hadamard(const Vector& a, const Vector& b);
double dot(const Vector& a, const Vector& b);
double squared_distance(const Vector& a, const Vector& b);

Vector sigmoid(const Vector& v);
Vector tanh_vec(const Vector& v);
Vector relu(const Vector& v);
// Max-shifted; output sums to 1, entries strictly in (0,1).
Vector softmax(const Vector& v);

double stable_sigmoid(double x);

bool all_finite(const Vector& v);
bool all_finite(const Matrix& m);

void check_same_size(const Vector& a, const Vector& b, const char* what);

}  // namespace oad
