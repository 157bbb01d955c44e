#include "oad/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oad {

namespace {

[[noreturn]] void shape_fail(const char* op, std::size_t a, std::size_t b) {
  throw ShapeError(std::string(op) + ": size mismatch " + std::to_string(a) +
                   " vs " + std::to_string(b));
}

}  // namespace

Vector matvec(const Matrix& w, const Vector& x) {
  if (w.cols() != x.size()) shape_fail("matvec", w.cols(), x.size());
  Vector out(w.rows());
  for (std::size_t r = 0; r < w.rows(); ++r) {
    const double* row = w.row(r);
    double acc = 0.0;
    for (std::size_t c = 0; c < w.cols(); ++c) acc += row[c] * x[c];
    out[r] = acc;
  }
  return out;
}

void matvec_transpose_acc(const Matrix& w, const Vector& y, Vector& out) {
  if (w.rows() != y.size()) shape_fail("matvec_transpose_acc", w.rows(), y.size());
  if (w.cols() != out.size()) shape_fail("matvec_transpose_acc", w.cols(), out.size());
  for (std::size_t r = 0; r < w.rows(); ++r) {
    const double* row = w.row(r);
    const double yr = y[r];
    for (std::size_t c = 0; c < w.cols(); ++c) out[c] += row[c] * yr;
  }
}

void outer_acc(Matrix& a, const Vector& u, const Vector& v) {
  if (a.rows() != u.size()) shape_fail("outer_acc", a.rows(), u.size());
  if (a.cols() != v.size()) shape_fail("outer_acc", a.cols(), v.size());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    double* row = a.row(r);
    const double ur = u[r];
    for (std::size_t c = 0; c < a.cols(); ++c) row[c] += ur * v[c];
  }
}

void axpy(double alpha, const Vector& x, Vector& y) {
  check_same_size(x, y, "axpy");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

Vector add(const Vector& a, const Vector& b) {
  check_same_size(a, b, "add");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  check_same_size(a, b, "sub");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector hadamard(const Vector& a, const Vector& b) {
  check_same_size(a, b, "hadamard");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

double dot(const Vector& a, const Vector& b) {
  check_same_size(a, b, "dot");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double squared_distance(const Vector& a, const Vector& b) {
  check_same_size(a, b, "squared_distance");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

double stable_sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

Vector sigmoid(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = stable_sigmoid(v[i]);
  return out;
}

Vector tanh_vec(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::tanh(v[i]);
  return out;
}

Vector relu(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] > 0.0 ? v[i] : 0.0;
  return out;
}

Vector softmax(const Vector& v) {
  if (v.empty()) throw ShapeError("softmax: empty input");
  const double mx = *std::max_element(v.begin(), v.end());
  Vector out(v.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = std::exp(v[i] - mx);
    sum += out[i];
  }
  for (double& e : out) e /= sum;
  return out;
}

bool all_finite(const Vector& v) {
  for (double e : v)
    if (!std::isfinite(e)) return false;
  return true;
}

bool all_finite(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!std::isfinite(m.data()[i])) return false;
  return true;
}

void check_same_size(const Vector& a, const Vector& b, const char* what) {
  if (a.size() != b.size()) shape_fail(what, a.size(), b.size());
}

}  // namespace oad
