#include "oad/layers.hpp"

#include <cmath>

namespace oad {

namespace {

Matrix init_weight(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix w(rows, cols);
  const double k = 1.0 / std::sqrt(static_cast<double>(cols));
  for (std::size_t i = 0; i < w.size(); ++i) w.data()[i] = rng.uniform(-k, k);
  return w;
}

}  // namespace

LinearParams make_linear(std::size_t in, std::size_t out) {
  return {Matrix(out, in), Vector(out, 0.0)};
}

GruCellParams make_gru(std::size_t in, std::size_t hidden) {
  GruCellParams p;
  p.wz = Matrix(hidden, in);
  p.uz = Matrix(hidden, hidden);
  p.bz = Vector(hidden, 0.0);
  p.wr = Matrix(hidden, in);
  p.ur = Matrix(hidden, hidden);
  p.br = Vector(hidden, 0.0);
  p.wh = Matrix(hidden, in);
  p.uh = Matrix(hidden, hidden);
  p.bh = Vector(hidden, 0.0);
  return p;
}

LinearParams init_linear(std::size_t in, std::size_t out, Rng& rng) {
  return {init_weight(out, in, rng), Vector(out, 0.0)};
}

GruCellParams init_gru(std::size_t in, std::size_t hidden, Rng& rng) {
  GruCellParams p = make_gru(in, hidden);
  p.wz = init_weight(hidden, in, rng);
  p.uz = init_weight(hidden, hidden, rng);
  p.wr = init_weight(hidden, in, rng);
  p.ur = init_weight(hidden, hidden, rng);
  p.wh = init_weight(hidden, in, rng);
  p.uh = init_weight(hidden, hidden, rng);
  return p;
}

Vector linear(const Vector& x, const LinearParams& p) {
  Vector out = matvec(p.w, x);
  check_same_size(out, p.b, "linear bias");
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += p.b[i];
  return out;
}

namespace {

// w x + u hin + b
Vector gate_preact(const Matrix& w, const Vector& x, const Matrix& u,
                   const Vector& hin, const Vector& b) {
  Vector a = matvec(w, x);
  const Vector uh = matvec(u, hin);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += uh[i] + b[i];
  return a;
}

}  // namespace

GruTrace gru_forward(const Vector& x, const Vector& h, const GruCellParams& p) {
  if (x.size() != p.input_dim())
    throw ShapeError("gru_step: input dim " + std::to_string(x.size()) +
                     " vs cell " + std::to_string(p.input_dim()));
  if (h.size() != p.hidden_dim())
    throw ShapeError("gru_step: hidden dim " + std::to_string(h.size()) +
                     " vs cell " + std::to_string(p.hidden_dim()));
  GruTrace t;
  t.z = sigmoid(gate_preact(p.wz, x, p.uz, h, p.bz));
  t.r = sigmoid(gate_preact(p.wr, x, p.ur, h, p.br));
  t.rh = hadamard(t.r, h);
  t.cand = tanh_vec(gate_preact(p.wh, x, p.uh, t.rh, p.bh));
  t.out.resize(h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    t.out[i] = (1.0 - t.z[i]) * h[i] + t.z[i] * t.cand[i];
  return t;
}

Vector gru_step(const Vector& x, const Vector& h, const GruCellParams& p) {
  return gru_forward(x, h, p).out;
}

void append_views(std::vector<TensorView>& out, LinearParams& p, const std::string& prefix) {
  out.push_back({prefix + ".w", p.w.data(), p.w.rows(), p.w.cols()});
  out.push_back({prefix + ".b", p.b.data(), p.b.size(), 1});
}

void append_views(std::vector<TensorView>& out, GruCellParams& p, const std::string& prefix) {
  out.push_back({prefix + ".wz", p.wz.data(), p.wz.rows(), p.wz.cols()});
  out.push_back({prefix + ".uz", p.uz.data(), p.uz.rows(), p.uz.cols()});
  out.push_back({prefix + ".bz", p.bz.data(), p.bz.size(), 1});
  out.push_back({prefix + ".wr", p.wr.data(), p.wr.rows(), p.wr.cols()});
  out.push_back({prefix + ".ur", p.ur.data(), p.ur.rows(), p.ur.cols()});
  out.push_back({prefix + ".br", p.br.data(), p.br.size(), 1});
  out.push_back({prefix + ".wh", p.wh.data(), p.wh.rows(), p.wh.cols()});
  out.push_back({prefix + ".uh", p.uh.data(), p.uh.rows(), p.uh.cols()});
  out.push_back({prefix + ".bh", p.bh.data(), p.bh.size(), 1});
}

namespace {

void zero_matrix(Matrix& m) { std::fill(m.data(), m.data() + m.size(), 0.0); }
void zero_vector(Vector& v) { std::fill(v.begin(), v.end(), 0.0); }

void add_scaled_matrix(Matrix& a, const Matrix& b, double s) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("add_scaled: matrix shape mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a.data()[i] += s * b.data()[i];
}

}  // namespace

void set_zero(LinearParams& p) {
  zero_matrix(p.w);
  zero_vector(p.b);
}

void set_zero(GruCellParams& p) {
  zero_matrix(p.wz);
  zero_matrix(p.uz);
  zero_vector(p.bz);
  zero_matrix(p.wr);
  zero_matrix(p.ur);
  zero_vector(p.br);
  zero_matrix(p.wh);
  zero_matrix(p.uh);
  zero_vector(p.bh);
}

void add_scaled(LinearParams& acc, const LinearParams& g, double scale) {
  add_scaled_matrix(acc.w, g.w, scale);
  axpy(scale, g.b, acc.b);
}

void add_scaled(GruCellParams& acc, const GruCellParams& g, double scale) {
  add_scaled_matrix(acc.wz, g.wz, scale);
  add_scaled_matrix(acc.uz, g.uz, scale);
  axpy(scale, g.bz, acc.bz);
  add_scaled_matrix(acc.wr, g.wr, scale);
  add_scaled_matrix(acc.ur, g.ur, scale);
  axpy(scale, g.br, acc.br);
  add_scaled_matrix(acc.wh, g.wh, scale);
  add_scaled_matrix(acc.uh, g.uh, scale);
  axpy(scale, g.bh, acc.bh);
}

Vector one_hot(std::size_t index, std::size_t size) {
  if (index >= size)
    throw ShapeError("one_hot: index " + std::to_string(index) + " out of " +
                     std::to_string(size));
  Vector v(size, 0.0);
  v[index] = 1.0;
  return v;
}

}  // namespace oad
