#pragma once

#include <string>
#include <vector>

#include "oad/rng.hpp"
#include "oad/tensor.hpp"

namespace oad {

struct LinearParams {
  Matrix w;  // out x in
  Vector b;  // out
  std::size_t input_dim() const { return w.cols(); }
  std::size_t output_dim() const { return w.rows(); }
};

// One GRU cell: update gate z, reset gate r, candidate h~, with the reset
// applied inside the recurrent candidate term:
//   z  = sigmoid(wz x + uz h + bz)
//   r  = sigmoid(wr x + ur h + br)
//   h~ = tanh(wh x + uh (r.h) + bh)
//   h' = (1 - z).h + z.h~
struct GruCellParams {
  Matrix wz, uz;
  Vector bz;
  Matrix wr, ur;
  Vector br;
  Matrix wh, uh;
  Vector bh;
  std::size_t input_dim() const { return wz.cols(); }
  std::size_t hidden_dim() const { return wz.rows(); }
};

LinearParams make_linear(std::size_t in, std::size_t out);
GruCellParams make_gru(std::size_t in, std::size_t hidden);

// Weights uniform in [-1/sqrt(fan_in), +1/sqrt(fan_in)], biases zero.
LinearParams init_linear(std::size_t in, std::size_t out, Rng& rng);
GruCellParams init_gru(std::size_t in, std::size_t hidden, Rng& rng);

Vector linear(const Vector& x, const LinearParams& p);

struct GruTrace {
  Vector z, r, rh, cand, out;
};
// Full gate activations; shared by the plain step and the gradient tape so
// both paths compute bit-identical values.
GruTrace gru_forward(const Vector& x, const Vector& h, const GruCellParams& p);
Vector gru_step(const Vector& x, const Vector& h, const GruCellParams& p);

// Non-owning named view of one parameter tensor. The optimizer and the
// checkpoint container work on flat lists of these.
struct TensorView {
  std::string name;
  double* data = nullptr;
  std::size_t rows = 0, cols = 0;
  std::size_t size() const { return rows * cols; }
};

void append_views(std::vector<TensorView>& out, LinearParams& p, const std::string& prefix);
void append_views(std::vector<TensorView>& out, GruCellParams& p, const std::string& prefix);

void set_zero(LinearParams& p);
void set_zero(GruCellParams& p);
void add_scaled(LinearParams& acc, const LinearParams& g, double scale);
void add_scaled(GruCellParams& acc, const GruCellParams& g, double scale);

Vector one_hot(std::size_t index, std::size_t size);

}  // namespace oad
