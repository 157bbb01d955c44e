#include "oad/adam.hpp"

#include <cmath>
#include <string>

namespace oad {

void adam_update(const std::vector<TensorView>& params,
                 const std::vector<TensorView>& grads, AdamState& state) {
  if (params.size() != grads.size())
    throw ShapeError("adam_update: " + std::to_string(params.size()) +
                     " params vs " + std::to_string(grads.size()) + " grads");
  if (state.m.empty()) {
    state.m.resize(params.size());
    state.v.resize(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
      state.m[i].assign(params[i].size(), 0.0);
      state.v[i].assign(params[i].size(), 0.0);
    }
  }
  if (state.m.size() != params.size())
    throw ShapeError("adam_update: state tracks " + std::to_string(state.m.size()) +
                     " tensors, got " + std::to_string(params.size()));

  state.step += 1;
  const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
  const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));

  for (std::size_t i = 0; i < params.size(); ++i) {
    const TensorView& p = params[i];
    const TensorView& g = grads[i];
    if (p.size() != g.size() || p.size() != state.m[i].size())
      throw ShapeError("adam_update: shape mismatch for tensor '" + p.name + "'");
    double* m = state.m[i].data();
    double* v = state.v[i].data();
    for (std::size_t k = 0; k < p.size(); ++k) {
      m[k] = state.beta1 * m[k] + (1.0 - state.beta1) * g.data[k];
      v[k] = state.beta2 * v[k] + (1.0 - state.beta2) * g.data[k] * g.data[k];
      const double mhat = m[k] / bc1;
      const double vhat = v[k] / bc2;
      p.data[k] -= state.lr * mhat / (std::sqrt(vhat) + state.eps);
    }
  }
}

}  // namespace oad
