#pragma once

#include <cstdint>
#include <vector>

#include "oad/layers.hpp"

namespace oad {

// Bias-corrected Adam. Moment buffers mirror the parameter list; they are
// allocated on the first update and must keep the same shapes afterwards.
struct AdamState {
  double lr = 5e-5;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  std::int64_t step = 0;
  std::vector<std::vector<double>> m, v;
};

void adam_update(const std::vector<TensorView>& params,
                 const std::vector<TensorView>& grads, AdamState& state);

}  // namespace oad
