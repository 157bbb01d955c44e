#pragma once

#include <cstdint>

#include "oad/anticipation.hpp"
#include "oad/pfa.hpp"

namespace oad {

// Architecture sizes. `classes` counts action classes; network outputs are
// classes + 1 with the background at index 0.
struct ModelDims {
  std::size_t feat_dim = 32;
  std::size_t classes = 6;
  std::size_t antic_hidden = 512;
  std::size_t agg_hidden = 256;
  std::size_t cls_hidden = 256;
  std::size_t wgen_hidden = 64;
  std::size_t outputs() const { return classes + 1; }
  bool operator==(const ModelDims&) const = default;
};

struct Models {
  ModelDims dims;
  AnticipationParams antic;
  PfaParams pfa;
};

Models make_models(const ModelDims& dims);
Models init_models(const ModelDims& dims, std::uint64_t seed);
std::vector<TensorView> tensor_views(Models& m);

}  // namespace oad
