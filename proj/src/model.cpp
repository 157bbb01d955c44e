#include "oad/model.hpp"

namespace oad {

Models make_models(const ModelDims& d) {
  Models m;
  m.dims = d;
  m.antic = make_anticipation(d.feat_dim, d.antic_hidden);
  m.pfa = make_pfa(d.feat_dim, d.agg_hidden, d.cls_hidden, d.wgen_hidden, d.outputs());
  return m;
}

Models init_models(const ModelDims& d, std::uint64_t seed) {
  Models m;
  m.dims = d;
  Rng rng(seed);
  m.antic = init_anticipation(d.feat_dim, d.antic_hidden, rng);
  m.pfa = init_pfa(d.feat_dim, d.agg_hidden, d.cls_hidden, d.wgen_hidden, d.outputs(), rng);
  return m;
}

std::vector<TensorView> tensor_views(Models& m) {
  std::vector<TensorView> out;
  append_views(out, m.antic, "antic");
  append_views(out, m.pfa, "pfa");
  return out;
}

}  // namespace oad
