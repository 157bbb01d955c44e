#include "oad/checkpoint.hpp"

#include <fstream>

#include "oad/container.hpp"

namespace oad {

namespace {

nlohmann::json dims_to_json(const ModelDims& d, std::size_t lm, std::size_t lg) {
  return {{"D", d.feat_dim},     {"K", d.classes},      {"H", d.antic_hidden},
          {"Hp", d.agg_hidden},  {"Ch", d.cls_hidden},  {"Wh", d.wgen_hidden},
          {"lm", lm},            {"lg", lg}};
}

}  // namespace

void save_checkpoint(const std::filesystem::path& path, Models& models,
                     std::size_t window_len, std::size_t gen_len) {
  const std::vector<TensorView> views = tensor_views(models);
  nlohmann::json tensors = nlohmann::json::array();
  for (const TensorView& v : views)
    tensors.push_back({{"name", v.name}, {"rows", v.rows}, {"cols", v.cols}});
  const nlohmann::json header = {
      {"version", 1},
      {"kind", "checkpoint"},
      {"dtype", "f64le"},
      {"meta", dims_to_json(models.dims, window_len, gen_len)},
      {"tensors", tensors}};

  const std::filesystem::path tmp = path.string() + ".tmp";
  try {
    {
      std::ofstream out = open_output(tmp);
      write_container_header(out, header);
      for (const TensorView& v : views)
        out.write(reinterpret_cast<const char*>(v.data),
                  static_cast<std::streamsize>(v.size() * sizeof(double)));
      if (!out) throw DataError("checkpoint write failed: " + path.string());
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  const std::string ctx = path.string();
  std::ifstream in = open_input(path);
  const nlohmann::json header = read_container_header(in, ctx);
  if (header_str(header, "kind", ctx) != "checkpoint")
    throw DataError(ctx + ": not a checkpoint file");
  if (header_str(header, "dtype", ctx) != "f64le")
    throw DataError(ctx + ": unsupported dtype");
  if (!header.contains("meta") || !header["meta"].is_object())
    throw DataError(ctx + ": missing meta object");
  const nlohmann::json& meta = header["meta"];

  ModelDims dims;
  dims.feat_dim = header_u64(meta, "D", ctx);
  dims.classes = header_u64(meta, "K", ctx);
  dims.antic_hidden = header_u64(meta, "H", ctx);
  dims.agg_hidden = header_u64(meta, "Hp", ctx);
  dims.cls_hidden = header_u64(meta, "Ch", ctx);
  dims.wgen_hidden = header_u64(meta, "Wh", ctx);

  Checkpoint ckpt;
  ckpt.models = make_models(dims);
  ckpt.window_len = header_u64(meta, "lm", ctx);
  ckpt.gen_len = header_u64(meta, "lg", ctx);

  const std::vector<TensorView> views = tensor_views(ckpt.models);
  if (!header.contains("tensors") || !header["tensors"].is_array() ||
      header["tensors"].size() != views.size())
    throw DataError(ctx + ": tensor directory does not match model layout");
  for (std::size_t i = 0; i < views.size(); ++i) {
    const nlohmann::json& t = header["tensors"][i];
    if (header_str(t, "name", ctx) != views[i].name ||
        header_u64(t, "rows", ctx) != views[i].rows ||
        header_u64(t, "cols", ctx) != views[i].cols)
      throw DataError(ctx + ": tensor '" + views[i].name +
                      "' missing or has unexpected shape");
    read_exact(in, views[i].data, views[i].size() * sizeof(double), ctx);
  }
  expect_eof(in, ctx);
  return ckpt;
}

}  // namespace oad
