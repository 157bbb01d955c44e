#pragma once

#include <filesystem>

#include "oad/model.hpp"

namespace oad {

// Model checkpoint: JSON header carrying dimensions and the tensor directory,
// followed by all parameter tensors as flat little-endian 64-bit floats in
// directory order. `window_len`/`gen_len` record the training-time l_m / l_g
// so inference can run from the checkpoint alone.
struct Checkpoint {
  Models models;
  std::size_t window_len = 32;
  std::size_t gen_len = 8;
};

// Written via a temp file and a rename; never leaves partial output behind.
void save_checkpoint(const std::filesystem::path& path, Models& models,
                     std::size_t window_len, std::size_t gen_len);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace oad
