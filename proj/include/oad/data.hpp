#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "oad/rng.hpp"
#include "oad/tensor.hpp"

namespace oad {

struct FeatureSequence {
  std::size_t dim = 0;
  std::vector<Vector> frames;
  std::vector<std::uint16_t> labels;  // empty when unlabeled; 0 = background
  std::size_t size() const { return frames.size(); }
};

// Feature file: header {version, kind:"features", T, D, K, dtype:"f64le"}
// followed by T*D doubles, frame-major.
void write_features(const std::filesystem::path& path, const FeatureSequence& seq,
                    std::size_t classes);
FeatureSequence read_features(const std::filesystem::path& path,
                              std::size_t* classes = nullptr);

// Label file: header {version, kind:"labels", T, K, dtype:"u16le"} followed
// by T uint16 class indices, 0 = background, values must be <= K.
void write_labels(const std::filesystem::path& path, std::span<const std::uint16_t> labels,
                  std::size_t classes);
std::vector<std::uint16_t> read_labels(const std::filesystem::path& path,
                                       std::size_t* classes = nullptr);

// Prediction file: header {version, kind:"predictions", T, K, dtype:"f64le"}
// followed by T*(K+1) doubles, frame-major.
void write_predictions(const std::filesystem::path& path, std::span<const Vector> preds,
                       std::size_t classes);
std::vector<Vector> read_predictions(const std::filesystem::path& path,
                                     std::size_t* classes = nullptr);

// Synthetic stream generator. Class segments follow a semi-Markov chain; the
// latent state of a segment with class c contracts toward that class's
// prototype under class-specific rotation dynamics, and observations add
// isotropic Gaussian noise. Consecutive segments always change class.
struct SynthConfig {
  std::size_t classes = 6;  // K action classes; labels run 0..K
  std::size_t dim = 32;
  double mean_segment = 12.0;
  double background_fraction = 0.5;
  double noise_sigma = 0.1;
  double prototype_scale = 0.6;
  double radius_min = 0.80;   // per-block contraction radii (spectral radius < 1)
  double radius_max = 0.95;
  double angle_min = 0.15;    // per-block rotation rates, radians per frame
  double angle_max = 0.90;
  std::uint64_t seed = 1;
};

class SynthModel {
 public:
  // Draws the class bank (prototypes + dynamics) from cfg.seed.
  explicit SynthModel(const SynthConfig& cfg);
  // Deterministic in (cfg.seed, stream_seed).
  FeatureSequence sequence(std::size_t frames, std::uint64_t stream_seed) const;
  const SynthConfig& config() const { return cfg_; }
  const Vector& prototype(std::size_t cls) const { return prototypes_[cls]; }

 private:
  SynthConfig cfg_;
  std::vector<Vector> prototypes_;  // classes + 1 entries
  std::vector<Matrix> dynamics_;    // classes + 1 entries, spectral radius < 1
};

}  // namespace oad
