#pragma once

#include <span>
#include <vector>

#include "oad/tape.hpp"

namespace oad {

// Past-future aggregation: one GRU over real past plus generated future
// features, a two-layer classifier head, and a two-layer generator for the
// temporal smoothing weights.
struct PfaParams {
  GruCellParams agg;            // D -> Hp
  LinearParams cls1, cls2;      // Hp -> Ch -> K+1
  LinearParams wgen_f, wgen_g;  // D -> Wh -> 2
  std::size_t feat_dim() const { return agg.input_dim(); }
  std::size_t hidden_dim() const { return agg.hidden_dim(); }
  std::size_t num_outputs() const { return cls2.output_dim(); }
};

struct SmoothState {
  Vector prev_probs;
};

// Symmetric ignorance: 0.5 per class, matching zero-logit outputs.
SmoothState initial_smooth_state(std::size_t outputs);

PfaParams make_pfa(std::size_t feat_dim, std::size_t hidden, std::size_t cls_hidden,
                   std::size_t wgen_hidden, std::size_t outputs);
PfaParams init_pfa(std::size_t feat_dim, std::size_t hidden, std::size_t cls_hidden,
                   std::size_t wgen_hidden, std::size_t outputs, Rng& rng);
void append_views(std::vector<TensorView>& out, PfaParams& p, const std::string& prefix);
void set_zero(PfaParams& p);
void add_scaled(PfaParams& acc, const PfaParams& g, double scale);

// Raw per-class probabilities p_c: GRU from a zero hidden state over the
// whole feature sequence, then sigmoid(cls2(relu(cls1(h)))).
Vector classify(std::span<const Vector> features, const PfaParams& p);
Vector classify_from_hidden(const Vector& hidden, const PfaParams& p);

// Two-way softmax weights from the current frame's input feature.
Vector smooth_weights(const Vector& x_cur, const PfaParams& p);

// p_t = w[0] * p_c + w[1] * prev (convex combination per class).
Vector aggregate(const Vector& p_c, const SmoothState& prev, const Vector& w);

// Per-class binary cross-entropy, averaged over the K+1 classes. Probabilities
// are clamped to [1e-12, 1 - 1e-12] before the logs.
double pfa_loss(const Vector& probs, const Vector& target);

Vector uniform_smoothing_baseline(const Vector& p_c, const SmoothState& prev);
// Causal mean over the most recent min(window, len) raw predictions; history
// is given oldest-first and already includes the current frame.
Vector window_smoothing_baseline(std::span<const Vector> history, std::size_t window);

struct PfaStepResult {
  double loss = 0.0;
  Vector smoothed;  // p_t after aggregation
};

// One training step at one frame: classify past ++ generated (both treated as
// constants), blend with prev through the learned weights, and take the BCE
// against the target. Gradients are written into `grads`.
PfaStepResult pfa_train_step(std::span<const Vector> past, std::span<const Vector> generated,
                             const Vector& current_frame, const SmoothState& prev,
                             const Vector& target, const PfaParams& p, PfaParams& grads);

}  // namespace oad
