#pragma once

#include <span>
#include <vector>

#include "oad/tape.hpp"

namespace oad {

// Future/past feature generator: forward and backward GRU encoders over the
// feature stream plus one fully-connected decoder shared by both directions.
struct AnticipationParams {
  GruCellParams fgru;  // forward encoder, D -> H
  GruCellParams bgru;  // backward encoder, D -> H
  LinearParams dec;    // shared decoder, H -> D
  std::size_t feat_dim() const { return fgru.input_dim(); }
  std::size_t hidden_dim() const { return fgru.hidden_dim(); }
};

struct AnticipationOutput {
  std::vector<Vector> generated;  // in generation order
  Vector final_hidden;
};

AnticipationParams make_anticipation(std::size_t feat_dim, std::size_t hidden);
AnticipationParams init_anticipation(std::size_t feat_dim, std::size_t hidden, Rng& rng);
void append_views(std::vector<TensorView>& out, AnticipationParams& p, const std::string& prefix);
void set_zero(AnticipationParams& p);
void add_scaled(AnticipationParams& acc, const AnticipationParams& g, double scale);

// Encode observed frames (given earliest-first) with the forward cell, then
// alternate decode / re-encode to extend the sequence forward in time.
AnticipationOutput forward_pass(std::span<const Vector> observed, std::size_t gen_count,
                                const AnticipationParams& p);
// Continue forward generation from an existing encoder hidden state.
AnticipationOutput generate_from(Vector hidden, std::size_t gen_count,
                                 const AnticipationParams& p);
// Mirror image: the backward cell consumes the frames latest-first and
// extends the sequence backward in time. Input is still given earliest-first;
// output is in generation order (stepping back in time).
AnticipationOutput backward_pass(std::span<const Vector> observed, std::size_t gen_count,
                                 const AnticipationParams& p);

// Sum of squared entrywise differences over all frames (no averaging).
double cycle_loss(std::span<const Vector> reference, std::span<const Vector> reconstructed);

struct PhaseResult {
  double loss = 0.0;
  std::vector<Vector> generated;  // anticipated frames from the first leg
};

// Phase 1: encode the observed frames forward, generate gen_count futures,
// run them through the backward cell to reconstruct the observed frames, and
// take the cycle loss. Gradients for all three parameter groups are written
// into `grads` (overwritten, not accumulated).
PhaseResult phase1_step(std::span<const Vector> frames, std::size_t gen_count,
                        const AnticipationParams& p, AnticipationParams& grads);
// Phase 2: the same cycle with every flow inverted, so the backward cell
// trains on real frames.
PhaseResult phase2_step(std::span<const Vector> frames, std::size_t gen_count,
                        const AnticipationParams& p, AnticipationParams& grads);

}  // namespace oad
