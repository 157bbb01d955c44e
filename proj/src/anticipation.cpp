#include "oad/anticipation.hpp"

#include <string>

namespace oad {

AnticipationParams make_anticipation(std::size_t feat_dim, std::size_t hidden) {
  return {make_gru(feat_dim, hidden), make_gru(feat_dim, hidden),
          make_linear(hidden, feat_dim)};
}

AnticipationParams init_anticipation(std::size_t feat_dim, std::size_t hidden, Rng& rng) {
  AnticipationParams p;
  p.fgru = init_gru(feat_dim, hidden, rng);
  p.bgru = init_gru(feat_dim, hidden, rng);
  p.dec = init_linear(hidden, feat_dim, rng);
  return p;
}

void append_views(std::vector<TensorView>& out, AnticipationParams& p, const std::string& prefix) {
  append_views(out, p.fgru, prefix + ".fgru");
  append_views(out, p.bgru, prefix + ".bgru");
  append_views(out, p.dec, prefix + ".dec");
}

void set_zero(AnticipationParams& p) {
  set_zero(p.fgru);
  set_zero(p.bgru);
  set_zero(p.dec);
}

void add_scaled(AnticipationParams& acc, const AnticipationParams& g, double scale) {
  add_scaled(acc.fgru, g.fgru, scale);
  add_scaled(acc.bgru, g.bgru, scale);
  add_scaled(acc.dec, g.dec, scale);
}

namespace {

AnticipationOutput roll(std::span<const Vector> input, bool latest_first,
                        const GruCellParams& cell, const LinearParams& dec,
                        std::size_t gen_count) {
  Vector h(cell.hidden_dim(), 0.0);
  if (latest_first) {
    for (std::size_t i = input.size(); i-- > 0;) h = gru_step(input[i], h, cell);
  } else {
    for (const Vector& x : input) h = gru_step(x, h, cell);
  }
  AnticipationOutput out;
  out.generated.reserve(gen_count);
  for (std::size_t k = 0; k < gen_count; ++k) {
    Vector x = linear(h, dec);
    h = gru_step(x, h, cell);
    out.generated.push_back(std::move(x));
  }
  out.final_hidden = std::move(h);
  return out;
}

// Taped mirror of roll(); returns ids of the generated frames.
std::vector<Tape::Id> roll_taped(Tape& tape, std::span<const Tape::Id> input,
                                 bool latest_first, const GruCellParams& cell,
                                 GruCellParams* cell_grad, const LinearParams& dec,
                                 LinearParams* dec_grad, std::size_t gen_count) {
  Tape::Id h = tape.constant(Vector(cell.hidden_dim(), 0.0));
  if (latest_first) {
    for (std::size_t i = input.size(); i-- > 0;) h = tape.gru(cell, cell_grad, input[i], h);
  } else {
    for (Tape::Id x : input) h = tape.gru(cell, cell_grad, x, h);
  }
  std::vector<Tape::Id> generated;
  generated.reserve(gen_count);
  for (std::size_t k = 0; k < gen_count; ++k) {
    const Tape::Id x = tape.linear(dec, dec_grad, h);
    h = tape.gru(cell, cell_grad, x, h);
    generated.push_back(x);
  }
  return generated;
}

void check_frames(std::span<const Vector> frames, const AnticipationParams& p, const char* op) {
  for (const Vector& f : frames)
    if (f.size() != p.feat_dim())
      throw ShapeError(std::string(op) + ": frame dim " + std::to_string(f.size()) +
                       " vs model " + std::to_string(p.feat_dim()));
}

}  // namespace

AnticipationOutput forward_pass(std::span<const Vector> observed, std::size_t gen_count,
                                const AnticipationParams& p) {
  check_frames(observed, p, "forward_pass");
  return roll(observed, /*latest_first=*/false, p.fgru, p.dec, gen_count);
}

AnticipationOutput generate_from(Vector hidden, std::size_t gen_count,
                                 const AnticipationParams& p) {
  if (hidden.size() != p.hidden_dim())
    throw ShapeError("generate_from: hidden dim mismatch");
  AnticipationOutput out;
  out.generated.reserve(gen_count);
  Vector h = std::move(hidden);
  for (std::size_t k = 0; k < gen_count; ++k) {
    Vector x = linear(h, p.dec);
    h = gru_step(x, h, p.fgru);
    out.generated.push_back(std::move(x));
  }
  out.final_hidden = std::move(h);
  return out;
}

AnticipationOutput backward_pass(std::span<const Vector> observed, std::size_t gen_count,
                                 const AnticipationParams& p) {
  check_frames(observed, p, "backward_pass");
  return roll(observed, /*latest_first=*/true, p.bgru, p.dec, gen_count);
}

double cycle_loss(std::span<const Vector> reference, std::span<const Vector> reconstructed) {
  if (reference.size() != reconstructed.size())
    throw ShapeError("cycle_loss: " + std::to_string(reference.size()) + " vs " +
                     std::to_string(reconstructed.size()) + " frames");
  double loss = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i)
    loss += squared_distance(reconstructed[i], reference[i]);
  return loss;
}

namespace {

PhaseResult cycle_phase(std::span<const Vector> frames, std::size_t gen_count,
                        const AnticipationParams& p, AnticipationParams& grads,
                        bool forward_first) {
  if (frames.empty()) throw ShapeError("cycle phase: empty frame window");
  check_frames(frames, p, "cycle phase");

  Tape tape;
  std::vector<Tape::Id> obs;
  obs.reserve(frames.size());
  for (const Vector& f : frames) obs.push_back(tape.constant(f));

  const GruCellParams& first = forward_first ? p.fgru : p.bgru;
  const GruCellParams& second = forward_first ? p.bgru : p.fgru;
  GruCellParams* first_grad = forward_first ? &grads.fgru : &grads.bgru;
  GruCellParams* second_grad = forward_first ? &grads.bgru : &grads.fgru;

  // First leg extends the sequence away from the window; the second leg
  // consumes those frames (reversed back into its own temporal order) and
  // regenerates the window from the far end inwards.
  const std::vector<Tape::Id> extended =
      roll_taped(tape, obs, /*latest_first=*/!forward_first, first, first_grad,
                 p.dec, &grads.dec, gen_count);
  const std::vector<Tape::Id> regenerated =
      roll_taped(tape, extended, /*latest_first=*/true, second, second_grad,
                 p.dec, &grads.dec, frames.size());

  // Phase 1 regenerates frames t..0; phase 2 regenerates 0..t.
  std::vector<Tape::Id> terms;
  terms.reserve(frames.size());
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const std::size_t frame = forward_first ? frames.size() - 1 - k : k;
    terms.push_back(tape.squared_error(regenerated[k], frames[frame]));
  }
  const Tape::Id loss = tape.sum(terms);
  tape.backward(loss);

  PhaseResult out;
  out.loss = tape.scalar(loss);
  out.generated.reserve(extended.size());
  for (Tape::Id id : extended) out.generated.push_back(tape.value(id));
  return out;
}

}  // namespace

PhaseResult phase1_step(std::span<const Vector> frames, std::size_t gen_count,
                        const AnticipationParams& p, AnticipationParams& grads) {
  return cycle_phase(frames, gen_count, p, grads, /*forward_first=*/true);
}

PhaseResult phase2_step(std::span<const Vector> frames, std::size_t gen_count,
                        const AnticipationParams& p, AnticipationParams& grads) {
  return cycle_phase(frames, gen_count, p, grads, /*forward_first=*/false);
}

}  // namespace oad
