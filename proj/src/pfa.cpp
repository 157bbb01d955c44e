#include "oad/pfa.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oad {

namespace {
constexpr double kClamp = 1e-12;
}

SmoothState initial_smooth_state(std::size_t outputs) {
  return {Vector(outputs, 0.5)};
}

PfaParams make_pfa(std::size_t feat_dim, std::size_t hidden, std::size_t cls_hidden,
                   std::size_t wgen_hidden, std::size_t outputs) {
  PfaParams p;
  p.agg = make_gru(feat_dim, hidden);
  p.cls1 = make_linear(hidden, cls_hidden);
  p.cls2 = make_linear(cls_hidden, outputs);
  p.wgen_f = make_linear(feat_dim, wgen_hidden);
  p.wgen_g = make_linear(wgen_hidden, 2);
  return p;
}

PfaParams init_pfa(std::size_t feat_dim, std::size_t hidden, std::size_t cls_hidden,
                   std::size_t wgen_hidden, std::size_t outputs, Rng& rng) {
  PfaParams p;
  p.agg = init_gru(feat_dim, hidden, rng);
  p.cls1 = init_linear(hidden, cls_hidden, rng);
  p.cls2 = init_linear(cls_hidden, outputs, rng);
  p.wgen_f = init_linear(feat_dim, wgen_hidden, rng);
  p.wgen_g = init_linear(wgen_hidden, 2, rng);
  return p;
}

void append_views(std::vector<TensorView>& out, PfaParams& p, const std::string& prefix) {
  append_views(out, p.agg, prefix + ".agg");
  append_views(out, p.cls1, prefix + ".cls1");
  append_views(out, p.cls2, prefix + ".cls2");
  append_views(out, p.wgen_f, prefix + ".wgen_f");
  append_views(out, p.wgen_g, prefix + ".wgen_g");
}

void set_zero(PfaParams& p) {
  set_zero(p.agg);
  set_zero(p.cls1);
  set_zero(p.cls2);
  set_zero(p.wgen_f);
  set_zero(p.wgen_g);
}

void add_scaled(PfaParams& acc, const PfaParams& g, double scale) {
  add_scaled(acc.agg, g.agg, scale);
  add_scaled(acc.cls1, g.cls1, scale);
  add_scaled(acc.cls2, g.cls2, scale);
  add_scaled(acc.wgen_f, g.wgen_f, scale);
  add_scaled(acc.wgen_g, g.wgen_g, scale);
}

Vector classify(std::span<const Vector> features, const PfaParams& p) {
  if (features.empty()) throw ShapeError("classify: empty feature sequence");
  Vector h(p.hidden_dim(), 0.0);
  for (const Vector& f : features) h = gru_step(f, h, p.agg);
  return classify_from_hidden(h, p);
}

Vector classify_from_hidden(const Vector& hidden, const PfaParams& p) {
  return sigmoid(linear(relu(linear(hidden, p.cls1)), p.cls2));
}

Vector smooth_weights(const Vector& x_cur, const PfaParams& p) {
  return softmax(linear(relu(linear(x_cur, p.wgen_f)), p.wgen_g));
}

Vector aggregate(const Vector& p_c, const SmoothState& prev, const Vector& w) {
  if (w.size() != 2) throw ShapeError("aggregate: weight vector must have size 2");
  check_same_size(p_c, prev.prev_probs, "aggregate");
  Vector out(p_c.size());
  for (std::size_t i = 0; i < p_c.size(); ++i)
    out[i] = w[0] * p_c[i] + w[1] * prev.prev_probs[i];
  return out;
}

double pfa_loss(const Vector& probs, const Vector& target) {
  check_same_size(probs, target, "pfa_loss");
  const double inv_n = 1.0 / static_cast<double>(probs.size());
  double loss = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double q = std::clamp(probs[i], kClamp, 1.0 - kClamp);
    loss -= inv_n * (target[i] * std::log(q) + (1.0 - target[i]) * std::log1p(-q));
  }
  return loss;
}

Vector uniform_smoothing_baseline(const Vector& p_c, const SmoothState& prev) {
  return aggregate(p_c, prev, Vector{0.5, 0.5});
}

Vector window_smoothing_baseline(std::span<const Vector> history, std::size_t window) {
  if (window < 1) throw ShapeError("window_smoothing_baseline: window must be >= 1");
  if (history.empty()) throw ShapeError("window_smoothing_baseline: empty history");
  const std::size_t take = std::min(window, history.size());
  Vector out(history.back().size(), 0.0);
  for (std::size_t k = history.size() - take; k < history.size(); ++k) {
    check_same_size(history[k], out, "window_smoothing_baseline");
    axpy(1.0, history[k], out);
  }
  for (double& e : out) e /= static_cast<double>(take);
  return out;
}

PfaStepResult pfa_train_step(std::span<const Vector> past, std::span<const Vector> generated,
                             const Vector& current_frame, const SmoothState& prev,
                             const Vector& target, const PfaParams& p, PfaParams& grads) {
  if (past.empty()) throw ShapeError("pfa_train_step: empty past");
  Tape tape;
  Tape::Id h = tape.constant(Vector(p.hidden_dim(), 0.0));
  for (const Vector& f : past) h = tape.gru(p.agg, &grads.agg, tape.constant(f), h);
  for (const Vector& f : generated) h = tape.gru(p.agg, &grads.agg, tape.constant(f), h);
  const Tape::Id pc =
      tape.sigmoid(tape.linear(p.cls2, &grads.cls2,
                               tape.relu(tape.linear(p.cls1, &grads.cls1, h))));
  const Tape::Id w = tape.softmax(
      tape.linear(p.wgen_g, &grads.wgen_g,
                  tape.relu(tape.linear(p.wgen_f, &grads.wgen_f,
                                        tape.constant(current_frame)))));
  const Tape::Id pt = tape.blend(w, pc, prev.prev_probs);
  const Tape::Id loss = tape.binary_cross_entropy(pt, target);
  tape.backward(loss);
  return {tape.scalar(loss), tape.value(pt)};
}

}  // namespace oad
