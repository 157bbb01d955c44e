#include "oad/tape.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oad {

namespace {
constexpr double kBceClamp = 1e-12;
}

Tape::Id Tape::push(Vector value) {
  nodes_.push_back({std::move(value), {}, nullptr});
  return static_cast<Id>(nodes_.size() - 1);
}

void Tape::track(double* data, std::size_t n) {
  if (data != nullptr && tracked_seen_.insert(data).second)
    tracked_.emplace_back(data, n);
}

void Tape::track(LinearParams* g) {
  if (!g) return;
  track(g->w.data(), g->w.size());
  track(g->b.data(), g->b.size());
}

void Tape::track(GruCellParams* g) {
  if (!g) return;
  track(g->wz.data(), g->wz.size());
  track(g->uz.data(), g->uz.size());
  track(g->bz.data(), g->bz.size());
  track(g->wr.data(), g->wr.size());
  track(g->ur.data(), g->ur.size());
  track(g->br.data(), g->br.size());
  track(g->wh.data(), g->wh.size());
  track(g->uh.data(), g->uh.size());
  track(g->bh.data(), g->bh.size());
}

Tape::Id Tape::constant(Vector v) { return push(std::move(v)); }

Tape::Id Tape::gru(const GruCellParams& p, GruCellParams* grad, Id x, Id h) {
  GruTrace t = gru_forward(val(x), val(h), p);
  const Id id = push(std::move(t.out));
  track(grad);
  nodes_[id].back = [&p, grad, x, h, id, z = std::move(t.z), r = std::move(t.r),
                     rh = std::move(t.rh), cand = std::move(t.cand)](Tape& tp) {
    const Vector& g = tp.grad(id);
    const Vector& xv = tp.val(x);
    const Vector& hv = tp.val(h);
    const std::size_t n = g.size();
    Vector daz(n), dar(n), dah(n), dh(n);
    // h' = (1-z).h + z.cand
    for (std::size_t i = 0; i < n; ++i) {
      const double dz = g[i] * (cand[i] - hv[i]);
      const double dcand = g[i] * z[i];
      dh[i] = g[i] * (1.0 - z[i]);
      dah[i] = dcand * (1.0 - cand[i] * cand[i]);
      daz[i] = dz * z[i] * (1.0 - z[i]);
    }
    // candidate recurrent term uses r.h
    Vector drh(n, 0.0);
    matvec_transpose_acc(p.uh, dah, drh);
    for (std::size_t i = 0; i < n; ++i) {
      const double dr = drh[i] * hv[i];
      dh[i] += drh[i] * r[i];
      dar[i] = dr * r[i] * (1.0 - r[i]);
    }
    if (grad) {
      outer_acc(grad->wz, daz, xv);
      outer_acc(grad->uz, daz, hv);
      axpy(1.0, daz, grad->bz);
      outer_acc(grad->wr, dar, xv);
      outer_acc(grad->ur, dar, hv);
      axpy(1.0, dar, grad->br);
      outer_acc(grad->wh, dah, xv);
      outer_acc(grad->uh, dah, rh);
      axpy(1.0, dah, grad->bh);
    }
    Vector& gx = tp.grad(x);
    matvec_transpose_acc(p.wz, daz, gx);
    matvec_transpose_acc(p.wr, dar, gx);
    matvec_transpose_acc(p.wh, dah, gx);
    Vector& gh = tp.grad(h);
    matvec_transpose_acc(p.uz, daz, gh);
    matvec_transpose_acc(p.ur, dar, gh);
    axpy(1.0, dh, gh);
  };
  return id;
}

Tape::Id Tape::linear(const LinearParams& p, LinearParams* grad, Id x) {
  const Id id = push(oad::linear(val(x), p));
  track(grad);
  nodes_[id].back = [&p, grad, x, id](Tape& tp) {
    const Vector& g = tp.grad(id);
    if (grad) {
      outer_acc(grad->w, g, tp.val(x));
      axpy(1.0, g, grad->b);
    }
    matvec_transpose_acc(p.w, g, tp.grad(x));
  };
  return id;
}

Tape::Id Tape::relu(Id x) {
  const Id id = push(oad::relu(val(x)));
  nodes_[id].back = [x, id](Tape& tp) {
    const Vector& g = tp.grad(id);
    const Vector& xv = tp.val(x);
    Vector& gx = tp.grad(x);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (xv[i] > 0.0) gx[i] += g[i];
  };
  return id;
}

Tape::Id Tape::sigmoid(Id x) {
  const Id id = push(oad::sigmoid(val(x)));
  nodes_[id].back = [x, id](Tape& tp) {
    const Vector& g = tp.grad(id);
    const Vector& s = tp.val(id);
    Vector& gx = tp.grad(x);
    for (std::size_t i = 0; i < g.size(); ++i)
      gx[i] += g[i] * s[i] * (1.0 - s[i]);
  };
  return id;
}

Tape::Id Tape::softmax(Id x) {
  const Id id = push(oad::softmax(val(x)));
  nodes_[id].back = [x, id](Tape& tp) {
    const Vector& g = tp.grad(id);
    const Vector& s = tp.val(id);
    const double sg = dot(s, g);
    Vector& gx = tp.grad(x);
    for (std::size_t i = 0; i < g.size(); ++i) gx[i] += s[i] * (g[i] - sg);
  };
  return id;
}

Tape::Id Tape::blend(Id w, Id current, Vector previous) {
  const Vector& wv = val(w);
  const Vector& cv = val(current);
  if (wv.size() != 2) throw ShapeError("blend: weight vector must have size 2");
  check_same_size(cv, previous, "blend");
  Vector out(cv.size());
  for (std::size_t i = 0; i < cv.size(); ++i)
    out[i] = wv[0] * cv[i] + wv[1] * previous[i];
  const Id id = push(std::move(out));
  nodes_[id].back = [w, current, id, prev = std::move(previous)](Tape& tp) {
    const Vector& g = tp.grad(id);
    const Vector& wv = tp.val(w);
    const Vector& cv = tp.val(current);
    Vector& gw = tp.grad(w);
    Vector& gc = tp.grad(current);
    for (std::size_t i = 0; i < g.size(); ++i) {
      gc[i] += wv[0] * g[i];
      gw[0] += g[i] * cv[i];
      gw[1] += g[i] * prev[i];
    }
  };
  return id;
}

Tape::Id Tape::squared_error(Id pred, Vector target) {
  const Vector& pv = val(pred);
  check_same_size(pv, target, "squared_error");
  const Id id = push(Vector{squared_distance(pv, target)});
  nodes_[id].back = [pred, id, t = std::move(target)](Tape& tp) {
    const double g = tp.grad(id)[0];
    const Vector& pv = tp.val(pred);
    Vector& gp = tp.grad(pred);
    for (std::size_t i = 0; i < pv.size(); ++i)
      gp[i] += g * 2.0 * (pv[i] - t[i]);
  };
  return id;
}

Tape::Id Tape::binary_cross_entropy(Id probs, Vector target) {
  const Vector& pv = val(probs);
  check_same_size(pv, target, "binary_cross_entropy");
  const double inv_n = 1.0 / static_cast<double>(pv.size());
  double loss = 0.0;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    const double q = std::clamp(pv[i], kBceClamp, 1.0 - kBceClamp);
    loss -= inv_n * (target[i] * std::log(q) + (1.0 - target[i]) * std::log1p(-q));
  }
  const Id id = push(Vector{loss});
  nodes_[id].back = [probs, id, y = std::move(target), inv_n](Tape& tp) {
    const double g = tp.grad(id)[0];
    const Vector& pv = tp.val(probs);
    Vector& gp = tp.grad(probs);
    for (std::size_t i = 0; i < pv.size(); ++i) {
      const double q = std::clamp(pv[i], kBceClamp, 1.0 - kBceClamp);
      gp[i] += g * inv_n * ((1.0 - y[i]) / (1.0 - q) - y[i] / q);
    }
  };
  return id;
}

Tape::Id Tape::sum_entries(Id x) {
  const Vector& xv = val(x);
  double acc = 0.0;
  for (double e : xv) acc += e;
  const Id id = push(Vector{acc});
  nodes_[id].back = [x, id](Tape& tp) {
    const double g = tp.grad(id)[0];
    Vector& gx = tp.grad(x);
    for (double& e : gx) e += g;
  };
  return id;
}

Tape::Id Tape::sum(const std::vector<Id>& scalars) {
  double acc = 0.0;
  for (Id s : scalars) {
    if (val(s).size() != 1) throw ShapeError("sum: operands must be scalars");
    acc += val(s)[0];
  }
  const Id id = push(Vector{acc});
  nodes_[id].back = [terms = scalars, id](Tape& tp) {
    const double g = tp.grad(id)[0];
    for (Id s : terms) tp.grad(s)[0] += g;
  };
  return id;
}

double Tape::scalar(Id id) const {
  const Vector& v = nodes_[id].value;
  if (v.size() != 1) throw ShapeError("scalar: node is not scalar");
  return v[0];
}

void Tape::backward(Id loss) {
  if (loss >= nodes_.size()) throw ShapeError("backward: bad node id");
  if (nodes_[loss].value.size() != 1)
    throw ShapeError("backward: loss node must be scalar");
  for (Node& n : nodes_) n.grad.assign(n.value.size(), 0.0);
  for (auto& [data, n] : tracked_) std::fill(data, data + n, 0.0);
  nodes_[loss].grad[0] = 1.0;
  for (Id i = loss + 1; i-- > 0;)
    if (nodes_[i].back) nodes_[i].back(*this);
}

}  // namespace oad
