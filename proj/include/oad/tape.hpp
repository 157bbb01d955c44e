#pragma once

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "oad/layers.hpp"

namespace oad {

// Reverse-mode gradient tape over vector-valued nodes. Ops append nodes in
// topological order; backward() replays them in reverse and accumulates into
// the gradient structs supplied when the ops were recorded. Every backward()
// call first clears node and parameter gradients, so repeated calls over the
// same tape produce identical results.
//
// Parameter structs passed by pointer must outlive the tape; a null gradient
// pointer records the op without parameter gradients.
class Tape {
 public:
  using Id = std::uint32_t;

  Id constant(Vector v);
  Id gru(const GruCellParams& p, GruCellParams* grad, Id x, Id h);
  Id linear(const LinearParams& p, LinearParams* grad, Id x);
  Id relu(Id x);
  Id sigmoid(Id x);
  Id softmax(Id x);
  // w[0]*current + w[1]*previous; `previous` enters as a constant.
  Id blend(Id w, Id current, Vector previous);

  // Scalar reductions.
  Id squared_error(Id pred, Vector target);          // sum((pred - target)^2)
  Id binary_cross_entropy(Id probs, Vector target);  // per-class mean BCE
  Id sum_entries(Id x);
  Id sum(const std::vector<Id>& scalars);

  const Vector& value(Id id) const { return nodes_[id].value; }
  double scalar(Id id) const;
  void backward(Id loss);
  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    Vector value;
    Vector grad;
    std::function<void(Tape&)> back;
  };

  Id push(Vector value);
  const Vector& val(Id id) const { return nodes_[id].value; }
  Vector& grad(Id id) { return nodes_[id].grad; }
  void track(double* data, std::size_t n);
  void track(LinearParams* g);
  void track(GruCellParams* g);

  std::vector<Node> nodes_;
  std::vector<std::pair<double*, std::size_t>> tracked_;
  std::unordered_set<double*> tracked_seen_;
};

}  // namespace oad
