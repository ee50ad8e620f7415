/*
 * Copyright (c) 2026, the alloph authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "alloph/rng.hpp"
#include "alloph/tensor.hpp"

namespace alloph {

// Handle to a node on a Tape.
struct Value {
  std::int32_t id = -1;
  bool valid() const { return id >= 0; }
};

// Named model parameters with a deterministic registration order. Parameters
// flagged frozen_zero read as exact zeros and are never updated; parameters
// flagged non-trainable keep their values but still propagate gradients.
class ParamStore {
 public:
  struct Entry {
    std::string name;
    Tensor value;
    Tensor grad;
    bool trainable = true;
    bool frozen_zero = false;
  };

  std::size_t add(std::string name, Tensor init, bool trainable = true,
                  bool frozen_zero = false);

  std::size_t size() const { return entries_.size(); }
  Entry& entry(std::size_t i) { return entries_.at(i); }
  const Entry& entry(std::size_t i) const { return entries_.at(i); }
  std::size_t find(std::string_view name) const;
  bool has(std::string_view name) const;

  void zero_grads();
  std::size_t element_count() const;

 private:
  std::vector<Entry> entries_;
};

// Single-use reverse-mode tape over the fixed op set the architecture needs.
// Node creation order is a topological order, so backward() is a reverse
// sweep. Tapes are cheap; one is built per forward pass.
class Tape {
 public:
  Value constant(Tensor t);
  Value param(ParamStore& store, std::size_t index);

  // y[T,D] = x[T,H] * w[H,D] + b[D]
  Value affine(Value x, Value w, Value b);
  // y[T,P] = scale * a[T,D] * b[P,D]^T
  Value matmul_scaled(Value a, Value b, double scale);
  Value relu(Value x);
  // Row-wise, numerically stabilized by max subtraction.
  Value softmax(Value x);
  Value log_softmax(Value x);
  // y[t,g] = max over group g of x[t,.]; gradient routes to the argmax
  // (lowest index on ties).
  Value maxpool_groups(Value x, std::vector<std::vector<std::size_t>> groups);
  Value concat_last(const std::vector<Value>& xs);
  // Inverted dropout; identity when train is false or rate is 0.
  Value dropout(Value x, double rate, Rng& rng, bool train);
  // Sliding windows over time: x[T0,F] -> y[T, context*F], T = (T0-context)/stride + 1.
  Value windows(Value x, std::size_t context, std::size_t stride);
  // Row i of the result is the sum of the rank-1 values in row_terms[i].
  Value sum_rows(const std::vector<std::vector<Value>>& row_terms);
  // CTC loss of a label sequence given unnormalized logits [T,K+1]
  // (blank = last column). Scalar output.
  Value ctc(Value logits, const std::vector<std::size_t>& target);
  Value add(Value a, Value b);
  Value scale(Value x, double factor);
  Value add_scalars(const std::vector<Value>& xs);
  // Scalar projection sum_ij w_ij * x_ij; used by gradient checking to fold
  // an op output into a single differentiable number.
  Value weighted_sum(Value x, Tensor weights);

  const Tensor& value(Value v) const;
  const Tensor& grad(Value v) const;

  // Seeds d(root)/d(root) = 1, sweeps the tape in reverse and accumulates
  // parameter gradients into their ParamStore entries.
  void backward(Value root);

 private:
  struct Node {
    Tensor value;
    Tensor grad;
    std::function<void(Tape&)> backprop;  // may be empty for leaves
    ParamStore* store = nullptr;
    std::size_t param_index = 0;
  };

  Value push(Tensor value);
  Node& node(Value v) { return nodes_.at(static_cast<std::size_t>(v.id)); }
  const Node& node(Value v) const { return nodes_.at(static_cast<std::size_t>(v.id)); }

  std::vector<Node> nodes_;
};

}  // namespace alloph
