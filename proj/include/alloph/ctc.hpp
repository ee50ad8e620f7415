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

#include <cstddef>
#include <vector>

#include "alloph/tensor.hpp"

namespace alloph {

// Label ids over an alphabet of size K; the blank takes id K, which by
// convention is the last logit column. Empty sequences are allowed.
using LabelSequence = std::vector<std::size_t>;

struct CtcLoss {
  double loss = 0.0;      // -log p(target | input)
  Tensor logit_grad;      // [T, K+1], softmax minus state-occupancy posterior
};

// Log-space forward/backward over the blank-interleaved label trellis.
// `log_probs` rows must be valid log-distributions (e.g. log_softmax output);
// the returned gradient is with respect to the logits that produced them.
// Throws TargetTooLong when T is shorter than the minimum frame count.
CtcLoss ctc_loss(const Tensor& log_probs, const LabelSequence& target);

// Same loss computed from unnormalized logits (log_softmax applied inside).
CtcLoss ctc_loss_from_logits(const Tensor& logits, const LabelSequence& target);

// Reference oracle: sums the probability of every frame labeling that
// collapses to `target`. Cost is (K+1)^T; throws TooLarge beyond 10^6 paths.
double ctc_brute_force(const Tensor& log_probs, const LabelSequence& target);

// Per-frame argmax, collapse adjacent repeats, drop blanks. Works on logits
// or log-probabilities alike.
LabelSequence ctc_greedy_decode(const Tensor& scores);

// Minimum number of frames that makes `target` feasible: U plus the number
// of adjacent repeated labels.
std::size_t ctc_min_frames(const LabelSequence& target);

double log_sum_exp(double a, double b);

}  // namespace alloph
