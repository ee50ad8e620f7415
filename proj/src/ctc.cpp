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

#include "alloph/ctc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "alloph/error.hpp"

namespace alloph {

namespace {
constexpr double kLogZero = -std::numeric_limits<double>::infinity();

Tensor row_log_softmax(const Tensor& logits) {
  Tensor out = logits;
  for (std::size_t t = 0; t < logits.rows(); ++t) {
    auto row = out.row(t);
    double max = *std::max_element(row.begin(), row.end());
    double sum = 0.0;
    for (double v : row) sum += std::exp(v - max);
    double log_z = max + std::log(sum);
    for (double& v : row) v -= log_z;
  }
  return out;
}

void check_target(const Tensor& log_probs, const LabelSequence& target) {
  if (log_probs.rank() != 2 || log_probs.cols() < 1) {
    raise(ErrorCode::kShapeMismatch, "ctc expects a [T, K+1] matrix");
  }
  const std::size_t blank = log_probs.cols() - 1;
  for (std::size_t id : target) {
    if (id >= blank) {
      raise(ErrorCode::kIndexOutOfRange,
            "ctc target id " + std::to_string(id) +
                " out of range for alphabet of size " + std::to_string(blank));
    }
  }
}
}  // namespace

double log_sum_exp(double a, double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  return a > b ? a + std::log1p(std::exp(b - a)) : b + std::log1p(std::exp(a - b));
}

std::size_t ctc_min_frames(const LabelSequence& target) {
  std::size_t repeats = 0;
  for (std::size_t i = 1; i < target.size(); ++i) {
    if (target[i] == target[i - 1]) ++repeats;
  }
  return target.size() + repeats;
}

CtcLoss ctc_loss(const Tensor& log_probs, const LabelSequence& target) {
  check_target(log_probs, target);
  const std::size_t frames = log_probs.rows();
  const std::size_t width = log_probs.cols();
  const std::size_t blank = width - 1;
  if (frames < ctc_min_frames(target)) {
    raise(ErrorCode::kTargetTooLong,
          "target needs " + std::to_string(ctc_min_frames(target)) +
              " frames, got " + std::to_string(frames));
  }

  // Extended sequence with blanks interleaved: length 2U+1.
  const std::size_t states = 2 * target.size() + 1;
  std::vector<std::size_t> label(states, blank);
  for (std::size_t u = 0; u < target.size(); ++u) label[2 * u + 1] = target[u];

  auto allows_skip = [&](std::size_t s) {
    // A diagonal skip into state s is legal when s is a label state whose
    // previous label state holds a different label.
    return s >= 2 && label[s] != blank && label[s] != label[s - 2];
  };

  // alpha[t][s]: log-prob of prefixes ending in state s after emitting frame t.
  std::vector<std::vector<double>> alpha(frames, std::vector<double>(states, kLogZero));
  alpha[0][0] = log_probs.at(0, label[0]);
  if (states > 1) alpha[0][1] = log_probs.at(0, label[1]);
  for (std::size_t t = 1; t < frames; ++t) {
    for (std::size_t s = 0; s < states; ++s) {
      double acc = alpha[t - 1][s];
      if (s >= 1) acc = log_sum_exp(acc, alpha[t - 1][s - 1]);
      if (allows_skip(s)) acc = log_sum_exp(acc, alpha[t - 1][s - 2]);
      if (acc == kLogZero) continue;
      alpha[t][s] = acc + log_probs.at(t, label[s]);
    }
  }

  double log_like = log_sum_exp(alpha[frames - 1][states - 1],
                                states > 1 ? alpha[frames - 1][states - 2] : kLogZero);

  // beta[t][s]: log-prob of completing the path from state s, excluding the
  // emission at frame t. Keeping the emission out avoids dividing it back out
  // when combining with alpha.
  std::vector<std::vector<double>> beta(frames, std::vector<double>(states, kLogZero));
  beta[frames - 1][states - 1] = 0.0;
  if (states > 1) beta[frames - 1][states - 2] = 0.0;
  for (std::size_t t = frames - 1; t-- > 0;) {
    for (std::size_t s = 0; s < states; ++s) {
      double acc = beta[t + 1][s] == kLogZero
                       ? kLogZero
                       : beta[t + 1][s] + log_probs.at(t + 1, label[s]);
      if (s + 1 < states && beta[t + 1][s + 1] != kLogZero) {
        acc = log_sum_exp(acc, beta[t + 1][s + 1] + log_probs.at(t + 1, label[s + 1]));
      }
      if (s + 2 < states && allows_skip(s + 2) && beta[t + 1][s + 2] != kLogZero) {
        acc = log_sum_exp(acc, beta[t + 1][s + 2] + log_probs.at(t + 1, label[s + 2]));
      }
      beta[t][s] = acc;
    }
  }

  // State occupancy posterior, folded per label id.
  CtcLoss result;
  result.loss = -log_like;
  result.logit_grad = Tensor({frames, width});
  for (std::size_t t = 0; t < frames; ++t) {
    std::vector<double> occupancy(width, kLogZero);
    for (std::size_t s = 0; s < states; ++s) {
      if (alpha[t][s] == kLogZero || beta[t][s] == kLogZero) continue;
      occupancy[label[s]] = log_sum_exp(occupancy[label[s]], alpha[t][s] + beta[t][s]);
    }
    for (std::size_t k = 0; k < width; ++k) {
      double gamma = occupancy[k] == kLogZero ? 0.0 : std::exp(occupancy[k] - log_like);
      result.logit_grad.at(t, k) = std::exp(log_probs.at(t, k)) - gamma;
    }
  }
  return result;
}

CtcLoss ctc_loss_from_logits(const Tensor& logits, const LabelSequence& target) {
  return ctc_loss(row_log_softmax(logits), target);
}

double ctc_brute_force(const Tensor& log_probs, const LabelSequence& target) {
  check_target(log_probs, target);
  const std::size_t frames = log_probs.rows();
  const std::size_t width = log_probs.cols();
  const std::size_t blank = width - 1;

  double paths = std::pow(static_cast<double>(width), static_cast<double>(frames));
  if (paths > 1e6) {
    raise(ErrorCode::kTooLarge, "brute force would enumerate " +
                                    std::to_string(paths) + " paths");
  }

  double total = kLogZero;
  std::vector<std::size_t> labeling(frames, 0);
  while (true) {
    // Collapse: drop repeats, then blanks.
    LabelSequence collapsed;
    for (std::size_t t = 0; t < frames; ++t) {
      if (t > 0 && labeling[t] == labeling[t - 1]) continue;
      if (labeling[t] == blank) continue;
      collapsed.push_back(labeling[t]);
    }
    if (collapsed == target) {
      double lp = 0.0;
      for (std::size_t t = 0; t < frames; ++t) lp += log_probs.at(t, labeling[t]);
      total = log_sum_exp(total, lp);
    }
    // Next labeling in lexicographic order.
    std::size_t pos = frames;
    while (pos > 0) {
      --pos;
      if (++labeling[pos] < width) break;
      labeling[pos] = 0;
      if (pos == 0) return -total;
    }
    if (frames == 0) break;
  }
  return -total;
}

LabelSequence ctc_greedy_decode(const Tensor& scores) {
  const std::size_t blank = scores.cols() - 1;
  LabelSequence out;
  std::size_t previous = blank;
  for (std::size_t t = 0; t < scores.rows(); ++t) {
    auto row = scores.row(t);
    std::size_t best = static_cast<std::size_t>(
        std::max_element(row.begin(), row.end()) - row.begin());
    if (best != blank && best != previous) out.push_back(best);
    previous = best;
  }
  return out;
}

}  // namespace alloph
