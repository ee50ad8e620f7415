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

#include "alloph/tensor.hpp"

#include <numeric>
#include <string>

namespace alloph {

namespace {
std::size_t shape_product(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}
}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(shape_product(shape_), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (data_.size() != shape_product(shape_)) {
    raise(ErrorCode::kShapeMismatch,
          "data length " + std::to_string(data_.size()) +
              " does not match shape product " +
              std::to_string(shape_product(shape_)));
  }
}

Tensor Tensor::scalar(double value) { return Tensor({}, {value}); }

Tensor Tensor::randn(std::vector<std::size_t> shape, Rng& rng, double stddev) {
  Tensor t(std::move(shape));
  for (double& v : t.data_) v = rng.gaussian() * stddev;
  return t;
}

double Tensor::item() const {
  if (data_.size() != 1) {
    raise(ErrorCode::kShapeMismatch, "item() on a tensor of size " +
                                         std::to_string(data_.size()));
  }
  return data_[0];
}

void Tensor::fill(double value) {
  for (double& v : data_) v = value;
}

void Tensor::add_scaled(const Tensor& other, double factor) {
  if (!same_shape(other)) {
    raise(ErrorCode::kShapeMismatch, "add_scaled shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += factor * other.data_[i];
}

void require_shape(const Tensor& t, std::size_t rows, std::size_t cols,
                   const char* what) {
  if (t.rows() != rows || t.cols() != cols) {
    raise(ErrorCode::kShapeMismatch,
          std::string(what) + ": expected " + std::to_string(rows) + "x" +
              std::to_string(cols) + ", got " + std::to_string(t.rows()) + "x" +
              std::to_string(t.cols()));
  }
}

}  // namespace alloph
