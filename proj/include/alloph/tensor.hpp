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
#include <span>
#include <vector>

#include "alloph/error.hpp"
#include "alloph/rng.hpp"

namespace alloph {

// Dense row-major tensor of 64-bit floats. Rank 0 (scalar), 1 and 2 are the
// only shapes the architecture needs.
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> shape);
  Tensor(std::vector<std::size_t> shape, std::vector<double> data);

  static Tensor scalar(double value);
  static Tensor zeros_like(const Tensor& other) { return Tensor(other.shape_); }
  static Tensor randn(std::vector<std::size_t> shape, Rng& rng, double stddev);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  std::size_t dim(std::size_t axis) const { return shape_.at(axis); }

  // Rows/cols of a rank-2 tensor; a rank-1 tensor is treated as one row.
  std::size_t rows() const { return rank() == 2 ? shape_[0] : 1; }
  std::size_t cols() const {
    return rank() == 2 ? shape_[1] : (rank() == 1 ? shape_[0] : 1);
  }

  double& at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::span<double> row(std::size_t r) {
    return std::span<double>(data_.data() + r * cols(), cols());
  }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_.data() + r * cols(), cols());
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  double item() const;

  void fill(double value);
  void add_scaled(const Tensor& other, double factor);

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

void require_shape(const Tensor& t, std::size_t rows, std::size_t cols,
                   const char* what);

}  // namespace alloph
