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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace alloph {

// Line-oriented "key = value" structured text. Keys keep insertion order so
// that rendering is deterministic; '#' starts a comment line.
class KvMap {
 public:
  KvMap() = default;

  static KvMap parse(std::string_view text);
  static KvMap load(const std::string& path);

  void set(std::string key, std::string value);
  void set_f64(std::string key, double value);
  void set_u64(std::string key, std::uint64_t value);
  void set_i64(std::string key, std::int64_t value);
  void set_bool(std::string key, bool value);

  bool contains(std::string_view key) const;
  std::optional<std::string> get(std::string_view key) const;

  std::string get_str(std::string_view key, std::string_view fallback) const;
  double get_f64(std::string_view key, double fallback) const;
  std::uint64_t get_u64(std::string_view key, std::uint64_t fallback) const;
  std::int64_t get_i64(std::string_view key, std::int64_t fallback) const;
  bool get_bool(std::string_view key, bool fallback) const;

  // Required lookups throw InvalidArgument when the key is absent.
  std::string require_str(std::string_view key) const;

  // Values already present win; used to layer defaults under user settings.
  void merge_defaults(const KvMap& defaults);
  // Overlay wins; used to layer flags over a config file.
  void merge_overrides(const KvMap& overrides);

  std::string render() const;
  void save(const std::string& path) const;

  const std::vector<std::pair<std::string, std::string>>& items() const {
    return items_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Shortest round-trip decimal rendering of a double. Used everywhere a float
// lands in a log or config so that re-parsing is bit-exact.
std::string format_f64(double value);

std::vector<std::string> split(std::string_view text, char sep);
std::string trim(std::string_view text);

}  // namespace alloph
