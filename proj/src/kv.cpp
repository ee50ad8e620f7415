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

#include "alloph/kv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "alloph/error.hpp"

namespace alloph {

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      break;
    }
    out.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string format_f64(double value) {
  // %.17g always round-trips; fall back through shorter forms when they
  // re-parse to the same bits so typical values stay readable.
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, value);
    if (std::strtod(buf, nullptr) == value) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

KvMap KvMap::parse(std::string_view text) {
  KvMap map;
  std::size_t line_no = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      raise(ErrorCode::kInvalidArgument,
            "config line " + std::to_string(line_no) + " has no '=': " + line);
    }
    map.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return map;
}

KvMap KvMap::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::kIo, "cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void KvMap::set(std::string key, std::string value) {
  auto it = index_.find(key);
  if (it != index_.end()) {
    items_[it->second].second = std::move(value);
    return;
  }
  index_.emplace(key, items_.size());
  items_.emplace_back(std::move(key), std::move(value));
}

void KvMap::set_f64(std::string key, double value) { set(std::move(key), format_f64(value)); }
void KvMap::set_u64(std::string key, std::uint64_t value) { set(std::move(key), std::to_string(value)); }
void KvMap::set_i64(std::string key, std::int64_t value) { set(std::move(key), std::to_string(value)); }
void KvMap::set_bool(std::string key, bool value) { set(std::move(key), value ? "true" : "false"); }

bool KvMap::contains(std::string_view key) const {
  return index_.find(std::string(key)) != index_.end();
}

std::optional<std::string> KvMap::get(std::string_view key) const {
  auto it = index_.find(std::string(key));
  if (it == index_.end()) return std::nullopt;
  return items_[it->second].second;
}

std::string KvMap::get_str(std::string_view key, std::string_view fallback) const {
  auto v = get(key);
  return v ? *v : std::string(fallback);
}

double KvMap::get_f64(std::string_view key, double fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  char* end = nullptr;
  double out = std::strtod(v->c_str(), &end);
  if (end == v->c_str() || *end != '\0') {
    raise(ErrorCode::kInvalidArgument, "key '" + std::string(key) + "' is not a number: " + *v);
  }
  return out;
}

std::uint64_t KvMap::get_u64(std::string_view key, std::uint64_t fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  char* end = nullptr;
  unsigned long long out = std::strtoull(v->c_str(), &end, 10);
  if (end == v->c_str() || *end != '\0') {
    raise(ErrorCode::kInvalidArgument, "key '" + std::string(key) + "' is not an integer: " + *v);
  }
  return out;
}

std::int64_t KvMap::get_i64(std::string_view key, std::int64_t fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  char* end = nullptr;
  long long out = std::strtoll(v->c_str(), &end, 10);
  if (end == v->c_str() || *end != '\0') {
    raise(ErrorCode::kInvalidArgument, "key '" + std::string(key) + "' is not an integer: " + *v);
  }
  return out;
}

bool KvMap::get_bool(std::string_view key, bool fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "no") return false;
  raise(ErrorCode::kInvalidArgument, "key '" + std::string(key) + "' is not a bool: " + *v);
}

std::string KvMap::require_str(std::string_view key) const {
  auto v = get(key);
  if (!v) raise(ErrorCode::kInvalidArgument, "missing required key '" + std::string(key) + "'");
  return *v;
}

void KvMap::merge_defaults(const KvMap& defaults) {
  for (const auto& [key, value] : defaults.items_) {
    if (!contains(key)) set(key, value);
  }
}

void KvMap::merge_overrides(const KvMap& overrides) {
  for (const auto& [key, value] : overrides.items_) set(key, value);
}

std::string KvMap::render() const {
  std::string out;
  for (const auto& [key, value] : items_) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  }
  return out;
}

void KvMap::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::kIo, "cannot write config file: " + path);
  out << render();
}

}  // namespace alloph
