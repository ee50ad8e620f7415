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

#include <istream>
#include <string>
#include <vector>

namespace alloph {

// RFC-4180 CSV reader: comma-delimited, double-quote quoting, quoted fields
// may contain commas, quotes ("" escape) and newlines. Accepts both \n and
// \r\n record terminators.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Reads one record into `fields`. Returns false on clean end of input.
  // Throws MalformedRow on a quoting error.
  bool next(std::vector<std::string>& fields);

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::string csv_quote(const std::string& field);

}  // namespace alloph
