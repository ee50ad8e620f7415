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

#include <string>
#include <string_view>

namespace alloph {

// Canonical decomposition (NFD) of a UTF-8 string. IPA glyph sources mix
// precomposed and combining diacritics, so all segment keys are normalized
// before comparison or storage.
std::string nfd(std::string_view utf8);

bool is_valid_utf8(std::string_view utf8);

}  // namespace alloph
