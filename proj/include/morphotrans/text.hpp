/*
 * Copyright 2026 The morphotrans Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace morphotrans {

// UTF-8 aware lowercasing for Latin, Greek and Cyrillic letters. Bytes that do
// not form a valid sequence are copied through unchanged.
std::string fold_case(std::string_view text);

// Number of code points in a UTF-8 string.
std::size_t utf8_length(std::string_view text);

// "-cyto-" -> "cyto", "post-" -> "post". Interior hyphens are kept.
std::string_view strip_hyphen_markers(std::string_view form);

std::string_view trim(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char sep);

bool has_whitespace(std::string_view text);

template <typename Range>
std::string join(const Range& parts, std::string_view sep)
{
  std::string out;
  bool first = true;
  for (const auto& p : parts) {
    if (!first)
      out += sep;
    out += p;
    first = false;
  }
  return out;
}

}  // namespace morphotrans
