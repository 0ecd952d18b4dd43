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

#include "morphotrans/resources.hpp"

namespace morphotrans {

struct Morpheme
{
  std::string form;
  ComponentKind kind;

  friend auto operator<=>(const Morpheme&, const Morpheme&) = default;
};

// Minimal components covering a term left to right:
// [Prefix] (Confix|Free)+ [Suffix].
using MinimalSplit = std::vector<Morpheme>;

// A contiguous run of minimal components concatenated into one string.
struct ComponentGroup
{
  std::string form;
  std::size_t first = 0;  // index of the first minimal component
  std::size_t count = 0;
  // Not usable as a free lexical unit on its own.
  bool bound = false;

  friend bool operator==(const ComponentGroup&, const ComponentGroup&) = default;
};

struct Decomposition
{
  std::vector<ComponentGroup> groups;

  std::vector<std::string> forms() const;
  // '+'-joined group forms, e.g. "cyto+toxic".
  std::string render() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Case-folds the term and drops leading/trailing hyphens.
std::string normalize_term(std::string_view term);

// All grammar-valid splits with the maximal number of components. Hyphens are
// consumed only between components. Sorted and duplicate-free; empty when the
// term cannot be segmented.
std::vector<MinimalSplit> minimal_splits(std::string_view term, const ComponentInventory& inventory,
                                         const PipelineConfig& config);

// The 2^(n-1) ordered groupings of a split, finest first. A single-component
// group is bound iff its kind is bound; a multi-component group is bound unless
// the inventory lists the concatenation as a free unit.
std::vector<Decomposition> enumerate_groupings(const MinimalSplit& split,
                                               const ComponentInventory* inventory = nullptr);

// Union of enumerate_groupings over every minimal split, de-duplicated by the
// sequence of group strings.
std::vector<Decomposition> decompose(std::string_view term, const ComponentInventory& inventory,
                                     const PipelineConfig& config);

}  // namespace morphotrans
