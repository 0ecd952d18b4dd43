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

#include <functional>
#include <string>
#include <vector>

#include "morphotrans/resources.hpp"
#include "morphotrans/translator.hpp"

namespace morphotrans {

struct LexicalItem
{
  std::string form;
  // Formed by concatenating two or more translated items.
  bool concatenated = false;

  friend bool operator==(const LexicalItem&, const LexicalItem&) = default;
};

// Candidate target lexical units, in the order they must appear in the corpus.
struct LexicalSeq
{
  std::vector<LexicalItem> items;

  std::vector<std::string> forms() const;
  std::string render() const;  // space-joined forms

  friend bool operator==(const LexicalSeq&, const LexicalSeq&) = default;
};

// Every permutation of the items times every ordered concatenation pattern,
// n!·2^(n-1) before de-duplication on the item-string sequence. With
// permute=false only the original order is used.
std::vector<LexicalSeq> recompose(const TranslatedSeq& translated, bool permute = true);

// Extra rejection rule: return true to drop the sequence.
using SequenceRule = std::function<bool(const LexicalSeq&)>;

// Drops sequences holding an item whose whole string is listed in the target
// inventory only as a prefix, confix or suffix. Extra rules run afterwards.
std::vector<LexicalSeq> filter_bound_items(std::vector<LexicalSeq> sequences, const ComponentInventory& target,
                                           const std::vector<SequenceRule>& extra_rules = {});

}  // namespace morphotrans
