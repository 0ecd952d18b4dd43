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
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphotrans/resources.hpp"

namespace morphotrans {

// Longest-match suffix stripping with a minimum stem length in code points.
// Used where no published algorithm is prescribed (French, German).
class SuffixStripper
{
public:
  SuffixStripper(std::vector<std::string> suffixes, std::size_t min_stem_length);

  std::string stem(std::string_view word) const;

  static const SuffixStripper& french();
  static const SuffixStripper& german();

private:
  std::vector<std::string> suffixes_;  // longest first
  std::size_t min_stem_length_;
};

// "en" uses Porter; "fr" and "de" use the conservative suffix tables. Any
// other language code throws ConfigError.
std::string stem(std::string_view word, std::string_view language);

struct StemFamily
{
  std::string stem;
  std::set<std::string> members;
};

// Families of two or more words sharing a stem, ordered by stem.
std::vector<StemFamily> stem_families(std::span<const std::vector<std::string>> wordlists, std::string_view language);

// Each family becomes a clique of directional entries, member -> every other
// member.
VariantTable build_families(std::span<const std::vector<std::string>> wordlists, std::string_view language);

// Case-folded surface forms containing a seed morpheme, plus every hyphenated
// word. Sorted and unique. Throws std::invalid_argument when seeds is empty.
std::vector<std::string> harvest_terms(const TaggedCorpus& corpus, std::span<const std::string> seeds);

// Keeps a term unless the dictionary translates it and one of those
// translations occurs as a lemma in the target corpus.
std::vector<std::string> filter_test_set(std::span<const std::string> terms, const TranslationTable& general_dictionary,
                                         const TaggedCorpus& target_corpus);

}  // namespace morphotrans
