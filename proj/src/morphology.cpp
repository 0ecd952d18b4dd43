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

#include "morphotrans/morphology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "morphotrans/porter.hpp"
#include "morphotrans/text.hpp"

namespace morphotrans {

SuffixStripper::SuffixStripper(std::vector<std::string> suffixes, std::size_t min_stem_length)
    : suffixes_(std::move(suffixes)), min_stem_length_(min_stem_length)
{
  std::stable_sort(suffixes_.begin(), suffixes_.end(),
                   [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
}

std::string SuffixStripper::stem(std::string_view word) const
{
  for (const auto& suf : suffixes_) {
    if (word.size() <= suf.size() || !word.ends_with(suf))
      continue;
    const auto base = word.substr(0, word.size() - suf.size());
    if (utf8_length(base) >= min_stem_length_)
      return std::string(base);
  }
  return std::string(word);
}

const SuffixStripper& SuffixStripper::french()
{
  static const SuffixStripper s(
      {"issements", "issement", "atrices", "atrice", "ateurs", "ateur", "ations", "ation", "ements", "ement",
       "ités", "ité", "iques", "ique", "ismes", "isme", "istes", "iste", "ables", "able", "ibles", "ible",
       "euses", "euse", "eux", "ives", "ive", "ifs", "if", "elles", "elle", "els", "el", "ales", "ale",
       "aux", "al", "ances", "ance", "ences", "ence", "ants", "ante", "ant", "ents", "ente", "ent",
       "ées", "ée", "és", "é", "er", "es", "e", "s"},
      3);
  return s;
}

const SuffixStripper& SuffixStripper::german()
{
  static const SuffixStripper s(
      {"ungen", "ung", "heiten", "heit", "keiten", "keit", "lichen", "licher", "liches", "lich", "ischen",
       "ischer", "isches", "isch", "igen", "iger", "iges", "ig", "ern", "em", "en", "er", "es", "e", "s"},
      3);
  return s;
}

std::string stem(std::string_view word, std::string_view language)
{
  const auto folded = fold_case(word);
  if (language == "en")
    return porter_stem(folded);
  if (language == "fr")
    return SuffixStripper::french().stem(folded);
  if (language == "de")
    return SuffixStripper::german().stem(folded);
  throw ConfigError("no stemmer for language '" + std::string(language) + "'");
}

std::vector<StemFamily> stem_families(std::span<const std::vector<std::string>> wordlists, std::string_view language)
{
  std::map<std::string, std::set<std::string>> groups;
  for (const auto& list : wordlists)
    for (const auto& w : list) {
      auto folded = fold_case(trim(w));
      if (folded.empty())
        continue;
      auto s = stem(folded, language);
      groups[std::move(s)].insert(std::move(folded));
    }
  std::vector<StemFamily> out;
  for (auto& [s, members] : groups)
    if (members.size() >= 2)
      out.push_back({s, std::move(members)});
  return out;
}

VariantTable build_families(std::span<const std::vector<std::string>> wordlists, std::string_view language)
{
  VariantTable table{std::string(language)};
  for (const auto& fam : stem_families(wordlists, language))
    for (const auto& a : fam.members)
      for (const auto& b : fam.members)
        if (a != b)
          table.add(a, b);
  return table;
}

namespace {

bool is_hyphenated(std::string_view word)
{
  return strip_hyphen_markers(word).find('-') != std::string_view::npos;
}

}  // namespace

std::vector<std::string> harvest_terms(const TaggedCorpus& corpus, std::span<const std::string> seeds)
{
  if (seeds.empty())
    throw std::invalid_argument("harvest_terms: no seed morphemes");
  std::vector<std::string> needles;
  for (const auto& s : seeds) {
    auto n = fold_case(strip_hyphen_markers(trim(s)));
    if (!n.empty())
      needles.push_back(std::move(n));
  }
  std::set<std::string> found;
  for (const auto& tok : corpus.tokens()) {
    auto word = fold_case(tok.surface);
    if (word.empty() || found.count(word))
      continue;
    const bool hit = is_hyphenated(word) || std::any_of(needles.begin(), needles.end(), [&](const std::string& n) {
                       return word.find(n) != std::string::npos;
                     });
    if (hit)
      found.insert(std::move(word));
  }
  return {found.begin(), found.end()};
}

std::vector<std::string> filter_test_set(std::span<const std::string> terms, const TranslationTable& general_dictionary,
                                         const TaggedCorpus& target_corpus)
{
  std::vector<std::string> kept;
  for (const auto& term : terms) {
    const auto translations = general_dictionary.lookup(fold_case(trim(term)));
    const bool attested = std::any_of(translations.begin(), translations.end(),
                                      [&](const TargetForm& t) { return target_corpus.has_lemma(t.form); });
    if (!attested)
      kept.push_back(term);
  }
  return kept;
}

}  // namespace morphotrans
