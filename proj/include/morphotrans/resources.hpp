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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "morphotrans/diagnostics.hpp"

namespace morphotrans {

enum class ComponentKind : std::uint8_t { Prefix, Confix, Suffix, Free };

inline constexpr std::array<ComponentKind, 4> kAllKinds = {
    ComponentKind::Prefix, ComponentKind::Confix, ComponentKind::Suffix, ComponentKind::Free};

constexpr bool is_bound(ComponentKind kind) { return kind != ComponentKind::Free; }

// "pref", "conf", "suff", "free"
std::string_view kind_tag(ComponentKind kind);
std::optional<ComponentKind> parse_kind_tag(std::string_view tag);

struct Component
{
  std::string form;
  ComponentKind kind;
  std::string language;

  bool bound() const { return is_bound(kind); }
};

// Typed morpheme / lexical-unit lists for one language. A form may be listed
// under several kinds at once.
class ComponentInventory
{
public:
  ComponentInventory() = default;
  explicit ComponentInventory(std::string language) : language_(std::move(language)) {}

  const std::string& language() const { return language_; }

  // Case-folds and strips hyphen markers. Returns false when the pair was
  // already present. Throws std::invalid_argument on empty or blank forms.
  bool insert(std::string_view form, ComponentKind kind);

  bool contains(std::string_view form, ComponentKind kind) const;
  bool contains(std::string_view form) const;
  // Listed as prefix, confix or suffix and never as a free unit.
  bool is_bound_only(std::string_view form) const;
  std::vector<ComponentKind> kinds_of(std::string_view form) const;

  const std::set<std::string, std::less<>>& forms(ComponentKind kind) const
  {
    return by_kind_[static_cast<std::size_t>(kind)];
  }
  std::vector<Component> components() const;

  // Number of distinct (form, kind) pairs.
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  friend bool operator==(const ComponentInventory& a, const ComponentInventory& b)
  {
    return a.by_kind_ == b.by_kind_;
  }

private:
  std::uint8_t mask_of(std::string_view form) const;

  std::string language_;
  std::array<std::set<std::string, std::less<>>, 4> by_kind_;
  std::unordered_map<std::string, std::uint8_t> masks_;
};

struct TargetForm
{
  std::string form;
  bool bound = false;

  friend auto operator<=>(const TargetForm&, const TargetForm&) = default;
};

// Source component -> target forms. Lookups on absent keys yield an empty span.
class TranslationTable
{
public:
  void add(std::string_view source, TargetForm target);
  // Adds every entry of other (union).
  void merge(const TranslationTable& other);

  std::span<const TargetForm> lookup(std::string_view source) const;
  bool contains(std::string_view source) const;

  const std::map<std::string, std::vector<TargetForm>, std::less<>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Target -> source mapping; inverted targets are tagged free.
  TranslationTable inverted() const;

  // Warns about target forms missing from the target inventory.
  void validate_targets(const ComponentInventory& target, Diagnostics& diag) const;

  friend bool operator==(const TranslationTable& a, const TranslationTable& b);

private:
  std::map<std::string, std::vector<TargetForm>, std::less<>> entries_;
};

// Directional related-form table (synonyms, morphological families).
class VariantTable
{
public:
  VariantTable() = default;
  explicit VariantTable(std::string language) : language_(std::move(language)) {}

  const std::string& language() const { return language_; }

  // Returns false (and stores nothing) for self mappings and duplicates.
  bool add(std::string_view form, std::string_view related);
  void merge(const VariantTable& other);

  std::span<const std::string> lookup(std::string_view form) const;

  const std::map<std::string, std::vector<std::string>, std::less<>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t value_count() const;
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const VariantTable& a, const VariantTable& b);

private:
  std::string language_;
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
};

class StopwordList
{
public:
  StopwordList() = default;
  explicit StopwordList(std::string language) : language_(std::move(language)) {}

  const std::string& language() const { return language_; }
  bool insert(std::string_view lemma);
  bool contains(std::string_view lemma) const { return lemmas_.find(lemma) != lemmas_.end(); }
  const std::set<std::string, std::less<>>& lemmas() const { return lemmas_; }
  std::size_t size() const { return lemmas_.size(); }

  friend bool operator==(const StopwordList& a, const StopwordList& b) { return a.lemmas_ == b.lemmas_; }

private:
  std::string language_;
  std::set<std::string, std::less<>> lemmas_;
};

struct Token
{
  std::string surface;
  std::string lemma;
  std::string pos;

  friend bool operator==(const Token&, const Token&) = default;
};

// Lemmatised, POS-tagged corpus with a lemma -> positions index. Immutable
// once built; sentence boundaries are kept so matches never cross them.
class TaggedCorpus
{
public:
  TaggedCorpus() = default;
  // Lemmas are case-folded. Empty sentences are dropped.
  TaggedCorpus(std::string language, std::vector<std::vector<Token>> sentences);

  const std::string& language() const { return language_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const Token& operator[](std::size_t i) const { return tokens_[i]; }
  const std::vector<Token>& tokens() const { return tokens_; }

  std::size_t sentence_of(std::size_t position) const { return sentence_ids_[position]; }
  std::size_t sentence_count() const { return sentence_count_; }

  // Strictly increasing positions of tokens bearing the lemma.
  std::span<const std::size_t> positions(std::string_view lemma) const;
  bool has_lemma(std::string_view lemma) const { return index_.find(std::string(lemma)) != index_.end(); }
  std::set<std::string> vocabulary() const;

  std::vector<std::vector<Token>> sentences() const;

private:
  std::string language_;
  std::vector<Token> tokens_;
  std::vector<std::size_t> sentence_ids_;
  std::size_t sentence_count_ = 0;
  std::unordered_map<std::string, std::vector<std::size_t>> index_;
};

struct PipelineConfig
{
  std::size_t min_residual_length = 5;     // L0: residual base after a prefix must be longer
  std::size_t max_gap = 3;                 // L1: max index distance between matched tokens
  std::size_t max_minimal_components = 4;
  // Restricted prefix + lexical base mode: only [Prefix, Free] splits, no
  // permutation during recomposition.
  bool prefix_base_only = false;
  bool permute = true;

  // Throws ConfigError when a bound is zero.
  void validate() const;
};

// Loaders. Throw ParseError on malformed rows and std::runtime_error naming the
// path when the file cannot be opened. Warnings go to diag when given.
ComponentInventory load_inventory(const std::string& path, const std::string& language,
                                  Diagnostics* diag = nullptr);
TranslationTable load_translation_table(const std::string& path, Diagnostics* diag = nullptr);
VariantTable load_variant_table(const std::string& path, const std::string& language = {},
                                Diagnostics* diag = nullptr);
StopwordList load_stopwords(const std::string& path, const std::string& language = {});
TaggedCorpus load_corpus(const std::string& path, const std::string& language);
std::vector<std::string> load_term_list(const std::string& path);

// Stream-level parsers backing the loaders; name is used in error messages.
ComponentInventory read_inventory(std::istream& in, const std::string& name, const std::string& language,
                                  Diagnostics* diag = nullptr);
TranslationTable read_translation_table(std::istream& in, const std::string& name, Diagnostics* diag = nullptr);
VariantTable read_variant_table(std::istream& in, const std::string& name, const std::string& language = {},
                                Diagnostics* diag = nullptr);
StopwordList read_stopwords(std::istream& in, const std::string& language = {});
TaggedCorpus read_corpus(std::istream& in, const std::string& name, const std::string& language);
std::vector<std::string> read_term_list(std::istream& in);

void write_inventory(std::ostream& out, const ComponentInventory& inv);
void write_translation_table(std::ostream& out, const TranslationTable& table);
void write_variant_table(std::ostream& out, const VariantTable& table);
void write_stopwords(std::ostream& out, const StopwordList& stop);
void write_corpus(std::ostream& out, const TaggedCorpus& corpus);
void write_term_list(std::ostream& out, std::span<const std::string> terms);

}  // namespace morphotrans
