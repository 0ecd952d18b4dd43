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
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphotrans/diagnostics.hpp"
#include "morphotrans/resources.hpp"
#include "morphotrans/selector.hpp"

namespace morphotrans {

// Resource combinations: B = general dictionary + morpheme table, D = domain
// dictionary, S = synonym variants, M = morphological variants. Pref is the
// restricted prefix + lexical base baseline. Explicit uses every configured
// resource.
enum class Preset { B, BS, BM, BD, BSMD, Pref, Explicit };

std::string_view to_string(Preset p);
std::optional<Preset> parse_preset(std::string_view text);
bool uses_domain_dictionary(Preset p);
bool uses_synonyms(Preset p);
bool uses_morphology(Preset p);

struct ResourcePaths
{
  std::string source_inventory;
  std::string target_inventory;
  std::string general_dictionary;
  std::string morpheme_table;
  std::string domain_dictionary;
  std::string source_synonyms;
  std::string target_synonyms;
  std::string source_morphology;
  std::string target_morphology;
  std::string stopwords;
  std::string corpus;
};

struct RunConfig
{
  PipelineConfig pipeline;
  ResourcePaths paths;
  std::string source_language = "en";
  std::string target_language = "fr";
  Preset preset = Preset::Explicit;
  bool fertile_translations = true;
  std::size_t workers = 1;
  std::size_t max_sequences = 10000;  // per-term LexicalSeq cap before selection

  // Pipeline settings after applying preset restrictions.
  PipelineConfig effective_pipeline() const;
  bool effective_fertile() const;
  // Throws ConfigError on missing required paths or invalid bounds.
  void validate() const;
};

// Flat "key = value" file, '#' comments. Relative paths resolve against
// base_dir. Unknown keys and malformed values throw ConfigError.
RunConfig read_run_config(std::istream& in, const std::string& name, const std::string& base_dir);
RunConfig load_run_config(const std::string& path);

// Every resource file of a run, loaded once.
struct ResourceBundle
{
  ComponentInventory source_inventory;
  ComponentInventory target_inventory;
  TranslationTable general_dictionary;
  TranslationTable morpheme_table;
  TranslationTable domain_dictionary;
  VariantTable source_synonyms;
  VariantTable target_synonyms;
  VariantTable source_morphology;
  VariantTable target_morphology;
  StopwordList stopwords;
  TaggedCorpus corpus;
  std::map<std::string, std::string> checksums;  // config key -> crc32 hex
};

// Throws on the first resource that fails to load.
ResourceBundle load_resources(const RunConfig& config, Diagnostics& diag);

// Translation and variant tables merged for one preset. References the
// bundle's inventories, stopwords and corpus.
struct ActiveResources
{
  const ComponentInventory& source_inventory;
  const ComponentInventory& target_inventory;
  TranslationTable trans;
  VariantTable source_variants;
  VariantTable target_variants;
  const StopwordList& stopwords;
  const TaggedCorpus& corpus;
};

ActiveResources select_resources(const ResourceBundle& bundle, Preset preset);

struct TermOptions
{
  PipelineConfig pipeline;
  bool fertile_translations = true;
  std::size_t max_sequences = 10000;
};

struct TermResult
{
  std::string term;
  std::vector<CandidateTranslation> candidates;
  bool decomposed = false;
  bool translated = false;
  bool recomposed = false;
  bool truncated = false;  // hit the sequence cap
  Diagnostics diagnostics;

  bool attested() const { return !candidates.empty(); }
};

// decompose -> translate -> recompose -> filter -> select for one term.
TermResult translate_term(std::string_view term, const ActiveResources& res, const TermOptions& options);

struct StageCounts
{
  std::size_t terms = 0;
  std::size_t decomposed = 0;
  std::size_t translated = 0;
  std::size_t recomposed = 0;
  std::size_t attested = 0;
};

struct RunMetadata
{
  std::string preset;
  std::map<std::string, std::string> settings;
  std::map<std::string, std::string> checksums;
  std::string started;   // UTC, ISO 8601
  std::string finished;
};

struct Lexicon
{
  std::vector<TermResult> entries;  // input order
  StageCounts stats;
  RunMetadata metadata;

  const TermResult* find(std::string_view term) const;
};

// Terms are processed independently on `workers` threads; output does not
// depend on the worker count. A failing term yields an empty entry with an
// error diagnostic.
Lexicon run_extraction(std::span<const std::string> terms, const ActiveResources& res, const TermOptions& options,
                       std::size_t workers = 1);

// Loads resources per config, then extracts. Resource errors propagate.
Lexicon run_extraction(std::span<const std::string> terms, const RunConfig& config, Diagnostics& diag);

}  // namespace morphotrans
