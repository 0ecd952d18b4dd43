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

#include "morphotrans/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>
#include <thread>

#include <boost/crc.hpp>

#include "morphotrans/decomposer.hpp"
#include "morphotrans/recomposer.hpp"
#include "morphotrans/text.hpp"
#include "morphotrans/translator.hpp"

namespace morphotrans {

namespace fs = std::filesystem;

// ----- presets ----- //

std::string_view to_string(Preset p)
{
  switch (p) {
  case Preset::B: return "B";
  case Preset::BS: return "BS";
  case Preset::BM: return "BM";
  case Preset::BD: return "BD";
  case Preset::BSMD: return "BSMD";
  case Preset::Pref: return "Pref";
  case Preset::Explicit: return "explicit";
  }
  return "explicit";
}

std::optional<Preset> parse_preset(std::string_view text)
{
  const auto t = fold_case(trim(text));
  for (auto p : {Preset::B, Preset::BS, Preset::BM, Preset::BD, Preset::BSMD, Preset::Pref, Preset::Explicit})
    if (fold_case(to_string(p)) == t)
      return p;
  return std::nullopt;
}

bool uses_domain_dictionary(Preset p) { return p == Preset::BD || p == Preset::BSMD || p == Preset::Explicit; }
bool uses_synonyms(Preset p) { return p == Preset::BS || p == Preset::BSMD || p == Preset::Explicit; }
bool uses_morphology(Preset p) { return p == Preset::BM || p == Preset::BSMD || p == Preset::Explicit; }

// ----- run configuration ----- //

PipelineConfig RunConfig::effective_pipeline() const
{
  auto cfg = pipeline;
  if (preset == Preset::Pref) {
    cfg.prefix_base_only = true;
    cfg.permute = false;
  }
  return cfg;
}

bool RunConfig::effective_fertile() const { return preset == Preset::Pref ? false : fertile_translations; }

void RunConfig::validate() const
{
  pipeline.validate();
  if (workers < 1)
    throw ConfigError("workers must be >= 1");
  if (max_sequences < 1)
    throw ConfigError("max_sequences must be >= 1");
  const auto require = [](const std::string& value, const char* key) {
    if (value.empty())
      throw ConfigError(std::string("missing required setting '") + key + "'");
  };
  require(paths.source_inventory, "source_inventory");
  require(paths.target_inventory, "target_inventory");
  require(paths.stopwords, "stopwords");
  require(paths.corpus, "corpus");
  if (preset == Preset::Explicit) {
    if (paths.general_dictionary.empty() && paths.morpheme_table.empty() && paths.domain_dictionary.empty())
      throw ConfigError("no translation table configured");
    return;
  }
  require(paths.general_dictionary, "general_dictionary");
  require(paths.morpheme_table, "morpheme_table");
  if (uses_domain_dictionary(preset))
    require(paths.domain_dictionary, "domain_dictionary");
  if (uses_synonyms(preset) && paths.source_synonyms.empty() && paths.target_synonyms.empty())
    throw ConfigError("preset " + std::string(to_string(preset)) + " needs source_synonyms or target_synonyms");
  if (uses_morphology(preset) && paths.source_morphology.empty() && paths.target_morphology.empty())
    throw ConfigError("preset " + std::string(to_string(preset)) +
                      " needs source_morphology or target_morphology");
}

namespace {

std::size_t parse_count(std::string_view value, const std::string& where)
{
  std::size_t out = 0;
  std::istringstream in{std::string(value)};
  if (!(in >> out) || !in.eof())
    throw ConfigError(where + ": expected a non-negative integer, got '" + std::string(value) + "'");
  return out;
}

bool parse_bool(std::string_view value, const std::string& where)
{
  const auto v = fold_case(value);
  if (v == "1" || v == "true" || v == "yes" || v == "on")
    return true;
  if (v == "0" || v == "false" || v == "no" || v == "off")
    return false;
  throw ConfigError(where + ": expected a boolean, got '" + std::string(value) + "'");
}

}  // namespace

RunConfig read_run_config(std::istream& in, const std::string& name, const std::string& base_dir)
{
  RunConfig cfg;
  const auto resolve = [&](std::string_view value) {
    fs::path p{std::string(value)};
    if (p.is_relative() && !base_dir.empty())
      p = fs::path(base_dir) / p;
    return p.lexically_normal().string();
  };
  const std::map<std::string, std::string*, std::less<>> path_keys = {
      {"source_inventory", &cfg.paths.source_inventory},
      {"target_inventory", &cfg.paths.target_inventory},
      {"general_dictionary", &cfg.paths.general_dictionary},
      {"morpheme_table", &cfg.paths.morpheme_table},
      {"domain_dictionary", &cfg.paths.domain_dictionary},
      {"source_synonyms", &cfg.paths.source_synonyms},
      {"target_synonyms", &cfg.paths.target_synonyms},
      {"source_morphology", &cfg.paths.source_morphology},
      {"target_morphology", &cfg.paths.target_morphology},
      {"stopwords", &cfg.paths.stopwords},
      {"corpus", &cfg.paths.corpus},
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#')
      continue;
    const auto where = name + ":" + std::to_string(lineno);
    const auto eq = t.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(where + ": expected key = value");
    const auto key = trim(t.substr(0, eq));
    const auto value = trim(t.substr(eq + 1));
    if (const auto it = path_keys.find(key); it != path_keys.end()) {
      *it->second = value.empty() ? std::string() : resolve(value);
    } else if (key == "source_language") {
      cfg.source_language = std::string(value);
    } else if (key == "target_language") {
      cfg.target_language = std::string(value);
    } else if (key == "preset") {
      const auto p = parse_preset(value);
      if (!p)
        throw ConfigError(where + ": unknown preset '" + std::string(value) + "'");
      cfg.preset = *p;
    } else if (key == "min_residual_length") {
      cfg.pipeline.min_residual_length = parse_count(value, where);
    } else if (key == "max_gap") {
      cfg.pipeline.max_gap = parse_count(value, where);
    } else if (key == "max_minimal_components") {
      cfg.pipeline.max_minimal_components = parse_count(value, where);
    } else if (key == "fertile_translations") {
      cfg.fertile_translations = parse_bool(value, where);
    } else if (key == "max_sequences") {
      cfg.max_sequences = parse_count(value, where);
    } else if (key == "workers") {
      cfg.workers = parse_count(value, where);
    } else {
      throw ConfigError(where + ": unknown setting '" + std::string(key) + "'");
    }
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config '" + path + "'");
  return read_run_config(in, path, fs::path(path).parent_path().string());
}

// ----- resources ----- //

namespace {

std::string file_crc32(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  boost::crc_32_type crc;
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    crc.process_bytes(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::ostringstream out;
  out << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
  return out.str();
}

}  // namespace

ResourceBundle load_resources(const RunConfig& config, Diagnostics& diag)
{
  config.validate();
  const auto& p = config.paths;
  const auto& src = config.source_language;
  const auto& tgt = config.target_language;
  ResourceBundle b;

  const auto sum = [&](const char* key, const std::string& path) {
    if (!path.empty())
      b.checksums[key] = file_crc32(path);
  };

  b.source_inventory = load_inventory(p.source_inventory, src, &diag);
  sum("source_inventory", p.source_inventory);
  b.target_inventory = load_inventory(p.target_inventory, tgt, &diag);
  sum("target_inventory", p.target_inventory);

  const auto table = [&](const char* key, const std::string& path, TranslationTable& into) {
    if (path.empty())
      return;
    into = load_translation_table(path, &diag);
    sum(key, path);
  };
  table("general_dictionary", p.general_dictionary, b.general_dictionary);
  table("morpheme_table", p.morpheme_table, b.morpheme_table);
  table("domain_dictionary", p.domain_dictionary, b.domain_dictionary);

  const auto variants = [&](const char* key, const std::string& path, const std::string& lang, VariantTable& into) {
    into = VariantTable(lang);
    if (path.empty())
      return;
    into = load_variant_table(path, lang, &diag);
    sum(key, path);
  };
  variants("source_synonyms", p.source_synonyms, src, b.source_synonyms);
  variants("target_synonyms", p.target_synonyms, tgt, b.target_synonyms);
  variants("source_morphology", p.source_morphology, src, b.source_morphology);
  variants("target_morphology", p.target_morphology, tgt, b.target_morphology);

  b.stopwords = load_stopwords(p.stopwords, tgt);
  sum("stopwords", p.stopwords);
  b.corpus = load_corpus(p.corpus, tgt);
  sum("corpus", p.corpus);

  b.morpheme_table.validate_targets(b.target_inventory, diag);
  diag.info("loaded corpus of " + std::to_string(b.corpus.size()) + " tokens", p.corpus);
  return b;
}

ActiveResources select_resources(const ResourceBundle& bundle, Preset preset)
{
  ActiveResources res{bundle.source_inventory,
                      bundle.target_inventory,
                      {},
                      VariantTable(bundle.source_inventory.language()),
                      VariantTable(bundle.target_inventory.language()),
                      bundle.stopwords,
                      bundle.corpus};
  res.trans.merge(bundle.general_dictionary);
  res.trans.merge(bundle.morpheme_table);
  if (uses_domain_dictionary(preset))
    res.trans.merge(bundle.domain_dictionary);
  if (uses_synonyms(preset)) {
    res.source_variants.merge(bundle.source_synonyms);
    res.target_variants.merge(bundle.target_synonyms);
  }
  if (uses_morphology(preset)) {
    res.source_variants.merge(bundle.source_morphology);
    res.target_variants.merge(bundle.target_morphology);
  }
  return res;
}

// ----- per-term translation ----- //

namespace {

struct FormsLess
{
  bool operator()(const LexicalSeq& a, const LexicalSeq& b) const
  {
    return std::lexicographical_compare(a.items.begin(), a.items.end(), b.items.begin(), b.items.end(),
                                        [](const LexicalItem& x, const LexicalItem& y) { return x.form < y.form; });
  }
};

}  // namespace

TermResult translate_term(std::string_view term, const ActiveResources& res, const TermOptions& options)
{
  TermResult out;
  out.term = std::string(term);
  const auto& cfg = options.pipeline;

  const auto decompositions = decompose(term, res.source_inventory, cfg);
  out.decomposed = !decompositions.empty();
  if (!out.decomposed)
    return out;

  const TranslationResources tables{res.trans, res.source_variants, res.target_variants};
  // Bounded, ordered by item strings: when the cap is hit the
  // lexicographically smallest sequences are kept.
  std::set<LexicalSeq, FormsLess> sequences;
  for (const auto& d : decompositions) {
    for (const auto& translated : translate_decomposition(d, tables)) {
      out.translated = true;
      for (auto& seq : filter_bound_items(recompose(translated, cfg.permute), res.target_inventory)) {
        sequences.insert(std::move(seq));
        if (sequences.size() > options.max_sequences) {
          sequences.erase(std::prev(sequences.end()));
          out.truncated = true;
        }
      }
    }
  }
  out.recomposed = !sequences.empty();
  if (out.truncated)
    out.diagnostics.warning("lexical sequences truncated to " + std::to_string(options.max_sequences), out.term);
  if (!out.recomposed)
    return out;

  const std::vector<LexicalSeq> seqs(sequences.begin(), sequences.end());
  out.candidates = collect_candidates(seqs, res.corpus, res.stopwords, cfg, 1);
  if (!options.fertile_translations)
    std::erase_if(out.candidates, [](const CandidateTranslation& c) { return c.fertile; });
  return out;
}

// ----- extraction ----- //

const TermResult* Lexicon::find(std::string_view term) const
{
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const TermResult& r) { return r.term == term; });
  return it == entries.end() ? nullptr : &*it;
}

namespace {

std::string utc_now()
{
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

Lexicon run_extraction(std::span<const std::string> terms, const ActiveResources& res, const TermOptions& options,
                       std::size_t workers)
{
  options.pipeline.validate();
  Lexicon lex;
  lex.metadata.started = utc_now();
  lex.entries.resize(terms.size());

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= terms.size())
        return;
      try {
        lex.entries[i] = translate_term(terms[i], res, options);
      } catch (const std::exception& e) {
        TermResult failed;
        failed.term = terms[i];
        failed.diagnostics.error(e.what(), terms[i]);
        lex.entries[i] = std::move(failed);
      }
    }
  };
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(terms.size(), 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(work);
    for (auto& t : pool)
      t.join();
  }

  auto& s = lex.stats;
  s.terms = lex.entries.size();
  for (const auto& e : lex.entries) {
    s.decomposed += e.decomposed;
    s.translated += e.translated;
    s.recomposed += e.recomposed;
    s.attested += e.attested();
  }
  lex.metadata.finished = utc_now();
  return lex;
}

Lexicon run_extraction(std::span<const std::string> terms, const RunConfig& config, Diagnostics& diag)
{
  const auto bundle = load_resources(config, diag);
  const auto res = select_resources(bundle, config.preset);
  const TermOptions options{config.effective_pipeline(), config.effective_fertile(), config.max_sequences};
  auto lex = run_extraction(terms, res, options, config.workers);

  auto& meta = lex.metadata;
  meta.preset = std::string(to_string(config.preset));
  meta.checksums = bundle.checksums;
  const auto pc = options.pipeline;
  meta.settings = {
      {"source_language", config.source_language},
      {"target_language", config.target_language},
      {"min_residual_length", std::to_string(pc.min_residual_length)},
      {"max_gap", std::to_string(pc.max_gap)},
      {"max_minimal_components", std::to_string(pc.max_minimal_components)},
      {"fertile_translations", options.fertile_translations ? "true" : "false"},
      {"max_sequences", std::to_string(options.max_sequences)},
      {"workers", std::to_string(config.workers)},
  };
  return lex;
}

}  // namespace morphotrans
