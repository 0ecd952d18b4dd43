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

#include "morphotrans/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "morphotrans/decomposer.hpp"
#include "morphotrans/evaluation.hpp"
#include "morphotrans/lexicon_io.hpp"
#include "morphotrans/morphology.hpp"
#include "morphotrans/pipeline.hpp"
#include "morphotrans/text.hpp"

namespace morphotrans::cli {

namespace {

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

// Writes to --out when given ("-" or empty = output stream).
class Sink
{
public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path == "-" ? std::string() : path)
  {
    if (path_.empty()) {
      stream_ = &fallback;
      return;
    }
    file_.open(path_, std::ios::binary);
    if (!file_)
      throw std::runtime_error("cannot write '" + path_ + "'");
    stream_ = &file_;
  }

  std::ostream& stream() { return *stream_; }
  const std::string& path() const { return path_; }

private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

std::string config_from_env()
{
  const char* v = std::getenv(kConfigEnv);
  return v ? std::string(v) : std::string();
}

// Aligned two-column text, or key=value lines in machine mode.
class Report
{
public:
  explicit Report(bool machine) : machine_(machine) {}

  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, double value)
  {
    std::ostringstream s;
    s << std::fixed << std::setprecision(machine_ ? 6 : 4) << value;
    add(std::move(key), s.str());
  }

  void print(std::ostream& out) const
  {
    std::size_t width = 0;
    for (const auto& [k, _] : rows_)
      width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      if (machine_)
        out << k << '=' << v << '\n';
      else
        out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
    }
  }

private:
  bool machine_;
  std::vector<std::pair<std::string, std::string>> rows_;
};

struct Options
{
  bool machine = false;

  // decompose
  std::string term;
  std::string inventory;
  std::string language = "en";
  std::size_t min_residual = 5;
  std::size_t max_components = 4;

  // extract
  std::string terms;
  std::string config;
  std::string preset;
  bool no_fertile = false;
  std::string out;
  std::size_t workers = 0;

  // harvest / families / filter-testset
  std::vector<std::string> corpora;
  std::string seeds_file;
  std::vector<std::string> seeds;
  std::vector<std::string> wordlists;
  std::string dict;
  std::string corpus;

  // evaluate / kappa / comparability
  std::string annotated;
  std::string annotated2;
  std::string source_corpus;
  std::string target_corpus;
  std::string target_language = "fr";
};

void run_decompose(const Options& o, std::ostream& out, CommandOutcome&)
{
  PipelineConfig cfg;
  cfg.min_residual_length = o.min_residual;
  cfg.max_minimal_components = o.max_components;
  std::string inventory_path = o.inventory;
  std::string language = o.language;
  if (inventory_path.empty()) {
    const auto cfg_path = o.config.empty() ? config_from_env() : o.config;
    if (cfg_path.empty())
      throw UsageError("decompose: --inventory is required (or --config / " + std::string(kConfigEnv) + ")");
    const auto run = load_run_config(cfg_path);
    inventory_path = run.paths.source_inventory;
    language = run.source_language;
    cfg = run.effective_pipeline();
  }
  cfg.validate();
  const auto inv = load_inventory(inventory_path, language);
  for (const auto& d : decompose(o.term, inv, cfg))
    out << d.render() << '\n';
}

void run_extract(const Options& o, std::ostream& out, std::ostream& err, CommandOutcome& outcome)
{
  const auto cfg_path = o.config.empty() ? config_from_env() : o.config;
  if (cfg_path.empty())
    throw UsageError("extract: --config is required (or set " + std::string(kConfigEnv) + ")");
  auto cfg = load_run_config(cfg_path);
  if (!o.preset.empty()) {
    const auto p = parse_preset(o.preset);
    if (!p)
      throw UsageError("extract: unknown preset '" + o.preset + "'");
    cfg.preset = *p;
  }
  if (o.no_fertile)
    cfg.fertile_translations = false;
  if (o.workers > 0)
    cfg.workers = o.workers;

  const auto terms = load_term_list(o.terms);
  auto lex = run_extraction(terms, cfg, outcome.diagnostics);

  Sink sink(o.out, out);
  write_lexicon(sink.stream(), lex);
  outcome.output_path = sink.path();
  if (!sink.path().empty()) {
    std::ofstream meta(sink.path() + ".meta", std::ios::binary);
    if (!meta)
      throw std::runtime_error("cannot write '" + sink.path() + ".meta'");
    write_metadata(meta, lex);
  }
  for (const auto& e : lex.entries)
    for (const auto& d : e.diagnostics.entries())
      if (d.severity != Severity::Info)
        outcome.diagnostics.warning(d.message, d.location);
  const auto& s = lex.stats;
  err << "terms=" << s.terms << " decomposed=" << s.decomposed << " translated=" << s.translated
      << " recomposed=" << s.recomposed << " attested=" << s.attested << '\n';
}

std::vector<std::string> read_words(const std::string& path) { return load_term_list(path); }

void run_harvest(const Options& o, std::ostream& out, CommandOutcome& outcome)
{
  auto seeds = o.seeds;
  if (!o.seeds_file.empty())
    for (auto& s : read_words(o.seeds_file))
      seeds.push_back(std::move(s));
  if (seeds.empty())
    throw UsageError("harvest: give seed morphemes with --seed or --seeds");
  const auto corpus = load_corpus(o.corpus, o.language);
  const auto terms = harvest_terms(corpus, seeds);
  Sink sink(o.out, out);
  write_term_list(sink.stream(), terms);
  outcome.output_path = sink.path();
}

void run_families(const Options& o, std::ostream& out, CommandOutcome& outcome)
{
  std::vector<std::vector<std::string>> lists;
  for (const auto& path : o.wordlists)
    lists.push_back(read_words(path));
  for (const auto& path : o.corpora) {
    const auto corpus = load_corpus(path, o.language);
    const auto vocab = corpus.vocabulary();
    lists.emplace_back(vocab.begin(), vocab.end());
  }
  if (lists.empty())
    throw UsageError("families: give word lists or --corpus files");
  const auto table = build_families(lists, o.language);
  Sink sink(o.out, out);
  write_variant_table(sink.stream(), table);
  outcome.output_path = sink.path();
}

void run_filter_testset(const Options& o, std::ostream& out, CommandOutcome& outcome)
{
  const auto terms = load_term_list(o.terms);
  const auto dict = load_translation_table(o.dict);
  const auto corpus = load_corpus(o.corpus, o.target_language);
  const auto kept = filter_test_set(terms, dict, corpus);
  Sink sink(o.out, out);
  write_term_list(sink.stream(), kept);
  outcome.output_path = sink.path();
}

void run_evaluate(const Options& o, std::ostream& out)
{
  const auto rep = evaluate(load_annotated_lexicon(o.annotated));
  Report r(o.machine);
  r.add("terms", rep.terms);
  r.add("covered_terms", rep.covered_terms);
  r.add("candidates", rep.candidates);
  r.add("correct_gold", rep.correct_gold);
  r.add("correct_silver", rep.correct_silver);
  r.add("coverage", rep.coverage);
  r.add("precision_gold", rep.precision_gold);
  r.add("precision_silver", rep.precision_silver);
  r.add("quality_gold", rep.quality_gold);
  r.add("quality_silver", rep.quality_silver);
  r.add("zero_candidates", std::string(rep.zero_candidates ? "true" : "false"));
  r.print(out);
}

void run_kappa(const Options& o, std::ostream& out)
{
  const auto a = load_annotated_lexicon(o.annotated);
  const auto b = load_annotated_lexicon(o.annotated2);
  if (a.rows.size() != b.rows.size())
    throw std::invalid_argument("kappa: '" + o.annotated + "' and '" + o.annotated2 +
                                "' annotate different numbers of candidates");
  std::vector<AnnotationLabel> la, lb;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].source_term != b.rows[i].source_term || a.rows[i].candidate != b.rows[i].candidate)
      throw std::invalid_argument("kappa: row " + std::to_string(i + 1) + " differs between annotation files");
    la.push_back(a.rows[i].label);
    lb.push_back(b.rows[i].label);
  }
  Report r(o.machine);
  r.add("items", la.size());
  r.add("kappa", kappa(la, lb));
  r.print(out);
}

void run_comparability(const Options& o, std::ostream& out, CommandOutcome& outcome)
{
  const auto src = load_corpus(o.source_corpus, o.language);
  const auto tgt = load_corpus(o.target_corpus, o.target_language);
  const auto dict = load_translation_table(o.dict);
  const auto inv = dict.inverted();
  const double fwd = directional_comparability(src, tgt, dict, &outcome.diagnostics);
  const double bwd = directional_comparability(tgt, src, inv, &outcome.diagnostics);
  Report r(o.machine);
  r.add("source_to_target", fwd);
  r.add("target_to_source", bwd);
  r.add("comparability", (fwd + bwd) / 2.0);
  r.print(out);
}

}  // namespace

CommandOutcome dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
  CommandOutcome outcome;
  Options o;

  CLI::App app{"Morpho-compositional bilingual lexicon extraction from comparable corpora", "morphotrans"};
  app.require_subcommand(1);
  app.add_flag("--machine", o.machine, "Machine-readable key=value reports");

  auto* dec = app.add_subcommand("decompose", "Print every decomposition of a term, '+'-joined");
  dec->add_option("term", o.term, "Source term")->required();
  dec->add_option("--inventory", o.inventory, "Source component inventory (TSV)");
  dec->add_option("--language", o.language, "Source language code")->capture_default_str();
  dec->add_option("--min-residual", o.min_residual, "Residual base length after a prefix must exceed this")
      ->capture_default_str();
  dec->add_option("--max-components", o.max_components, "Cap on minimal components per split")->capture_default_str();
  dec->add_option("--config", o.config, "Run configuration (inventory fallback)");

  auto* ext = app.add_subcommand("extract", "Translate a term list into a candidate lexicon");
  ext->add_option("--terms", o.terms, "Source terms, one per line")->required();
  ext->add_option("--config", o.config, std::string("Run configuration (default: $") + kConfigEnv + ")");
  ext->add_option("--preset", o.preset, "B, BS, BM, BD, BSMD, Pref or explicit");
  ext->add_flag("--no-fertile", o.no_fertile, "Drop candidates with more content words than the source");
  ext->add_option("--out", o.out, "Lexicon TSV ('-' for stdout)")->required();
  ext->add_option("--workers", o.workers, "Worker threads");

  auto* har = app.add_subcommand("harvest", "List corpus words containing seed morphemes, plus hyphenated words");
  har->add_option("--corpus", o.corpus, "Source corpus (vertical TSV)")->required();
  har->add_option("--seeds", o.seeds_file, "Seed morphemes, one per line");
  har->add_option("--seed", o.seeds, "Seed morpheme (repeatable)");
  har->add_option("--language", o.language, "Corpus language")->capture_default_str();
  har->add_option("--out", o.out, "Output term list");

  auto* fam = app.add_subcommand("families", "Build a morphological variant table by stemming");
  fam->add_option("wordlists", o.wordlists, "Word lists, one word per line");
  fam->add_option("--corpus", o.corpora, "Add the lemma vocabulary of a corpus (repeatable)");
  fam->add_option("--language", o.language, "en, fr or de")->capture_default_str();
  fam->add_option("--out", o.out, "Output variant table");

  auto* flt = app.add_subcommand("filter-testset", "Drop terms whose dictionary translation is attested");
  flt->add_option("--terms", o.terms, "Candidate terms, one per line")->required();
  flt->add_option("--dict", o.dict, "General-language dictionary (translation table)")->required();
  flt->add_option("--corpus", o.corpus, "Target corpus (vertical TSV)")->required();
  flt->add_option("--out", o.out, "Output term list");

  auto* ev = app.add_subcommand("evaluate", "Coverage, precision and overall quality of an annotated lexicon");
  ev->add_option("annotated", o.annotated, "Lexicon TSV with a label column")->required();

  auto* ka = app.add_subcommand("kappa", "Cohen's kappa between two annotations of the same lexicon");
  ka->add_option("first", o.annotated, "First annotated lexicon")->required();
  ka->add_option("second", o.annotated2, "Second annotated lexicon")->required();

  auto* co = app.add_subcommand("comparability", "Dictionary-based comparability of two corpora");
  co->add_option("source", o.source_corpus, "Source corpus (vertical TSV)")->required();
  co->add_option("target", o.target_corpus, "Target corpus (vertical TSV)")->required();
  co->add_option("dict", o.dict, "Source -> target translation table")->required();
  co->add_option("--source-language", o.language)->capture_default_str();
  co->add_option("--target-language", o.target_language)->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    outcome.exit_code = app.exit(e, out, err);
    return outcome;
  } catch (const CLI::CallForAllHelp& e) {
    outcome.exit_code = app.exit(e, out, err);
    return outcome;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    outcome.diagnostics.error(e.what());
    outcome.exit_code = kExitUsage;
    return outcome;
  }

  try {
    if (dec->parsed())
      run_decompose(o, out, outcome);
    else if (ext->parsed())
      run_extract(o, out, err, outcome);
    else if (har->parsed())
      run_harvest(o, out, outcome);
    else if (fam->parsed())
      run_families(o, out, outcome);
    else if (flt->parsed())
      run_filter_testset(o, out, outcome);
    else if (ev->parsed())
      run_evaluate(o, out);
    else if (ka->parsed())
      run_kappa(o, out);
    else if (co->parsed())
      run_comparability(o, out, outcome);
  } catch (const UsageError& e) {
    outcome.diagnostics.error(e.what());
    err << e.what() << "\n" << app.help();
    outcome.exit_code = kExitUsage;
    return outcome;
  } catch (const std::exception& e) {
    outcome.diagnostics.error(e.what());
  }

  for (const auto& d : outcome.diagnostics.entries())
    if (d.severity != Severity::Info)
      err << to_string(d) << '\n';
  outcome.exit_code = outcome.diagnostics.has_errors() ? kExitError : 0;
  return outcome;
}

}  // namespace morphotrans::cli
