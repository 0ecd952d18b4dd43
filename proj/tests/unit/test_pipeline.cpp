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

#include <doctest.h>

#include <sstream>

#include "morphotrans/lexicon_io.hpp"
#include "morphotrans/pipeline.hpp"
#include "support/synthetic.hpp"

using namespace morphotrans;

namespace {

std::string toy_conf() { return std::string(MORPHOTRANS_TEST_DATA) + "/toy/toy.conf"; }

struct Toy
{
  RunConfig config = load_run_config(toy_conf());
  Diagnostics diag;
  ResourceBundle bundle = load_resources(config, diag);
};

TermOptions options_for(const RunConfig& cfg)
{
  return {cfg.effective_pipeline(), cfg.effective_fertile(), cfg.max_sequences};
}

std::vector<std::string> rendered(const TermResult& r)
{
  std::vector<std::string> out;
  for (const auto& c : r.candidates)
    out.push_back(c.render());
  return out;
}

std::string lexicon_text(const Lexicon& lex)
{
  std::ostringstream os;
  write_lexicon(os, lex);
  return os.str();
}

}  // namespace

TEST_CASE("toy term yields both candidates")
{
  Toy t;
  CHECK_FALSE(t.diag.has_errors());
  const auto res = select_resources(t.bundle, t.config.preset);
  const auto r = translate_term("cytotoxic", res, options_for(t.config));
  CHECK(r.decomposed);
  CHECK(r.translated);
  CHECK(r.recomposed);
  CHECK_FALSE(r.truncated);
  CHECK(rendered(r) == std::vector<std::string>{"cytotoxicité/N", "toxique/A pour/PREP le/DET cellule/N"});
  CHECK_FALSE(r.candidates[0].fertile);
  CHECK(r.candidates[1].fertile);

  auto opts = options_for(t.config);
  opts.fertile_translations = false;
  CHECK(rendered(translate_term("cytotoxic", res, opts)) == std::vector<std::string>{"cytotoxicité/N"});

  const auto unknown = translate_term("xylophone", res, opts);
  CHECK_FALSE(unknown.decomposed);
  CHECK_FALSE(unknown.attested());
}

TEST_CASE("extraction keeps input order and counts stages")
{
  Toy t;
  const auto res = select_resources(t.bundle, t.config.preset);
  const std::vector<std::string> terms = {"toxic", "xylophone", "cytotoxic"};
  const auto lex = run_extraction(terms, res, options_for(t.config), 2);
  REQUIRE(lex.entries.size() == 3);
  CHECK(lex.entries[0].term == "toxic");
  CHECK(lex.entries[1].term == "xylophone");
  CHECK(lex.stats.terms == 3);
  CHECK(lex.stats.decomposed == 2);
  CHECK(lex.stats.attested == 2);
  REQUIRE(lex.find("toxic") != nullptr);
  CHECK(rendered(*lex.find("toxic")) == std::vector<std::string>{"toxique/A"});
  CHECK(lex.find("absent") == nullptr);

  const auto text = lexicon_text(lex);
  CHECK(text.find("xylophone\t\t0\t0\n") != std::string::npos);
  CHECK(text.find("cytotoxic\ttoxique/A pour/PREP le/DET cellule/N\t1\t1\n") != std::string::npos);
}

TEST_CASE("config-driven extraction records settings and checksums")
{
  const auto cfg = load_run_config(toy_conf());
  Diagnostics diag;
  const std::vector<std::string> terms = {"cytotoxic"};
  const auto lex = run_extraction(terms, cfg, diag);
  CHECK(lex.metadata.preset == "explicit");
  CHECK(lex.metadata.checksums.count("corpus") == 1);
  CHECK(lex.metadata.checksums.at("corpus").size() == 8);
  CHECK(lex.metadata.settings.at("max_gap") == "3");
  std::ostringstream meta;
  write_metadata(meta, lex);
  CHECK(meta.str().find("preset=explicit") != std::string::npos);
}

TEST_CASE("run configuration parsing")
{
  std::istringstream in("# c\npreset = BD\nmax_gap = 2\nworkers = 4\nfertile_translations = no\n"
                        "source_inventory = a.tsv\ncorpus = /abs/c.vert\n");
  const auto cfg = read_run_config(in, "x.conf", "/base");
  CHECK(cfg.preset == Preset::BD);
  CHECK(cfg.pipeline.max_gap == 2);
  CHECK(cfg.workers == 4);
  CHECK_FALSE(cfg.fertile_translations);
  CHECK(cfg.paths.source_inventory == "/base/a.tsv");
  CHECK(cfg.paths.corpus == "/abs/c.vert");
  CHECK_THROWS_AS(cfg.validate(), ConfigError);

  std::istringstream unknown("colour = blue\n");
  CHECK_THROWS_WITH_AS(read_run_config(unknown, "x.conf", "."), doctest::Contains("x.conf:1"), ConfigError);
  std::istringstream bad_preset("preset = everything\n");
  CHECK_THROWS_AS(read_run_config(bad_preset, "x.conf", "."), ConfigError);
  std::istringstream bad_number("max_gap = three\n");
  CHECK_THROWS_AS(read_run_config(bad_number, "x.conf", "."), ConfigError);
  std::istringstream no_eq("preset\n");
  CHECK_THROWS_AS(read_run_config(no_eq, "x.conf", "."), ConfigError);
  CHECK_THROWS_AS(load_run_config("/nonexistent/run.conf"), ConfigError);
}

TEST_CASE("presets")
{
  for (auto p : {Preset::B, Preset::BS, Preset::BM, Preset::BD, Preset::BSMD, Preset::Pref, Preset::Explicit})
    CHECK(parse_preset(to_string(p)) == p);
  CHECK(parse_preset("bsmd") == Preset::BSMD);
  CHECK_FALSE(parse_preset("X").has_value());
  CHECK(uses_synonyms(Preset::BSMD));
  CHECK_FALSE(uses_synonyms(Preset::BM));
  CHECK_FALSE(uses_domain_dictionary(Preset::Pref));

  RunConfig cfg;
  cfg.preset = Preset::Pref;
  CHECK(cfg.effective_pipeline().prefix_base_only);
  CHECK_FALSE(cfg.effective_pipeline().permute);
  CHECK_FALSE(cfg.effective_fertile());

  auto toy = load_run_config(toy_conf());
  CHECK_NOTHROW(toy.validate());
  toy.preset = Preset::BD;
  CHECK_THROWS_AS(toy.validate(), ConfigError);
  toy.preset = Preset::BM;
  CHECK_NOTHROW(toy.validate());
  toy.preset = Preset::BS;
  CHECK_THROWS_AS(toy.validate(), ConfigError);
}

TEST_CASE("sequence cap keeps the smallest sequences")
{
  Toy t;
  const auto res = select_resources(t.bundle, t.config.preset);
  auto opts = options_for(t.config);
  opts.max_sequences = 1;
  const auto r = translate_term("cytotoxic", res, opts);
  CHECK(r.truncated);
  CHECK(r.diagnostics.count(Severity::Warning) == 1);
  // {cellule,toxique} sorts first and is not attested
  CHECK_FALSE(r.attested());
}

TEST_CASE("synthetic worlds: determinism, worker invariance, preset monotonicity")
{
  const auto world = synthetic::make_world(77, 120);
  const auto& b = world.bundle;
  TermOptions opts;
  const auto bsmd = select_resources(b, Preset::BSMD);
  const auto one = run_extraction(world.terms, bsmd, opts, 1);
  const auto again = run_extraction(world.terms, bsmd, opts, 1);
  const auto many = run_extraction(world.terms, bsmd, opts, 6);
  CHECK(lexicon_text(one) == lexicon_text(again));
  CHECK(lexicon_text(one) == lexicon_text(many));
  CHECK(one.stats.terms >= one.stats.decomposed);
  CHECK(one.stats.decomposed >= one.stats.translated);
  CHECK(one.stats.translated >= one.stats.recomposed);
  CHECK(one.stats.recomposed >= one.stats.attested);

  const auto attested = [&](Preset p) {
    const auto res = select_resources(b, p);
    std::set<std::string> out;
    for (const auto& e : run_extraction(world.terms, res, opts, 4).entries)
      if (e.attested())
        out.insert(e.term);
    return out;
  };
  const auto base = attested(Preset::B);
  const auto bd = attested(Preset::BD);
  const auto full = attested(Preset::BSMD);
  CHECK(std::includes(bd.begin(), bd.end(), base.begin(), base.end()));
  CHECK(std::includes(full.begin(), full.end(), bd.begin(), bd.end()));
  CHECK(base.size() < full.size());
}
