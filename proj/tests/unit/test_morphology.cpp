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

#include <random>

#include "morphotrans/diagnostics.hpp"
#include "morphotrans/morphology.hpp"
#include "morphotrans/text.hpp"
#include "support/synthetic.hpp"

using namespace morphotrans;

namespace {

TaggedCorpus surfaces(std::initializer_list<const char*> words)
{
  std::vector<std::vector<Token>> s(1);
  for (const auto* w : words)
    s.back().push_back({w, fold_case(w), "N"});
  return TaggedCorpus("en", std::move(s));
}

}  // namespace

TEST_CASE("stemmers per language")
{
  CHECK(stem("Running", "en") == "run");
  CHECK(stem("toxicité", "fr") == "toxic");
  CHECK(stem("toxique", "fr") == "tox");
  CHECK(stem("cellules", "fr") == "cellul");
  CHECK(stem("Zellen", "de") == "zell");
  CHECK(stem("Wirkung", "de") == "wirk");
  CHECK_THROWS_AS(stem("word", "xx"), ConfigError);
}

TEST_CASE("suffix stripper keeps a minimum stem")
{
  const SuffixStripper s({"s", "ness"}, 3);
  CHECK(s.stem("goodness") == "good");
  CHECK(s.stem("ness") == "nes");
  CHECK(s.stem("cats") == "cat");
  CHECK(s.stem("its") == "its");
}

TEST_CASE("families of shared stems")
{
  const std::vector<std::vector<std::string>> lists = {{"desire", "desiring"}, {"desirability", "cell"}};
  const auto fams = stem_families(lists, "en");
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].stem == "desir");
  CHECK(fams[0].members == std::set<std::string>{"desirability", "desire", "desiring"});
  const auto table = build_families(lists, "en");
  CHECK(table.value_count() == 6);
  CHECK(table.lookup("cell").empty());

  const std::vector<std::vector<std::string>> distinct = {{"cell", "tissue", "organ"}};
  CHECK(build_families(distinct, "en").empty());
}

TEST_CASE("property: families partition and never self-map")
{
  synthetic::Rng rng(3);
  const std::vector<std::string> pool = {"connect", "connected", "connecting", "connection", "relate",
                                         "relational", "relating", "hope", "hopeful", "hoping", "cell", "cells"};
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<std::vector<std::string>> lists(2);
    for (std::size_t i = 0, n = synthetic::uniform(rng, 1, 10); i < n; ++i)
      lists[i % 2].push_back(synthetic::pick(rng, pool));
    const auto fams = stem_families(lists, "en");
    std::set<std::string> seen;
    for (const auto& f : fams) {
      CHECK(f.members.size() >= 2);
      for (const auto& m : f.members) {
        CHECK(seen.insert(m).second);
        CHECK(stem(m, "en") == f.stem);
      }
    }
    const auto table = build_families(lists, "en");
    for (const auto& [form, related] : table.entries())
      for (const auto& r : related) {
        CHECK(r != form);
        CHECK(stem(r, "en") == stem(form, "en"));
      }
  }
}

TEST_CASE("harvesting candidate terms")
{
  const auto corpus = surfaces({"Postchemotherapy", "poster", "cell", "ER-positive", "-ish", "post"});
  const std::vector<std::string> seeds = {"post"};
  CHECK(harvest_terms(corpus, seeds) ==
        std::vector<std::string>{"er-positive", "post", "postchemotherapy", "poster"});
  const std::vector<std::string> other = {"zzz"};
  CHECK(harvest_terms(corpus, other) == std::vector<std::string>{"er-positive"});
  const std::vector<std::string> more = {"post", "cell"};
  const auto wider = harvest_terms(corpus, more);
  for (const auto& t : harvest_terms(corpus, seeds))
    CHECK(std::find(wider.begin(), wider.end(), t) != wider.end());
  CHECK_THROWS_AS(harvest_terms(corpus, std::span<const std::string>{}), std::invalid_argument);
}

TEST_CASE("test-set filtering drops dictionary-attested terms")
{
  TranslationTable dict;
  dict.add("cytotoxicity", {"cytotoxicité", false});
  dict.add("tumour", {"tumeur", false});
  std::vector<std::vector<Token>> s = {{{"cytotoxicité", "cytotoxicité", "N"}}};
  const TaggedCorpus target("fr", std::move(s));
  const std::vector<std::string> terms = {"cytotoxicity", "tumour", "cytotoxic"};
  // attested translation removed; unattested translation and no translation kept
  CHECK(filter_test_set(terms, dict, target) == std::vector<std::string>{"tumour", "cytotoxic"});
}
