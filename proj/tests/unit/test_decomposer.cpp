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
#include <set>

#include "morphotrans/decomposer.hpp"
#include "support/oracles.hpp"

using namespace morphotrans;

namespace {

ComponentInventory inventory(std::initializer_list<std::pair<const char*, ComponentKind>> rows)
{
  ComponentInventory inv("en");
  for (const auto& [f, k] : rows)
    inv.insert(f, k);
  return inv;
}

constexpr auto Pref = ComponentKind::Prefix;
constexpr auto Conf = ComponentKind::Confix;
constexpr auto Suff = ComponentKind::Suffix;
constexpr auto Free = ComponentKind::Free;

std::vector<std::string> rendered(const std::vector<Decomposition>& ds)
{
  std::vector<std::string> out;
  for (const auto& d : ds)
    out.push_back(d.render());
  return out;
}

const auto kToy = inventory({{"cyto", Conf}, {"cytotoxic", Free}, {"cytotoxicity", Free}, {"toxic", Free}});

}  // namespace

TEST_CASE("minimal splits keep only the most fine-grained segmentation")
{
  const PipelineConfig cfg;
  const auto splits = minimal_splits("cytotoxic", kToy, cfg);
  REQUIRE(splits.size() == 1);
  CHECK(splits[0] == MinimalSplit{{"cyto", Conf}, {"toxic", Free}});

  const auto atomic = minimal_splits("toxic", kToy, cfg);
  REQUIRE(atomic.size() == 1);
  CHECK(atomic[0] == MinimalSplit{{"toxic", Free}});
}

TEST_CASE("prefix, confix and free base")
{
  const auto inv = inventory({{"post", Pref}, {"chemo", Conf}, {"therapy", Free}});
  const auto splits = minimal_splits("postchemotherapy", inv, PipelineConfig{});
  REQUIRE(splits.size() == 1);
  CHECK(splits[0] == MinimalSplit{{"post", Pref}, {"chemo", Conf}, {"therapy", Free}});
}

TEST_CASE("prefix stripping needs a residual base longer than L0")
{
  PipelineConfig cfg;  // L0 = 5
  CHECK(minimal_splits("postxy", inventory({{"post", Pref}, {"xy", Free}}), cfg).empty());

  // residual of exactly 6 characters passes, 5 does not
  const auto inv = inventory({{"re", Pref}, {"abcdef", Free}, {"abcde", Free}});
  CHECK(minimal_splits("reabcdef", inv, cfg).size() == 1);
  CHECK(minimal_splits("reabcde", inv, cfg).empty());
  cfg.min_residual_length = 4;
  CHECK(minimal_splits("reabcde", inv, cfg).size() == 1);
}

TEST_CASE("suffix only at the end, prefix only at the start")
{
  const auto inv = inventory({{"ness", Suff}, {"kind", Free}, {"un", Pref}});
  CHECK(minimal_splits("kindness", inv, PipelineConfig{}) == std::vector<MinimalSplit>{{{"kind", Free}, {"ness", Suff}}});
  CHECK(minimal_splits("nesskind", inv, PipelineConfig{}).empty());
  CHECK(minimal_splits("kindun", inv, PipelineConfig{}).empty());
  // prefix and suffix with no base in between
  CHECK(minimal_splits("unness", inventory({{"un", Pref}, {"ness", Suff}}), PipelineConfig{}).empty());
}

TEST_CASE("splits longer than the cap are discarded before the max filter")
{
  const auto inv = inventory({{"a", Free}, {"b", Free}, {"c", Free}, {"d", Free}, {"e", Free}, {"ab", Free}});
  PipelineConfig cfg;
  cfg.max_minimal_components = 4;
  const auto splits = minimal_splits("abcde", inv, cfg);
  REQUIRE(splits.size() == 1);
  CHECK(splits[0].size() == 4);
  CHECK(splits[0].front().form == "ab");
  cfg.max_minimal_components = 5;
  CHECK(minimal_splits("abcde", inv, cfg).front().size() == 5);
}

TEST_CASE("ties between maximal splits are all kept")
{
  const auto inv = inventory({{"ab", Free}, {"c", Free}, {"a", Free}, {"bc", Free}});
  const auto splits = minimal_splits("abc", inv, PipelineConfig{});
  CHECK(splits.size() == 2);
}

TEST_CASE("hyphens are soft boundaries")
{
  const auto inv = inventory({{"er", Free}, {"positive", Free}});
  const auto splits = minimal_splits("ER-positive", inv, PipelineConfig{});
  REQUIRE(splits.size() == 1);
  CHECK(splits[0] == MinimalSplit{{"er", Free}, {"positive", Free}});
  CHECK(rendered(decompose("ER-positive", inv, PipelineConfig{})) == std::vector<std::string>{"er+positive", "erpositive"});
  // a hyphen can never sit inside a component
  CHECK(minimal_splits("posi-tive", inventory({{"positive", Free}}), PipelineConfig{}).empty());
}

TEST_CASE("groupings of a split")
{
  const MinimalSplit two{{"cyto", Conf}, {"toxic", Free}};
  const auto ds = enumerate_groupings(two, &kToy);
  CHECK(rendered(ds) == std::vector<std::string>{"cyto+toxic", "cytotoxic"});
  CHECK(ds[0].groups[0].bound);
  CHECK_FALSE(ds[0].groups[1].bound);
  CHECK_FALSE(ds[1].groups[0].bound);  // "cytotoxic" is a free unit

  const MinimalSplit abc{{"a", Free}, {"b", Free}, {"c", Free}};
  const auto three = rendered(enumerate_groupings(abc));
  CHECK(std::set<std::string>(three.begin(), three.end()) == std::set<std::string>{"abc", "a+bc", "ab+c", "a+b+c"});

  CHECK(rendered(enumerate_groupings(MinimalSplit{{"x", Free}})) == std::vector<std::string>{"x"});
  CHECK_THROWS(enumerate_groupings(MinimalSplit{}));
}

TEST_CASE("decompose examples")
{
  const PipelineConfig cfg;
  CHECK(rendered(decompose("cytotoxic", kToy, cfg)) == std::vector<std::string>{"cyto+toxic", "cytotoxic"});
  const auto inv = inventory({{"non", Pref}, {"cyto", Conf}, {"toxic", Free}});
  const auto ds = rendered(decompose("non-cytotoxic", inv, cfg));
  CHECK(std::find(ds.begin(), ds.end(), "non+cytotoxic") != ds.end());
  CHECK(ds.size() == 4);
  CHECK(decompose("zzzz", kToy, cfg).empty());
}

TEST_CASE("decompose de-duplicates splits that differ only in kinds")
{
  const auto inv = inventory({{"cyto", Conf}, {"cyto", Free}, {"toxic", Free}});
  CHECK(minimal_splits("cytotoxic", inv, PipelineConfig{}).size() == 2);
  CHECK(decompose("cytotoxic", inv, PipelineConfig{}).size() == 2);
}

TEST_CASE("prefix + base mode")
{
  PipelineConfig cfg;
  cfg.prefix_base_only = true;
  const auto inv = inventory({{"post", Pref}, {"chemo", Conf}, {"therapy", Free}, {"chemotherapy", Free}});
  const auto splits = minimal_splits("postchemotherapy", inv, cfg);
  REQUIRE(splits.size() == 1);
  CHECK(splits[0] == MinimalSplit{{"post", Pref}, {"chemotherapy", Free}});
  CHECK(minimal_splits("chemotherapy", inv, cfg).empty());
}

TEST_CASE("count law and brute-force partition oracle, n = 1..6")
{
  for (std::size_t n = 1; n <= 6; ++n) {
    MinimalSplit split;
    std::vector<std::string> pieces;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string f(1, static_cast<char>('a' + i));
      split.push_back({f, Free});
      pieces.push_back(f);
    }
    const auto ds = enumerate_groupings(split);
    CHECK(ds.size() == (std::size_t{1} << (n - 1)));
    std::set<std::vector<std::string>> got, want;
    for (const auto& d : ds) {
      got.insert(d.forms());
      std::size_t at = 0;
      for (const auto& g : d.groups) {
        CHECK(g.first == at);
        at += g.count;
      }
      CHECK(at == n);
    }
    for (auto& g : oracle::groupings(pieces))
      want.insert(g);
    CHECK(got == want);
  }
}

TEST_CASE("property: minimal splits agree with the grammar oracle")
{
  std::mt19937_64 rng(7);
  const std::vector<std::string> letters = {"a", "b", "c"};
  auto rand_form = [&](std::size_t lo, std::size_t hi) {
    std::string s;
    const auto len = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    for (std::size_t i = 0; i < len; ++i)
      s += letters[rng() % letters.size()];
    return s;
  };
  for (int iter = 0; iter < 300; ++iter) {
    ComponentInventory inv("xx");
    std::vector<std::pair<std::string, ComponentKind>> entries;
    const auto count = 3 + rng() % 8;
    for (std::size_t i = 0; i < count; ++i) {
      const auto kind = kAllKinds[rng() % 4];
      auto f = rand_form(1, 3);
      inv.insert(f, kind);
      entries.emplace_back(f, kind);
    }
    PipelineConfig cfg;
    cfg.min_residual_length = 1 + rng() % 5;
    cfg.max_minimal_components = 2 + rng() % 5;
    std::string term;
    const auto parts = 1 + rng() % 5;
    for (std::size_t i = 0; i < parts; ++i) {
      if (i && rng() % 6 == 0)
        term += '-';
      term += entries[rng() % entries.size()].first;
    }
    if (term.size() > 14)
      continue;
    const auto got = minimal_splits(term, inv, cfg);
    const auto want = oracle::minimal_splits(term, inv, cfg);
    CHECK_MESSAGE(got == want, "term=" << term);

    std::string stripped;
    for (char c : normalize_term(term))
      if (c != '-')
        stripped += c;
    for (const auto& d : decompose(term, inv, cfg)) {
      std::string joined;
      for (const auto& g : d.groups)
        joined += g.form;
      CHECK(joined == stripped);
    }
  }
}
