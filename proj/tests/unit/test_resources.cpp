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
#include <sstream>

#include "morphotrans/resources.hpp"
#include "support/synthetic.hpp"

using namespace morphotrans;

namespace {

const std::string kToy = std::string(MORPHOTRANS_TEST_DATA) + "/toy/";

template <typename Fn>
auto parse(const std::string& text, Fn&& fn)
{
  std::istringstream in(text);
  return fn(in);
}

}  // namespace

TEST_CASE("inventory rows and kinds")
{
  const auto inv = parse("cyto\tconf\ntoxic\tfree\n", [](auto& in) { return read_inventory(in, "inv", "en"); });
  CHECK(inv.size() == 2);
  CHECK(inv.forms(ComponentKind::Confix).size() == 1);
  CHECK(inv.forms(ComponentKind::Free).size() == 1);
  CHECK(inv.contains("cyto", ComponentKind::Confix));
  CHECK_FALSE(inv.contains("cyto", ComponentKind::Free));
  CHECK(inv.is_bound_only("cyto"));
  CHECK_FALSE(inv.is_bound_only("toxic"));
  CHECK_FALSE(inv.is_bound_only("absent"));
}

TEST_CASE("inventory edge cases")
{
  SUBCASE("empty file is a valid empty inventory")
  {
    const auto inv = parse("", [](auto& in) { return read_inventory(in, "inv", "en"); });
    CHECK(inv.empty());
  }
  SUBCASE("duplicate rows collapse")
  {
    const auto inv = parse("cyto\tconf\ncyto\tconf\n", [](auto& in) { return read_inventory(in, "inv", "en"); });
    CHECK(inv.size() == 1);
  }
  SUBCASE("hyphen notation, case and comments")
  {
    const auto inv = parse("# confixes\n-Cyto-\tconf\npost-\tpref\n\n",
                           [](auto& in) { return read_inventory(in, "inv", "en"); });
    CHECK(inv.contains("cyto", ComponentKind::Confix));
    CHECK(inv.contains("post", ComponentKind::Prefix));
  }
  SUBCASE("a form may carry several kinds")
  {
    const auto inv = parse("post\tpref\npost\tfree\n", [](auto& in) { return read_inventory(in, "inv", "en"); });
    CHECK(inv.size() == 2);
    CHECK(inv.kinds_of("post") == std::vector{ComponentKind::Prefix, ComponentKind::Free});
    CHECK_FALSE(inv.is_bound_only("post"));
  }
}

TEST_CASE("inventory parse errors carry line numbers")
{
  const auto expect_line = [](const std::string& text, std::size_t line) {
    std::istringstream in(text);
    try {
      read_inventory(in, "inv.tsv", "en");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(std::string(e.what()).find("inv.tsv:" + std::to_string(line)) == 0);
    }
  };
  expect_line("cyto\tconf\ntoxic\n", 2);
  expect_line("cyto\tconfix\n", 1);
  expect_line("a\tfree\n\n\tfree\n", 3);
  expect_line("er-positive\tfree\n", 1);
}

TEST_CASE("translation table rows")
{
  const auto t = parse("-cyto-\t-cyto-:bound|cellule:free\ntoxic\ttoxique:free\n",
                       [](auto& in) { return read_translation_table(in, "trans"); });
  REQUIRE(t.lookup("cyto").size() == 2);
  CHECK(t.lookup("cyto")[0] == TargetForm{"cyto", true});
  CHECK(t.lookup("cyto")[1] == TargetForm{"cellule", false});
  CHECK(t.lookup("missing").empty());

  CHECK_THROWS_AS(parse("a\tb\n", [](auto& in) { return read_translation_table(in, "t"); }), ParseError);
  CHECK_THROWS_AS(parse("a\tb:maybe\n", [](auto& in) { return read_translation_table(in, "t"); }), ParseError);
  CHECK_THROWS_AS(parse("a\t|\n", [](auto& in) { return read_translation_table(in, "t"); }), ParseError);
}

TEST_CASE("translation targets missing from the target inventory only warn")
{
  const auto t = parse("toxic\ttoxique:free|inconnu:free\n", [](auto& in) { return read_translation_table(in, "t"); });
  ComponentInventory fr("fr");
  fr.insert("toxique", ComponentKind::Free);
  Diagnostics diag;
  t.validate_targets(fr, diag);
  CHECK(diag.count(Severity::Warning) == 1);
  CHECK_FALSE(diag.has_errors());
}

TEST_CASE("variant table is directional and drops self mappings")
{
  Diagnostics diag;
  const auto v = parse("cytotoxic\tcytotoxicity\nsame\tsame|other\n",
                       [&](auto& in) { return read_variant_table(in, "var", "en", &diag); });
  REQUIRE(v.lookup("cytotoxic").size() == 1);
  CHECK(v.lookup("cytotoxic")[0] == "cytotoxicity");
  CHECK(v.lookup("cytotoxicity").empty());
  REQUIRE(v.lookup("same").size() == 1);
  CHECK(v.lookup("same")[0] == "other");
  CHECK(diag.count(Severity::Warning) == 1);

  VariantTable direct("en");
  CHECK_FALSE(direct.add("x", "X"));
  CHECK(direct.empty());
}

TEST_CASE("toy corpus loads with its lemma index")
{
  const auto corpus = load_corpus(kToy + "fr_corpus.vert", "fr");
  // le cytotoxicité être le propriété de ce qui être toxique pour le cellule .
  CHECK(corpus.size() == 14);
  const auto toxique = corpus.positions("toxique");
  REQUIRE(toxique.size() == 1);
  CHECK(toxique[0] == 9);
  const auto le = corpus.positions("le");
  CHECK(std::vector<std::size_t>(le.begin(), le.end()) == std::vector<std::size_t>{0, 3, 11});
  CHECK(corpus[12].surface == "cellules");
  CHECK(corpus[12].lemma == "cellule");
}

TEST_CASE("corpus format")
{
  SUBCASE("empty file")
  {
    const auto c = parse("", [](auto& in) { return read_corpus(in, "c", "fr"); });
    CHECK(c.empty());
  }
  SUBCASE("blank lines separate sentences")
  {
    const auto c = parse("a\ta\tN\n\n\nb\tb\tN\nc\tc\tN\n", [](auto& in) { return read_corpus(in, "c", "fr"); });
    CHECK(c.size() == 3);
    CHECK(c.sentence_count() == 2);
    CHECK(c.sentence_of(0) == 0);
    CHECK(c.sentence_of(1) == 1);
    CHECK(c.sentence_of(2) == 1);
  }
  SUBCASE("lemmas are case-folded")
  {
    const auto c = parse("Le\tLE\tDET\n", [](auto& in) { return read_corpus(in, "c", "fr"); });
    CHECK(c.has_lemma("le"));
    CHECK(c[0].surface == "Le");
  }
  SUBCASE("lines need three fields")
  {
    std::istringstream in("a\ta\tN\nb\tb\n");
    try {
      read_corpus(in, "c.vert", "fr");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
}

TEST_CASE("missing files name the path")
{
  try {
    load_inventory("/nonexistent/inv.tsv", "en");
    FAIL("expected error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent/inv.tsv") != std::string::npos);
  }
}

TEST_CASE("pipeline config bounds")
{
  PipelineConfig cfg;
  CHECK(cfg.min_residual_length == 5);
  CHECK(cfg.max_gap == 3);
  CHECK(cfg.max_minimal_components == 4);
  CHECK_NOTHROW(cfg.validate());
  cfg.max_gap = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("property: serialization round trip and index invariants")
{
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto world = synthetic::make_world(seed, 60);
    const auto& b = world.bundle;

    std::stringstream s1, s2, s3, s4, s5;
    write_inventory(s1, b.source_inventory);
    CHECK(read_inventory(s1, "x", "en") == b.source_inventory);
    write_translation_table(s2, b.morpheme_table);
    CHECK(read_translation_table(s2, "x") == b.morpheme_table);
    write_variant_table(s3, b.target_synonyms);
    CHECK(read_variant_table(s3, "x", "fr") == b.target_synonyms);
    write_stopwords(s4, b.stopwords);
    CHECK(read_stopwords(s4, "fr") == b.stopwords);
    write_corpus(s5, b.corpus);
    const auto corpus = read_corpus(s5, "x", "fr");
    CHECK(corpus.tokens() == b.corpus.tokens());
    CHECK(corpus.sentences() == b.corpus.sentences());

    for (const auto& lemma : corpus.vocabulary()) {
      const auto pos = corpus.positions(lemma);
      for (std::size_t i = 0; i < pos.size(); ++i) {
        CHECK(corpus[pos[i]].lemma == lemma);
        if (i)
          CHECK(pos[i - 1] < pos[i]);
      }
    }
    std::size_t indexed = 0;
    for (const auto& lemma : corpus.vocabulary())
      indexed += corpus.positions(lemma).size();
    CHECK(indexed == corpus.size());

    for (const auto& c : b.source_inventory.components())
      CHECK(c.bound() == (c.kind != ComponentKind::Free));
  }
}
