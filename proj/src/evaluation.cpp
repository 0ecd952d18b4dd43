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

#include "morphotrans/evaluation.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <set>
#include <stdexcept>

#include "morphotrans/text.hpp"

namespace morphotrans {

std::string_view to_string(AnnotationLabel label)
{
  switch (label) {
  case AnnotationLabel::Gold: return "gold";
  case AnnotationLabel::Silver: return "silver";
  case AnnotationLabel::Incorrect: return "incorrect";
  }
  return "incorrect";
}

std::optional<AnnotationLabel> parse_label(std::string_view text)
{
  const auto t = fold_case(trim(text));
  if (t == "gold" || t == "g" || t == "canonical")
    return AnnotationLabel::Gold;
  if (t == "silver" || t == "s" || t == "recoverable")
    return AnnotationLabel::Silver;
  if (t == "incorrect" || t == "i")
    return AnnotationLabel::Incorrect;
  return std::nullopt;
}

void AnnotatedLexicon::validate() const
{
  const std::set<std::string> terms(source_terms.begin(), source_terms.end());
  std::set<std::pair<std::string, std::string>> keys;
  for (const auto& r : rows) {
    if (!terms.count(r.source_term))
      throw std::invalid_argument("annotated row for unknown source term '" + r.source_term + "'");
    if (!keys.emplace(r.source_term, r.candidate).second)
      throw std::invalid_argument("duplicate candidate '" + r.candidate + "' for '" + r.source_term + "'");
  }
}

EvalReport evaluate(const AnnotatedLexicon& lexicon)
{
  lexicon.validate();
  const std::set<std::string> terms(lexicon.source_terms.begin(), lexicon.source_terms.end());
  if (terms.empty())
    throw std::invalid_argument("evaluate: no source terms");

  EvalReport rep;
  rep.terms = terms.size();
  std::set<std::string> covered;
  for (const auto& r : lexicon.rows) {
    covered.insert(r.source_term);
    ++rep.candidates;
    if (r.label == AnnotationLabel::Gold)
      ++rep.correct_gold;
    if (r.label != AnnotationLabel::Incorrect)
      ++rep.correct_silver;
  }
  rep.covered_terms = covered.size();
  rep.coverage = static_cast<double>(rep.covered_terms) / static_cast<double>(rep.terms);
  rep.zero_candidates = rep.candidates == 0;
  if (!rep.zero_candidates) {
    rep.precision_gold = static_cast<double>(rep.correct_gold) / static_cast<double>(rep.candidates);
    rep.precision_silver = static_cast<double>(rep.correct_silver) / static_cast<double>(rep.candidates);
  }
  rep.quality_gold = overall_quality(rep.precision_gold, rep.coverage);
  rep.quality_silver = overall_quality(rep.precision_silver, rep.coverage);
  return rep;
}

double kappa(std::span<const AnnotationLabel> first, std::span<const AnnotationLabel> second)
{
  if (first.size() != second.size())
    throw std::invalid_argument("kappa: annotation lists differ in length");
  if (first.empty())
    throw std::invalid_argument("kappa: no annotations");
  const auto n = static_cast<double>(first.size());
  std::array<double, 3> m1{}, m2{};
  double agree = 0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    m1[static_cast<std::size_t>(first[i])] += 1;
    m2[static_cast<std::size_t>(second[i])] += 1;
    if (first[i] == second[i])
      agree += 1;
  }
  const double observed = agree / n;
  double chance = 0;
  for (std::size_t k = 0; k < 3; ++k)
    chance += (m1[k] / n) * (m2[k] / n);
  if (chance >= 1.0) {
    if (observed == 1.0)
      return 1.0;
    throw std::invalid_argument("kappa: degenerate marginals");
  }
  return (observed - chance) / (1.0 - chance);
}

double directional_comparability(const TaggedCorpus& from, const TaggedCorpus& to, const TranslationTable& dict,
                                 Diagnostics* diag)
{
  std::size_t known = 0;
  std::size_t attested = 0;
  for (const auto& word : from.vocabulary()) {
    const auto translations = dict.lookup(word);
    if (translations.empty())
      continue;
    ++known;
    for (const auto& t : translations)
      if (to.has_lemma(t.form)) {
        ++attested;
        break;
      }
  }
  if (known == 0) {
    if (diag)
      diag->warning("no dictionary word occurs in the " + (from.language().empty() ? std::string("source")
                                                                                    : from.language()) +
                    " corpus; direction contributes 0");
    return 0.0;
  }
  return static_cast<double>(attested) / static_cast<double>(known);
}

double comparability(const TaggedCorpus& source, const TaggedCorpus& target, const TranslationTable& dict,
                     Diagnostics* diag)
{
  const double forward = directional_comparability(source, target, dict, diag);
  const double backward = directional_comparability(target, source, dict.inverted(), diag);
  return (forward + backward) / 2.0;
}

AnnotatedLexicon read_annotated_lexicon(std::istream& in, const std::string& name)
{
  AnnotatedLexicon lex;
  std::set<std::string> seen_terms;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    const auto t = trim(line);
    if (t.empty() || t.front() == '#')
      continue;
    const auto fields = split(line, '\t');
    if (fields.size() < 2)
      throw ParseError(name, lineno, "expected at least source term and candidate columns");
    std::string term(trim(fields[0]));
    std::string candidate(trim(fields[1]));
    if (term.empty())
      throw ParseError(name, lineno, "empty source term");
    if (seen_terms.insert(term).second)
      lex.source_terms.push_back(term);
    if (candidate.empty())
      continue;
    if (fields.size() < 5)
      throw ParseError(name, lineno, "candidate '" + candidate + "' has no annotation label");
    const auto label = parse_label(fields[4]);
    if (!label)
      throw ParseError(name, lineno, "invalid annotation label '" + std::string(trim(fields[4])) + "'");
    lex.rows.push_back({std::move(term), std::move(candidate), *label});
  }
  return lex;
}

AnnotatedLexicon load_annotated_lexicon(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  return read_annotated_lexicon(in, path);
}

}  // namespace morphotrans
