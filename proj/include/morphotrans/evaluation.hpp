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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphotrans/diagnostics.hpp"
#include "morphotrans/resources.hpp"

namespace morphotrans {

// Gold: canonical translation. Silver: recoverable variant (counts as correct
// only under the silver standard). Incorrect.
enum class AnnotationLabel { Gold, Silver, Incorrect };

std::string_view to_string(AnnotationLabel label);
// Accepts gold/silver/incorrect, canonical/recoverable, or G/S/I, any case.
std::optional<AnnotationLabel> parse_label(std::string_view text);

struct AnnotatedRow
{
  std::string source_term;
  std::string candidate;  // rendered "lemma/POS ..." sequence
  AnnotationLabel label;
};

struct AnnotatedLexicon
{
  std::vector<std::string> source_terms;  // every term the run attempted
  std::vector<AnnotatedRow> rows;

  // Throws std::invalid_argument on duplicate (term, candidate) pairs or rows
  // whose term is not in source_terms.
  void validate() const;
};

struct EvalReport
{
  std::size_t terms = 0;
  std::size_t covered_terms = 0;
  std::size_t candidates = 0;
  std::size_t correct_gold = 0;
  std::size_t correct_silver = 0;
  bool zero_candidates = false;  // precision undefined, reported as 0

  double coverage = 0;
  double precision_gold = 0;
  double precision_silver = 0;
  double quality_gold = 0;
  double quality_silver = 0;
};

inline double overall_quality(double precision, double coverage) { return precision * coverage; }

// Micro-averaged precision over every candidate; coverage counts terms with at
// least one candidate whatever its label. Throws std::invalid_argument when
// there are no source terms.
EvalReport evaluate(const AnnotatedLexicon& lexicon);

// Cohen's kappa over the three labels. Throws std::invalid_argument on length
// mismatch or empty input, and on degenerate marginals (chance agreement of 1)
// unless the two labelings are identical.
double kappa(std::span<const AnnotationLabel> first, std::span<const AnnotationLabel> second);

// Share of dictionary words of `from` that have a translation among the lemmas
// of `to`. Zero, with a warning, when no dictionary word occurs in `from`.
double directional_comparability(const TaggedCorpus& from, const TaggedCorpus& to, const TranslationTable& dict,
                                 Diagnostics* diag = nullptr);

// Mean of both directions; the reverse direction uses the inverted dictionary.
double comparability(const TaggedCorpus& source, const TaggedCorpus& target, const TranslationTable& dict,
                     Diagnostics* diag = nullptr);

// Lexicon TSV plus a label column (source, candidate, count, fertile, label).
// Rows with an empty candidate only register the source term. A candidate row
// without a valid label is a ParseError.
AnnotatedLexicon read_annotated_lexicon(std::istream& in, const std::string& name);
AnnotatedLexicon load_annotated_lexicon(const std::string& path);

}  // namespace morphotrans
