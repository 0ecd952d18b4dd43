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
#include <span>
#include <string>
#include <vector>

#include "morphotrans/recomposer.hpp"
#include "morphotrans/resources.hpp"

namespace morphotrans {

struct LemmaPos
{
  std::string lemma;
  std::string pos;

  friend auto operator<=>(const LemmaPos&, const LemmaPos&) = default;
};

// One attestation of a lexical sequence in the corpus.
struct MatchSpan
{
  std::vector<std::size_t> matched;  // strictly increasing token positions
  std::size_t begin = 0;             // first matched position
  std::size_t end = 0;               // one past the last matched position
  std::vector<LemmaPos> window;      // (lemma, pos) of every token in [begin, end)

  friend bool operator==(const MatchSpan&, const MatchSpan&) = default;
};

struct CandidateTranslation
{
  std::vector<LemmaPos> key;
  std::vector<MatchSpan> spans;
  std::vector<LexicalSeq> sources;
  std::size_t content_items = 0;  // window tokens whose lemma is not a stopword
  bool fertile = false;

  std::size_t occurrences() const { return spans.size(); }
  // "toxique/A pour/PREP le/DET cellule/N"
  std::string render() const;
};

std::string render_key(std::span<const LemmaPos> key);

// All windows where the sequence's items match token lemmas in order, with
// consecutive matched positions 1..max_gap apart, every unmatched token in
// between a stopword, and no sentence boundary crossed.
std::vector<MatchSpan> match_sequence(const LexicalSeq& seq, const TaggedCorpus& corpus, const StopwordList& stop,
                                      const PipelineConfig& config);

// Groups the spans of all sequences by their (lemma, pos) window. Spans with
// identical matched positions are counted once. A candidate is fertile when it
// has more non-stopword tokens than the source term has lexical words.
// Sorted by occurrence count (descending) then key.
std::vector<CandidateTranslation> collect_candidates(std::span<const LexicalSeq> sequences, const TaggedCorpus& corpus,
                                                     const StopwordList& stop, const PipelineConfig& config,
                                                     std::size_t source_word_count = 1);

}  // namespace morphotrans
