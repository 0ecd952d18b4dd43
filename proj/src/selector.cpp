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

#include "morphotrans/selector.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "morphotrans/text.hpp"

namespace morphotrans {

std::string render_key(std::span<const LemmaPos> key)
{
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i)
      out += ' ';
    out += key[i].lemma;
    out += '/';
    out += key[i].pos;
  }
  return out;
}

std::string CandidateTranslation::render() const { return render_key(key); }

namespace {

class SpanSearch
{
public:
  SpanSearch(const std::vector<std::string>& lemmas, const TaggedCorpus& corpus, const StopwordList& stop,
             std::size_t max_gap)
      : lemmas_(lemmas), corpus_(corpus), stop_(stop), max_gap_(max_gap)
  {
  }

  std::vector<MatchSpan> run()
  {
    for (auto start : corpus_.positions(lemmas_[0])) {
      matched_.assign(1, start);
      extend();
    }
    return std::move(found_);
  }

private:
  void extend()
  {
    if (matched_.size() == lemmas_.size()) {
      emit();
      return;
    }
    const auto prev = matched_.back();
    const auto& want = lemmas_[matched_.size()];
    // Walk forward; stop at the first non-stopword that is not a match, at a
    // sentence boundary, or beyond the gap limit.
    for (std::size_t q = prev + 1; q < corpus_.size() && q - prev <= max_gap_; ++q) {
      if (corpus_.sentence_of(q) != corpus_.sentence_of(prev))
        break;
      const auto& lemma = corpus_[q].lemma;
      if (lemma == want) {
        matched_.push_back(q);
        extend();
        matched_.pop_back();
      }
      if (!stop_.contains(lemma))
        break;
    }
  }

  void emit()
  {
    MatchSpan span;
    span.matched = matched_;
    span.begin = matched_.front();
    span.end = matched_.back() + 1;
    for (auto i = span.begin; i < span.end; ++i)
      span.window.push_back({corpus_[i].lemma, corpus_[i].pos});
    found_.push_back(std::move(span));
  }

  const std::vector<std::string>& lemmas_;
  const TaggedCorpus& corpus_;
  const StopwordList& stop_;
  std::size_t max_gap_;
  std::vector<std::size_t> matched_;
  std::vector<MatchSpan> found_;
};

}  // namespace

std::vector<MatchSpan> match_sequence(const LexicalSeq& seq, const TaggedCorpus& corpus, const StopwordList& stop,
                                      const PipelineConfig& config)
{
  if (seq.items.empty())
    return {};
  std::vector<std::string> lemmas;
  for (const auto& it : seq.items)
    lemmas.push_back(fold_case(it.form));
  return SpanSearch(lemmas, corpus, stop, config.max_gap).run();
}

std::vector<CandidateTranslation> collect_candidates(std::span<const LexicalSeq> sequences, const TaggedCorpus& corpus,
                                                     const StopwordList& stop, const PipelineConfig& config,
                                                     std::size_t source_word_count)
{
  std::map<std::vector<LemmaPos>, CandidateTranslation> by_key;
  std::set<std::vector<std::size_t>> seen_spans;
  for (const auto& seq : sequences) {
    for (auto& span : match_sequence(seq, corpus, stop, config)) {
      if (!seen_spans.insert(span.matched).second)
        continue;
      auto [it, inserted] = by_key.try_emplace(span.window);
      auto& cand = it->second;
      if (inserted) {
        cand.key = span.window;
        cand.content_items = static_cast<std::size_t>(std::count_if(
            cand.key.begin(), cand.key.end(), [&](const LemmaPos& lp) { return !stop.contains(lp.lemma); }));
        cand.fertile = cand.content_items > source_word_count;
      }
      if (cand.sources.empty() || !(cand.sources.back() == seq))
        cand.sources.push_back(seq);
      cand.spans.push_back(std::move(span));
    }
  }

  std::vector<CandidateTranslation> out;
  out.reserve(by_key.size());
  for (auto& [_, cand] : by_key)
    out.push_back(std::move(cand));
  std::stable_sort(out.begin(), out.end(), [](const CandidateTranslation& a, const CandidateTranslation& b) {
    if (a.occurrences() != b.occurrences())
      return a.occurrences() > b.occurrences();
    return a.key < b.key;
  });
  return out;
}

}  // namespace morphotrans
