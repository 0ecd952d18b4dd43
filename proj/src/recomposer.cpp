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

#include "morphotrans/recomposer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "morphotrans/text.hpp"

namespace morphotrans {

std::vector<std::string> LexicalSeq::forms() const
{
  std::vector<std::string> out;
  out.reserve(items.size());
  for (const auto& it : items)
    out.push_back(it.form);
  return out;
}

std::string LexicalSeq::render() const { return join(forms(), " "); }

std::vector<LexicalSeq> recompose(const TranslatedSeq& translated, bool permute)
{
  const std::size_t n = translated.size();
  if (n == 0)
    return {};
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  std::vector<LexicalSeq> out;
  std::set<std::vector<std::string>> seen;
  const std::uint32_t patterns = 1u << (n - 1);
  do {
    for (std::uint32_t m = patterns; m-- > 0;) {
      LexicalSeq seq;
      LexicalItem cur{translated[order[0]].form, false};
      for (std::size_t i = 1; i < n; ++i) {
        const auto& next = translated[order[i]].form;
        if (m & (1u << (i - 1))) {
          seq.items.push_back(std::move(cur));
          cur = LexicalItem{next, false};
        } else {
          cur.form += next;
          cur.concatenated = true;
        }
      }
      seq.items.push_back(std::move(cur));
      if (seen.insert(seq.forms()).second)
        out.push_back(std::move(seq));
    }
  } while (permute && std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<LexicalSeq> filter_bound_items(std::vector<LexicalSeq> sequences, const ComponentInventory& target,
                                           const std::vector<SequenceRule>& extra_rules)
{
  std::erase_if(sequences, [&](const LexicalSeq& seq) {
    const bool has_bound = std::any_of(seq.items.begin(), seq.items.end(),
                                       [&](const LexicalItem& it) { return target.is_bound_only(it.form); });
    if (has_bound)
      return true;
    return std::any_of(extra_rules.begin(), extra_rules.end(), [&](const SequenceRule& r) { return r(seq); });
  });
  return sequences;
}

}  // namespace morphotrans
