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

#include "morphotrans/translator.hpp"

#include <algorithm>

namespace morphotrans {

std::string_view to_string(Provenance p)
{
  switch (p) {
  case Provenance::Direct: return "direct";
  case Provenance::SourceVariant: return "source-variant";
  case Provenance::TargetVariant: return "target-variant";
  }
  return "direct";
}

std::vector<TranslatedItem> translate_component(std::string_view component, const TranslationResources& res)
{
  std::vector<TranslatedItem> out;
  auto add = [&out](const std::string& form, bool bound, Provenance via) {
    const auto dup = std::find_if(out.begin(), out.end(),
                                  [&](const TranslatedItem& t) { return t.form == form && t.bound == bound; });
    if (dup == out.end())
      out.push_back({form, bound, via});
  };

  const auto direct = res.trans.lookup(component);
  for (const auto& t : direct)
    add(t.form, t.bound, Provenance::Direct);
  for (const auto& variant : res.source_variants.lookup(component))
    for (const auto& t : res.trans.lookup(variant))
      add(t.form, t.bound, Provenance::SourceVariant);
  for (const auto& t : direct)
    for (const auto& variant : res.target_variants.lookup(t.form))
      add(variant, false, Provenance::TargetVariant);
  return out;
}

std::vector<TranslatedSeq> translate_decomposition(const Decomposition& d, const TranslationResources& res)
{
  std::vector<std::vector<TranslatedItem>> per_group;
  per_group.reserve(d.groups.size());
  for (const auto& g : d.groups) {
    auto items = translate_component(g.form, res);
    if (items.empty())
      return {};
    per_group.push_back(std::move(items));
  }
  if (per_group.empty())
    return {};

  std::vector<TranslatedSeq> out;
  std::vector<std::size_t> idx(per_group.size(), 0);
  for (;;) {
    TranslatedSeq seq;
    seq.reserve(per_group.size());
    for (std::size_t i = 0; i < per_group.size(); ++i)
      seq.push_back(per_group[i][idx[i]]);
    out.push_back(std::move(seq));
    // odometer, last group fastest
    std::size_t k = per_group.size();
    while (k > 0) {
      --k;
      if (++idx[k] < per_group[k].size())
        break;
      idx[k] = 0;
      if (k == 0)
        return out;
    }
  }
}

}  // namespace morphotrans
