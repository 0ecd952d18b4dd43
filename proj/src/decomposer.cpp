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

#include "morphotrans/decomposer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "morphotrans/text.hpp"

namespace morphotrans {

std::vector<std::string> Decomposition::forms() const
{
  std::vector<std::string> out;
  out.reserve(groups.size());
  for (const auto& g : groups)
    out.push_back(g.form);
  return out;
}

std::string Decomposition::render() const { return join(forms(), "+"); }

std::string normalize_term(std::string_view term) { return fold_case(strip_hyphen_markers(trim(term))); }

namespace {

class SplitSearch
{
public:
  SplitSearch(std::string_view term, const ComponentInventory& inv, const PipelineConfig& cfg)
      : term_(term), inv_(inv), cfg_(cfg)
  {
  }

  std::vector<MinimalSplit> run()
  {
    if (!cfg_.prefix_base_only)
      core(0);
    // Optional prefix at position 0, then the residual base.
    for (std::size_t end = 1; end < term_.size(); ++end) {
      const auto piece = term_.substr(0, end);
      if (!inv_.contains(piece, ComponentKind::Prefix))
        continue;
      auto rest = end;
      if (term_[rest] == '-')
        ++rest;
      if (rest >= term_.size())
        continue;
      if (residual_length(rest) <= cfg_.min_residual_length)
        continue;
      current_.push_back({std::string(piece), ComponentKind::Prefix});
      if (cfg_.prefix_base_only) {
        const auto base = term_.substr(rest);
        if (inv_.contains(base, ComponentKind::Free)) {
          current_.push_back({std::string(base), ComponentKind::Free});
          found_.push_back(current_);
          current_.pop_back();
        }
      } else {
        core(rest);
      }
      current_.pop_back();
    }
    return std::move(found_);
  }

private:
  std::size_t residual_length(std::size_t from) const
  {
    const auto rest = term_.substr(from);
    return utf8_length(rest) - static_cast<std::size_t>(std::count(rest.begin(), rest.end(), '-'));
  }

  bool room_for_one_more() const { return current_.size() < cfg_.max_minimal_components; }

  // Consumes one or more confix/free components starting at pos, optionally
  // followed by a final suffix.
  void core(std::size_t pos)
  {
    if (!room_for_one_more())
      return;
    for (std::size_t end = pos + 1; end <= term_.size(); ++end) {
      const auto piece = term_.substr(pos, end - pos);
      if (piece.find('-') != std::string_view::npos)
        break;
      for (auto kind : {ComponentKind::Confix, ComponentKind::Free}) {
        if (!inv_.contains(piece, kind))
          continue;
        current_.push_back({std::string(piece), kind});
        after_core_piece(end);
        current_.pop_back();
      }
    }
  }

  void after_core_piece(std::size_t pos)
  {
    if (pos == term_.size()) {
      found_.push_back(current_);
      return;
    }
    if (term_[pos] == '-')
      ++pos;
    if (pos >= term_.size())
      return;
    core(pos);
    if (!room_for_one_more())
      return;
    const auto tail = term_.substr(pos);
    if (tail.find('-') == std::string_view::npos && inv_.contains(tail, ComponentKind::Suffix)) {
      current_.push_back({std::string(tail), ComponentKind::Suffix});
      found_.push_back(current_);
      current_.pop_back();
    }
  }

  std::string_view term_;
  const ComponentInventory& inv_;
  const PipelineConfig& cfg_;
  MinimalSplit current_;
  std::vector<MinimalSplit> found_;
};

}  // namespace

std::vector<MinimalSplit> minimal_splits(std::string_view term, const ComponentInventory& inventory,
                                         const PipelineConfig& config)
{
  const auto normalized = normalize_term(term);
  if (normalized.empty())
    return {};
  auto splits = SplitSearch(normalized, inventory, config).run();
  if (splits.empty())
    return {};
  std::size_t best = 0;
  for (const auto& s : splits)
    best = std::max(best, s.size());
  std::erase_if(splits, [best](const MinimalSplit& s) { return s.size() != best; });
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
  return splits;
}

std::vector<Decomposition> enumerate_groupings(const MinimalSplit& split, const ComponentInventory* inventory)
{
  if (split.empty())
    throw std::invalid_argument("enumerate_groupings: empty split");
  const std::size_t n = split.size();
  if (n > 31)
    throw std::invalid_argument("enumerate_groupings: split too long");
  const std::size_t cuts = n - 1;
  const std::uint32_t total = 1u << cuts;

  std::vector<Decomposition> out;
  out.reserve(total);
  // Bit i set = boundary after component i. All bits set = finest grouping.
  for (std::uint32_t m = total; m-- > 0;) {
    Decomposition d;
    ComponentGroup g{split[0].form, 0, 1, false};
    for (std::size_t i = 1; i < n; ++i) {
      if (m & (1u << (i - 1))) {
        d.groups.push_back(std::move(g));
        g = ComponentGroup{split[i].form, i, 1, false};
      } else {
        g.form += split[i].form;
        ++g.count;
      }
    }
    d.groups.push_back(std::move(g));
    for (auto& grp : d.groups) {
      if (grp.count == 1)
        grp.bound = is_bound(split[grp.first].kind);
      else
        grp.bound = !(inventory && inventory->contains(grp.form, ComponentKind::Free));
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Decomposition> decompose(std::string_view term, const ComponentInventory& inventory,
                                     const PipelineConfig& config)
{
  std::vector<Decomposition> out;
  std::set<std::vector<std::string>> seen;
  for (const auto& split : minimal_splits(term, inventory, config))
    for (auto& d : enumerate_groupings(split, &inventory))
      if (seen.insert(d.forms()).second)
        out.push_back(std::move(d));
  return out;
}

}  // namespace morphotrans
