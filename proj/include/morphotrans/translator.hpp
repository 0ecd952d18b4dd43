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

#include <string>
#include <string_view>
#include <vector>

#include "morphotrans/decomposer.hpp"
#include "morphotrans/resources.hpp"

namespace morphotrans {

enum class Provenance { Direct, SourceVariant, TargetVariant };

std::string_view to_string(Provenance p);

struct TranslatedItem
{
  std::string form;
  bool bound = false;
  Provenance via = Provenance::Direct;

  friend bool operator==(const TranslatedItem&, const TranslatedItem&) = default;
};

// Item i translates group i of the source decomposition.
using TranslatedSeq = std::vector<TranslatedItem>;

// The tables consulted by component translation. Variant tables may be empty.
struct TranslationResources
{
  const TranslationTable& trans;
  const VariantTable& source_variants;
  const VariantTable& target_variants;
};

// Trans(c) ∪ Trans(Var_src(c)) ∪ Var_tgt(Trans(c)), variants applied once.
// De-duplicated on (form, bound) keeping the first provenance in the order
// direct, source variant, target variant. Target variants are free.
std::vector<TranslatedItem> translate_component(std::string_view component, const TranslationResources& res);

// Cross product of the per-group translations; empty as soon as one group
// has no translation.
std::vector<TranslatedSeq> translate_decomposition(const Decomposition& d, const TranslationResources& res);

}  // namespace morphotrans
