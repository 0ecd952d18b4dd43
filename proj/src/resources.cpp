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

#include "morphotrans/resources.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "morphotrans/text.hpp"

namespace morphotrans {

// ----- diagnostics ----- //

void Diagnostics::info(std::string message, std::string location)
{
  entries_.push_back({Severity::Info, std::move(message), std::move(location)});
}

void Diagnostics::warning(std::string message, std::string location)
{
  entries_.push_back({Severity::Warning, std::move(message), std::move(location)});
}

void Diagnostics::error(std::string message, std::string location)
{
  entries_.push_back({Severity::Error, std::move(message), std::move(location)});
}

std::size_t Diagnostics::count(Severity s) const
{
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [s](const Diagnostic& d) { return d.severity == s; }));
}

void Diagnostics::append(const Diagnostics& other)
{
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::string to_string(const Diagnostic& d)
{
  std::string out;
  switch (d.severity) {
  case Severity::Info: out = "info"; break;
  case Severity::Warning: out = "warning"; break;
  case Severity::Error: out = "error"; break;
  }
  out += ": ";
  if (!d.location.empty()) {
    out += d.location;
    out += ": ";
  }
  out += d.message;
  return out;
}

ParseError::ParseError(const std::string& path, std::size_t line, const std::string& message)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + message), path_(path), line_(line)
{
}

// ----- component kinds ----- //

std::string_view kind_tag(ComponentKind kind)
{
  switch (kind) {
  case ComponentKind::Prefix: return "pref";
  case ComponentKind::Confix: return "conf";
  case ComponentKind::Suffix: return "suff";
  case ComponentKind::Free: return "free";
  }
  return "free";
}

std::optional<ComponentKind> parse_kind_tag(std::string_view tag)
{
  for (auto k : kAllKinds)
    if (kind_tag(k) == tag)
      return k;
  return std::nullopt;
}

// ----- inventory ----- //

namespace {

std::string normalize_form(std::string_view raw)
{
  return fold_case(strip_hyphen_markers(trim(raw)));
}

constexpr std::uint8_t bit(ComponentKind k) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k)); }

constexpr std::uint8_t kFreeBit = bit(ComponentKind::Free);

}  // namespace

bool ComponentInventory::insert(std::string_view form, ComponentKind kind)
{
  auto folded = normalize_form(form);
  if (folded.empty() || has_whitespace(folded))
    throw std::invalid_argument("invalid component form '" + std::string(form) + "'");
  auto& m = masks_[folded];
  if (m & bit(kind))
    return false;
  m |= bit(kind);
  by_kind_[static_cast<std::size_t>(kind)].insert(std::move(folded));
  return true;
}

std::uint8_t ComponentInventory::mask_of(std::string_view form) const
{
  const auto it = masks_.find(std::string(form));
  return it == masks_.end() ? 0 : it->second;
}

bool ComponentInventory::contains(std::string_view form, ComponentKind kind) const
{
  return (mask_of(form) & bit(kind)) != 0;
}

bool ComponentInventory::contains(std::string_view form) const { return mask_of(form) != 0; }

bool ComponentInventory::is_bound_only(std::string_view form) const
{
  const auto m = mask_of(form);
  return m != 0 && (m & kFreeBit) == 0;
}

std::vector<ComponentKind> ComponentInventory::kinds_of(std::string_view form) const
{
  std::vector<ComponentKind> out;
  const auto m = mask_of(form);
  for (auto k : kAllKinds)
    if (m & bit(k))
      out.push_back(k);
  return out;
}

std::vector<Component> ComponentInventory::components() const
{
  std::vector<Component> out;
  for (auto k : kAllKinds)
    for (const auto& f : forms(k))
      out.push_back({f, k, language_});
  return out;
}

std::size_t ComponentInventory::size() const
{
  std::size_t n = 0;
  for (const auto& s : by_kind_)
    n += s.size();
  return n;
}

// ----- translation table ----- //

void TranslationTable::add(std::string_view source, TargetForm target)
{
  auto key = normalize_form(source);
  target.form = normalize_form(target.form);
  if (key.empty() || target.form.empty())
    throw std::invalid_argument("empty translation entry");
  auto& targets = entries_[key];
  if (std::find(targets.begin(), targets.end(), target) == targets.end())
    targets.push_back(std::move(target));
}

void TranslationTable::merge(const TranslationTable& other)
{
  for (const auto& [src, targets] : other.entries_)
    for (const auto& t : targets)
      add(src, t);
}

std::span<const TargetForm> TranslationTable::lookup(std::string_view source) const
{
  const auto it = entries_.find(source);
  if (it == entries_.end())
    return {};
  return it->second;
}

bool TranslationTable::contains(std::string_view source) const { return entries_.find(source) != entries_.end(); }

TranslationTable TranslationTable::inverted() const
{
  TranslationTable inv;
  for (const auto& [src, targets] : entries_)
    for (const auto& t : targets)
      inv.add(t.form, TargetForm{src, false});
  return inv;
}

void TranslationTable::validate_targets(const ComponentInventory& target, Diagnostics& diag) const
{
  for (const auto& [src, targets] : entries_)
    for (const auto& t : targets)
      if (!target.contains(t.form))
        diag.warning("target form '" + t.form + "' of '" + src + "' is not in the " + target.language() +
                     " inventory");
}

namespace {

template <typename Map>
bool same_as_sets(const Map& a, const Map& b)
{
  if (a.size() != b.size())
    return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first)
      return false;
    auto va = ia->second;
    auto vb = ib->second;
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va != vb)
      return false;
  }
  return true;
}

}  // namespace

bool operator==(const TranslationTable& a, const TranslationTable& b) { return same_as_sets(a.entries_, b.entries_); }

// ----- variant table ----- //

bool VariantTable::add(std::string_view form, std::string_view related)
{
  auto key = normalize_form(form);
  auto value = normalize_form(related);
  if (key.empty() || value.empty())
    throw std::invalid_argument("empty variant entry");
  if (key == value)
    return false;
  auto& values = entries_[key];
  if (std::find(values.begin(), values.end(), value) != values.end())
    return false;
  values.push_back(std::move(value));
  return true;
}

void VariantTable::merge(const VariantTable& other)
{
  for (const auto& [form, related] : other.entries_)
    for (const auto& r : related)
      add(form, r);
}

std::span<const std::string> VariantTable::lookup(std::string_view form) const
{
  const auto it = entries_.find(form);
  if (it == entries_.end())
    return {};
  return it->second;
}

std::size_t VariantTable::value_count() const
{
  std::size_t n = 0;
  for (const auto& [_, v] : entries_)
    n += v.size();
  return n;
}

bool operator==(const VariantTable& a, const VariantTable& b) { return same_as_sets(a.entries_, b.entries_); }

// ----- stopwords ----- //

bool StopwordList::insert(std::string_view lemma)
{
  auto folded = fold_case(trim(lemma));
  if (folded.empty())
    throw std::invalid_argument("empty stopword");
  return lemmas_.insert(std::move(folded)).second;
}

// ----- corpus ----- //

TaggedCorpus::TaggedCorpus(std::string language, std::vector<std::vector<Token>> sentences)
    : language_(std::move(language))
{
  for (auto& sentence : sentences) {
    if (sentence.empty())
      continue;
    for (auto& tok : sentence) {
      tok.lemma = fold_case(tok.lemma);
      if (tok.lemma.empty() || tok.pos.empty())
        throw std::invalid_argument("token without lemma or POS");
      index_[tok.lemma].push_back(tokens_.size());
      sentence_ids_.push_back(sentence_count_);
      tokens_.push_back(std::move(tok));
    }
    ++sentence_count_;
  }
}

std::span<const std::size_t> TaggedCorpus::positions(std::string_view lemma) const
{
  const auto it = index_.find(std::string(lemma));
  if (it == index_.end())
    return {};
  return it->second;
}

std::set<std::string> TaggedCorpus::vocabulary() const
{
  std::set<std::string> out;
  for (const auto& [lemma, _] : index_)
    out.insert(lemma);
  return out;
}

std::vector<std::vector<Token>> TaggedCorpus::sentences() const
{
  std::vector<std::vector<Token>> out(sentence_count_);
  for (std::size_t i = 0; i < tokens_.size(); ++i)
    out[sentence_ids_[i]].push_back(tokens_[i]);
  return out;
}

// ----- config ----- //

void PipelineConfig::validate() const
{
  if (min_residual_length < 1)
    throw ConfigError("min_residual_length (L0) must be >= 1");
  if (max_gap < 1)
    throw ConfigError("max_gap (L1) must be >= 1");
  if (max_minimal_components < 1)
    throw ConfigError("max_minimal_components must be >= 1");
}

// ----- readers ----- //

namespace {

std::ifstream open_or_throw(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

// Iterates lines, stripping '\r'. Calls fn(line, lineno).
template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn)
{
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    fn(std::string_view(line), lineno);
  }
}

bool skippable(std::string_view line)
{
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

ComponentInventory read_inventory(std::istream& in, const std::string& name, const std::string& language,
                                  Diagnostics* diag)
{
  ComponentInventory inv(language);
  for_each_line(in, [&](std::string_view line, std::size_t lineno) {
    if (skippable(line))
      return;
    const auto fields = split(line, '\t');
    if (fields.size() != 2)
      throw ParseError(name, lineno, "expected 2 tab-separated columns (form, kind)");
    const auto kind = parse_kind_tag(trim(fields[1]));
    if (!kind)
      throw ParseError(name, lineno, "unknown component kind '" + std::string(trim(fields[1])) + "'");
    const auto form = strip_hyphen_markers(trim(fields[0]));
    if (form.empty() || has_whitespace(form))
      throw ParseError(name, lineno, "empty or blank component form");
    if (form.find('-') != std::string_view::npos)
      throw ParseError(name, lineno, "component forms cannot contain interior hyphens");
    if (!inv.insert(form, *kind) && diag)
      diag->info("duplicate component '" + std::string(form) + "' collapsed", name + ":" + std::to_string(lineno));
  });
  return inv;
}

TranslationTable read_translation_table(std::istream& in, const std::string& name, Diagnostics* /*diag*/)
{
  TranslationTable table;
  for_each_line(in, [&](std::string_view line, std::size_t lineno) {
    if (skippable(line))
      return;
    const auto fields = split(line, '\t');
    if (fields.size() != 2)
      throw ParseError(name, lineno, "expected 2 tab-separated columns (source, targets)");
    const auto source = strip_hyphen_markers(trim(fields[0]));
    if (source.empty())
      throw ParseError(name, lineno, "empty source form");
    std::size_t added = 0;
    for (auto item : split(fields[1], '|')) {
      item = trim(item);
      if (item.empty())
        continue;
      const auto colon = item.rfind(':');
      if (colon == std::string_view::npos)
        throw ParseError(name, lineno, "target '" + std::string(item) + "' lacks a ':bound' or ':free' tag");
      const auto tag = item.substr(colon + 1);
      if (tag != "bound" && tag != "free")
        throw ParseError(name, lineno, "unknown bound tag '" + std::string(tag) + "'");
      const auto form = strip_hyphen_markers(trim(item.substr(0, colon)));
      if (form.empty())
        throw ParseError(name, lineno, "empty target form");
      table.add(source, TargetForm{std::string(form), tag == "bound"});
      ++added;
    }
    if (added == 0)
      throw ParseError(name, lineno, "no target forms");
  });
  return table;
}

VariantTable read_variant_table(std::istream& in, const std::string& name, const std::string& language,
                                Diagnostics* diag)
{
  VariantTable table(language);
  for_each_line(in, [&](std::string_view line, std::size_t lineno) {
    if (skippable(line))
      return;
    const auto fields = split(line, '\t');
    if (fields.size() != 2)
      throw ParseError(name, lineno, "expected 2 tab-separated columns (form, related forms)");
    const auto form = strip_hyphen_markers(trim(fields[0]));
    if (form.empty())
      throw ParseError(name, lineno, "empty form");
    for (auto rel : split(fields[1], '|')) {
      rel = strip_hyphen_markers(trim(rel));
      if (rel.empty())
        continue;
      if (fold_case(rel) == fold_case(form)) {
        if (diag)
          diag->warning("self mapping of '" + std::string(form) + "' dropped", name + ":" + std::to_string(lineno));
        continue;
      }
      table.add(form, rel);
    }
  });
  return table;
}

StopwordList read_stopwords(std::istream& in, const std::string& language)
{
  StopwordList stop(language);
  for_each_line(in, [&](std::string_view line, std::size_t) {
    if (skippable(line))
      return;
    stop.insert(line);
  });
  return stop;
}

TaggedCorpus read_corpus(std::istream& in, const std::string& name, const std::string& language)
{
  std::vector<std::vector<Token>> sentences(1);
  for_each_line(in, [&](std::string_view line, std::size_t lineno) {
    if (trim(line).empty()) {
      if (!sentences.back().empty())
        sentences.emplace_back();
      return;
    }
    const auto fields = split(line, '\t');
    if (fields.size() != 3)
      throw ParseError(name, lineno, "expected 3 tab-separated columns (surface, lemma, pos)");
    Token tok{std::string(fields[0]), std::string(trim(fields[1])), std::string(trim(fields[2]))};
    if (tok.lemma.empty() || tok.pos.empty())
      throw ParseError(name, lineno, "empty lemma or POS");
    sentences.back().push_back(std::move(tok));
  });
  return TaggedCorpus(language, std::move(sentences));
}

std::vector<std::string> read_term_list(std::istream& in)
{
  std::vector<std::string> terms;
  for_each_line(in, [&](std::string_view line, std::size_t) {
    if (skippable(line))
      return;
    terms.emplace_back(trim(line));
  });
  return terms;
}

ComponentInventory load_inventory(const std::string& path, const std::string& language, Diagnostics* diag)
{
  auto in = open_or_throw(path);
  return read_inventory(in, path, language, diag);
}

TranslationTable load_translation_table(const std::string& path, Diagnostics* diag)
{
  auto in = open_or_throw(path);
  return read_translation_table(in, path, diag);
}

VariantTable load_variant_table(const std::string& path, const std::string& language, Diagnostics* diag)
{
  auto in = open_or_throw(path);
  return read_variant_table(in, path, language, diag);
}

StopwordList load_stopwords(const std::string& path, const std::string& language)
{
  auto in = open_or_throw(path);
  return read_stopwords(in, language);
}

TaggedCorpus load_corpus(const std::string& path, const std::string& language)
{
  auto in = open_or_throw(path);
  return read_corpus(in, path, language);
}

std::vector<std::string> load_term_list(const std::string& path)
{
  auto in = open_or_throw(path);
  return read_term_list(in);
}

// ----- writers ----- //

void write_inventory(std::ostream& out, const ComponentInventory& inv)
{
  for (auto k : kAllKinds)
    for (const auto& f : inv.forms(k))
      out << f << '\t' << kind_tag(k) << '\n';
}

void write_translation_table(std::ostream& out, const TranslationTable& table)
{
  for (const auto& [src, targets] : table.entries()) {
    out << src << '\t';
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (i)
        out << '|';
      out << targets[i].form << ':' << (targets[i].bound ? "bound" : "free");
    }
    out << '\n';
  }
}

void write_variant_table(std::ostream& out, const VariantTable& table)
{
  for (const auto& [form, related] : table.entries())
    out << form << '\t' << join(related, "|") << '\n';
}

void write_stopwords(std::ostream& out, const StopwordList& stop)
{
  for (const auto& l : stop.lemmas())
    out << l << '\n';
}

void write_corpus(std::ostream& out, const TaggedCorpus& corpus)
{
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (i > 0 && corpus.sentence_of(i) != corpus.sentence_of(i - 1))
      out << '\n';
    const auto& t = corpus[i];
    out << t.surface << '\t' << t.lemma << '\t' << t.pos << '\n';
  }
}

void write_term_list(std::ostream& out, std::span<const std::string> terms)
{
  for (const auto& t : terms)
    out << t << '\n';
}

}  // namespace morphotrans
