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

#include "morphotrans/lexicon_io.hpp"

#include <ostream>

namespace morphotrans {

void write_lexicon(std::ostream& out, const Lexicon& lexicon)
{
  for (const auto& e : lexicon.entries) {
    if (e.candidates.empty()) {
      out << e.term << "\t\t0\t0\n";
      continue;
    }
    for (const auto& c : e.candidates)
      out << e.term << '\t' << c.render() << '\t' << c.occurrences() << '\t' << (c.fertile ? 1 : 0) << '\n';
  }
}

void write_metadata(std::ostream& out, const Lexicon& lexicon)
{
  const auto& m = lexicon.metadata;
  out << "preset=" << m.preset << '\n';
  for (const auto& [k, v] : m.settings)
    out << "setting." << k << '=' << v << '\n';
  for (const auto& [k, v] : m.checksums)
    out << "crc32." << k << '=' << v << '\n';
  out << "started=" << m.started << '\n';
  out << "finished=" << m.finished << '\n';
  const auto& s = lexicon.stats;
  out << "terms=" << s.terms << '\n';
  out << "decomposed=" << s.decomposed << '\n';
  out << "translated=" << s.translated << '\n';
  out << "recomposed=" << s.recomposed << '\n';
  out << "attested=" << s.attested << '\n';
}

}  // namespace morphotrans
