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

#include <iosfwd>

#include "morphotrans/pipeline.hpp"

namespace morphotrans {

// One row per candidate: source term, "lemma/POS ..." candidate, occurrence
// count, fertile flag (1/0). Terms without candidates get a single row with an
// empty candidate and count 0, so the file lists every attempted term.
void write_lexicon(std::ostream& out, const Lexicon& lexicon);

// key=value run metadata: preset, settings, resource checksums, timestamps
// and per-stage counts.
void write_metadata(std::ostream& out, const Lexicon& lexicon);

}  // namespace morphotrans
