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
#include <span>
#include <string>
#include <vector>

#include "morphotrans/diagnostics.hpp"

namespace morphotrans::cli {

// Environment variable naming the default run configuration for `extract`
// (and the inventory fallback of `decompose`).
inline constexpr const char* kConfigEnv = "MORPHOTRANS_CONFIG";

struct CommandOutcome
{
  int exit_code = 0;
  std::string output_path;  // empty when data went to the output stream
  Diagnostics diagnostics;
};

// Exit codes: 0 success, 1 resource or runtime error, 2 usage error.
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

// args[0] is the program name. Data goes to out, diagnostics and usage to err.
CommandOutcome dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace morphotrans::cli
