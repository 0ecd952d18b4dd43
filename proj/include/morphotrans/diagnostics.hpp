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
#include <stdexcept>
#include <string>
#include <vector>

namespace morphotrans {

enum class Severity { Info, Warning, Error };

struct Diagnostic
{
  Severity severity;
  std::string message;
  std::string location;  // "path:line", a source term, or empty
};

class Diagnostics
{
public:
  void info(std::string message, std::string location = {});
  void warning(std::string message, std::string location = {});
  void error(std::string message, std::string location = {});

  const std::vector<Diagnostic>& entries() const { return entries_; }
  std::size_t count(Severity s) const;
  bool has_errors() const { return count(Severity::Error) != 0; }
  void append(const Diagnostics& other);

private:
  std::vector<Diagnostic> entries_;
};

std::string to_string(const Diagnostic& d);

// Malformed resource file. what() already names the path and line.
class ParseError : public std::runtime_error
{
public:
  ParseError(const std::string& path, std::size_t line, const std::string& message);

  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }

private:
  std::string path_;
  std::size_t line_;
};

// Invalid run configuration or unsupported option.
class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace morphotrans
