#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The essencemap Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <cstddef>
#include <stdexcept>
#include <string>

namespace essencemap {

/// Failure category. The CLI maps each category onto a process exit code.
enum class ErrorKind
{
  usage,      // bad invocation or configuration
  parse,      // malformed input text
  reference,  // unresolvable context/concept/attribute reference
  domain      // well-formed input the analysis cannot be applied to
};

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, std::string const &message)
    : std::runtime_error(message)
    , kind_(kind)
  {}

  Error(ErrorKind kind, std::size_t line, std::string const &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message)
    , kind_(kind)
    , line_(line)
  {}

  ErrorKind kind() const noexcept
  {
    return kind_;
  }

  /// 1-based source line, or 0 when the error is not tied to a line.
  std::size_t line() const noexcept
  {
    return line_;
  }

  /// The same error with `prefix` (usually a file name) in front of the message.
  Error within(std::string const &prefix) const
  {
    Error e(kind_, prefix + ": " + what());
    e.line_ = line_;
    return e;
  }

private:
  ErrorKind   kind_;
  std::size_t line_ = 0;
};

}  // namespace essencemap
