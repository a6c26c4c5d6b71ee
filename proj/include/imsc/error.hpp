// Copyright 2026 The imsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace imsc {

/// Base class of every error raised by the library. The CLI maps these to
/// exit code 2 (data / invariant error).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
  using Error::Error;
};

class MalformedLine : public Error {
public:
  MalformedLine(std::string path, std::size_t line, const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what),
        path_(std::move(path)), line_(line) {}

  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }

private:
  std::string path_;
  std::size_t line_;
};

class InvariantViolation : public Error {
public:
  using Error::Error;
};

class InconsistentStore : public Error {
public:
  using Error::Error;
};

class MissingSubsetCount : public Error {
public:
  using Error::Error;
};

class UniverseTooLarge : public Error {
public:
  using Error::Error;
};

class InvalidParams : public Error {
public:
  using Error::Error;
};

// Bad user input (threshold syntax, sweep syntax). Exit code 1 in the CLI.
class UsageError : public Error {
public:
  using Error::Error;
};

}  // namespace imsc
