// Copyright 2026 The irj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IRJ_ERROR_HPP_
#define IRJ_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace irj {

// Every error carries the module that raised it and a short machine-readable
// kind, so the command-line front end can report provenance.
class Error : public std::runtime_error {
 public:
  Error(std::string module, std::string kind, const std::string& message)
      : std::runtime_error(message),
        module_(std::move(module)),
        kind_(std::move(kind)) {}

  const std::string& module() const noexcept { return module_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string module_;
  std::string kind_;
};

// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  DomainError(std::string module, const std::string& message,
              std::string kind = "domain")
      : Error(std::move(module), std::move(kind), message) {}
};

// A value lies outside an admissible interval; `bound()` names the violated
// side ("lower" or "upper").
class OutOfRangeError : public DomainError {
 public:
  OutOfRangeError(std::string module, std::string bound,
                  const std::string& message)
      : DomainError(std::move(module), message, "out_of_range"),
        bound_(std::move(bound)) {}

  const std::string& bound() const noexcept { return bound_; }

 private:
  std::string bound_;
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& message)
      : Error("cli_io", "schema", message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error("cli_io", "io", message) {}
};

}  // namespace irj

#endif  // IRJ_ERROR_HPP_
