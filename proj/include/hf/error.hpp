/* Copyright 2026 The hf Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef HF_ERROR_HPP
#define HF_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hf {

struct Span {
  std::string file;
  uint32_t line = 1;
  uint32_t column = 1;
  uint32_t length = 0;

  std::string str() const;
};

enum class ErrorKind {
  Parse,
  UnboundIdentifier,
  DuplicateName,
  Type,
  UnboundConstant,
  FuelExhausted,
  NoInformation,
  Io,
};

const char* error_kind_name(ErrorKind k);

// Base of every diagnostic raised by the front end and the kernel.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, Span span, std::string message);

  ErrorKind kind() const { return kind_; }
  const Span& span() const { return span_; }
  const std::string& message() const { return message_; }
  // Name of the declaration being processed when the error was raised, if any.
  const std::string& declaration() const { return declaration_; }
  void set_declaration(std::string name);

 private:
  ErrorKind kind_;
  Span span_;
  std::string message_;
  std::string declaration_;
};

class ParseError : public Error {
 public:
  ParseError(Span span, std::string expected);
};

class TypeError : public Error {
 public:
  TypeError(std::string message, Span span = {});
};

class FuelExhausted : public Error {
 public:
  explicit FuelExhausted(uint64_t budget);
};

}  // namespace hf

#endif  // HF_ERROR_HPP
