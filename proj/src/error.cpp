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

#include "hf/error.hpp"

namespace hf {

std::string Span::str() const {
  std::string out = file.empty() ? std::string("<input>") : file;
  out += ":" + std::to_string(line) + ":" + std::to_string(column);
  return out;
}

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::UnboundIdentifier: return "UnboundIdentifier";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::Type: return "TypeError";
    case ErrorKind::UnboundConstant: return "UnboundConstant";
    case ErrorKind::FuelExhausted: return "FuelExhausted";
    case ErrorKind::NoInformation: return "NoInformation";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

static std::string render(ErrorKind kind, const Span& span, const std::string& message) {
  return span.str() + ": " + error_kind_name(kind) + ": " + message;
}

Error::Error(ErrorKind kind, Span span, std::string message)
    : std::runtime_error(render(kind, span, message)),
      kind_(kind),
      span_(std::move(span)),
      message_(std::move(message)) {}

void Error::set_declaration(std::string name) { declaration_ = std::move(name); }

ParseError::ParseError(Span span, std::string expected)
    : Error(ErrorKind::Parse, std::move(span), "expected " + expected) {}

TypeError::TypeError(std::string message, Span span)
    : Error(ErrorKind::Type, std::move(span), std::move(message)) {}

FuelExhausted::FuelExhausted(uint64_t budget)
    : Error(ErrorKind::FuelExhausted, {}, "reduction budget of " + std::to_string(budget) + " steps exhausted") {}

}  // namespace hf
