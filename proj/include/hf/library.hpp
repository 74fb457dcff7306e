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

// Loading .hf modules into an environment and auditing the bundled library
// against its manifest.
//
// Manifest format (lib/MANIFEST), one item per line, '#' starts a comment:
//
//   module <file.hf>                                  load order
//   <name> | <kind> | <type> | <anchor> [| <category>]
//
// <kind> is definition, postulate, hit or axiom. <type> is surface syntax
// resolved against the loaded environment and compared up to conversion.
// Postulates carry one of the deferral categories in postulate_categories().
// A line starting with whitespace continues the previous entry's text.

#ifndef HF_LIBRARY_HPP
#define HF_LIBRARY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hf/kernel.hpp"
#include "hf/syntax.hpp"

namespace hf {

struct DeclRecord {
  std::string name;
  std::string file;
  std::string kind;    // definition | postulate | hit | axiom
  bool ok = true;
  std::string type_text;
  std::string error_kind;
  std::string message;
  Span span;
  double millis = 0;
};

struct ModuleResult {
  std::vector<DeclRecord> records;
  std::optional<Error> fatal;  // parse failure: nothing was checked
  size_t failures() const;
};

// Checks every declaration of `source` in order, extending env with the ones
// that pass. With stop_on_failure the first failing declaration ends the run.
ModuleResult check_module(Environment& env, std::string_view source, const std::string& file, KernelOptions opt,
                          bool stop_on_failure);

struct ManifestEntry {
  std::string name;
  std::string kind;
  std::string type_text;
  std::string anchor;
  std::string category;
  int line = 0;
};

struct Manifest {
  std::string file;
  std::vector<std::string> modules;
  std::vector<ManifestEntry> entries;
};

const std::vector<std::string>& postulate_categories();

// Throws Error(Parse) on malformed lines.
Manifest parse_manifest(std::string_view text, const std::string& file);
Manifest read_manifest(const std::string& path);

struct ManifestResult {
  std::string name;
  std::string kind;
  std::string anchor;
  std::string category;
  bool ok = true;
  std::string problem;  // missing | kind | type | category | unlisted
  std::string message;
};

// Audits env against the manifest and returns one result per entry, followed
// by one failing result for each library postulate the manifest does not list.
// Never stops at the first failure.
std::vector<ManifestResult> check_manifest(const Environment& env, const Manifest& manifest,
                                           const std::vector<std::string>& library_postulates,
                                           KernelOptions opt = {});

struct LibraryReport {
  std::vector<DeclRecord> records;
  std::vector<ManifestResult> manifest;
  std::optional<Error> fatal;  // IO or parse failure
  size_t definitions = 0, postulates = 0, hits = 0, axioms = 0;
  double millis = 0;
  bool ok() const;
  std::vector<std::string> postulate_names() const;
};

// Loads the manifest's modules from lib_dir in order, then audits.
LibraryReport load_library(Environment& env, const std::string& lib_dir, const Manifest& manifest,
                           KernelOptions opt = {});

// Parses and resolves a closed term against env.
TermPtr read_term(const Environment& env, std::string_view text);

// Normal form of a closed, well-typed term (its type is checked first).
TermPtr eval_definitional(const Environment& env, const TermPtr& term, KernelOptions opt = {});

std::string read_file(const std::string& path);

}  // namespace hf

#endif  // HF_LIBRARY_HPP
