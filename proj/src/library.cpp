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

#include "hf/library.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace hf {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

const char* kind_word(DeclKind k) {
  switch (k) {
    case DeclKind::Definition: return "definition";
    case DeclKind::Postulate: return "postulate";
    case DeclKind::Hit: return "hit";
  }
  return "?";
}

DeclRecord failure(const SurfaceDecl& d, const std::string& file, const Error& e) {
  DeclRecord r;
  r.name = d.name;
  r.file = file;
  r.kind = kind_word(d.kind);
  r.ok = false;
  r.error_kind = error_kind_name(e.kind());
  r.message = e.message();
  r.span = e.span().file.empty() ? d.span : e.span();
  return r;
}

}  // namespace

size_t ModuleResult::failures() const {
  return static_cast<size_t>(std::count_if(records.begin(), records.end(), [](const DeclRecord& r) { return !r.ok; })) +
         (fatal ? 1 : 0);
}

ModuleResult check_module(Environment& env, std::string_view source, const std::string& file, KernelOptions opt,
                          bool stop_on_failure) {
  ModuleResult out;
  SourceModule mod;
  try {
    mod = parse(source, file);
  } catch (const Error& e) {
    out.fatal = e;
    return out;
  }
  for (const auto& d : mod.declarations) {
    auto start = Clock::now();
    size_t before = env.size();
    try {
      SourceModule single{file, {d}};
      auto resolved = resolve(single, [&](const std::string& n) { return env.contains(n); });
      const ResolvedDecl& rd = resolved.front();
      switch (rd.kind) {
        case DeclKind::Definition:
          extend_definition(env, rd.name, rd.signature, rd.body, opt, rd.span);
          break;
        case DeclKind::Postulate:
          extend_postulate(env, rd.name, rd.signature, opt, rd.span);
          break;
        case DeclKind::Hit:
          extend_hit(env, rd.name, rd.body, opt, rd.span);
          break;
      }
    } catch (const Error& e) {
      out.records.push_back(failure(d, file, e));
      out.records.back().millis = since(start);
      if (stop_on_failure) return out;
      continue;
    }
    double ms = since(start);
    for (size_t i = before; i < env.size(); ++i) {
      const Entry& e = *env.at(i);
      DeclRecord r;
      r.name = e.name;
      r.file = file;
      r.kind = entry_kind_name(e.kind);
      r.type_text = print(e.type);
      r.span = e.span;
      r.millis = i == before ? ms : 0;
      out.records.push_back(std::move(r));
    }
  }
  return out;
}

const std::vector<std::string>& postulate_categories() {
  static const std::vector<std::string> cats = {"freudenthal",     "pi-iso",        "susp-conn",
                                                "blakers-massey",  "suspsmash",     "smcf-cube",
                                                "susp-map-conn",   "algebra-interface"};
  return cats;
}

Manifest parse_manifest(std::string_view text, const std::string& file) {
  Manifest m;
  m.file = file;
  std::vector<std::pair<int, std::string>> items;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    if ((line[0] == ' ' || line[0] == '\t') && !items.empty()) {
      items.back().second += " " + trim(line);
      continue;
    }
    items.emplace_back(number, trim(line));
  }
  for (const auto& [ln, item] : items) {
    Span span{file, static_cast<uint32_t>(ln), 1, 0};
    if (item.rfind("module ", 0) == 0) {
      m.modules.push_back(trim(item.substr(7)));
      continue;
    }
    std::vector<std::string> fields;
    size_t pos = 0;
    while (true) {
      size_t bar = item.find('|', pos);
      size_t len = bar == std::string::npos ? std::string::npos : bar - pos;
      fields.push_back(trim(std::string_view(item).substr(pos, len)));
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    if (fields.size() < 4 || fields.size() > 5) throw ParseError(span, "'name | kind | type | anchor [| category]'");
    ManifestEntry e{fields[0], fields[1], fields[2], fields[3], fields.size() == 5 ? fields[4] : "", ln};
    static const std::vector<std::string> kinds = {"definition", "postulate", "hit", "axiom"};
    if (std::find(kinds.begin(), kinds.end(), e.kind) == kinds.end())
      throw ParseError(span, "a kind (definition, postulate, hit or axiom), found '" + e.kind + "'");
    m.entries.push_back(std::move(e));
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Manifest read_manifest(const std::string& path) { return parse_manifest(read_file(path), path); }

TermPtr read_term(const Environment& env, std::string_view text) {
  return resolve_term(parse_term(text, "<term>"), {}, [&](const std::string& n) { return env.contains(n); });
}

TermPtr eval_definitional(const Environment& env, const TermPtr& term, KernelOptions opt) {
  infer(env, {}, term, opt);
  return normalize(env, {}, term, opt);
}

std::vector<ManifestResult> check_manifest(const Environment& env, const Manifest& manifest,
                                           const std::vector<std::string>& library_postulates, KernelOptions opt) {
  std::vector<ManifestResult> out;
  const auto& cats = postulate_categories();
  for (const auto& me : manifest.entries) {
    ManifestResult r{me.name, me.kind, me.anchor, me.category, true, "", ""};
    auto fail = [&](const char* problem, std::string msg) {
      r.ok = false;
      r.problem = problem;
      r.message = std::move(msg);
    };
    EntryPtr e = env.find(me.name);
    if (!e) {
      fail("missing", "'" + me.name + "' is not declared");
    } else if (me.kind != entry_kind_name(e->kind)) {
      fail("kind", "'" + me.name + "' is a " + entry_kind_name(e->kind) + ", expected " + me.kind);
    } else if (me.kind == "postulate" && std::find(cats.begin(), cats.end(), me.category) == cats.end()) {
      fail("category", "postulate '" + me.name + "' has no recognised deferral category");
    } else {
      try {
        TermPtr want = read_term(env, me.type_text);
        infer(env, {}, want, opt);
        if (!conv(env, {}, want, e->type, opt))
          fail("type", "type of '" + me.name + "' is " + print(e->type) + ", manifest requires " + print(want));
      } catch (const Error& err) {
        fail("type", std::string(error_kind_name(err.kind())) + " in manifest type of '" + me.name +
                         "': " + err.message());
      }
    }
    out.push_back(std::move(r));
  }
  for (const auto& p : library_postulates) {
    bool listed = std::any_of(manifest.entries.begin(), manifest.entries.end(),
                              [&](const ManifestEntry& me) { return me.name == p && me.kind == "postulate"; });
    if (!listed)
      out.push_back({p, "postulate", "", "", false, "unlisted", "postulate '" + p + "' is not in the manifest"});
  }
  return out;
}

bool LibraryReport::ok() const {
  if (fatal) return false;
  for (const auto& r : records)
    if (!r.ok) return false;
  for (const auto& m : manifest)
    if (!m.ok) return false;
  return true;
}

std::vector<std::string> LibraryReport::postulate_names() const {
  std::vector<std::string> out;
  for (const auto& r : records)
    if (r.ok && r.kind == "postulate") out.push_back(r.name);
  return out;
}

LibraryReport load_library(Environment& env, const std::string& lib_dir, const Manifest& manifest,
                           KernelOptions opt) {
  LibraryReport rep;
  auto start = Clock::now();
  for (const auto& mod : manifest.modules) {
    std::string path = lib_dir + "/" + mod;
    std::string text;
    try {
      text = read_file(path);
    } catch (const std::exception& e) {
      rep.fatal = Error(ErrorKind::Io, Span{path, 1, 1, 0}, e.what());
      break;
    }
    ModuleResult res = check_module(env, text, path, opt, true);
    for (auto& r : res.records) rep.records.push_back(std::move(r));
    if (res.fatal) {
      rep.fatal = res.fatal;
      break;
    }
    if (res.failures()) break;
  }
  for (const auto& r : rep.records) {
    if (!r.ok) continue;
    if (r.kind == "definition") ++rep.definitions;
    else if (r.kind == "postulate") ++rep.postulates;
    else if (r.kind == "hit") ++rep.hits;
    else if (r.kind == "axiom") ++rep.axioms;
  }
  bool loaded = !rep.fatal && std::all_of(rep.records.begin(), rep.records.end(), [](auto& r) { return r.ok; });
  if (loaded) rep.manifest = check_manifest(env, manifest, rep.postulate_names(), opt);
  rep.millis = since(start);
  return rep;
}

}  // namespace hf
