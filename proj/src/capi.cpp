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

#include "hf/hf.h"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <exception>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hf/analyzer.hpp"
#include "hf/kernel.hpp"
#include "hf/library.hpp"
#include "hf/syntax.hpp"
#include "json.hpp"

#ifndef HF_LIB_DIR
#define HF_LIB_DIR "lib"
#endif

using nlohmann::json;

struct hf_session {
  hf::Environment env;
  hf::KernelOptions opt;
  std::string lib_dir = HF_LIB_DIR;
  std::string manifest;  // empty: <lib_dir>/MANIFEST
  std::string last_error;

  std::string manifest_path() const { return manifest.empty() ? lib_dir + "/MANIFEST" : manifest; }
};

namespace {

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json span_json(const hf::Span& sp) { return {{"file", sp.file}, {"line", sp.line}, {"column", sp.column}}; }

json error_json(const hf::Error& e) {
  json j = span_json(e.span());
  j["kind"] = hf::error_kind_name(e.kind());
  j["message"] = e.message();
  j["declaration"] = e.declaration();
  return j;
}

json decl_json(const hf::DeclRecord& r) {
  json j = {{"name", r.name},   {"file", r.file},       {"kind", r.kind},
            {"status", r.ok ? "ok" : "failed"},          {"type", r.type_text},
            {"millis", r.millis}, {"error", nullptr}};
  if (!r.ok) {
    json e = span_json(r.span);
    e["file"] = r.span.file.empty() ? r.file : r.span.file;
    e["kind"] = r.error_kind;
    e["message"] = r.message;
    e["declaration"] = r.name;
    j["error"] = std::move(e);
  }
  return j;
}

hf_status status_of(hf::ErrorKind k) {
  switch (k) {
    case hf::ErrorKind::Parse: return HF_ERR_PARSE;
    case hf::ErrorKind::Io: return HF_ERR_IO;
    case hf::ErrorKind::FuelExhausted: return HF_ERR_FUEL;
    default: return HF_ERR_TYPE;
  }
}

// Runs body, converting every exception into a status and a diagnostic.
template <class F>
hf_status guard(hf_session* s, F&& body) {
  if (!s) return HF_ERR_ARGUMENT;
  s->last_error.clear();
  try {
    return body();
  } catch (const hf::Error& e) {
    s->last_error = e.span().str() + ": " + hf::error_kind_name(e.kind()) + ": " + e.message();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    s->last_error = "out of memory";
    return HF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    s->last_error = std::string("internal error: ") + e.what();
    return HF_ERR_INTERNAL;
  } catch (...) {
    s->last_error = "internal error";
    return HF_ERR_INTERNAL;
  }
}

std::set<std::string> declared_names(const hf::SourceModule& m) {
  std::set<std::string> out;
  for (const auto& d : m.declarations) out.insert(d.name);
  return out;
}

struct Counts {
  size_t definitions = 0, postulates = 0, hits = 0, axioms = 0, failures = 0;
  void add(const hf::DeclRecord& r) {
    if (!r.ok) {
      ++failures;
      return;
    }
    if (r.kind == "definition") ++definitions;
    else if (r.kind == "postulate") ++postulates;
    else if (r.kind == "hit") ++hits;
    else if (r.kind == "axiom") ++axioms;
  }
  void into(json& j) const {
    j["definitions"] = definitions;
    j["postulates"] = postulates;
    j["hits"] = hits;
    j["axioms"] = axioms;
  }
};

// Library files that cannot be read are I/O failures, not internal ones.
std::string read_lib_file(const std::string& path) {
  try {
    return hf::read_file(path);
  } catch (const std::exception& e) {
    throw hf::Error(hf::ErrorKind::Io, hf::Span{path}, e.what());
  }
}

double millis_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

// Checks already parsed user modules on top of the library prefix they do
// not redefine.
hf_status check_sources(hf_session* s, const std::vector<std::pair<std::string, std::string>>& sources,
                        char** report) {
  auto start = std::chrono::steady_clock::now();
  json rep = {{"declarations", json::array()}, {"fatal", nullptr}};
  Counts counts;
  hf_status st = HF_OK;

  std::vector<hf::SourceModule> parsed;
  std::set<std::string> names;
  for (const auto& [file, text] : sources) {
    try {
      parsed.push_back(hf::parse(text, file));
    } catch (const hf::Error& e) {
      rep["fatal"] = error_json(e);
      st = HF_ERR_PARSE;
      break;
    }
    auto n = declared_names(parsed.back());
    names.insert(n.begin(), n.end());
  }

  hf::Environment env;
  if (st == HF_OK) {
    hf::Manifest m = hf::parse_manifest(read_lib_file(s->manifest_path()), s->manifest_path());
    for (const auto& mod : m.modules) {
      std::string path = s->lib_dir + "/" + mod;
      std::string text = read_lib_file(path);
      auto lib_names = declared_names(hf::parse(text, path));
      bool clash = std::any_of(lib_names.begin(), lib_names.end(), [&](const auto& n) { return names.count(n); });
      if (clash) break;
      hf::ModuleResult res = hf::check_module(env, text, path, s->opt, true);
      if (res.fatal) throw *res.fatal;
      if (res.failures()) {
        const auto& bad = res.records.back();
        hf::TypeError e("the library does not check: " + bad.name + ": " + bad.message);
        e.set_declaration(bad.name);
        throw e;
      }
    }
    for (size_t i = 0; i < parsed.size(); ++i) {
      hf::ModuleResult res = hf::check_module(env, sources[i].second, sources[i].first, s->opt, false);
      for (const auto& r : res.records) {
        counts.add(r);
        rep["declarations"].push_back(decl_json(r));
      }
    }
    s->env = env;
    if (counts.failures) st = HF_ERR_TYPE;
  }
  json sum = {{"declarations", rep["declarations"].size()}, {"failures", counts.failures + (st == HF_ERR_PARSE)},
              {"millis", millis_since(start)}};
  counts.into(sum);
  rep["summary"] = std::move(sum);
  if (!rep["fatal"].is_null()) {
    const json& f = rep["fatal"];
    s->last_error = f["file"].get<std::string>() + ":" + std::to_string(f["line"].get<int>()) + ":" +
                    std::to_string(f["column"].get<int>()) + ": " + f["kind"].get<std::string>() + ": " +
                    f["message"].get<std::string>();
  }
  if (report) *report = dup(rep.dump());
  return st;
}

hf::TermPtr term_of(hf_session* s, const char* text) {
  if (!text) throw std::invalid_argument("null term");
  return hf::read_term(s->env, text);
}

}  // namespace

extern "C" {

const char* hf_version(void) { return "0.1.0"; }

const char* hf_status_name(hf_status s) {
  switch (s) {
    case HF_OK: return "ok";
    case HF_ERR_TYPE: return "type-error";
    case HF_ERR_MANIFEST: return "manifest-error";
    case HF_ERR_PARSE: return "parse-error";
    case HF_ERR_IO: return "io-error";
    case HF_ERR_ARGUMENT: return "bad-argument";
    case HF_ERR_FUEL: return "fuel-exhausted";
    case HF_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* hf_default_lib_dir(void) { return HF_LIB_DIR; }

hf_session* hf_session_new(void) {
  try {
    return new hf_session();
  } catch (...) {
    return nullptr;
  }
}

void hf_session_free(hf_session* s) { delete s; }

void hf_string_free(char* str) { std::free(str); }

const char* hf_last_error(const hf_session* s) { return s ? s->last_error.c_str() : "null session"; }

hf_status hf_set_fuel(hf_session* s, uint64_t fuel) {
  return guard(s, [&] {
    if (fuel == 0) {
      s->last_error = "fuel must be positive";
      return HF_ERR_ARGUMENT;
    }
    s->opt.fuel = fuel;
    return HF_OK;
  });
}

hf_status hf_set_library(hf_session* s, const char* lib_dir, const char* manifest_path) {
  return guard(s, [&] {
    s->lib_dir = lib_dir && *lib_dir ? lib_dir : HF_LIB_DIR;
    s->manifest = manifest_path ? manifest_path : "";
    return HF_OK;
  });
}

hf_status hf_load_library(hf_session* s, char** report) {
  return guard(s, [&]() -> hf_status {
    json rep = {{"declarations", json::array()}, {"manifest", json::array()}, {"fatal", nullptr}};
    hf::Manifest m;
    try {
      m = hf::read_manifest(s->manifest_path());
    } catch (const hf::Error& e) {
      rep["fatal"] = error_json(e);
    } catch (const std::exception& e) {
      rep["fatal"] = error_json(hf::Error(hf::ErrorKind::Io, hf::Span{s->manifest_path()}, e.what()));
    }
    hf_status st = HF_OK;
    json sum = {{"entries", m.entries.size()}, {"modules", m.modules}};
    if (rep["fatal"].is_null()) {
      hf::Environment env;
      hf::LibraryReport lr = hf::load_library(env, s->lib_dir, m, s->opt);
      size_t decl_failures = 0, manifest_failures = 0;
      for (const auto& r : lr.records) {
        decl_failures += !r.ok;
        rep["declarations"].push_back(decl_json(r));
      }
      std::map<std::string, std::vector<std::string>> by_category;
      for (const auto& r : lr.manifest) {
        manifest_failures += !r.ok;
        rep["manifest"].push_back({{"name", r.name},
                                   {"kind", r.kind},
                                   {"anchor", r.anchor},
                                   {"category", r.category},
                                   {"status", r.ok ? "ok" : "failed"},
                                   {"problem", r.problem},
                                   {"message", r.message}});
        if (r.kind == "postulate" && !r.category.empty()) by_category[r.category].push_back(r.name);
      }
      if (lr.fatal) {
        rep["fatal"] = error_json(*lr.fatal);
        st = status_of(lr.fatal->kind());
      } else if (decl_failures) {
        st = HF_ERR_TYPE;
      } else if (manifest_failures) {
        st = HF_ERR_MANIFEST;
      }
      if (st == HF_OK) s->env = env;
      sum["definitions"] = lr.definitions;
      sum["postulates"] = lr.postulates;
      sum["hits"] = lr.hits;
      sum["axioms"] = lr.axioms;
      sum["declaration_failures"] = decl_failures;
      sum["manifest_failures"] = manifest_failures;
      sum["postulate_names"] = lr.postulate_names();
      sum["categories"] = by_category;
      sum["millis"] = lr.millis;
    } else {
      st = status_of(hf::ErrorKind::Io);
      if (rep["fatal"]["kind"] == "ParseError") st = HF_ERR_PARSE;
    }
    if (!rep["fatal"].is_null())
      s->last_error = rep["fatal"]["file"].get<std::string>() + ": " + rep["fatal"]["message"].get<std::string>();
    rep["summary"] = std::move(sum);
    if (report) *report = dup(rep.dump());
    return st;
  });
}

hf_status hf_check_files(hf_session* s, const char* const* paths, size_t count, char** report) {
  return guard(s, [&]() -> hf_status {
    if (!paths && count) return HF_ERR_ARGUMENT;
    std::vector<std::pair<std::string, std::string>> sources;
    for (size_t i = 0; i < count; ++i) {
      if (!paths[i]) return HF_ERR_ARGUMENT;
      try {
        sources.emplace_back(paths[i], hf::read_file(paths[i]));
      } catch (const std::exception& e) {
        s->last_error = e.what();
        if (report) {
          json rep = {{"declarations", json::array()},
                      {"fatal", error_json(hf::Error(hf::ErrorKind::Io, hf::Span{paths[i]}, e.what()))},
                      {"summary", {{"declarations", 0}, {"failures", 1}}}};
          *report = dup(rep.dump());
        }
        return HF_ERR_IO;
      }
    }
    return check_sources(s, sources, report);
  });
}

hf_status hf_check_source(hf_session* s, const char* source, const char* file_name, char** report) {
  return guard(s, [&]() -> hf_status {
    if (!source) return HF_ERR_ARGUMENT;
    return check_sources(s, {{file_name ? file_name : "<source>", source}}, report);
  });
}

hf_status hf_infer(hf_session* s, const char* term, char** type) {
  return guard(s, [&]() -> hf_status {
    if (!term) return HF_ERR_ARGUMENT;
    hf::TermPtr t = term_of(s, term);
    hf::TermPtr ty = hf::infer(s->env, {}, t, s->opt);
    if (type) *type = dup(hf::print(ty));
    return HF_OK;
  });
}

hf_status hf_normalize(hf_session* s, const char* term, char** normal_form) {
  return guard(s, [&]() -> hf_status {
    if (!term) return HF_ERR_ARGUMENT;
    hf::TermPtr nf = hf::eval_definitional(s->env, term_of(s, term), s->opt);
    if (normal_form) *normal_form = dup(hf::print(nf));
    return HF_OK;
  });
}

hf_status hf_conv(hf_session* s, const char* a, const char* b, int* equal) {
  return guard(s, [&]() -> hf_status {
    if (!a || !b) return HF_ERR_ARGUMENT;
    hf::TermPtr ta = term_of(s, a), tb = term_of(s, b);
    hf::infer(s->env, {}, ta, s->opt);
    hf::infer(s->env, {}, tb, s->opt);
    bool eq = hf::conv(s->env, {}, ta, tb, s->opt);
    if (equal) *equal = eq;
    return HF_OK;
  });
}

hf_status hf_same_normal_form(hf_session* s, const char* a, const char* b, int* equal) {
  return guard(s, [&]() -> hf_status {
    if (!a || !b) return HF_ERR_ARGUMENT;
    hf::TermPtr na = hf::eval_definitional(s->env, term_of(s, a), s->opt);
    hf::TermPtr nb = hf::eval_definitional(s->env, term_of(s, b), s->opt);
    if (equal) *equal = hf::equal(na, nb);
    return HF_OK;
  });
}

int hf_has_declaration(const hf_session* s, const char* name) { return s && name && s->env.contains(name); }

hf_status hf_analyze(const char* query, char** result, char** error) {
  namespace an = hf::analyzer;
  auto fail = [&](hf_status st, const std::string& msg) {
    if (error) *error = dup(msg);
    return st;
  };
  try {
    if (!query) return fail(HF_ERR_ARGUMENT, "null query");
    json q = json::parse(query);
    std::string kind = q.value("query", "");
    auto num = [&](const char* field) -> int {
      if (!q.contains(field)) throw std::invalid_argument(std::string("missing field '") + field + "'");
      return q.at(field).get<int>();
    };
    an::Query aq;
    if (kind == "connectivity" || kind == "merloop") {
      int susp = q.contains("susp") ? num("susp") : 0;
      if (susp < 0) throw std::invalid_argument("susp must be >= 0");
      an::SpacePtr e = an::susp_iter(an::atom("X", num("conn")), static_cast<unsigned>(susp));
      if (kind == "connectivity") aq = an::ConnQuery{e};
      else aq = an::MerloopQuery{e};
    } else if (kind == "pi-iso") {
      aq = an::PiIsoQuery{num("degree"), num("map_conn")};
    } else if (kind == "stab") {
      aq = an::StabQuery{num("conn"), num("degree")};
    } else if (kind == "map-conn") {
      aq = an::MapConnQuery{num("dom"), num("cod")};
    } else if (kind == "exact") {
      aq = an::ExactQuery{num("conn"), num("map_conn")};
    } else {
      return fail(HF_ERR_ARGUMENT, "unknown query '" + kind + "'");
    }
    an::Explanation ex = an::explain(aq);
    json r = {{"query", kind}, {"value", nullptr}, {"holds", nullptr}, {"no_information", ex.no_information}};
    if (ex.value) r["value"] = *ex.value;
    if (ex.holds) r["holds"] = *ex.holds;
    json trace = json::array();
    for (const auto& st : ex.steps)
      trace.push_back({{"rule", st.rule}, {"anchor", st.anchor}, {"instantiation", st.instantiation}});
    r["trace"] = std::move(trace);
    if (result) *result = dup(r.dump());
    return HF_OK;
  } catch (const json::parse_error& e) {
    return fail(HF_ERR_PARSE, std::string("query is not JSON: ") + e.what());
  } catch (const json::exception& e) {
    return fail(HF_ERR_ARGUMENT, std::string("malformed query: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HF_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(HF_ERR_INTERNAL, std::string("internal error: ") + e.what());
  } catch (...) {
    return fail(HF_ERR_INTERNAL, "internal error");
  }
}

}  // extern "C"
