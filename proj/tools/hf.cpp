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

// hf: command line driver. Talks to the checker only through the C API.
//
// Exit status: 0 success, 1 type or manifest failure, 2 parse, I/O or usage
// errors (including unexpected internal errors).

#include <unistd.h>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hf/hf.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  uint64_t fuel = 1000000;
  std::string format = "text";
  bool no_color = false;
  bool timings = false;
  std::string manifest;
  std::string lib_dir;
  std::vector<std::string> files;
  std::string kind;
  std::optional<int> conn, degree, susp, dom, cod, map_conn;

  bool structured() const { return format == "structured"; }
};

int exit_code(hf_status s) {
  switch (s) {
    case HF_OK: return kExitOk;
    case HF_ERR_TYPE:
    case HF_ERR_MANIFEST:
    case HF_ERR_FUEL: return kExitFailure;
    default: return kExitUsage;
  }
}

struct Session {
  hf_session* s = hf_session_new();
  ~Session() { hf_session_free(s); }
};

// Takes ownership of a string returned by the C API.
std::string take(char* p) {
  if (!p) return {};
  std::string out(p);
  hf_string_free(p);
  return out;
}

class Printer {
 public:
  explicit Printer(const Options& o) : opt_(o), color_(!o.no_color && isatty(STDOUT_FILENO)) {}

  std::string paint(const std::string& text, const char* code) const {
    return color_ ? std::string("\033[") + code + "m" + text + "\033[0m" : text;
  }
  std::string ok() const { return paint("ok  ", "32"); }
  std::string fail() const { return paint("FAIL", "31"); }

  void record(json j) const {
    if (!opt_.timings) strip_timings(j);
    std::cout << j.dump() << "\n";
  }

 private:
  static void strip_timings(json& j) {
    if (!j.is_object()) return;
    j.erase("millis");
    for (auto& [k, v] : j.items()) strip_timings(v);
  }

  const Options& opt_;
  bool color_;
};

std::string where(const json& err) {
  return err.value("file", std::string()) + ":" + std::to_string(err.value("line", 0)) + ":" +
         std::to_string(err.value("column", 0));
}

void print_declaration(const Printer& p, const Options& o, const json& d) {
  if (o.structured()) {
    json r = d;
    r["record"] = "declaration";
    p.record(r);
    return;
  }
  if (d["status"] == "ok") {
    std::cout << p.ok() << "  " << d["kind"].get<std::string>() << " " << d["name"].get<std::string>();
    if (o.timings) std::printf(" (%.2f ms)", d["millis"].get<double>());
    std::cout << "\n";
    return;
  }
  const json& e = d["error"];
  std::cout << p.fail() << "  " << d["kind"].get<std::string>() << " " << d["name"].get<std::string>() << "\n      "
            << where(e) << ": " << e["kind"].get<std::string>() << ": " << e["message"].get<std::string>() << "\n";
}

void print_fatal(const Printer& p, const Options& o, const json& fatal) {
  if (fatal.is_null()) return;
  if (o.structured()) {
    json r = fatal;
    r["record"] = "error";
    p.record(r);
  }
  std::cerr << "hf: " << where(fatal) << ": " << fatal["kind"].get<std::string>() << ": "
            << fatal["message"].get<std::string>() << "\n";
}

bool configure(Session& ses, const Options& o) {
  if (hf_set_fuel(ses.s, o.fuel) != HF_OK ||
      hf_set_library(ses.s, o.lib_dir.empty() ? nullptr : o.lib_dir.c_str(),
                     o.manifest.empty() ? nullptr : o.manifest.c_str()) != HF_OK) {
    std::cerr << "hf: " << hf_last_error(ses.s) << "\n";
    return false;
  }
  return true;
}

int run_check(const Options& o) {
  Session ses;
  if (!configure(ses, o)) return kExitUsage;
  std::vector<const char*> paths;
  for (const auto& f : o.files) paths.push_back(f.c_str());
  char* raw = nullptr;
  hf_status st = hf_check_files(ses.s, paths.data(), paths.size(), &raw);
  if (!raw) {
    std::cerr << "hf: " << hf_last_error(ses.s) << "\n";
    return exit_code(st);
  }
  json rep = json::parse(take(raw));
  Printer p(o);
  for (const auto& d : rep["declarations"]) print_declaration(p, o, d);
  print_fatal(p, o, rep["fatal"]);
  const json& sum = rep["summary"];
  if (o.structured()) {
    json r = sum;
    r["record"] = "summary";
    r["status"] = hf_status_name(st);
    p.record(r);
  } else {
    std::cout << sum["declarations"].get<size_t>() << " declarations, " << sum["failures"].get<size_t>()
              << " failures";
    if (o.timings) std::printf(" (%.1f ms)", sum["millis"].get<double>());
    std::cout << "\n";
  }
  return exit_code(st);
}

int run_lib(const Options& o) {
  Session ses;
  if (!configure(ses, o)) return kExitUsage;
  char* raw = nullptr;
  hf_status st = hf_load_library(ses.s, &raw);
  if (!raw) {
    std::cerr << "hf: " << hf_last_error(ses.s) << "\n";
    return exit_code(st);
  }
  json rep = json::parse(take(raw));
  Printer p(o);
  // A library that does not load has no manifest results; show what failed.
  for (const auto& d : rep["declarations"])
    if (d["status"] != "ok") print_declaration(p, o, d);
  for (const auto& m : rep["manifest"]) {
    if (o.structured()) {
      json r = m;
      r["record"] = "entry";
      p.record(r);
    } else if (m["status"] == "ok") {
      std::cout << p.ok() << "  " << m["kind"].get<std::string>() << " " << m["name"].get<std::string>() << "  ["
                << m["anchor"].get<std::string>() << "]\n";
    } else {
      std::cout << p.fail() << "  " << m["kind"].get<std::string>() << " " << m["name"].get<std::string>() << ": "
                << m["problem"].get<std::string>() << ": " << m["message"].get<std::string>() << "\n";
    }
  }
  print_fatal(p, o, rep["fatal"]);
  for (const auto& d : rep["declarations"])
    if (d["status"] != "ok")
      std::cerr << "hf: declaration " << d["name"].get<std::string>() << " failed: "
                << d["error"]["message"].get<std::string>() << "\n";
  json sum = rep["summary"];
  if (o.structured()) {
    sum["record"] = "summary";
    sum["status"] = hf_status_name(st);
    p.record(sum);
    return exit_code(st);
  }
  auto count = [&](const char* k) { return sum.value(k, size_t{0}); };
  std::cout << "summary: " << count("entries") << " manifest entries, "
            << count("declaration_failures") + count("manifest_failures") << " failures; " << count("definitions")
            << " definitions, " << count("postulates") << " postulates, " << count("hits") << " hits, "
            << count("axioms") << " generated axioms";
  if (sum.contains("millis")) std::printf("; %.2f s", sum["millis"].get<double>() / 1000.0);
  std::cout << "\n";
  if (sum.contains("categories") && !sum["categories"].empty()) {
    std::cout << "postulates by category:";
    for (auto& [cat, names] : sum["categories"].items()) std::cout << " " << cat << " " << names.size() << ";";
    std::cout << "\n";
  }
  return exit_code(st);
}

// Builds the analyzer query from the flags; kind names the operation.
std::optional<json> make_query(const Options& o, std::string kind) {
  if (kind.empty()) kind = (o.dom || o.cod) ? "map-conn" : "connectivity";
  json q = {{"query", kind}};
  auto put = [&](const char* field, const std::optional<int>& v) {
    if (v) q[field] = *v;
  };
  put("conn", o.conn);
  put("degree", o.degree);
  put("susp", o.susp);
  put("dom", o.dom);
  put("cod", o.cod);
  put("map_conn", o.map_conn);
  return q;
}

int run_query(const Options& o, const std::string& kind, bool show_value, bool show_trace) {
  auto q = make_query(o, kind);
  char *raw = nullptr, *err = nullptr;
  hf_status st = hf_analyze(q->dump().c_str(), &raw, &err);
  if (st != HF_OK) {
    std::cerr << "hf: " << take(err) << "\n";
    return kExitUsage;
  }
  json r = json::parse(take(raw));
  if (o.structured()) {
    json rec = r;
    rec["record"] = "query";
    rec["input"] = *q;
    Printer(o).record(rec);
    return kExitOk;
  }
  std::string value = r["no_information"].get<bool>() ? "no information"
                      : r["holds"].is_boolean()       ? (r["holds"].get<bool>() ? "true" : "false")
                                                      : std::to_string(r["value"].get<int>());
  if (show_value) std::cout << value << "\n";
  if (show_trace) {
    for (const auto& s : r["trace"])
      std::cout << s["rule"].get<std::string>() << " | " << s["anchor"].get<std::string>() << " | "
                << s["instantiation"].get<std::string>() << "\n";
    if (!show_value) std::cout << "result: " << value << "\n";
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  Options o;
  CLI::App app{"hf: a proof checker for homotopy type theory with higher inductive types"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--fuel", o.fuel, "Reduction budget per declaration")->default_val(o.fuel)->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Output format: text, or structured (JSON Lines)")
      ->default_val(o.format)
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--no-color", o.no_color, "Never color the output");
  app.add_flag("--timings", o.timings, "Include timings (always shown in text summaries of lib)");
  app.add_option("--manifest", o.manifest, "Manifest file (default <lib-dir>/MANIFEST)");
  app.add_option("--lib-dir", o.lib_dir, std::string("Library directory (default ") + hf_default_lib_dir() + ")");

  auto* check = app.add_subcommand("check", "Check .hf files on top of the bundled library");
  check->add_option("files", o.files, "Files to check")->required();
  app.add_subcommand("lib", "Check the bundled library and audit its manifest");

  auto query_flags = [&](CLI::App* sub) {
    sub->add_option("--conn", o.conn, "Connectivity of the space (>= -2)");
    sub->add_option("--degree", o.degree, "Degree n or k");
    sub->add_option("--susp", o.susp, "Number of suspensions applied to the space");
    sub->add_option("--dom", o.dom, "Connectivity of the domain of a map");
    sub->add_option("--cod", o.cod, "Connectivity of the codomain of a map");
    sub->add_option("--map-conn", o.map_conn, "Connectivity of a map");
  };
  const char* kinds = "connectivity, merloop, pi-iso, stab, map-conn or exact";
  auto* conn = app.add_subcommand("conn", "Connectivity queries (default: connectivity of Susp^k X)");
  conn->add_option("query", o.kind, std::string("One of ") + kinds)
      ->check(CLI::IsMember({"connectivity", "merloop", "pi-iso", "map-conn", "exact"}));
  query_flags(conn);
  auto* stab = app.add_subcommand("stab", "Stabilization index for --conn c and --degree n, with its derivation");
  query_flags(stab);
  auto* explain = app.add_subcommand("explain", "Derivation trace of an analyzer query");
  explain->add_option("query", o.kind, std::string("One of ") + kinds)
      ->required()
      ->check(CLI::IsMember({"connectivity", "merloop", "pi-iso", "stab", "map-conn", "exact"}));
  query_flags(explain);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (check->parsed()) return run_check(o);
  if (stab->parsed()) {
    if (!o.conn || !o.degree) {
      std::cerr << "hf: stab needs --conn and --degree\n";
      return kExitUsage;
    }
    return run_query(o, "stab", true, true);
  }
  if (conn->parsed()) return run_query(o, o.kind, true, false);
  if (explain->parsed()) return run_query(o, o.kind, false, true);
  return run_lib(o);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "hf: internal error: " << e.what() << "\n";
  } catch (...) {
    std::cerr << "hf: internal error\n";
  }
  return kExitUsage;
}
