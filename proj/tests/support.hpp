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

// Helpers shared by the test suites: running the hf binary, scratch copies
// of the library and small environments built from source text.

#ifndef HF_TESTS_SUPPORT_HPP
#define HF_TESTS_SUPPORT_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hf/kernel.hpp"
#include "hf/library.hpp"
#include "hf/syntax.hpp"

namespace hf::testing {

inline const std::string kLibDir = HF_TEST_LIB_DIR;
inline const std::vector<std::string> kModules = {"prelude.hf", "spaces.hf", "stable.hf", "smash-cofiber.hf",
                                                  "spectrum.hf"};

struct RunResult {
  int exit_code = -1;
  std::string out;  // stdout followed by stderr
};

// Runs a shell command, capturing both output streams.
inline RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
  return r;
}

inline RunResult hf(const std::string& args) { return run(std::string(HF_BIN) + " --no-color " + args); }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

// A private copy of the library directory, removed on destruction.
class ScratchLib {
 public:
  explicit ScratchLib(const std::string& tag) {
    static std::mt19937_64 rng{std::random_device{}()};
    dir_ = std::filesystem::temp_directory_path() / ("hf-" + tag + "-" + std::to_string(rng()));
    std::filesystem::create_directories(dir_);
    for (const auto& e : std::filesystem::directory_iterator(kLibDir))
      std::filesystem::copy_file(e.path(), dir_ / e.path().filename());
  }
  ~ScratchLib() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  ScratchLib(const ScratchLib&) = delete;
  ScratchLib& operator=(const ScratchLib&) = delete;

  std::string dir() const { return dir_.string(); }
  std::filesystem::path file(const std::string& name) const { return dir_ / name; }

  // Replaces the first occurrence of `from`; returns false when it is absent.
  bool replace(const std::string& name, const std::string& from, const std::string& to) const {
    std::string text = slurp(file(name));
    size_t at = text.find(from);
    if (at == std::string::npos) return false;
    text.replace(at, from.size(), to);
    spit(file(name), text);
    return true;
  }

 private:
  std::filesystem::path dir_;
};

// Checks `source` on top of `env`, throwing on the first failure.
inline void extend(Environment& env, const std::string& source, const std::string& file = "<test>") {
  ModuleResult r = check_module(env, source, file, {}, true);
  if (r.fatal) throw *r.fatal;
  for (const auto& rec : r.records)
    if (!rec.ok) throw std::runtime_error(rec.name + ": " + rec.message);
}

// The bundled library, loaded once per process.
inline const Environment& library_env() {
  static const Environment env = [] {
    Environment e;
    for (const auto& m : kModules) extend(e, read_file(kLibDir + "/" + m), m);
    return e;
  }();
  return env;
}

inline TermPtr term(const Environment& env, const std::string& text) { return read_term(env, text); }

inline bool convertible(const Environment& env, const std::string& a, const std::string& b) {
  TermPtr ta = term(env, a), tb = term(env, b);
  infer(env, {}, ta);
  infer(env, {}, tb);
  return conv(env, {}, ta, tb);
}

// Normal forms compared as syntax trees, not up to conversion.
inline bool same_normal_form(const Environment& env, const std::string& a, const std::string& b) {
  return equal(eval_definitional(env, term(env, a)), eval_definitional(env, term(env, b)));
}

}  // namespace hf::testing

#endif  // HF_TESTS_SUPPORT_HPP
