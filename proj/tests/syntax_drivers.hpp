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
// Print/parse round trips over generated terms and a random-input parser
// fuzzer, shared by the syntax tests and the acceptance binary.

#ifndef HF_TESTS_SYNTAX_DRIVERS_HPP
#define HF_TESTS_SYNTAX_DRIVERS_HPP

#include <algorithm>
#include <chrono>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hf/syntax.hpp"
#include "support.hpp"
#include "term_gen.hpp"

namespace hf::testing {

inline bool is_test_constant(const std::string& n) {
  const auto& cs = TermGen::constants();
  return std::find(cs.begin(), cs.end(), n) != cs.end();
}

inline TermPtr read_test_term(const std::string& text, std::vector<std::string> scope = {}) {
  return resolve_term(parse_term(text), scope, is_test_constant);
}

// Prints and reparses `count` generated terms. Returns the first term whose
// reparse differs, with its reprint, or nothing when all survive.
inline std::optional<std::string> round_trip(uint64_t seed, int count, int depth = 6) {
  TermGen gen(seed);
  for (int i = 0; i < count; ++i) {
    TermPtr t = gen(depth);
    std::string s = print(t);
    TermPtr back = read_test_term(s);
    if (!equal(back, t)) return s + "\nreprinted: " + print(back);
  }
  return std::nullopt;
}

// Feeds the parser and resolver random bytes, random tokens and mangled
// library text for `seconds`. Diagnostics are expected; anything else
// escapes. Returns the number of inputs tried.
inline size_t fuzz_parser(double seconds, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string corpus = slurp(kLibDir + "/stable.hf");
  const std::string alphabet = "()=>:-;,.' \n\tabcxyzU0129fun Sigma def hit postulate Id refl";
  auto stop = std::chrono::steady_clock::now() + std::chrono::duration<double>(seconds);
  size_t runs = 0;
  while (std::chrono::steady_clock::now() < stop || runs < 100) {
    std::string input;
    switch (rng() % 3) {
      case 0:
        input.resize(rng() % 200);
        for (auto& ch : input) ch = static_cast<char>(rng() % 256);
        break;
      case 1:
        input.resize(rng() % 200);
        for (auto& ch : input) ch = alphabet[rng() % alphabet.size()];
        break;
      default: {
        input = corpus.substr(rng() % corpus.size(), rng() % 400);
        for (int k = 0; k < 3; ++k)
          if (!input.empty()) input[rng() % input.size()] = alphabet[rng() % alphabet.size()];
      }
    }
    try {
      SourceModule m = parse(input, "fuzz");
      resolve(m, [](const std::string&) { return false; });
    } catch (const Error&) {
    }
    ++runs;
  }
  return runs;
}

}  // namespace hf::testing

#endif  // HF_TESTS_SYNTAX_DRIVERS_HPP
