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
// Seeded corruptions of the bundled library, shared by the mutation tests
// and the acceptance binary. Each must make `hf lib` exit 1 and name the
// declaration or manifest entry that broke.

#ifndef HF_TESTS_CORRUPTIONS_HPP
#define HF_TESTS_CORRUPTIONS_HPP

#include <ostream>
#include <string>

#include "support.hpp"

namespace hf::testing {

struct Corruption {
  const char* label;
  const char* file;
  const char* from;
  const char* to;
  const char* culprit;  // the name expected on the FAIL line
};

inline constexpr Corruption kCorruptions[] = {
    {"merloop_inverse_dropped", "stable.hf",
     "(merid (fst X) x) (inverse (Susp (fst X)) (N (fst X)) (S (fst X)) (merid (fst X) (snd X)));",
     "(merid (fst X) x) (merid (fst X) (snd X));", "merloop"},
    {"cfglue_endpoints_swapped", "spaces.hf",
     ": Id (Cofib A B f) (cfbase A B f) (cfcod A B f (fst f a)) :=",
     ": Id (Cofib A B f) (cfcod A B f (fst f a)) (cfbase A B f) :=", "cfglue"},
    {"smglue_side_swapped", "spaces.hf", "glue (Smash X Y) (sinl (fst X) (fst Y) x);",
     "glue (Smash X Y) (sinr (fst X) (fst Y) x);", "smglue-l"},
    {"phi_composite_misordered", "stable.hf", "=> phi n X (plus i d) (r x)) d;", "=> r (phi n X i x)) d;", "Phi"},
    {"square_pointedness_deleted", "stable.hf", "(fst f (snd X)) (snd Y) (snd f)));",
     "(fst f (snd X)) (snd Y) (refl (snd Y))));", "ml-forward"},
    {"merloop_pointedness_deleted", "stable.hf",
     "pair (merloop X) (concat-inv-r (Susp (fst X)) (N (fst X)) (S (fst X)) (merid (fst X) (snd X)));",
     "pair (merloop X) (refl (N (fst X)));", "merloopP"},
    {"loop_inverse_dropped", "spaces.hf", "(glue S1 t-left) (inverse S1 base (inr S1 tt) (glue S1 t-right));",
     "(glue S1 t-left) (glue S1 t-right);", "loop"},
    {"susp0_index_equation_reversed", "stable.hf", "(plus n (suc k)) (plus (suc n) k)\n       (plus-comm-suc n k) x);",
     "(plus (suc n) k) (plus n (suc k))\n       (plus-comm-suc n k) x);", "susp0"},
    {"phi_r_wrong_glue", "smash-cofiber.hf", "(smglue-r (CofibP A B f) K (snd p))",
     "(smglue-l (CofibP A B f) K (snd p))", "phi-r"},
    {"cfcod_map_wrong_basepoint", "spaces.hf", "(cfglue A B f (snd A))", "(cfglue A B f (snd B))", "cfcod-map"},
    {"manifest_type_changed", "MANIFEST", "loop | definition | Id S1 base base",
     "loop | definition | Id S1 base (inr S1 tt)", "loop"},
    {"manifest_category_changed", "MANIFEST", "| Freudenthal suspension theorem | freudenthal",
     "| Freudenthal suspension theorem | folklore", "freudenthal"},
};

inline void PrintTo(const Corruption& c, std::ostream* os) { *os << c.label; }

struct CorruptionOutcome {
  bool applied = false;  // the snippet was found and replaced
  int exit_code = -1;
  bool named = false;  // a FAIL line names the culprit
  std::string output;
};

inline CorruptionOutcome run_corruption(const Corruption& c) {
  CorruptionOutcome o;
  ScratchLib tmp(c.label);
  o.applied = tmp.replace(c.file, c.from, c.to);
  if (!o.applied) return o;
  RunResult r = hf("lib --lib-dir " + tmp.dir());
  o.exit_code = r.exit_code;
  o.output = r.out;
  const std::string name = std::string(" ") + c.culprit;
  for (size_t at = r.out.find("FAIL "); at != std::string::npos; at = r.out.find("FAIL ", at + 1)) {
    std::string line = r.out.substr(at, r.out.find('\n', at) - at);
    if (line.find(name + ":") != std::string::npos || line.ends_with(name)) o.named = true;
  }
  return o;
}

}  // namespace hf::testing

#endif  // HF_TESTS_CORRUPTIONS_HPP
