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
// A brute-force oracle for the stabilization index, shared by the analyzer
// tests and the acceptance binary.

#ifndef HF_TESTS_STAB_ORACLE_HPP
#define HF_TESTS_STAB_ORACLE_HPP

#include "hf/analyzer.hpp"

namespace hf::testing {

// Least i in [0, 50] with n + i <= 2 (c + i), by linear scan; 51 if none.
inline int scan_stab(int c, int n) {
  for (int i = 0; i <= 50; ++i)
    if (n + i <= 2 * (c + i)) return i;
  return 51;
}

// From the stable index on, for ten more stages, the comparison map on
// pi_(n+i) (Sigma^i X) is an isomorphism, and one stage earlier it is not.
inline bool stab_consistent(int c, int n) {
  namespace an = hf::analyzer;
  auto iso_at = [&](int i) {
    return an::is_pi_iso(n + i, an::merloop_conn(an::susp_iter(an::atom("X", c), static_cast<unsigned>(i))));
  };
  int i0 = an::stab_index(c, n);
  for (int i = i0; i <= i0 + 10; ++i)
    if (!iso_at(i)) return false;
  return i0 == 0 || !iso_at(i0 - 1);
}

}  // namespace hf::testing

#endif  // HF_TESTS_STAB_ORACLE_HPP
