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

#include <gtest/gtest.h>

#include "hf/analyzer.hpp"
#include "stab_oracle.hpp"

namespace hf::analyzer {
namespace {

using testing::scan_stab;

TEST(Connectivity, SuspensionAddsOne) {
  auto s0 = atom("S0", -1);
  EXPECT_EQ(connectivity(s0), -1);
  EXPECT_EQ(connectivity(susp(s0)), 0);
  EXPECT_EQ(connectivity(susp_iter(atom("X", 0), 5)), 5);
  EXPECT_EQ(connectivity(susp(atom("X", -2))), -1);
}

TEST(Connectivity, IteratedAndRepeatedSuspensionAgree) {
  for (int c = -2; c <= 4; ++c)
    for (unsigned k = 0; k <= 6; ++k) {
      SpacePtr rep = atom("X", c);
      for (unsigned j = 0; j < k; ++j) rep = susp(rep);
      EXPECT_EQ(connectivity(susp_iter(atom("X", c), k)), connectivity(rep));
      if (c > -2) EXPECT_EQ(connectivity(rep), c + static_cast<int>(k));
    }
  EXPECT_EQ(susp_iter(atom("X", 1), 0)->tag, SpaceExpr::Tag::Atom);
}

TEST(Connectivity, RejectsBoundsBelowTheScale) { EXPECT_THROW(atom("X", -3), std::invalid_argument); }

TEST(Merloop, TwiceTheConnectivity) {
  EXPECT_EQ(merloop_conn(atom("X", 0)), 0);
  EXPECT_EQ(merloop_conn(atom("X", 3)), 6);
  EXPECT_EQ(merloop_conn(atom("X", -1)), -2);
  EXPECT_THROW(merloop_conn(atom("X", -2)), NoInformation);
}

TEST(PiIso, DegreeAtMostConnectivity) {
  EXPECT_TRUE(is_pi_iso(2, 2));
  EXPECT_FALSE(is_pi_iso(3, 2));
  EXPECT_FALSE(is_pi_iso(0, -2));
}

TEST(Stab, Examples) {
  EXPECT_EQ(stab_index(0, 4), 4);
  EXPECT_EQ(stab_index(-1, 0), 2);
  EXPECT_EQ(stab_index(3, 2), 0);
  EXPECT_THROW(stab_index(-2, 0), std::invalid_argument);
}

TEST(Stab, ClosedFormMatchesScan) {
  int cases = 0;
  for (int c = -1; c <= 5; ++c)
    for (int n = 0; n <= 10; ++n, ++cases) EXPECT_EQ(stab_index(c, n), scan_stab(c, n)) << c << "," << n;
  EXPECT_EQ(cases, 77);
}

TEST(Stab, Monotone) {
  for (int c = -1; c < 5; ++c)
    for (int n = 0; n < 10; ++n) {
      EXPECT_GE(stab_index(c, n), stab_index(c + 1, n));
      EXPECT_LE(stab_index(c, n), stab_index(c, n + 1));
    }
}

// Past the stable index every comparison map is an isomorphism.
TEST(Stab, ConsistentWithPiIso) {
  for (int c = -1; c <= 5; ++c)
    for (int n = 0; n <= 10; ++n) EXPECT_TRUE(testing::stab_consistent(c, n)) << c << "," << n;
}

TEST(MapConn, MinimumMinusOne) {
  EXPECT_EQ(map_conn(3, 3), 2);
  EXPECT_EQ(map_conn(2, 5), 1);
  EXPECT_EQ(map_conn(-1, -1), -2);
  EXPECT_THROW(map_conn(-2, 4), NoInformation);
}

TEST(ExactRange, SumOfBounds) {
  EXPECT_EQ(exact_range(1, 1), 2);
  EXPECT_EQ(exact_range(0, 0), 0);
  EXPECT_THROW(exact_range(-2, 0), NoInformation);
}

// The exactness argument for 0-connected X and Y, n = 2: at stage i the
// suspensions are i-connected, Sigma^i f is (i-1)-connected, and exactness
// in degree n + i needs n + i <= i + (i - 1). That first holds at i = n + 1,
// one stage past the index where the comparison maps become isomorphisms.
TEST(ExactRange, ExactnessPipeline) {
  int c = 0, n = 2;
  EXPECT_EQ(stab_index(c, n), 2);
  auto exact_at = [&](int i) {
    int cx = connectivity(susp_iter(atom("X", c), static_cast<unsigned>(i)));
    int cy = connectivity(susp_iter(atom("Y", c), static_cast<unsigned>(i)));
    return n + i <= exact_range(cx, map_conn(cx, cy));
  };
  EXPECT_EQ(exact_range(2, map_conn(2, 2)), 3);
  EXPECT_FALSE(exact_at(2));
  for (int i = 3; i <= 13; ++i) EXPECT_TRUE(exact_at(i)) << i;
  for (int i = 3; i <= 13; ++i) EXPECT_TRUE(is_pi_iso(n + i, merloop_conn(susp_iter(atom("X", c), i))));
}

TEST(Explain, StabTraceOrder) {
  Explanation e = explain(StabQuery{0, 4});
  ASSERT_EQ(e.value, 4);
  ASSERT_GE(e.steps.size(), 3u);
  EXPECT_EQ(e.steps[0].rule, "suspension-connectivity");
  EXPECT_EQ(e.steps[1].rule, "freudenthal");
  EXPECT_EQ(e.steps[2].rule, "pi-iso");
  EXPECT_NE(format_trace(e.steps).find("2i >= n + i"), std::string::npos);
  for (const auto& s : e.steps) EXPECT_FALSE(s.anchor.empty());
}

TEST(Explain, OneStepPerSuspension) {
  Explanation e = explain(ConnQuery{susp(atom("X", 0))});
  ASSERT_EQ(e.steps.size(), 2u);
  EXPECT_EQ(e.steps[1].rule, "suspension-connectivity");
  EXPECT_EQ(e.value, 1);
}

TEST(Explain, NoInformationEndsTheTrace) {
  Explanation e = explain(MerloopQuery{atom("X", -2)});
  EXPECT_TRUE(e.no_information);
  EXPECT_FALSE(e.value.has_value());
  EXPECT_NE(e.steps.back().instantiation.find("no information"), std::string::npos);
}

TEST(Explain, TraceLinesHaveThreeFields) {
  std::string t = format_trace(explain(ExactQuery{1, 1}).steps);
  EXPECT_EQ(std::count(t.begin(), t.end(), '|'), 2);
  EXPECT_NE(t.find("k <= n + m"), std::string::npos);
}

}  // namespace
}  // namespace hf::analyzer
