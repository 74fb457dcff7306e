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
// Seeded corruptions of the bundled library.

#include <gtest/gtest.h>

#include <string>

#include "corruptions.hpp"

namespace hf {
namespace {

using testing::Corruption;
using testing::hf;
using testing::kCorruptions;
using testing::ScratchLib;

class MutationTest : public ::testing::TestWithParam<Corruption> {};

TEST_P(MutationTest, LibraryRejectsCorruption) {
  const Corruption& c = GetParam();
  testing::CorruptionOutcome o = testing::run_corruption(c);
  ASSERT_TRUE(o.applied) << "snippet not found in " << c.file;
  EXPECT_EQ(o.exit_code, 1) << o.output;
  EXPECT_TRUE(o.named) << "no FAIL line names " << c.culprit << "\n" << o.output;
}

INSTANTIATE_TEST_SUITE_P(Seeded, MutationTest, ::testing::ValuesIn(kCorruptions),
                         [](const auto& info) { return std::string(info.param.label); });

TEST(Mutation, PristineCopyPasses) {
  ScratchLib tmp("pristine");
  auto r = hf("lib --lib-dir " + tmp.dir());
  EXPECT_EQ(r.exit_code, 0) << r.out;
}

}  // namespace
}  // namespace hf
