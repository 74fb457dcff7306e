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
// The bundled library: manifest audit, point computations of the
// smash/cofiber maps and glue behavior of the library's own HITs.

#include <gtest/gtest.h>

#include <set>
#include <string>

#include "hf/analyzer.hpp"
#include "library_cases.hpp"

namespace hf {
namespace {

using testing::convertible;
using testing::kLibDir;
using testing::same_normal_form;

std::string nat(int n) {
  std::string s = "zero";
  for (int i = 0; i < n; ++i) s = "suc (" + s + ")";
  return s;
}

TEST(Library, LoadsAndMatchesManifest) {
  Environment env;
  Manifest m = read_manifest(kLibDir + "/MANIFEST");
  LibraryReport rep = load_library(env, kLibDir, m);
  ASSERT_FALSE(rep.fatal) << rep.fatal->what();
  EXPECT_TRUE(rep.ok());
  EXPECT_GE(m.entries.size(), 50u);
  EXPECT_EQ(m.modules.size(), 5u);
  EXPECT_EQ(rep.manifest.size(), m.entries.size());
  for (const auto& r : rep.records) EXPECT_TRUE(r.ok) << r.name << ": " << r.message;
  for (const auto& r : rep.manifest) EXPECT_TRUE(r.ok) << r.name << ": " << r.message;
}

TEST(Library, PostulatesAreExactlyTheDeferrals) {
  Environment env;
  Manifest m = read_manifest(kLibDir + "/MANIFEST");
  LibraryReport rep = load_library(env, kLibDir, m);
  std::set<std::string> used;
  for (const auto& e : m.entries)
    if (e.kind == "postulate") used.insert(e.category);
  std::set<std::string> all(postulate_categories().begin(), postulate_categories().end());
  EXPECT_EQ(used, all);
  EXPECT_EQ(all.size(), 8u);
  EXPECT_EQ(rep.postulate_names().size(), rep.postulates);
}

TEST(Library, MissingManifestEntryIsReported) {
  Environment env;
  Manifest m = read_manifest(kLibDir + "/MANIFEST");
  ManifestEntry ghost{"no-such-lemma", "definition", "Nat", "ghost", "", 1};
  m.entries.push_back(ghost);
  LibraryReport rep = load_library(env, kLibDir, m);
  ASSERT_FALSE(rep.ok());
  const auto& last = rep.manifest.back();
  EXPECT_EQ(last.name, "no-such-lemma");
  EXPECT_EQ(last.problem, "missing");
}

TEST(Library, UnlistedPostulateIsReported) {
  Environment env;
  Manifest m = read_manifest(kLibDir + "/MANIFEST");
  std::erase_if(m.entries, [](const ManifestEntry& e) { return e.name == "freudenthal"; });
  LibraryReport rep = load_library(env, kLibDir, m);
  ASSERT_FALSE(rep.ok());
  bool seen = false;
  for (const auto& r : rep.manifest)
    if (r.name == "freudenthal") seen = !r.ok && r.problem == "unlisted";
  EXPECT_TRUE(seen);
}

class SmcfPoints : public ::testing::TestWithParam<testing::PointCase> {};

TEST_P(SmcfPoints, NormalFormMatches) {
  const auto& c = GetParam();
  EXPECT_TRUE(same_normal_form(testing::generic_env(), c.lhs, c.rhs)) << c.lhs << "  vs  " << c.rhs;
}

INSTANTIATE_TEST_SUITE_P(Library, SmcfPoints, ::testing::ValuesIn(testing::kSmcfCases),
                         [](const auto& info) { return std::string(info.param.name); });

// Recursion on a path constructor is only a propositional equation: the ap
// of a recursor on glue is stuck, and the generated axiom supplies the path.
class GlueCases : public ::testing::TestWithParam<testing::GlueCase> {};

TEST_P(GlueCases, GlueIsPropositional) {
  testing::GlueVerdict v = testing::judge_glue(testing::generic_env(), GetParam());
  EXPECT_FALSE(v.definitional);
  EXPECT_TRUE(v.axiom_present);
  EXPECT_TRUE(v.axiom_typed);
}

INSTANTIATE_TEST_SUITE_P(Library, GlueCases, ::testing::ValuesIn(testing::glue_cases()),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(Library, SuspensionIterationUnfolds) {
  const Environment& env = testing::generic_env();
  EXPECT_TRUE(convertible(env, "SuspIter (suc (suc zero)) X0", "Susp (Susp X0)"));
  EXPECT_TRUE(same_normal_form(env, "fst (SuspIterP (suc zero) A)", "Susp (fst A)"));
}

TEST(Library, StabIndexMatchesAnalyzer) {
  const Environment& env = testing::generic_env();
  // The library indexes connectivity from -1, so cc = c + 1.
  for (int c = -1; c <= 5; ++c)
    for (int n = 0; n <= 10; ++n)
      EXPECT_TRUE(same_normal_form(env, "stab-index (" + nat(c + 1) + ") (" + nat(n) + ")",
                                   nat(analyzer::stab_index(c, n))))
          << "c=" << c << " n=" << n;
}

}  // namespace
}  // namespace hf
