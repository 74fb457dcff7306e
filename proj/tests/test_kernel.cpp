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

#include "golden.hpp"

namespace hf {
namespace {

using testing::convertible;
using testing::extend;
using testing::same_normal_form;
using testing::term;

class KernelTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { env_ = new Environment(testing::fixture_env()); }
  static void TearDownTestSuite() { delete env_; }
  static Environment* env_;
};

Environment* KernelTest::env_ = nullptr;

class GoldenTest : public ::testing::TestWithParam<testing::GoldenCase> {};

TEST_P(GoldenTest, ComputesToNormalForm) {
  static const Environment env = testing::fixture_env();
  const auto& c = GetParam();
  EXPECT_TRUE(convertible(env, c.lhs, c.rhs)) << c.lhs << "  vs  " << c.rhs;
  EXPECT_TRUE(same_normal_form(env, c.lhs, c.rhs)) << c.lhs << "  vs  " << c.rhs;
}

INSTANTIATE_TEST_SUITE_P(Kernel, GoldenTest, ::testing::ValuesIn(testing::kGoldenCases),
                         [](const auto& info) { return std::string(info.param.name); });

TEST_F(KernelTest, EtaForFunctions) { EXPECT_TRUE(convertible(*env_, "fun (x : A) => k x", "k")); }

TEST_F(KernelTest, EtaForPairs) {
  Environment e = *env_;
  extend(e, "postulate s : Sigma (x : A), B;");
  TermPtr eta = term(e, "pair (fst s) (snd s)");
  check(e, {}, eta, term(e, "Sigma (x : A), B"));
  EXPECT_TRUE(conv(e, {}, eta, term(e, "s")));
}

TEST_F(KernelTest, PrecOnGlueIsStuck) {
  std::string ap = "J (fun (x y : P) (q : Id P x y) => Id D (prec P D l r gl x) (prec P D l r gl y)) "
                   "(fun (x : P) => refl (prec P D l r gl x)) (glue P a)";
  EXPECT_FALSE(convertible(*env_, ap, "gl a"));
  // The generated axiom states exactly that equation.
  TermPtr ty = infer(*env_, {}, term(*env_, "P.prec-glue D l r gl a"));
  EXPECT_TRUE(conv(*env_, {}, ty, term(*env_, "Id (Id D (l (f a)) (r (g a))) (" + ap + ") (gl a)")));
}

TEST_F(KernelTest, DistinctConstructorsAreNotConvertible) {
  EXPECT_FALSE(convertible(*env_, "inl P c", "inr P b"));
  EXPECT_FALSE(convertible(*env_, "t-left", "t-right"));
  EXPECT_FALSE(convertible(*env_, "zero", "suc zero"));
}

TEST_F(KernelTest, UnitEtaAgainstTt) {
  Environment e = *env_;
  extend(e, "postulate u : Unit;");
  EXPECT_TRUE(convertible(e, "u", "tt"));
}

TEST_F(KernelTest, GeneratedAxiomsAreNamedByHitAndConstructor) {
  EXPECT_TRUE(env_->contains("P.prec-glue"));
  EXPECT_TRUE(env_->contains("P.pind-glue"));
  EXPECT_TRUE(env_->contains("Q.crec-cglue"));
  EXPECT_EQ(env_->find("P.prec-glue")->kind, EntryKind::GeneratedAxiom);
  EXPECT_EQ(env_->find("P.prec-glue")->provenance, "P/glue");
  EXPECT_EQ(generated_names("P", Kind::Pushout), (std::vector<std::string>{"P.prec-glue", "P.pind-glue"}));
}

TEST_F(KernelTest, UniverseHierarchy) {
  EXPECT_TRUE(conv(*env_, {}, infer(*env_, {}, term(*env_, "U0")), term(*env_, "U1")));
  EXPECT_TRUE(conv(*env_, {}, infer(*env_, {}, term(*env_, "A -> U0")), term(*env_, "U1")));
  EXPECT_THROW(check(*env_, {}, term(*env_, "U1"), term(*env_, "U1")), TypeError);
}

TEST_F(KernelTest, RejectsIllTypedTerms) {
  EXPECT_THROW(infer(*env_, {}, term(*env_, "k b")), TypeError);
  EXPECT_THROW(infer(*env_, {}, term(*env_, "Id A a b")), TypeError);
  EXPECT_THROW(infer(*env_, {}, term(*env_, "fst a")), TypeError);
  EXPECT_THROW(infer(*env_, {}, term(*env_, "prec P D r l gl (inl P c)")), TypeError);
  EXPECT_THROW(infer(*env_, {}, term(*env_, "t0rec T D (fun (x : D) => x) k (tr0 T a)")), TypeError);
}

TEST_F(KernelTest, TypeErrorsCarryTheDeclaration) {
  Environment e = *env_;
  ModuleResult r = check_module(e, "def bad : A := b;", "bad.hf", {}, true);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_FALSE(r.records[0].ok);
  EXPECT_EQ(r.records[0].name, "bad");
  EXPECT_EQ(r.records[0].error_kind, "TypeError");
  EXPECT_EQ(r.records[0].span.line, 1u);
}

TEST_F(KernelTest, HitMustBeAFormer) {
  Environment e = *env_;
  ModuleResult r = check_module(e, "hit W := A;", "w.hf", {}, true);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_FALSE(r.records[0].ok);
}

TEST_F(KernelTest, DuplicateDeclarationsAreRejected) {
  Environment e = *env_;
  ModuleResult r = check_module(e, "postulate a : A;", "dup.hf", {}, true);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_FALSE(r.records[0].ok);
}

TEST_F(KernelTest, FuelBoundsNormalization) {
  Environment e = *env_;
  extend(e, "def dbl (n : Nat) : Nat := natrec (fun (k : Nat) => Nat) zero (fun (k r : Nat) => suc (suc r)) n;");
  std::string big = "zero";
  for (int i = 0; i < 200; ++i) big = "suc (" + big + ")";
  TermPtr t = term(e, "dbl (dbl (dbl (" + big + ")))");
  EXPECT_THROW(normalize(e, {}, t, KernelOptions{50}), FuelExhausted);
  EXPECT_NO_THROW(normalize(e, {}, t));
}

TEST(Environment, PrefixViewsSurviveLaterPushes) {
  Environment e;
  extend(e, "postulate X : U0; postulate y : X;");
  Environment view = e.prefix(1);
  EXPECT_TRUE(view.contains("X"));
  EXPECT_FALSE(view.contains("y"));
  extend(view, "postulate z : X;");
  EXPECT_TRUE(e.contains("y"));
  EXPECT_FALSE(e.contains("z"));
  EXPECT_TRUE(view.contains("z"));
}

}  // namespace
}  // namespace hf
