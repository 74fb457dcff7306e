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
// The kernel fixture and the golden definitional equalities over it, shared
// by the kernel tests and the acceptance binary.

#ifndef HF_TESTS_GOLDEN_HPP
#define HF_TESTS_GOLDEN_HPP

#include "support.hpp"

namespace hf::testing {

// Generic symbols for every former: a pushout P, a colimit Q, a truncation T
// and an eliminator target D with the data each recursor needs.
inline constexpr const char* kFixture = R"(
postulate A : U0;
postulate B : U0;
postulate C : U0;
postulate D : U0;
postulate f : A -> C;
postulate g : A -> B;
postulate a : A;
postulate b : B;
postulate c : C;
postulate d : D;
hit P := Pushout A C B f g;
postulate l : C -> D;
postulate r : B -> D;
postulate gl : (z : A) -> Id D (l (f z)) (r (g z));
postulate M : P -> U0;
postulate ml : (x : C) -> M (inl P x);
postulate mr : (y : B) -> M (inr P y);
postulate F : Nat -> U0;
postulate m : (i : Nat) -> F i -> F (suc i);
hit Q := Colim F m;
postulate h : (i : Nat) -> F i -> D;
postulate hg : (i : Nat) (x : F i) -> Id D (h i x) (h (suc i) (m i x));
postulate x0 : F zero;
hit T := Trunc0 A;
postulate sD : (x y : D) (p q : Id D x y) -> Id (Id D x y) p q;
postulate k : A -> D;
)";

// The pind glue obligation, stated against the generated transport.
inline constexpr const char* kFixtureMg =
    "postulate mg : (z : A) -> Id (M (inr P (g z))) (J (fun (x y : P) (q : Id P x y) => M x -> M y) "
    "(fun (x : P) (u : M x) => u) (glue P z) (ml (f z))) (mr (g z));";

inline Environment fixture_env() {
  Environment env;
  extend(env, kFixture);
  extend(env, kFixtureMg);
  return env;
}

struct GoldenCase {
  const char* name;
  const char* lhs;
  const char* rhs;  // the expected normal form
};

// Pairs only check against a known Sigma type; an identity function supplies one.
inline constexpr GoldenCase kGoldenCases[] = {
    {"PrecComputesOnInl", "prec P D l r gl (inl P c)", "l c"},
    {"PrecComputesOnInr", "prec P D l r gl (inr P b)", "r b"},
    {"PindComputesOnInl", "pind P M ml mr mg (inl P c)", "ml c"},
    {"PindComputesOnInr", "pind P M ml mr mg (inr P b)", "mr b"},
    {"CrecComputesOnCin", "crec Q D h hg (cin Q zero x0)", "h zero x0"},
    {"CrecComputesOnLaterCin", "crec Q D h hg (cin Q (suc zero) (m zero x0))", "h (suc zero) (m zero x0)"},
    {"T0recComputesOnTr0", "t0rec T D sD k (tr0 T a)", "k a"},
    {"JComputesOnRefl",
     "J (fun (x y : A) (p : Id A x y) => Id D (k x) (k y)) (fun (x : A) => refl (k x)) (refl a)", "refl (k a)"},
    {"JOnReflWithFunctionMotive",
     "J (fun (x y : A) (p : Id A x y) => D -> D) (fun (x : A) (u : D) => u) (refl a) d", "d"},
    {"Beta", "(fun (x : A) => k x) a", "k a"},
    {"BetaDependent", "(fun (X : U0) (x : X) => x) A a", "a"},
    {"FirstProjection", "fst ((fun (p : Sigma (x : A), B) => p) (pair a b))", "a"},
    {"SecondProjection", "snd ((fun (p : Sigma (x : A), B) => p) (pair a b))", "b"},
    {"TcaseOnLeft", "tcase (fun (t : Two) => D) d (k a) t-left", "d"},
    {"NatrecOnSuc", "natrec (fun (n : Nat) => Nat) zero (fun (n r : Nat) => suc (suc r)) (suc (suc zero))",
     "suc (suc (suc (suc zero)))"},
};

}  // namespace hf::testing

#endif  // HF_TESTS_GOLDEN_HPP
