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

// Core terms of the object language.
//
// Bound variables are de Bruijn indices (0 = innermost binder), so two
// alpha-equivalent terms are structurally equal. Binder names survive only as
// display hints and are ignored by operator==.

#ifndef HF_TERM_HPP
#define HF_TERM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hf {

enum class Kind : uint8_t {
  Var,
  Univ,
  Pi,
  Lam,
  App,
  Sigma,
  Pair,
  Fst,
  Snd,
  Id,
  Refl,
  J,
  Const,
  Unit,
  Tt,
  Two,
  TLeft,
  TRight,
  TCase,
  Nat,
  Zero,
  Suc,
  NatRec,
  Pushout,
  Inl,
  Inr,
  Glue,
  PRec,
  PInd,
  Colim,
  CIn,
  CGlue,
  CRec,
  Trunc0,
  Tr0,
  IsSet,
  T0Rec,
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  Kind kind;
  uint32_t index = 0;  // Var: de Bruijn index. Univ: level.
  std::string name;    // Const: the constant. Pi/Lam/Sigma: binder hint.
  std::vector<TermPtr> args;

  bool operator==(const Term& other) const;
};

bool equal(const TermPtr& a, const TermPtr& b);

// Surface keyword and fixed arity of a built-in head. Var, Univ, Pi, Lam, App,
// Sigma and Const are not built-in heads and have no entry.
struct HeadInfo {
  Kind kind;
  std::string_view keyword;
  unsigned arity;
};

const std::vector<HeadInfo>& builtin_heads();
std::optional<HeadInfo> head_by_keyword(std::string_view word);
std::optional<HeadInfo> head_by_kind(Kind k);
bool is_reserved_word(std::string_view word);

// Largest de Bruijn index that escapes the term, as "free variable count":
// 0 means closed. Used by the scope validation pass.
uint32_t free_extent(const TermPtr& t);
bool mentions_var(const TermPtr& t, uint32_t index);
// Shift free variables >= cutoff by delta.
TermPtr shift(const TermPtr& t, int delta, uint32_t cutoff = 0);
size_t term_size(const TermPtr& t);

namespace mk {
TermPtr var(uint32_t index);
TermPtr univ(uint32_t level);
TermPtr pi(std::string hint, TermPtr dom, TermPtr cod);
TermPtr lam(std::string hint, TermPtr dom, TermPtr body);
TermPtr sigma(std::string hint, TermPtr dom, TermPtr cod);
TermPtr app(TermPtr f, TermPtr a);
TermPtr apps(TermPtr f, const std::vector<TermPtr>& args);
TermPtr constant(std::string name);
TermPtr node(Kind k, std::vector<TermPtr> args);
TermPtr atom(Kind k);
}  // namespace mk

}  // namespace hf

#endif  // HF_TERM_HPP
