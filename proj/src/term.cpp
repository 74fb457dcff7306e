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

#include "hf/term.hpp"

#include <algorithm>

namespace hf {

bool Term::operator==(const Term& other) const {
  if (kind != other.kind || index != other.index) return false;
  if (kind == Kind::Const && name != other.name) return false;
  if (args.size() != other.args.size()) return false;
  for (size_t i = 0; i < args.size(); ++i)
    if (!equal(args[i], other.args[i])) return false;
  return true;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

const std::vector<HeadInfo>& builtin_heads() {
  static const std::vector<HeadInfo> heads = {
      {Kind::Pair, "pair", 2},      {Kind::Fst, "fst", 1},         {Kind::Snd, "snd", 1},
      {Kind::Id, "Id", 3},          {Kind::Refl, "refl", 1},       {Kind::J, "J", 3},
      {Kind::Unit, "Unit", 0},      {Kind::Tt, "tt", 0},           {Kind::Two, "Two", 0},
      {Kind::TLeft, "t-left", 0},   {Kind::TRight, "t-right", 0},  {Kind::TCase, "tcase", 4},
      {Kind::Nat, "Nat", 0},        {Kind::Zero, "zero", 0},       {Kind::Suc, "suc", 1},
      {Kind::NatRec, "natrec", 4},  {Kind::Pushout, "Pushout", 5}, {Kind::Inl, "inl", 2},
      {Kind::Inr, "inr", 2},        {Kind::Glue, "glue", 2},       {Kind::PRec, "prec", 6},
      {Kind::PInd, "pind", 6},      {Kind::Colim, "Colim", 2},     {Kind::CIn, "cin", 3},
      {Kind::CGlue, "cglue", 3},    {Kind::CRec, "crec", 5},       {Kind::Trunc0, "Trunc0", 1},
      {Kind::Tr0, "tr0", 2},        {Kind::IsSet, "isset", 5},     {Kind::T0Rec, "t0rec", 5},
  };
  return heads;
}

std::optional<HeadInfo> head_by_keyword(std::string_view word) {
  for (const auto& h : builtin_heads())
    if (h.keyword == word) return h;
  return std::nullopt;
}

std::optional<HeadInfo> head_by_kind(Kind k) {
  for (const auto& h : builtin_heads())
    if (h.kind == k) return h;
  return std::nullopt;
}

bool is_reserved_word(std::string_view word) {
  static const std::string_view keywords[] = {"def", "postulate", "hit", "fun", "Sigma"};
  if (std::find(std::begin(keywords), std::end(keywords), word) != std::end(keywords)) return true;
  if (head_by_keyword(word)) return true;
  if (word.size() >= 2 && word[0] == 'U' &&
      std::all_of(word.begin() + 1, word.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return true;
  return false;
}

static bool binds_at(Kind k, size_t arg) {
  return (k == Kind::Pi || k == Kind::Lam || k == Kind::Sigma) && arg == 1;
}

uint32_t free_extent(const TermPtr& t) {
  if (t->kind == Kind::Var) return t->index + 1;
  uint32_t out = 0;
  for (size_t i = 0; i < t->args.size(); ++i) {
    uint32_t e = free_extent(t->args[i]);
    if (binds_at(t->kind, i)) e = e > 0 ? e - 1 : 0;
    out = std::max(out, e);
  }
  return out;
}

bool mentions_var(const TermPtr& t, uint32_t index) {
  if (t->kind == Kind::Var) return t->index == index;
  for (size_t i = 0; i < t->args.size(); ++i)
    if (mentions_var(t->args[i], binds_at(t->kind, i) ? index + 1 : index)) return true;
  return false;
}

TermPtr shift(const TermPtr& t, int delta, uint32_t cutoff) {
  if (t->kind == Kind::Var) {
    if (t->index < cutoff) return t;
    return mk::var(static_cast<uint32_t>(static_cast<int64_t>(t->index) + delta));
  }
  if (t->args.empty()) return t;
  auto out = std::make_shared<Term>(*t);
  for (size_t i = 0; i < out->args.size(); ++i)
    out->args[i] = shift(t->args[i], delta, binds_at(t->kind, i) ? cutoff + 1 : cutoff);
  return out;
}

size_t term_size(const TermPtr& t) {
  size_t n = 1;
  for (const auto& a : t->args) n += term_size(a);
  return n;
}

namespace mk {

TermPtr var(uint32_t index) { return std::make_shared<Term>(Term{Kind::Var, index, {}, {}}); }
TermPtr univ(uint32_t level) { return std::make_shared<Term>(Term{Kind::Univ, level, {}, {}}); }
TermPtr pi(std::string hint, TermPtr dom, TermPtr cod) {
  return std::make_shared<Term>(Term{Kind::Pi, 0, std::move(hint), {std::move(dom), std::move(cod)}});
}
TermPtr lam(std::string hint, TermPtr dom, TermPtr body) {
  return std::make_shared<Term>(Term{Kind::Lam, 0, std::move(hint), {std::move(dom), std::move(body)}});
}
TermPtr sigma(std::string hint, TermPtr dom, TermPtr cod) {
  return std::make_shared<Term>(Term{Kind::Sigma, 0, std::move(hint), {std::move(dom), std::move(cod)}});
}
TermPtr app(TermPtr f, TermPtr a) {
  return std::make_shared<Term>(Term{Kind::App, 0, {}, {std::move(f), std::move(a)}});
}
TermPtr apps(TermPtr f, const std::vector<TermPtr>& args) {
  for (const auto& a : args) f = app(std::move(f), a);
  return f;
}
TermPtr constant(std::string name) {
  return std::make_shared<Term>(Term{Kind::Const, 0, std::move(name), {}});
}
TermPtr node(Kind k, std::vector<TermPtr> args) {
  return std::make_shared<Term>(Term{k, 0, {}, std::move(args)});
}
TermPtr atom(Kind k) { return std::make_shared<Term>(Term{k, 0, {}, {}}); }

}  // namespace mk

}  // namespace hf
