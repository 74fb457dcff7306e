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

// Semantic values for normalization by evaluation. Internal to the kernel.

#ifndef HF_SRC_VALUE_HPP
#define HF_SRC_VALUE_HPP

#include <functional>
#include <string>
#include <vector>

#include "hf/kernel.hpp"

namespace hf::nbe {

struct Closure {
  Environment globals;
  std::vector<Value> env;
  TermPtr body;
  std::function<Value(const Value&)> native;

  Value apply(const Value& arg) const;
};

enum class FrameKind { App, Fst, Snd, J, TCase, NatRec, PRec, PInd, CRec, T0Rec };

// An eliminator waiting on its scrutinee; `args` are the other operands in
// surface order.
struct Frame {
  FrameKind kind;
  std::vector<Value> args;
};

enum class HeadKind { Var, Const, Stuck };

}  // namespace hf::nbe

namespace hf {

// kind == Kind::Var marks a neutral value: a head followed by a spine of
// eliminations. Every other kind mirrors the canonical term former.
struct Val {
  Kind kind = Kind::Var;
  uint32_t level = 0;  // Univ: level. Var head: de Bruijn level.
  std::string hint;
  std::vector<Value> args;
  nbe::Closure clo;  // Pi, Lam, Sigma

  nbe::HeadKind head = nbe::HeadKind::Var;
  EntryPtr entry;  // Const head
  Value stuck;     // Stuck head: a glue, cglue or isset value
  std::vector<nbe::Frame> spine;
  mutable Value unfolded;  // cache for heads that are definitions

  bool neutral() const { return kind == Kind::Var; }
  bool unfoldable() const {
    return kind == Kind::Var && head == nbe::HeadKind::Const && entry->body_value != nullptr;
  }
};

}  // namespace hf

namespace hf::nbe {

// Installs a reduction budget for the current thread unless one is active.
class FuelScope {
 public:
  explicit FuelScope(uint64_t budget);
  ~FuelScope();
  FuelScope(const FuelScope&) = delete;
  FuelScope& operator=(const FuelScope&) = delete;

 private:
  bool owner_;
};

Value eval(const Environment& globals, const std::vector<Value>& env, const TermPtr& t);

Value var(uint32_t level);
Value canon(Kind k, std::vector<Value> args = {});
Value univ(uint32_t level);
Value pi(std::string hint, Value dom, std::function<Value(const Value&)> cod);
Value lam(std::string hint, Value dom, std::function<Value(const Value&)> body);
Value sigma(std::string hint, Value dom, std::function<Value(const Value&)> cod);
Value arrow(Value dom, Value cod);

Value app(const Value& f, const Value& a);
Value apps(Value f, const std::vector<Value>& args);
Value fst(const Value& p);
Value snd(const Value& p);
Value j_elim(const Value& motive, const Value& base, const Value& path);
Value tcase(const Value& motive, const Value& l, const Value& r, const Value& b);
Value natrec(const Value& motive, const Value& z, const Value& s, const Value& n);
Value prec(const Value& ty, const Value& c, const Value& l, const Value& r, const Value& g, const Value& t);
Value pind(const Value& ty, const Value& m, const Value& l, const Value& r, const Value& g, const Value& t);
Value crec(const Value& ty, const Value& c, const Value& f, const Value& g, const Value& t);
Value t0rec(const Value& ty, const Value& c, const Value& h, const Value& f, const Value& t);

// Unfolds definition heads until the value is not a glued definition.
Value force(Value v);

// Reads a value back at context depth `level`. With unfold_definitions the
// result is the full normal form; without it, definition heads are kept.
TermPtr quote(uint32_t level, const Value& v, bool unfold_definitions);

bool conv(uint32_t level, const Value& a, const Value& b);

}  // namespace hf::nbe

#endif  // HF_SRC_VALUE_HPP
