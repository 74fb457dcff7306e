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

#include "value.hpp"

namespace hf::nbe {
namespace {

thread_local uint64_t tl_budget = 0;
thread_local uint64_t tl_left = 0;
thread_local bool tl_active = false;

void step() {
  if (!tl_active) return;
  if (tl_left == 0) throw FuelExhausted(tl_budget);
  --tl_left;
}

[[noreturn]] void ill_typed(const char* what) {
  throw TypeError(std::string("internal: ") + what + " applied to a value of the wrong shape");
}

Value make(Val v) { return std::make_shared<const Val>(std::move(v)); }

Value extend(const Value& n, Frame f) {
  Val v;
  v.kind = Kind::Var;
  v.level = n->level;
  v.head = n->head;
  v.entry = n->entry;
  v.stuck = n->stuck;
  v.spine = n->spine;
  v.spine.push_back(std::move(f));
  return make(std::move(v));
}

// Applies an elimination frame to a scrutinee, reducing when possible.
Value apply_frame(const Value& v, const Frame& f) {
  const auto& a = f.args;
  switch (f.kind) {
    case FrameKind::App: return app(v, a[0]);
    case FrameKind::Fst: return fst(v);
    case FrameKind::Snd: return snd(v);
    case FrameKind::J: return j_elim(a[0], a[1], v);
    case FrameKind::TCase: return tcase(a[0], a[1], a[2], v);
    case FrameKind::NatRec: return natrec(a[0], a[1], a[2], v);
    case FrameKind::PRec: return prec(a[0], a[1], a[2], a[3], a[4], v);
    case FrameKind::PInd: return pind(a[0], a[1], a[2], a[3], a[4], v);
    case FrameKind::CRec: return crec(a[0], a[1], a[2], a[3], v);
    case FrameKind::T0Rec: return t0rec(a[0], a[1], a[2], a[3], v);
  }
  return v;
}

Value unfold(const Value& v) {
  if (v->unfolded) return v->unfolded;
  step();
  Value r = v->entry->body_value;
  for (const auto& f : v->spine) r = apply_frame(r, f);
  v->unfolded = r;
  return r;
}

// Common tail of every eliminator: the scrutinee did not reduce.
Value stuck_on(const Value& scrut, Frame f, const char* what) {
  if (scrut->neutral()) return extend(scrut, std::move(f));
  if (scrut->kind == Kind::Glue || scrut->kind == Kind::CGlue || scrut->kind == Kind::IsSet) {
    Val v;
    v.kind = Kind::Var;
    v.head = HeadKind::Stuck;
    v.stuck = scrut;
    v.spine.push_back(std::move(f));
    return make(std::move(v));
  }
  ill_typed(what);
}

}  // namespace

FuelScope::FuelScope(uint64_t budget) : owner_(!tl_active) {
  if (owner_) {
    tl_active = true;
    tl_budget = budget;
    tl_left = budget;
  }
}

FuelScope::~FuelScope() {
  if (owner_) tl_active = false;
}

Value Closure::apply(const Value& arg) const {
  if (native) return native(arg);
  std::vector<Value> e = env;
  e.push_back(arg);
  return eval(globals, e, body);
}

Value var(uint32_t level) {
  Val v;
  v.kind = Kind::Var;
  v.level = level;
  v.head = HeadKind::Var;
  return make(std::move(v));
}

Value canon(Kind k, std::vector<Value> args) {
  Val v;
  v.kind = k;
  v.args = std::move(args);
  return make(std::move(v));
}

Value univ(uint32_t level) {
  Val v;
  v.kind = Kind::Univ;
  v.level = level;
  return make(std::move(v));
}

static Value binder(Kind k, std::string hint, Value dom, std::function<Value(const Value&)> f) {
  Val v;
  v.kind = k;
  v.hint = std::move(hint);
  v.args = {std::move(dom)};
  v.clo.native = std::move(f);
  return make(std::move(v));
}

Value pi(std::string hint, Value dom, std::function<Value(const Value&)> cod) {
  return binder(Kind::Pi, std::move(hint), std::move(dom), std::move(cod));
}
Value lam(std::string hint, Value dom, std::function<Value(const Value&)> body) {
  return binder(Kind::Lam, std::move(hint), std::move(dom), std::move(body));
}
Value sigma(std::string hint, Value dom, std::function<Value(const Value&)> cod) {
  return binder(Kind::Sigma, std::move(hint), std::move(dom), std::move(cod));
}
Value arrow(Value dom, Value cod) {
  return pi("_", std::move(dom), [cod](const Value&) { return cod; });
}

Value force(Value v) {
  while (v->unfoldable()) v = unfold(v);
  return v;
}

Value app(const Value& f, const Value& a) {
  if (f->kind == Kind::Lam) {
    step();
    return f->clo.apply(a);
  }
  if (f->neutral()) {
    // Definition heads stay glued so conversion can compare them unexpanded.
    return extend(f, Frame{FrameKind::App, {a}});
  }
  ill_typed("application");
}

Value apps(Value f, const std::vector<Value>& args) {
  for (const auto& a : args) f = app(f, a);
  return f;
}

Value fst(const Value& p0) {
  Value p = force(p0);
  if (p->kind == Kind::Pair) {
    step();
    return p->args[0];
  }
  return stuck_on(p, Frame{FrameKind::Fst, {}}, "fst");
}

Value snd(const Value& p0) {
  Value p = force(p0);
  if (p->kind == Kind::Pair) {
    step();
    return p->args[1];
  }
  return stuck_on(p, Frame{FrameKind::Snd, {}}, "snd");
}

Value j_elim(const Value& motive, const Value& base, const Value& path0) {
  Value p = force(path0);
  if (p->kind == Kind::Refl) {
    step();
    return app(base, p->args[0]);
  }
  return stuck_on(p, Frame{FrameKind::J, {motive, base}}, "J");
}

Value tcase(const Value& motive, const Value& l, const Value& r, const Value& b0) {
  Value b = force(b0);
  if (b->kind == Kind::TLeft) {
    step();
    return l;
  }
  if (b->kind == Kind::TRight) {
    step();
    return r;
  }
  return stuck_on(b, Frame{FrameKind::TCase, {motive, l, r}}, "tcase");
}

Value natrec(const Value& motive, const Value& z, const Value& s, const Value& n0) {
  Value n = force(n0);
  if (n->kind == Kind::Zero) {
    step();
    return z;
  }
  if (n->kind == Kind::Suc) {
    step();
    const Value& k = n->args[0];
    return app(app(s, k), natrec(motive, z, s, k));
  }
  return stuck_on(n, Frame{FrameKind::NatRec, {motive, z, s}}, "natrec");
}

Value prec(const Value& ty, const Value& c, const Value& l, const Value& r, const Value& g, const Value& t0) {
  Value t = force(t0);
  if (t->kind == Kind::Inl) {
    step();
    return app(l, t->args[1]);
  }
  if (t->kind == Kind::Inr) {
    step();
    return app(r, t->args[1]);
  }
  return stuck_on(t, Frame{FrameKind::PRec, {ty, c, l, r, g}}, "prec");
}

Value pind(const Value& ty, const Value& m, const Value& l, const Value& r, const Value& g, const Value& t0) {
  Value t = force(t0);
  if (t->kind == Kind::Inl) {
    step();
    return app(l, t->args[1]);
  }
  if (t->kind == Kind::Inr) {
    step();
    return app(r, t->args[1]);
  }
  return stuck_on(t, Frame{FrameKind::PInd, {ty, m, l, r, g}}, "pind");
}

Value crec(const Value& ty, const Value& c, const Value& f, const Value& g, const Value& t0) {
  Value t = force(t0);
  if (t->kind == Kind::CIn) {
    step();
    return app(app(f, t->args[1]), t->args[2]);
  }
  return stuck_on(t, Frame{FrameKind::CRec, {ty, c, f, g}}, "crec");
}

Value t0rec(const Value& ty, const Value& c, const Value& h, const Value& f, const Value& t0) {
  Value t = force(t0);
  if (t->kind == Kind::Tr0) {
    step();
    return app(f, t->args[1]);
  }
  return stuck_on(t, Frame{FrameKind::T0Rec, {ty, c, h, f}}, "t0rec");
}

Value eval(const Environment& globals, const std::vector<Value>& env, const TermPtr& t) {
  auto ev = [&](size_t i) { return eval(globals, env, t->args[i]); };
  switch (t->kind) {
    case Kind::Var:
      if (t->index >= env.size()) throw TypeError("internal: variable index out of scope");
      return env[env.size() - 1 - t->index];
    case Kind::Univ:
      return univ(t->index);
    case Kind::Pi:
    case Kind::Lam:
    case Kind::Sigma: {
      Val v;
      v.kind = t->kind;
      v.hint = t->name;
      v.args = {ev(0)};
      v.clo = Closure{globals, env, t->args[1], nullptr};
      return make(std::move(v));
    }
    case Kind::App:
      return app(ev(0), ev(1));
    case Kind::Fst:
      return fst(ev(0));
    case Kind::Snd:
      return snd(ev(0));
    case Kind::J:
      return j_elim(ev(0), ev(1), ev(2));
    case Kind::Const: {
      EntryPtr e = globals.find(t->name);
      if (!e) throw Error(ErrorKind::UnboundConstant, {}, "unknown constant '" + t->name + "'");
      Val v;
      v.kind = Kind::Var;
      v.head = HeadKind::Const;
      v.entry = e;
      return make(std::move(v));
    }
    case Kind::TCase:
      return tcase(ev(0), ev(1), ev(2), ev(3));
    case Kind::NatRec:
      return natrec(ev(0), ev(1), ev(2), ev(3));
    case Kind::PRec:
      return prec(ev(0), ev(1), ev(2), ev(3), ev(4), ev(5));
    case Kind::PInd:
      return pind(ev(0), ev(1), ev(2), ev(3), ev(4), ev(5));
    case Kind::CRec:
      return crec(ev(0), ev(1), ev(2), ev(3), ev(4));
    case Kind::T0Rec:
      return t0rec(ev(0), ev(1), ev(2), ev(3), ev(4));
    default: {
      std::vector<Value> args;
      args.reserve(t->args.size());
      for (size_t i = 0; i < t->args.size(); ++i) args.push_back(ev(i));
      return canon(t->kind, std::move(args));
    }
  }
}

namespace {

TermPtr quote_frame(uint32_t level, TermPtr head, const Frame& f, bool unfold) {
  std::vector<TermPtr> a;
  for (const auto& x : f.args) a.push_back(quote(level, x, unfold));
  switch (f.kind) {
    case FrameKind::App: return mk::app(std::move(head), a[0]);
    case FrameKind::Fst: return mk::node(Kind::Fst, {std::move(head)});
    case FrameKind::Snd: return mk::node(Kind::Snd, {std::move(head)});
    case FrameKind::J: return mk::node(Kind::J, {a[0], a[1], std::move(head)});
    case FrameKind::TCase: return mk::node(Kind::TCase, {a[0], a[1], a[2], std::move(head)});
    case FrameKind::NatRec: return mk::node(Kind::NatRec, {a[0], a[1], a[2], std::move(head)});
    case FrameKind::PRec: return mk::node(Kind::PRec, {a[0], a[1], a[2], a[3], a[4], std::move(head)});
    case FrameKind::PInd: return mk::node(Kind::PInd, {a[0], a[1], a[2], a[3], a[4], std::move(head)});
    case FrameKind::CRec: return mk::node(Kind::CRec, {a[0], a[1], a[2], a[3], std::move(head)});
    case FrameKind::T0Rec: return mk::node(Kind::T0Rec, {a[0], a[1], a[2], a[3], std::move(head)});
  }
  return head;
}

}  // namespace

TermPtr quote(uint32_t level, const Value& v0, bool unfold) {
  Value v = unfold ? force(v0) : v0;
  switch (v->kind) {
    case Kind::Univ:
      return mk::univ(v->level);
    case Kind::Pi:
    case Kind::Lam:
    case Kind::Sigma: {
      TermPtr dom = quote(level, v->args[0], unfold);
      TermPtr body = quote(level + 1, v->clo.apply(var(level)), unfold);
      auto t = std::make_shared<Term>(Term{v->kind, 0, v->hint, {dom, body}});
      return t;
    }
    case Kind::Var: {
      TermPtr head;
      if (v->head == HeadKind::Var) head = mk::var(level - 1 - v->level);
      else if (v->head == HeadKind::Const) head = mk::constant(v->entry->name);
      else head = quote(level, v->stuck, unfold);
      for (const auto& f : v->spine) head = quote_frame(level, head, f, unfold);
      return head;
    }
    default: {
      std::vector<TermPtr> args;
      for (const auto& a : v->args) args.push_back(quote(level, a, unfold));
      return mk::node(v->kind, std::move(args));
    }
  }
}

namespace {

bool conv_spine(uint32_t level, const std::vector<Frame>& a, const std::vector<Frame>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].kind != b[i].kind || a[i].args.size() != b[i].args.size()) return false;
    for (size_t k = 0; k < a[i].args.size(); ++k)
      if (!conv(level, a[i].args[k], b[i].args[k])) return false;
  }
  return true;
}

bool same_head(uint32_t level, const Val& a, const Val& b) {
  if (a.head != b.head) return false;
  switch (a.head) {
    case HeadKind::Var: return a.level == b.level;
    case HeadKind::Const: return a.entry->name == b.entry->name;
    case HeadKind::Stuck: return conv(level, a.stuck, b.stuck);
  }
  return false;
}

}  // namespace

bool conv(uint32_t level, const Value& a, const Value& b) {
  if (a == b) return true;
  if (a->unfoldable() || b->unfoldable()) {
    if (a->unfoldable() && b->unfoldable() && a->entry == b->entry && a->spine.size() == b->spine.size() &&
        conv_spine(level, a->spine, b->spine))
      return true;
    // Unfold the later definition first; it may expose the earlier one.
    if (a->unfoldable() && (!b->unfoldable() || a->entry->position >= b->entry->position))
      return conv(level, unfold(a), b);
    return conv(level, a, unfold(b));
  }
  // Unit has a single element: a neutral compared against tt must itself be
  // of type Unit, since conversion is only asked about terms of one type.
  if ((a->kind == Kind::Tt && b->neutral()) || (b->kind == Kind::Tt && a->neutral())) return true;
  if (a->kind == Kind::Lam || b->kind == Kind::Lam) {
    Value x = var(level);
    return conv(level + 1, app(a, x), app(b, x));
  }
  if (a->kind == Kind::Pair || b->kind == Kind::Pair)
    return conv(level, fst(a), fst(b)) && conv(level, snd(a), snd(b));
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Univ:
      return a->level == b->level;
    case Kind::Pi:
    case Kind::Sigma: {
      if (!conv(level, a->args[0], b->args[0])) return false;
      Value x = var(level);
      return conv(level + 1, a->clo.apply(x), b->clo.apply(x));
    }
    case Kind::Var:
      return same_head(level, *a, *b) && conv_spine(level, a->spine, b->spine);
    default:
      if (a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!conv(level, a->args[i], b->args[i])) return false;
      return true;
  }
}

}  // namespace hf::nbe
