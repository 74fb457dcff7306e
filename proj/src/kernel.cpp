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

#include <algorithm>

#include "hf/kernel.hpp"
#include "hf/syntax.hpp"
#include "value.hpp"

namespace hf {

namespace v = nbe;

const char* entry_kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::Definition: return "definition";
    case EntryKind::Postulate: return "postulate";
    case EntryKind::Hit: return "hit";
    case EntryKind::GeneratedAxiom: return "axiom";
  }
  return "?";
}

Environment::Environment() : table_(std::make_shared<EntryTable>()) {}

EntryPtr Environment::find(const std::string& name) const {
  auto it = table_->index.find(name);
  if (it == table_->index.end() || it->second >= size_) return nullptr;
  return table_->entries[it->second];
}

Environment Environment::prefix(size_t n) const {
  Environment out = *this;
  out.size_ = std::min(n, size_);
  return out;
}

EntryPtr Environment::push(Entry e) {
  if (contains(e.name)) throw Error(ErrorKind::DuplicateName, e.span, "'" + e.name + "' is already declared");
  if (table_->entries.size() != size_) {
    // Branching off a shorter view: copy the prefix we own.
    auto fresh = std::make_shared<EntryTable>();
    fresh->entries.assign(table_->entries.begin(), table_->entries.begin() + static_cast<long>(size_));
    for (size_t i = 0; i < size_; ++i) fresh->index[fresh->entries[i]->name] = i;
    table_ = std::move(fresh);
  }
  e.position = size_;
  auto ptr = std::make_shared<const Entry>(std::move(e));
  table_->entries.push_back(ptr);
  table_->index[ptr->name] = size_;
  ++size_;
  return ptr;
}

namespace {

constexpr size_t kShowLimit = 600;

struct Cx {
  std::vector<Value> env;
  std::vector<Value> types;
  std::vector<std::string> names;

  uint32_t level() const { return static_cast<uint32_t>(env.size()); }

  Cx bind(const std::string& name, Value type) const {
    Cx out = *this;
    out.env.push_back(v::var(level()));
    out.types.push_back(std::move(type));
    out.names.push_back(name);
    return out;
  }
};

// Small vocabulary of values used to state eliminator premises.
Value id_ty(Value a, Value x, Value y) { return v::canon(Kind::Id, {std::move(a), std::move(x), std::move(y)}); }

Value transport_v(const Value& ty, const Value& fam, const Value& p, const Value& u) {
  Value motive = v::lam("x", ty, [=](const Value& x) {
    return v::lam("y", ty, [=](const Value& y) {
      return v::lam("q", id_ty(ty, x, y), [=](const Value&) { return v::arrow(v::app(fam, x), v::app(fam, y)); });
    });
  });
  Value base = v::lam("x", ty, [=](const Value& x) {
    return v::lam("u", v::app(fam, x), [](const Value& u) { return u; });
  });
  return v::app(v::j_elim(motive, base, p), u);
}

Value ap_v(const Value& ty, const Value& cod, const Value& f, const Value& p) {
  Value motive = v::lam("x", ty, [=](const Value& x) {
    return v::lam("y", ty, [=](const Value& y) {
      return v::lam("q", id_ty(ty, x, y), [=](const Value&) { return id_ty(cod, v::app(f, x), v::app(f, y)); });
    });
  });
  Value base = v::lam("x", ty, [=](const Value& x) { return v::canon(Kind::Refl, {v::app(f, x)}); });
  return v::j_elim(motive, base, p);
}

Value apd_v(const Value& ty, const Value& fam, const Value& f, const Value& p) {
  Value motive = v::lam("x", ty, [=](const Value& x) {
    return v::lam("y", ty, [=](const Value& y) {
      return v::lam("q", id_ty(ty, x, y), [=](const Value& q) {
        return id_ty(v::app(fam, y), transport_v(ty, fam, q, v::app(f, x)), v::app(f, y));
      });
    });
  });
  Value base = v::lam("x", ty, [=](const Value& x) { return v::canon(Kind::Refl, {v::app(f, x)}); });
  return v::j_elim(motive, base, p);
}

Value is_set_v(const Value& c) {
  return v::pi("y", c, [=](const Value& y) {
    return v::pi("z", c, [=](const Value& z) {
      Value path = id_ty(c, y, z);
      return v::pi("p", path, [=](const Value& p) {
        return v::pi("q", path, [=](const Value& q) { return id_ty(path, p, q); });
      });
    });
  });
}

class Checker {
 public:
  explicit Checker(const Environment& env) : genv_(env) {}

  Value eval(const Cx& cx, const TermPtr& t) const { return v::eval(genv_, cx.env, t); }

  std::string show(const Cx& cx, const Value& val) const {
    std::string s = print(v::quote(cx.level(), val, false), cx.names);
    if (s.size() > kShowLimit) s = s.substr(0, kShowLimit) + " ...";
    return s;
  }

  std::string show(const Cx& cx, const TermPtr& t) const {
    std::string s = print(t, cx.names);
    if (s.size() > kShowLimit) s = s.substr(0, kShowLimit) + " ...";
    return s;
  }

  void expect_conv(const Cx& cx, const Value& expected, const Value& found, const TermPtr& where) const {
    if (!v::conv(cx.level(), expected, found))
      throw TypeError("type mismatch in `" + show(cx, where) + "`\n  expected: " + show(cx, expected) +
                      "\n  found:    " + show(cx, found));
  }

  uint32_t infer_univ(const Cx& cx, const TermPtr& t) {
    Value ty = v::force(infer(cx, t));
    if (ty->kind != Kind::Univ)
      throw TypeError("expected a type, but `" + show(cx, t) + "` has type " + show(cx, ty));
    return ty->level;
  }

  // Checks `m : dom -> U_k` and returns k.
  uint32_t motive_level(const Cx& cx, const TermPtr& m, const Value& dom) {
    Value ty = v::force(infer(cx, m));
    if (ty->kind == Kind::Pi && v::conv(cx.level(), ty->args[0], dom)) {
      Value cod = v::force(ty->clo.apply(v::var(cx.level())));
      if (cod->kind == Kind::Univ) return cod->level;
    }
    throw TypeError("motive `" + show(cx, m) + "` should have type " + show(cx, dom) + " -> U_k, but has type " +
                    show(cx, ty));
  }

  std::vector<Value> former_components(const Cx& cx, const TermPtr& ty, Kind former) {
    infer_univ(cx, ty);
    Value f = v::force(eval(cx, ty));
    if (f->kind != former)
      throw TypeError("`" + show(cx, ty) + "` is not a " + std::string(head_by_kind(former)->keyword) + " type");
    return f->args;
  }

  void check(const Cx& cx, const TermPtr& t, const Value& expected) {
    if (t->kind == Kind::Lam) {
      Value ty = v::force(expected);
      if (ty->kind != Kind::Pi)
        throw TypeError("function `" + show(cx, t) + "` checked against non-function type " + show(cx, expected));
      infer_univ(cx, t->args[0]);
      Value dom = eval(cx, t->args[0]);
      if (!v::conv(cx.level(), dom, ty->args[0]))
        throw TypeError("binder annotation in `" + show(cx, t) + "`\n  expected: " + show(cx, ty->args[0]) +
                        "\n  found:    " + show(cx, dom));
      Cx inner = cx.bind(t->name, dom);
      check(inner, t->args[1], ty->clo.apply(inner.env.back()));
      return;
    }
    if (t->kind == Kind::Pair) {
      Value ty = v::force(expected);
      if (ty->kind != Kind::Sigma)
        throw TypeError("pair `" + show(cx, t) + "` checked against non-Sigma type " + show(cx, expected));
      check(cx, t->args[0], ty->args[0]);
      check(cx, t->args[1], ty->clo.apply(eval(cx, t->args[0])));
      return;
    }
    expect_conv(cx, expected, infer(cx, t), t);
  }

  Value infer(const Cx& cx, const TermPtr& t) {
    const auto& a = t->args;
    auto ev = [&](size_t i) { return eval(cx, a[i]); };
    switch (t->kind) {
      case Kind::Var:
        if (t->index >= cx.types.size()) throw TypeError("variable index out of scope");
        return cx.types[cx.types.size() - 1 - t->index];
      case Kind::Univ:
        return v::univ(t->index + 1);
      case Kind::Pi:
      case Kind::Sigma: {
        uint32_t i = infer_univ(cx, a[0]);
        uint32_t j = infer_univ(cx.bind(t->name, ev(0)), a[1]);
        return v::univ(std::max(i, j));
      }
      case Kind::Lam: {
        infer_univ(cx, a[0]);
        Value dom = ev(0);
        Cx inner = cx.bind(t->name, dom);
        TermPtr cod = v::quote(inner.level(), infer(inner, a[1]), false);
        Val pi;
        pi.kind = Kind::Pi;
        pi.hint = t->name;
        pi.args = {dom};
        pi.clo = v::Closure{genv_, cx.env, cod, nullptr};
        return std::make_shared<const Val>(std::move(pi));
      }
      case Kind::App: {
        Value fty = v::force(infer(cx, a[0]));
        if (fty->kind != Kind::Pi)
          throw TypeError("`" + show(cx, a[0]) + "` is applied to an argument but has non-function type " +
                          show(cx, fty));
        check(cx, a[1], fty->args[0]);
        return fty->clo.apply(ev(1));
      }
      case Kind::Pair:
        throw TypeError("cannot infer the type of pair `" + show(cx, t) + "`; use it where a Sigma type is expected");
      case Kind::Fst:
      case Kind::Snd: {
        Value pty = v::force(infer(cx, a[0]));
        if (pty->kind != Kind::Sigma)
          throw TypeError("projection from `" + show(cx, a[0]) + "` of non-Sigma type " + show(cx, pty));
        if (t->kind == Kind::Fst) return pty->args[0];
        return pty->clo.apply(v::fst(ev(0)));
      }
      case Kind::Id: {
        uint32_t i = infer_univ(cx, a[0]);
        Value ty = ev(0);
        check(cx, a[1], ty);
        check(cx, a[2], ty);
        return v::univ(i);
      }
      case Kind::Refl: {
        Value ty = infer(cx, a[0]);
        Value x = ev(0);
        return id_ty(ty, x, x);
      }
      case Kind::J: {
        Value pty = v::force(infer(cx, a[2]));
        if (pty->kind != Kind::Id)
          throw TypeError("J eliminates `" + show(cx, a[2]) + "` of non-identity type " + show(cx, pty));
        Value ty = pty->args[0];
        Value mty = v::pi("x", ty, [=](const Value& x) {
          return v::pi("y", ty, [=](const Value& y) {
            return v::pi("q", id_ty(ty, x, y), [](const Value&) { return v::univ(0); });
          });
        });
        Value mty_found = v::force(infer(cx, a[0]));
        check_j_motive(cx, a[0], ty, mty_found);
        Value m = ev(0);
        Value base = v::pi("x", ty, [=](const Value& x) {
          return v::apps(m, {x, x, v::canon(Kind::Refl, {x})});
        });
        check(cx, a[1], base);
        return v::apps(m, {pty->args[1], pty->args[2], ev(2)});
      }
      case Kind::Const: {
        EntryPtr e = genv_.find(t->name);
        if (!e) throw Error(ErrorKind::UnboundConstant, {}, "unknown constant '" + t->name + "'");
        return e->type_value;
      }
      case Kind::Unit:
      case Kind::Two:
      case Kind::Nat:
        return v::univ(0);
      case Kind::Tt:
        return v::canon(Kind::Unit);
      case Kind::TLeft:
      case Kind::TRight:
        return v::canon(Kind::Two);
      case Kind::Zero:
        return v::canon(Kind::Nat);
      case Kind::Suc:
        check(cx, a[0], v::canon(Kind::Nat));
        return v::canon(Kind::Nat);
      case Kind::TCase: {
        Value two = v::canon(Kind::Two);
        motive_level(cx, a[0], two);
        Value m = ev(0);
        check(cx, a[1], v::app(m, v::canon(Kind::TLeft)));
        check(cx, a[2], v::app(m, v::canon(Kind::TRight)));
        check(cx, a[3], two);
        return v::app(m, ev(3));
      }
      case Kind::NatRec: {
        Value nat = v::canon(Kind::Nat);
        motive_level(cx, a[0], nat);
        Value m = ev(0);
        check(cx, a[1], v::app(m, v::canon(Kind::Zero)));
        check(cx, a[2], v::pi("k", nat, [=](const Value& k) {
                return v::arrow(v::app(m, k), v::app(m, v::canon(Kind::Suc, {k})));
              }));
        check(cx, a[3], nat);
        return v::app(m, ev(3));
      }
      case Kind::Pushout: {
        uint32_t i = std::max({infer_univ(cx, a[0]), infer_univ(cx, a[1]), infer_univ(cx, a[2])});
        check(cx, a[3], v::arrow(ev(0), ev(1)));
        check(cx, a[4], v::arrow(ev(0), ev(2)));
        return v::univ(i);
      }
      case Kind::Inl:
      case Kind::Inr: {
        auto c = former_components(cx, a[0], Kind::Pushout);
        check(cx, a[1], t->kind == Kind::Inl ? c[1] : c[2]);
        return ev(0);
      }
      case Kind::Glue: {
        auto c = former_components(cx, a[0], Kind::Pushout);
        check(cx, a[1], c[0]);
        Value ty = ev(0), z = ev(1);
        return id_ty(ty, v::canon(Kind::Inl, {ty, v::app(c[3], z)}), v::canon(Kind::Inr, {ty, v::app(c[4], z)}));
      }
      case Kind::PRec: {
        auto c = former_components(cx, a[0], Kind::Pushout);
        infer_univ(cx, a[1]);
        Value cod = ev(1);
        check(cx, a[2], v::arrow(c[1], cod));
        check(cx, a[3], v::arrow(c[2], cod));
        Value l = ev(2), r = ev(3);
        check(cx, a[4], v::pi("z", c[0], [=](const Value& z) {
                return id_ty(cod, v::app(l, v::app(c[3], z)), v::app(r, v::app(c[4], z)));
              }));
        check(cx, a[5], ev(0));
        return cod;
      }
      case Kind::PInd: {
        auto c = former_components(cx, a[0], Kind::Pushout);
        Value ty = ev(0);
        motive_level(cx, a[1], ty);
        Value m = ev(1);
        check(cx, a[2], v::pi("x", c[1], [=](const Value& x) { return v::app(m, v::canon(Kind::Inl, {ty, x})); }));
        check(cx, a[3], v::pi("y", c[2], [=](const Value& y) { return v::app(m, v::canon(Kind::Inr, {ty, y})); }));
        Value l = ev(2), r = ev(3);
        check(cx, a[4], v::pi("z", c[0], [=](const Value& z) {
                Value fz = v::app(c[3], z), gz = v::app(c[4], z);
                Value glue = v::canon(Kind::Glue, {ty, z});
                return id_ty(v::app(m, v::canon(Kind::Inr, {ty, gz})), transport_v(ty, m, glue, v::app(l, fz)),
                             v::app(r, gz));
              }));
        check(cx, a[5], ty);
        return v::app(m, ev(5));
      }
      case Kind::Colim: {
        Value nat = v::canon(Kind::Nat);
        uint32_t i = motive_level(cx, a[0], nat);
        Value fam = ev(0);
        check(cx, a[1], v::pi("i", nat, [=](const Value& k) {
                return v::arrow(v::app(fam, k), v::app(fam, v::canon(Kind::Suc, {k})));
              }));
        return v::univ(i);
      }
      case Kind::CIn:
      case Kind::CGlue: {
        auto c = former_components(cx, a[0], Kind::Colim);
        check(cx, a[1], v::canon(Kind::Nat));
        Value i = ev(1);
        check(cx, a[2], v::app(c[0], i));
        Value ty = ev(0);
        if (t->kind == Kind::CIn) return ty;
        Value x = ev(2);
        Value si = v::canon(Kind::Suc, {i});
        return id_ty(ty, v::canon(Kind::CIn, {ty, i, x}), v::canon(Kind::CIn, {ty, si, v::apps(c[1], {i, x})}));
      }
      case Kind::CRec: {
        auto c = former_components(cx, a[0], Kind::Colim);
        infer_univ(cx, a[1]);
        Value cod = ev(1);
        Value nat = v::canon(Kind::Nat);
        Value fam = c[0], maps = c[1];
        check(cx, a[2], v::pi("i", nat, [=](const Value& i) { return v::arrow(v::app(fam, i), cod); }));
        Value f = ev(2);
        check(cx, a[3], v::pi("i", nat, [=](const Value& i) {
                return v::pi("x", v::app(fam, i), [=](const Value& x) {
                  Value si = v::canon(Kind::Suc, {i});
                  return id_ty(cod, v::apps(f, {i, x}), v::apps(f, {si, v::apps(maps, {i, x})}));
                });
              }));
        check(cx, a[4], ev(0));
        return cod;
      }
      case Kind::Trunc0:
        return v::univ(infer_univ(cx, a[0]));
      case Kind::Tr0: {
        auto c = former_components(cx, a[0], Kind::Trunc0);
        check(cx, a[1], c[0]);
        return ev(0);
      }
      case Kind::IsSet: {
        former_components(cx, a[0], Kind::Trunc0);
        Value ty = ev(0);
        check(cx, a[1], ty);
        check(cx, a[2], ty);
        Value path = id_ty(ty, ev(1), ev(2));
        check(cx, a[3], path);
        check(cx, a[4], path);
        return id_ty(path, ev(3), ev(4));
      }
      case Kind::T0Rec: {
        auto c = former_components(cx, a[0], Kind::Trunc0);
        infer_univ(cx, a[1]);
        Value cod = ev(1);
        try {
          check(cx, a[2], is_set_v(cod));
        } catch (const TypeError& e) {
          throw TypeError("t0rec needs a proof that its target " + show(cx, cod) + " is a set:\n" + e.message());
        }
        check(cx, a[3], v::arrow(c[0], cod));
        check(cx, a[4], ev(0));
        return cod;
      }
    }
    throw TypeError("unsupported term");
  }

 private:
  void check_j_motive(const Cx& cx, const TermPtr& m, const Value& ty, const Value& found) {
    auto fail = [&]() {
      throw TypeError("J motive `" + show(cx, m) + "` should have type (x y : " + show(cx, ty) +
                      ") -> Id _ x y -> U_k, but has type " + show(cx, found));
    };
    uint32_t lvl = cx.level();
    Value p1 = v::force(found);
    if (p1->kind != Kind::Pi || !v::conv(lvl, p1->args[0], ty)) fail();
    Value x = v::var(lvl);
    Value p2 = v::force(p1->clo.apply(x));
    if (p2->kind != Kind::Pi || !v::conv(lvl + 1, p2->args[0], ty)) fail();
    Value y = v::var(lvl + 1);
    Value p3 = v::force(p2->clo.apply(y));
    if (p3->kind != Kind::Pi || !v::conv(lvl + 2, p3->args[0], id_ty(ty, x, y))) fail();
    Value u = v::force(p3->clo.apply(v::var(lvl + 2)));
    if (u->kind != Kind::Univ) fail();
  }

  const Environment& genv_;
};

Cx to_cx(const Environment& env, const TypingContext& ctx) {
  Checker ch(env);
  Cx cx;
  for (size_t i = 0; i < ctx.types.size(); ++i) {
    std::string name = i < ctx.names.size() ? ctx.names[i] : "x" + std::to_string(i);
    ch.infer_univ(cx, ctx.types[i]);
    cx = cx.bind(name, ch.eval(cx, ctx.types[i]));
  }
  return cx;
}

void annotate(Error& e, const std::string& name) {
  if (e.declaration().empty()) e.set_declaration(name);
}

TermPtr close_pi(const Telescope& tele, TermPtr body) {
  for (size_t i = tele.size(); i-- > 0;) body = mk::pi(tele[i].first, tele[i].second, body);
  return body;
}

TermPtr close_lam(const Telescope& tele, TermPtr body) {
  for (size_t i = tele.size(); i-- > 0;) body = mk::lam(tele[i].first, tele[i].second, body);
  return body;
}

Cx bind_telescope(Checker& ch, const Telescope& tele) {
  Cx cx;
  for (const auto& [name, ty] : tele) {
    ch.infer_univ(cx, ty);
    cx = cx.bind(name, ch.eval(cx, ty));
  }
  return cx;
}

// Adds the hit's former as a definition `name : Pi tele. U_i`, then the
// generated computation axioms returned by `axioms`, which receives the
// telescope context and the value of `name` applied to it.
using AxiomBuilder = std::function<std::vector<std::pair<std::string, Value>>(const Cx&, const Value&)>;

void push_hit(Environment& env, const std::string& name, HitInstance inst, const TermPtr& former,
              const AxiomBuilder& axioms, Span span) {
  if (env.contains(name)) throw Error(ErrorKind::DuplicateName, span, "'" + name + "' is already declared");
  Cx cx;
  uint32_t level = 0;
  {
    Checker ch(env);
    cx = bind_telescope(ch, inst.telescope);
    level = ch.infer_univ(cx, former);
  }
  Entry e;
  e.name = name;
  e.kind = EntryKind::Hit;
  e.type = close_pi(inst.telescope, mk::univ(level));
  e.body = close_lam(inst.telescope, former);
  e.span = span;
  e.type_value = v::eval(env, {}, e.type);
  e.body_value = v::eval(env, {}, e.body);
  e.hit = std::move(inst);
  const Telescope tele = e.hit->telescope;
  env.push(std::move(e));

  Checker ch(env);
  cx = bind_telescope(ch, tele);
  TermPtr applied = mk::constant(name);
  for (size_t i = 0; i < tele.size(); ++i)
    applied = mk::app(applied, mk::var(static_cast<uint32_t>(tele.size() - 1 - i)));
  Value self = ch.eval(cx, applied);
  for (auto& [suffix, ty] : axioms(cx, self)) {
    Entry ax;
    ax.name = name + "." + suffix;
    ax.kind = EntryKind::GeneratedAxiom;
    ax.type = close_pi(tele, v::quote(cx.level(), ty, false));
    ax.provenance = name + "/" + suffix.substr(suffix.find('-') + 1);
    ax.span = span;
    Checker(env).infer_univ(Cx{}, ax.type);
    ax.type_value = v::eval(env, {}, ax.type);
    env.push(std::move(ax));
  }
}

std::vector<std::pair<std::string, Value>> pushout_axioms(const Cx& cx, const Value& self) {
  Value f0 = v::force(self);
  const auto& c = f0->args;  // Z X Y f g
  Value Z = c[0], X = c[1], Y = c[2], f = c[3], g = c[4];
  (void)cx;
  Value rec = v::pi("C", v::univ(0), [=](const Value& C) {
    return v::pi("l", v::arrow(X, C), [=](const Value& l) {
      return v::pi("r", v::arrow(Y, C), [=](const Value& r) {
        Value gl_ty = v::pi("z", Z, [=](const Value& z) {
          return id_ty(C, v::app(l, v::app(f, z)), v::app(r, v::app(g, z)));
        });
        return v::pi("gl", gl_ty, [=](const Value& gl) {
          return v::pi("z", Z, [=](const Value& z) {
            Value F = v::lam("t", self, [=](const Value& t) { return v::prec(self, C, l, r, gl, t); });
            Value side = id_ty(C, v::app(l, v::app(f, z)), v::app(r, v::app(g, z)));
            return id_ty(side, ap_v(self, C, F, v::canon(Kind::Glue, {self, z})), v::app(gl, z));
          });
        });
      });
    });
  });
  Value ind = v::pi("M", v::arrow(self, v::univ(0)), [=](const Value& M) {
    return v::pi("l", v::pi("x", X, [=](const Value& x) { return v::app(M, v::canon(Kind::Inl, {self, x})); }),
                 [=](const Value& l) {
      return v::pi("r", v::pi("y", Y, [=](const Value& y) { return v::app(M, v::canon(Kind::Inr, {self, y})); }),
                   [=](const Value& r) {
        Value gl_ty = v::pi("z", Z, [=](const Value& z) {
          Value fz = v::app(f, z), gz = v::app(g, z);
          return id_ty(v::app(M, v::canon(Kind::Inr, {self, gz})),
                       transport_v(self, M, v::canon(Kind::Glue, {self, z}), v::app(l, fz)), v::app(r, gz));
        });
        return v::pi("gl", gl_ty, [=](const Value& gl) {
          return v::pi("z", Z, [=](const Value& z) {
            Value fz = v::app(f, z), gz = v::app(g, z);
            Value F = v::lam("t", self, [=](const Value& t) { return v::pind(self, M, l, r, gl, t); });
            Value fiber = v::app(M, v::canon(Kind::Inr, {self, gz}));
            Value side =
                id_ty(fiber, transport_v(self, M, v::canon(Kind::Glue, {self, z}), v::app(l, fz)), v::app(r, gz));
            return id_ty(side, apd_v(self, M, F, v::canon(Kind::Glue, {self, z})), v::app(gl, z));
          });
        });
      });
    });
  });
  return {{"prec-glue", rec}, {"pind-glue", ind}};
}

std::vector<std::pair<std::string, Value>> colim_axioms(const Cx&, const Value& self) {
  Value f0 = v::force(self);
  Value fam = f0->args[0], maps = f0->args[1];
  Value nat = v::canon(Kind::Nat);
  Value rec = v::pi("C", v::univ(0), [=](const Value& C) {
    Value cocone = v::pi("i", nat, [=](const Value& i) { return v::arrow(v::app(fam, i), C); });
    return v::pi("c", cocone, [=](const Value& c) {
      Value gl_ty = v::pi("i", nat, [=](const Value& i) {
        return v::pi("x", v::app(fam, i), [=](const Value& x) {
          return id_ty(C, v::apps(c, {i, x}), v::apps(c, {v::canon(Kind::Suc, {i}), v::apps(maps, {i, x})}));
        });
      });
      return v::pi("gl", gl_ty, [=](const Value& gl) {
        return v::pi("i", nat, [=](const Value& i) {
          return v::pi("x", v::app(fam, i), [=](const Value& x) {
            Value F = v::lam("t", self, [=](const Value& t) { return v::crec(self, C, c, gl, t); });
            Value side = id_ty(C, v::apps(c, {i, x}), v::apps(c, {v::canon(Kind::Suc, {i}), v::apps(maps, {i, x})}));
            return id_ty(side, ap_v(self, C, F, v::canon(Kind::CGlue, {self, i, x})), v::apps(gl, {i, x}));
          });
        });
      });
    });
  });
  return {{"crec-cglue", rec}};
}

template <class F>
auto guarded(uint64_t fuel, const std::string& name, F&& f) {
  v::FuelScope scope(fuel);
  try {
    return f();
  } catch (Error& e) {
    annotate(e, name);
    throw;
  }
}

}  // namespace

TermPtr infer(const Environment& env, const TypingContext& ctx, const TermPtr& term, KernelOptions opt) {
  v::FuelScope scope(opt.fuel);
  Cx cx = to_cx(env, ctx);
  Checker ch(env);
  return v::quote(cx.level(), ch.infer(cx, term), false);
}

void check(const Environment& env, const TypingContext& ctx, const TermPtr& term, const TermPtr& type,
           KernelOptions opt) {
  v::FuelScope scope(opt.fuel);
  Cx cx = to_cx(env, ctx);
  Checker ch(env);
  ch.infer_univ(cx, type);
  ch.check(cx, term, ch.eval(cx, type));
}

TermPtr normalize(const Environment& env, const TypingContext& ctx, const TermPtr& term, KernelOptions opt) {
  v::FuelScope scope(opt.fuel);
  Cx cx = to_cx(env, ctx);
  return v::quote(cx.level(), Checker(env).eval(cx, term), true);
}

bool conv(const Environment& env, const TypingContext& ctx, const TermPtr& a, const TermPtr& b, KernelOptions opt) {
  v::FuelScope scope(opt.fuel);
  Cx cx = to_cx(env, ctx);
  Checker ch(env);
  return v::conv(cx.level(), ch.eval(cx, a), ch.eval(cx, b));
}

void extend_definition(Environment& env, const std::string& name, const TermPtr& type, const TermPtr& body,
                       KernelOptions opt, Span span) {
  guarded(opt.fuel, name, [&] {
    if (env.contains(name)) throw Error(ErrorKind::DuplicateName, span, "'" + name + "' is already declared");
    Checker ch(env);
    ch.infer_univ(Cx{}, type);
    Value tv = ch.eval(Cx{}, type);
    ch.check(Cx{}, body, tv);
    Entry e;
    e.name = name;
    e.kind = EntryKind::Definition;
    e.type = type;
    e.body = body;
    e.span = span;
    e.type_value = tv;
    e.body_value = ch.eval(Cx{}, body);
    env.push(std::move(e));
    return 0;
  });
}

void extend_postulate(Environment& env, const std::string& name, const TermPtr& type, KernelOptions opt, Span span) {
  guarded(opt.fuel, name, [&] {
    if (env.contains(name)) throw Error(ErrorKind::DuplicateName, span, "'" + name + "' is already declared");
    Checker ch(env);
    ch.infer_univ(Cx{}, type);
    Entry e;
    e.name = name;
    e.kind = EntryKind::Postulate;
    e.type = type;
    e.span = span;
    e.type_value = ch.eval(Cx{}, type);
    env.push(std::move(e));
    return 0;
  });
}

static void extend_pushout(Environment& env, const PushoutSpec& s, const std::string& name, KernelOptions opt,
                           Span span) {
  guarded(opt.fuel, name, [&] {
    HitInstance inst{HitInstance::Former::Pushout, s.telescope,
                     {s.span_apex, s.left, s.right, s.left_map, s.right_map}};
    TermPtr former = mk::node(Kind::Pushout, inst.components);
    push_hit(env, name, std::move(inst), former, pushout_axioms, span);
    return 0;
  });
}

static void extend_colim(Environment& env, const ColimSpec& s, const std::string& name, KernelOptions opt, Span span) {
  guarded(opt.fuel, name, [&] {
    HitInstance inst{HitInstance::Former::Colim, s.telescope, {s.family, s.maps}};
    TermPtr former = mk::node(Kind::Colim, inst.components);
    push_hit(env, name, std::move(inst), former, colim_axioms, span);
    return 0;
  });
}

static void extend_trunc0(Environment& env, const Trunc0Spec& s, const std::string& name, KernelOptions opt,
                          Span span) {
  guarded(opt.fuel, name, [&] {
    HitInstance inst{HitInstance::Former::Trunc0, s.telescope, {s.carrier}};
    TermPtr former = mk::node(Kind::Trunc0, inst.components);
    push_hit(env, name, std::move(inst), former,
             [](const Cx&, const Value&) { return std::vector<std::pair<std::string, Value>>{}; }, span);
    return 0;
  });
}

void extend_hit(Environment& env, const std::string& name, const TermPtr& body, KernelOptions opt, Span span) {
  Telescope tele;
  TermPtr cur = body;
  while (cur->kind == Kind::Lam) {
    tele.emplace_back(cur->name, cur->args[0]);
    cur = cur->args[1];
  }
  const auto& c = cur->args;
  switch (cur->kind) {
    case Kind::Pushout:
      extend_pushout(env, PushoutSpec{tele, c[0], c[1], c[2], c[3], c[4]}, name, opt, span);
      return;
    case Kind::Colim:
      extend_colim(env, ColimSpec{tele, c[0], c[1]}, name, opt, span);
      return;
    case Kind::Trunc0:
      extend_trunc0(env, Trunc0Spec{tele, c[0]}, name, opt, span);
      return;
    default: {
      TypeError e("a hit declaration must be a Pushout, Colim or Trunc0 former", span);
      e.set_declaration(name);
      throw e;
    }
  }
}

Environment add_definition(const Environment& env, const std::string& name, const TermPtr& type, const TermPtr& body,
                           KernelOptions opt, Span span) {
  Environment out = env;
  extend_definition(out, name, type, body, opt, std::move(span));
  return out;
}

Environment add_postulate(const Environment& env, const std::string& name, const TermPtr& type, KernelOptions opt,
                          Span span) {
  Environment out = env;
  extend_postulate(out, name, type, opt, std::move(span));
  return out;
}

Environment instantiate_pushout(const Environment& env, const PushoutSpec& spec, const std::string& name,
                                KernelOptions opt, Span span) {
  Environment out = env;
  extend_pushout(out, spec, name, opt, std::move(span));
  return out;
}

Environment instantiate_colim(const Environment& env, const ColimSpec& spec, const std::string& name,
                              KernelOptions opt, Span span) {
  Environment out = env;
  extend_colim(out, spec, name, opt, std::move(span));
  return out;
}

Environment instantiate_trunc0(const Environment& env, const Trunc0Spec& spec, const std::string& name,
                               KernelOptions opt, Span span) {
  Environment out = env;
  extend_trunc0(out, spec, name, opt, std::move(span));
  return out;
}

Environment instantiate_hit(const Environment& env, const std::string& name, const TermPtr& body, KernelOptions opt,
                            Span span) {
  Environment out = env;
  extend_hit(out, name, body, opt, std::move(span));
  return out;
}

}  // namespace hf
