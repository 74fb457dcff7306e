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
#include <set>

#include "hf/syntax.hpp"

namespace hf {
namespace {

class Resolver {
 public:
  explicit Resolver(ConstantLookup is_constant) : is_constant_(std::move(is_constant)) {}

  void declare(const std::string& name) { module_names_.insert(name); }

  bool known(const std::string& name) const { return module_names_.count(name) || is_constant_(name); }

  TermPtr term(const SurfacePtr& t, std::vector<std::string>& scope) {
    switch (t->kind) {
      case SurfaceKind::Name: {
        for (size_t i = scope.size(); i-- > 0;)
          if (scope[i] == t->name) return mk::var(static_cast<uint32_t>(scope.size() - 1 - i));
        if (known(t->name)) return mk::constant(t->name);
        throw Error(ErrorKind::UnboundIdentifier, t->span, "unbound identifier '" + t->name + "'");
      }
      case SurfaceKind::Univ:
        return mk::univ(t->level);
      case SurfaceKind::Arrow: {
        TermPtr dom = term(t->args[0], scope);
        scope.push_back("");  // anonymous binder, unreachable by name
        TermPtr cod = term(t->args[1], scope);
        scope.pop_back();
        return mk::pi("_", dom, cod);
      }
      case SurfaceKind::Pi:
      case SurfaceKind::Lam:
      case SurfaceKind::Sigma: {
        struct Bound {
          std::string name;
          TermPtr type;
        };
        std::vector<Bound> bound;
        size_t pushed = 0;
        for (const auto& b : t->binders) {
          TermPtr ty = term(b.type, scope);
          for (size_t k = 0; k < b.names.size(); ++k) {
            bound.push_back({b.names[k], shift(ty, static_cast<int>(k))});
            scope.push_back(b.names[k]);
            ++pushed;
          }
        }
        TermPtr body = term(t->args[0], scope);
        scope.resize(scope.size() - pushed);
        for (size_t i = bound.size(); i-- > 0;) {
          if (t->kind == SurfaceKind::Pi) body = mk::pi(bound[i].name, bound[i].type, body);
          else if (t->kind == SurfaceKind::Lam) body = mk::lam(bound[i].name, bound[i].type, body);
          else body = mk::sigma(bound[i].name, bound[i].type, body);
        }
        return body;
      }
      case SurfaceKind::App:
        return mk::app(term(t->args[0], scope), term(t->args[1], scope));
      case SurfaceKind::Head: {
        std::vector<TermPtr> args;
        for (const auto& a : t->args) args.push_back(term(a, scope));
        return mk::node(t->head, std::move(args));
      }
    }
    throw Error(ErrorKind::Parse, t->span, "malformed surface term");
  }

  // Resolves a telescope, leaving its names pushed on `scope`.
  std::vector<std::pair<std::string, TermPtr>> telescope(const std::vector<SurfaceBinder>& tele,
                                                         std::vector<std::string>& scope) {
    std::vector<std::pair<std::string, TermPtr>> out;
    for (const auto& b : tele) {
      TermPtr ty = term(b.type, scope);
      for (size_t k = 0; k < b.names.size(); ++k) {
        out.emplace_back(b.names[k], shift(ty, static_cast<int>(k)));
        scope.push_back(b.names[k]);
      }
    }
    return out;
  }

 private:
  ConstantLookup is_constant_;
  std::set<std::string> module_names_;
};

TermPtr close_pi(const std::vector<std::pair<std::string, TermPtr>>& tele, TermPtr body) {
  for (size_t i = tele.size(); i-- > 0;) body = mk::pi(tele[i].first, tele[i].second, body);
  return body;
}

TermPtr close_lam(const std::vector<std::pair<std::string, TermPtr>>& tele, TermPtr body) {
  for (size_t i = tele.size(); i-- > 0;) body = mk::lam(tele[i].first, tele[i].second, body);
  return body;
}

// The former a hit body resolves to, after its telescope lambdas.
Kind hit_former(const SurfacePtr& body) {
  const SurfaceTerm* t = body.get();
  while (t->kind == SurfaceKind::Lam) t = t->args[0].get();
  return t->kind == SurfaceKind::Head ? t->head : Kind::Var;
}

}  // namespace

std::vector<std::string> generated_names(const std::string& hit_name, Kind former) {
  if (former == Kind::Pushout) return {hit_name + ".prec-glue", hit_name + ".pind-glue"};
  if (former == Kind::Colim) return {hit_name + ".crec-cglue"};
  return {};
}

std::vector<ResolvedDecl> resolve(const SourceModule& module, const ConstantLookup& is_constant) {
  Resolver r(is_constant);
  std::vector<ResolvedDecl> out;
  for (const auto& d : module.declarations) {
    if (r.known(d.name))
      throw Error(ErrorKind::DuplicateName, d.span, "'" + d.name + "' is already declared");
    std::vector<std::string> scope;
    auto tele = r.telescope(d.telescope, scope);
    ResolvedDecl rd;
    rd.name = d.name;
    rd.kind = d.kind;
    rd.span = d.span;
    if (d.signature) rd.signature = close_pi(tele, r.term(d.signature, scope));
    if (d.body) rd.body = close_lam(tele, r.term(d.body, scope));
    r.declare(d.name);
    if (d.kind == DeclKind::Hit)
      for (const auto& g : generated_names(d.name, hit_former(d.body))) r.declare(g);
    out.push_back(std::move(rd));
  }
  return out;
}

TermPtr resolve_term(const SurfacePtr& term, const std::vector<std::string>& scope, const ConstantLookup& is_constant) {
  Resolver r(is_constant);
  std::vector<std::string> s = scope;
  return r.term(term, s);
}

}  // namespace hf
