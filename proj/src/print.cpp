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

#include <set>
#include <sstream>

#include "hf/syntax.hpp"

namespace hf {
namespace {

enum Prec { kTerm = 0, kApp = 1, kArg = 2 };

void collect_constants(const TermPtr& t, std::set<std::string>& out) {
  if (t->kind == Kind::Const) out.insert(t->name);
  for (const auto& a : t->args) collect_constants(a, out);
}

class Printer {
 public:
  Printer(const TermPtr& root, std::vector<std::string> scope) {
    collect_constants(root, constants_);
    for (auto& n : scope) scope_.push_back(fresh(n));
  }

  void print(const TermPtr& t, int prec) {
    switch (t->kind) {
      case Kind::Var: {
        if (t->index < scope_.size()) out_ << scope_[scope_.size() - 1 - t->index];
        else out_ << "?" << t->index;
        return;
      }
      case Kind::Univ:
        out_ << "U" << t->index;
        return;
      case Kind::Const:
        out_ << t->name;
        return;
      case Kind::App: {
        open(prec > kApp);
        print(t->args[0], kApp);
        out_ << ' ';
        print(t->args[1], kArg);
        close(prec > kApp);
        return;
      }
      case Kind::Pi:
        if (!mentions_var(t->args[1], 0)) {
          open(prec > kTerm);
          print(t->args[0], kApp);
          out_ << " -> ";
          scope_.push_back("");
          print(t->args[1], kTerm);
          scope_.pop_back();
          close(prec > kTerm);
          return;
        }
        binder_chain(t, prec, Kind::Pi, "", " -> ");
        return;
      case Kind::Lam:
        binder_chain(t, prec, Kind::Lam, "fun ", " => ");
        return;
      case Kind::Sigma:
        binder_chain(t, prec, Kind::Sigma, "Sigma ", ", ");
        return;
      default: {
        auto h = head_by_kind(t->kind);
        if (h->arity == 0) {
          out_ << h->keyword;
          return;
        }
        open(prec > kApp);
        out_ << h->keyword;
        for (const auto& a : t->args) {
          out_ << ' ';
          print(a, kArg);
        }
        close(prec > kApp);
        return;
      }
    }
  }

  std::string str() const { return out_.str(); }

 private:
  void open(bool p) {
    if (p) out_ << '(';
  }
  void close(bool p) {
    if (p) out_ << ')';
  }

  bool taken(const std::string& n) const {
    if (constants_.count(n)) return true;
    for (const auto& s : scope_)
      if (s == n) return true;
    return false;
  }

  std::string fresh(const std::string& hint) {
    std::string base = is_identifier(hint) ? hint : "x";
    std::string cand = base;
    for (unsigned k = 1; taken(cand) || !is_identifier(cand); ++k) cand = base + std::to_string(k);
    return cand;
  }

  // Prints consecutive binders of the same kind as one group. Pi groups stop at
  // non-dependent arrows so they print as "A -> B".
  void binder_chain(const TermPtr& t, int prec, Kind k, const char* lead, const char* sep) {
    open(prec > kTerm);
    out_ << lead;
    size_t pushed = 0;
    TermPtr cur = t;
    bool first = true;
    while (cur->kind == k && (k != Kind::Pi || mentions_var(cur->args[1], 0) || first)) {
      if (!first) out_ << ' ';
      std::string name = fresh(cur->name);
      out_ << '(' << name << " : ";
      print(cur->args[0], kTerm);
      out_ << ')';
      scope_.push_back(name);
      ++pushed;
      cur = cur->args[1];
      first = false;
    }
    out_ << sep;
    print(cur, kTerm);
    scope_.resize(scope_.size() - pushed);
    close(prec > kTerm);
  }

  std::set<std::string> constants_;
  std::vector<std::string> scope_;
  std::ostringstream out_;
};

}  // namespace

std::string print(const TermPtr& term, const std::vector<std::string>& scope) {
  Printer p(term, scope);
  p.print(term, kTerm);
  return p.str();
}

}  // namespace hf
