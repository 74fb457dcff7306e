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

// Surface syntax: lexer, parser, scope resolution and the pretty printer.
//
// Grammar (tokens are separated by whitespace or "--" line comments):
//
//   module  ::= decl*
//   decl    ::= "def" IDENT binder* ":" term ":=" term ";"
//             | "postulate" IDENT binder* ":" term ";"
//             | "hit" IDENT binder* ":=" term ";"
//   binder  ::= "(" IDENT+ ":" term ")"
//   term    ::= "fun" binder+ "=>" term
//             | "Sigma" binder+ "," term
//             | binder+ "->" term
//             | app [ "->" term ]
//   app     ::= (HEAD atom^arity | atom) atom*
//   atom    ::= IDENT | "U" digits | NULLARY-HEAD | "(" term ")"
//
// IDENT starts with a letter, '_' or a non-ASCII byte and continues with
// letters, digits and the characters _ ' . - (a '-' directly followed by '>'
// ends the identifier). Built-in heads and "U<n>" are reserved.

#ifndef HF_SYNTAX_HPP
#define HF_SYNTAX_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hf/error.hpp"
#include "hf/term.hpp"

namespace hf {

struct SurfaceTerm;
using SurfacePtr = std::shared_ptr<const SurfaceTerm>;

struct SurfaceBinder {
  std::vector<std::string> names;
  SurfacePtr type;
  Span span;
};

enum class SurfaceKind { Name, Univ, Pi, Arrow, Lam, Sigma, App, Head };

struct SurfaceTerm {
  SurfaceKind kind;
  Span span;
  std::string name;                    // Name
  uint32_t level = 0;                  // Univ
  Kind head = Kind::Var;               // Head
  std::vector<SurfaceBinder> binders;  // Pi, Lam, Sigma
  std::vector<SurfacePtr> args;        // body / codomain / function+argument / head arguments
};

enum class DeclKind { Definition, Postulate, Hit };

const char* decl_kind_name(DeclKind k);

struct SurfaceDecl {
  std::string name;
  DeclKind kind = DeclKind::Definition;
  std::vector<SurfaceBinder> telescope;
  SurfacePtr signature;  // absent for hit declarations
  SurfacePtr body;       // absent for postulates
  Span span;
};

struct SourceModule {
  std::string file;
  std::vector<SurfaceDecl> declarations;
};

// Throws ParseError. Declaration names must be unique within the module.
SourceModule parse(std::string_view source, std::string file = {});
SurfacePtr parse_term(std::string_view source, std::string file = {});

// Answers whether a name is a constant already declared in the environment.
using ConstantLookup = std::function<bool(const std::string&)>;

struct ResolvedDecl {
  std::string name;
  DeclKind kind = DeclKind::Definition;
  TermPtr signature;  // null for hit declarations (the kernel infers it)
  TermPtr body;       // null for postulates
  Span span;
};

// Names the kernel generates next to a hit declaration whose former is `former`.
std::vector<std::string> generated_names(const std::string& hit_name, Kind former);

// Throws Error(UnboundIdentifier | DuplicateName).
std::vector<ResolvedDecl> resolve(const SourceModule& module, const ConstantLookup& is_constant);
TermPtr resolve_term(const SurfacePtr& term, const std::vector<std::string>& scope,
                     const ConstantLookup& is_constant);

// `scope` names the free variables, outermost first.
std::string print(const TermPtr& term, const std::vector<std::string>& scope = {});

bool is_identifier(std::string_view word);

}  // namespace hf

#endif  // HF_SYNTAX_HPP
