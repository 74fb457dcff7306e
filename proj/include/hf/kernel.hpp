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

// Type checking and definitional equality for core terms.
//
// Definitional equality is beta, projections on pairs, J on refl, tcase and
// natrec on canonical values, the pushout / colimit / truncation eliminators
// on their point constructors, unfolding of definitions, eta for functions
// and pairs, and eta for Unit (any neutral of type Unit equals tt). There is
// no eta for Id. Eliminators applied to glue, cglue or isset stay
// stuck; their computation rules are the generated axioms named
// "<hit>.<eliminator>-<constructor>".
//
// J is the Martin-Lof eliminator:
//   J M m p : M a b p   for  M : (x y : A) -> Id A x y -> U_k,
//                            m : (x : A) -> M x x (refl x),  p : Id A a b
// with J M m (refl a) == m a.

#ifndef HF_KERNEL_HPP
#define HF_KERNEL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hf/error.hpp"
#include "hf/term.hpp"

namespace hf {

inline constexpr uint64_t kDefaultFuel = 1'000'000;

struct Val;
using Value = std::shared_ptr<const Val>;

using Telescope = std::vector<std::pair<std::string, TermPtr>>;

// Components are scoped under `telescope` (the hit's parameters).
struct PushoutSpec {
  Telescope telescope;
  TermPtr span_apex, left, right, left_map, right_map;  // Z, X, Y, f : Z -> X, g : Z -> Y
};

struct ColimSpec {
  Telescope telescope;
  TermPtr family;  // Nat -> U_i
  TermPtr maps;    // (i : Nat) -> family i -> family (suc i)
};

struct Trunc0Spec {
  Telescope telescope;
  TermPtr carrier;
};

struct HitInstance {
  enum class Former { Pushout, Colim, Trunc0 } former;
  Telescope telescope;
  std::vector<TermPtr> components;
};

enum class EntryKind { Definition, Postulate, Hit, GeneratedAxiom };

const char* entry_kind_name(EntryKind k);

struct Entry {
  std::string name;
  EntryKind kind;
  TermPtr type;
  TermPtr body;                     // Definition and Hit
  std::optional<HitInstance> hit;   // Hit
  std::string provenance;           // GeneratedAxiom: "<hit>/<constructor>"
  Span span;
  size_t position = 0;              // index in the environment
  Value type_value;
  Value body_value;
};

using EntryPtr = std::shared_ptr<const Entry>;

struct EntryTable {
  std::vector<EntryPtr> entries;
  std::unordered_map<std::string, size_t> index;
};

// Ordered, append-only sequence of checked declarations. An environment is a
// prefix view of a shared table: copies are cheap, and pushing onto the tip
// of a table does not disturb shorter views of it.
class Environment {
 public:
  Environment();

  size_t size() const { return size_; }
  const EntryPtr& at(size_t i) const { return table_->entries[i]; }
  EntryPtr find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  Environment prefix(size_t n) const;

  // Appends an already checked entry, assigning its position. Throws DuplicateName.
  EntryPtr push(Entry e);

 private:
  std::shared_ptr<EntryTable> table_;
  size_t size_ = 0;
};

// Telescope of bound variables, outermost first.
struct TypingContext {
  std::vector<std::string> names;
  std::vector<TermPtr> types;
};

struct KernelOptions {
  uint64_t fuel = kDefaultFuel;
};

// All of these are pure and throw TypeError / FuelExhausted.
TermPtr infer(const Environment& env, const TypingContext& ctx, const TermPtr& term, KernelOptions opt = {});
void check(const Environment& env, const TypingContext& ctx, const TermPtr& term, const TermPtr& type,
           KernelOptions opt = {});
TermPtr normalize(const Environment& env, const TypingContext& ctx, const TermPtr& term, KernelOptions opt = {});
bool conv(const Environment& env, const TypingContext& ctx, const TermPtr& a, const TermPtr& b,
          KernelOptions opt = {});

Environment add_definition(const Environment& env, const std::string& name, const TermPtr& type,
                           const TermPtr& body, KernelOptions opt = {}, Span span = {});
Environment add_postulate(const Environment& env, const std::string& name, const TermPtr& type,
                          KernelOptions opt = {}, Span span = {});
Environment instantiate_pushout(const Environment& env, const PushoutSpec& spec, const std::string& name,
                                KernelOptions opt = {}, Span span = {});
Environment instantiate_colim(const Environment& env, const ColimSpec& spec, const std::string& name,
                              KernelOptions opt = {}, Span span = {});
Environment instantiate_trunc0(const Environment& env, const Trunc0Spec& spec, const std::string& name,
                               KernelOptions opt = {}, Span span = {});
// Accepts a hit body of the form `fun tele => Pushout/Colim/Trunc0 ...`.
Environment instantiate_hit(const Environment& env, const std::string& name, const TermPtr& body,
                            KernelOptions opt = {}, Span span = {});

// In-place variants used when loading whole modules.
void extend_definition(Environment& env, const std::string& name, const TermPtr& type, const TermPtr& body,
                       KernelOptions opt = {}, Span span = {});
void extend_postulate(Environment& env, const std::string& name, const TermPtr& type, KernelOptions opt = {},
                      Span span = {});
void extend_hit(Environment& env, const std::string& name, const TermPtr& body, KernelOptions opt = {},
                Span span = {});

}  // namespace hf

#endif  // HF_KERNEL_HPP
