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

// Symbolic connectivity calculator for the range arguments behind the
// stable homotopy groups.
//
// Connectivity bounds are integers >= -2. A bound of -1 holds for every
// inhabited type; -2 carries no information, and every rule that would have
// to guess from it reports NoInformation instead. Results are lower bounds.

#ifndef HF_ANALYZER_HPP
#define HF_ANALYZER_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hf::analyzer {

constexpr int kNoInformation = -2;

struct SpaceExpr;
using SpacePtr = std::shared_ptr<const SpaceExpr>;

struct SpaceExpr {
  enum class Tag { Atom, Susp, SuspIter };
  Tag tag;
  std::string name;  // Atom
  int conn = kNoInformation;  // Atom
  SpacePtr inner;             // Susp, SuspIter
  unsigned k = 0;             // SuspIter
};

// Throws std::invalid_argument for a bound below -2.
SpacePtr atom(std::string name, int conn);
SpacePtr susp(SpacePtr inner);
// susp_iter(e, 0) is e itself.
SpacePtr susp_iter(SpacePtr inner, unsigned k);

std::string show(const SpacePtr& e);

// Thrown where a rule needs a bound and only -2 is available.
struct NoInformation : std::runtime_error {
  explicit NoInformation(const std::string& what) : std::runtime_error(what) {}
};

int connectivity(const SpacePtr& e);
// 2n for an n-connected space.
int merloop_conn(const SpacePtr& e);
bool is_pi_iso(int k, int map_conn);
// Least i >= 0 with n + i <= 2 (c + i). Requires c >= -1.
int stab_index(int c, int n);
// A map between a- and b-connected spaces is (min(a, b) - 1)-connected.
int map_conn(int dom, int cod);
// Largest k for which pi_k A -> pi_k B -> pi_k C_f is exact.
int exact_range(int conn_a, int conn_f);

struct TraceStep {
  std::string rule;
  std::string anchor;
  std::string instantiation;
};

struct ConnQuery { SpacePtr space; };
struct MerloopQuery { SpacePtr space; };
struct PiIsoQuery { int k; int map_conn; };
struct StabQuery { int c; int n; };
struct MapConnQuery { int dom; int cod; };
struct ExactQuery { int conn_a; int conn_f; };

using Query = std::variant<ConnQuery, MerloopQuery, PiIsoQuery, StabQuery, MapConnQuery, ExactQuery>;

struct Explanation {
  std::vector<TraceStep> steps;
  std::optional<int> value;  // absent on NoInformation and for pi-iso
  std::optional<bool> holds; // pi-iso only
  bool no_information = false;
};

// Throws std::invalid_argument when the query violates a precondition.
Explanation explain(const Query& q);

// "rule | anchor | instantiation", one line per step.
std::string format_trace(const std::vector<TraceStep>& steps);

}  // namespace hf::analyzer

#endif  // HF_ANALYZER_HPP
