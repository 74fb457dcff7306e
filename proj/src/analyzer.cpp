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

#include "hf/analyzer.hpp"

#include <algorithm>
#include <sstream>

namespace hf::analyzer {

namespace {

constexpr const char* kSuspAnchor = "suspension connectivity";
constexpr const char* kFreudAnchor = "Freudenthal suspension theorem";
constexpr const char* kPiIsoAnchor = "connected maps and homotopy groups";
constexpr const char* kStabAnchor = "stability theorem";
constexpr const char* kMapAnchor = "connectivity of maps between connected spaces";
constexpr const char* kBMAnchor = "Blakers-Massey theorem";

void check_bound(int c, const char* what) {
  if (c < kNoInformation) throw std::invalid_argument(std::string(what) + " must be >= -2");
}

std::string str(int v) { return std::to_string(v); }
// A factor of a product: negative numbers in parentheses.
std::string factor(int v) { return v < 0 ? "(" + str(v) + ")" : str(v); }

// Connectivity with one trace step per rule application.
int conn_traced(const SpacePtr& e, std::vector<TraceStep>* out) {
  switch (e->tag) {
    case SpaceExpr::Tag::Atom:
      if (out) out->push_back({"atom", "declared bound", "conn(" + e->name + ") = " + str(e->conn)});
      return e->conn;
    case SpaceExpr::Tag::Susp: {
      int c = conn_traced(e->inner, out);
      if (out)
        out->push_back({"suspension-connectivity", kSuspAnchor,
                        "conn(" + show(e) + ") = " + str(c) + " + 1 = " + str(c + 1)});
      return c + 1;
    }
    case SpaceExpr::Tag::SuspIter: {
      int c = conn_traced(e->inner, out);
      int r = c + static_cast<int>(e->k);
      if (out)
        out->push_back({"suspension-connectivity", kSuspAnchor,
                        "conn(" + show(e) + ") = " + str(c) + " + " + str(e->k) + " = " + str(r)});
      return r;
    }
  }
  return kNoInformation;
}

}  // namespace

SpacePtr atom(std::string name, int conn) {
  check_bound(conn, "a connectivity bound");
  return std::make_shared<const SpaceExpr>(SpaceExpr{SpaceExpr::Tag::Atom, std::move(name), conn, nullptr, 0});
}

SpacePtr susp(SpacePtr inner) {
  return std::make_shared<const SpaceExpr>(SpaceExpr{SpaceExpr::Tag::Susp, "", kNoInformation, std::move(inner), 0});
}

SpacePtr susp_iter(SpacePtr inner, unsigned k) {
  if (k == 0) return inner;
  return std::make_shared<const SpaceExpr>(
      SpaceExpr{SpaceExpr::Tag::SuspIter, "", kNoInformation, std::move(inner), k});
}

std::string show(const SpacePtr& e) {
  switch (e->tag) {
    case SpaceExpr::Tag::Atom: return e->name;
    case SpaceExpr::Tag::Susp:
      return "Susp " + (e->inner->tag == SpaceExpr::Tag::Atom ? show(e->inner) : "(" + show(e->inner) + ")");
    case SpaceExpr::Tag::SuspIter:
      return "Susp^" + std::to_string(e->k) + " " +
             (e->inner->tag == SpaceExpr::Tag::Atom ? show(e->inner) : "(" + show(e->inner) + ")");
  }
  return "?";
}

// A suspension of a space we know nothing about is still connected: -2 + 1.
int connectivity(const SpacePtr& e) { return conn_traced(e, nullptr); }

int merloop_conn(const SpacePtr& e) {
  int n = connectivity(e);
  if (n == kNoInformation) throw NoInformation("merloop connectivity of a space with no connectivity bound");
  return 2 * n;
}

bool is_pi_iso(int k, int map_conn) { return k <= map_conn; }

int stab_index(int c, int n) {
  if (c < -1) throw std::invalid_argument("stab_index needs a connectivity of at least -1");
  if (n < 0) throw std::invalid_argument("stab_index needs a degree of at least 0");
  return std::max(0, n - 2 * c);
}

int map_conn(int dom, int cod) {
  check_bound(dom, "domain connectivity");
  check_bound(cod, "codomain connectivity");
  if (dom == kNoInformation || cod == kNoInformation)
    throw NoInformation("map connectivity needs bounds on both ends");
  return std::min(dom, cod) - 1;
}

int exact_range(int conn_a, int conn_f) {
  check_bound(conn_a, "space connectivity");
  check_bound(conn_f, "map connectivity");
  if (conn_a == kNoInformation || conn_f == kNoInformation)
    throw NoInformation("exactness range needs bounds on the space and the map");
  return conn_a + conn_f;
}

namespace {

struct Explainer {
  Explanation out;

  void no_info(const char* rule, const char* anchor, std::string why) {
    out.steps.push_back({rule, anchor, std::move(why) + ": no information"});
    out.no_information = true;
  }

  void operator()(const ConnQuery& q) { out.value = conn_traced(q.space, &out.steps); }

  void operator()(const MerloopQuery& q) {
    int n = conn_traced(q.space, &out.steps);
    if (n == kNoInformation) return no_info("freudenthal", kFreudAnchor, "conn(" + show(q.space) + ") = -2");
    out.value = 2 * n;
    out.steps.push_back({"freudenthal", kFreudAnchor,
                         "merloop(" + show(q.space) + ") is 2 * " + factor(n) + " = " + str(2 * n) + " connected"});
  }

  void operator()(const PiIsoQuery& q) {
    if (q.k < 0) throw std::invalid_argument("degree must be >= 0");
    check_bound(q.map_conn, "map connectivity");
    bool iso = is_pi_iso(q.k, q.map_conn);
    out.holds = iso;
    out.steps.push_back({"pi-iso", kPiIsoAnchor,
                         "k = " + str(q.k) + (iso ? " <= " : " > ") + str(q.map_conn) + " = conn(f): " +
                             (iso ? "pi_k(f) is an isomorphism" : "no conclusion")});
  }

  // The chain behind the stable range: Sigma^i X is (c+i)-connected, so its
  // meridian loop is 2(c+i)-connected, which makes pi_(n+i) an isomorphism
  // once n + i <= 2(c+i).
  void operator()(const StabQuery& q) {
    int i = stab_index(q.c, q.n);
    std::string c = str(q.c), n = str(q.n);
    out.steps.push_back({"suspension-connectivity", kSuspAnchor, "conn(Susp^i X) = " + c + " + i"});
    out.steps.push_back({"freudenthal", kFreudAnchor, "merloop(Susp^i X) is 2(" + c + " + i) connected"});
    std::string ineq = q.c == 0 ? "n + i <= 2i, i.e. 2i >= n + i" : "n + i <= 2(" + c + " + i)";
    out.steps.push_back({"pi-iso", kPiIsoAnchor,
                         "phi_i iso on pi_(" + n + " + i) when " + ineq + ", first at i = " + str(i)});
    out.steps.push_back({"stab-index", kStabAnchor,
                         "max(0, n - 2c) = max(0, " + n + " - 2 * " + factor(q.c) + ") = " + str(i)});
    out.value = i;
  }

  void operator()(const MapConnQuery& q) {
    check_bound(q.dom, "domain connectivity");
    check_bound(q.cod, "codomain connectivity");
    if (q.dom == kNoInformation || q.cod == kNoInformation)
      return no_info("map-connectivity", kMapAnchor,
                     "conn(A) = " + str(q.dom) + ", conn(B) = " + str(q.cod));
    int r = map_conn(q.dom, q.cod);
    out.value = r;
    out.steps.push_back({"map-connectivity", kMapAnchor,
                         "min(" + str(q.dom) + ", " + str(q.cod) + ") - 1 = " + str(r)});
  }

  void operator()(const ExactQuery& q) {
    check_bound(q.conn_a, "space connectivity");
    check_bound(q.conn_f, "map connectivity");
    if (q.conn_a == kNoInformation || q.conn_f == kNoInformation)
      return no_info("blakers-massey", kBMAnchor, "n = " + str(q.conn_a) + ", m = " + str(q.conn_f));
    int r = exact_range(q.conn_a, q.conn_f);
    out.value = r;
    out.steps.push_back({"blakers-massey", kBMAnchor,
                         "exact for k <= n + m = " + str(q.conn_a) + " + " + str(q.conn_f) + " = " + str(r) +
                             " (range read as k <= n + m)"});
  }
};

}  // namespace

Explanation explain(const Query& q) {
  Explainer ex;
  std::visit(ex, q);
  return ex.out;
}

std::string format_trace(const std::vector<TraceStep>& steps) {
  std::ostringstream os;
  for (const auto& s : steps) os << s.rule << " | " << s.anchor << " | " << s.instantiation << "\n";
  return os.str();
}

}  // namespace hf::analyzer
