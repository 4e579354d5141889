// Copyright 2026 The pcst Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcst/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace pcst {

using nlohmann::json;

OrderedJson RationalToJson(const Rational& value) { return ToFractionString(value); }

Rational RationalFromJson(const json& value) {
  try {
    if (value.is_string()) return ParseRational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
  } catch (const RationalSyntaxError& e) {
    throw SerializeError(e.what());
  }
  throw SerializeError("expected a \"p/q\" string, got " + value.dump());
}

namespace {

void AddRational(OrderedJson& out, const std::string& key, const Rational& value) {
  out[key] = RationalToJson(value);
  out[key + "_approx"] = value.get_d();
}

const json& Field(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw SerializeError(std::string("missing field \"") + key + "\"");
  }
  return object[key];
}

std::vector<int> IntList(const json& list, const char* what) {
  if (!list.is_array()) throw SerializeError(std::string(what) + " must be an array");
  std::vector<int> values;
  for (const json& item : list) {
    if (!item.is_number_integer()) throw SerializeError(std::string(what) + " must hold integers");
    values.push_back(item.get<int>());
  }
  return values;
}

}  // namespace

OrderedJson FamilyToJson(const LaminarFamily& family, const DualAssignment& duals) {
  OrderedJson sets = OrderedJson::array();
  for (int i = 0; i < family.size(); ++i) {
    const SetId id = MakeSetId(static_cast<std::size_t>(i));
    OrderedJson entry;
    entry["id"] = i;
    entry["vertices"] = family.Members(id);
    entry["y"] = RationalToJson(duals.y(id));
    entry["saturated"] = duals.saturated(id);
    const auto parent = family.Parent(id);
    entry["parent"] = parent ? OrderedJson(static_cast<int>(Index(*parent))) : OrderedJson(nullptr);
    sets.push_back(std::move(entry));
  }
  return sets;
}

std::pair<LaminarFamily, DualAssignment> FamilyFromJson(const json& sets, int vertex_count) {
  if (!sets.is_array()) throw SerializeError("family must be an array of sets");
  if (sets.size() < static_cast<std::size_t>(vertex_count)) throw SerializeError("family misses singletons");
  const std::size_t count = sets.size();
  std::vector<std::vector<int>> vertices(count);
  std::vector<std::optional<int>> parents(count);
  std::vector<std::vector<SetId>> children(count);
  for (std::size_t i = 0; i < count; ++i) {
    const json& entry = sets[i];
    if (Field(entry, "id") != json(i)) throw SerializeError("set ids must be 0, 1, 2, ... in order");
    vertices[i] = IntList(Field(entry, "vertices"), "vertices");
    std::sort(vertices[i].begin(), vertices[i].end());
    const json& parent = Field(entry, "parent");
    if (!parent.is_null()) {
      if (!parent.is_number_integer()) throw SerializeError("parent must be an id or null");
      const auto p = parent.get<std::int64_t>();
      if (p <= static_cast<std::int64_t>(i) || p >= static_cast<std::int64_t>(count)) {
        throw SerializeError("set " + std::to_string(i) + " has an impossible parent");
      }
      parents[i] = static_cast<int>(p);
      children[static_cast<std::size_t>(p)].push_back(MakeSetId(i));
    }
  }

  LaminarFamily family(vertex_count);
  DualAssignment duals(vertex_count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i < static_cast<std::size_t>(vertex_count)) {
      if (vertices[i] != std::vector<int>{static_cast<int>(i)}) {
        throw SerializeError("set " + std::to_string(i) + " must be the singleton {" + std::to_string(i) + "}");
      }
    } else {
      if (children[i].size() != 2) {
        throw SerializeError("set " + std::to_string(i) + " must be the union of exactly two sets");
      }
      try {
        Merge(family, duals, children[i][0], children[i][1]);
      } catch (const LaminarError& e) {
        throw SerializeError("set " + std::to_string(i) + ": " + e.what());
      }
      const std::vector<VertexId> members = family.Members(MakeSetId(i));
      if (members != vertices[i]) {
        throw SerializeError("set " + std::to_string(i) + " does not equal the union of its children");
      }
    }
    const SetId id = MakeSetId(i);
    duals.set_y(id, RationalFromJson(Field(sets[i], "y")));
    const json& saturated = Field(sets[i], "saturated");
    if (!saturated.is_boolean()) throw SerializeError("saturated must be a boolean");
    if (saturated.get<bool>()) duals.Saturate(id);
  }
  return {std::move(family), std::move(duals)};
}

OrderedJson TreeToJson(const Instance& instance, const Tree& tree) {
  OrderedJson out;
  out["vertices"] = tree.vertices;
  out["edges"] = tree.edges;
  OrderedJson endpoints = OrderedJson::array();
  for (EdgeId e : tree.edges) endpoints.push_back({instance.edge(e).u, instance.edge(e).v});
  out["edge_endpoints"] = std::move(endpoints);
  return out;
}

Tree TreeFromJson(const json& tree) {
  Tree result;
  result.vertices = IntList(Field(tree, "vertices"), "tree vertices");
  result.edges = IntList(Field(tree, "edges"), "tree edges");
  std::sort(result.vertices.begin(), result.vertices.end());
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

OrderedJson EventToJson(const Instance& instance, const Event& event) {
  OrderedJson out;
  out["ordinal"] = event.ordinal;
  out["kind"] = EventKindName(event.kind);
  out["epsilon"] = RationalToJson(event.epsilon);
  out["time"] = RationalToJson(event.time);
  switch (event.kind) {
    case Event::Kind::kSaturation:
    case Event::Kind::kPruneRemove:
      out["set"] = static_cast<int>(Index(event.set));
      break;
    case Event::Kind::kMerge:
      out["set"] = static_cast<int>(Index(event.set));
      out["edge"] = event.edge;
      out["endpoints"] = {instance.edge(event.edge).u, instance.edge(event.edge).v};
      out["extremes"] = {static_cast<int>(Index(event.first_extreme)),
                         static_cast<int>(Index(event.second_extreme))};
      break;
    case Event::Kind::kPhaseChange:
      out["phase"] = PhaseName(event.entered);
      break;
  }
  return out;
}

std::string TraceToJsonLines(const Instance& instance, const std::vector<Event>& trace) {
  std::ostringstream out;
  for (const Event& event : trace) out << EventToJson(instance, event).dump() << '\n';
  return out.str();
}

OrderedJson SolutionToJson(const Instance& instance, const Solution& solution) {
  OrderedJson out;
  out["tree"] = TreeToJson(instance, solution.tree);
  AddRational(out, "cost", solution.cost);
  AddRational(out, "penalty", solution.penalty);
  AddRational(out, "objective", solution.objective);
  AddRational(out, "lagrangean_objective", solution.lagrangean_objective);
  AddRational(out, "lower_bound", solution.lower_bound);
  out["certificate_vertex"] = solution.certificate_vertex;
  if (sgn(solution.lower_bound) > 0) {
    AddRational(out, "ratio_vs_lower_bound", solution.objective / solution.lower_bound);
  } else {
    out["ratio_vs_lower_bound"] = nullptr;
  }
  out["growth_iterations"] = solution.growth_iterations;
  out["prune_iterations"] = solution.prune_iterations;
  out["final_active_set"] = static_cast<int>(Index(solution.final_active));
  out["forest"] = solution.forest;
  out["duals"] = FamilyToJson(solution.family, solution.duals);
  return out;
}

OrderedJson ExactResultToJson(const Instance& instance, const ExactResult& result) {
  OrderedJson out;
  out["tree"] = TreeToJson(instance, result.witness);
  AddRational(out, "optimum", result.optimum);
  out["explored"] = result.explored;
  return out;
}

OrderedJson VerificationReportToJson(const VerificationReport& report) {
  OrderedJson checks = OrderedJson::array();
  for (const CheckResult& check : report.checks) {
    OrderedJson entry;
    entry["name"] = check.name;
    entry["lhs"] = RationalToJson(check.lhs);
    entry["rhs"] = RationalToJson(check.rhs);
    entry["pass"] = check.pass;
    if (!check.detail.empty()) entry["detail"] = check.detail;
    checks.push_back(std::move(entry));
  }
  OrderedJson out;
  out["checks"] = std::move(checks);
  out["pass"] = report.pass();
  return out;
}

}  // namespace pcst
