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

#ifndef PCST_SERIALIZE_HPP_
#define PCST_SERIALIZE_HPP_

// JSON shapes shared by the CLI and tests. Rationals are always "p/q"
// strings; fields ending in "_approx" carry a double for humans only.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pcst/instance.hpp"
#include "pcst/laminar.hpp"
#include "pcst/oracle.hpp"
#include "pcst/solver.hpp"
#include "pcst/verify.hpp"

namespace pcst {

using OrderedJson = nlohmann::ordered_json;

// A document does not describe a consistent object.
class SerializeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OrderedJson RationalToJson(const Rational& value);
Rational RationalFromJson(const nlohmann::json& value);

// [{ "id": k, "vertices": [...], "y": "p/q", "saturated": bool, "parent": k|null }, ...]
OrderedJson FamilyToJson(const LaminarFamily& family, const DualAssignment& duals);
// Rebuilds the family by replaying merges in id order; throws SerializeError
// unless the entries describe exactly such a history.
std::pair<LaminarFamily, DualAssignment> FamilyFromJson(const nlohmann::json& sets, int vertex_count);

OrderedJson TreeToJson(const Instance& instance, const Tree& tree);
Tree TreeFromJson(const nlohmann::json& tree);

OrderedJson EventToJson(const Instance& instance, const Event& event);
// One event per line.
std::string TraceToJsonLines(const Instance& instance, const std::vector<Event>& trace);

OrderedJson SolutionToJson(const Instance& instance, const Solution& solution);
OrderedJson ExactResultToJson(const Instance& instance, const ExactResult& result);
OrderedJson VerificationReportToJson(const VerificationReport& report);

}  // namespace pcst

#endif  // PCST_SERIALIZE_HPP_
