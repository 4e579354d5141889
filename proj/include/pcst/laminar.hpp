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

#ifndef PCST_LAMINAR_HPP_
#define PCST_LAMINAR_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pcst/instance.hpp"
#include "pcst/rational.hpp"

namespace pcst {

// Handle of a set in a LaminarFamily. Dense, assigned in creation order,
// never reused. The singleton {v} has id v.
enum class SetId : std::int32_t {};

constexpr std::size_t Index(SetId id) { return static_cast<std::size_t>(id); }
constexpr SetId MakeSetId(std::size_t index) { return static_cast<SetId>(index); }

class LaminarError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Append-only laminar collection over vertices [0, n) that always contains
// every singleton. Containment is a forest: each set's parent is its minimal
// strict superset, and a parent is always created after its children, so
// parent ids are larger than child ids. The maximal sets partition V.
class LaminarFamily {
 public:
  explicit LaminarFamily(int vertex_count);

  int vertex_count() const { return vertex_count_; }
  int size() const { return static_cast<int>(parent_.size()); }
  bool Valid(SetId id) const { return Index(id) < parent_.size(); }

  SetId Leaf(VertexId v) const;
  std::optional<SetId> Parent(SetId id) const;
  // Empty for singletons, exactly two sets otherwise.
  std::span<const SetId> Children(SetId id) const;
  bool IsMaximal(SetId id) const;
  int MaximalCount() const { return maximal_count_; }
  // Ascending ids.
  std::vector<SetId> MaximalSets() const;
  // The maximal set containing v.
  SetId MaximalOf(VertexId v) const;
  // Member vertices, ascending.
  std::vector<VertexId> Members(SetId id) const;
  int MemberCount(SetId id) const { return member_count_.at(Index(id)); }
  // Leaf-to-root chain of v, i.e. every set containing v.
  std::vector<SetId> Chain(VertexId v) const;
  bool Contains(SetId id, VertexId v) const;
  // Smallest set containing both, if any.
  std::optional<SetId> LowestCommonAncestor(SetId a, SetId b) const;

  // Adds a ∪ b as a new maximal set and returns its id. Throws LaminarError
  // unless a and b are distinct maximal sets.
  SetId Merge(SetId a, SetId b);

 private:
  VertexId FindRoot(VertexId v) const;

  int vertex_count_;
  std::vector<std::int32_t> parent_;  // -1 for maximal sets
  std::vector<std::array<SetId, 2>> children_;  // unused for singletons
  std::vector<int> member_count_;
  std::vector<VertexId> representative_;  // some member vertex
  int maximal_count_;
  // Union-find over vertices; uf_set_ maps a root vertex to its maximal set.
  std::vector<VertexId> uf_parent_;
  std::vector<int> uf_size_;
  std::vector<SetId> uf_set_;
};

// The dual function y over the family plus the saturated subcollection S.
class DualAssignment {
 public:
  DualAssignment() = default;
  explicit DualAssignment(int set_count)
      : y_(static_cast<std::size_t>(set_count)), saturated_(static_cast<std::size_t>(set_count)) {}

  int size() const { return static_cast<int>(y_.size()); }
  const Rational& y(SetId id) const { return y_.at(Index(id)); }
  void set_y(SetId id, Rational value) { y_.at(Index(id)) = std::move(value); }
  void Raise(SetId id, const Rational& amount) { y_.at(Index(id)) += amount; }

  bool saturated(SetId id) const { return saturated_.at(Index(id)); }
  void Saturate(SetId id) { saturated_.at(Index(id)) = true; }
  // Ascending ids.
  std::vector<SetId> SaturatedSets() const;

  // Registers a freshly created set with y = 0, unsaturated.
  SetId Append();

 private:
  std::vector<Rational> y_;
  std::vector<bool> saturated_;
};

// L = {{v} : v ∈ V}, S = ∅, y = 0.
std::pair<LaminarFamily, DualAssignment> InitSingletons(const Instance& instance);

// Adds l1 ∪ l2 with y = 0 outside S. Both arguments stay in the family.
SetId Merge(LaminarFamily& family, DualAssignment& duals, SetId l1, SetId l2);

// L[X]: the sets contained in X. Ascending ids.
std::vector<SetId> SubsetsBelow(const LaminarFamily& family, std::span<const VertexId> vertices);
// L_X: the sets containing X; every set when X is empty. Ascending ids.
std::vector<SetId> SupersetsOf(const LaminarFamily& family, std::span<const VertexId> vertices);
// L(e): the sets with exactly one endpoint of e. Ascending ids.
std::vector<SetId> CrossingSets(const LaminarFamily& family, const Instance& instance, EdgeId e);

// y(L') for the listed sets.
Rational DualSum(const DualAssignment& duals, std::span<const SetId> ids);

// c_e − y(L(e)); negative when the edge constraint is violated.
Rational RespectsCSlack(const LaminarFamily& family, const DualAssignment& duals,
                        const Instance& instance, EdgeId e);
// π(X) − y(L[X]); negative when the prize constraint is violated.
Rational RespectsPiSlack(const LaminarFamily& family, const DualAssignment& duals,
                         const Instance& instance, SetId x);

}  // namespace pcst

#endif  // PCST_LAMINAR_HPP_
