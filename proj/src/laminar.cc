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

#include "pcst/laminar.hpp"

#include <algorithm>
#include <string>

namespace pcst {

LaminarFamily::LaminarFamily(int vertex_count)
    : vertex_count_(vertex_count),
      parent_(static_cast<std::size_t>(vertex_count), -1),
      children_(static_cast<std::size_t>(vertex_count)),
      member_count_(static_cast<std::size_t>(vertex_count), 1),
      representative_(static_cast<std::size_t>(vertex_count)),
      maximal_count_(vertex_count),
      uf_parent_(static_cast<std::size_t>(vertex_count)),
      uf_size_(static_cast<std::size_t>(vertex_count), 1),
      uf_set_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 1) throw LaminarError("family needs at least one vertex");
  for (VertexId v = 0; v < vertex_count; ++v) {
    uf_parent_[static_cast<std::size_t>(v)] = v;
    representative_[static_cast<std::size_t>(v)] = v;
    uf_set_[static_cast<std::size_t>(v)] = MakeSetId(static_cast<std::size_t>(v));
  }
}

SetId LaminarFamily::Leaf(VertexId v) const {
  if (v < 0 || v >= vertex_count_) throw LaminarError("vertex out of range");
  return MakeSetId(static_cast<std::size_t>(v));
}

std::optional<SetId> LaminarFamily::Parent(SetId id) const {
  const auto p = parent_.at(Index(id));
  if (p < 0) return std::nullopt;
  return MakeSetId(static_cast<std::size_t>(p));
}

std::span<const SetId> LaminarFamily::Children(SetId id) const {
  if (Index(id) < static_cast<std::size_t>(vertex_count_)) return {};
  return children_.at(Index(id));
}

bool LaminarFamily::IsMaximal(SetId id) const { return parent_.at(Index(id)) < 0; }

std::vector<SetId> LaminarFamily::MaximalSets() const {
  std::vector<SetId> result;
  result.reserve(static_cast<std::size_t>(maximal_count_));
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    if (parent_[i] < 0) result.push_back(MakeSetId(i));
  }
  return result;
}

VertexId LaminarFamily::FindRoot(VertexId v) const {
  while (uf_parent_[static_cast<std::size_t>(v)] != v) v = uf_parent_[static_cast<std::size_t>(v)];
  return v;
}

SetId LaminarFamily::MaximalOf(VertexId v) const {
  Leaf(v);
  return uf_set_[static_cast<std::size_t>(FindRoot(v))];
}

std::vector<VertexId> LaminarFamily::Members(SetId id) const {
  std::vector<VertexId> members;
  members.reserve(static_cast<std::size_t>(MemberCount(id)));
  std::vector<SetId> stack{id};
  while (!stack.empty()) {
    const SetId top = stack.back();
    stack.pop_back();
    if (Index(top) < static_cast<std::size_t>(vertex_count_)) {
      members.push_back(static_cast<VertexId>(Index(top)));
    } else {
      stack.push_back(children_[Index(top)][0]);
      stack.push_back(children_[Index(top)][1]);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<SetId> LaminarFamily::Chain(VertexId v) const {
  std::vector<SetId> chain{Leaf(v)};
  while (const auto p = Parent(chain.back())) chain.push_back(*p);
  return chain;
}

bool LaminarFamily::Contains(SetId id, VertexId v) const {
  for (std::optional<SetId> cur = Leaf(v); cur && Index(*cur) <= Index(id); cur = Parent(*cur)) {
    if (*cur == id) return true;
  }
  return false;
}

std::optional<SetId> LaminarFamily::LowestCommonAncestor(SetId a, SetId b) const {
  std::optional<SetId> x = a;
  std::optional<SetId> y = b;
  while (x && y && *x != *y) {
    if (Index(*x) < Index(*y)) {
      x = Parent(*x);
    } else {
      y = Parent(*y);
    }
  }
  if (x && y) return x;
  return std::nullopt;
}

SetId LaminarFamily::Merge(SetId a, SetId b) {
  if (!Valid(a) || !Valid(b)) throw LaminarError("unknown set id");
  if (a == b) throw LaminarError("cannot merge a set with itself");
  if (!IsMaximal(a) || !IsMaximal(b)) throw LaminarError("merge arguments must be maximal");

  const SetId merged = MakeSetId(parent_.size());
  parent_.push_back(-1);
  children_.push_back({a, b});
  member_count_.push_back(MemberCount(a) + MemberCount(b));
  representative_.push_back(representative_[Index(a)]);
  parent_[Index(a)] = static_cast<std::int32_t>(Index(merged));
  parent_[Index(b)] = static_cast<std::int32_t>(Index(merged));
  --maximal_count_;

  VertexId ra = FindRoot(representative_[Index(a)]);
  VertexId rb = FindRoot(representative_[Index(b)]);
  if (uf_size_[static_cast<std::size_t>(ra)] < uf_size_[static_cast<std::size_t>(rb)]) std::swap(ra, rb);
  uf_parent_[static_cast<std::size_t>(rb)] = ra;
  uf_size_[static_cast<std::size_t>(ra)] += uf_size_[static_cast<std::size_t>(rb)];
  uf_set_[static_cast<std::size_t>(ra)] = merged;
  return merged;
}

std::vector<SetId> DualAssignment::SaturatedSets() const {
  std::vector<SetId> result;
  for (std::size_t i = 0; i < saturated_.size(); ++i) {
    if (saturated_[i]) result.push_back(MakeSetId(i));
  }
  return result;
}

SetId DualAssignment::Append() {
  y_.emplace_back(0);
  saturated_.push_back(false);
  return MakeSetId(y_.size() - 1);
}

std::pair<LaminarFamily, DualAssignment> InitSingletons(const Instance& instance) {
  LaminarFamily family(instance.vertex_count());
  DualAssignment duals(instance.vertex_count());
  return {std::move(family), std::move(duals)};
}

SetId Merge(LaminarFamily& family, DualAssignment& duals, SetId l1, SetId l2) {
  if (duals.size() != family.size()) throw LaminarError("duals out of sync with family");
  const SetId merged = family.Merge(l1, l2);
  duals.Append();
  return merged;
}

namespace {

std::vector<int> CountInside(const LaminarFamily& family, std::span<const VertexId> vertices) {
  std::vector<bool> mark(static_cast<std::size_t>(family.vertex_count()));
  for (VertexId v : vertices) {
    if (v < 0 || v >= family.vertex_count()) throw LaminarError("vertex out of range");
    mark[static_cast<std::size_t>(v)] = true;
  }
  // Children precede parents in id order.
  std::vector<int> inside(static_cast<std::size_t>(family.size()));
  for (std::size_t i = 0; i < inside.size(); ++i) {
    const SetId id = MakeSetId(i);
    if (i < mark.size()) {
      inside[i] = mark[i] ? 1 : 0;
    } else {
      for (SetId child : family.Children(id)) inside[i] += inside[Index(child)];
    }
  }
  return inside;
}

}  // namespace

std::vector<SetId> SubsetsBelow(const LaminarFamily& family, std::span<const VertexId> vertices) {
  const std::vector<int> inside = CountInside(family, vertices);
  std::vector<SetId> result;
  for (std::size_t i = 0; i < inside.size(); ++i) {
    if (inside[i] == family.MemberCount(MakeSetId(i))) result.push_back(MakeSetId(i));
  }
  return result;
}

std::vector<SetId> SupersetsOf(const LaminarFamily& family, std::span<const VertexId> vertices) {
  std::vector<VertexId> distinct(vertices.begin(), vertices.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::vector<int> inside = CountInside(family, distinct);
  std::vector<SetId> result;
  for (std::size_t i = 0; i < inside.size(); ++i) {
    if (inside[i] == static_cast<int>(distinct.size())) result.push_back(MakeSetId(i));
  }
  return result;
}

std::vector<SetId> CrossingSets(const LaminarFamily& family, const Instance& instance, EdgeId e) {
  if (e < 0 || e >= instance.edge_count()) throw LaminarError("unknown edge " + std::to_string(e));
  const Edge& edge = instance.edge(e);
  std::vector<SetId> result;
  std::optional<SetId> x = family.Leaf(edge.u);
  std::optional<SetId> y = family.Leaf(edge.v);
  // Walk both chains up to their meeting point; everything strictly below it
  // holds exactly one endpoint.
  while (x || y) {
    if (x && y && *x == *y) break;
    if (x && (!y || Index(*x) < Index(*y))) {
      result.push_back(*x);
      x = family.Parent(*x);
    } else {
      result.push_back(*y);
      y = family.Parent(*y);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

Rational DualSum(const DualAssignment& duals, std::span<const SetId> ids) {
  Rational total = 0;
  for (SetId id : ids) total += duals.y(id);
  return total;
}

Rational RespectsCSlack(const LaminarFamily& family, const DualAssignment& duals,
                        const Instance& instance, EdgeId e) {
  const std::vector<SetId> crossing = CrossingSets(family, instance, e);
  return instance.edge(e).cost - DualSum(duals, crossing);
}

Rational RespectsPiSlack(const LaminarFamily& family, const DualAssignment& duals,
                         const Instance& instance, SetId x) {
  if (!family.Valid(x)) throw LaminarError("unknown set id");
  const std::vector<VertexId> members = family.Members(x);
  Rational prize = 0;
  for (VertexId v : members) prize += instance.prize(v);
  const std::vector<SetId> below = SubsetsBelow(family, members);
  return prize - DualSum(duals, below);
}

}  // namespace pcst
