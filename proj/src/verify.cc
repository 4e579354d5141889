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

#include "pcst/verify.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include <boost/dynamic_bitset.hpp>

namespace pcst {
namespace {

using Bits = boost::dynamic_bitset<>;

// Every set of the family as an explicit vertex bitmask.
struct MemberTable {
  int n = 0;
  std::vector<Bits> sets;

  explicit MemberTable(const LaminarFamily& family) : n(family.vertex_count()) {
    sets.reserve(static_cast<std::size_t>(family.size()));
    for (int i = 0; i < family.size(); ++i) {
      Bits bits(static_cast<std::size_t>(n));
      for (VertexId v : family.Members(MakeSetId(static_cast<std::size_t>(i)))) {
        bits.set(static_cast<std::size_t>(v));
      }
      sets.push_back(std::move(bits));
    }
  }

  std::size_t size() const { return sets.size(); }
  bool Has(std::size_t set, VertexId v) const { return sets[set].test(static_cast<std::size_t>(v)); }
};

Bits VertexMask(int n, std::span<const VertexId> vertices) {
  Bits bits(static_cast<std::size_t>(n));
  for (VertexId v : vertices) bits.set(static_cast<std::size_t>(v));
  return bits;
}

Rational PrizeOf(const Instance& instance, const Bits& bits) {
  Rational total = 0;
  for (auto v = bits.find_first(); v != Bits::npos; v = bits.find_next(v)) {
    total += instance.prize(static_cast<VertexId>(v));
  }
  return total;
}

Rational TotalDual(const DualAssignment& duals) {
  Rational total = 0;
  for (int i = 0; i < duals.size(); ++i) total += duals.y(MakeSetId(static_cast<std::size_t>(i)));
  return total;
}

// y(L(e))
Rational EdgeLoad(const MemberTable& table, const DualAssignment& duals, const Edge& edge) {
  Rational load = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.Has(i, edge.u) != table.Has(i, edge.v)) load += duals.y(MakeSetId(i));
  }
  return load;
}

// y(L[X])
Rational InsideLoad(const MemberTable& table, const DualAssignment& duals, const Bits& x) {
  Rational load = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.sets[i].is_subset_of(x)) load += duals.y(MakeSetId(i));
  }
  return load;
}

// y(L_X)
Rational ContainingLoad(const MemberTable& table, const DualAssignment& duals, const Bits& x) {
  Rational load = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (x.is_subset_of(table.sets[i])) load += duals.y(MakeSetId(i));
  }
  return load;
}

// |δ_T X|
int CutSize(const Instance& instance, const Tree& tree, const Bits& x) {
  int count = 0;
  for (EdgeId e : tree.edges) {
    const Edge& edge = instance.edge(e);
    count += x.test(static_cast<std::size_t>(edge.u)) != x.test(static_cast<std::size_t>(edge.v));
  }
  return count;
}

// Whether the subgraph (vertices ∩ x, edges with both ends there) is
// connected. Vacuously true when the intersection is empty.
bool ConnectedWithin(const Instance& instance, const Bits& vertices, std::span<const EdgeId> edges,
                     const Bits& x) {
  const Bits inside = vertices & x;
  const auto start = inside.find_first();
  if (start == Bits::npos) return true;
  std::vector<std::vector<VertexId>> adjacent(static_cast<std::size_t>(instance.vertex_count()));
  for (EdgeId e : edges) {
    const Edge& edge = instance.edge(e);
    if (inside.test(static_cast<std::size_t>(edge.u)) && inside.test(static_cast<std::size_t>(edge.v))) {
      adjacent[static_cast<std::size_t>(edge.u)].push_back(edge.v);
      adjacent[static_cast<std::size_t>(edge.v)].push_back(edge.u);
    }
  }
  Bits seen(inside.size());
  std::queue<std::size_t> queue;
  queue.push(start);
  seen.set(start);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (VertexId w : adjacent[v]) {
      if (!seen.test(static_cast<std::size_t>(w))) {
        seen.set(static_cast<std::size_t>(w));
        queue.push(static_cast<std::size_t>(w));
      }
    }
  }
  return seen == inside;
}

bool IsConnectedSubgraph(const Instance& instance, const Tree& tree) {
  if (tree.vertices.empty()) return false;
  const Bits vertices = VertexMask(instance.vertex_count(), tree.vertices);
  for (EdgeId e : tree.edges) {
    if (e < 0 || e >= instance.edge_count()) return false;
    const Edge& edge = instance.edge(e);
    if (!vertices.test(static_cast<std::size_t>(edge.u)) || !vertices.test(static_cast<std::size_t>(edge.v))) {
      return false;
    }
  }
  return ConnectedWithin(instance, vertices, tree.edges, vertices);
}

void RequireFeasible(const LaminarFamily& family, const DualAssignment& duals, const Instance& instance) {
  if (!CheckFeasibility(family, duals, instance).feasible()) {
    throw VerifyError("duals do not respect edge costs and prizes");
  }
}

void RequireShapes(const LaminarFamily& family, const DualAssignment& duals, const Instance& instance) {
  if (family.vertex_count() != instance.vertex_count()) throw VerifyError("family and instance disagree on n");
  if (duals.size() != family.size()) throw VerifyError("duals and family disagree on |L|");
}

std::string SetName(std::size_t i) { return "set " + std::to_string(i); }

}  // namespace

FeasibilityReport CheckFeasibility(const LaminarFamily& family, const DualAssignment& duals,
                                   const Instance& instance) {
  RequireShapes(family, duals, instance);
  const MemberTable table(family);
  FeasibilityReport report;
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    Rational slack = instance.edge(e).cost - EdgeLoad(table, duals, instance.edge(e));
    if (sgn(slack) < 0) report.violations.push_back({Violation::Kind::kEdgeCost, e, std::move(slack)});
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (sgn(duals.y(MakeSetId(i))) < 0) {
      report.violations.push_back({Violation::Kind::kPrize, static_cast<int>(i), duals.y(MakeSetId(i))});
      continue;
    }
    Rational slack = PrizeOf(instance, table.sets[i]) - InsideLoad(table, duals, table.sets[i]);
    if (sgn(slack) < 0) {
      report.violations.push_back({Violation::Kind::kPrize, static_cast<int>(i), std::move(slack)});
    }
  }
  return report;
}

BoundCheck Lemma21Bound(const LaminarFamily& family, const DualAssignment& duals,
                        const Instance& instance, const Tree& tree) {
  RequireShapes(family, duals, instance);
  if (!IsConnectedSubgraph(instance, tree)) throw VerifyError("T is not a connected subgraph");
  RequireFeasible(family, duals, instance);
  const MemberTable table(family);
  const Bits vertices = VertexMask(instance.vertex_count(), tree.vertices);
  return {TotalDual(duals) - ContainingLoad(table, duals, vertices),
          TreeCost(instance, tree) + TreePenalty(instance, tree)};
}

Certificate ComputeCertificate(const LaminarFamily& family, const DualAssignment& duals,
                               const Instance& instance) {
  RequireShapes(family, duals, instance);
  RequireFeasible(family, duals, instance);
  const MemberTable table(family);
  Certificate cert;
  cert.dual_total = TotalDual(duals);
  cert.chain_sums.assign(static_cast<std::size_t>(instance.vertex_count()), Rational(0));
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Rational& y = duals.y(MakeSetId(i));
    if (sgn(y) == 0) continue;
    const Bits& bits = table.sets[i];
    for (auto v = bits.find_first(); v != Bits::npos; v = bits.find_next(v)) cert.chain_sums[v] += y;
  }
  const auto best = std::max_element(cert.chain_sums.begin(), cert.chain_sums.end());
  cert.minimizing_vertex = static_cast<VertexId>(best - cert.chain_sums.begin());
  cert.lower_bound = cert.dual_total - *best;
  return cert;
}

TreePredicates EvaluateTreePredicates(const LaminarFamily& family, std::span<const SetId> collection,
                                      const Instance& instance, const Tree& tree) {
  const MemberTable table(family);
  const Bits vertices = VertexMask(instance.vertex_count(), tree.vertices);
  TreePredicates result;
  result.l_connected = std::all_of(table.sets.begin(), table.sets.end(), [&](const Bits& set) {
    return ConnectedWithin(instance, vertices, tree.edges, set);
  });
  std::vector<SetId> sorted(collection.begin(), collection.end());
  std::sort(sorted.begin(), sorted.end());
  for (SetId id : sorted) {
    const Bits& set = table.sets.at(Index(id));
    if (CutSize(instance, tree, set) == 1) result.bridges.push_back(id);
    if (!result.wrapped_in && !tree.vertices.empty() && vertices.is_subset_of(set)) result.wrapped_in = id;
  }
  return result;
}

BoundCheck Lemma51Check(const LaminarFamily& family, const DualAssignment& duals,
                        const Instance& instance, const Tree& tree) {
  RequireShapes(family, duals, instance);
  if (!IsTree(instance, tree)) throw VerifyError("T is not a tree");
  const MemberTable table(family);
  const Bits vertices = VertexMask(instance.vertex_count(), tree.vertices);
  Rational half_cut_sum = 0;
  int outside = 0;
  int active = 0;
  for (SetId id : family.MaximalSets()) {
    const Bits& part = table.sets[Index(id)];
    if (!ConnectedWithin(instance, vertices, tree.edges, part)) {
      throw VerifyError("T is not connected within " + SetName(Index(id)));
    }
    const int cut = CutSize(instance, tree, part);
    if (duals.saturated(id)) {
      if (cut == 1) throw VerifyError("T has a bridge in " + SetName(Index(id)));
      if (vertices.is_subset_of(part)) throw VerifyError("T is wrapped in " + SetName(Index(id)));
      continue;
    }
    ++active;
    half_cut_sum += Rational(cut, 2);
    if (!part.intersects(vertices)) ++outside;
  }
  half_cut_sum.canonicalize();
  return {half_cut_sum + outside, Rational(active - 1)};
}

BoundCheck OutputInequality(const LaminarFamily& family, const DualAssignment& duals,
                            const Instance& instance, const Tree& tree, VertexId o) {
  RequireShapes(family, duals, instance);
  const MemberTable table(family);
  Rational edge_loads = 0;
  for (EdgeId e : tree.edges) edge_loads += EdgeLoad(table, duals, instance.edge(e));
  const Bits outside = ~VertexMask(instance.vertex_count(), tree.vertices);
  Bits single(static_cast<std::size_t>(instance.vertex_count()));
  single.set(static_cast<std::size_t>(o));
  return {edge_loads + 2 * InsideLoad(table, duals, outside),
          2 * (TotalDual(duals) - ContainingLoad(table, duals, single))};
}

std::vector<std::string> CheckLaminarStructure(const LaminarFamily& family) {
  const MemberTable table(family);
  std::vector<std::string> problems;
  const auto n = static_cast<std::size_t>(family.vertex_count());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.sets[i].none()) problems.push_back(SetName(i) + " is empty");
    for (std::size_t j = i + 1; j < table.size(); ++j) {
      const Bits& a = table.sets[i];
      const Bits& b = table.sets[j];
      if (a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a)) {
        problems.push_back(SetName(i) + " and " + SetName(j) + " cross");
      }
    }
  }
  for (std::size_t v = 0; v < n && v < table.size(); ++v) {
    if (table.sets[v].count() != 1 || !table.sets[v].test(v)) {
      problems.push_back(SetName(v) + " is not the singleton of vertex " + std::to_string(v));
    }
  }
  Bits covered(n);
  for (SetId id : family.MaximalSets()) {
    if (covered.intersects(table.sets[Index(id)])) problems.push_back("maximal sets overlap");
    covered |= table.sets[Index(id)];
  }
  if (covered.count() != n) problems.push_back("maximal sets do not cover V");
  return problems;
}

std::vector<std::string> CheckGrowthInvariants(const Instance& instance, const LaminarFamily& family,
                                               const DualAssignment& duals,
                                               std::span<const EdgeId> forest) {
  std::vector<std::string> failures = CheckLaminarStructure(family);
  const MemberTable table(family);
  const auto n = static_cast<std::size_t>(instance.vertex_count());

  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&root](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (EdgeId e : forest) {
    const std::size_t a = find(static_cast<std::size_t>(instance.edge(e).u));
    const std::size_t b = find(static_cast<std::size_t>(instance.edge(e).v));
    if (a == b) failures.push_back("F has a cycle through edge " + std::to_string(e));
    root[a] = b;
  }

  const Bits all = ~Bits(n);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!ConnectedWithin(instance, all, forest, table.sets[i])) {
      failures.push_back("F is not connected within " + SetName(i));
    }
  }
  for (const Violation& violation : CheckFeasibility(family, duals, instance).violations) {
    failures.push_back(std::string(violation.kind == Violation::Kind::kEdgeCost ? "edge " : "set ") +
                       std::to_string(violation.index) + " has slack " + ToFractionString(violation.slack));
  }
  for (EdgeId e : forest) {
    if (EdgeLoad(table, duals, instance.edge(e)) != instance.edge(e).cost) {
      failures.push_back("forest edge " + std::to_string(e) + " is not tight");
    }
  }
  for (SetId id : duals.SaturatedSets()) {
    const Bits& set = table.sets[Index(id)];
    if (InsideLoad(table, duals, set) != PrizeOf(instance, set)) {
      failures.push_back("" + SetName(Index(id)) + " is in S but not saturated");
    }
  }
  for (SetId id : family.MaximalSets()) {
    if (duals.saturated(id)) continue;
    const Bits& set = table.sets[Index(id)];
    Bits covered(n);
    for (SetId z : duals.SaturatedSets()) {
      if (table.sets[Index(z)].is_subset_of(set)) covered |= table.sets[Index(z)];
    }
    if (covered == set) failures.push_back("active " + SetName(Index(id)) + " is a union of S members");
  }
  return failures;
}

std::vector<std::string> CheckPruneInvariants(const Instance& instance, const LaminarFamily& family,
                                              const DualAssignment& duals, SetId final_active,
                                              const Tree& tree) {
  std::vector<std::string> failures;
  if (!IsTree(instance, tree)) {
    failures.push_back("T is not a tree");
    return failures;
  }
  const std::vector<SetId> saturated = duals.SaturatedSets();
  if (!EvaluateTreePredicates(family, saturated, instance, tree).l_connected) {
    failures.push_back("T is not L-connected");
  }
  const MemberTable table(family);
  const Bits& m = table.sets.at(Index(final_active));
  const Bits vertices = VertexMask(instance.vertex_count(), tree.vertices);
  if (!vertices.is_subset_of(m)) failures.push_back("T leaves the final active set");
  const Bits rest = m - vertices;
  // Laminarity makes the S members inside `rest` either nested or disjoint,
  // so they partition it iff they cover it.
  Bits covered(rest.size());
  for (SetId z : saturated) {
    if (table.sets[Index(z)].is_subset_of(rest)) covered |= table.sets[Index(z)];
  }
  if (covered != rest) failures.push_back("M \\ V_T is not partitioned by members of S");
  return failures;
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerificationReport AuditSolution(const Instance& instance, const LaminarFamily& family,
                                 const DualAssignment& duals, const Tree& tree) {
  VerificationReport report;
  auto add = [&report](std::string name, Rational lhs, Rational rhs, bool pass, std::string detail = {}) {
    report.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), pass, std::move(detail)});
  };

  const std::vector<std::string> structure = CheckLaminarStructure(family);
  add("laminar_structure", Rational(static_cast<long>(structure.size())), Rational(0), structure.empty(),
      structure.empty() ? "" : structure.front());
  if (!structure.empty()) return report;

  const FeasibilityReport feasibility = CheckFeasibility(family, duals, instance);
  add("dual_feasibility", Rational(static_cast<long>(feasibility.violations.size())), Rational(0),
      feasibility.feasible(),
      feasibility.feasible() ? ""
                             : (feasibility.violations.front().kind == Violation::Kind::kEdgeCost ? "edge " : "set ") +
                                   std::to_string(feasibility.violations.front().index) + " slack " +
                                   ToFractionString(feasibility.violations.front().slack));

  const bool tree_ok = IsTree(instance, tree);
  add("tree", Rational(tree_ok ? 0 : 1), Rational(0), tree_ok, tree_ok ? "" : "output is not a tree");
  if (!tree_ok || !feasibility.feasible()) return report;

  const Certificate cert = ComputeCertificate(family, duals, instance);
  const Rational lagrangean = TreeCost(instance, tree) + 2 * TreePenalty(instance, tree);
  add("certificate", lagrangean, 2 * cert.lower_bound, lagrangean <= 2 * cert.lower_bound,
      "c(T) + 2 pi(V \\ T) <= 2 LB, LB attained at vertex " + std::to_string(cert.minimizing_vertex));

  std::optional<BoundCheck> tightest;
  VertexId tightest_vertex = 0;
  bool all_hold = true;
  for (VertexId o = 0; o < instance.vertex_count(); ++o) {
    BoundCheck check = OutputInequality(family, duals, instance, tree, o);
    all_hold = all_hold && check.holds();
    if (!tightest || check.rhs - check.lhs < tightest->rhs - tightest->lhs) {
      tightest = std::move(check);
      tightest_vertex = o;
    }
  }
  add("output_inequality", tightest->lhs, tightest->rhs, all_hold,
      "every vertex o; tightest at o = " + std::to_string(tightest_vertex));

  const BoundCheck lemma21 = Lemma21Bound(family, duals, instance, tree);
  add("lemma21", lemma21.lhs, lemma21.rhs, lemma21.holds());

  try {
    const BoundCheck lemma51 = Lemma51Check(family, duals, instance, tree);
    add("lemma51", lemma51.lhs, lemma51.rhs, lemma51.holds());
  } catch (const VerifyError& e) {
    add("lemma51", Rational(0), Rational(0), false, std::string("hypotheses fail: ") + e.what());
  }

  const std::vector<SetId> saturated = duals.SaturatedSets();
  const TreePredicates predicates = EvaluateTreePredicates(family, saturated, instance, tree);
  const bool predicates_ok = predicates.l_connected && predicates.bridges.empty() && !predicates.wrapped_in;
  add("tree_predicates", Rational(static_cast<long>(predicates.bridges.size())), Rational(0), predicates_ok,
      predicates_ok ? "L-connected, no bridge in S, not wrapped in S"
                    : std::string(predicates.l_connected ? "" : "not L-connected; ") +
                          std::to_string(predicates.bridges.size()) + " bridges" +
                          (predicates.wrapped_in ? "; wrapped" : ""));
  return report;
}

}  // namespace pcst
