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

#include "pcst/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <string_view>

#include "pcst/verify.hpp"

namespace pcst {

const char* PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kGrowth: return "growth";
    case Phase::kPrune: return "prune";
    case Phase::kDone: return "done";
  }
  return "?";
}

const char* EventKindName(Event::Kind kind) {
  switch (kind) {
    case Event::Kind::kSaturation: return "saturation";
    case Event::Kind::kMerge: return "merge";
    case Event::Kind::kPruneRemove: return "prune_remove";
    case Event::Kind::kPhaseChange: return "phase_change";
  }
  return "?";
}

bool ShouldCheckInvariants(const SolveOptions& options, int vertex_count) {
  if (const char* env = std::getenv("PCST_CHECK"); env != nullptr && std::string_view(env) == "1") {
    return true;
  }
  return options.check_invariants.value_or(vertex_count <= 64);
}

SolverState::SolverState(const Instance& instance, bool check_invariants, bool emit_trace)
    : instance_(&instance),
      check_invariants_(check_invariants),
      emit_trace_(emit_trace),
      family_(instance.vertex_count()),
      duals_(instance.vertex_count()),
      time_(0),
      active_count_(instance.vertex_count()),
      frozen_chain_(static_cast<std::size_t>(instance.vertex_count()), Rational(0)),
      inside_sum_(static_cast<std::size_t>(instance.vertex_count()), Rational(0)),
      prize_mass_(instance.prizes()) {
  external_edges_.resize(static_cast<std::size_t>(instance.edge_count()));
  for (EdgeId e = 0; e < instance.edge_count(); ++e) external_edges_[static_cast<std::size_t>(e)] = e;
}

std::vector<SetId> SolverState::ActiveMaximals() const {
  std::vector<SetId> active;
  for (SetId id : family_.MaximalSets()) {
    if (!duals_.saturated(id)) active.push_back(id);
  }
  return active;
}

Rational SolverState::ChainSum(VertexId v) const {
  return frozen_chain_[static_cast<std::size_t>(v)] + duals_.y(family_.MaximalOf(v));
}

EpsilonStep SolverState::ComputeEpsilon() const {
  if (phase_ != Phase::kGrowth || active_count_ < 2) {
    throw std::logic_error("ComputeEpsilon needs the growth phase with two or more active sets");
  }
  EpsilonStep step;
  bool have_best = false;
  auto offer = [&](const Rational& value, const PendingEvent& event) {
    if (!have_best || value < step.epsilon) {
      step.epsilon = value;
      step.pending.clear();
      have_best = true;
    }
    if (value == step.epsilon) step.pending.push_back(event);
  };

  Rational value;
  for (SetId id : ActiveMaximals()) {
    value = prize_mass_[Index(id)];
    value -= inside_sum_[Index(id)];
    offer(value, {Event::Kind::kSaturation, id});
  }
  for (EdgeId e : external_edges_) {
    const Edge& edge = instance_->edge(e);
    const SetId a = family_.MaximalOf(edge.u);
    const SetId b = family_.MaximalOf(edge.v);
    const int growing = (IsActive(a) ? 1 : 0) + (IsActive(b) ? 1 : 0);
    if (a == b || growing == 0) continue;
    value = edge.cost;
    value -= frozen_chain_[static_cast<std::size_t>(edge.u)];
    value -= frozen_chain_[static_cast<std::size_t>(edge.v)];
    value -= duals_.y(a);
    value -= duals_.y(b);
    if (growing == 2) mpq_div_2exp(value.get_mpq_t(), value.get_mpq_t(), 1);
    if (have_best && value > step.epsilon) continue;
    offer(value, {Event::Kind::kMerge, SetId{}, e, a, b});
  }
  if (!have_best) throw InvariantViolation("no growth event exists");
  if (sgn(step.epsilon) < 0) {
    throw InvariantViolation("negative growth step " + ToFractionString(step.epsilon));
  }
  return step;
}

void SolverState::Raise(const Rational& epsilon) {
  if (sgn(epsilon) == 0) return;
  for (SetId id : ActiveMaximals()) {
    duals_.Raise(id, epsilon);
    inside_sum_[Index(id)] += epsilon;
  }
  time_ += epsilon;
}

void SolverState::Apply(const PendingEvent& pending, const Rational& epsilon) {
  Event event;
  event.kind = pending.kind;
  event.epsilon = epsilon;
  if (pending.kind == Event::Kind::kSaturation) {
    duals_.Saturate(pending.set);
    --active_count_;
    event.set = pending.set;
  } else {
    const SetId a = pending.first_extreme;
    const SetId b = pending.second_extreme;
    const int was_active = (IsActive(a) ? 1 : 0) + (IsActive(b) ? 1 : 0);
    const SetId merged = Merge(family_, duals_, a, b);
    for (SetId side : {a, b}) {
      for (VertexId v : family_.Members(side)) frozen_chain_[static_cast<std::size_t>(v)] += duals_.y(side);
    }
    inside_sum_.push_back(inside_sum_[Index(a)] + inside_sum_[Index(b)]);
    prize_mass_.push_back(prize_mass_[Index(a)] + prize_mass_[Index(b)]);
    forest_.push_back(pending.edge);
    active_count_ += 1 - was_active;
    std::erase_if(external_edges_, [this](EdgeId e) {
      return family_.MaximalOf(instance_->edge(e).u) == family_.MaximalOf(instance_->edge(e).v);
    });
    event.set = merged;
    event.edge = pending.edge;
    event.first_extreme = a;
    event.second_extreme = b;
  }
  Record(std::move(event));
}

void SolverState::Record(Event event) {
  event.ordinal = ordinal_++;
  event.time = time_;
  if (emit_trace_) trace_.push_back(std::move(event));
}

void SolverState::CheckGrowth() const {
  const std::vector<std::string> failures =
      CheckGrowthInvariants(*instance_, family_, duals_, forest_);
  if (!failures.empty()) {
    throw InvariantViolation("growth iteration " + std::to_string(growth_iterations_) + ": " +
                             failures.front());
  }
}

void SolverState::GrowthStep() {
  if (phase_ != Phase::kGrowth) throw std::logic_error("GrowthStep outside the growth phase");
  const EpsilonStep step = ComputeEpsilon();
  Raise(step.epsilon);
  Apply(step.pending.front(), step.epsilon);
  ++growth_iterations_;
  if (check_invariants_) CheckGrowth();
}

void SolverState::RunPhase1() {
  if (phase_ != Phase::kGrowth) throw std::logic_error("RunPhase1 outside the growth phase");
  if (check_invariants_) CheckGrowth();
  while (active_count_ > 1) GrowthStep();
  // Each step lowers |L*| + |L* \ S| by at least one.
  if (check_invariants_ && growth_iterations_ > std::max(0, 2 * instance_->vertex_count() - 2)) {
    throw InvariantViolation("growth phase took " + std::to_string(growth_iterations_) + " iterations");
  }
  phase_ = Phase::kPrune;
  Event change;
  change.entered = Phase::kPrune;
  change.epsilon = 0;
  Record(std::move(change));
}

Solution SolverState::RunPhase2() {
  if (phase_ != Phase::kPrune) throw std::logic_error("RunPhase2 outside the pruning phase");
  const Instance& instance = *instance_;
  const std::vector<SetId> active = ActiveMaximals();
  const SetId final_active = active.front();

  const auto n = static_cast<std::size_t>(instance.vertex_count());
  std::vector<bool> in_tree(n);
  for (VertexId v : family_.Members(final_active)) in_tree[static_cast<std::size_t>(v)] = true;
  std::vector<bool> tree_edge(static_cast<std::size_t>(instance.edge_count()));
  for (EdgeId e : forest_) {
    const Edge& edge = instance.edge(e);
    if (in_tree[static_cast<std::size_t>(edge.u)] && in_tree[static_cast<std::size_t>(edge.v)]) {
      tree_edge[static_cast<std::size_t>(e)] = true;
    }
  }

  // crossing[X] = |δ_T X|: a tree edge crosses exactly the sets strictly
  // below the meeting point of its endpoint chains.
  std::vector<int> crossing(static_cast<std::size_t>(family_.size()));
  auto walk = [&](EdgeId e, int delta) {
    std::optional<SetId> x = family_.Leaf(instance.edge(e).u);
    std::optional<SetId> y = family_.Leaf(instance.edge(e).v);
    while (*x != *y) {
      if (Index(*x) < Index(*y)) {
        crossing[Index(*x)] += delta;
        x = family_.Parent(*x);
      } else {
        crossing[Index(*y)] += delta;
        y = family_.Parent(*y);
      }
    }
  };
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    if (tree_edge[static_cast<std::size_t>(e)]) walk(e, +1);
  }

  auto snapshot = [&] {
    Tree tree;
    for (VertexId v = 0; v < instance.vertex_count(); ++v) {
      if (in_tree[static_cast<std::size_t>(v)]) tree.vertices.push_back(v);
    }
    for (EdgeId e = 0; e < instance.edge_count(); ++e) {
      if (tree_edge[static_cast<std::size_t>(e)]) tree.edges.push_back(e);
    }
    return tree;
  };
  auto check = [&](int iteration) {
    if (!check_invariants_) return;
    const std::vector<std::string> failures =
        CheckPruneInvariants(instance, family_, duals_, final_active, snapshot());
    if (!failures.empty()) {
      throw InvariantViolation("pruning iteration " + std::to_string(iteration) + ": " + failures.front());
    }
  };

  const std::vector<SetId> saturated = duals_.SaturatedSets();
  int prune_iterations = 0;
  check(prune_iterations);
  for (;;) {
    const auto bridge = std::find_if(saturated.begin(), saturated.end(),
                                     [&](SetId z) { return crossing[Index(z)] == 1; });
    if (bridge == saturated.end()) break;
    for (VertexId v : family_.Members(*bridge)) {
      if (!in_tree[static_cast<std::size_t>(v)]) continue;
      in_tree[static_cast<std::size_t>(v)] = false;
      for (EdgeId e : instance.incident(v)) {
        if (!tree_edge[static_cast<std::size_t>(e)]) continue;
        tree_edge[static_cast<std::size_t>(e)] = false;
        walk(e, -1);
      }
    }
    Event removal;
    removal.kind = Event::Kind::kPruneRemove;
    removal.epsilon = 0;
    removal.set = *bridge;
    Record(std::move(removal));
    ++prune_iterations;
    check(prune_iterations);
  }
  if (check_invariants_ && prune_iterations > static_cast<int>(saturated.size())) {
    throw InvariantViolation("pruning phase took more than |S| iterations");
  }
  phase_ = Phase::kDone;
  Event change;
  change.entered = Phase::kDone;
  change.epsilon = 0;
  Record(std::move(change));

  Solution solution;
  solution.tree = snapshot();
  solution.cost = TreeCost(instance, solution.tree);
  solution.penalty = TreePenalty(instance, solution.tree);
  solution.objective = solution.cost + solution.penalty;
  solution.lagrangean_objective = solution.cost + 2 * solution.penalty;
  const Certificate cert = ComputeCertificate(family_, duals_, instance);
  solution.lower_bound = cert.lower_bound;
  solution.certificate_vertex = cert.minimizing_vertex;
  solution.family = family_;
  solution.duals = duals_;
  solution.forest = forest_;
  solution.final_active = final_active;
  solution.trace = trace_;
  solution.growth_iterations = growth_iterations_;
  solution.prune_iterations = prune_iterations;
  if (check_invariants_ && solution.lagrangean_objective > 2 * solution.lower_bound) {
    throw InvariantViolation("certificate fails: c(T) + 2 pi = " + ToFractionString(solution.lagrangean_objective) +
                             " > 2 LB = " + ToFractionString(2 * solution.lower_bound));
  }
  return solution;
}

Solution Solve(const Instance& instance, const SolveOptions& options) {
  SolverState state(instance, ShouldCheckInvariants(options, instance.vertex_count()), options.emit_trace);
  state.RunPhase1();
  return state.RunPhase2();
}

}  // namespace pcst
