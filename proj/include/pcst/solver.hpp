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

#ifndef PCST_SOLVER_HPP_
#define PCST_SOLVER_HPP_

// Primal-dual 2-approximation for the prize-collecting Steiner tree problem
// (the single-pass moat-growing variant without root guessing).
//
// Growth phase: duals grow uniformly on every active maximal set (a maximal
// set not yet saturated) until either an active set saturates its prize
// constraint or an edge between two maximal sets, at least one of them
// active, becomes tight. Saturation moves the set into S; a tight edge joins
// the forest and its two extremes are merged into a new maximal set. The
// phase ends when exactly one active maximal set M is left.
//
// Pruning phase: starting from the forest restricted to M, repeatedly remove
// any saturated set crossed by exactly one tree edge.
//
// The returned tree T satisfies c(T) + 2π(V \ V_T) ≤ 2·LB ≤ 2·opt, where LB
// is the dual certificate computed from the final duals.
//
// All arithmetic is exact. Ties are broken deterministically: saturation
// before merge, then smallest set id or edge id; pruning removes the
// smallest violating set id first.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcst/instance.hpp"
#include "pcst/laminar.hpp"
#include "pcst/rational.hpp"

namespace pcst {

enum class Phase { kGrowth, kPrune, kDone };

const char* PhaseName(Phase phase);

struct Event {
  enum class Kind { kSaturation, kMerge, kPruneRemove, kPhaseChange };

  Kind kind = Kind::kPhaseChange;
  int ordinal = 0;
  Rational epsilon;
  Rational time;  // cumulative growth, for readability only
  // Saturated set, merged set, or pruned set. Unused for phase changes.
  SetId set{};
  // Merge only: the tight edge and the two extremes that were joined.
  EdgeId edge = -1;
  SetId first_extreme{};
  SetId second_extreme{};
  // Phase change only: the phase being entered.
  Phase entered = Phase::kGrowth;
};

const char* EventKindName(Event::Kind kind);

// A candidate event at the current growth step. For saturations `set` is the
// active maximal set; for merges `edge` is the edge and the extremes are the
// maximal sets holding its ends.
struct PendingEvent {
  Event::Kind kind;
  SetId set{};
  EdgeId edge = -1;
  SetId first_extreme{};
  SetId second_extreme{};
};

struct EpsilonStep {
  Rational epsilon;
  std::vector<PendingEvent> pending;  // saturations by set id, then merges by edge id
};

// Raised when invariant checking is on and a state invariant fails. Always a
// solver bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SolveOptions {
  // Defaults to on for n ≤ 64; PCST_CHECK=1 in the environment forces it on.
  std::optional<bool> check_invariants;
  bool emit_trace = true;
};

bool ShouldCheckInvariants(const SolveOptions& options, int vertex_count);

struct Solution {
  Tree tree;
  Rational cost;                  // c(T)
  Rational penalty;               // π(V \ V_T)
  Rational objective;             // c(T) + π(V \ V_T)
  Rational lagrangean_objective;  // c(T) + 2π(V \ V_T)
  Rational lower_bound;           // min_o y(L \ L_{o})
  VertexId certificate_vertex = 0;
  LaminarFamily family{1};
  DualAssignment duals;
  std::vector<EdgeId> forest;  // F at the end of the growth phase, in insertion order
  SetId final_active{};        // M
  std::vector<Event> trace;
  int growth_iterations = 0;
  int prune_iterations = 0;
};

class SolverState {
 public:
  explicit SolverState(const Instance& instance, bool check_invariants = false, bool emit_trace = true);

  const Instance& instance() const { return *instance_; }
  Phase phase() const { return phase_; }
  const LaminarFamily& family() const { return family_; }
  const DualAssignment& duals() const { return duals_; }
  const std::vector<EdgeId>& forest() const { return forest_; }
  const std::vector<Event>& trace() const { return trace_; }
  const Rational& time() const { return time_; }
  int growth_iterations() const { return growth_iterations_; }

  // L* \ S in id order.
  std::vector<SetId> ActiveMaximals() const;
  int ActiveCount() const { return active_count_; }

  // Largest uniform raise keeping the duals feasible, and every event that
  // attains it. Requires the growth phase with at least two active sets.
  EpsilonStep ComputeEpsilon() const;

  // One growth iteration: raise, then apply exactly one pending event.
  void GrowthStep();

  // Growth steps until one active set remains; enters the pruning phase.
  void RunPhase1();

  // Prunes F[M] and returns the finished solution; the state is left Done.
  Solution RunPhase2();

 private:
  bool IsActive(SetId id) const { return family_.IsMaximal(id) && !duals_.saturated(id); }
  // y(L_{v}), from the frozen non-maximal part plus the live maximal dual.
  Rational ChainSum(VertexId v) const;
  void Raise(const Rational& epsilon);
  void Apply(const PendingEvent& event, const Rational& epsilon);
  void Record(Event event);
  void CheckGrowth() const;

  const Instance* instance_;
  bool check_invariants_;
  bool emit_trace_;
  Phase phase_ = Phase::kGrowth;
  LaminarFamily family_;
  DualAssignment duals_;
  std::vector<EdgeId> forest_;
  std::vector<Event> trace_;
  Rational time_;
  int ordinal_ = 0;
  int growth_iterations_ = 0;
  int active_count_ = 0;

  std::vector<Rational> frozen_chain_;  // per vertex: y over non-maximal sets holding it
  std::vector<Rational> inside_sum_;    // per set X: y(L[X])
  std::vector<Rational> prize_mass_;    // per set X: π(X)
  std::vector<EdgeId> external_edges_;  // edges whose ends lie in different maximal sets
};

Solution Solve(const Instance& instance, const SolveOptions& options = {});

}  // namespace pcst

#endif  // PCST_SOLVER_HPP_
