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

#ifndef PCST_VERIFY_HPP_
#define PCST_VERIFY_HPP_

// Independent checks of a dual solution and a tree against an instance.
//
// Everything here is recomputed from scratch on explicit vertex-membership
// tables: no chain sums, no union-find, nothing shared with the solver's
// incremental bookkeeping. The functions are pure and may run concurrently.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcst/instance.hpp"
#include "pcst/laminar.hpp"
#include "pcst/rational.hpp"

namespace pcst {

// A check was asked for whose hypotheses do not hold.
class VerifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Violation {
  enum class Kind { kEdgeCost, kPrize };
  Kind kind;
  int index;      // edge id or set id
  Rational slack;  // strictly negative
};

struct FeasibilityReport {
  std::vector<Violation> violations;
  bool feasible() const { return violations.empty(); }
};

// Lists every edge with y(L(e)) > c_e and every set X with y(L[X]) > π(X).
FeasibilityReport CheckFeasibility(const LaminarFamily& family, const DualAssignment& duals,
                                   const Instance& instance);

struct BoundCheck {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs <= rhs; }
};

// y(L \ L_T) against c(T) + π(V \ V_T). T must be connected and the duals
// feasible; throws VerifyError otherwise.
BoundCheck Lemma21Bound(const LaminarFamily& family, const DualAssignment& duals,
                        const Instance& instance, const Tree& tree);

struct Certificate {
  Rational lower_bound;              // min_o y(L \ L_{o})
  VertexId minimizing_vertex = 0;    // smallest o attaining it
  std::vector<Rational> chain_sums;  // y(L_{o}) per vertex
  Rational dual_total;               // y(L)
};

// LB ≤ opt for any feasible duals; the solver's output additionally has
// c(T) + 2π(V \ V_T) ≤ 2·LB. Throws VerifyError on infeasible duals.
Certificate ComputeCertificate(const LaminarFamily& family, const DualAssignment& duals,
                               const Instance& instance);

struct TreePredicates {
  bool l_connected = false;
  std::vector<SetId> bridges;       // members Z of the collection with |δ_T Z| = 1
  std::optional<SetId> wrapped_in;  // smallest member containing V_T
};

// L-connectivity is taken over the whole family; bridges and wrapping over
// `collection`.
TreePredicates EvaluateTreePredicates(const LaminarFamily& family, std::span<const SetId> collection,
                                      const Instance& instance, const Tree& tree);

// With P the maximal sets, A = P \ S and B = P ∩ S, evaluates
// ½ Σ_{A∈A} |δ_T A| + |A[V \ V_T]| against |A| − 1. Requires T to be
// P-connected, bridge-free in B and not wrapped in B; throws VerifyError
// otherwise.
BoundCheck Lemma51Check(const LaminarFamily& family, const DualAssignment& duals,
                        const Instance& instance, const Tree& tree);

// Σ_{e∈E_T} y(L(e)) + 2y(L[V \ V_T]) against 2y(L \ L_{o}).
BoundCheck OutputInequality(const LaminarFamily& family, const DualAssignment& duals,
                            const Instance& instance, const Tree& tree, VertexId o);

// Structural soundness of the family itself: every set nonnull, pairwise
// disjoint-or-nested, all singletons present, maximal sets partition V.
// Returns a description of every problem found.
std::vector<std::string> CheckLaminarStructure(const LaminarFamily& family);

// Growth-phase state invariants: F is L-connected (and a forest), y respects
// c and π, F edges are tight, S members are saturated, and no active maximal
// set is a union of S members. Returns one message per failure.
std::vector<std::string> CheckGrowthInvariants(const Instance& instance, const LaminarFamily& family,
                                               const DualAssignment& duals,
                                               std::span<const EdgeId> forest);

// Pruning-phase invariants: T is an L-connected tree, and M \ V_T is
// partitioned by members of S.
std::vector<std::string> CheckPruneInvariants(const Instance& instance, const LaminarFamily& family,
                                              const DualAssignment& duals, SetId final_active,
                                              const Tree& tree);

struct CheckResult {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool pass() const;
};

// Full audit of a solver output: family structure, dual feasibility, tree
// validity, certificate, output inequality for every vertex, the two lemma
// bounds, and the tree predicates.
VerificationReport AuditSolution(const Instance& instance, const LaminarFamily& family,
                                 const DualAssignment& duals, const Tree& tree);

}  // namespace pcst

#endif  // PCST_VERIFY_HPP_
