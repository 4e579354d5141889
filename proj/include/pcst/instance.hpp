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

#ifndef PCST_INSTANCE_HPP_
#define PCST_INSTANCE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcst/rational.hpp"

namespace pcst {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Rational cost;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected graph with non-negative rational edge costs and vertex prizes.
// Vertex ids are dense in [0, n). No self-loops, no parallel edges. The graph
// need not be connected. Immutable once constructed.
class Instance {
 public:
  // Validates and throws InstanceError on any violated invariant.
  Instance(int vertex_count, std::vector<Edge> edges,
           std::vector<Rational> prizes,
           std::vector<std::string> names = {});

  int vertex_count() const { return static_cast<int>(prizes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<Rational>& prizes() const { return prizes_; }
  const Rational& prize(VertexId v) const { return prizes_.at(static_cast<std::size_t>(v)); }
  // Empty when the instance carries no labels; otherwise one per vertex.
  const std::vector<std::string>& names() const { return names_; }

  // Edge ids incident to v, ascending.
  const std::vector<EdgeId>& incident(VertexId v) const {
    return incident_.at(static_cast<std::size_t>(v));
  }
  std::optional<EdgeId> FindEdge(VertexId u, VertexId v) const;

  Rational TotalPrize() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.edges_ == b.edges_ && a.prizes_ == b.prizes_ && a.names_ == b.names_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<Rational> prizes_;
  std::vector<std::string> names_;
  std::vector<std::vector<EdgeId>> incident_;
};

// A subgraph given by vertex and edge ids, both ascending.
struct Tree {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  friend bool operator==(const Tree&, const Tree&) = default;
};

// Nonempty, connected, acyclic, and every edge has both ends in the vertex
// list. A single vertex without edges is a tree.
bool IsTree(const Instance& instance, const Tree& tree);
// c(T)
Rational TreeCost(const Instance& instance, const Tree& tree);
// π(V \ V_T)
Rational TreePenalty(const Instance& instance, const Tree& tree);

class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input text. Line and column are 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

enum class InstanceFormat { kStp, kJson };

// "stp", "json"; throws std::invalid_argument otherwise.
InstanceFormat ParseInstanceFormat(std::string_view name);
// Guesses from a file extension; .json is json, anything else stp.
InstanceFormat FormatForPath(std::string_view path);

// Throws ParseError for syntax problems and for semantic ones (negative
// cost or prize, duplicate edge, vertex out of range, self-loop).
Instance ParseInstance(std::string_view text, InstanceFormat format);
std::string EmitInstance(const Instance& instance, InstanceFormat format);

// Center u (vertex 0) with leaves v, w. c(uv) = c(uw) = 2,
// prize(u) = 10, prize(v) = prize(w) = 1 + rho/2.
Instance GenerateFigure1Star(const Rational& rho);

// Path v_0 - v_1 - ... - v_k with every edge cost 2, prize(v_0) = 10k and
// prize(v_i) = 1 + rho/k for i >= 1.
Instance GenerateFigure1Path(int k, const Rational& rho);

struct RandomInstanceParams {
  int n = 1;
  Rational edge_probability = Rational(1, 2);
  std::int64_t max_cost = 10;
  std::int64_t max_prize = 10;
  std::uint64_t seed = 0;
};

// Deterministic for a fixed parameter set. Integer costs in [0, max_cost],
// integer prizes in [0, max_prize].
Instance GenerateRandom(const RandomInstanceParams& params);

}  // namespace pcst

#endif  // PCST_INSTANCE_HPP_
