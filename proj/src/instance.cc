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

#include "pcst/instance.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pcst {

using nlohmann::json;

Instance::Instance(int vertex_count, std::vector<Edge> edges,
                   std::vector<Rational> prizes,
                   std::vector<std::string> names)
    : edges_(std::move(edges)),
      prizes_(std::move(prizes)),
      names_(std::move(names)) {
  if (vertex_count < 1) throw InstanceError("instance needs at least one vertex");
  if (static_cast<int>(prizes_.size()) != vertex_count) {
    throw InstanceError("expected " + std::to_string(vertex_count) +
                        " prizes, got " + std::to_string(prizes_.size()));
  }
  if (!names_.empty() && static_cast<int>(names_.size()) != vertex_count) {
    throw InstanceError("names must be absent or one per vertex");
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (sgn(prizes_[static_cast<std::size_t>(v)]) < 0) {
      throw InstanceError("negative prize at vertex " + std::to_string(v));
    }
  }
  incident_.resize(static_cast<std::size_t>(vertex_count));
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& edge = edges_[static_cast<std::size_t>(e)];
    if (edge.u < 0 || edge.u >= vertex_count || edge.v < 0 || edge.v >= vertex_count) {
      throw InstanceError("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (edge.u == edge.v) throw InstanceError("edge " + std::to_string(e) + " is a self-loop");
    if (sgn(edge.cost) < 0) throw InstanceError("edge " + std::to_string(e) + " has negative cost");
    if (!seen.emplace(std::min(edge.u, edge.v), std::max(edge.u, edge.v)).second) {
      throw InstanceError("duplicate edge {" + std::to_string(edge.u) + ", " +
                          std::to_string(edge.v) + "}");
    }
    incident_[static_cast<std::size_t>(edge.u)].push_back(e);
    incident_[static_cast<std::size_t>(edge.v)].push_back(e);
  }
}

std::optional<EdgeId> Instance::FindEdge(VertexId u, VertexId v) const {
  for (EdgeId e : incident(u)) {
    const Edge& edge = edges_[static_cast<std::size_t>(e)];
    if ((edge.u == u && edge.v == v) || (edge.u == v && edge.v == u)) return e;
  }
  return std::nullopt;
}

Rational Instance::TotalPrize() const {
  Rational total = 0;
  for (const Rational& p : prizes_) total += p;
  return total;
}

bool IsTree(const Instance& instance, const Tree& tree) {
  if (tree.vertices.empty()) return false;
  if (tree.edges.size() + 1 != tree.vertices.size()) return false;
  const auto n = static_cast<std::size_t>(instance.vertex_count());
  std::vector<int> slot(n, -1);
  for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
    const VertexId v = tree.vertices[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || slot[static_cast<std::size_t>(v)] >= 0) return false;
    slot[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  // |E| = |V| - 1, so acyclic iff connected; union-find detects both.
  std::vector<std::size_t> root(tree.vertices.size());
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
  auto find = [&root](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::set<EdgeId> distinct;
  for (EdgeId e : tree.edges) {
    if (e < 0 || e >= instance.edge_count() || !distinct.insert(e).second) return false;
    const Edge& edge = instance.edge(e);
    const int a = slot[static_cast<std::size_t>(edge.u)];
    const int b = slot[static_cast<std::size_t>(edge.v)];
    if (a < 0 || b < 0) return false;
    const std::size_t ra = find(static_cast<std::size_t>(a));
    const std::size_t rb = find(static_cast<std::size_t>(b));
    if (ra == rb) return false;
    root[ra] = rb;
  }
  return true;
}

Rational TreeCost(const Instance& instance, const Tree& tree) {
  Rational cost = 0;
  for (EdgeId e : tree.edges) cost += instance.edge(e).cost;
  return cost;
}

Rational TreePenalty(const Instance& instance, const Tree& tree) {
  std::vector<bool> inside(static_cast<std::size_t>(instance.vertex_count()));
  for (VertexId v : tree.vertices) inside.at(static_cast<std::size_t>(v)) = true;
  Rational penalty = 0;
  for (VertexId v = 0; v < instance.vertex_count(); ++v) {
    if (!inside[static_cast<std::size_t>(v)]) penalty += instance.prize(v);
  }
  return penalty;
}

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + message
                                  : message),
      line_(line),
      column_(column) {}

InstanceFormat ParseInstanceFormat(std::string_view name) {
  if (name == "stp") return InstanceFormat::kStp;
  if (name == "json") return InstanceFormat::kJson;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

InstanceFormat FormatForPath(std::string_view path) {
  return path.ends_with(".json") ? InstanceFormat::kJson : InstanceFormat::kStp;
}

namespace {

std::string NumberToken(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return ToFractionString(value);
}

// ---------------------------------------------------------------------------
// json

// Builds a DOM like nlohmann's default parser, except that floating-point
// tokens are kept as their raw text so that "2.5" stays exact.
class ExactNumberDom {
 public:
  using number_integer_t = json::number_integer_t;
  using number_unsigned_t = json::number_unsigned_t;
  using number_float_t = json::number_float_t;
  using string_t = json::string_t;
  using binary_t = json::binary_t;

  bool null() { return Put(nullptr) != nullptr; }
  bool boolean(bool value) { return Put(value) != nullptr; }
  bool number_integer(number_integer_t value) { return Put(value) != nullptr; }
  bool number_unsigned(number_unsigned_t value) { return Put(value) != nullptr; }
  bool number_float(number_float_t, const string_t& raw) {
    return Put(json{{kRawNumberKey, raw}}) != nullptr;
  }
  bool string(string_t& value) { return Put(value) != nullptr; }
  bool binary(binary_t&) { return false; }
  bool start_object(std::size_t) {
    stack_.push_back(Put(json::object()));
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    stack_.push_back(Put(json::array()));
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }
  bool key(string_t& value) {
    key_ = value;
    return true;
  }
  bool parse_error(std::size_t position, const std::string& last_token,
                   const nlohmann::detail::exception&) {
    error_position_ = position;
    error_token_ = last_token;
    return false;
  }

  json& root() { return root_; }
  std::size_t error_position() const { return error_position_; }
  const std::string& error_token() const { return error_token_; }

  static constexpr const char* kRawNumberKey = "$number";

 private:
  json* Put(json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return &root_;
    }
    json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(value));
      return &top.back();
    }
    top[key_] = std::move(value);
    return &top[key_];
  }

  json root_;
  std::vector<json*> stack_;
  std::string key_;
  std::size_t error_position_ = 0;
  std::string error_token_;
};

std::pair<int, int> LineColumn(std::string_view text, std::size_t position) {
  position = std::min(position, text.size());
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < position; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  // nlohmann reports the offset one past the offending character.
  return {line, std::max(1, column - 1)};
}

[[noreturn]] void JsonFail(const std::string& message) { throw ParseError(message, 0, 0); }

Rational JsonRational(const json& value, const std::string& where) {
  try {
    if (value.is_number_unsigned()) return Rational(mpz_class(std::to_string(value.get<std::uint64_t>())));
    if (value.is_number_integer()) return Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
    if (value.is_string()) return ParseRational(value.get<std::string>());
    if (value.is_object() && value.contains(ExactNumberDom::kRawNumberKey)) {
      return ParseRational(value[ExactNumberDom::kRawNumberKey].get<std::string>());
    }
  } catch (const RationalSyntaxError& e) {
    JsonFail(where + ": " + e.what());
  }
  JsonFail(where + ": expected a number or \"p/q\" string");
}

VertexId JsonVertex(const json& value, int n, const std::string& where) {
  if (!value.is_number_integer()) JsonFail(where + ": vertex id must be an integer");
  const auto id = value.get<std::int64_t>();
  if (id < 0 || id >= n) JsonFail(where + ": vertex id " + std::to_string(id) + " out of range");
  return static_cast<VertexId>(id);
}

Instance ParseJson(std::string_view text) {
  ExactNumberDom dom;
  if (!json::sax_parse(text.begin(), text.end(), &dom)) {
    const auto [line, column] = LineColumn(text, dom.error_position());
    throw ParseError("json syntax error near '" + dom.error_token() + "'", line, column);
  }
  const json& root = dom.root();
  if (!root.is_object()) JsonFail("top level must be an object");
  if (!root.contains("n") || !root["n"].is_number_integer()) JsonFail("missing integer field \"n\"");
  const auto n64 = root["n"].get<std::int64_t>();
  if (n64 < 1 || n64 > (1 << 30)) JsonFail("\"n\" must be a positive vertex count");
  const int n = static_cast<int>(n64);

  std::vector<Rational> prizes;
  if (!root.contains("prizes") || !root["prizes"].is_array()) JsonFail("missing array field \"prizes\"");
  if (root["prizes"].size() != static_cast<std::size_t>(n)) {
    JsonFail("\"prizes\" must have exactly n entries");
  }
  for (std::size_t i = 0; i < root["prizes"].size(); ++i) {
    const std::string where = "prizes[" + std::to_string(i) + "]";
    Rational p = JsonRational(root["prizes"][i], where);
    if (sgn(p) < 0) JsonFail(where + ": negative prize");
    prizes.push_back(std::move(p));
  }

  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  if (root.contains("edges")) {
    if (!root["edges"].is_array()) JsonFail("\"edges\" must be an array");
    for (std::size_t i = 0; i < root["edges"].size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const json& item = root["edges"][i];
      if (!item.is_array() || item.size() != 3) JsonFail(where + ": expected [u, v, cost]");
      Edge edge{JsonVertex(item[0], n, where), JsonVertex(item[1], n, where),
                JsonRational(item[2], where)};
      if (edge.u == edge.v) JsonFail(where + ": self-loop");
      if (sgn(edge.cost) < 0) JsonFail(where + ": negative cost");
      if (!seen.emplace(std::min(edge.u, edge.v), std::max(edge.u, edge.v)).second) {
        JsonFail(where + ": duplicate edge");
      }
      edges.push_back(std::move(edge));
    }
  }

  std::vector<std::string> names;
  if (root.contains("names")) {
    const json& list = root["names"];
    if (!list.is_array() || list.size() != static_cast<std::size_t>(n)) {
      JsonFail("\"names\" must be an array of n strings");
    }
    for (const json& name : list) {
      if (!name.is_string()) JsonFail("\"names\" must be an array of n strings");
      names.push_back(name.get<std::string>());
    }
  }
  return Instance(n, std::move(edges), std::move(prizes), std::move(names));
}

std::string EmitJson(const Instance& instance) {
  // Hand-formatted so that edges stay one per line.
  std::ostringstream out;
  out << "{\n  \"n\": " << instance.vertex_count() << ",\n  \"prizes\": [";
  for (int v = 0; v < instance.vertex_count(); ++v) {
    out << (v ? ", " : "") << '"' << ToFractionString(instance.prize(v)) << '"';
  }
  out << "],\n  \"edges\": [";
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    const Edge& edge = instance.edge(e);
    out << (e ? ",\n    " : "\n    ") << '[' << edge.u << ", " << edge.v << ", \""
        << ToFractionString(edge.cost) << "\"]";
  }
  out << (instance.edge_count() ? "\n  ]" : "]");
  if (!instance.names().empty()) {
    out << ",\n  \"names\": " << json(instance.names()).dump();
  }
  out << "\n}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// stp

struct Token {
  std::string_view text;
  int column = 0;
};

std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

bool KeywordIs(std::string_view token, std::string_view keyword) {
  return token.size() == keyword.size() &&
         std::equal(token.begin(), token.end(), keyword.begin(), [](char a, char b) {
           return std::tolower(static_cast<unsigned char>(a)) ==
                  std::tolower(static_cast<unsigned char>(b));
         });
}

class StpParser {
 public:
  explicit StpParser(std::string_view text) : text_(text) {}

  Instance Parse() {
    enum class Section { kNone, kGraph, kTerminals, kOther } section = Section::kNone;
    bool seen_eof = false;
    std::size_t pos = 0;
    while (pos <= text_.size() && !seen_eof) {
      const std::size_t end = std::min(text_.find('\n', pos), text_.size());
      ++line_;
      const std::vector<Token> tokens = Tokenize(text_.substr(pos, end - pos));
      pos = end + 1;
      if (tokens.empty() || tokens[0].text.starts_with('#')) continue;
      const Token& head = tokens[0];

      if (line_ == 1 && head.text == "33D32945") continue;
      if (KeywordIs(head.text, "EOF")) {
        if (section != Section::kNone) Fail("EOF inside an open SECTION", head);
        seen_eof = true;
        continue;
      }
      if (section == Section::kNone) {
        if (!KeywordIs(head.text, "SECTION")) Fail("expected SECTION or EOF", head);
        Expect(tokens, 2);
        if (KeywordIs(tokens[1].text, "Graph")) {
          section = Section::kGraph;
        } else if (KeywordIs(tokens[1].text, "Terminals")) {
          if (!nodes_) Fail("Terminals section before Graph section", tokens[1]);
          section = Section::kTerminals;
        } else {
          section = Section::kOther;
        }
        continue;
      }
      if (KeywordIs(head.text, "END")) {
        if (section == Section::kGraph && edge_lines_ != declared_edges_.value_or(edge_lines_)) {
          Fail("Edges declares " + std::to_string(*declared_edges_) + " but " +
                   std::to_string(edge_lines_) + " E lines follow",
               head);
        }
        section = Section::kNone;
        continue;
      }
      switch (section) {
        case Section::kGraph: GraphLine(tokens); break;
        case Section::kTerminals: TerminalLine(tokens); break;
        default: break;
      }
    }
    if (!seen_eof) throw ParseError("missing EOF", line_, 1);
    if (!nodes_) throw ParseError("missing Nodes declaration", line_, 1);
    return Instance(*nodes_, std::move(edges_), std::move(prizes_));
  }

 private:
  void GraphLine(const std::vector<Token>& tokens) {
    const Token& head = tokens[0];
    if (KeywordIs(head.text, "Nodes")) {
      Expect(tokens, 2);
      if (nodes_) Fail("duplicate Nodes declaration", head);
      const int n = Count(tokens[1]);
      if (n < 1) Fail("Nodes must be positive", tokens[1]);
      nodes_ = n;
      prizes_.assign(static_cast<std::size_t>(n), Rational(0));
    } else if (KeywordIs(head.text, "Edges")) {
      Expect(tokens, 2);
      declared_edges_ = Count(tokens[1]);
    } else if (KeywordIs(head.text, "E")) {
      Expect(tokens, 4);
      if (!nodes_) Fail("E line before Nodes", head);
      Edge edge{Vertex(tokens[1]), Vertex(tokens[2]), Number(tokens[3])};
      if (edge.u == edge.v) Fail("self-loop", tokens[2]);
      if (sgn(edge.cost) < 0) Fail("negative cost", tokens[3]);
      if (!seen_.emplace(std::min(edge.u, edge.v), std::max(edge.u, edge.v)).second) {
        Fail("duplicate edge", head);
      }
      edges_.push_back(std::move(edge));
      ++edge_lines_;
    } else {
      Fail("unknown keyword in Graph section", head);
    }
  }

  void TerminalLine(const std::vector<Token>& tokens) {
    const Token& head = tokens[0];
    if (KeywordIs(head.text, "Terminals")) {
      Expect(tokens, 2);
      Count(tokens[1]);
    } else if (KeywordIs(head.text, "TP")) {
      Expect(tokens, 3);
      const VertexId v = Vertex(tokens[1]);
      Rational prize = Number(tokens[2]);
      if (sgn(prize) < 0) Fail("negative prize", tokens[2]);
      if (!prized_.insert(v).second) Fail("duplicate TP line for vertex", tokens[1]);
      prizes_[static_cast<std::size_t>(v)] = std::move(prize);
    } else {
      Fail("unknown keyword in Terminals section", head);
    }
  }

  int Count(const Token& token) {
    const Rational value = Number(token);
    if (value.get_den() != 1 || value < 0 || value > (1 << 30)) {
      Fail("expected a non-negative integer", token);
    }
    return static_cast<int>(value.get_num().get_si());
  }

  VertexId Vertex(const Token& token) {
    const int id = Count(token);
    if (id < 1 || id > *nodes_) Fail("vertex id out of range", token);
    return id - 1;
  }

  Rational Number(const Token& token) {
    try {
      return ParseRational(token.text);
    } catch (const RationalSyntaxError& e) {
      Fail(e.what(), token);
    }
  }

  void Expect(const std::vector<Token>& tokens, std::size_t count) {
    if (tokens.size() < count) Fail("too few fields", tokens.back());
    if (tokens.size() > count) Fail("unexpected trailing field", tokens[count]);
  }

  [[noreturn]] void Fail(const std::string& message, const Token& token) {
    throw ParseError(message, line_, token.column);
  }

  std::string_view text_;
  int line_ = 0;
  std::optional<int> nodes_;
  std::optional<int> declared_edges_;
  int edge_lines_ = 0;
  std::vector<Edge> edges_;
  std::vector<Rational> prizes_;
  std::set<std::pair<VertexId, VertexId>> seen_;
  std::set<VertexId> prized_;
};

std::string EmitStp(const Instance& instance) {
  std::ostringstream out;
  out << "33D32945 STP File, STP Format Version 1.0\n\n";
  out << "SECTION Graph\n";
  out << "Nodes " << instance.vertex_count() << "\n";
  out << "Edges " << instance.edge_count() << "\n";
  for (const Edge& edge : instance.edges()) {
    out << "E " << edge.u + 1 << ' ' << edge.v + 1 << ' ' << NumberToken(edge.cost) << "\n";
  }
  out << "END\n\n";
  int prized = 0;
  for (const Rational& p : instance.prizes()) prized += sgn(p) != 0;
  out << "SECTION Terminals\n";
  out << "Terminals " << prized << "\n";
  for (int v = 0; v < instance.vertex_count(); ++v) {
    if (sgn(instance.prize(v)) != 0) out << "TP " << v + 1 << ' ' << NumberToken(instance.prize(v)) << "\n";
  }
  out << "END\n\nEOF\n";
  return out.str();
}

}  // namespace

Instance ParseInstance(std::string_view text, InstanceFormat format) {
  try {
    return format == InstanceFormat::kJson ? ParseJson(text) : StpParser(text).Parse();
  } catch (const InstanceError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

std::string EmitInstance(const Instance& instance, InstanceFormat format) {
  return format == InstanceFormat::kJson ? EmitJson(instance) : EmitStp(instance);
}

// ---------------------------------------------------------------------------
// generators

Instance GenerateFigure1Star(const Rational& rho) {
  if (sgn(rho) <= 0) throw std::invalid_argument("rho must be positive");
  const Rational leaf = 1 + rho / 2;
  return Instance(3, {{0, 1, Rational(2)}, {0, 2, Rational(2)}},
                  {Rational(10), leaf, leaf});
}

Instance GenerateFigure1Path(int k, const Rational& rho) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (sgn(rho) <= 0) throw std::invalid_argument("rho must be positive");
  std::vector<Edge> edges;
  std::vector<Rational> prizes{Rational(10 * k)};
  for (int i = 1; i <= k; ++i) {
    edges.push_back({i - 1, i, Rational(2)});
    prizes.push_back(1 + rho / k);
  }
  return Instance(k + 1, std::move(edges), std::move(prizes));
}

Instance GenerateRandom(const RandomInstanceParams& params) {
  if (params.n < 1) throw std::invalid_argument("n must be at least 1");
  if (params.edge_probability < 0 || params.edge_probability > 1) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  if (params.max_cost < 0 || params.max_prize < 0) {
    throw std::invalid_argument("max cost and max prize must be non-negative");
  }
  if (!params.edge_probability.get_den().fits_ulong_p()) {
    throw std::invalid_argument("edge probability denominator too large");
  }
  const std::uint64_t num = params.edge_probability.get_num().get_ui();
  const std::uint64_t den = params.edge_probability.get_den().get_ui();

  // Raw engine output with modulo reduction: the bias is negligible and the
  // draw sequence is identical on every standard library.
  std::mt19937_64 rng(params.seed);
  auto below = [&rng](std::uint64_t bound) { return rng() % bound; };

  std::vector<Edge> edges;
  for (VertexId u = 0; u < params.n; ++u) {
    for (VertexId v = u + 1; v < params.n; ++v) {
      if (below(den) < num) {
        const auto cost = below(static_cast<std::uint64_t>(params.max_cost) + 1);
        edges.push_back({u, v, Rational(mpz_class(std::to_string(cost)))});
      }
    }
  }
  std::vector<Rational> prizes;
  for (VertexId v = 0; v < params.n; ++v) {
    const auto prize = below(static_cast<std::uint64_t>(params.max_prize) + 1);
    prizes.emplace_back(mpz_class(std::to_string(prize)));
  }
  return Instance(params.n, std::move(edges), std::move(prizes));
}

}  // namespace pcst
