#pragma once

// Line-based text formats and JSON records.
//
//   boolean-vcsp            gmc                 graph
//   vars N                  verts N             verts N
//   rel NAME R v_0 ...      edge U V W          edge U V [W]
//   con W NAME i_1 ... i_R  f MASK VALUE
//
// '#' starts a comment. Values are P, P/Q or inf. Matrix files hold one row of
// 0/1 characters per line.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "surjvcsp/classify.hpp"
#include "surjvcsp/errors.hpp"
#include "surjvcsp/gmc.hpp"
#include "surjvcsp/instance.hpp"
#include "surjvcsp/oracle.hpp"
#include "surjvcsp/relation.hpp"
#include "surjvcsp/result.hpp"
#include "surjvcsp/set_function.hpp"
#include "surjvcsp/value.hpp"

namespace surjvcsp {

namespace detail {

struct Token {
  std::string text;
  int column;  // 1-based
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

/// Non-empty lines split on whitespace, comments removed.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start)
        line.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

inline Value value_token(const Line& l, const Token& t) {
  const auto v = Value::parse(t.text);
  if (!v) throw ParseError(l.number, t.column, "expected a rational or 'inf', got '" + t.text + "'");
  return *v;
}

inline std::int64_t int_token(const Line& l, const Token& t) {
  const auto v = Value::parse(t.text);
  if (!v || !v->is_integer() || t.text.find('/') != std::string::npos)
    throw ParseError(l.number, t.column, "expected an integer, got '" + t.text + "'");
  return v->numerator();
}

inline void expect_count(const Line& l, std::size_t count) {
  if (l.tokens.size() != count)
    throw ParseError(l.number, l.tokens.front().column,
                     "'" + l.tokens.front().text + "' expects " + std::to_string(count - 1) + " fields");
}

inline void expect_header(const std::vector<Line>& lines, const char* header) {
  if (lines.empty()) throw ParseError(1, 1, std::string("missing header '") + header + "'");
  const Line& l = lines.front();
  if (l.tokens.size() != 1 || l.tokens[0].text != header)
    throw ParseError(l.number, 1, std::string("expected header '") + header + "'");
}

/// Parses `verts N` / `vars N` and returns N.
inline int count_line(const Line& l, int limit) {
  expect_count(l, 2);
  const auto n = int_token(l, l.tokens[1]);
  if (n < 1 || n > limit)
    throw ParseError(l.number, l.tokens[1].column, "count must be in 1.." + std::to_string(limit));
  return static_cast<int>(n);
}

}  // namespace detail

struct ParsedInstance {
  Language language;
  Instance instance;
};

namespace detail {

inline ParsedInstance parse_vcsp(std::string_view text, bool require_vars) {
  const auto lines = tokenize(text);
  expect_header(lines, "boolean-vcsp");
  ParsedInstance out;
  std::optional<Instance> inst;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const std::string& kw = l.tokens[0].text;
    if (kw == "vars") {
      if (inst) throw ParseError(l.number, 1, "duplicate 'vars'");
      inst.emplace(count_line(l, 1 << 20));
    } else if (kw == "rel") {
      if (l.tokens.size() < 3) throw ParseError(l.number, 1, "'rel' expects NAME ARITY values");
      const std::string& name = l.tokens[1].text;
      const auto r = int_token(l, l.tokens[2]);
      if (r < 1 || r > kMaxArity) throw ParseError(l.number, l.tokens[2].column, "arity must be 1..8");
      expect_count(l, 3 + table_size(static_cast<int>(r)));
      std::vector<Value> table;
      for (std::size_t i = 3; i < l.tokens.size(); ++i) table.push_back(value_token(l, l.tokens[i]));
      if (out.language.find(name)) throw ParseError(l.number, l.tokens[1].column, "duplicate relation '" + name + "'");
      out.language.add(name, WeightedRelation(static_cast<int>(r), std::move(table)));
    } else if (kw == "con") {
      if (!inst) throw ParseError(l.number, 1, "'con' before 'vars'");
      if (l.tokens.size() < 3) throw ParseError(l.number, 1, "'con' expects W NAME scope");
      const Value w = value_token(l, l.tokens[1]);
      if (w.is_infinite() || w < Value(0))
        throw ParseError(l.number, l.tokens[1].column, "weight must be finite and non-negative");
      const std::string& name = l.tokens[2].text;
      const WeightedRelation* rel = out.language.find(name);
      if (!rel) throw ParseError(l.number, l.tokens[2].column, "unknown relation '" + name + "'");
      expect_count(l, 3 + static_cast<std::size_t>(rel->arity()));
      std::vector<int> scope;
      for (std::size_t i = 3; i < l.tokens.size(); ++i) {
        const auto v = int_token(l, l.tokens[i]);
        if (v < 1 || v > inst->num_vars())
          throw ParseError(l.number, l.tokens[i].column, "variable index out of range");
        scope.push_back(static_cast<int>(v));
      }
      inst->add(w, *rel, std::move(scope), name);
    } else {
      throw ParseError(l.number, l.tokens[0].column, "unknown directive '" + kw + "'");
    }
  }
  if (!inst && require_vars) throw ParseError(lines.back().number, 1, "missing 'vars'");
  if (inst) out.instance = std::move(*inst);
  return out;
}

}  // namespace detail

inline ParsedInstance parse_instance(std::string_view text) { return detail::parse_vcsp(text, true); }

/// Same grammar with `vars` optional; for files that only declare relations.
inline Language parse_language(std::string_view text) {
  return detail::parse_vcsp(text, false).language;
}

/// Canonical text: relations in language order, then constraints.
inline std::string write_instance(const Language& lang, const Instance& inst) {
  std::ostringstream os;
  os << "boolean-vcsp\nvars " << inst.num_vars() << "\n";
  for (const auto& [name, rel] : lang.entries()) {
    os << "rel " << name << " " << rel.arity();
    for (const Value& v : rel.table()) os << " " << v;
    os << "\n";
  }
  for (const auto& c : inst.constraints()) {
    std::string name;
    for (const auto& [n, rel] : lang.entries())
      if (rel == c.relation && (name.empty() || n == c.name)) name = n;
    if (name.empty()) throw ArgumentError("write_instance: constraint relation missing from language");
    os << "con " << c.weight << " " << name;
    for (int v : c.scope) os << " " << v;
    os << "\n";
  }
  return os.str();
}

inline std::string write_instance(const Instance& inst) { return write_instance(language_of(inst), inst); }

struct GmcFile {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<Value> table;  // indexed by mask

  GmcInstance instance() const { return GmcInstance(n, edges, make_table(n, table)); }
};

inline GmcFile parse_gmc(std::string_view text) {
  using namespace detail;
  const auto lines = tokenize(text);
  expect_header(lines, "gmc");
  GmcFile out;
  std::vector<char> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const std::string& kw = l.tokens[0].text;
    if (kw == "verts") {
      if (out.n) throw ParseError(l.number, 1, "duplicate 'verts'");
      out.n = count_line(l, kDenseTableLimit);
      out.table.assign(std::size_t{1} << out.n, Value(0));
      seen.assign(out.table.size(), 0);
    } else if (!out.n) {
      throw ParseError(l.number, 1, "'" + kw + "' before 'verts'");
    } else if (kw == "edge") {
      expect_count(l, 4);
      const auto u = int_token(l, l.tokens[1]), v = int_token(l, l.tokens[2]);
      for (int i : {1, 2}) {
        const auto x = i == 1 ? u : v;
        if (x < 1 || x > out.n) throw ParseError(l.number, l.tokens[i].column, "vertex out of range");
      }
      if (u == v) throw ParseError(l.number, l.tokens[2].column, "self-loop");
      const Value w = value_token(l, l.tokens[3]);
      if (!(w > Value(0))) throw ParseError(l.number, l.tokens[3].column, "edge weight must be positive");
      out.edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    } else if (kw == "f") {
      expect_count(l, 3);
      const auto mask = int_token(l, l.tokens[1]);
      if (mask < 0 || static_cast<std::uint64_t>(mask) >= out.table.size())
        throw ParseError(l.number, l.tokens[1].column, "mask out of range");
      if (seen[mask]) throw ParseError(l.number, l.tokens[1].column, "duplicate mask");
      seen[mask] = 1;
      const Value v = value_token(l, l.tokens[2]);
      if (mask == 0 && !v.is_zero()) throw ParseError(l.number, l.tokens[2].column, "f(0) must be 0");
      out.table[mask] = v;
    } else {
      throw ParseError(l.number, l.tokens[0].column, "unknown directive '" + kw + "'");
    }
  }
  if (!out.n) throw ParseError(lines.back().number, 1, "missing 'verts'");
  if (out.n <= kSuperadditivityCheckLimit) validate_superadditive(*make_table(out.n, out.table));
  return out;
}

inline std::string write_gmc(const GmcFile& g) {
  std::ostringstream os;
  os << "gmc\nverts " << g.n << "\n";
  for (const Edge& e : g.edges) os << "edge " << e.u << " " << e.v << " " << e.weight << "\n";
  for (std::size_t m = 1; m < g.table.size(); ++m)
    if (!g.table[m].is_zero()) os << "f " << m << " " << g.table[m] << "\n";
  return os.str();
}

struct GraphFile {
  int n = 0;
  std::vector<Edge> edges;

  /// Edge list for unit-weight consumers; rejects other weights.
  std::vector<std::pair<int, int>> unit_edges() const {
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : edges) {
      if (e.weight != Value(1)) throw ArgumentError("graph: expected unit edge weights");
      out.emplace_back(e.u, e.v);
    }
    return out;
  }
};

inline GraphFile parse_graph(std::string_view text) {
  using namespace detail;
  const auto lines = tokenize(text);
  expect_header(lines, "graph");
  GraphFile out;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const std::string& kw = l.tokens[0].text;
    if (kw == "verts") {
      if (out.n) throw ParseError(l.number, 1, "duplicate 'verts'");
      out.n = count_line(l, kMaxVertices);
    } else if (kw == "edge") {
      if (!out.n) throw ParseError(l.number, 1, "'edge' before 'verts'");
      if (l.tokens.size() != 3 && l.tokens.size() != 4)
        throw ParseError(l.number, 1, "'edge' expects U V [W]");
      const auto u = int_token(l, l.tokens[1]), v = int_token(l, l.tokens[2]);
      for (int i : {1, 2}) {
        const auto x = i == 1 ? u : v;
        if (x < 1 || x > out.n) throw ParseError(l.number, l.tokens[i].column, "vertex out of range");
      }
      if (u == v) throw ParseError(l.number, l.tokens[2].column, "self-loop");
      const Value w = l.tokens.size() == 4 ? value_token(l, l.tokens[3]) : Value(1);
      if (!(w > Value(0))) throw ParseError(l.number, l.tokens[3].column, "edge weight must be positive");
      out.edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    } else {
      throw ParseError(l.number, l.tokens[0].column, "unknown directive '" + kw + "'");
    }
  }
  if (!out.n) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing 'verts'");
  return out;
}

inline BitMatrix parse_matrix(std::string_view text) {
  BitMatrix h;
  for (const auto& l : detail::tokenize(text)) {
    std::vector<int> row;
    for (const auto& t : l.tokens)
      for (std::size_t i = 0; i < t.text.size(); ++i) {
        const char ch = t.text[i];
        if (ch != '0' && ch != '1')
          throw ParseError(l.number, t.column + static_cast<int>(i), "expected 0 or 1");
        row.push_back(ch - '0');
      }
    if (!h.empty() && row.size() != h.front().size())
      throw ParseError(l.number, 1, "row length differs from the first row");
    h.push_back(std::move(row));
  }
  if (h.empty()) throw ParseError(1, 1, "empty matrix");
  return h;
}

using Json = nlohmann::ordered_json;

inline Json assignment_json(const Assignment& s) {
  Json a = Json::array();
  for (auto b : s.bits()) a.push_back(static_cast<int>(b));
  return a;
}

inline Json result_json(const SolveResult& r) {
  Json j;
  j["status"] = status_name(r.status);
  j["value"] = r.optimal() ? r.value.to_string() : "inf";
  j["assignment"] = r.optimal() ? assignment_json(r.assignment) : Json::array();
  j["path"] = path_name(r.path);
  j["candidates_examined"] = r.candidates_examined;
  return j;
}

inline std::string write_result(const SolveResult& r) { return result_json(r).dump(); }

inline Json verdict_json(const Verdict& v) {
  Json j;
  j["tractable"] = v.tractable();
  if (v.tractable()) {
    j["reason"] = reason_name(*v.reason);
  } else {
    Json fails = Json::array();
    for (const auto& f : v.failures) {
      Json ft;
      ft["test"] = reason_name(f.test);
      ft["relation"] = f.relation;
      Json w = Json::array();
      for (Tuple t : f.witness) w.push_back(tuple_string(t, f.arity));
      ft["witness"] = w;
      fails.push_back(ft);
    }
    j["failures"] = fails;
  }
  return j;
}

inline Json vertex_set_json(VertexSet x) {
  Json a = Json::array();
  for (int v : members_of(x)) a.push_back(v);
  return a;
}

}  // namespace surjvcsp
