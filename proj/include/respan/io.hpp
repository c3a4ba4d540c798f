#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <system_error>

#include "respan/fragility.hpp"
#include "respan/graph.hpp"

#include "json.hpp"

namespace respan {

using json = nlohmann::ordered_json;

/// Shortest decimal string that round-trips to the same double ("2" for
/// 2.0, "2.5", "1e+30", ...).
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace detail {

inline std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] inline void parse_fail(int line, const std::string& why) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + why);
}

}  // namespace detail

/// Parses the plain edge-list format:
///   - '#' starts a comment line; blank lines are ignored
///   - an optional first line "n <count>" pins the vertex count
///   - every other line is "u v" (weight 1) or "u v w"
/// Without a header the vertex count is the largest endpoint plus one.
/// Errors carry the offending line number.
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool saw_header = false;
  bool saw_edge = false;
  long long n_declared = -1;
  std::vector<Graph::Edge> edges;
  std::map<std::pair<int, int>, int> first_seen;  // edge -> line
  long long max_vertex = -1;

  while (std::getline(in, raw)) {
    ++line;
    std::string s = detail::trimmed(raw);
    if (s.empty() || s[0] == '#') continue;
    std::istringstream tok(s);
    std::string head;
    tok >> head;
    if (head == "n") {
      if (saw_header) detail::parse_fail(line, "duplicate header");
      if (saw_edge) detail::parse_fail(line, "header must precede all edges");
      std::string rest;
      if (!(tok >> n_declared) || (tok >> rest))
        detail::parse_fail(line, "header must be exactly 'n <count>'");
      if (n_declared < 0) detail::parse_fail(line, "vertex count must be non-negative");
      saw_header = true;
      continue;
    }
    std::vector<std::string> fields;
    {
      std::istringstream split(s);
      std::string f;
      while (split >> f) fields.push_back(f);
    }
    if (fields.size() != 2 && fields.size() != 3)
      detail::parse_fail(line, "expected 'u v' or 'u v w'");
    auto parse_ll = [&line](const std::string& f) {
      long long x = 0;
      auto res = std::from_chars(f.data(), f.data() + f.size(), x);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size())
        detail::parse_fail(line, "not an integer vertex id: '" + f + "'");
      return x;
    };
    long long u = parse_ll(fields[0]);
    long long v = parse_ll(fields[1]);
    double w = 1.0;
    if (fields.size() == 3) {
      const std::string& f = fields[2];
      auto res = std::from_chars(f.data(), f.data() + f.size(), w);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size())
        detail::parse_fail(line, "not a numeric weight: '" + f + "'");
    }
    if (u < 0 || v < 0) detail::parse_fail(line, "vertex ids must be non-negative");
    if (u == v) detail::parse_fail(line, "self-loop at vertex " + std::to_string(u));
    if (!(w > 0.0)) detail::parse_fail(line, "weight must be positive");
    if (u > std::numeric_limits<int>::max() || v > std::numeric_limits<int>::max())
      detail::parse_fail(line, "vertex id too large");
    int iu = static_cast<int>(u), iv = static_cast<int>(v);
    if (iu > iv) std::swap(iu, iv);
    auto [it, fresh] = first_seen.insert({{iu, iv}, line});
    if (!fresh)
      detail::parse_fail(line, "duplicate edge (" + std::to_string(iu) + "," +
                                   std::to_string(iv) + "), first seen on line " +
                                   std::to_string(it->second));
    if (saw_header && (v >= n_declared || u >= n_declared))
      detail::parse_fail(line, "vertex " + std::to_string(std::max(u, v)) +
                                   " out of range (n = " + std::to_string(n_declared) + ")");
    max_vertex = std::max({max_vertex, u, v});
    edges.push_back({iu, iv, w});
    saw_edge = true;
  }
  long long n = saw_header ? n_declared : max_vertex + 1;
  return Graph::build(static_cast<int>(n), std::move(edges));
}

/// Inverse of parse_edge_list: always emits the "n <count>" header, then
/// one line per edge in edge-id order. Weights are omitted when every
/// weight is 1 and printed shortest-round-trip otherwise.
inline std::string serialize_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  bool unit = g.unit_weights();
  for (const Graph::Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v);
    if (!unit) out += " " + format_double(e.w);
    out += "\n";
  }
  return out;
}

/// Machine-readable run record. Sections are free-form JSON; timings_ms is
/// the only section excluded from determinism comparisons.
struct Report {
  int schema = 1;
  std::string operation;
  json input = json::object();
  json params = json::object();
  json results = json::object();
  json timings_ms = json::object();
};

inline std::string emit_report(const Report& r) {
  json j;
  j["schema"] = r.schema;
  j["operation"] = r.operation;
  j["input"] = r.input;
  j["params"] = r.params;
  j["results"] = r.results;
  j["timings_ms"] = r.timings_ms;
  return j.dump(2) + "\n";
}

inline Report parse_report(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object() || !j.contains("schema") || !j["schema"].is_number_integer())
    throw std::invalid_argument("report: missing integer 'schema' field");
  if (j["schema"].get<int>() != 1)
    throw std::invalid_argument("report: unsupported schema version");
  if (!j.contains("operation") || !j["operation"].is_string())
    throw std::invalid_argument("report: missing 'operation' field");
  Report r;
  r.schema = j["schema"].get<int>();
  r.operation = j["operation"].get<std::string>();
  if (j.contains("input")) r.input = j["input"];
  if (j.contains("params")) r.params = j["params"];
  if (j.contains("results")) r.results = j["results"];
  if (j.contains("timings_ms")) r.timings_ms = j["timings_ms"];
  return r;
}

/// Canonical form for byte-comparisons across runs: the report with
/// timings blanked.
inline std::string report_fingerprint(const Report& r) {
  Report copy = r;
  copy.timings_ms = json::object();
  return emit_report(copy);
}

/// Histogram of fragility values: keys are shortest-round-trip value
/// strings in increasing order, bridges counted under "inf" last.
inline json fragility_histogram(const FragilityMap& fm) {
  std::map<double, int> finite;
  int infinite = 0;
  for (const Fragility& f : fm) {
    if (f.is_infinite())
      ++infinite;
    else
      ++finite[f.value()];
  }
  json h = json::object();
  for (const auto& [v, c] : finite) h[format_double(v)] = c;
  if (infinite > 0) h["inf"] = infinite;
  return h;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace respan
