#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "degdiv/clustering.hpp"
#include "degdiv/errors.hpp"
#include "degdiv/graph.hpp"
#include "degdiv/harness.hpp"

namespace degdiv {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

inline std::optional<std::pair<long, long>> parse_int_pair(std::string_view line) {
  long a = 0, b = 0;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end && *p == ' ') ++p;
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != ' ') return std::nullopt;
  p = r1.ptr;
  while (p < end && *p == ' ') ++p;
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{}) return std::nullopt;
  for (p = r2.ptr; p < end; ++p)
    if (*p != ' ') return std::nullopt;
  return std::make_pair(a, b);
}

}  // namespace detail

/// Edge-list text: header "n m", then m lines "u v" with 0 <= u < v < n.
/// Every malformation is a distinct diagnostic carrying its line number.
inline Graph parse_edge_list(std::string_view text) {
  auto lines = detail::split_lines(text);
  if (lines.empty()) throw parse_error(1, "missing header (expected \"n m\")");
  auto header = detail::parse_int_pair(lines[0]);
  if (!header || header->first < 0 || header->second < 0)
    throw parse_error(1, "malformed header (expected \"n m\")");
  const long n = header->first;
  const long m = header->second;
  if (static_cast<long>(lines.size()) - 1 < m)
    throw parse_error(static_cast<int>(lines.size()) + 1, "unexpected end of file: expected " +
                                                              std::to_string(m) + " edge lines");
  if (static_cast<long>(lines.size()) - 1 > m)
    throw parse_error(static_cast<int>(m) + 2, "trailing content after " + std::to_string(m) + " edges");

  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    const int line_no = static_cast<int>(i) + 2;
    auto edge = detail::parse_int_pair(lines[i + 1]);
    if (!edge) throw parse_error(line_no, "malformed edge (expected \"u v\")");
    auto [u, v] = *edge;
    if (u == v) throw parse_error(line_no, "self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error(line_no, "vertex out of range [0, " + std::to_string(n) + ")");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
      throw parse_error(line_no, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

/// Canonical edge-list text: "n m" then edges with u < v, lexicographic.
inline std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.edge_count()) + "\n";
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.adjacent(u, v)) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// graph6 (read-only): optional ">>graph6<<" header, 1- or 4-byte size,
/// upper triangle packed column-wise in 6-bit printable chunks.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw parse_error(1, "empty graph6 payload");

  std::size_t pos = 0;
  auto byte = [&](std::size_t i) -> int {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw parse_error(1, "invalid graph6 byte at offset " + std::to_string(i));
    return c - 63;
  };

  long n = 0;
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else {
    if (text.size() < 4) throw parse_error(1, "truncated graph6 size block");
    if (byte(1) == 63) throw parse_error(1, "graph6 sizes above 2^18 are not supported");
    n = (long(byte(1)) << 12) | (long(byte(2)) << 6) | long(byte(3));
    pos = 4;
  }

  const long bits_needed = n * (n - 1) / 2;
  const long bytes_needed = (bits_needed + 5) / 6;
  if (static_cast<long>(text.size()) - static_cast<long>(pos) != bytes_needed)
    throw parse_error(1, "graph6 payload length mismatch");

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (long v = 1; v < n; ++v)
    for (long u = 0; u < v; ++u, ++bit) {
      const int chunk = byte(pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  return g;
}

/// Everything a run needs to be reproduced; identical manifests must yield
/// byte-identical outputs.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;

  void param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
};

inline Json to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  Json p = Json::object();
  for (const auto& [k, v] : m.params) p[k] = v;
  j["params"] = p;
  return j;
}

inline Json to_json(const CheckRecord& c) {
  Json j;
  j["id"] = c.id;
  j["pass"] = c.pass;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["tolerance"] = c.tolerance;
  j["detail"] = c.detail;
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["subject"] = r.subject;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  Json q = Json::object();
  for (const auto& [k, v] : r.quantities) q[k] = v;
  j["quantities"] = q;
  if (r.statistically_insufficient) j["statistically_insufficient"] = true;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  j["pass"] = r.all_pass();
  return j;
}

inline Json to_json(const HistogramRow& row) {
  Json j;
  j["degree"] = row.degree;
  j["predicted"] = row.predicted;
  j["observed_mean"] = row.observed_mean;
  j["observed_std"] = row.observed_std;
  if (std::isfinite(row.z))
    j["z"] = row.z;
  else
    j["z"] = fmt_double(row.z);
  return j;
}

inline Json to_json(const HistogramReport& r) {
  Json j;
  j["subject"] = r.subject;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["mean_sample_size"] = r.mean_sample_size;
  if (r.statistically_insufficient) j["statistically_insufficient"] = true;
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  j["rows"] = rows;
  return j;
}

inline Json to_json(const ClusterResult& r) {
  Json j;
  Json clusters = Json::array();
  for (const auto& c : r.clusters) clusters.push_back(c.to_vector());
  j["clusters"] = clusters;
  j["leftover"] = r.leftover.to_vector();
  j["max_intra_delta"] = r.max_intra_delta;
  j["min_inter_delta"] = r.min_inter_delta;
  return j;
}

inline Json to_json(const PartitionReport& r) {
  Json j = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["id"] = c.id;
    e["pass"] = c.pass;
    e["witness"] = c.witness;
    j.push_back(e);
  }
  return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

/// RFC-4180 with a header row; the fixed histogram schema.
inline std::string to_csv(const HistogramReport& r) {
  std::string out = "degree,predicted,observed_mean,observed_std,z\r\n";
  for (const auto& row : r.rows)
    out += std::to_string(row.degree) + "," + fmt_double(row.predicted) + "," + fmt_double(row.observed_mean) +
           "," + fmt_double(row.observed_std) + "," + fmt_double(row.z) + "\r\n";
  return out;
}

inline std::string to_csv(const VerificationReport& r) {
  std::string out = "id,pass,lhs,rhs,tolerance,detail\r\n";
  for (const auto& c : r.checks)
    out += detail::csv_field(c.id) + "," + (c.pass ? "true" : "false") + "," + detail::csv_field(c.lhs) + "," +
           detail::csv_field(c.rhs) + "," + detail::csv_field(c.tolerance) + "," + detail::csv_field(c.detail) +
           "\r\n";
  return out;
}

}  // namespace degdiv
