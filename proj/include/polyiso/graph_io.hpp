//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyiso/graph.hpp"

namespace polyiso {

/// Malformed graph input. `offset()` is a byte offset for graph6 and a
/// 1-based line number for DIMACS.
class ParseError: public std::runtime_error {
 public:
  ParseError(const std::string &what, std::size_t offset)
      : std::runtime_error(what + " (at " + std::to_string(offset) + ")"),
        offset_(offset) { }

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {
  inline std::string_view strip_line_end(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  }

  inline int g6_value(std::string_view s, std::size_t pos) {
    if (pos >= s.size())
      throw ParseError("graph6: unexpected end of input", pos);
    const auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: byte outside 63..126", pos);
    return c - 63;
  }
}  // namespace detail

/// Decodes one graph6 line. An optional ">>graph6<<" header and a trailing
/// newline are accepted.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t pos = 0;
  text = detail::strip_line_end(text);
  if (text.substr(0, kHeader.size()) == kHeader)
    pos = kHeader.size();

  std::uint64_t n = 0;
  const int first = detail::g6_value(text, pos);
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
    pos += 1;
  } else if (detail::g6_value(text, pos + 1) < 63) {
    for (std::size_t k = 1; k <= 3; ++k)
      n = (n << 6) | static_cast<std::uint64_t>(detail::g6_value(text, pos + k));
    if (n < 63)
      throw ParseError("graph6: non-canonical size header", pos);
    pos += 4;
  } else {
    for (std::size_t k = 2; k <= 7; ++k)
      n = (n << 6) | static_cast<std::uint64_t>(detail::g6_value(text, pos + k));
    if (n <= 258047)
      throw ParseError("graph6: non-canonical size header", pos);
    pos += 8;
  }
  if (n == 0)
    throw ParseError("graph6: empty graph not supported", pos);
  if (n > 1u << 16)
    throw ParseError("graph6: graph too large for dense storage", pos);

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes)
                         + " data bytes, got "
                         + std::to_string(text.size() - pos),
                     text.size() < pos + bytes ? text.size() : pos + bytes);

  Graph g(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int word = detail::g6_value(text, at);
      if ((word >> (5 - k % 6)) & 1)
        g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t at = pos + static_cast<std::size_t>(k / 6);
    const int mask = (1 << (6 - k % 6)) - 1;
    if (detail::g6_value(text, at) & mask)
      throw ParseError("graph6: non-zero padding bits", at);
  }
  return g;
}

/// Encodes without header or newline.
inline std::string serialize_graph6(const Graph &g) {
  const std::uint64_t n = g.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }

  int word = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

/// DIMACS edge format: "c" comments, one "p edge n m" line, "e u v" lines
/// with 1-based endpoints. Repeated edges are merged.
inline Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c")
      continue;
    if (tag == "p") {
      std::string kind;
      long long n = -1, m = -1;
      if (g)
        throw ParseError("dimacs: duplicate problem line", lineno);
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col")
          || n <= 0 || m < 0)
        throw ParseError("dimacs: malformed problem line", lineno);
      g.emplace(static_cast<std::size_t>(n));
    } else if (tag == "e") {
      long long u = 0, v = 0;
      if (!g)
        throw ParseError("dimacs: edge before problem line", lineno);
      if (!(ls >> u >> v))
        throw ParseError("dimacs: malformed edge line", lineno);
      const auto n = static_cast<long long>(g->size());
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError("dimacs: endpoint out of range", lineno);
      if (u == v)
        throw ParseError("dimacs: loops are not allowed", lineno);
      g->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError("dimacs: unknown line tag '" + tag + "'", lineno);
    }
  }
  if (!g)
    throw ParseError("dimacs: missing problem line", lineno);
  return *std::move(g);
}

inline std::string serialize_dimacs(const Graph &g) {
  std::ostringstream out;
  if (!g.name().empty())
    out << "c " << g.name() << '\n';
  out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v]: g.edges())
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

enum class GraphFormat { kGraph6, kDimacs };

inline Graph read_graph_file(const std::string &path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  Graph g;
  if (format == GraphFormat::kGraph6) {
    // first non-empty line only
    std::istringstream ls(text);
    std::string line;
    while (std::getline(ls, line) && detail::strip_line_end(line).empty()) { }
    g = parse_graph6(line);
  } else {
    g = parse_dimacs(text);
  }
  g.set_name(path);
  return g;
}

}  // namespace polyiso
