#pragma once

// Plain-text formats. Graph files:
//
//     n m weighted|unweighted
//     u v [w]          (one line per edge, 0-based ids, w only if weighted)
//
// Update stream files:
//
//     base <graph-file> mode insert|delete
//     + u v            (insert streams)
//     - u v            (delete streams)
//
// Writers emit edges sorted by (from, to) with LF line endings, so equal
// graphs serialize to identical bytes. Numbers are strict ASCII decimals;
// anything else (including floating-point weights) is rejected.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "xdspan/graph.hpp"

namespace xds {

namespace detail {

inline std::int64_t parse_int(const std::string& token, const std::string& what) {
  std::int64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw std::invalid_argument("expected integer for " + what + ", got '" + token + "'");
  return value;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

struct UpdateOp {
  bool insert = false;
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
};

// A homogeneous edit script over a base graph: either all insertions of new
// edges or all deletions of existing edges. Weighted bases are rejected;
// dynamic maintenance is defined for unit weights only.
struct UpdateStream {
  DirectedGraph base;
  std::string base_path;  // as written in the stream header
  bool insert_mode = false;
  std::vector<UpdateOp> ops;
};

inline std::string graph_to_string(const DirectedGraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << ' '
      << (g.weighted() ? "weighted" : "unweighted") << '\n';
  for (const Edge& e : g.edges()) {
    out << e.from << ' ' << e.to;
    if (g.weighted()) out << ' ' << e.weight;
    out << '\n';
  }
  return out.str();
}

inline DirectedGraph graph_from_string(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("graph: empty input");
  auto header = detail::split_ws(line);
  if (header.size() != 3)
    throw std::invalid_argument("graph: header must be 'n m weighted|unweighted'");
  Vertex n = static_cast<Vertex>(detail::parse_int(header[0], "n"));
  std::int64_t m = detail::parse_int(header[1], "m");
  bool weighted;
  if (header[2] == "weighted") weighted = true;
  else if (header[2] == "unweighted") weighted = false;
  else throw std::invalid_argument("graph: mode must be weighted or unweighted");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      throw std::invalid_argument("graph: expected " + std::to_string(m) + " edge lines");
    auto tok = detail::split_ws(line);
    std::size_t want = weighted ? 3 : 2;
    if (tok.size() != want)
      throw std::invalid_argument("graph: bad edge line '" + line + "'");
    Edge e;
    e.from = static_cast<Vertex>(detail::parse_int(tok[0], "edge tail"));
    e.to = static_cast<Vertex>(detail::parse_int(tok[1], "edge head"));
    e.weight = weighted ? detail::parse_int(tok[2], "edge weight") : 1;
    edges.push_back(e);
  }
  while (std::getline(in, line))
    if (!detail::split_ws(line).empty())
      throw std::invalid_argument("graph: trailing content after " + std::to_string(m) + " edges");
  return DirectedGraph(n, std::move(edges), weighted);
}

inline void write_graph(const std::filesystem::path& path, const DirectedGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << graph_to_string(g);
}

inline DirectedGraph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_string(buf.str());
}

inline std::string stream_ops_to_string(const std::string& base_path, bool insert_mode,
                                        const std::vector<UpdateOp>& ops) {
  std::ostringstream out;
  out << "base " << base_path << " mode " << (insert_mode ? "insert" : "delete") << '\n';
  for (const UpdateOp& op : ops) {
    if (op.insert != insert_mode)
      throw std::invalid_argument("stream: op kind contradicts declared mode");
    out << (op.insert ? '+' : '-') << ' ' << op.u << ' ' << op.v << '\n';
  }
  return out.str();
}

inline void write_stream(const std::filesystem::path& path, const std::string& base_path,
                         bool insert_mode, const std::vector<UpdateOp>& ops) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << stream_ops_to_string(base_path, insert_mode, ops);
}

// Reads a stream file; the base graph path is resolved relative to the
// stream file's own directory when not absolute.
inline UpdateStream read_stream(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open stream file: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("stream: empty input");
  auto header = detail::split_ws(line);
  if (header.size() != 4 || header[0] != "base" || header[2] != "mode")
    throw std::invalid_argument("stream: header must be 'base <graph-file> mode insert|delete'");
  UpdateStream s;
  s.base_path = header[1];
  if (header[3] == "insert") s.insert_mode = true;
  else if (header[3] == "delete") s.insert_mode = false;
  else throw std::invalid_argument("stream: mode must be insert or delete");
  std::filesystem::path base(s.base_path);
  if (base.is_relative()) base = path.parent_path() / base;
  s.base = read_graph(base);
  if (s.base.weighted())
    throw std::invalid_argument("stream: weighted base graphs are not supported");
  while (std::getline(in, line)) {
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() != 3 || (tok[0] != "+" && tok[0] != "-"))
      throw std::invalid_argument("stream: bad op line '" + line + "'");
    UpdateOp op;
    op.insert = tok[0] == "+";
    if (op.insert != s.insert_mode)
      throw std::invalid_argument("stream: op kind contradicts declared mode");
    op.u = static_cast<Vertex>(detail::parse_int(tok[1], "op tail"));
    op.v = static_cast<Vertex>(detail::parse_int(tok[2], "op head"));
    if (op.u < 0 || op.u >= s.base.num_vertices() || op.v < 0 || op.v >= s.base.num_vertices())
      throw std::out_of_range("stream: op endpoint out of range");
    s.ops.push_back(op);
  }
  return s;
}

}  // namespace xds
