#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperfree/hypergraph.hpp"

namespace hyperfree {

// Edge-list text format shared by .h3 (r = 3), graphs (r = 2) and set
// systems (.ss). Header "n m r", then m lines of sorted 0-based vertices, lines
// in lexicographic order. r = 0 marks variable-length lines. '#' starts a
// comment line.
struct EdgeListFile {
  int n = 0;
  int r = 0;
  std::vector<std::vector<Vertex>> edges;
};

inline void write_edge_list(std::ostream& out, int n, int r, std::vector<std::vector<Vertex>> edges) {
  for (auto& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  out << n << ' ' << edges.size() << ' ' << r << '\n';
  for (const auto& e : edges) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

inline EdgeListFile read_edge_list(std::istream& in) {
  EdgeListFile f;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  long long expected = 0;
  auto fail = [&](const std::string& what) {
    throw InputError("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      if (!(ls >> f.n >> expected >> f.r)) fail("expected header 'n m r'");
      std::string rest;
      if (ls >> rest) fail("trailing tokens in header");
      if (f.n < 0 || expected < 0 || f.r < 0) fail("negative header field");
      have_header = true;
      continue;
    }
    std::vector<Vertex> e;
    long long v = 0;
    while (ls >> v) {
      if (v < 0 || v >= f.n) fail("vertex " + std::to_string(v) + " out of range");
      if (!e.empty() && v <= e.back()) fail("vertices must be strictly increasing");
      e.push_back(static_cast<Vertex>(v));
    }
    if (!ls.eof()) fail("non-integer token");
    if (f.r > 0 && static_cast<int>(e.size()) != f.r) fail("expected " + std::to_string(f.r) + " vertices");
    if (e.empty()) fail("empty edge line");
    f.edges.push_back(std::move(e));
  }
  if (!have_header) throw InputError("missing header");
  if (static_cast<long long>(f.edges.size()) != expected)
    throw InputError("header announces " + std::to_string(expected) + " edges, found " + std::to_string(f.edges.size()));
  auto sorted = f.edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("duplicate edge line");
  return f;
}

inline void write_h3(std::ostream& out, const Hypergraph3& h) {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(h.edge_count()));
  h.for_each_edge([&](const Triple& t) { edges.push_back({t.a, t.b, t.c}); });
  write_edge_list(out, h.n(), 3, std::move(edges));
}

inline std::string to_h3_string(const Hypergraph3& h) {
  std::ostringstream os;
  write_h3(os, h);
  return os.str();
}

inline Hypergraph3 hypergraph_from_edge_list(const EdgeListFile& f) {
  if (f.r != 3) throw InputError("expected a 3-uniform edge list, header says r = " + std::to_string(f.r));
  std::vector<Triple> t;
  t.reserve(f.edges.size());
  for (const auto& e : f.edges) t.push_back({e[0], e[1], e[2]});
  return Hypergraph3(f.n, t);
}

inline Hypergraph3 read_h3(std::istream& in) { return hypergraph_from_edge_list(read_edge_list(in)); }

inline Hypergraph3 parse_h3(const std::string& text) {
  std::istringstream is(text);
  return read_h3(is);
}

inline void write_graph(std::ostream& out, const Graph2& g) {
  std::vector<std::vector<Vertex>> edges;
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  write_edge_list(out, g.n(), 2, std::move(edges));
}

inline Graph2 graph_from_edge_list(const EdgeListFile& f) {
  if (f.r != 2) throw InputError("expected a graph edge list (r = 2)");
  Graph2 g(f.n);
  for (const auto& e : f.edges) g.add_edge(e[0], e[1]);
  return g;
}

inline EdgeListFile read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_edge_list(in);
}

}  // namespace hyperfree
