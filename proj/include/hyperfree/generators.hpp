#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "hyperfree/bitset.hpp"
#include "hyperfree/hypergraph.hpp"
#include "hyperfree/rng.hpp"
#include "hyperfree/set_system.hpp"

namespace hyperfree {

// Bipartite graph with sides X = 0..nx-1 and Y = 0..ny-1.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int nx, int ny)
      : nx_(nx), ny_(ny), adj_x_(static_cast<std::size_t>(nx)), adj_y_(static_cast<std::size_t>(ny)) {
    if (nx < 0 || ny < 0) throw InputError("negative side size");
    for (auto& r : adj_x_) r = DynBitset(static_cast<std::size_t>(ny));
  }

  int nx() const noexcept { return nx_; }
  int ny() const noexcept { return ny_; }
  std::int64_t edge_count() const noexcept { return edges_; }

  bool has_edge(int x, int y) const noexcept { return adj_x_[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(y)); }

  bool add_edge(int x, int y) {
    if (x < 0 || x >= nx_ || y < 0 || y >= ny_) throw InputError("bipartite edge out of range");
    if (has_edge(x, y)) return false;
    adj_x_[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(y));
    auto& ny = adj_y_[static_cast<std::size_t>(y)];
    ny.insert(std::upper_bound(ny.begin(), ny.end(), x), x);
    ++edges_;
    return true;
  }

  // Neighbours of y in X, ascending.
  const std::vector<int>& neighbours_y(int y) const noexcept { return adj_y_[static_cast<std::size_t>(y)]; }
  std::vector<int> neighbours_x(int x) const {
    std::vector<int> out;
    adj_x_[static_cast<std::size_t>(x)].for_each([&](std::size_t y) { out.push_back(static_cast<int>(y)); });
    return out;
  }
  int degree_y(int y) const noexcept { return static_cast<int>(adj_y_[static_cast<std::size_t>(y)].size()); }

  // No two Y-vertices share two X-neighbours.
  bool is_c4_free() const {
    for (int y = 0; y < ny_; ++y)
      for (int z = y + 1; z < ny_; ++z) {
        int common = 0;
        for (int x : neighbours_y(y))
          if (has_edge(x, z) && ++common >= 2) return false;
      }
    return true;
  }

 private:
  int nx_ = 0, ny_ = 0;
  std::int64_t edges_ = 0;
  std::vector<DynBitset> adj_x_;
  std::vector<std::vector<int>> adj_y_;
};

inline Hypergraph3 gen_star(int n) {
  if (n < 3) throw InputError("a star needs at least 3 vertices");
  return Hypergraph3::from_pair_rows(n, [&](Vertex a, Vertex b, std::span<Word> out) {
    if (a == 0 || b == 0) std::fill(out.begin(), out.end(), ~Word{0});
    else bits::set(out, 0);
  });
}

// The 6-vertex, 10-edge base of the blow-up family, labels shifted to 0..5.
inline Hypergraph3 gen_hprime() {
  static constexpr std::array<std::array<Vertex, 3>, 10> kEdges{{
      {1, 2, 3}, {1, 2, 4}, {3, 4, 5}, {3, 4, 6}, {5, 6, 1}, {5, 6, 2}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
  Hypergraph3::Builder b(6);
  for (const auto& e : kEdges) b.add(e[0] - 1, e[1] - 1, e[2] - 1);
  return std::move(b).build();
}

// Parts are consecutive vertex ranges; a part may be empty.
inline Hypergraph3 gen_blowup(const Hypergraph3& base, std::span<const int> parts) {
  if (static_cast<int>(parts.size()) != base.n()) throw InputError("need one part size per base vertex");
  std::vector<Vertex> owner;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw InputError("part sizes must be non-negative");
    owner.insert(owner.end(), static_cast<std::size_t>(parts[i]), static_cast<Vertex>(i));
  }
  const int n = static_cast<int>(owner.size());
  return Hypergraph3::from_pair_rows(n, [&](Vertex a, Vertex b, std::span<Word> out) {
    const Vertex pa = owner[static_cast<std::size_t>(a)], pb = owner[static_cast<std::size_t>(b)];
    if (pa == pb) return;
    for (Vertex c = 0; c < n; ++c) {
      const Vertex pc = owner[static_cast<std::size_t>(c)];
      if (pc != pa && pc != pb && base.has_edge(pa, pb, pc)) bits::set(out, static_cast<std::size_t>(c));
    }
  });
}

inline Hypergraph3 gen_blowup(std::span<const int> parts) { return gen_blowup(gen_hprime(), parts); }

// Points 0..n-1 on a regular n-gon; a triple is an edge when its triangle
// contains the centre, i.e. all three arcs between chosen points are < n/2.
inline Hypergraph3 gen_ngon(int n) {
  if (n % 2 == 0) throw CapabilityError("the n-gon construction is only defined for odd n");
  if (n < 5) throw InputError("the n-gon construction needs n >= 5");
  Hypergraph3::Builder b(n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      for (Vertex z = y + 1; z < n; ++z)
        if (2 * (y - x) < n && 2 * (z - y) < n && 2 * (n - (z - x)) < n) b.add(x, y, z);
  return std::move(b).build();
}

// Triples spanning an odd number of edges of g.
inline Hypergraph3 gen_two_graph(const Graph2& g) {
  return Hypergraph3::from_pair_rows(g.n(), [&](Vertex a, Vertex b, std::span<Word> out) {
    auto ra = g.row(a), rb = g.row(b);
    const Word flip = g.has_edge(a, b) ? ~Word{0} : 0;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ra[i] ^ rb[i] ^ flip;
  });
}

// G(n, p): pairs visited in lexicographic order, one uniform draw each.
inline Graph2 gen_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  Graph2 g(n);
  Rng rng(seed);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) g.add_edge(u, v);
  return g;
}

// Random 3-graph with each triple present with probability p (lex order draws).
inline Hypergraph3 gen_random_hypergraph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  Rng rng(seed);
  Hypergraph3::Builder b(n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      for (Vertex z = y + 1; z < n; ++z)
        if (rng.uniform01() < p) b.add(x, y, z);
  return std::move(b).build();
}

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

struct ProjectivePlane {
  int q = 0;
  SetSystem lines;           // blocks are lines, vertices are points
  BipartiteGraph incidence;  // X = points, Y = lines
};

// PG(2, q) for prime q. Points and lines are normalised homogeneous triples
// (first non-zero coordinate 1) listed as (0,0,1), (0,1,z), (1,y,z).
inline ProjectivePlane gen_projective_plane(int q) {
  if (!is_prime(q)) throw InputError("projective planes are built for prime q only");
  std::vector<std::array<int, 3>> coords;
  coords.push_back({0, 0, 1});
  for (int z = 0; z < q; ++z) coords.push_back({0, 1, z});
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) coords.push_back({1, y, z});
  const int n = static_cast<int>(coords.size());
  ProjectivePlane pp{q, {}, BipartiteGraph(n, n)};
  std::vector<std::vector<Vertex>> blocks(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l)
    for (int p = 0; p < n; ++p) {
      const auto& a = coords[static_cast<std::size_t>(l)];
      const auto& b = coords[static_cast<std::size_t>(p)];
      if ((a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q == 0) {
        blocks[static_cast<std::size_t>(l)].push_back(p);
        pp.incidence.add_edge(p, l);
      }
    }
  pp.lines = SetSystem(n, std::move(blocks), true);
  return pp;
}

// A star on every line of PG(2, q), centred at the line's smallest point.
inline Hypergraph3 gen_plane_stars(int q) {
  auto pp = gen_projective_plane(q);
  Hypergraph3::Builder b(pp.lines.n());
  for (const auto& line : pp.lines.blocks())
    for (std::size_t i = 1; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j) b.add(line[0], line[i], line[j]);
  return std::move(b).build();
}

// Random greedy triple packing: all triples in shuffled order, each kept when
// it covers no covered pair. With several attempts the largest packing wins;
// `target` stops early once reached.
inline SetSystem gen_partial_steiner(int n, std::uint64_t seed, int attempts = 1, std::optional<int> target = std::nullopt) {
  if (n < 3) throw InputError("a partial Steiner system needs n >= 3");
  if (attempts < 1) throw InputError("attempts must be positive");
  std::vector<std::array<Vertex, 3>> all;
  all.reserve(static_cast<std::size_t>(binomial(n, 3)));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      for (Vertex z = y + 1; z < n; ++z) all.push_back({x, y, z});
  std::vector<std::vector<Vertex>> best;
  for (int a = 0; a < attempts; ++a) {
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(a));
    auto order = all;
    rng.shuffle(std::span(order));
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    auto cov = [&](Vertex u, Vertex v) -> std::uint8_t& {
      return covered[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    };
    std::vector<std::vector<Vertex>> blocks;
    for (const auto& t : order) {
      if (cov(t[0], t[1]) || cov(t[0], t[2]) || cov(t[1], t[2])) continue;
      cov(t[0], t[1]) = cov(t[0], t[2]) = cov(t[1], t[2]) = 1;
      blocks.push_back({t[0], t[1], t[2]});
      if (target && static_cast<int>(blocks.size()) >= *target) break;
    }
    if (blocks.size() > best.size()) best = std::move(blocks);
    if (target && static_cast<int>(best.size()) >= *target) break;
  }
  std::sort(best.begin(), best.end());
  return SetSystem(n, std::move(best), true);
}

// Three near-equal cliques A0, A1, A2 plus every triple with one vertex in
// A_i and two in A_{i+1} (indices mod 3).
inline Hypergraph3 gen_three_clique_cyclic(int n) {
  if (n < 3) throw InputError("the three-clique construction needs n >= 3");
  const std::array<int, 3> sizes{(n + 2) / 3, (n + 1) / 3, n / 3};
  std::vector<int> part(static_cast<std::size_t>(n));
  for (int i = 0, v = 0; i < 3; ++i)
    for (int k = 0; k < sizes[static_cast<std::size_t>(i)]; ++k) part[static_cast<std::size_t>(v++)] = i;
  auto is_edge = [&](Vertex x, Vertex y, Vertex z) {
    std::array<int, 3> cnt{};
    ++cnt[static_cast<std::size_t>(part[static_cast<std::size_t>(x)])];
    ++cnt[static_cast<std::size_t>(part[static_cast<std::size_t>(y)])];
    ++cnt[static_cast<std::size_t>(part[static_cast<std::size_t>(z)])];
    for (std::size_t i = 0; i < 3; ++i) {
      if (cnt[i] == 3) return true;
      if (cnt[i] == 1 && cnt[(i + 1) % 3] == 2) return true;
    }
    return false;
  };
  Hypergraph3::Builder b(n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      for (Vertex z = y + 1; z < n; ++z)
        if (is_edge(x, y, z)) b.add(x, y, z);
  return std::move(b).build();
}

// Complete 3-graph on 0..n-2; vertex n-1 is isolated.
inline Hypergraph3 gen_clique_plus_isolated(int n) {
  if (n < 4) throw InputError("clique plus isolated vertex needs n >= 4");
  return Hypergraph3::from_pair_rows(n, [&](Vertex a, Vertex b, std::span<Word> out) {
    if (a == n - 1 || b == n - 1) return;
    std::fill(out.begin(), out.end(), ~Word{0});
    bits::reset(out, static_cast<std::size_t>(n - 1));
  });
}

struct SubsampleConstruction {
  int q = 0;
  double p = 0.0;
  std::vector<int> kept_points;  // X as indices into the plane's points
  BipartiteGraph graph;          // X reindexed densely, Y = all lines
  SetSystem system;              // blocks N_G(y) with at least 2 points
  Hypergraph3 hypergraph;        // clique_fill(system)
  int max_block = 0;             // largest d(y), including lines left with < 2 points
};

// Random point subsample of PG(2, q), keeping each point with probability
// p = min(1, c_p * n^(-1/4) * ln(n)^2), n = q^2 + q + 1.
inline SubsampleConstruction gen_subsample_construction(int q, double c_p, std::uint64_t seed) {
  if (!(c_p > 0.0)) throw InputError("probability scale must be positive");
  auto pp = gen_projective_plane(q);
  const int n = pp.lines.n();
  const double nd = static_cast<double>(n);
  SubsampleConstruction out;
  out.q = q;
  out.p = std::min(1.0, c_p * std::pow(nd, -0.25) * std::log(nd) * std::log(nd));
  Rng rng(seed);
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    if (rng.uniform01() < out.p) {
      index[static_cast<std::size_t>(x)] = static_cast<int>(out.kept_points.size());
      out.kept_points.push_back(x);
    }
  const int nx = static_cast<int>(out.kept_points.size());
  out.graph = BipartiteGraph(nx, n);
  std::vector<std::vector<Vertex>> blocks;
  for (int y = 0; y < n; ++y) {
    std::vector<Vertex> nb;
    for (int x : pp.incidence.neighbours_y(y))
      if (index[static_cast<std::size_t>(x)] >= 0) {
        nb.push_back(index[static_cast<std::size_t>(x)]);
        out.graph.add_edge(index[static_cast<std::size_t>(x)], y);
      }
    out.max_block = std::max(out.max_block, static_cast<int>(nb.size()));
    if (nb.size() >= 2) blocks.push_back(std::move(nb));
  }
  out.system = SetSystem(nx, std::move(blocks), true);
  out.hypergraph = clique_fill(out.system);
  return out;
}

struct IteratedPartition {
  int r = 0;
  int m = 0;
  std::vector<std::vector<Vertex>> edges;  // sorted r-sets
  std::int64_t count = 0;                  // g_r(m)
  std::optional<Hypergraph3> hypergraph;   // present when r = 3
};

// Split into r near-equal parts (larger first), take every transversal r-set,
// recurse inside each part of size >= r.
inline IteratedPartition gen_iterated_partition(int r, int m) {
  if (r < 3 || m < r) throw InputError("iterated partition needs m >= r >= 3");
  IteratedPartition out{r, m, {}, 0, std::nullopt};
  auto rec = [&](auto&& self, Vertex first, int size) -> void {
    if (size < r) return;
    std::vector<std::pair<Vertex, int>> parts;
    Vertex v = first;
    for (int i = 0; i < r; ++i) {
      const int s = size / r + (i < size % r ? 1 : 0);
      parts.push_back({v, s});
      v += s;
    }
    std::vector<Vertex> cur;
    auto pick = [&](auto&& pself, int i) -> void {
      if (i == r) {
        out.edges.push_back(cur);
        return;
      }
      for (int k = 0; k < parts[static_cast<std::size_t>(i)].second; ++k) {
        cur.push_back(parts[static_cast<std::size_t>(i)].first + k);
        pself(pself, i + 1);
        cur.pop_back();
      }
    };
    pick(pick, 0);
    for (auto [start, s] : parts) self(self, start, s);
  };
  rec(rec, 0, m);
  std::sort(out.edges.begin(), out.edges.end());
  out.count = static_cast<std::int64_t>(out.edges.size());
  if (r == 3) {
    Hypergraph3::Builder b(m);
    for (const auto& e : out.edges) b.add(e[0], e[1], e[2]);
    out.hypergraph = std::move(b).build();
  }
  return out;
}

// Random union of stars whose supports pairwise share at most one vertex.
// Single edges count as stars. Support sizes are drawn from [3, max_support].
inline Hypergraph3 gen_random_star_forest(int n, std::uint64_t seed, int max_support = 6, int tries = 40) {
  if (n < 0) throw InputError("negative vertex count");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> supports;
  Hypergraph3::Builder b(n);
  if (n < 3) return std::move(b).build();
  std::vector<Vertex> verts(static_cast<std::size_t>(n));
  std::iota(verts.begin(), verts.end(), 0);
  for (int t = 0; t < tries; ++t) {
    const int hi = std::min(n, std::max(3, max_support));
    const int size = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - 2)));
    rng.shuffle(std::span(verts));
    std::vector<Vertex> s(verts.begin(), verts.begin() + size);
    bool ok = true;
    for (const auto& other : supports) {
      int common = 0;
      for (Vertex x : s) common += static_cast<int>(std::count(other.begin(), other.end(), x));
      if (common >= 2) ok = false;
    }
    if (!ok) continue;
    const Vertex centre = s[0];
    for (std::size_t i = 1; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) b.add(centre, s[i], s[j]);
    std::sort(s.begin(), s.end());
    supports.push_back(std::move(s));
  }
  return std::move(b).build();
}

}  // namespace hyperfree
