#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperfree/bitset.hpp"
#include "hyperfree/combinatorics.hpp"
#include "hyperfree/error.hpp"

namespace hyperfree {

using Vertex = int;

// A sorted triple {a < b < c}.
struct Triple {
  Vertex a = 0, b = 0, c = 0;

  static Triple sorted(Vertex x, Vertex y, Vertex z) noexcept {
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return {x, y, z};
  }

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

namespace detail {

inline void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n)
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
}

inline void check_distinct(Vertex a, Vertex b, Vertex c) {
  if (a == b || b == c || a == c) throw InputError("triple has repeated vertices");
}

}  // namespace detail

// Simple graph with bit-row adjacency.
class Graph2 {
 public:
  Graph2() = default;
  explicit Graph2(int n) : n_(n), w_(words_for(static_cast<std::size_t>(n))), rows_(static_cast<std::size_t>(n) * w_) {
    if (n < 0) throw InputError("negative vertex count");
  }

  Graph2(int n, std::span<const std::array<Vertex, 2>> edges) : Graph2(n) {
    for (auto [u, v] : edges) {
      if (!add_edge(u, v)) throw InputError("duplicate graph edge");
    }
  }

  int n() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return edges_; }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return u != v && bits::test(row(u), static_cast<std::size_t>(v));
  }

  std::span<const Word> row(Vertex u) const noexcept {
    return {rows_.data() + static_cast<std::size_t>(u) * w_, w_};
  }

  int degree(Vertex u) const noexcept { return static_cast<int>(bits::count(row(u))); }

  // Returns false if the edge was already present. Only meant for building.
  bool add_edge(Vertex u, Vertex v) {
    detail::check_vertex(n_, u);
    detail::check_vertex(n_, v);
    if (u == v) throw InputError("graph loop");
    if (has_edge(u, v)) return false;
    bits::set(mut_row(u), static_cast<std::size_t>(v));
    bits::set(mut_row(v), static_cast<std::size_t>(u));
    ++edges_;
    return true;
  }

  std::vector<std::array<Vertex, 2>> edges() const {
    std::vector<std::array<Vertex, 2>> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (Vertex u = 0; u < n_; ++u) {
      std::size_t v = bits::find_next(row(u), static_cast<std::size_t>(u) + 1);
      for (; v != bits::npos; v = bits::find_next(row(u), v + 1)) out.push_back({u, static_cast<Vertex>(v)});
    }
    return out;
  }

  friend bool operator==(const Graph2&, const Graph2&) = default;

 private:
  std::span<Word> mut_row(Vertex u) noexcept { return {rows_.data() + static_cast<std::size_t>(u) * w_, w_}; }

  int n_ = 0;
  std::size_t w_ = 0;
  std::vector<Word> rows_;
  std::int64_t edges_ = 0;
};

// 3-uniform hypergraph on vertices 0..n-1.
//
// Stored as one bit row per ordered vertex pair: bit x of row(a, b) is set iff
// {a, b, x} is an edge. Triple membership is O(1) and the edges through a pair
// are a single row scan. Memory is n^2 * ceil(n/64) words, fine for n in the
// low thousands.
class Hypergraph3 {
 public:
  class Builder;

  Hypergraph3() = default;
  explicit Hypergraph3(int n) : n_(n), w_(words_for(static_cast<std::size_t>(n))) {
    if (n < 0) throw InputError("negative vertex count");
    rows_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * w_, 0);
  }

  // Throws InputError on out-of-range, repeated or duplicate triples.
  Hypergraph3(int n, std::span<const Triple> edges);

  int n() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return edges_; }
  std::size_t row_words() const noexcept { return w_; }

  bool has_edge(Vertex a, Vertex b, Vertex c) const noexcept {
    return a != b && bits::test(pair_row(a, b), static_cast<std::size_t>(c));
  }
  bool has_edge(const Triple& t) const noexcept { return has_edge(t.a, t.b, t.c); }

  // Common neighbourhood {x : abx in E}.
  std::span<const Word> pair_row(Vertex a, Vertex b) const noexcept {
    return {rows_.data() + (static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)) * w_, w_};
  }

  int codegree(Vertex a, Vertex b) const noexcept { return static_cast<int>(bits::count(pair_row(a, b))); }

  int degree(Vertex v) const noexcept {
    std::size_t s = 0;
    for (Vertex u = 0; u < n_; ++u) s += bits::count(pair_row(v, u));
    return static_cast<int>(s / 2);
  }

  // Visits edges in lexicographic order.
  template <typename F>
  void for_each_edge(F&& f) const {
    for (Vertex a = 0; a < n_; ++a) {
      for (Vertex b = a + 1; b < n_; ++b) {
        auto r = pair_row(a, b);
        for (std::size_t c = bits::find_next(r, static_cast<std::size_t>(b) + 1); c != bits::npos;
             c = bits::find_next(r, c + 1))
          f(Triple{a, b, static_cast<Vertex>(c)});
      }
    }
  }

  std::vector<Triple> edges() const {
    std::vector<Triple> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for_each_edge([&](const Triple& t) { out.push_back(t); });
    return out;
  }

  // Flat colex representation: bit colex_rank3(a,b,c) set iff abc is an edge.
  DynBitset flat_bits() const {
    DynBitset out(static_cast<std::size_t>(binomial(n_, 3)));
    for_each_edge([&](const Triple& t) { out.set(static_cast<std::size_t>(colex_rank3(t.a, t.b, t.c))); });
    return out;
  }

  // Same as flat_bits for n <= 8, packed into one word.
  std::uint64_t flat_mask() const {
    if (n_ > 8) throw CapabilityError("flat_mask needs n <= 8");
    std::uint64_t m = 0;
    for_each_edge([&](const Triple& t) { m |= std::uint64_t{1} << colex_rank3(t.a, t.b, t.c); });
    return m;
  }

  static Hypergraph3 from_flat(int n, const DynBitset& flat);
  static Hypergraph3 from_flat_mask(int n, std::uint64_t mask);

  // Builds the hypergraph directly from pair rows. fill(a, b, out) is called
  // for a < b and must write the row of {a, b}; it must be symmetric in the
  // sense that bit c of row(a,b) equals bit b of row(a,c). Bits a and b are
  // cleared afterwards.
  template <typename Fill>
  static Hypergraph3 from_pair_rows(int n, Fill&& fill);

  friend bool operator==(const Hypergraph3& x, const Hypergraph3& y) noexcept {
    return x.n_ == y.n_ && x.rows_ == y.rows_;
  }

 private:
  std::span<Word> mut_row(Vertex a, Vertex b) noexcept {
    return {rows_.data() + (static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)) * w_, w_};
  }

  void set_triple(Vertex a, Vertex b, Vertex c) noexcept {
    bits::set(mut_row(a, b), static_cast<std::size_t>(c));
    bits::set(mut_row(b, a), static_cast<std::size_t>(c));
    bits::set(mut_row(a, c), static_cast<std::size_t>(b));
    bits::set(mut_row(c, a), static_cast<std::size_t>(b));
    bits::set(mut_row(b, c), static_cast<std::size_t>(a));
    bits::set(mut_row(c, b), static_cast<std::size_t>(a));
  }

  void recount() noexcept {
    std::size_t s = 0;
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = a + 1; b < n_; ++b) s += bits::count(pair_row(a, b));
    edges_ = static_cast<std::int64_t>(s / 3);
  }

  int n_ = 0;
  std::size_t w_ = 0;
  std::vector<Word> rows_;
  std::int64_t edges_ = 0;
};

// Incremental construction; adding an existing edge is a no-op.
class Hypergraph3::Builder {
 public:
  explicit Builder(int n) : h_(n) {}

  int n() const noexcept { return h_.n(); }

  bool add(Vertex a, Vertex b, Vertex c) {
    detail::check_vertex(h_.n_, a);
    detail::check_vertex(h_.n_, b);
    detail::check_vertex(h_.n_, c);
    detail::check_distinct(a, b, c);
    if (h_.has_edge(a, b, c)) return false;
    h_.set_triple(a, b, c);
    ++h_.edges_;
    return true;
  }
  bool add(const Triple& t) { return add(t.a, t.b, t.c); }

  bool contains(Vertex a, Vertex b, Vertex c) const noexcept { return h_.has_edge(a, b, c); }

  Hypergraph3 build() && { return std::move(h_); }
  Hypergraph3 build() const& { return h_; }

 private:
  Hypergraph3 h_;
};

inline Hypergraph3::Hypergraph3(int n, std::span<const Triple> edges) : Hypergraph3(n) {
  for (const Triple& t : edges) {
    detail::check_vertex(n, t.a);
    detail::check_vertex(n, t.b);
    detail::check_vertex(n, t.c);
    detail::check_distinct(t.a, t.b, t.c);
    if (has_edge(t)) throw InputError("duplicate edge");
    set_triple(t.a, t.b, t.c);
    ++edges_;
  }
}

inline Hypergraph3 Hypergraph3::from_flat(int n, const DynBitset& flat) {
  if (flat.size() != static_cast<std::size_t>(binomial(n, 3))) throw InputError("flat representation has wrong length");
  Hypergraph3 h(n);
  flat.for_each([&](std::size_t r) {
    auto [a, b, c] = colex_unrank3(static_cast<std::int64_t>(r));
    h.set_triple(a, b, c);
    ++h.edges_;
  });
  return h;
}

inline Hypergraph3 Hypergraph3::from_flat_mask(int n, std::uint64_t mask) {
  if (n > 8) throw CapabilityError("from_flat_mask needs n <= 8");
  Hypergraph3 h(n);
  for (Vertex c = 2; c < n; ++c)
    for (Vertex b = 1; b < c; ++b)
      for (Vertex a = 0; a < b; ++a)
        if ((mask >> colex_rank3(a, b, c)) & 1U) {
          h.set_triple(a, b, c);
          ++h.edges_;
        }
  return h;
}

template <typename Fill>
Hypergraph3 Hypergraph3::from_pair_rows(int n, Fill&& fill) {
  Hypergraph3 h(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      auto r = h.mut_row(a, b);
      fill(a, b, r);
      if (!r.empty()) r.back() &= bits::tail_mask(static_cast<std::size_t>(n));
      bits::reset(r, static_cast<std::size_t>(a));
      bits::reset(r, static_cast<std::size_t>(b));
      std::copy(r.begin(), r.end(), h.mut_row(b, a).begin());
    }
  }
  h.recount();
  return h;
}

// Number of edges e with e a subset of s.
inline std::int64_t induced_edge_count(const Hypergraph3& h, std::span<const Vertex> s) {
  for (Vertex v : s) detail::check_vertex(h.n(), v);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (std::size_t k = j + 1; k < s.size(); ++k)
        if (h.has_edge(s[i], s[j], s[k])) ++count;
  return count;
}

inline std::int64_t induced_edge_count(const Graph2& g, std::span<const Vertex> s) {
  for (Vertex v : s) detail::check_vertex(g.n(), v);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) ++count;
  return count;
}

inline Hypergraph3 complement(const Hypergraph3& h) {
  return Hypergraph3::from_pair_rows(h.n(), [&](Vertex a, Vertex b, std::span<Word> out) {
    auto r = h.pair_row(a, b);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ~r[i];
  });
}

inline Graph2 complement(const Graph2& g) {
  Graph2 out(g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

// Sub-hypergraph induced by `keep`, relabelled 0..|keep|-1 in the given order.
inline Hypergraph3 induced_subgraph(const Hypergraph3& h, std::span<const Vertex> keep) {
  for (Vertex v : keep) detail::check_vertex(h.n(), v);
  const int k = static_cast<int>(keep.size());
  Hypergraph3::Builder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l)
        if (h.has_edge(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)], keep[static_cast<std::size_t>(l)]))
          b.add(i, j, l);
  return std::move(b).build();
}

// Relabels vertex v as perm[v].
inline Hypergraph3 relabel(const Hypergraph3& h, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != h.n()) throw InputError("permutation has wrong length");
  std::vector<bool> hit(perm.size(), false);
  for (Vertex p : perm) {
    detail::check_vertex(h.n(), p);
    if (hit[static_cast<std::size_t>(p)]) throw InputError("relabelling is not a permutation");
    hit[static_cast<std::size_t>(p)] = true;
  }
  Hypergraph3::Builder b(h.n());
  h.for_each_edge([&](const Triple& t) {
    b.add(perm[static_cast<std::size_t>(t.a)], perm[static_cast<std::size_t>(t.b)], perm[static_cast<std::size_t>(t.c)]);
  });
  return std::move(b).build();
}

struct LinkGraph {
  Graph2 graph;
  std::vector<Vertex> vertices;  // local index -> host vertex
};

// L(v), or L_S(v) when `restrict_to` is given. Local vertices follow the order
// of `restrict_to` (ascending host order by default).
inline LinkGraph link_graph(const Hypergraph3& h, Vertex v, std::optional<std::span<const Vertex>> restrict_to = std::nullopt) {
  detail::check_vertex(h.n(), v);
  std::vector<Vertex> verts;
  if (restrict_to) {
    verts.assign(restrict_to->begin(), restrict_to->end());
    std::vector<bool> seen(static_cast<std::size_t>(h.n()), false);
    for (Vertex x : verts) {
      detail::check_vertex(h.n(), x);
      if (x == v) throw InputError("link vertex must not belong to the restriction set");
      if (seen[static_cast<std::size_t>(x)]) throw InputError("restriction set has repeated vertices");
      seen[static_cast<std::size_t>(x)] = true;
    }
  } else {
    for (Vertex x = 0; x < h.n(); ++x)
      if (x != v) verts.push_back(x);
  }
  Graph2 g(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (h.has_edge(v, verts[i], verts[j])) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return {std::move(g), std::move(verts)};
}

}  // namespace hyperfree
