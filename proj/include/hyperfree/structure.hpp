#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hyperfree/canonical.hpp"
#include "hyperfree/freeness.hpp"
#include "hyperfree/generators.hpp"
#include "hyperfree/hypergraph.hpp"

namespace hyperfree {

struct TightComponent {
  std::vector<Triple> edges;    // lexicographic order
  std::vector<Vertex> support;  // ascending
  bool is_star = false;
  std::optional<Vertex> center;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent_[y] = x;  // the root is always the smallest index
  }

 private:
  std::vector<std::size_t> parent_;
};

inline void classify_star(TightComponent& c) {
  if (c.edges.size() == 1) {
    c.is_star = true;
    c.center = c.edges.front().a;
    return;
  }
  // In a component with >= 2 edges the first edge has a tight neighbour; the
  // centre of a star must lie in the pair they share.
  const Triple e = c.edges.front();
  std::array<Vertex, 2> shared{-1, -1};
  for (std::size_t i = 1; i < c.edges.size() && shared[0] < 0; ++i) {
    const Triple f = c.edges[i];
    std::vector<Vertex> common;
    for (Vertex x : {e.a, e.b, e.c})
      if (x == f.a || x == f.b || x == f.c) common.push_back(x);
    if (common.size() == 2) shared = {common[0], common[1]};
  }
  const auto leaves = static_cast<std::int64_t>(c.support.size()) - 1;
  for (Vertex centre : shared) {
    if (centre < 0) continue;
    if (static_cast<std::int64_t>(c.edges.size()) != binomial(leaves, 2)) break;
    const bool all = std::all_of(c.edges.begin(), c.edges.end(),
                                 [&](const Triple& t) { return t.a == centre || t.b == centre || t.c == centre; });
    if (all) {
      c.is_star = true;
      c.center = centre;
      return;
    }
  }
}

}  // namespace detail

// Partition of E(H) into tight components, ordered by their first edge.
inline std::vector<TightComponent> tight_components(const Hypergraph3& h) {
  const auto edges = h.edges();
  std::unordered_map<std::int64_t, std::size_t> id;
  id.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) id[colex_rank3(edges[i].a, edges[i].b, edges[i].c)] = i;
  auto index_of = [&](Vertex x, Vertex y, Vertex z) {
    auto t = Triple::sorted(x, y, z);
    return id.at(colex_rank3(t.a, t.b, t.c));
  };
  detail::UnionFind uf(edges.size());
  for (Vertex a = 0; a < h.n(); ++a)
    for (Vertex b = a + 1; b < h.n(); ++b) {
      auto row = h.pair_row(a, b);
      std::size_t first = bits::find_next(row, 0);
      if (first == bits::npos) continue;
      const std::size_t root = index_of(a, b, static_cast<Vertex>(first));
      for (std::size_t x = bits::find_next(row, first + 1); x != bits::npos; x = bits::find_next(row, x + 1))
        uf.unite(root, index_of(a, b, static_cast<Vertex>(x)));
    }
  std::vector<TightComponent> comps;
  std::vector<std::size_t> slot(edges.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::size_t r = uf.find(i);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].edges.push_back(edges[i]);
  }
  for (auto& c : comps) {
    for (const auto& t : c.edges) c.support.insert(c.support.end(), {t.a, t.b, t.c});
    std::sort(c.support.begin(), c.support.end());
    c.support.erase(std::unique(c.support.begin(), c.support.end()), c.support.end());
    detail::classify_star(c);
  }
  return comps;
}

struct CharacterizationReport {
  bool q_free_bruteforce = true;
  bool all_components_stars = true;
  std::vector<TightComponent> components;
  bool pairwise_support_overlap_ok = true;
  std::vector<Vertex> witness;  // violating 4-set when not free

  bool consistent() const noexcept {
    return q_free_bruteforce == all_components_stars && (!q_free_bruteforce || pairwise_support_overlap_ok);
  }
};

// Both sides of "{(4,2),(4,4)}-free iff every tight component is a star",
// computed independently, plus the pairwise support overlap condition.
inline CharacterizationReport check_charac_2_4(const Hypergraph3& h) {
  CharacterizationReport rep;
  auto chk = is_q_free(h, ForbiddenFamily::of_sizes(3, 4, {2, 4}));
  rep.q_free_bruteforce = chk.free;
  rep.witness = std::move(chk.witness);
  rep.components = tight_components(h);
  rep.all_components_stars =
      std::all_of(rep.components.begin(), rep.components.end(), [](const TightComponent& c) { return c.is_star; });
  std::vector<std::vector<std::size_t>> by_vertex(static_cast<std::size_t>(h.n()));
  for (std::size_t i = 0; i < rep.components.size(); ++i)
    for (Vertex v : rep.components[i].support) by_vertex[static_cast<std::size_t>(v)].push_back(i);
  // Count shared vertices per component pair through the vertex lists.
  std::unordered_map<std::uint64_t, int> shared;
  for (const auto& list : by_vertex)
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        if (++shared[(static_cast<std::uint64_t>(list[i]) << 32) | list[j]] > 1) rep.pairwise_support_overlap_ok = false;
  return rep;
}

struct EdgeBound {
  std::int64_t edges = 0;
  std::int64_t bound = 0;  // C(n-1, 2)
  bool holds = true;
  bool equality = false;
};

// Intended for {(4,2),(4,4)}-free input; anything else is rejected with the
// violating 4-set.
inline EdgeBound edge_bound_check(const Hypergraph3& h) {
  auto chk = is_q_free(h, ForbiddenFamily::of_sizes(3, 4, {2, 4}));
  if (!chk) throw NotFreeError("hypergraph is not {(4,2),(4,4)}-free", chk.witness);
  EdgeBound out;
  out.edges = h.edge_count();
  out.bound = binomial(std::max(h.n() - 1, 0), 2);
  out.holds = out.edges <= out.bound;
  out.equality = out.edges == out.bound;
  return out;
}

// Every 4-set spans an even number of edges.
inline bool two_graph_parity_check(const Hypergraph3& h) {
  bool ok = true;
  detail::for_each_four_slice(h, [&](Vertex, Vertex, Vertex, bool e, std::size_t, Word s0, Word, Word live) {
    if (((e ? ~s0 : s0) & live) != 0) ok = false;
    return ok;
  });
  return ok;
}

// An induced 4-cycle x-y-z-w in L(v), listed in cycle order, if any.
inline std::optional<std::array<Vertex, 4>> find_link_induced_c4(const Hypergraph3& h, Vertex v) {
  detail::check_vertex(h.n(), v);
  const int n = h.n();
  for (Vertex x = 0; x < n; ++x) {
    if (x == v) continue;
    for (Vertex z = x + 1; z < n; ++z) {
      if (z == v || h.has_edge(v, x, z)) continue;
      // Common link neighbours of the non-adjacent pair x, z must form a clique.
      auto rx = h.pair_row(v, x), rz = h.pair_row(v, z);
      std::vector<Vertex> common;
      for (std::size_t i = 0; i < rx.size(); ++i) {
        Word w = rx[i] & rz[i];
        while (w) {
          common.push_back(static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
          w &= w - 1;
        }
      }
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          if (!h.has_edge(v, common[i], common[j])) return std::array<Vertex, 4>{x, common[i], z, common[j]};
    }
  }
  return std::nullopt;
}

inline bool link_c4_check(const Hypergraph3& h, Vertex v) { return !find_link_induced_c4(h, v).has_value(); }

enum class FFKind { blowup, ngon, neither };

struct FFClassification {
  FFKind kind = FFKind::neither;
  bool free = false;
  std::vector<Vertex> witness;                // violating 4-set when not free
  std::optional<std::array<int, 6>> parts;    // part sizes over the base vertices 0..5
  std::vector<int> part_of;                   // base vertex of every input vertex
  bool ngon = false;                          // isomorphic to gen_ngon(n)
};

namespace detail {

// x and y are twins when exchanging them preserves the edge set.
inline bool are_twins(const Hypergraph3& h, Vertex x, Vertex y) {
  const int n = h.n();
  for (Vertex z = 0; z < n; ++z) {
    if (z == x || z == y) continue;
    auto rx = h.pair_row(x, z), ry = h.pair_row(y, z);
    for (Vertex w = 0; w < n; ++w) {
      if (w == x || w == y || w == z) continue;
      if (bits::test(rx, static_cast<std::size_t>(w)) != bits::test(ry, static_cast<std::size_t>(w))) return false;
    }
  }
  return true;
}

inline bool blowup_consistent(const Hypergraph3& h, const Hypergraph3& base, const std::vector<int>& part_of) {
  const int n = h.n();
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      for (Vertex z = y + 1; z < n; ++z) {
        const int a = part_of[static_cast<std::size_t>(x)], b = part_of[static_cast<std::size_t>(y)],
                  c = part_of[static_cast<std::size_t>(z)];
        const bool want = a != b && b != c && a != c && base.has_edge(a, b, c);
        if (h.has_edge(x, y, z) != want) return false;
      }
  return true;
}

// Vertex-by-vertex assignment, used when twin classes merge several parts.
inline std::optional<std::vector<int>> blowup_assign(const Hypergraph3& h, const Hypergraph3& base) {
  const int n = h.n();
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  auto rec = [&](auto&& self, Vertex x) -> bool {
    if (x == n) return true;
    for (int p = 0; p < base.n(); ++p) {
      bool ok = true;
      for (Vertex y = 0; y < x && ok; ++y)
        for (Vertex z = y + 1; z < x && ok; ++z) {
          const int a = part[static_cast<std::size_t>(y)], b = part[static_cast<std::size_t>(z)];
          const bool want = a != b && a != p && b != p && base.has_edge(a, b, p);
          ok = h.has_edge(y, z, x) == want;
        }
      if (!ok) continue;
      part[static_cast<std::size_t>(x)] = p;
      if (self(self, x + 1)) return true;
    }
    part[static_cast<std::size_t>(x)] = -1;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return part;
}

}  // namespace detail

// Is H a blow-up of the 6-vertex base (parts may be empty) or the n-gon
// hypergraph? Inputs that are not {(4,1),(4,3),(4,4)}-free are rejected with
// a witness. Twin classes are matched to base vertices first; among all
// matches the lexicographically least part vector is reported.
inline FFClassification ff_recognize(const Hypergraph3& h) {
  FFClassification out;
  auto chk = is_q_free(h, ForbiddenFamily::of_sizes(3, 4, {1, 3, 4}));
  out.free = chk.free;
  if (!chk) {
    out.witness = std::move(chk.witness);
    return out;
  }
  const int n = h.n();
  if (n >= 5 && n % 2 == 1) out.ngon = are_isomorphic(h, gen_ngon(n));

  const Hypergraph3 base = gen_hprime();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> reps;
  for (Vertex x = 0; x < n; ++x) {
    if (cls[static_cast<std::size_t>(x)] >= 0) continue;
    cls[static_cast<std::size_t>(x)] = static_cast<int>(reps.size());
    for (Vertex y = x + 1; y < n; ++y)
      if (cls[static_cast<std::size_t>(y)] < 0 && detail::are_twins(h, x, y)) cls[static_cast<std::size_t>(y)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  std::vector<int> sizes(reps.size(), 0);
  for (int c : cls) ++sizes[static_cast<std::size_t>(c)];

  std::optional<std::array<int, 6>> best;
  std::vector<int> best_part_of;
  if (reps.size() <= 6) {
    std::array<int, 6> targets{0, 1, 2, 3, 4, 5};
    do {
      // Only the first reps.size() targets matter; skip repeated prefixes.
      bool canonical_tail = std::is_sorted(targets.begin() + static_cast<std::ptrdiff_t>(reps.size()), targets.end());
      if (!canonical_tail) continue;
      std::vector<int> part_of(static_cast<std::size_t>(n));
      for (Vertex x = 0; x < n; ++x) part_of[static_cast<std::size_t>(x)] = targets[static_cast<std::size_t>(cls[static_cast<std::size_t>(x)])];
      if (!detail::blowup_consistent(h, base, part_of)) continue;
      std::array<int, 6> parts{};
      for (std::size_t c = 0; c < reps.size(); ++c) parts[static_cast<std::size_t>(targets[c])] = sizes[c];
      if (!best || parts < *best) {
        best = parts;
        best_part_of = std::move(part_of);
      }
    } while (std::next_permutation(targets.begin(), targets.end()));
  }
  if (!best && !out.ngon) {
    if (auto assign = detail::blowup_assign(h, base)) {
      std::array<int, 6> parts{};
      for (int p : *assign) ++parts[static_cast<std::size_t>(p)];
      best = parts;
      best_part_of = std::move(*assign);
    }
  }
  out.parts = best;
  out.part_of = std::move(best_part_of);
  out.kind = out.parts ? FFKind::blowup : (out.ngon ? FFKind::ngon : FFKind::neither);
  return out;
}

inline const char* to_string(FFKind k) noexcept {
  switch (k) {
    case FFKind::blowup: return "blowup";
    case FFKind::ngon: return "ngon";
    default: return "neither";
  }
}

}  // namespace hyperfree
