#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "hyperfree/hypergraph.hpp"

namespace hyperfree {

enum class CanonicalMode { exact, hash };

inline constexpr int kExactCanonicalMaxN = 8;

// Exact keys are the flat colex mask of a canonical relabelling, minimal in
// lexicographic order read from rank 0 upwards. Hash keys are a relabelling
// invariant digest only: equal hashes do not imply isomorphism.
struct CanonicalForm {
  CanonicalMode mode = CanonicalMode::exact;
  int n = 0;
  std::uint64_t value = 0;
  std::vector<Vertex> labeling;  // exact mode: vertex -> canonical position

  friend bool operator==(const CanonicalForm& x, const CanonicalForm& y) noexcept {
    return x.mode == y.mode && x.n == y.n && x.value == y.value;
  }

  friend std::strong_ordering operator<=>(const CanonicalForm& x, const CanonicalForm& y) noexcept {
    if (auto c = x.mode <=> y.mode; c != 0) return c;
    if (auto c = x.n <=> y.n; c != 0) return c;
    if (x.value == y.value) return std::strong_ordering::equal;
    const std::uint64_t diff = x.value ^ y.value;
    const std::uint64_t low = diff & (~diff + 1);
    return (x.value & low) == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Relabelling-invariant fingerprint of each vertex: degree and the sorted
// multiset of its codegrees.
inline std::vector<std::uint64_t> vertex_invariants(const Hypergraph3& h) {
  const int n = h.n();
  std::vector<std::uint64_t> inv(static_cast<std::size_t>(n));
  std::vector<int> co;
  for (Vertex v = 0; v < n; ++v) {
    co.clear();
    int deg2 = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (u == v) continue;
      int c = h.codegree(v, u);
      co.push_back(c);
      deg2 += c;
    }
    std::sort(co.begin(), co.end());
    std::uint64_t x = mix64(static_cast<std::uint64_t>(deg2 / 2));
    for (int c : co) x = mix64(x ^ static_cast<std::uint64_t>(c));
    // Keep the degree in the high bits so sorting by invariant sorts by degree first.
    inv[static_cast<std::size_t>(v)] = (static_cast<std::uint64_t>(deg2 / 2) << 40) | (x & ((std::uint64_t{1} << 40) - 1));
  }
  return inv;
}

struct CanonSearch {
  const Hypergraph3& h;
  int n;
  std::vector<std::uint64_t> slot_inv;  // invariant required at each position
  std::vector<std::uint64_t> inv;
  std::vector<Vertex> at;  // position -> vertex
  std::vector<bool> used;
  std::uint64_t best = 0;
  std::vector<Vertex> best_at;
  bool have_best = false;

  // True when x > y on the bits below `upto`, read from bit 0.
  static bool prefix_greater(std::uint64_t x, std::uint64_t y, std::uint64_t upto_mask) noexcept {
    std::uint64_t d = (x ^ y) & upto_mask;
    if (d == 0) return false;
    std::uint64_t low = d & (~d + 1);
    return (x & low) != 0;
  }

  void run(int p, std::uint64_t mask) {
    if (p == n) {
      if (!have_best || prefix_greater(best, mask, ~std::uint64_t{0})) {
        best = mask;
        best_at = at;
        have_best = true;
      }
      return;
    }
    const int bits_known = static_cast<int>(binomial(p + 1, 3));
    const std::uint64_t upto = bits_known >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_known) - 1;
    for (Vertex v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] || inv[static_cast<std::size_t>(v)] != slot_inv[static_cast<std::size_t>(p)]) continue;
      std::uint64_t m = mask;
      for (int j = 1; j < p; ++j)
        for (int i = 0; i < j; ++i)
          if (h.has_edge(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(j)], v))
            m |= std::uint64_t{1} << colex_rank3(i, j, p);
      if (have_best && prefix_greater(m, best, upto)) continue;
      used[static_cast<std::size_t>(v)] = true;
      at[static_cast<std::size_t>(p)] = v;
      run(p + 1, m);
      used[static_cast<std::size_t>(v)] = false;
    }
  }
};

}  // namespace detail

// Exact mode (n <= 8) minimises the flat mask over relabellings that list
// vertices in ascending invariant order; hash mode works for any n.
inline CanonicalForm canonical_key(const Hypergraph3& h, CanonicalMode mode = CanonicalMode::exact) {
  const int n = h.n();
  auto inv = detail::vertex_invariants(h);
  if (mode == CanonicalMode::hash) {
    std::sort(inv.begin(), inv.end());
    std::uint64_t x = detail::mix64(static_cast<std::uint64_t>(n)) ^ detail::mix64(static_cast<std::uint64_t>(h.edge_count()) + 1);
    for (auto v : inv) x = detail::mix64(x ^ v);
    return {CanonicalMode::hash, n, x, {}};
  }
  if (n > kExactCanonicalMaxN)
    throw CapabilityError("exact canonical form is limited to n <= " + std::to_string(kExactCanonicalMaxN));
  detail::CanonSearch s{h, n, inv, inv, std::vector<Vertex>(static_cast<std::size_t>(n)),
                        std::vector<bool>(static_cast<std::size_t>(n), false), 0, {}, false};
  std::sort(s.slot_inv.begin(), s.slot_inv.end());
  s.run(0, 0);
  CanonicalForm out{CanonicalMode::exact, n, s.best, std::vector<Vertex>(static_cast<std::size_t>(n))};
  for (int p = 0; p < n; ++p) out.labeling[static_cast<std::size_t>(s.best_at[static_cast<std::size_t>(p)])] = p;
  return out;
}

// The canonical relabelling itself (exact mode).
inline Hypergraph3 canonical_form(const Hypergraph3& h) {
  return Hypergraph3::from_flat_mask(h.n(), canonical_key(h).value);
}

// Backtracking isomorphism search for any n; returns map[v] = image of v in g.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Hypergraph3& h, const Hypergraph3& g) {
  const int n = h.n();
  if (n != g.n() || h.edge_count() != g.edge_count()) return std::nullopt;
  auto ih = detail::vertex_invariants(h);
  auto ig = detail::vertex_invariants(g);
  {
    auto a = ih, b = ig;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // Visit h's vertices rarest-invariant first to cut branching early.
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto freq = [&](Vertex v) {
    return std::count(ih.begin(), ih.end(), ih[static_cast<std::size_t>(v)]);
  };
  std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return freq(x) < freq(y); });

  std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    const Vertex v = order[static_cast<std::size_t>(k)];
    for (Vertex t = 0; t < n; ++t) {
      if (used[static_cast<std::size_t>(t)] || ig[static_cast<std::size_t>(t)] != ih[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        const Vertex u = order[static_cast<std::size_t>(i)];
        const Vertex mu = map[static_cast<std::size_t>(u)];
        if (h.codegree(u, v) != g.codegree(mu, t)) ok = false;
        for (int j = i + 1; j < k && ok; ++j) {
          const Vertex w = order[static_cast<std::size_t>(j)];
          if (h.has_edge(u, w, v) != g.has_edge(mu, map[static_cast<std::size_t>(w)], t)) ok = false;
        }
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = t;
      used[static_cast<std::size_t>(t)] = true;
      if (self(self, k + 1)) return true;
      used[static_cast<std::size_t>(t)] = false;
      map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

inline bool are_isomorphic(const Hypergraph3& h, const Hypergraph3& g) { return find_isomorphism(h, g).has_value(); }

}  // namespace hyperfree
