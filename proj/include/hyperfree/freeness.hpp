#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "hyperfree/family.hpp"
#include "hyperfree/hypergraph.hpp"

namespace hyperfree {

struct FreenessCheck {
  bool free = true;
  std::vector<Vertex> witness;  // lexicographically first violating set when !free

  explicit operator bool() const noexcept { return free; }
};

namespace detail {

// Per-(a<b<c) view of the 4-sets {a,b,c,d}, d > c: the three pair rows through
// the new vertex are summed bit-sliced, giving for every d the number of edges
// among abd, acd, bcd as (s1 s0) in binary.
template <typename Visit>
void for_each_four_slice(const Hypergraph3& h, Visit&& visit) {
  const int n = h.n();
  const std::size_t w = h.row_words();
  const Word tail = bits::tail_mask(static_cast<std::size_t>(n));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      auto ab = h.pair_row(a, b);
      for (Vertex c = b + 1; c + 1 < n; ++c) {
        auto ac = h.pair_row(a, c);
        auto bc = h.pair_row(b, c);
        const bool e = bits::test(ab, static_cast<std::size_t>(c));
        const std::size_t first = static_cast<std::size_t>(c + 1);
        for (std::size_t wi = first / kWordBits; wi < w; ++wi) {
          Word x = ab[wi], y = ac[wi], z = bc[wi];
          Word s0 = x ^ y ^ z;
          Word s1 = (x & y) | (x & z) | (y & z);
          Word live = ~Word{0};
          if (wi == first / kWordBits) live &= ~Word{0} << (first % kWordBits);
          if (wi + 1 == w) live &= tail;
          if (!visit(a, b, c, e, wi, s0, s1, live)) return;
        }
      }
    }
  }
}

inline Word count_equals(Word s0, Word s1, int target) noexcept {
  switch (target) {
    case 0: return ~s0 & ~s1;
    case 1: return s0 & ~s1;
    case 2: return ~s0 & s1;
    case 3: return s0 & s1;
    default: return 0;
  }
}

// Lexicographic DFS over m-subsets with an incremental edge count.
template <typename AddCount>
bool first_violation(int n, int m, const std::vector<bool>& forbidden, AddCount&& added, std::vector<Vertex>& witness) {
  std::vector<Vertex> cur;
  cur.reserve(static_cast<std::size_t>(m));
  auto rec = [&](auto&& self, Vertex start, std::int64_t count) -> bool {
    if (static_cast<int>(cur.size()) == m) {
      if (forbidden[static_cast<std::size_t>(count)]) {
        witness = cur;
        return true;
      }
      return false;
    }
    const int need = m - static_cast<int>(cur.size());
    for (Vertex v = start; v <= n - need; ++v) {
      std::int64_t extra = added(cur, v);
      cur.push_back(v);
      if (self(self, v + 1, count + extra)) return true;
      cur.pop_back();
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace detail

// Q-freeness for 3-graphs. Orders are checked smallest first; the witness is
// the lexicographically first violating subset of that order.
inline FreenessCheck is_q_free(const Hypergraph3& h, const ForbiddenFamily& q) {
  if (q.r() != 3) throw InputError("is_q_free expects a family at uniformity 3");
  const int n = h.n();
  for (int m : q.orders()) {
    if (m > n) continue;
    if (m == 4) {
      std::array<bool, 4> want0{}, want1{};
      for (const auto& p : q.pairs()) {
        if (p.m != 4) continue;
        if (p.f <= 3) want0[static_cast<std::size_t>(p.f)] = true;
        if (p.f >= 1) want1[static_cast<std::size_t>(p.f - 1)] = true;
      }
      FreenessCheck out;
      detail::for_each_four_slice(h, [&](Vertex a, Vertex b, Vertex c, bool e, std::size_t wi, Word s0, Word s1, Word live) {
        const auto& want = e ? want1 : want0;
        Word bad = 0;
        for (int t = 0; t < 4; ++t)
          if (want[static_cast<std::size_t>(t)]) bad |= detail::count_equals(s0, s1, t);
        bad &= live;
        if (bad == 0) return true;
        out.free = false;
        out.witness = {a, b, c, static_cast<Vertex>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(bad)))};
        return false;
      });
      if (!out.free) return out;
      continue;
    }
    std::vector<bool> forbidden(static_cast<std::size_t>(binomial(m, 3)) + 1, false);
    for (const auto& p : q.pairs())
      if (p.m == m) forbidden[static_cast<std::size_t>(p.f)] = true;
    FreenessCheck out;
    auto added = [&](const std::vector<Vertex>& cur, Vertex v) {
      std::int64_t c = 0;
      for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = i + 1; j < cur.size(); ++j)
          if (h.has_edge(cur[i], cur[j], v)) ++c;
      return c;
    };
    if (detail::first_violation(n, m, forbidden, added, out.witness)) {
      out.free = false;
      return out;
    }
  }
  return {};
}

inline FreenessCheck is_q_free_graph(const Graph2& g, const ForbiddenFamily& q) {
  if (q.r() != 2) throw InputError("is_q_free_graph expects a family at uniformity 2");
  for (int m : q.orders()) {
    if (m > g.n()) continue;
    std::vector<bool> forbidden(static_cast<std::size_t>(binomial(m, 2)) + 1, false);
    for (const auto& p : q.pairs())
      if (p.m == m) forbidden[static_cast<std::size_t>(p.f)] = true;
    FreenessCheck out;
    auto added = [&](const std::vector<Vertex>& cur, Vertex v) {
      std::int64_t c = 0;
      for (Vertex x : cur)
        if (g.has_edge(x, v)) ++c;
      return c;
    };
    if (detail::first_violation(g.n(), m, forbidden, added, out.witness)) {
      out.free = false;
      return out;
    }
  }
  return {};
}

// Number of 4-sets spanning exactly f edges, f = 0..4.
inline std::array<std::int64_t, 5> four_set_profile(const Hypergraph3& h) {
  std::array<std::int64_t, 5> prof{};
  detail::for_each_four_slice(h, [&](Vertex, Vertex, Vertex, bool e, std::size_t, Word s0, Word s1, Word live) {
    for (int t = 0; t < 4; ++t)
      prof[static_cast<std::size_t>(t + (e ? 1 : 0))] += std::popcount(detail::count_equals(s0, s1, t) & live);
    return true;
  });
  return prof;
}

}  // namespace hyperfree
