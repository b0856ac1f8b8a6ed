#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_set>
#include <vector>

#include "hyperfree/canonical.hpp"
#include "hyperfree/family.hpp"
#include "hyperfree/hypergraph.hpp"

namespace hyperfree {

struct Budget {
  std::uint64_t max_classes = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
};

// Exact h_3(n, Q). An empty `value` means no Q-free hypergraph on n vertices
// exists. When the budget ran out, `complete` is false and nothing else is
// guaranteed.
struct ExtremalRecord {
  int n = 0;
  ForbiddenFamily q;
  std::optional<int> value;
  std::optional<Hypergraph3> witness;
  std::uint64_t explored = 0;
  bool complete = true;
};

// Isomorphism classes of Q-free hypergraphs on n vertices, as canonical
// flat masks sorted by key order.
struct ClassEnumeration {
  int n = 0;
  std::vector<std::uint64_t> masks;
  std::uint64_t explored = 0;
  bool complete = true;
};

namespace detail {

inline bool key_less(std::uint64_t x, std::uint64_t y) noexcept {
  CanonicalForm a{CanonicalMode::exact, 0, x, {}}, b{CanonicalMode::exact, 0, y, {}};
  return a < b;
}

inline void check_enumerable(int n, const ForbiddenFamily& q) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > kExactCanonicalMaxN)
    throw CapabilityError("exhaustive enumeration is limited to n <= " + std::to_string(kExactCanonicalMaxN));
  if (q.r() != 3) throw CapabilityError("exhaustive enumeration supports r = 3 only");
  if (!q.empty() && q.single_order() != 4) throw CapabilityError("exhaustive enumeration needs a family with the single order m = 4");
}

}  // namespace detail

// Level-wise generation: each class on k vertices is extended by every link
// on the new vertex k, extensions creating a forbidden 4-set through k are
// dropped, and survivors are deduplicated by exact canonical key.
inline ClassEnumeration enumerate_q_free(int n, const ForbiddenFamily& q, Budget budget = {}) {
  detail::check_enumerable(n, q);
  std::array<bool, 5> forbidden{};
  for (const auto& p : q.pairs()) forbidden[static_cast<std::size_t>(p.f)] = true;

  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > budget.max_seconds;
  };

  ClassEnumeration res;
  res.n = n;
  std::vector<std::uint64_t> level{0};
  res.explored = 1;
  for (int k = 0; k < n; ++k) {
    const int link_bits = static_cast<int>(binomial(k, 2));
    const int offset = static_cast<int>(binomial(k, 3));
    std::vector<std::array<int, 2>> pairs;
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i) pairs.push_back({i, j});  // colex order of pair ranks
    std::vector<std::array<int, 3>> triples;  // a<b<c<k with the pair ranks of ab, ac, bc
    for (int c = 2; c < k; ++c)
      for (int b = 1; b < c; ++b)
        for (int a = 0; a < b; ++a) triples.push_back({a, b, c});

    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> next;
    std::uint64_t since_check = 0;
    for (std::uint64_t base : level) {
      for (std::uint64_t link = 0; link < (std::uint64_t{1} << link_bits); ++link) {
        if (++since_check == 4096) {
          since_check = 0;
          if (out_of_time()) {
            res.complete = false;
            return res;
          }
        }
        bool ok = true;
        if (k >= 3 && !q.empty()) {
          for (const auto& t : triples) {
            int cnt = static_cast<int>((base >> colex_rank3(t[0], t[1], t[2])) & 1U);
            cnt += static_cast<int>((link >> colex_rank2(t[0], t[1])) & 1U);
            cnt += static_cast<int>((link >> colex_rank2(t[0], t[2])) & 1U);
            cnt += static_cast<int>((link >> colex_rank2(t[1], t[2])) & 1U);
            if (forbidden[static_cast<std::size_t>(cnt)]) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) continue;
        const std::uint64_t mask = base | (link << offset);
        const auto key = canonical_key(Hypergraph3::from_flat_mask(k + 1, mask)).value;
        if (seen.insert(key).second) {
          next.push_back(key);
          if (++res.explored > budget.max_classes) {
            res.complete = false;
            return res;
          }
        }
      }
    }
    std::sort(next.begin(), next.end(), detail::key_less);
    level = std::move(next);
    if (level.empty()) break;
  }
  res.masks = std::move(level);
  return res;
}

// h(H) for n <= 8 by scanning all vertex subsets against the flat mask.
inline int small_h(int n, std::uint64_t mask) {
  int best = std::min(n, 2);
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    std::uint64_t inside = 0;
    for (int c = 2; c < n; ++c)
      if (s >> c & 1U)
        for (int b = 1; b < c; ++b)
          if (s >> b & 1U)
            for (int a = 0; a < b; ++a)
              if (s >> a & 1U) inside |= std::uint64_t{1} << colex_rank3(a, b, c);
    if ((mask & inside) == inside || (mask & inside) == 0) best = size;
  }
  return best;
}

inline ExtremalRecord exact_h(int n, const ForbiddenFamily& q, Budget budget = {}) {
  ExtremalRecord rec;
  rec.n = n;
  rec.q = q;
  auto classes = enumerate_q_free(n, q, budget);
  rec.explored = classes.explored;
  rec.complete = classes.complete;
  if (!classes.complete) return rec;
  std::optional<std::uint64_t> best_mask;
  for (std::uint64_t m : classes.masks) {  // already in key order, so ties keep the smallest key
    const int h = small_h(n, m);
    if (!rec.value || h < *rec.value) {
      rec.value = h;
      best_mask = m;
    }
  }
  if (best_mask) rec.witness = Hypergraph3::from_flat_mask(n, *best_mask);
  return rec;
}

}  // namespace hyperfree
