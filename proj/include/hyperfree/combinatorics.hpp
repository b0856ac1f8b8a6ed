#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace hyperfree {

constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Colexicographic ranks. The rank of {i<j<k} among all triples only depends
// on the triple itself, so ranks stay valid when vertices are appended.
constexpr std::int64_t colex_rank2(int i, int j) noexcept {
  return static_cast<std::int64_t>(j) * (j - 1) / 2 + i;
}

constexpr std::int64_t colex_rank3(int i, int j, int k) noexcept {
  return static_cast<std::int64_t>(k) * (k - 1) * (k - 2) / 6 + colex_rank2(i, j);
}

inline std::array<int, 3> colex_unrank3(std::int64_t rank) noexcept {
  int k = 2;
  while (binomial(k + 1, 3) <= rank) ++k;
  rank -= binomial(k, 3);
  int j = 1;
  while (binomial(j + 1, 2) <= rank) ++j;
  rank -= binomial(j, 2);
  return {static_cast<int>(rank), j, k};
}

// Calls f(subset) for each k-subset of {0..n-1} in lexicographic order; stops
// early when f returns false. Returns false iff stopped early.
template <typename F>
bool for_each_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return true;
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!f(static_cast<const std::vector<int>&>(s))) return false;
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace hyperfree
