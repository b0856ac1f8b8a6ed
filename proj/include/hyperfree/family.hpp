#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperfree/combinatorics.hpp"
#include "hyperfree/error.hpp"

namespace hyperfree {

// (m, f): an m-vertex r-graph with exactly f edges.
struct OrderSizePair {
  int m = 0;
  int f = 0;

  friend auto operator<=>(const OrderSizePair&, const OrderSizePair&) = default;
};

// A set Q of order-size pairs at uniformity r, kept sorted.
class ForbiddenFamily {
 public:
  ForbiddenFamily() = default;

  ForbiddenFamily(int r, std::vector<OrderSizePair> pairs) : r_(r), pairs_(std::move(pairs)) {
    if (r < 2) throw InputError("uniformity must be at least 2");
    for (const auto& p : pairs_) {
      if (p.m < 1) throw InputError("order must be positive");
      if (p.f < 0 || p.f > binomial(p.m, r))
        throw InputError("size " + std::to_string(p.f) + " out of range for order " + std::to_string(p.m));
    }
    std::sort(pairs_.begin(), pairs_.end());
    if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end()) throw InputError("duplicate order-size pair");
  }

  // Shorthand for the common case of a single order m.
  static ForbiddenFamily of_sizes(int r, int m, std::initializer_list<int> sizes) {
    std::vector<OrderSizePair> p;
    for (int f : sizes) p.push_back({m, f});
    return ForbiddenFamily(r, std::move(p));
  }

  int r() const noexcept { return r_; }
  const std::vector<OrderSizePair>& pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t size() const noexcept { return pairs_.size(); }

  bool contains(int m, int f) const noexcept {
    return std::binary_search(pairs_.begin(), pairs_.end(), OrderSizePair{m, f});
  }

  bool is_subset_of(const ForbiddenFamily& o) const noexcept {
    return r_ == o.r_ && std::includes(o.pairs_.begin(), o.pairs_.end(), pairs_.begin(), pairs_.end());
  }

  // The common order when all pairs share one (nullopt when empty or mixed).
  std::optional<int> single_order() const noexcept {
    if (pairs_.empty()) return std::nullopt;
    for (const auto& p : pairs_)
      if (p.m != pairs_.front().m) return std::nullopt;
    return pairs_.front().m;
  }

  std::vector<int> orders() const {
    std::vector<int> ms;
    for (const auto& p : pairs_) ms.push_back(p.m);
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    return ms;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& p : pairs_) {
      if (!s.empty()) s += ',';
      s += std::to_string(p.m) + ':' + std::to_string(p.f);
    }
    return s;
  }

  friend bool operator==(const ForbiddenFamily&, const ForbiddenFamily&) = default;

 private:
  int r_ = 3;
  std::vector<OrderSizePair> pairs_;
};

// (m, f) -> (m, C(m, r) - f).
inline ForbiddenFamily complement_family(const ForbiddenFamily& q) {
  std::vector<OrderSizePair> out;
  for (const auto& p : q.pairs()) out.push_back({p.m, static_cast<int>(binomial(p.m, q.r())) - p.f});
  return ForbiddenFamily(q.r(), std::move(out));
}

// Parses "4:2,4:4". An empty string is the empty family.
inline ForbiddenFamily parse_family(std::string_view text, int r = 3) {
  std::vector<OrderSizePair> pairs;
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw InputError("bad integer '" + std::string(s) + "' in family");
    return v;
  };
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    auto colon = tok.find(':');
    if (colon == std::string_view::npos) throw InputError("family token '" + std::string(tok) + "' is not m:f");
    pairs.push_back({parse_int(tok.substr(0, colon)), parse_int(tok.substr(colon + 1))});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw InputError("trailing comma in family");
  }
  return ForbiddenFamily(r, std::move(pairs));
}

}  // namespace hyperfree
