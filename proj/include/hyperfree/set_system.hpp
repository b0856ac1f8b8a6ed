#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hyperfree/freeness.hpp"
#include "hyperfree/homogeneous.hpp"
#include "hyperfree/hypergraph.hpp"
#include "hyperfree/io.hpp"

namespace hyperfree {

// Non-uniform hypergraph: a list of blocks (vertex sets of size >= 2).
class SetSystem {
 public:
  SetSystem() = default;

  SetSystem(int n, std::vector<std::vector<Vertex>> blocks, bool require_linear = false)
      : n_(n), blocks_(std::move(blocks)) {
    if (n < 0) throw InputError("negative vertex count");
    for (auto& b : blocks_) {
      std::sort(b.begin(), b.end());
      if (b.size() < 2) throw InputError("blocks must have at least 2 vertices");
      if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw InputError("block has repeated vertices");
      for (Vertex v : b) detail::check_vertex(n, v);
      max_block_ = std::max(max_block_, static_cast<int>(b.size()));
    }
    linear_ = compute_linear();
    if (require_linear && !linear_) throw InputError("set system is not linear");
  }

  int n() const noexcept { return n_; }
  const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
  bool is_linear() const noexcept { return linear_; }
  int max_block_size() const noexcept { return max_block_; }

  friend bool operator==(const SetSystem& x, const SetSystem& y) {
    if (x.n_ != y.n_) return false;
    auto a = x.blocks_, b = y.blocks_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

 private:
  bool compute_linear() const {
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    for (const auto& b : blocks_)
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
          auto& c = covered[static_cast<std::size_t>(b[i]) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b[j])];
          if (c) return false;
          c = 1;
        }
    return true;
  }

  int n_ = 0;
  std::vector<std::vector<Vertex>> blocks_;
  bool linear_ = true;
  int max_block_ = 0;
};

inline void write_ss(std::ostream& out, const SetSystem& ss) {
  int r = 0;
  if (!ss.blocks().empty()) {
    r = static_cast<int>(ss.blocks().front().size());
    for (const auto& b : ss.blocks())
      if (static_cast<int>(b.size()) != r) r = 0;
  }
  write_edge_list(out, ss.n(), r, ss.blocks());
}

inline SetSystem set_system_from_edge_list(const EdgeListFile& f) { return SetSystem(f.n, f.edges); }

struct Alpha2Result {
  int size = 0;
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
  bool complete = true;  // false when the node limit stopped the search
};

namespace detail {

// Include-first DFS over vertices in ascending order. Two bounds, the smaller
// wins: candidate-disjoint blocks charged for the candidates they cannot
// take, and a capacity count (each chosen vertex uses one unit of every tight
// block through it, a block offers 2 minus what it already holds).
class Alpha2Search {
 public:
  Alpha2Search(const SetSystem& ss, SearchLimits limits, int floor = 0)
      : ss_(ss), limits_(limits), best_size_(floor), count_(ss.blocks().size(), 0) {
    incidence_.resize(static_cast<std::size_t>(ss.n()));
    for (std::size_t b = 0; b < ss.blocks().size(); ++b) {
      if (ss.blocks()[b].size() < 3) continue;
      live_.push_back(b);
      for (Vertex v : ss.blocks()[b]) incidence_[static_cast<std::size_t>(v)].push_back(b);
    }
  }

  Alpha2Result run() {
    std::vector<Vertex> r(static_cast<std::size_t>(ss_.n()));
    std::iota(r.begin(), r.end(), 0);
    in_r_.assign(static_cast<std::size_t>(ss_.n()), 0);
    tight_.assign(static_cast<std::size_t>(ss_.n()), 0);
    for (Vertex v : r) in_r_[static_cast<std::size_t>(v)] = 1;
    branch(r);
    return {static_cast<int>(best_.size()), best_, nodes_, !aborted_};
  }

  bool improved() const noexcept { return !best_.empty(); }

 private:
  int bound(const std::vector<Vertex>& r) {
    std::vector<std::pair<int, std::size_t>> saving;
    long capacity = 0;
    for (std::size_t b : live_) {
      int inside = 0;
      for (Vertex v : ss_.blocks()[b]) inside += in_r_[static_cast<std::size_t>(v)];
      int allow = 2 - count_[b];
      if (inside > allow) {
        saving.push_back({inside - allow, b});
        capacity += allow;
        for (Vertex v : ss_.blocks()[b]) tight_[static_cast<std::size_t>(v)] += in_r_[static_cast<std::size_t>(v)];
      }
    }
    int by_capacity = 0;
    std::vector<int> loads;
    for (Vertex v : r) {
      int& d = tight_[static_cast<std::size_t>(v)];
      if (d == 0) ++by_capacity;
      else loads.push_back(d);
      d = 0;
    }
    std::sort(loads.begin(), loads.end());
    for (int d : loads) {
      if (capacity < d) break;
      capacity -= d;
      ++by_capacity;
    }
    std::sort(saving.begin(), saving.end(), [](auto& x, auto& y) { return x.first > y.first || (x.first == y.first && x.second < y.second); });
    std::vector<std::uint8_t> taken(static_cast<std::size_t>(ss_.n()), 0);
    int total = static_cast<int>(r.size());
    for (auto [s, b] : saving) {
      bool disjoint = true;
      for (Vertex v : ss_.blocks()[b])
        if (in_r_[static_cast<std::size_t>(v)] && taken[static_cast<std::size_t>(v)]) disjoint = false;
      if (!disjoint) continue;
      for (Vertex v : ss_.blocks()[b])
        if (in_r_[static_cast<std::size_t>(v)]) taken[static_cast<std::size_t>(v)] = 1;
      total -= s;
    }
    return std::min(total, by_capacity);
  }

  void set_r(const std::vector<Vertex>& r, std::uint8_t value) {
    for (Vertex v : r) in_r_[static_cast<std::size_t>(v)] = value;
  }

  void branch(const std::vector<Vertex>& r) {
    ++nodes_;
    if (static_cast<int>(cur_.size()) > best_size_) {
      best_ = cur_;
      best_size_ = static_cast<int>(cur_.size());
    }
    if (r.empty() || aborted_) return;
    if (nodes_ >= limits_.max_nodes) {
      aborted_ = true;
      return;
    }
    if (static_cast<int>(cur_.size()) + bound(r) <= best_size_) return;
    const Vertex v = r.front();
    std::vector<Vertex> rest(r.begin() + 1, r.end());

    // Include v.
    for (std::size_t b : incidence_[static_cast<std::size_t>(v)]) ++count_[b];
    std::vector<Vertex> with;
    with.reserve(rest.size());
    for (Vertex u : rest) {
      bool blocked = false;
      for (std::size_t b : incidence_[static_cast<std::size_t>(u)])
        if (count_[b] >= 2) blocked = true;
      if (!blocked) with.push_back(u);
    }
    set_r(r, 0);
    set_r(with, 1);
    cur_.push_back(v);
    branch(with);
    cur_.pop_back();
    for (std::size_t b : incidence_[static_cast<std::size_t>(v)]) --count_[b];

    // Exclude v.
    set_r(with, 0);
    set_r(rest, 1);
    branch(rest);
    set_r(rest, 0);
    set_r(r, 1);
  }

  const SetSystem& ss_;
  SearchLimits limits_;
  int best_size_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<int> count_;
  std::vector<int> tight_;
  std::vector<std::size_t> live_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<std::uint8_t> in_r_;
  std::vector<Vertex> cur_, best_;
};

}  // namespace detail

// Largest I with |I ∩ b| <= 2 for every block b. Blocks of size <= 2 never
// constrain. The witness is the lexicographically least optimum.
inline Alpha2Result alpha2(const SetSystem& ss, SearchLimits limits = {}) {
  return detail::Alpha2Search(ss, limits).run();
}

struct GValue {
  int value = 0;
  bool complete = true;  // false: value is only a lower bound
};

// g = max(largest block, alpha2). alpha2 is only searched above the largest
// block size, which is usually much cheaper than computing it outright.
inline GValue g_value_bounded(const SetSystem& ss, SearchLimits limits = {}) {
  if (!ss.is_linear()) throw InputError("g is only defined for linear set systems");
  detail::Alpha2Search s(ss, limits, ss.max_block_size());
  auto r = s.run();
  return {s.improved() ? r.size : ss.max_block_size(), r.complete};
}

inline int g_value(const SetSystem& ss) { return g_value_bounded(ss).value; }

// Every block becomes a clique.
inline Hypergraph3 clique_fill(const SetSystem& ss) {
  if (!ss.is_linear()) throw InputError("clique_fill expects a linear set system");
  Hypergraph3::Builder b(ss.n());
  for (const auto& blk : ss.blocks())
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j)
        for (std::size_t k = j + 1; k < blk.size(); ++k) b.add(blk[i], blk[j], blk[k]);
  return std::move(b).build();
}

// Maximal cliques of size >= 3 as blocks, by Bron-Kerbosch without pivoting:
// the graph pivot rule does not carry over to triples. P and X always hold
// every vertex that extends the current clique. With verify_free the input
// must be {(4,2),(4,3)}-free; the result is then linear.
inline SetSystem maximal_cliques_system(const Hypergraph3& h, bool verify_free = false) {
  if (verify_free) {
    auto chk = is_q_free(h, ForbiddenFamily::of_sizes(3, 4, {2, 3}));
    if (!chk) throw NotFreeError("hypergraph is not {(4,2),(4,3)}-free", chk.witness);
  }
  const int n = h.n();
  const std::size_t w = h.row_words();
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> clique;

  auto ext = [&](Vertex v, std::vector<Word>& out) {
    if (clique.empty()) {
      std::fill(out.begin(), out.end(), ~Word{0});
      if (!out.empty()) out.back() &= bits::tail_mask(static_cast<std::size_t>(n));
      bits::reset(out, static_cast<std::size_t>(v));
      return;
    }
    auto r0 = h.pair_row(clique.front(), v);
    std::copy(r0.begin(), r0.end(), out.begin());
    for (std::size_t i = 1; i < clique.size(); ++i) {
      auto r = h.pair_row(clique[i], v);
      for (std::size_t k = 0; k < w; ++k) out[k] &= r[k];
    }
  };

  auto rec = [&](auto&& self, std::vector<Word> p, std::vector<Word> x) -> void {
    if (bits::count(p) == 0) {
      if (bits::count(x) == 0 && clique.size() >= 3) blocks.push_back(clique);
      return;
    }
    std::vector<Word> e(w);
    std::vector<Vertex> order;
    bits::for_each(std::span<const Word>(p), [&](std::size_t v) { order.push_back(static_cast<Vertex>(v)); });
    for (Vertex v : order) {
      ext(v, e);
      std::vector<Word> np(w), nx(w);
      for (std::size_t k = 0; k < w; ++k) {
        np[k] = p[k] & e[k];
        nx[k] = x[k] & e[k];
      }
      clique.push_back(v);
      self(self, std::move(np), std::move(nx));
      clique.pop_back();
      bits::reset(p, static_cast<std::size_t>(v));
      bits::set(x, static_cast<std::size_t>(v));
    }
  };

  std::vector<Word> all(w, ~Word{0});
  if (!all.empty()) all.back() &= bits::tail_mask(static_cast<std::size_t>(n));
  rec(rec, all, std::vector<Word>(w, 0));
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return SetSystem(n, std::move(blocks));
}

}  // namespace hyperfree
