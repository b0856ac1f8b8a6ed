#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hyperfree/hypergraph.hpp"

namespace hyperfree {

struct SearchLimits {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
};

// Largest clique (every triple an edge) or coclique (no triple an edge).
// When the node limit cut the search short, `complete` is false and `size`
// is only a lower bound.
struct HomogeneousSet {
  int size = 0;
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
  bool complete = true;
};

struct HomogeneousResult {
  int omega = 0;
  int alpha = 0;
  int h = 0;
  std::vector<Vertex> clique_witness;
  std::vector<Vertex> coclique_witness;
  bool complete = true;
};

namespace detail {

// Branch and bound over candidate sets. Every node keeps, for each candidate
// u, the candidates w that may join u given the current set C: those with
// C + {u, w} homogeneous. Greedy colouring of that compatibility graph bounds
// how many candidates can still be added. Branching is in ascending vertex
// order and only strict improvements are recorded, so the witness is the
// lexicographically least optimum.
template <bool Clique>
class HomogeneousSearch {
 public:
  HomogeneousSearch(const Hypergraph3& h, SearchLimits limits)
      : h_(h), n_(h.n()), w_(h.row_words()), limits_(limits) {}

  HomogeneousSet run() {
    if (n_ == 0) return {};
    std::vector<Vertex> verts(static_cast<std::size_t>(n_));
    std::vector<Word> rows(static_cast<std::size_t>(n_) * w_, 0);
    for (Vertex u = 0; u < n_; ++u) {
      verts[static_cast<std::size_t>(u)] = u;
      auto r = row_of(rows, static_cast<std::size_t>(u));
      std::fill(r.begin(), r.end(), ~Word{0});
      r.back() &= bits::tail_mask(static_cast<std::size_t>(n_));
      bits::reset(r, static_cast<std::size_t>(u));
    }
    expand(verts, rows);
    return {static_cast<int>(best_.size()), best_, nodes_, !aborted_};
  }

 private:
  std::span<Word> row_of(std::vector<Word>& rows, std::size_t i) const noexcept { return {rows.data() + i * w_, w_}; }
  std::span<const Word> row_of(const std::vector<Word>& rows, std::size_t i) const noexcept {
    return {rows.data() + i * w_, w_};
  }

  // Word i of the compatibility row of pair {v, u}.
  Word compat(std::span<const Word> pr, std::size_t i) const noexcept {
    if constexpr (Clique) return pr[i];
    else return ~pr[i];
  }

  void expand(const std::vector<Vertex>& verts, const std::vector<Word>& rows) {
    ++nodes_;
    if (cur_.size() > best_.size()) best_ = cur_;
    if (verts.empty()) return;
    if (nodes_ >= limits_.max_nodes) {
      aborted_ = true;
      return;
    }

    // Colour in descending vertex order; suffix_colours[i] bounds the
    // homogeneous extension inside verts[i..].
    const std::size_t k = verts.size();
    std::vector<int> suffix_colours(k);
    std::vector<Word> classes;
    int ncol = 0;
    for (std::size_t ii = k; ii-- > 0;) {
      auto a = row_of(rows, ii);
      int c = 0;
      for (; c < ncol; ++c) {
        const Word* cls = classes.data() + static_cast<std::size_t>(c) * w_;
        bool clash = false;
        for (std::size_t i = 0; i < w_ && !clash; ++i) clash = (cls[i] & a[i]) != 0;
        if (!clash) break;
      }
      if (c == ncol) {
        classes.resize(classes.size() + w_, 0);
        ++ncol;
      }
      bits::set(std::span<Word>(classes.data() + static_cast<std::size_t>(c) * w_, w_), static_cast<std::size_t>(verts[ii]));
      suffix_colours[ii] = ncol;
    }

    std::vector<Vertex> child_verts;
    std::vector<Word> child_rows;
    std::vector<Word> p(w_);
    for (std::size_t i = 0; i < k; ++i) {
      if (aborted_) return;
      if (cur_.size() + static_cast<std::size_t>(suffix_colours[i]) <= best_.size()) break;
      const Vertex v = verts[i];
      auto av = row_of(rows, i);
      // P' = A(v) restricted to vertices after v.
      const std::size_t first = static_cast<std::size_t>(v) + 1;
      for (std::size_t wi = 0; wi < w_; ++wi) {
        Word keep = wi < first / kWordBits ? 0 : (wi == first / kWordBits ? (~Word{0} << (first % kWordBits)) : ~Word{0});
        p[wi] = av[wi] & keep;
      }
      child_verts.clear();
      // verts is ascending, so candidates after position i are exactly those > v.
      for (std::size_t j = i + 1; j < k; ++j)
        if (bits::test(p, static_cast<std::size_t>(verts[j]))) child_verts.push_back(verts[j]);
      child_rows.assign(child_verts.size() * w_, 0);
      std::size_t jj = 0;
      for (std::size_t j = i + 1; j < k && jj < child_verts.size(); ++j) {
        if (verts[j] != child_verts[jj]) continue;
        auto au = row_of(rows, j);
        auto pr = h_.pair_row(v, verts[j]);
        auto out = row_of(child_rows, jj);
        for (std::size_t wi = 0; wi < w_; ++wi) out[wi] = au[wi] & compat(pr, wi) & p[wi];
        ++jj;
      }
      cur_.push_back(v);
      expand(child_verts, child_rows);
      cur_.pop_back();
    }
  }

  const Hypergraph3& h_;
  int n_;
  std::size_t w_;
  SearchLimits limits_;
  std::vector<Vertex> cur_, best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

inline HomogeneousSet max_clique(const Hypergraph3& h, SearchLimits limits = {}) {
  return detail::HomogeneousSearch<true>(h, limits).run();
}

inline HomogeneousSet max_coclique(const Hypergraph3& h, SearchLimits limits = {}) {
  return detail::HomogeneousSearch<false>(h, limits).run();
}

inline HomogeneousResult homogeneous(const Hypergraph3& h, SearchLimits limits = {}) {
  auto w = max_clique(h, limits);
  auto a = max_coclique(h, limits);
  HomogeneousResult r;
  r.omega = w.size;
  r.alpha = a.size;
  r.h = std::max(w.size, a.size);
  r.clique_witness = std::move(w.witness);
  r.coclique_witness = std::move(a.witness);
  r.complete = w.complete && a.complete;
  return r;
}

struct CodegreeMax {
  std::optional<std::array<Vertex, 2>> pair;  // absent when n < 2
  int degree = 0;
  std::vector<Vertex> neighbourhood;
};

// Pair with the largest common neighbourhood; ties go to the least pair.
inline CodegreeMax max_codegree(const Hypergraph3& h) {
  CodegreeMax best;
  for (Vertex u = 0; u < h.n(); ++u)
    for (Vertex v = u + 1; v < h.n(); ++v) {
      int d = h.codegree(u, v);
      if (!best.pair || d > best.degree) {
        best.pair = std::array<Vertex, 2>{u, v};
        best.degree = d;
      }
    }
  if (best.pair) {
    auto r = h.pair_row((*best.pair)[0], (*best.pair)[1]);
    bits::for_each(r, [&](std::size_t x) { best.neighbourhood.push_back(static_cast<Vertex>(x)); });
  }
  return best;
}

}  // namespace hyperfree
