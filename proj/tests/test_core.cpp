#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "hyperfree/canonical.hpp"
#include "hyperfree/family.hpp"
#include "hyperfree/freeness.hpp"
#include "hyperfree/generators.hpp"
#include "hyperfree/io.hpp"
#include "hyperfree/rng.hpp"
#include "oracles.hpp"

using namespace hyperfree;

namespace {

Hypergraph3 make(int n, std::initializer_list<std::array<Vertex, 3>> es) {
  Hypergraph3::Builder b(n);
  for (auto e : es) b.add(e[0], e[1], e[2]);
  return std::move(b).build();
}

Hypergraph3 complete3(int n) { return complement(Hypergraph3(n)); }

std::vector<Vertex> random_perm(int n, std::uint64_t seed) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Rng rng(seed);
  rng.shuffle(std::span(p));
  return p;
}

}  // namespace

TEST(Hypergraph, StoresTriplesSymmetrically) {
  auto h = make(5, {{0, 1, 2}, {1, 3, 4}});
  EXPECT_EQ(h.edge_count(), 2);
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}, {4, 3, 1}}) EXPECT_TRUE(h.has_edge(a, b, c));
  EXPECT_FALSE(h.has_edge(0, 1, 3));
  EXPECT_EQ(h.codegree(0, 1), 1);
  EXPECT_EQ(h.degree(1), 2);
}

TEST(Hypergraph, RejectsBadTriples) {
  Hypergraph3::Builder b(4);
  EXPECT_THROW(b.add(0, 0, 1), InputError);
  EXPECT_THROW(b.add(0, 1, 4), InputError);
  std::vector<Triple> dup{{0, 1, 2}, {2, 1, 0}};
  EXPECT_THROW(Hypergraph3(4, dup), InputError);
}

TEST(Hypergraph, FlatMaskRoundTrip) {
  for (std::uint64_t m : {0ULL, 1ULL, 0b1011ULL, (1ULL << 20) - 1}) {
    auto h = Hypergraph3::from_flat_mask(6, m);
    EXPECT_EQ(h.flat_mask(), m);
  }
}

TEST(InducedEdgeCount, Examples) {
  auto hp = gen_hprime();
  std::vector<Vertex> s{0, 1, 2, 3};
  EXPECT_EQ(induced_edge_count(hp, s), 2);
  EXPECT_EQ(induced_edge_count(complete3(4), s), 4);
  std::vector<Vertex> s6{0, 2, 5};
  EXPECT_EQ(induced_edge_count(Hypergraph3(6), s6), 0);
}

TEST(InducedEdgeCount, MatchesOracleOnRandomSets) {
  Rng rng(7);
  for (int it = 0; it < 50; ++it) {
    const int n = 5 + static_cast<int>(rng.below(20));
    auto h = gen_random_hypergraph(n, 0.4, rng.next());
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (rng.bernoulli(0.5)) s.push_back(v);
    EXPECT_EQ(induced_edge_count(h, s), oracle::edges_in(h, s));
  }
}

TEST(Freeness, SpecExamples) {
  auto one = make(4, {{0, 1, 2}});
  auto r = is_q_free(one, ForbiddenFamily::of_sizes(3, 4, {1}));
  EXPECT_FALSE(r.free);
  EXPECT_EQ(r.witness, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(is_q_free(gen_star(6), ForbiddenFamily::of_sizes(3, 4, {2, 4})).free);
  EXPECT_TRUE(is_q_free(complete3(5), ForbiddenFamily::of_sizes(3, 4, {0})).free);
}

TEST(Freeness, GraphExamples) {
  std::vector<std::array<Vertex, 2>> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  Graph2 g(5, c5);
  EXPECT_TRUE(is_q_free_graph(g, parse_family("3:3", 2)).free);
  EXPECT_TRUE(is_q_free_graph(g, parse_family("3:0", 2)).free);
  EXPECT_FALSE(is_q_free_graph(complement(Graph2(4)), parse_family("4:6", 2)).free);
}

TEST(Freeness, MatchesOracleOnRandomInputs) {
  Rng rng(11);
  for (int it = 0; it < 300; ++it) {
    const int n = 4 + static_cast<int>(rng.below(9));
    auto h = gen_random_hypergraph(n, rng.uniform01(), rng.next());
    std::vector<int> sizes;
    std::vector<std::pair<int, int>> pairs;
    for (int f = 0; f <= 4; ++f)
      if (rng.bernoulli(0.3)) {
        sizes.push_back(f);
        pairs.push_back({4, f});
      }
    if (sizes.empty()) continue;
    std::vector<OrderSizePair> ps;
    for (int f : sizes) ps.push_back({4, f});
    auto r = is_q_free(h, ForbiddenFamily(3, ps));
    ASSERT_EQ(r.free, oracle::is_free(h, pairs)) << "n=" << n;
    if (!r.free) {
      ASSERT_EQ(r.witness.size(), 4u);
      EXPECT_TRUE(std::find(sizes.begin(), sizes.end(), oracle::edges_in(h, r.witness)) != sizes.end());
    }
  }
}

TEST(Freeness, OtherOrdersMatchOracle) {
  Rng rng(5);
  for (int it = 0; it < 60; ++it) {
    const int n = 5 + static_cast<int>(rng.below(4));
    auto h = gen_random_hypergraph(n, 0.5, rng.next());
    for (auto [m, f] : std::vector<std::pair<int, int>>{{3, 0}, {3, 1}, {5, 4}, {5, 5}, {5, 10}}) {
      auto r = is_q_free(h, ForbiddenFamily(3, {{m, f}}));
      EXPECT_EQ(r.free, oracle::is_free(h, {{m, f}})) << m << ":" << f;
    }
  }
}

TEST(Complement, Examples) {
  auto c = complement(Hypergraph3(5));
  EXPECT_EQ(c.edge_count(), 10);
  Rng rng(3);
  for (int it = 0; it < 20; ++it) {
    const int n = 3 + static_cast<int>(rng.below(15));
    auto h = gen_random_hypergraph(n, 0.3, rng.next());
    EXPECT_EQ(complement(complement(h)), h);
    EXPECT_EQ(h.edge_count() + complement(h).edge_count(), binomial(n, 3));
  }
}

TEST(Family, ComplementExamples) {
  EXPECT_EQ(complement_family(parse_family("4:0,4:2")), parse_family("4:2,4:4"));
  EXPECT_EQ(complement_family(parse_family("4:2")), parse_family("4:2"));
  EXPECT_EQ(complement_family(parse_family("4:1,4:2")), parse_family("4:2,4:3"));
}

TEST(Family, ParseErrors) {
  EXPECT_THROW(parse_family("4:5"), InputError);
  EXPECT_THROW(parse_family("4-2"), InputError);
  EXPECT_THROW(parse_family("4:2,4:2"), InputError);
  EXPECT_EQ(parse_family("4:4,4:2").to_string(), "4:2,4:4");
}

TEST(Family, ComplementPreservesFreeness) {
  Rng rng(17);
  for (int it = 0; it < 100; ++it) {
    auto h = gen_random_hypergraph(7, rng.uniform01(), rng.next());
    auto q = parse_family("4:0,4:1");
    EXPECT_EQ(is_q_free(h, q).free, is_q_free(complement(h), complement_family(q)).free);
  }
}

TEST(LinkGraph, StarLinks) {
  auto s = gen_star(5);  // centre 0, leaves 1..4
  auto l0 = link_graph(s, 0);
  EXPECT_EQ(l0.graph.edge_count(), 6);
  auto l1 = link_graph(s, 1);
  EXPECT_EQ(l1.graph.edge_count(), 3);
  for (std::size_t i = 0; i < l1.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < l1.vertices.size(); ++j) {
      const bool through_centre = l1.vertices[i] == 0 || l1.vertices[j] == 0;
      EXPECT_EQ(l1.graph.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)), through_centre);
    }
  EXPECT_EQ(link_graph(Hypergraph3(6), 2).graph.edge_count(), 0);
}

TEST(LinkGraph, MatchesHasEdge) {
  auto h = gen_random_hypergraph(12, 0.5, 99);
  for (Vertex v = 0; v < 12; ++v) {
    auto l = link_graph(h, v);
    for (std::size_t i = 0; i < l.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < l.vertices.size(); ++j)
        EXPECT_EQ(l.graph.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)), h.has_edge(v, l.vertices[i], l.vertices[j]));
  }
}

TEST(Canonical, RelabelInvariant) {
  auto one = make(4, {{1, 2, 3}});
  EXPECT_EQ(canonical_key(one), canonical_key(make(4, {{0, 1, 2}})));
  auto hp = gen_hprime();
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto p = random_perm(6, s);
    EXPECT_EQ(canonical_key(relabel(hp, p)), canonical_key(hp));
  }
}

TEST(Canonical, KeyEqualityIsIsomorphismAtSix) {
  Rng rng(23);
  std::vector<Hypergraph3> hs;
  for (int i = 0; i < 60; ++i) {
    auto h = gen_random_hypergraph(6, 0.5, rng.next());
    hs.push_back(h);
    hs.push_back(relabel(h, random_perm(6, rng.next())));
  }
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      if (hs[i].edge_count() != hs[j].edge_count()) continue;
      const bool iso = oracle::isomorphic(hs[i], hs[j]);
      ASSERT_EQ(canonical_key(hs[i]) == canonical_key(hs[j]), iso);
      ASSERT_EQ(are_isomorphic(hs[i], hs[j]), iso);
      if (iso) {
        auto m = find_isomorphism(hs[i], hs[j]);
        ASSERT_TRUE(m.has_value());
        EXPECT_EQ(relabel(hs[i], *m), hs[j]);
      }
    }
}

TEST(Canonical, LargeInputsNeedHashMode) {
  auto h = gen_star(9);
  EXPECT_THROW(canonical_key(h), CapabilityError);
  auto p = random_perm(9, 1);
  EXPECT_EQ(canonical_key(h, CanonicalMode::hash), canonical_key(relabel(h, p), CanonicalMode::hash));
}

TEST(Io, RoundTrip) {
  for (const auto& h : {gen_star(7), gen_hprime(), gen_ngon(9), Hypergraph3(3), gen_random_hypergraph(20, 0.2, 4)}) {
    EXPECT_EQ(parse_h3(to_h3_string(h)), h);
  }
  auto ss = gen_projective_plane(3).lines;
  std::ostringstream os;
  write_ss(os, ss);
  std::istringstream is(os.str());
  EXPECT_EQ(set_system_from_edge_list(read_edge_list(is)), ss);
}

TEST(Io, RejectsMalformedInput) {
  EXPECT_THROW(parse_h3("4 1 3\n0 1\n"), InputError);
  EXPECT_THROW(parse_h3("4 2 3\n0 1 2\n"), InputError);
  EXPECT_THROW(parse_h3("4 1 3\n0 1 9\n"), InputError);
  EXPECT_THROW(parse_h3("4 1 2\n0 1\n"), InputError);
  EXPECT_THROW(parse_h3("x"), InputError);
}

TEST(Rng, DeterministicAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(c.below(7), 7u);
    const double u = c.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(Rng::derive(5, 0).next(), Rng::derive(5, 1).next());
}
