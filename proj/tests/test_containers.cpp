#include <gtest/gtest.h>

#include <map>

#include "hyperfree/containers.hpp"
#include "hyperfree/parallel.hpp"

using namespace hyperfree;

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

ContainerState initial(const ProjectivePlane& pp) { return {0, DynBitset(static_cast<std::size_t>(pp.lines.n()), true), {}}; }

}  // namespace

TEST(AuxiliaryGraph, EmptyFingerprintGivesNoEdges) {
  auto pp = gen_projective_plane(3);
  EXPECT_EQ(auxiliary_graph(pp, initial(pp)).edge_count(), 0);
}

TEST(AuxiliaryGraph, OnePointOnFano) {
  auto pp = gen_projective_plane(2);
  auto st = initial(pp);
  st.fingerprint = {0};
  st.active.reset(0);
  auto f = auxiliary_graph(pp, st);
  // Each of the 3 lines through point 0 carries two other points: 3 edges.
  EXPECT_EQ(f.edge_count(), 3);
  for (const auto& line : pp.lines.blocks()) {
    if (!std::binary_search(line.begin(), line.end(), 0)) continue;
    std::vector<int> rest;
    for (int x : line)
      if (x != 0) rest.push_back(x);
    EXPECT_TRUE(f.has_edge(rest[0], rest[1]));
  }
}

TEST(AuxiliaryGraph, DependsOnlyOnState) {
  auto pp = gen_projective_plane(5);
  auto a = random_two_independent(pp, 1), b = random_two_independent(pp, 2);
  auto st = initial(pp);
  st.fingerprint = {a[0], b[0]};
  for (int s : st.fingerprint) st.active.reset(static_cast<std::size_t>(s));
  EXPECT_EQ(auxiliary_graph(pp, st), auxiliary_graph(pp, st));
}

TEST(DegeneracyOrder, Examples) {
  Graph2 empty(5);
  EXPECT_EQ(degeneracy_order(empty, {0, 1, 2, 3, 4}), (std::vector<int>{0, 1, 2, 3, 4}));

  std::vector<std::array<Vertex, 2>> one{{1, 3}};
  EXPECT_EQ(degeneracy_order(Graph2(5, one), {0, 1, 2, 3, 4}), (std::vector<int>{1, 0, 2, 3, 4}));

  std::vector<std::array<Vertex, 2>> star{{2, 0}, {2, 1}, {2, 3}};
  EXPECT_EQ(degeneracy_order(Graph2(4, star), {0, 1, 2, 3})[0], 2);
}

TEST(RunContainer, ZeroStepsGivesWholePlane) {
  auto pp = gen_projective_plane(3);
  auto i = random_two_independent(pp, 4);
  auto r = run_container(pp, i, 0);
  EXPECT_TRUE(r.fingerprint.empty());
  EXPECT_EQ(r.container.size(), 13u);
}

TEST(RunContainer, Sandwich) {
  for (int q : {5, 7, 11}) {
    auto pp = gen_projective_plane(q);
    for (std::uint64_t s = 0; s < 20; ++s) {
      auto i = random_two_independent(pp, s);
      ASSERT_TRUE(is_two_independent(pp, i));
      for (int steps = 1; steps < static_cast<int>(i.size()); ++steps) {
        auto r = run_container(pp, i, steps);
        EXPECT_EQ(r.violations.total(), 0);
        EXPECT_EQ(static_cast<int>(r.fingerprint.size()), steps);
        EXPECT_TRUE(subset(r.fingerprint, i));
        EXPECT_TRUE(subset(i, r.container));
        for (std::size_t t = 1; t < r.trace.size(); ++t) EXPECT_LE(r.trace[t], r.trace[t - 1]);
      }
    }
  }
}

TEST(RunContainer, FingerprintDeterminesContainer) {
  auto pp = gen_projective_plane(5);
  std::map<std::pair<int, std::vector<int>>, std::vector<int>> seen;
  int collisions = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    auto i = random_two_independent(pp, s);
    for (int steps = 1; steps <= 3; ++steps) {
      auto r = run_container(pp, i, steps);
      auto [it, fresh] = seen.try_emplace({steps, r.fingerprint}, r.container);
      if (!fresh) {
        ++collisions;
        EXPECT_EQ(it->second, r.container);
      }
    }
  }
  EXPECT_GT(collisions, 0);
}

TEST(RunContainer, RejectsBadInput) {
  auto pp = gen_projective_plane(2);
  EXPECT_THROW(run_container(pp, {0, 1, 2, 3, 4, 5, 6}, 1), InputError);  // a line has 3 points in I
  EXPECT_THROW(run_container(pp, {0, 0}, 1), InputError);
  EXPECT_THROW(run_container(pp, {0, 9}, 1), InputError);
  EXPECT_THROW(run_container(pp, {0}, 1), InputError);
}

TEST(DecreaseAudit, VacuousCases) {
  auto pp = gen_projective_plane(2);
  auto r = run_container(pp, random_two_independent(pp, 1), 2);
  EXPECT_EQ(decrease_audit(r.trace, 7).in_scope, 0);
  EXPECT_EQ(decrease_audit({}, 100).in_scope, 0);
}

TEST(DecreaseAudit, CountsInScopeSteps) {
  // n = 16: scope needs t >= 4 and |A| >= 40.
  std::vector<std::size_t> trace{100, 90, 80, 70, 60, 59, 29};
  auto d = decrease_audit(trace, 16);
  EXPECT_EQ(d.in_scope, 2);
  EXPECT_EQ(d.held, 1);
}

TEST(ContainerAudit, ThreadCountDoesNotChangeResults) {
  std::vector<ContainerAuditReport> one(3), four(3);
  const std::vector<int> qs{5, 7, 11};
  parallel_for(3, 1, [&](std::size_t i) { one[i] = container_audit(qs[i], 30, 9); });
  parallel_for(3, 4, [&](std::size_t i) { four[i] = container_audit(qs[i], 30, 9); });
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(one[i].runs, four[i].runs);
    EXPECT_EQ(one[i].collisions, four[i].collisions);
    EXPECT_EQ(one[i].set_sizes, four[i].set_sizes);
    EXPECT_EQ(one[i].container_sizes, four[i].container_sizes);
  }
}

TEST(ContainerSteps, Formula) {
  EXPECT_EQ(container_steps_for(31, 1.0), static_cast<int>(std::lround(std::pow(31.0, 0.25) * std::log(31.0))));
  EXPECT_EQ(container_steps_for(31, 0.0), 0);
}
