#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "hyperfree/bitset.hpp"
#include "hyperfree/error.hpp"
#include "hyperfree/generators.hpp"
#include "hyperfree/rng.hpp"

namespace hyperfree {

// One step of the fingerprint algorithm on a plane: A^t (active points) and
// S^t (fingerprint so far). Points are ordered by index.
struct ContainerState {
  int t = 0;
  DynBitset active;
  std::vector<int> fingerprint;
};

// F^t on the points of A^t: a, a' adjacent when some s in S^t lies on a
// common line with both. Built over global point indices.
inline Graph2 auxiliary_graph(const ProjectivePlane& plane, const ContainerState& st) {
  const int n = plane.lines.n();
  Graph2 f(n);
  for (int s : st.fingerprint) {
    for (int y : plane.incidence.neighbours_x(s)) {
      std::vector<int> on;
      for (int a : plane.incidence.neighbours_y(y))
        if (st.active.test(static_cast<std::size_t>(a))) on.push_back(a);
      for (std::size_t i = 0; i < on.size(); ++i)
        for (std::size_t j = i + 1; j < on.size(); ++j) f.add_edge(on[i], on[j]);
    }
  }
  return f;
}

// True when every edge of F^t has exactly one witness (s, y).
inline bool auxiliary_witnesses_unique(const ProjectivePlane& plane, const ContainerState& st) {
  std::map<std::pair<int, int>, int> seen;
  for (int s : st.fingerprint)
    for (int y : plane.incidence.neighbours_x(s)) {
      std::vector<int> on;
      for (int a : plane.incidence.neighbours_y(y))
        if (st.active.test(static_cast<std::size_t>(a))) on.push_back(a);
      for (std::size_t i = 0; i < on.size(); ++i)
        for (std::size_t j = i + 1; j < on.size(); ++j)
          if (++seen[{on[i], on[j]}] > 1) return false;
    }
  return true;
}

// Repeatedly take a vertex of maximum degree in what is left (ties: smallest
// index) among `vertices`.
inline std::vector<int> degeneracy_order(const Graph2& f, const std::vector<int>& vertices) {
  std::vector<int> rest = vertices;
  std::sort(rest.begin(), rest.end());
  DynBitset left(static_cast<std::size_t>(f.n()));
  for (int v : rest) left.set(static_cast<std::size_t>(v));
  std::vector<int> deg(static_cast<std::size_t>(f.n()), 0);
  for (int v : rest) deg[static_cast<std::size_t>(v)] = static_cast<int>(bits::count_and(f.row(v), left.words()));
  std::vector<int> order;
  order.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t pick = 0;
    for (std::size_t i = 1; i < rest.size(); ++i)
      if (deg[static_cast<std::size_t>(rest[i])] > deg[static_cast<std::size_t>(rest[pick])]) pick = i;
    const int v = rest[pick];
    order.push_back(v);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
    left.reset(static_cast<std::size_t>(v));
    bits::for_each(f.row(v), [&](std::size_t u) {
      if (left.test(u)) --deg[u];
    });
  }
  return order;
}

struct ContractViolations {
  int neighbour_exclusion = 0;  // an F^t-neighbour of the chosen point lies in I
  int sandwich = 0;             // S ⊆ I ⊆ S ∪ A fails at some step
  int monotone = 0;             // S^{t+1} ∪ A^{t+1} ⊄ S^t ∪ A^t

  int total() const noexcept { return neighbour_exclusion + sandwich + monotone; }
};

struct ContainerResult {
  std::vector<int> fingerprint;     // S, ascending
  std::vector<int> container;       // f(S) = S ∪ A^q, ascending
  int steps = 0;
  std::vector<std::size_t> trace;   // |A^t| for t = 0..steps
  ContractViolations violations;
  bool witnesses_unique = true;     // only meaningful with check_witnesses
};

inline bool is_two_independent(const ProjectivePlane& plane, const std::vector<int>& set) {
  std::vector<int> hits(static_cast<std::size_t>(plane.incidence.ny()), 0);
  for (int x : set)
    for (int y : plane.incidence.neighbours_x(x))
      if (++hits[static_cast<std::size_t>(y)] > 2) return false;
  return true;
}

// The fingerprint algorithm driven by a 2-independent point set I.
inline ContainerResult run_container(const ProjectivePlane& plane, std::vector<int> set, int steps,
                                     bool check_witnesses = false) {
  const int n = plane.lines.n();
  std::sort(set.begin(), set.end());
  if (std::adjacent_find(set.begin(), set.end()) != set.end()) throw InputError("point set has repeats");
  for (int x : set)
    if (x < 0 || x >= n) throw InputError("point out of range");
  if (steps < 0) throw InputError("step count must be non-negative");
  if (static_cast<int>(set.size()) <= steps) throw InputError("need |I| > steps");
  if (!is_two_independent(plane, set)) throw InputError("point set meets some line in 3 or more points");

  DynBitset in_i(static_cast<std::size_t>(n));
  for (int x : set) in_i.set(static_cast<std::size_t>(x));
  ContainerState st{0, DynBitset(static_cast<std::size_t>(n), true), {}};
  ContainerResult res;
  res.steps = steps;
  res.trace.push_back(st.active.count());
  DynBitset s_bits(static_cast<std::size_t>(n));

  auto sandwich_ok = [&] {
    DynBitset cover = st.active;
    cover |= s_bits;
    return s_bits.is_subset_of(in_i) && in_i.is_subset_of(cover);
  };

  for (int t = 0; t < steps; ++t) {
    st.t = t;
    const Graph2 f = auxiliary_graph(plane, st);
    if (check_witnesses && !auxiliary_witnesses_unique(plane, st)) res.witnesses_unique = false;
    const auto order = degeneracy_order(f, st.active.to_vector());
    std::size_t pos = 0;
    while (pos < order.size() && !in_i.test(static_cast<std::size_t>(order[pos]))) ++pos;
    if (pos == order.size()) throw ContractError("no point of I is left among the active points");
    const int chosen = order[pos];

    DynBitset before = st.active;
    before |= s_bits;
    DynBitset removed(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i <= pos; ++i) removed.set(static_cast<std::size_t>(order[i]));
    bits::for_each(f.row(chosen), [&](std::size_t u) {
      if (in_i.test(u)) ++res.violations.neighbour_exclusion;
      removed.set(u);
    });
    st.active.subtract(removed);
    st.fingerprint.push_back(chosen);
    s_bits.set(static_cast<std::size_t>(chosen));

    DynBitset after = st.active;
    after |= s_bits;
    if (!after.is_subset_of(before)) ++res.violations.monotone;
    if (!sandwich_ok()) ++res.violations.sandwich;
    res.trace.push_back(st.active.count());
  }

  res.fingerprint = st.fingerprint;
  std::sort(res.fingerprint.begin(), res.fingerprint.end());
  DynBitset cont = st.active;
  cont |= s_bits;
  res.container = cont.to_vector();
  return res;
}

// Steps q = round(C0 * n^(1/4) * ln n) for an n-point plane.
inline int container_steps_for(int n, double c0) {
  const double nd = static_cast<double>(n);
  return static_cast<int>(std::lround(c0 * std::pow(nd, 0.25) * std::log(nd)));
}

struct DecreaseAudit {
  int in_scope = 0;
  int held = 0;
};

// Steps with t >= 2 n^(1/4) and |A^t| >= 10 sqrt(n) are in scope; each is
// checked for |A^{t+1}| <= (1 - n^(-1/4)) |A^t|.
inline DecreaseAudit decrease_audit(const std::vector<std::size_t>& trace, int n) {
  DecreaseAudit out;
  const double nd = static_cast<double>(n);
  const double quarter = std::pow(nd, 0.25);
  for (std::size_t t = 0; t + 1 < trace.size(); ++t) {
    const double a = static_cast<double>(trace[t]);
    if (static_cast<double>(t) < 2.0 * quarter || a < 10.0 * std::sqrt(nd)) continue;
    ++out.in_scope;
    if (static_cast<double>(trace[t + 1]) <= (1.0 - 1.0 / quarter) * a) ++out.held;
  }
  return out;
}

// Random maximal 2-independent set (an arc): points in shuffled order, each
// kept when no line through it already holds two kept points.
inline std::vector<int> random_two_independent(const ProjectivePlane& plane, std::uint64_t seed) {
  const int n = plane.lines.n();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(std::span(order));
  std::vector<int> hits(static_cast<std::size_t>(plane.incidence.ny()), 0);
  std::vector<int> out;
  for (int x : order) {
    const auto ys = plane.incidence.neighbours_x(x);
    if (std::any_of(ys.begin(), ys.end(), [&](int y) { return hits[static_cast<std::size_t>(y)] >= 2; })) continue;
    for (int y : ys) ++hits[static_cast<std::size_t>(y)];
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ContainerAuditReport {
  int q = 0;
  int points = 0;
  int sets = 0;
  int runs = 0;
  int skipped = 0;  // sets not larger than the fixed step count
  ContractViolations violations;
  int fingerprint_groups = 0;   // distinct (steps, S) observed
  int collisions = 0;           // groups reached by two different sets I
  int collision_mismatches = 0; // groups whose containers differ
  bool witnesses_unique = true;
  DecreaseAudit decrease;
  std::vector<int> set_sizes;
  std::vector<std::pair<int, std::size_t>> container_sizes;  // (steps, |f(S)|) per run
};

// Every sampled I is run for each step count 1..|I|-1 (capped at max_steps),
// or only for `fixed_steps` when given; sets too small for it are skipped.
inline ContainerAuditReport container_audit(int q, int sets, std::uint64_t seed, std::optional<int> fixed_steps = std::nullopt,
                                            int max_steps = 1 << 30) {
  const auto plane = gen_projective_plane(q);
  ContainerAuditReport rep;
  rep.q = q;
  rep.points = plane.lines.n();
  rep.sets = sets;
  struct Group {
    std::vector<int> container;
    std::vector<int> first_set;
    bool collided = false;
  };
  std::map<std::pair<int, std::vector<int>>, Group> groups;
  for (int k = 0; k < sets; ++k) {
    const auto set = random_two_independent(plane, Rng::derive(seed, static_cast<std::uint64_t>(k)).next());
    rep.set_sizes.push_back(static_cast<int>(set.size()));
    int lo = 1, hi = std::min(static_cast<int>(set.size()) - 1, max_steps);
    if (fixed_steps) {
      lo = *fixed_steps;
      if (static_cast<int>(set.size()) <= lo) {
        ++rep.skipped;
        continue;
      }
      hi = lo;
    }
    for (int steps = lo; steps <= hi; ++steps) {
      auto res = run_container(plane, set, steps, true);
      if (!res.witnesses_unique) rep.witnesses_unique = false;
      ++rep.runs;
      rep.violations.neighbour_exclusion += res.violations.neighbour_exclusion;
      rep.violations.sandwich += res.violations.sandwich;
      rep.violations.monotone += res.violations.monotone;
      auto d = decrease_audit(res.trace, rep.points);
      rep.decrease.in_scope += d.in_scope;
      rep.decrease.held += d.held;
      rep.container_sizes.push_back({steps, res.container.size()});
      auto [it, fresh] = groups.try_emplace({steps, res.fingerprint}, Group{res.container, set, false});
      if (!fresh && it->second.first_set != set) {
        if (!it->second.collided) ++rep.collisions;
        it->second.collided = true;
        if (it->second.container != res.container) ++rep.collision_mismatches;
      }
    }
  }
  rep.fingerprint_groups = static_cast<int>(groups.size());
  return rep;
}

}  // namespace hyperfree
