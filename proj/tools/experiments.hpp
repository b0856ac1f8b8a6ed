#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyperfree/containers.hpp"
#include "hyperfree/exact.hpp"
#include "hyperfree/generators.hpp"
#include "hyperfree/homogeneous.hpp"
#include "hyperfree/parallel.hpp"
#include "hyperfree/structure.hpp"
#include "json_io.hpp"

namespace hyperfree::cli {

struct ExperimentConfig {
  std::string name;
  std::optional<std::uint64_t> seed;
  std::vector<int> n_values;
  std::vector<int> q_values;
  int nmin = 4;
  int nmax = 6;
  int seeds = 5;
  int instances = 200;
  int sets = 200;
  double cp = 0.05;
  std::uint64_t max_nodes = 2'000'000;
  std::string family;
  unsigned threads = 1;
  Budget budget;
};

struct ExperimentReport {
  std::vector<std::string> columns;
  std::vector<json> rows;  // each an array aligned with columns
  json summary = json::object();
  json params = json::object();
};

inline std::string to_csv(const ExperimentReport& rep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rep.columns.size(); ++i) os << (i ? "," : "") << rep.columns[i];
  os << '\n';
  for (const auto& row : rep.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      const auto& cell = row[i];
      if (cell.is_string()) {
        auto s = cell.get<std::string>();
        if (s.find_first_of(",\"") != std::string::npos) {
          std::string quoted = "\"";
          for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
          os << quoted << '"';
        } else {
          os << s;
        }
      } else if (cell.is_null()) {
        os << "";
      } else {
        os << cell.dump();
      }
    }
    os << '\n';
  }
  return os.str();
}

inline json to_json(const ExperimentReport& rep, const ExperimentConfig& cfg) {
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < rep.columns.size(); ++i) obj[rep.columns[i]] = row[i];
    rows.push_back(obj);
  }
  json out{{"experiment", cfg.name}, {"params", rep.params}, {"columns", rep.columns}, {"rows", rows}, {"summary", rep.summary}};
  out["seed"] = cfg.seed ? json(*cfg.seed) : json(nullptr);
  return out;
}

inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) { return Rng::derive(seed, index).next(); }

// Least-squares slope of log y against log x.
inline std::optional<double> fitted_exponent(const std::vector<std::pair<double, double>>& pts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int k = 0;
  for (auto [x, y] : pts) {
    if (x <= 1 || y <= 0) continue;
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++k;
  }
  const double den = k * sxx - sx * sx;
  if (k < 2 || std::abs(den) < 1e-12) return std::nullopt;
  return (k * sxy - sx * sy) / den;
}

inline int expected_theorem_value(const ForbiddenFamily& q, int n) {
  auto in = [&](std::initializer_list<int> fs) {
    return q.size() == fs.size() && std::all_of(fs.begin(), fs.end(), [&](int f) { return q.contains(4, f); });
  };
  if (in({0, 2, 3}) || in({4, 2, 1})) return n - 1;
  if (in({0, 1, 3}) || in({4, 3, 1})) return n % 6 == 0 ? n / 2 : (n + 2) / 2;
  if (in({1, 2, 3})) return n;
  return -1;
}

inline ExperimentReport run_theorem_exact(const ExperimentConfig& cfg) {
  ExperimentReport rep;
  rep.columns = {"n", "family", "value", "expected", "match", "explored", "complete"};
  rep.params = {{"nmin", cfg.nmin}, {"nmax", cfg.nmax}};
  const std::vector<ForbiddenFamily> families{
      ForbiddenFamily::of_sizes(3, 4, {0, 2, 3}), ForbiddenFamily::of_sizes(3, 4, {1, 2, 4}),
      ForbiddenFamily::of_sizes(3, 4, {0, 1, 3}), ForbiddenFamily::of_sizes(3, 4, {1, 3, 4}),
      ForbiddenFamily::of_sizes(3, 4, {1, 2, 3})};
  struct Job {
    int n;
    std::size_t f;
  };
  std::vector<Job> jobs;
  for (int n = cfg.nmin; n <= cfg.nmax; ++n)
    for (std::size_t f = 0; f < families.size(); ++f) jobs.push_back({n, f});
  std::vector<json> rows(jobs.size());
  parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
    const auto& fam = families[jobs[i].f];
    auto rec = exact_h(jobs[i].n, fam, cfg.budget);
    const int expected = expected_theorem_value(fam, jobs[i].n);
    json value = rec.value ? json(*rec.value) : json(nullptr);
    rows[i] = json::array({jobs[i].n, fam.to_string(), value, expected,
                           rec.complete && rec.value && *rec.value == expected, rec.explored, rec.complete});
  });
  int mismatches = 0;
  for (const auto& r : rows)
    if (!r[4].get<bool>()) ++mismatches;
  rep.rows = std::move(rows);
  rep.summary = {{"mismatches", mismatches}};
  return rep;
}

inline ExperimentReport run_growth_curves(const ExperimentConfig& cfg) {
  ExperimentReport rep;
  const auto fam = parse_family(cfg.family.empty() ? "4:2,4:3" : cfg.family);
  rep.params = {{"family", fam.to_string()}, {"max_nodes", cfg.max_nodes}};
  auto is = [&](std::initializer_list<int> fs) {
    return fam.size() == fs.size() && std::all_of(fs.begin(), fs.end(), [&](int f) { return fam.contains(4, f); });
  };
  std::vector<std::pair<double, double>> pts;
  const SearchLimits limits{cfg.max_nodes};
  if (is({2, 3}) || is({1, 2})) {
    // Random subsample of a projective plane, made into cliques.
    auto qs = cfg.q_values.empty() ? std::vector<int>{3, 5, 7, 11} : cfg.q_values;
    rep.params["construction"] = "subsample";
    rep.params["q"] = qs;
    rep.params["seeds"] = cfg.seeds;
    rep.params["cp"] = cfg.cp;
    rep.columns = {"q", "seed_index", "n", "h", "complete", "max_block", "reference", "ratio"};
    struct Job {
      int q, s;
    };
    std::vector<Job> jobs;
    for (int q : qs)
      for (int s = 0; s < cfg.seeds; ++s) jobs.push_back({q, s});
    std::vector<json> rows(jobs.size());
    parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
      auto c = gen_subsample_construction(jobs[i].q, cfg.cp, instance_seed(*cfg.seed, i));
      auto g = g_value_bounded(c.system, limits);
      const double n = c.system.n();
      const double ref = n > 1 ? std::cbrt(n) * std::pow(std::log(n), 4.0 / 3.0) : 1.0;
      rows[i] = json::array({jobs[i].q, jobs[i].s, c.system.n(), g.value, g.complete, c.max_block, ref, g.value / ref});
    });
    for (const auto& r : rows) pts.push_back({r[2].get<double>(), r[3].get<double>()});
    rep.rows = std::move(rows);
  } else if (is({2, 4}) || is({0, 2})) {
    // Two constructions: random partial Steiner systems (linear 3-graphs,
    // where the sqrt(n log n) order is known) and stars on the lines of a
    // plane, centred at each line's smallest point.
    auto qs = cfg.q_values.empty() ? std::vector<int>{2, 3, 5, 7} : cfg.q_values;
    auto ns = cfg.n_values.empty() ? std::vector<int>{15, 30, 60, 120} : cfg.n_values;
    rep.params["construction"] = "partial-steiner, plane-stars";
    rep.params["q"] = qs;
    rep.params["n"] = ns;
    rep.params["seeds"] = cfg.seeds;
    rep.columns = {"construction", "param", "seed_index", "n", "h", "omega", "alpha", "complete", "reference", "ratio"};
    struct Job {
      bool steiner;
      int param, s;
    };
    std::vector<Job> jobs;
    for (int n : ns)
      for (int s = 0; s < cfg.seeds; ++s) jobs.push_back({true, n, s});
    for (int q : qs) jobs.push_back({false, q, 0});
    std::vector<json> rows(jobs.size());
    parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
      const auto h = jobs[i].steiner ? clique_fill(gen_partial_steiner(jobs[i].param, instance_seed(*cfg.seed, i)))
                                     : gen_plane_stars(jobs[i].param);
      auto r = homogeneous(h, limits);
      const double n = h.n();
      const double ref = std::sqrt(n * std::log(n));
      rows[i] = json::array({jobs[i].steiner ? "partial-steiner" : "plane-stars", jobs[i].param, jobs[i].s, h.n(), r.h, r.omega,
                             r.alpha, r.complete, ref, r.h / ref});
    });
    std::vector<std::pair<double, double>> stars;
    for (const auto& r : rows) (r[0] == "partial-steiner" ? pts : stars).push_back({r[3].get<double>(), r[4].get<double>()});
    rep.rows = std::move(rows);
    auto a = fitted_exponent(pts), b = fitted_exponent(stars);
    rep.summary = {{"fitted_exponent", a ? json(*a) : json(nullptr)}, {"fitted_exponent_plane_stars", b ? json(*b) : json(nullptr)}};
    return rep;
  } else if (is({1, 3})) {
    auto ns = cfg.n_values.empty() ? std::vector<int>{16, 32, 64, 128} : cfg.n_values;
    rep.params["construction"] = "two-graph";
    rep.params["n"] = ns;
    rep.params["seeds"] = cfg.seeds;
    rep.columns = {"n", "seed_index", "h", "complete", "reference", "ratio"};
    struct Job {
      int n, s;
    };
    std::vector<Job> jobs;
    for (int n : ns)
      for (int s = 0; s < cfg.seeds; ++s) jobs.push_back({n, s});
    std::vector<json> rows(jobs.size());
    parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
      auto h = gen_two_graph(gen_gnp(jobs[i].n, 0.5, instance_seed(*cfg.seed, i)));
      auto r = homogeneous(h, limits);
      const double ref = std::log2(static_cast<double>(jobs[i].n));
      rows[i] = json::array({jobs[i].n, jobs[i].s, r.h, r.complete, ref, r.h / ref});
    });
    for (const auto& r : rows) pts.push_back({r[0].get<double>(), r[2].get<double>()});
    rep.rows = std::move(rows);
  } else {
    throw InputError("growth-curves supports the families 4:2,4:3 / 4:2,4:4 / 4:1,4:3 and their complements");
  }
  auto slope = fitted_exponent(pts);
  rep.summary = {{"fitted_exponent", slope ? json(*slope) : json(nullptr)}};
  return rep;
}

inline ExperimentReport run_container_audit(const ExperimentConfig& cfg) {
  ExperimentReport rep;
  auto qs = cfg.q_values.empty() ? std::vector<int>{5, 7, 11} : cfg.q_values;
  rep.params = {{"q", qs}, {"sets", cfg.sets}};
  rep.columns = {"q", "points", "sets", "runs", "violations", "fingerprint_groups", "collisions", "collision_mismatches",
                 "witnesses_unique", "decrease_in_scope", "decrease_held", "mean_set_size", "mean_container_size"};
  std::vector<json> rows(qs.size());
  parallel_for(qs.size(), cfg.threads, [&](std::size_t i) {
    auto r = container_audit(qs[i], cfg.sets, instance_seed(*cfg.seed, i));
    auto j = cli::to_json(r);
    rows[i] = json::array({r.q, r.points, r.sets, r.runs, r.violations.total(), r.fingerprint_groups, r.collisions,
                           r.collision_mismatches, r.witnesses_unique, r.decrease.in_scope, r.decrease.held,
                           j["mean_set_size"], j["mean_container_size"]});
  });
  int total = 0;
  for (const auto& r : rows) total += r[4].get<int>() + r[7].get<int>();
  rep.rows = std::move(rows);
  rep.summary = {{"contract_failures", total}};
  return rep;
}

// Seeded mix used by the characterization experiments: random hypergraphs
// at several densities, random star forests, and star forests with one edge
// toggled.
inline Hypergraph3 fuzz_instance(int n, std::uint64_t seed) {
  Rng rng(seed);
  const auto kind = rng.below(4);
  const auto sub = rng.next();
  if (kind == 0) {
    static constexpr double kDensity[] = {0.02, 0.05, 0.1, 0.3, 0.6};
    return gen_random_hypergraph(n, kDensity[rng.below(5)], sub);
  }
  auto h = gen_random_star_forest(n, sub, 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, n - 2)))),
                                  1 + static_cast<int>(rng.below(12)));
  if (kind == 1 || n < 3) return h;
  Vertex a, b, c;
  do {
    a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    c = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
  } while (a == b || b == c || a == c);
  auto edges = h.edges();
  auto t = Triple::sorted(a, b, c);
  auto it = std::find(edges.begin(), edges.end(), t);
  if (it != edges.end()) edges.erase(it);
  else edges.push_back(t);
  return Hypergraph3(n, edges);
}

inline ExperimentReport run_charac_fuzz(const ExperimentConfig& cfg) {
  ExperimentReport rep;
  rep.params = {{"nmin", cfg.nmin}, {"nmax", cfg.nmax}, {"instances", cfg.instances}};
  rep.columns = {"n", "instances", "free", "not_free", "discrepancies", "overlap_failures"};
  std::vector<int> ns;
  for (int n = cfg.nmin; n <= cfg.nmax; ++n) ns.push_back(n);
  std::vector<json> rows(ns.size());
  parallel_for(ns.size(), cfg.threads, [&](std::size_t i) {
    int free = 0, disc = 0, overlap = 0;
    for (int k = 0; k < cfg.instances; ++k) {
      auto h = fuzz_instance(ns[i], instance_seed(*cfg.seed, i * 1'000'003ULL + static_cast<std::uint64_t>(k)));
      auto r = check_charac_2_4(h);
      free += r.q_free_bruteforce;
      disc += r.q_free_bruteforce != r.all_components_stars;
      overlap += r.q_free_bruteforce && !r.pairwise_support_overlap_ok;
    }
    rows[i] = json::array({ns[i], cfg.instances, free, cfg.instances - free, disc, overlap});
  });
  int disc = 0;
  for (const auto& r : rows) disc += r[4].get<int>() + r[5].get<int>();
  rep.rows = std::move(rows);
  rep.summary = {{"discrepancies", disc}};
  return rep;
}

inline ExperimentReport run_edge_bound(const ExperimentConfig& cfg) {
  ExperimentReport rep;
  rep.params = {{"nmin", cfg.nmin}, {"nmax", cfg.nmax}, {"instances", cfg.instances}};
  rep.columns = {"n", "free_instances", "max_edges", "bound", "violations", "equality_count", "equality_only_star"};
  std::vector<int> ns;
  for (int n = std::max(3, cfg.nmin); n <= cfg.nmax; ++n) ns.push_back(n);
  std::vector<json> rows(ns.size());
  parallel_for(ns.size(), cfg.threads, [&](std::size_t i) {
    const int n = ns[i];
    const auto star = gen_star(n);
    std::vector<Hypergraph3> pool{star};
    for (int k = 0; k < cfg.instances; ++k)
      pool.push_back(fuzz_instance(n, instance_seed(*cfg.seed, i * 1'000'003ULL + static_cast<std::uint64_t>(k))));
    int free = 0, viol = 0, eq = 0;
    bool only_star = true;
    std::int64_t max_e = 0, bound = 0;
    for (const auto& h : pool) {
      if (!is_q_free(h, ForbiddenFamily::of_sizes(3, 4, {2, 4}))) continue;
      ++free;
      auto b = edge_bound_check(h);
      bound = b.bound;
      max_e = std::max(max_e, b.edges);
      viol += !b.holds;
      if (b.equality) {
        ++eq;
        if (!are_isomorphic(h, star)) only_star = false;
      }
    }
    rows[i] = json::array({n, free, max_e, bound, viol, eq, only_star});
  });
  int bad = 0;
  for (const auto& r : rows) bad += r[4].get<int>() + (r[6].get<bool>() ? 0 : 1);
  rep.rows = std::move(rows);
  rep.summary = {{"failures", bad}};
  return rep;
}

inline ExperimentReport run_two_graph_homog(const ExperimentConfig& cfg) {
  ExperimentReport rep;
  auto ns = cfg.n_values.empty() ? std::vector<int>{64, 128, 256} : cfg.n_values;
  rep.params = {{"n", ns}, {"seeds", cfg.seeds}, {"max_nodes", cfg.max_nodes}};
  rep.columns = {"n", "seed_index", "parity", "free", "h", "omega", "alpha", "complete", "log2n", "ratio"};
  struct Job {
    int n, s;
  };
  std::vector<Job> jobs;
  for (int n : ns)
    for (int s = 0; s < cfg.seeds; ++s) jobs.push_back({n, s});
  std::vector<json> rows(jobs.size());
  parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
    auto h = gen_two_graph(gen_gnp(jobs[i].n, 0.5, instance_seed(*cfg.seed, i)));
    const bool parity = two_graph_parity_check(h);
    const bool free = is_q_free(h, ForbiddenFamily::of_sizes(3, 4, {1, 3})).free;
    auto r = homogeneous(h, {cfg.max_nodes});
    const double l = std::log2(static_cast<double>(jobs[i].n));
    rows[i] = json::array({jobs[i].n, jobs[i].s, parity, free, r.h, r.omega, r.alpha, r.complete, l, r.h / l});
  });
  int failures = 0;
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows) {
    failures += !(r[2].get<bool>() && r[3].get<bool>());
    pts.push_back({r[0].get<double>(), r[4].get<double>()});
  }
  rep.rows = std::move(rows);
  auto slope = fitted_exponent(pts);
  rep.summary = {{"property_failures", failures}, {"fitted_exponent", slope ? json(*slope) : json(nullptr)}};
  return rep;
}

inline const std::map<std::string, std::pair<bool, std::function<ExperimentReport(const ExperimentConfig&)>>>& experiments() {
  // name -> (needs a seed, runner)
  static const std::map<std::string, std::pair<bool, std::function<ExperimentReport(const ExperimentConfig&)>>> table{
      {"theorem-exact", {false, run_theorem_exact}}, {"growth-curves", {true, run_growth_curves}},
      {"container-audit", {true, run_container_audit}}, {"edge-bound", {true, run_edge_bound}},
      {"charac-fuzz", {true, run_charac_fuzz}}, {"two-graph-homog", {true, run_two_graph_homog}}};
  return table;
}

}  // namespace hyperfree::cli
