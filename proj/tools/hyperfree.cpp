// hyperfree: generate, check, solve and enumerate hypergraphs with forbidden
// order-size pairs, run the container algorithm, and reproduce experiments.
//
// Exit codes: 0 pass, 1 check failed (or search incomplete), 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "experiments.hpp"
#include "hyperfree/containers.hpp"
#include "hyperfree/exact.hpp"
#include "hyperfree/generators.hpp"
#include "hyperfree/homogeneous.hpp"
#include "hyperfree/io.hpp"
#include "hyperfree/structure.hpp"
#include "json_io.hpp"

namespace {

using namespace hyperfree;
using cli::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr const char* kVersion = "0.1.0";

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw InputError("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Budget budget_from_env(Budget b) {
  if (const char* s = std::getenv("HYPERFREE_MAX_SECONDS")) b.max_seconds = std::strtod(s, nullptr);
  if (const char* s = std::getenv("HYPERFREE_MAX_CLASSES")) b.max_classes = std::strtoull(s, nullptr, 10);
  return b;
}

Hypergraph3 load_h3(const std::string& path) {
  if (path == "-") return read_h3(std::cin);
  return hypergraph_from_edge_list(read_edge_list_file(path));
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw InputError("cannot write " + out_path);
  f << content;
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string name;
  int n = -1;
  int q = -1;
  int r = 3;
  int m = -1;
  double p = 0.5;
  double cp = 0.05;
  std::uint64_t seed = 0;
  bool have_seed = false;
  std::string parts;
  std::string graph;
  std::string out;
  std::string ss_out;
  int attempts = 1;
  int target = -1;
};

int require(int value, const char* flag) {
  if (value < 0) throw InputError(std::string("missing ") + flag);
  return value;
}

int cmd_generate(const GenerateArgs& a) {
  std::ostringstream file;
  std::ostringstream summary;
  auto hyper = [&](const Hypergraph3& h, const std::string& family) {
    write_h3(file, h);
    summary << a.name << ": n=" << h.n() << " e=" << h.edge_count();
    if (!family.empty()) summary << " free-family=" << family;
  };
  auto need_seed = [&] {
    if (!a.have_seed) throw InputError(a.name + " needs --seed");
    return a.seed;
  };

  if (a.name == "star") {
    hyper(gen_star(require(a.n, "--n")), "4:2,4:4");
  } else if (a.name == "hprime") {
    hyper(gen_hprime(), "4:1,4:3,4:4");
  } else if (a.name == "blowup") {
    auto parts = parse_int_list(a.parts.empty() ? "1,1,1,1,1,1" : a.parts);
    hyper(gen_blowup(parts), "4:1,4:3,4:4");
  } else if (a.name == "ngon") {
    const int n = require(a.n, "--n");
    hyper(gen_ngon(n), "4:1,4:3,4:4");
    summary << " alpha=ceil((n+1)/2)=" << (n + 2) / 2;
  } else if (a.name == "two-graph") {
    Graph2 g = a.graph.empty() ? gen_gnp(require(a.n, "--n"), a.p, need_seed()) : graph_from_edge_list(read_edge_list_file(a.graph));
    hyper(gen_two_graph(g), "4:1,4:3");
  } else if (a.name == "gnp") {
    auto g = gen_gnp(require(a.n, "--n"), a.p, need_seed());
    write_graph(file, g);
    summary << "gnp: n=" << g.n() << " e=" << g.edge_count();
  } else if (a.name == "plane") {
    auto pp = gen_projective_plane(require(a.q, "--q"));
    write_ss(file, pp.lines);
    summary << "plane: q=" << a.q << " points=" << pp.lines.n() << " lines=" << pp.lines.blocks().size()
            << " c4-free=" << (pp.incidence.is_c4_free() ? "yes" : "no");
  } else if (a.name == "plane-stars") {
    hyper(gen_plane_stars(require(a.q, "--q")), "4:2,4:4");
  } else if (a.name == "steiner") {
    auto ss = gen_partial_steiner(require(a.n, "--n"), need_seed(), a.attempts,
                                  a.target >= 0 ? std::optional<int>(a.target) : std::nullopt);
    write_ss(file, ss);
    summary << "steiner: n=" << ss.n() << " triples=" << ss.blocks().size() << " linear=" << (ss.is_linear() ? "yes" : "no");
  } else if (a.name == "three-clique") {
    hyper(gen_three_clique_cyclic(require(a.n, "--n")), "4:0,4:3");
  } else if (a.name == "clique-plus-isolated") {
    hyper(gen_clique_plus_isolated(require(a.n, "--n")), "4:0,4:2,4:3");
  } else if (a.name == "subsample") {
    auto c = gen_subsample_construction(require(a.q, "--q"), a.cp, need_seed());
    hyper(c.hypergraph, "4:2,4:3");
    summary << " p=" << c.p << " max_block=" << c.max_block << " blocks=" << c.system.blocks().size();
    if (!a.ss_out.empty()) {
      std::ostringstream ss;
      write_ss(ss, c.system);
      emit(ss.str(), a.ss_out);
    }
  } else if (a.name == "iterated-partition") {
    auto ip = gen_iterated_partition(a.r, require(a.m, "--m"));
    write_edge_list(file, ip.m, ip.r, ip.edges);
    summary << "iterated-partition: r=" << ip.r << " m=" << ip.m << " g=" << ip.count;
  } else {
    throw InputError("unknown generator '" + a.name + "'");
  }
  emit(file.str(), a.out);
  (a.out.empty() || a.out == "-" ? std::cerr : std::cout) << summary.str() << '\n';
  return kPass;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
  std::string file;
  std::string free;
  std::string charac;
  bool parity = false;
  std::string link_c4;
  bool ff = false;
  bool edge_bound = false;
  bool json = false;
};

int cmd_check(const CheckArgs& a) {
  const int modes = !a.free.empty() + !a.charac.empty() + a.parity + !a.link_c4.empty() + a.ff + a.edge_bound;
  if (modes != 1) throw InputError("choose exactly one of --free, --charac, --parity, --link-c4, --ff, --edge-bound");
  const auto h = load_h3(a.file);
  bool pass = false;
  json report;
  std::ostringstream text;

  if (!a.free.empty()) {
    const auto q = parse_family(a.free);
    auto r = is_q_free(h, q);
    pass = r.free;
    report = {{"check", "free"}, {"family", q.to_string()}, {"pass", pass}, {"witness", r.witness}};
    text << (pass ? "PASS" : "FAIL") << ": " << (pass ? "" : "not ") << q.to_string() << "-free";
    if (!pass) {
      text << "; witness {";
      for (std::size_t i = 0; i < r.witness.size(); ++i) text << (i ? "," : "") << r.witness[i];
      text << "} spans " << induced_edge_count(h, r.witness) << " edges";
    }
  } else if (!a.charac.empty()) {
    if (a.charac != "tight-star") throw InputError("unknown characterization '" + a.charac + "' (known: tight-star)");
    auto r = check_charac_2_4(h);
    pass = r.q_free_bruteforce && r.all_components_stars && r.pairwise_support_overlap_ok;
    report = cli::to_json(r);
    report["check"] = "tight-star";
    report["pass"] = pass;
    text << (pass ? "PASS" : "FAIL") << ": " << r.components.size() << " tight components, "
         << (r.all_components_stars ? "all stars" : "not all stars") << ", brute force "
         << (r.q_free_bruteforce ? "free" : "not free") << (r.consistent() ? "" : " (INCONSISTENT)");
    for (const auto& c : r.components)
      if (!c.is_star) {
        text << "; non-star component on {";
        for (std::size_t i = 0; i < c.support.size(); ++i) text << (i ? "," : "") << c.support[i];
        text << "}";
        break;
      }
  } else if (a.parity) {
    pass = two_graph_parity_check(h);
    report = {{"check", "parity"}, {"pass", pass}};
    text << (pass ? "PASS" : "FAIL") << ": every 4-set spans an " << (pass ? "even" : "odd (somewhere)") << " number of edges";
  } else if (!a.link_c4.empty()) {
    std::vector<Vertex> vs;
    if (a.link_c4 == "all") {
      for (Vertex v = 0; v < h.n(); ++v) vs.push_back(v);
    } else {
      vs = parse_int_list(a.link_c4);
    }
    pass = true;
    json bad = json::array();
    for (Vertex v : vs) {
      if (auto c4 = find_link_induced_c4(h, v)) {
        pass = false;
        bad.push_back({{"vertex", v}, {"cycle", *c4}});
      }
    }
    report = {{"check", "link-c4"}, {"pass", pass}, {"violations", bad}};
    text << (pass ? "PASS" : "FAIL") << ": " << (pass ? "no" : std::to_string(bad.size())) << " link graph(s) with an induced C4";
  } else if (a.ff) {
    auto r = ff_recognize(h);
    pass = r.kind != FFKind::neither;
    report = cli::to_json(r);
    report["check"] = "ff";
    report["pass"] = pass;
    text << (pass ? "PASS" : "FAIL") << ": " << to_string(r.kind);
    if (r.parts) {
      text << " parts";
      for (int p : *r.parts) text << ' ' << p;
    }
    if (r.ngon) text << " (isomorphic to ngon(" << h.n() << "))";
  } else {
    auto b = edge_bound_check(h);
    pass = b.holds;
    report = {{"check", "edge-bound"}, {"pass", pass}, {"edges", b.edges}, {"bound", b.bound}, {"equality", b.equality}};
    text << (pass ? "PASS" : "FAIL") << ": e=" << b.edges << " <= " << b.bound << (b.equality ? " (equality)" : "");
  }
  if (a.json) std::cout << report.dump(2) << '\n';
  else std::cout << text.str() << '\n';
  return pass ? kPass : kFail;
}

// ---- solve / enumerate / containers ----------------------------------------

int cmd_solve(const std::string& file, std::uint64_t max_nodes) {
  const auto h = load_h3(file);
  auto r = homogeneous(h, {max_nodes});
  auto j = cli::to_json(r);
  j["n"] = h.n();
  j["edges"] = h.edge_count();
  std::cout << j.dump(2) << '\n';
  return r.complete ? kPass : kFail;
}

int cmd_enumerate(int n, const std::string& family, Budget budget) {
  auto rec = exact_h(n, parse_family(family), budget);
  std::cout << cli::to_json(rec).dump(2) << '\n';
  return rec.complete ? kPass : kFail;
}

int cmd_containers(int q, std::optional<int> steps, std::optional<double> c0, int sets, std::uint64_t seed) {
  if (steps && c0) throw InputError("give either --steps or --c0, not both");
  if (sets < 1) throw InputError("--sets must be positive");
  std::optional<int> fixed = steps;
  if (c0) fixed = container_steps_for(q * q + q + 1, *c0);
  auto r = container_audit(q, sets, seed, fixed);
  auto j = cli::to_json(r);
  j["seed"] = seed;
  j["steps"] = fixed ? json(*fixed) : json("sweep");
  std::cout << j.dump(2) << '\n';
  return r.violations.total() == 0 && r.collision_mismatches == 0 ? kPass : kFail;
}

// ---- experiment -------------------------------------------------------------

int cmd_experiment(cli::ExperimentConfig cfg, const std::string& out, bool as_json) {
  const auto& table = cli::experiments();
  auto it = table.find(cfg.name);
  if (it == table.end()) throw InputError("unknown experiment '" + cfg.name + "'");
  if (it->second.first && !cfg.seed) throw InputError("experiment " + cfg.name + " needs an explicit --seed");
  const auto start = std::chrono::steady_clock::now();
  auto rep = it->second.second(cfg);
  auto j = cli::to_json(rep, cfg);
  j["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  j["version"] = kVersion;
  j["threads"] = cfg.threads;
  const auto csv = cli::to_csv(rep);
  if (!out.empty()) {
    emit(csv, out + ".csv");
    emit(j.dump(2) + "\n", out + ".json");
    std::cout << "wrote " << out << ".csv and " << out << ".json\n";
  } else if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << csv;
  }
  for (const char* key : {"mismatches", "contract_failures", "discrepancies", "failures", "property_failures"})
    if (rep.summary.contains(key) && rep.summary[key].get<int>() != 0) return kFail;
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraphs with forbidden order-size pairs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "write a construction as .h3 / .ss");
  g->add_option("name", gen.name, "star, hprime, blowup, ngon, two-graph, gnp, plane, plane-stars, steiner, three-clique, "
                                  "clique-plus-isolated, subsample, iterated-partition")
      ->required();
  g->add_option("--n", gen.n, "vertex count");
  g->add_option("--q", gen.q, "prime plane order");
  g->add_option("--r", gen.r, "uniformity (iterated-partition)");
  g->add_option("--m", gen.m, "vertex count (iterated-partition)");
  g->add_option("--p", gen.p, "edge probability (gnp, two-graph)");
  g->add_option("--cp", gen.cp, "probability scale (subsample)");
  auto* seed_opt = g->add_option("--seed", gen.seed, "PRNG seed");
  g->add_option("--parts", gen.parts, "comma-separated part sizes (blowup)");
  g->add_option("--graph", gen.graph, "graph edge list (two-graph)");
  g->add_option("--attempts", gen.attempts, "packing attempts (steiner)");
  g->add_option("--target", gen.target, "stop at this many triples (steiner)");
  g->add_option("--ss", gen.ss_out, "also write the set system here (subsample)");
  g->add_option("-o,--out", gen.out, "output file (default stdout)");

  CheckArgs chk;
  auto* c = app.add_subcommand("check", "test a property of a .h3 file");
  c->add_option("file", chk.file, ".h3 file ('-' for stdin)")->required();
  c->add_option("--free", chk.free, "family, e.g. 4:2,4:4");
  c->add_option("--charac", chk.charac, "tight-star");
  c->add_flag("--parity", chk.parity, "every 4-set spans an even number of edges");
  c->add_option("--link-c4", chk.link_c4, "vertex list or 'all'");
  c->add_flag("--ff", chk.ff, "blow-up / n-gon recognition");
  c->add_flag("--edge-bound", chk.edge_bound, "e(H) <= C(n-1,2) for {(4,2),(4,4)}-free H");
  c->add_flag("--json", chk.json, "machine-readable output");

  std::string solve_file;
  std::uint64_t solve_nodes = std::numeric_limits<std::uint64_t>::max();
  auto* s = app.add_subcommand("solve", "exact omega, alpha and h as JSON");
  s->add_option("file", solve_file, ".h3 file ('-' for stdin)")->required();
  s->add_option("--max-nodes", solve_nodes, "node limit per search");
  s->add_flag("--json", "accepted for symmetry; output is always JSON");

  int en_n = 0;
  std::string en_q;
  Budget en_budget = budget_from_env({});
  auto* e = app.add_subcommand("enumerate", "exact h_3(n, Q) with a witness, as JSON");
  e->add_option("--n", en_n, "vertex count (<= 8)")->required();
  e->add_option("--q", en_q, "family, e.g. 4:0,4:2,4:3")->required();
  e->add_option("--max-classes", en_budget.max_classes, "isomorphism class budget");
  e->add_option("--max-seconds", en_budget.max_seconds, "time budget");
  e->add_flag("--json", "accepted for symmetry; output is always JSON");

  int co_q = 5, co_sets = 200;
  std::optional<int> co_steps;
  std::optional<double> co_c0;
  std::uint64_t co_seed = 0;
  auto* k = app.add_subcommand("containers", "run the fingerprint/container algorithm and audit it");
  k->add_option("--q", co_q, "prime plane order");
  k->add_option("--steps", co_steps, "fixed step count (default: sweep 1..|I|-1)");
  k->add_option("--c0", co_c0, "steps = round(c0 n^(1/4) ln n)");
  k->add_option("--sets", co_sets, "number of random 2-independent sets");
  k->add_option("--seed", co_seed, "PRNG seed")->required();
  k->add_flag("--json", "accepted for symmetry; output is always JSON");

  cli::ExperimentConfig ex;
  ex.budget = budget_from_env({});
  std::string ex_out, ex_n, ex_q;
  std::uint64_t ex_seed = 0;
  bool ex_json = false;
  auto* x = app.add_subcommand("experiment", "run a named experiment, emitting CSV and JSON");
  x->add_option("name", ex.name, "theorem-exact, growth-curves, container-audit, edge-bound, charac-fuzz, two-graph-homog")
      ->required();
  auto* ex_seed_opt = x->add_option("--seed", ex_seed, "PRNG seed (required for randomized experiments)");
  x->add_option("--nmin", ex.nmin, "smallest n");
  x->add_option("--nmax", ex.nmax, "largest n");
  x->add_option("--n", ex_n, "comma-separated n values");
  x->add_option("--q", ex_q, "comma-separated plane orders");
  x->add_option("--family", ex.family, "family for growth-curves");
  x->add_option("--seeds", ex.seeds, "random instances per parameter");
  x->add_option("--instances", ex.instances, "instances per n (fuzzing)");
  x->add_option("--sets", ex.sets, "2-independent sets per plane");
  x->add_option("--cp", ex.cp, "probability scale for the subsample construction");
  x->add_option("--max-nodes", ex.max_nodes, "node limit per homogeneous search");
  x->add_option("--max-seconds", ex.budget.max_seconds, "time budget per enumeration");
  x->add_option("--max-classes", ex.budget.max_classes, "class budget per enumeration");
  x->add_option("--threads", ex.threads, "worker threads");
  x->add_option("--out", ex_out, "output prefix for .csv and .json");
  x->add_flag("--json", ex_json, "print JSON instead of CSV when --out is absent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& ok) {
    return app.exit(ok);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kUsage;
  }

  try {
    if (*g) {
      gen.have_seed = seed_opt->count() > 0;
      return cmd_generate(gen);
    }
    if (*c) return cmd_check(chk);
    if (*s) return cmd_solve(solve_file, solve_nodes);
    if (*e) return cmd_enumerate(en_n, en_q, en_budget);
    if (*k) return cmd_containers(co_q, co_steps, co_c0, co_sets, co_seed);
    if (*x) {
      if (ex_seed_opt->count() > 0) ex.seed = ex_seed;
      if (!ex_n.empty()) ex.n_values = parse_int_list(ex_n);
      if (!ex_q.empty()) ex.q_values = parse_int_list(ex_q);
      return cmd_experiment(ex, ex_out, ex_json);
    }
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const CapabilityError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return 3;
  }
  return kUsage;
}
