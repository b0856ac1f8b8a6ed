#pragma once

#include <json.hpp>

#include "hyperfree/containers.hpp"
#include "hyperfree/exact.hpp"
#include "hyperfree/homogeneous.hpp"
#include "hyperfree/io.hpp"
#include "hyperfree/structure.hpp"

namespace hyperfree::cli {

using nlohmann::json;

inline json family_json(const ForbiddenFamily& q) {
  json out = json::array();
  for (const auto& p : q.pairs()) out.push_back({p.m, p.f});
  return out;
}

inline json to_json(const HomogeneousResult& r) {
  return {{"omega", r.omega},
          {"alpha", r.alpha},
          {"h", r.h},
          {"clique_witness", r.clique_witness},
          {"coclique_witness", r.coclique_witness},
          {"complete", r.complete}};
}

inline json to_json(const ExtremalRecord& r) {
  json out{{"n", r.n}, {"q", family_json(r.q)}, {"explored", r.explored}, {"complete", r.complete}};
  out["value"] = r.value ? json(*r.value) : json(nullptr);
  out["witness"] = r.witness ? json(to_h3_string(*r.witness)) : json(nullptr);
  return out;
}

inline json to_json(const TightComponent& c) {
  json edges = json::array();
  for (const auto& t : c.edges) edges.push_back({t.a, t.b, t.c});
  json out{{"edges", edges}, {"support", c.support}, {"is_star", c.is_star}};
  out["center"] = c.center ? json(*c.center) : json(nullptr);
  return out;
}

inline json to_json(const CharacterizationReport& r) {
  json comps = json::array();
  for (const auto& c : r.components) comps.push_back(to_json(c));
  return {{"q_free_bruteforce", r.q_free_bruteforce},
          {"all_components_stars", r.all_components_stars},
          {"pairwise_support_overlap_ok", r.pairwise_support_overlap_ok},
          {"consistent", r.consistent()},
          {"witness", r.witness},
          {"components", comps}};
}

inline json to_json(const FFClassification& r) {
  json out{{"kind", to_string(r.kind)}, {"free", r.free}, {"ngon", r.ngon}, {"witness", r.witness}};
  out["parts"] = r.parts ? json(*r.parts) : json(nullptr);
  return out;
}

inline json to_json(const ContainerAuditReport& r) {
  double mean_set = 0, mean_container = 0;
  for (int s : r.set_sizes) mean_set += s;
  for (const auto& c : r.container_sizes) mean_container += static_cast<double>(c.second);
  if (!r.set_sizes.empty()) mean_set /= static_cast<double>(r.set_sizes.size());
  if (!r.container_sizes.empty()) mean_container /= static_cast<double>(r.container_sizes.size());
  return {{"q", r.q},
          {"points", r.points},
          {"sets", r.sets},
          {"runs", r.runs},
          {"skipped", r.skipped},
          {"violations",
           {{"neighbour_exclusion", r.violations.neighbour_exclusion},
            {"sandwich", r.violations.sandwich},
            {"monotone", r.violations.monotone},
            {"total", r.violations.total()}}},
          {"fingerprint_groups", r.fingerprint_groups},
          {"collisions", r.collisions},
          {"collision_mismatches", r.collision_mismatches},
          {"witnesses_unique", r.witnesses_unique},
          {"decrease_audit", {{"in_scope", r.decrease.in_scope}, {"held", r.decrease.held}}},
          {"mean_set_size", mean_set},
          {"mean_container_size", mean_container}};
}

}  // namespace hyperfree::cli
