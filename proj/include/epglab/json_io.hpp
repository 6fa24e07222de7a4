#pragma once

#include <json.hpp>

#include "epglab/graph.hpp"
#include "epglab/labeling.hpp"
#include "epglab/theorem_suite.hpp"

namespace epglab {

using Json = nlohmann::ordered_json;

/// {"n":..., "edges":[[i,j],...], "names":[...]}, edges sorted.
inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  Json names = Json::array();
  for (int v = 0; v < g.size(); ++v) names.push_back(g.name(v));
  return Json{{"n", g.size()}, {"edges", std::move(edges)}, {"names", std::move(names)}};
}

inline Json certificate_to_json(const LambdaCertificate& c) {
  Json j;
  j["lambda"] = c.is_exact() ? Json(c.value) : Json(nullptr);
  j["method"] = to_string(c.method);
  j["labeling"] = c.labeling ? Json(c.labeling->labels) : Json(nullptr);
  if (c.cover) {
    Json paths = Json::array();
    for (const auto& p : c.cover->paths) paths.push_back(p);
    j["cover"] = std::move(paths);
  } else {
    j["cover"] = nullptr;
  }
  j["notes"] = c.notes;
  j["bounds"] = {c.lower, c.upper};
  return j;
}

inline Json report_to_json(const TheoremReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"check", c.check}, {"group", c.group}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
  return Json{{"seed", r.seed},
              {"passed", r.all_passed()},
              {"failures", r.failures()},
              {"checks", std::move(checks)},
              {"notes", r.notes}};
}

}  // namespace epglab
