#pragma once

// JSON mirrors of the plain-text outputs (nlohmann/json).

#include <nlohmann/json.hpp>

#include "bihalve/intervals.hpp"
#include "bihalve/io.hpp"
#include "bihalve/oracle.hpp"
#include "bihalve/scenario.hpp"
#include "bihalve/solver.hpp"

namespace bihalve {

using nlohmann::json;

inline json to_json(const HalvingSummary& s) {
  return {{"n", s.n},         {"C", s.cycles},          {"EC", s.even_cycles},
          {"OP", s.odd_paths}, {"d_dcj", s.d_dcj_p}, {"d_bi", s.d_bi_t}};
}

inline json to_json(const BIStep& s) { return {{"g1", s.g1}, {"g2", s.g2}, {"g3", s.g3}, {"g4", s.g4}}; }

inline json to_json(const AdjacencyInterval& i) {
  return {{"adjacency", to_string(i.owner)}, {"gap", i.owner.gap}, {"lo", i.lo}, {"hi", i.hi},
          {"closed", i.closed}};
}

inline json scenario_json(const Scenario& sc) {
  json steps = json::array();
  const Replay replay = apply_scenario(sc, true);
  for (std::size_t k = 0; k < sc.steps.size(); ++k) {
    json step = to_json(sc.steps[k]);
    step["genome"] = to_string(replay.snapshots[k]);
    steps.push_back(std::move(step));
  }
  return {{"initial", to_string(sc.initial)}, {"steps", std::move(steps)}, {"length", sc.steps.size()}};
}

inline json to_json(const SolveResult& r) {
  json out = scenario_json(r.scenario);
  out["distance"] = r.distance;
  if (!r.trace.empty()) {
    json trace = json::array();
    for (const auto& it : r.trace) {
      json entry{{"reduced", to_string(it.reduced)},
                 {"reduced_step", to_json(it.reduced_step)},
                 {"step", to_json(it.step)}};
      if (it.move) {
        entry["excision"] = to_json(it.move->first);
        if (it.move->partner) entry["partner"] = to_json(*it.move->partner);
        entry["integration"] = to_string(it.move->integration);
      }
      trace.push_back(std::move(entry));
    }
    out["trace"] = std::move(trace);
  }
  return out;
}

inline json to_json(const VerificationReport& r) {
  json out{{"valid", r.valid},
           {"tandem", r.tandem},
           {"optimal", r.optimal},
           {"length", r.length},
           {"lower_bound", r.lower_bound},
           {"report", to_string(r)}};
  if (r.failed_step != InvalidStep::no_index) out["failed_step"] = r.failed_step;
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

inline json intervals_json(const Genome& g) {
  const auto seq = linear_markers(g);
  const auto partner = partner_positions(seq);
  json out = json::array();
  for (const auto& i : interval_set(seq, partner)) {
    json entry = to_json(i);
    entry["kind"] = i.empty() ? "empty" : to_string(classify_interval(seq, partner, i));
    out.push_back(std::move(entry));
  }
  return out;
}

inline json to_json(const NaturalGraph& ng) {
  json vertices = json::array(), edges = json::array(), comps = json::array();
  for (const auto& v : ng.vertices) vertices.push_back(to_string(v));
  for (const auto& e : ng.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"id", e.id}, {"side", e.side == EdgeSide::left ? "left" : "right"}});
  for (const auto& c : ng.components)
    comps.push_back({{"kind", c.kind == ComponentKind::path ? "path" : "cycle"},
                     {"edges", c.edges},
                     {"vertices", c.vertices}});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}, {"components", std::move(comps)},
          {"summary", to_json(halving_summary(ng))}};
}

inline json to_json(const OracleResult& r) {
  json out{{"status", to_string(r.status)}, {"expanded", r.expanded}};
  if (r.distance) out["distance"] = *r.distance;
  return out;
}

}  // namespace bihalve
