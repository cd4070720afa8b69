#pragma once

// BI scenarios: replay and optimality verification.

#include "bihalve/natural_graph.hpp"
#include "bihalve/rearrangement.hpp"

namespace bihalve {

struct Scenario {
  Genome initial;
  std::vector<BIStep> steps;
};

struct Replay {
  Genome final_genome;
  std::vector<Genome> snapshots;  // genome after each step, when requested
};

// Applies the steps in order. Throws InvalidStep carrying the 0-based index of
// the first step that does not apply.
inline Replay apply_scenario(const Scenario& sc, bool keep_snapshots = false) {
  Replay r;
  if (!sc.initial.is_single_linear()) {
    if (!sc.steps.empty()) throw InvalidStep("block interchange needs a single linear chromosome", 0);
    r.final_genome = sc.initial;
    return r;
  }
  std::vector<MarkerOccurrence> current = sc.initial.chromosomes.front().markers, next;
  for (std::size_t k = 0; k < sc.steps.size(); ++k) {
    try {
      apply_bi_into(current, sc.steps[k], next);
    } catch (const InvalidStep& e) {
      throw InvalidStep("step " + std::to_string(k + 1) + ": " + e.what(), k);
    }
    current.swap(next);
    if (keep_snapshots) r.snapshots.push_back(Genome::linear(current));
  }
  r.final_genome = Genome::linear(std::move(current));
  return r;
}

struct VerificationReport {
  bool valid = false;
  std::size_t failed_step = InvalidStep::no_index;
  std::string reason;
  bool tandem = false;
  std::size_t length = 0;
  std::int64_t lower_bound = 0;  // floor((n - C) / 2) of the initial genome
  bool optimal = false;          // tandem and length == lower_bound
  bool length_matches_claim = true;
};

// Lower-bound certificate: a tandem-reaching scenario whose length equals
// floor((n - C) / 2) of the initial genome is optimal.
inline VerificationReport verify_scenario(const Scenario& sc, std::optional<std::size_t> claimed_length = {}) {
  VerificationReport rep;
  rep.length = sc.steps.size();
  if (claimed_length) rep.length_matches_claim = *claimed_length == rep.length;
  try {
    validate(sc.initial);
    rep.lower_bound = halving_summary(sc.initial).d_bi_t;
    const Replay replay = apply_scenario(sc);
    rep.valid = true;
    rep.tandem = is_tandem_duplicated(replay.final_genome);
  } catch (const InvalidStep& e) {
    rep.failed_step = e.index();
    rep.reason = e.what();
    return rep;
  } catch (const InvalidGenome& e) {
    rep.reason = e.what();
    return rep;
  }
  rep.optimal = rep.tandem && static_cast<std::int64_t>(rep.length) == rep.lower_bound;
  return rep;
}

// "valid optimal tandem", "valid suboptimal tandem", "valid steps, not tandem"
// or "invalid step k: reason".
inline std::string to_string(const VerificationReport& r) {
  if (!r.valid) {
    if (r.failed_step != InvalidStep::no_index) return "invalid " + r.reason;
    return "invalid genome: " + r.reason;
  }
  if (!r.tandem) return "valid steps, not tandem";
  return r.optimal ? "valid optimal tandem" : "valid suboptimal tandem";
}

}  // namespace bihalve
