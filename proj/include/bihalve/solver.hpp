#pragma once

// BI halving: builds a scenario of floor((n - C) / 2) block interchanges that
// turns a duplicated linear genome into a tandem-duplicated one.
//
// Each round reduces the working genome, takes the smallest interval that is
// not of type 2, excises its content with one sorting DCJ and reintegrates it
// with a second one, preferably the DCJ of the first compatible interval, and
// performs the equivalent BI. When two or three markers remain
// after reduction a single BI, found by exhaustive search, finishes the job.
// Steps are computed on the reduced genome and lifted to the gaps of the
// unreduced working genome, so the scenario replays on the caller's input.

#include "bihalve/intervals.hpp"
#include "bihalve/reduction.hpp"
#include "bihalve/scenario.hpp"

namespace bihalve {

struct SolveIteration {
  Genome reduced;                    // before the step
  std::optional<SortingMove> move;   // absent for the closing n in {2, 3} step
  BIStep reduced_step;
  BIStep step;                       // unreduced coordinates
};

struct SolveResult {
  Scenario scenario;
  std::size_t distance = 0;
  std::vector<SolveIteration> trace;
};

struct SolveOptions {
  bool trace = false;
  // Per-round cycle-gain and coordinate-lifting checks; O(n) each.
  bool check_invariants = true;
};

// Closing BI for a reduced genome with 2 or 3 distinct markers, the first in
// lexicographic gap order whose result is tandem-duplicated.
inline BIStep final_bi(std::span<const MarkerOccurrence> seq) {
  const std::size_t len = seq.size();
  if (len != 4 && len != 6) throw InvalidGenome("closing BI needs 2 or 3 distinct markers");
  const auto partner = partner_positions(seq);
  for (std::size_t gap = 1; gap < len; ++gap)
    if (detail::double_at(partner, gap)) throw InvalidGenome("closing BI needs a reduced genome");
  std::vector<MarkerOccurrence> out;
  for (std::size_t g1 = 0; g1 < len; ++g1)
    for (std::size_t g2 = g1 + 1; g2 <= len; ++g2)
      for (std::size_t g3 = g2; g3 < len; ++g3)
        for (std::size_t g4 = g3 + 1; g4 <= len; ++g4) {
          const BIStep s{g1, g2, g3, g4};
          apply_bi_into(seq, s, out);
          if (is_tandem_duplicated(out)) return s;
        }
  throw std::logic_error("no single BI makes this 2- or 3-marker genome tandem-duplicated");
}

inline BIStep final_bi(const Genome& g) { return final_bi(linear_markers(g)); }

inline std::size_t solve_distance_only(const Genome& g) {
  validate(g);
  const auto seq = linear_markers(g);
  return (seq.size() / 2 - cycle_count(seq)) / 2;
}

inline SolveResult halve(const Genome& g, const SolveOptions& opt = {}) {
  validate(g);
  SolveResult res;
  res.scenario.initial = g;
  std::vector<MarkerOccurrence> work(linear_markers(g).begin(), linear_markers(g).end()), next;

  while (true) {
    Reduction red = reduce(work);
    const auto& reduced = red.genome.chromosomes.front().markers;
    const std::size_t n = reduced.size() / 2;
    if (n <= 1) break;

    SolveIteration it;
    if (n > 3) {
      const auto partner = partner_positions(reduced);
      SortingMove move = find_sorting_move(reduced, partner);
      it.reduced_step = move.step;
      if (opt.check_invariants) {
        const auto moved = apply_bi(reduced, it.reduced_step);
        if (cycle_count(moved) != cycle_count(reduced, partner) + 2)
          throw std::logic_error("round did not gain two natural-graph cycles");
      }
      it.move = std::move(move);
    } else {
      it.reduced_step = final_bi(reduced);
    }
    it.step = {expand_gap(red.map, it.reduced_step.g1), expand_gap(red.map, it.reduced_step.g2),
               expand_gap(red.map, it.reduced_step.g3), expand_gap(red.map, it.reduced_step.g4)};
    apply_bi_into(work, it.step, next);
    if (opt.check_invariants) {
      const Genome lifted = expand(apply_bi(red.genome, it.reduced_step), red.map);
      if (lifted.chromosomes.front().markers != next)
        throw std::logic_error("lifted step disagrees with the reduced-space step");
    }
    work.swap(next);
    res.scenario.steps.push_back(it.step);
    if (opt.trace) {
      it.reduced = std::move(red.genome);
      res.trace.push_back(std::move(it));
    }
  }

  res.distance = res.scenario.steps.size();
  if (opt.check_invariants) {
    if (!is_tandem_duplicated(work)) throw std::logic_error("solver stopped on a non-tandem genome");
    if (res.distance != solve_distance_only(g))
      throw std::logic_error("scenario length differs from floor((n - C) / 2)");
  }
  return res;
}

}  // namespace bihalve
