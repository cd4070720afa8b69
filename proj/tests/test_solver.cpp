#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace bihalve;
using namespace bihalve::testing;

namespace {

void expect_optimal(const Genome& g, const SolveResult& r) {
  const Replay replay = apply_scenario(r.scenario);
  EXPECT_TRUE(is_tandem_duplicated(replay.final_genome)) << S(g);
  EXPECT_EQ(static_cast<std::int64_t>(r.scenario.steps.size()), naive_formula(g)) << S(g);
  EXPECT_EQ(r.distance, r.scenario.steps.size());
  EXPECT_TRUE(verify_scenario(r.scenario).optimal);
}

TEST(Halve, FigureTwo) {
  const Genome g = L("2 1 2' 3 1' 3'");
  const SolveResult r = halve(g);
  ASSERT_EQ(r.scenario.steps.size(), 1u);
  expect_optimal(g, r);
}

TEST(Halve, FigureOne) {
  const Genome g = L("1 2' 1' 4' 3 4 3' 2");
  const SolveResult r = halve(g);
  ASSERT_EQ(r.scenario.steps.size(), 1u);
  EXPECT_EQ(r.scenario.steps[0], (BIStep{0, 1, 2, 5}));
  EXPECT_EQ(apply_bi(g, r.scenario.steps[0]), L("1' 4' 3 2' 1 4 3' 2"));
  expect_optimal(g, r);
}

TEST(Halve, TandemInputIsEmptyScenario) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const SolveResult r = halve(tandem_genome(n));
    EXPECT_TRUE(r.scenario.steps.empty());
    EXPECT_EQ(r.distance, 0u);
  }
}

TEST(Halve, RejectsNonLinear) {
  EXPECT_THROW(halve(parse_genome("linear: 1 1'\ncircular: 2 2'")), InvalidGenome);
}

TEST(Halve, TraceRecordsReducedRounds) {
  const Genome g = random_duplicated(40, 99);
  SolveOptions opt;
  opt.trace = true;
  const SolveResult r = halve(g, opt);
  ASSERT_EQ(r.trace.size(), r.scenario.steps.size());
  std::vector<MarkerOccurrence> work = g.chromosomes.front().markers;
  for (std::size_t k = 0; k < r.trace.size(); ++k) {
    const auto& it = r.trace[k];
    // The recorded reduced genome is the reduction of the working genome.
    EXPECT_EQ(it.reduced, reduce(Genome::linear(work)).genome);
    const std::size_t n = distinct_markers(it.reduced);
    EXPECT_EQ(it.move.has_value(), n > 3);
    const Genome moved = apply_bi(it.reduced, it.reduced_step);
    if (n > 3)
      EXPECT_EQ(naive_cycles(moved), naive_cycles(it.reduced) + 2) << "round " << k;
    else
      EXPECT_TRUE(is_tandem_duplicated(moved));
    EXPECT_EQ(it.step, r.scenario.steps[k]);
    work = apply_bi(work, it.step);
  }
  EXPECT_TRUE(is_tandem_duplicated(work));
}

TEST(Halve, RandomGenomesAreOptimal) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Genome g = random_duplicated(1 + seed % 60, seed);
    expect_optimal(g, halve(g));
  }
}

TEST(Halve, ScrambledTandemWithinK) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t k = seed % 8;
    const Genome g = random_scrambled_tandem(30, k, seed);
    const SolveResult r = halve(g);
    EXPECT_LE(r.distance, k);
    expect_optimal(g, r);
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) EXPECT_LE(halve(random_scrambled_tandem(30, 1, seed)).distance, 1u);
  EXPECT_EQ(halve(random_scrambled_tandem(30, 0, 1)).distance, 0u);
}

TEST(FinalBI, WorkedExample) {
  const auto seq = M("1 2' 1' 5' 5 2");
  const BIStep s = final_bi(seq);
  EXPECT_EQ(s, (BIStep{0, 1, 2, 4}));
  EXPECT_EQ(apply_bi(seq, s), M("1' 5' 2' 1 5 2"));
}

TEST(FinalBI, TwoMarkerShapes) {
  for (const char* text : {"1 2 2' 1'", "1 1' 2 2'"}) {
    const auto seq = M(text);
    EXPECT_TRUE(is_tandem_duplicated(apply_bi(seq, final_bi(seq)))) << text;
  }
}

TEST(FinalBI, EveryReducedSmallGenome) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (const Genome& g : enumerate_genomes(n)) {
      const Genome red = reduce(g).genome;
      const std::size_t len = red.occurrence_count();
      if (len != 4 && len != 6) continue;
      EXPECT_TRUE(is_tandem_duplicated(apply_bi(red, final_bi(red)))) << S(g);
    }
}

TEST(FinalBI, Preconditions) {
  EXPECT_THROW(final_bi(M("1 1'")), InvalidGenome);
  EXPECT_THROW(final_bi(M("1 2 1' 2'")), InvalidGenome);
  EXPECT_THROW(final_bi(M("1 2 3 4 1' 2' 3' 4'")), InvalidGenome);
}

TEST(DistanceOnly, Examples) {
  EXPECT_EQ(solve_distance_only(L("1 2' 1' 4' 3 4 3' 2")), 1u);
  EXPECT_EQ(solve_distance_only(L("2 1 2' 3 1' 3'")), 1u);
  EXPECT_EQ(solve_distance_only(tandem_genome(5)), 0u);
}

}  // namespace
