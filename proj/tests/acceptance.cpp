// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "bihalve/bihalve.hpp"

using namespace bihalve;

namespace {

// Pinned limits.
constexpr double kAc1SmallSeconds = 10.0;
constexpr double kAc1FourSeconds = 600.0;
constexpr std::size_t kAc2Genomes = 1000;
constexpr double kAc2Seconds = 60.0;
constexpr std::size_t kAc4Genomes = 1000;
constexpr std::size_t kAc4MaxN = 30;
constexpr std::size_t kAc5Pairs = 1000;
constexpr std::size_t kAc6Genomes = 1000;
constexpr std::size_t kAc7SampleN4 = 200;
constexpr double kAc8Seconds2000 = 5.0;
constexpr double kAc8Seconds10000 = 60.0;
constexpr double kAc8MaxRatio = 5.0;
constexpr int kAc8Repeats = 3;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::int64_t formula(const Genome& g) { return halving_summary(g).d_bi_t; }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure message; later ones only bump the count.
struct Failures {
  std::size_t count = 0;
  std::string first;

  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  bool none() const { return count == 0; }
  std::string describe() const { return std::to_string(count) + " failure(s), first: " + first; }
};

Outcome ac1_formula_vs_bfs() {
  Failures f;
  std::size_t checked = 0;
  auto check = [&](const Genome& g) {
    ++checked;
    const OracleResult r = bfs_bi_distance(g);
    if (!r.distance)
      f.add(to_string(g) + ": oracle " + to_string(r.status));
    else if (static_cast<std::int64_t>(*r.distance) != formula(g))
      f.add(to_string(g) + ": bfs " + std::to_string(*r.distance) + " formula " + std::to_string(formula(g)));
  };
  auto t0 = Clock::now();
  for (std::size_t n = 1; n <= 3; ++n) for_each_genome(n, check);
  const double small = seconds_since(t0);
  const std::size_t small_count = checked;
  t0 = Clock::now();
  for_each_genome(4, check);
  const double four = seconds_since(t0);
  if (small_count != 1 + 6 + 90) f.add("n <= 3 enumeration produced " + std::to_string(small_count) + " genomes");
  if (checked - small_count != 2520) f.add("n = 4 enumeration produced " + std::to_string(checked - small_count));
  if (small >= kAc1SmallSeconds) f.add("n <= 3 took " + std::to_string(small) + " s");
  if (four >= kAc1FourSeconds) f.add("n = 4 took " + std::to_string(four) + " s");
  std::ostringstream os;
  os << checked << " genomes, n<=3 " << small << " s, n=4 " << four << " s";
  return {f.none(), f.none() ? os.str() : f.describe()};
}

Outcome ac2_solver_certificate() {
  Failures f;
  std::mt19937_64 rng(20240202);
  std::uniform_int_distribution<std::size_t> size(5, 50);
  const auto t0 = Clock::now();
  for (std::size_t k = 0; k < kAc2Genomes; ++k) {
    const Genome g = random_duplicated(size(rng), rng());
    try {
      const SolveResult r = halve(g);
      const Replay replay = apply_scenario(r.scenario);
      if (!is_tandem_duplicated(replay.final_genome)) f.add(to_string(g) + ": final genome not tandem");
      if (static_cast<std::int64_t>(r.scenario.steps.size()) != formula(g))
        f.add(to_string(g) + ": length " + std::to_string(r.scenario.steps.size()));
    } catch (const std::exception& e) {
      f.add(to_string(g) + ": " + e.what());
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= kAc2Seconds) f.add("took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << kAc2Genomes << " genomes in " << secs << " s";
  return {f.none(), f.none() ? os.str() : f.describe()};
}

AdjacencyInterval owned_by(const Genome& g, const std::string& owner) {
  for (const auto& i : interval_set(g))
    if (to_string(i.owner) == owner) return i;
  throw std::runtime_error("no interval for " + owner);
}

Outcome ac3_fixtures() {
  Failures f;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) f.add(what);
  };
  try {
    const NaturalGraph fig1 = build_natural_graph(parse_genome("linear: 1 2' 1' 4' 3 4 3' 2"));
    expect(component_summary(fig1) == "path(2) cycle(2) cycle(4)", "figure 1 components: " + component_summary(fig1));

    const Genome fig2 = parse_genome("linear: 2 1 2' 3 1' 3'");
    std::string ranges;
    for (const auto& i : interval_set(fig2))
      ranges += to_string(i.owner) + "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "]";
    expect(ranges == "(2 1)[3,4](1 2')[0,5](2' 3)[1,5](3 1')[1,6](1' 3')[2,3]", "figure 2 intervals: " + ranges);
    const auto a = owned_by(fig2, "(1 2')"), b = owned_by(fig2, "(3 1')");
    expect(compatible(a, b), "I(1 2') and I(3 1') not compatible");
    const Genome swapped = apply_bi(fig2, induced_bi(a, b));
    const auto& m = swapped.chromosomes.front().markers;
    expect(m.front() == MarkerOccurrence{3, 1} && m.back() == MarkerOccurrence{2, 0},
           "induced BI does not exchange 2 and 3': " + to_string(swapped));
    expect(is_tandem_duplicated(swapped), "induced BI result not tandem");

    const Genome sec4 = parse_genome("linear: 2 1 1' 3 2' 3'");
    expect(classify_interval(sec4, owned_by(sec4, "(1' 3)")) == IntervalKind::type1, "I(1' 3) not type 1");
    expect(classify_interval(sec4, owned_by(sec4, "(2' 3')")) == IntervalKind::type2, "I(2' 3') not type 2");

    const Reduction red = reduce(parse_genome("linear: 1 1' 3 2 4 5 6 6' 7 3' 8 2' 4' 5' 9 8' 7' 9'"));
    expect(to_string(red.genome) == "(o 1 1' 3 10 6 6' 7 3' 8 10' 9 8' 7' 9' o)", "reduction: " + to_string(red.genome));
    const auto it = red.map.composites.find(10);
    expect(red.map.composites.size() == 1 && it != red.map.composites.end() &&
               it->second == std::vector<MarkerOccurrence>{{2, 0}, {4, 0}, {5, 0}},
           "composite 10 is not 2 4 5");
  } catch (const std::exception& e) {
    f.add(e.what());
  }
  return {f.none(), f.none() ? "figure 1, figure 2, type examples, reduction example" : f.describe()};
}

Outcome ac4_lemma_bounds() {
  Failures f;
  std::mt19937_64 rng(4444);
  std::uniform_int_distribution<std::size_t> size(1, kAc4MaxN);
  std::size_t intervals = 0, max1 = 0, max2_slack = 0;
  for (std::size_t k = 0; k < kAc4Genomes; ++k) {
    const std::size_t n = size(rng);
    const Genome g = random_duplicated(n, rng());
    std::size_t type1 = 0, type2 = 0;
    for (const auto& i : interval_set(g)) {
      if (i.empty()) continue;
      ++intervals;
      const IntervalKind content = classify_interval(g, i), simulated = classify_by_excision(g, i);
      if (content != simulated) f.add(to_string(g) + " " + to_string(i.owner) + ": content and excision disagree");
      type1 += content == IntervalKind::type1;
      type2 += content == IntervalKind::type2;
    }
    max1 = std::max(max1, type1);
    if (type1 > 2) f.add(to_string(g) + ": " + std::to_string(type1) + " type-1 intervals");
    if (type2 > n) f.add(to_string(g) + ": " + std::to_string(type2) + " type-2 intervals");
    max2_slack = std::max(max2_slack, type2 * 100 / n);
  }
  std::ostringstream os;
  os << intervals << " intervals, 0 mismatches, max type-1 " << max1 << ", max type-2/n " << max2_slack << "%";
  return {f.none(), f.none() ? os.str() : f.describe()};
}

Outcome ac5_bi_is_two_dcj() {
  Failures f;
  std::mt19937_64 rng(5555);
  std::uniform_int_distribution<std::size_t> size(1, 40);
  for (std::size_t k = 0; k < kAc5Pairs; ++k) {
    const Genome g = random_duplicated(size(rng), rng());
    const BIStep s = random_bi_step(g.occurrence_count(), rng);
    const auto [excision, integration] = bi_to_dcj_pair(g, s);
    const Genome composed = apply_dcj(apply_dcj(g, excision), integration);
    if (composed != apply_bi(g, s)) f.add(to_string(g) + " " + to_string(s));
  }
  return {f.none(), f.none() ? std::to_string(kAc5Pairs) + " pairs bit-exact" : f.describe()};
}

Outcome ac6_reduction_invariance() {
  Failures f;
  std::mt19937_64 rng(6666);
  std::uniform_int_distribution<std::size_t> size(1, 60), shuffles(0, 6);
  std::size_t collapsed = 0;
  for (std::size_t k = 0; k < kAc6Genomes; ++k) {
    // Alternate uniform genomes with lightly scrambled tandems, which carry long double runs.
    const Genome g = k % 2 ? random_duplicated(size(rng), rng()) : random_scrambled_tandem(size(rng), shuffles(rng), rng());
    const Reduction r = reduce(g);
    if (!r.map.is_identity()) ++collapsed;
    const HalvingSummary before = halving_summary(g), after = halving_summary(r.genome);
    if (before.n - before.cycles != after.n - after.cycles) f.add(to_string(g) + ": n - C changed");
    if (expand(r.genome, r.map) != g) f.add(to_string(g) + ": expand(reduce) differs");
  }
  std::ostringstream os;
  os << kAc6Genomes << " genomes, " << collapsed << " with collapsed runs";
  return {f.none(), f.none() ? os.str() : f.describe()};
}

Outcome ac7_dcj_lower_bound() {
  Failures f;
  std::size_t checked = 0;
  auto check = [&](const Genome& g) {
    ++checked;
    const HalvingSummary s = halving_summary(g);
    if (s.even_cycles != s.cycles || s.odd_paths != 0 || s.d_dcj_p != static_cast<std::int64_t>(s.n - s.cycles))
      f.add(to_string(g) + ": d_dcj_p differs from n - C");
    const OracleResult r = bfs_dcj_tandem_distance(g);
    if (!r.distance) {
      f.add(to_string(g) + ": DCJ oracle " + to_string(r.status));
      return;
    }
    const auto bound = static_cast<std::int64_t>(s.n) - static_cast<std::int64_t>(s.cycles) - 1;
    if (static_cast<std::int64_t>(*r.distance) < bound)
      f.add(to_string(g) + ": DCJ distance " + std::to_string(*r.distance) + " below " + std::to_string(bound));
  };
  const auto t0 = Clock::now();
  for (std::size_t n = 1; n <= 3; ++n) for_each_genome(n, check);
  std::mt19937_64 rng(7777);
  for (std::size_t k = 0; k < kAc7SampleN4; ++k) check(random_duplicated(4, rng()));
  std::ostringstream os;
  os << checked << " genomes in " << seconds_since(t0) << " s";
  return {f.none(), f.none() ? os.str() : f.describe()};
}

double best_solve_seconds(std::size_t n, int repeats) {
  double best = 1e300;
  for (int k = 0; k < repeats; ++k) {
    const Genome g = random_duplicated(n, 8000 + k);
    const auto t0 = Clock::now();
    const SolveResult r = halve(g);
    best = std::min(best, seconds_since(t0));
    if (!is_tandem_duplicated(apply_scenario(r.scenario).final_genome))
      throw std::logic_error("n = " + std::to_string(n) + " did not end tandem");
  }
  return best;
}

Outcome ac8_performance() {
  Failures f;
  try {
    const double t2000 = best_solve_seconds(2000, kAc8Repeats);
    const double t4000 = best_solve_seconds(4000, kAc8Repeats);
    const double t10000 = best_solve_seconds(10000, 1);
    const double ratio = t4000 / t2000;
    if (t2000 >= kAc8Seconds2000) f.add("n=2000 took " + std::to_string(t2000) + " s");
    if (t10000 >= kAc8Seconds10000) f.add("n=10000 took " + std::to_string(t10000) + " s");
    if (ratio > kAc8MaxRatio) f.add("t(4000)/t(2000) = " + std::to_string(ratio));
    std::ostringstream os;
    os << "n=2000 " << t2000 << " s, n=4000 " << t4000 << " s, n=10000 " << t10000 << " s, ratio " << ratio;
    return {f.none(), f.none() ? os.str() : f.describe() + " (" + os.str() + ")"};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 exhaustive formula validation (n <= 4)", ac1_formula_vs_bfs},
      {"AC2 solver optimality certificate", ac2_solver_certificate},
      {"AC3 worked-example fixtures", ac3_fixtures},
      {"AC4 type-1/type-2 bounds and classification agreement", ac4_lemma_bounds},
      {"AC5 BI equals excision then integration", ac5_bi_is_two_dcj},
      {"AC6 reduction invariance and round trip", ac6_reduction_invariance},
      {"AC7 DCJ lower bound and d_dcj = n - C", ac7_dcj_lower_bound},
      {"AC8 performance", ac8_performance},
  };
  // Optional filter: run only criteria whose label starts with one of the arguments.
  int failed = 0;
  for (const auto& [label, run] : criteria) {
    bool selected = argc < 2;
    for (int a = 1; a < argc; ++a) selected |= std::string(label).rfind(argv[a], 0) == 0;
    if (!selected) continue;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", label, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
