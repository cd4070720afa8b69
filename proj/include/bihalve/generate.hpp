#pragma once

// Genome generators: exhaustive enumeration for small n and seeded random
// workloads.

#include <functional>
#include <random>

#include "bihalve/rearrangement.hpp"

namespace bihalve {

// Every copy-canonical single-linear duplicated genome on ids 1..n, each once:
// (2n)! / 2^n genomes. Refuses n > 4.
inline void for_each_genome(std::size_t n, const std::function<void(const Genome&)>& visit) {
  if (n > 4) throw std::invalid_argument("enumeration is limited to n <= 4");
  std::vector<std::uint32_t> ids;
  for (std::uint32_t id = 1; id <= n; ++id) ids.insert(ids.end(), {id, id});
  std::vector<MarkerOccurrence> seq(ids.size());
  std::vector<char> seen(n + 1);
  do {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t p = 0; p < ids.size(); ++p) {
      seq[p] = {ids[p], static_cast<std::uint8_t>(seen[ids[p]])};
      seen[ids[p]] = 1;
    }
    visit(Genome::linear(seq));
  } while (std::next_permutation(ids.begin(), ids.end()));
}

inline std::vector<Genome> enumerate_genomes(std::size_t n) {
  std::vector<Genome> out;
  for_each_genome(n, [&](const Genome& g) { out.push_back(g); });
  return out;
}

inline Genome tandem_genome(std::size_t n) {
  std::vector<MarkerOccurrence> seq;
  for (std::uint8_t copy : {0, 1})
    for (std::uint32_t id = 1; id <= n; ++id) seq.push_back({id, copy});
  return Genome::linear(std::move(seq));
}

// Uniform arrangement of the 2n occurrences, copy-canonical.
inline Genome random_duplicated(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("need at least one marker");
  std::mt19937_64 rng(seed);
  auto seq = tandem_genome(n).chromosomes.front().markers;
  std::shuffle(seq.begin(), seq.end(), rng);
  return canonicalize_copies(Genome::linear(std::move(seq)));
}

// Random valid gap quadruple g1 < g2 <= g3 < g4 on a chromosome of `length` markers.
template <class Rng>
BIStep random_bi_step(std::size_t length, Rng& rng) {
  if (length < 2) throw std::invalid_argument("a block interchange needs two markers");
  std::uniform_int_distribution<std::size_t> gap(0, length);
  while (true) {
    std::array<std::size_t, 4> g{gap(rng), gap(rng), gap(rng), gap(rng)};
    std::sort(g.begin(), g.end());
    const BIStep s{g[0], g[1], g[2], g[3]};
    if (s.g1 < s.g2 && s.g3 < s.g4) return s;
  }
}

// Tandem genome on n ids scrambled by k random BIs; its distance is at most k.
inline Genome random_scrambled_tandem(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("need at least one marker");
  std::mt19937_64 rng(seed);
  auto seq = tandem_genome(n).chromosomes.front().markers;
  if (seq.size() >= 2)
    for (std::size_t step = 0; step < k; ++step) seq = apply_bi(seq, random_bi_step(seq.size(), rng));
  return canonicalize_copies(Genome::linear(std::move(seq)));
}

}  // namespace bihalve
