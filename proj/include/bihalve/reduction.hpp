#pragma once

// Reduction: every maximal run of consecutive double-adjacencies, together
// with its paralogous run, is rewritten as one composite marker.

#include <map>

#include "bihalve/genome.hpp"

namespace bihalve {

struct ReductionMap {
  // Composite id -> its copy-0 expansion. The copy-1 expansion is the
  // element-wise paralog of the same sequence.
  std::map<std::uint32_t, std::vector<MarkerOccurrence>> composites;
  // block_start[p] = unreduced position of the first original marker covered
  // by reduced position p; the last entry is the unreduced length.
  std::vector<std::size_t> block_start;

  bool is_identity() const noexcept { return composites.empty(); }
};

struct Reduction {
  Genome genome;
  ReductionMap map;
};

namespace detail {

inline bool double_at(std::span<const std::size_t> partner, std::size_t gap) {
  return partner[gap - 1] + 1 == partner[gap];
}

}  // namespace detail

inline Reduction reduce(std::span<const MarkerOccurrence> seq) {
  const std::size_t len = seq.size();
  Reduction out;
  out.map.block_start.reserve(len + 1);
  std::vector<MarkerOccurrence> reduced;
  reduced.reserve(len);
  if (len == 0) {
    out.map.block_start.push_back(0);
    out.genome = Genome::linear({});
    return out;
  }

  const auto partner = partner_positions(seq);
  std::uint32_t next_id = max_marker_id(seq) + 1;
  // Composite assigned to the run starting at a position; its paralog run
  // starts at partner[start].
  std::unordered_map<std::size_t, std::uint32_t> run_id;

  std::size_t i = 0;
  while (i < len) {
    std::size_t j = i;
    while (j + 1 < len && detail::double_at(partner, j + 1)) ++j;
    out.map.block_start.push_back(i);
    if (j == i) {
      reduced.push_back(seq[i]);
    } else {
      const auto mate = run_id.find(partner[i]);
      std::uint32_t id;
      if (mate != run_id.end()) {
        id = mate->second;
      } else {
        id = next_id++;
        std::vector<MarkerOccurrence> expansion(seq.begin() + static_cast<std::ptrdiff_t>(i),
                                                seq.begin() + static_cast<std::ptrdiff_t>(j + 1));
        if (seq[i].copy != 0)
          for (auto& m : expansion) m = m.paralog();
        out.map.composites.emplace(id, std::move(expansion));
        run_id.emplace(i, id);
      }
      reduced.push_back({id, seq[i].copy});
    }
    i = j + 1;
  }
  out.map.block_start.push_back(len);
  out.genome = Genome::linear(std::move(reduced));
  return out;
}

inline Reduction reduce(const Genome& g) { return reduce(linear_markers(g)); }

inline void append_expansion(const ReductionMap& map, const MarkerOccurrence& m,
                             std::vector<MarkerOccurrence>& out) {
  const auto it = map.composites.find(m.id);
  if (it == map.composites.end()) {
    out.push_back(m);
    return;
  }
  for (const auto& part : it->second) out.push_back(m.copy ? part.paralog() : part);
}

// Inverse of reduce: rewrites every composite as its original run.
inline Genome expand(const Genome& reduced, const ReductionMap& map) {
  Genome out;
  for (const auto& c : reduced.chromosomes) {
    Chromosome e{c.shape, {}};
    for (const auto& m : c.markers) append_expansion(map, m, e.markers);
    out.chromosomes.push_back(std::move(e));
  }
  return out;
}

// Unreduced gap separating the same two original markers as reduced gap
// `gap`. Composite boundaries land on their outermost original gaps.
inline std::size_t expand_gap(const ReductionMap& map, std::size_t gap) {
  if (gap >= map.block_start.size()) throw std::out_of_range("reduced gap out of range");
  return map.block_start[gap];
}

}  // namespace bihalve
