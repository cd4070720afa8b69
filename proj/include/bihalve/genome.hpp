#pragma once

// Duplicated genomes: markers with two paralogous copies, linear and circular
// chromosomes, adjacencies and the structural predicates built on them.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bihalve {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The input does not describe a valid rearranged duplicated genome, or the
// genome falls outside what an operation accepts.
class InvalidGenome : public Error {
public:
  using Error::Error;
};

// One of the two copies of a marker. copy 0 is written `x`, copy 1 `x'`.
struct MarkerOccurrence {
  std::uint32_t id = 0;
  std::uint8_t copy = 0;

  constexpr MarkerOccurrence paralog() const noexcept {
    return {id, static_cast<std::uint8_t>(copy ^ 1u)};
  }

  friend constexpr auto operator<=>(const MarkerOccurrence&,
                                    const MarkerOccurrence&) = default;
};

inline std::string to_string(const MarkerOccurrence& m) {
  return std::to_string(m.id) + (m.copy ? "'" : "");
}

// A marker or the telomere sentinel (nullopt). The telomere is its own paralog.
using Element = std::optional<MarkerOccurrence>;

inline Element paralog(const Element& e) {
  return e ? Element{e->paralog()} : Element{};
}

inline std::string to_string(const Element& e) {
  return e ? to_string(*e) : std::string{"o"};
}

enum class Shape : std::uint8_t { linear, circular };

struct Chromosome {
  Shape shape = Shape::linear;
  std::vector<MarkerOccurrence> markers;

  bool is_linear() const noexcept { return shape == Shape::linear; }
  std::size_t size() const noexcept { return markers.size(); }
  // Linear: m + 1 (two telomeric); circular: m.
  std::size_t adjacency_count() const noexcept {
    return is_linear() ? markers.size() + 1 : markers.size();
  }

  friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

struct Genome {
  std::vector<Chromosome> chromosomes;

  static Genome linear(std::vector<MarkerOccurrence> markers) {
    return Genome{{Chromosome{Shape::linear, std::move(markers)}}};
  }

  std::size_t occurrence_count() const noexcept {
    std::size_t total = 0;
    for (const auto& c : chromosomes) total += c.size();
    return total;
  }

  bool is_single_linear() const noexcept {
    return chromosomes.size() == 1 && chromosomes.front().is_linear();
  }

  friend bool operator==(const Genome&, const Genome&) = default;
};

// Ordered pair of consecutive elements. `gap` is the adjacency's index inside
// its chromosome: for a linear chromosome gap g pairs position g-1 (or the
// telomere when g = 0) with position g (or the telomere when g = m); for a
// circular chromosome gap g pairs position g-1 (mod m) with position g.
struct Adjacency {
  Element left;
  Element right;
  std::size_t chromosome = 0;
  std::size_t gap = 0;

  bool is_telomeric() const noexcept { return !left || !right; }
  friend bool operator==(const Adjacency&, const Adjacency&) = default;
};

inline std::string to_string(const Adjacency& a) {
  return "(" + to_string(a.left) + " " + to_string(a.right) + ")";
}

inline Adjacency adjacency_at(const Genome& g, std::size_t chromosome, std::size_t gap) {
  if (chromosome >= g.chromosomes.size()) throw InvalidGenome("chromosome index out of range");
  const Chromosome& c = g.chromosomes[chromosome];
  const std::size_t m = c.size();
  if (gap >= c.adjacency_count()) throw InvalidGenome("gap index out of range");
  Adjacency a{{}, {}, chromosome, gap};
  if (c.is_linear()) {
    if (gap > 0) a.left = c.markers[gap - 1];
    if (gap < m) a.right = c.markers[gap];
  } else {
    a.left = c.markers[(gap + m - 1) % m];
    a.right = c.markers[gap];
  }
  return a;
}

// All adjacencies in chromosome order.
inline std::vector<Adjacency> adjacencies(const Genome& g) {
  std::vector<Adjacency> out;
  for (std::size_t c = 0; c < g.chromosomes.size(); ++c) {
    const std::size_t count = g.chromosomes[c].adjacency_count();
    for (std::size_t gap = 0; gap < count; ++gap) out.push_back(adjacency_at(g, c, gap));
  }
  return out;
}

// Markers of the single linear chromosome; throws if the genome has any other shape.
inline std::span<const MarkerOccurrence> linear_markers(const Genome& g) {
  if (!g.is_single_linear())
    throw InvalidGenome("expected a genome made of exactly one linear chromosome");
  return g.chromosomes.front().markers;
}

// Checks the duplicated-genome rule: every id occurs exactly twice, once per copy.
inline void validate(const Genome& g) {
  std::unordered_map<std::uint32_t, unsigned> seen;  // bit per copy flag
  for (const auto& c : g.chromosomes) {
    if (!c.is_linear() && c.markers.empty()) throw InvalidGenome("empty circular chromosome");
    for (const auto& m : c.markers) {
      if (m.id == 0) throw InvalidGenome("marker id must be positive");
      if (m.copy > 1) throw InvalidGenome("copy flag out of range for marker " + std::to_string(m.id));
      unsigned& bits = seen[m.id];
      const unsigned bit = 1u << m.copy;
      if (bits & bit) {
        if (bits == 3u)
          throw InvalidGenome("marker " + std::to_string(m.id) + " appears more than twice");
        throw InvalidGenome("both occurrences of marker " + std::to_string(m.id) +
                            " carry the same copy flag");
      }
      bits |= bit;
    }
  }
  for (const auto& [id, bits] : seen)
    if (bits != 3u) throw InvalidGenome("marker " + std::to_string(id) + " appears only once");
}

inline std::size_t distinct_markers(const Genome& g) { return g.occurrence_count() / 2; }

inline std::uint32_t max_marker_id(std::span<const MarkerOccurrence> seq) {
  std::uint32_t best = 0;
  for (const auto& m : seq) best = std::max(best, m.id);
  return best;
}

// partner[p] = position of the paralog of the occurrence at p. The sequence
// must hold each id exactly twice.
inline std::vector<std::size_t> partner_positions(std::span<const MarkerOccurrence> seq) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> partner(seq.size(), none);
  const std::uint32_t top = max_marker_id(seq);
  auto link = [&](auto&& first_seen) {
    for (std::size_t p = 0; p < seq.size(); ++p) {
      std::size_t& slot = first_seen(seq[p].id);
      if (slot == none) {
        slot = p;
      } else {
        partner[p] = slot;
        partner[slot] = p;
      }
    }
  };
  if (top <= 4 * seq.size() + 16) {
    std::vector<std::size_t> first(top + 1, none);
    link([&](std::uint32_t id) -> std::size_t& { return first[id]; });
  } else {
    std::unordered_map<std::uint32_t, std::size_t> first;
    first.reserve(seq.size());
    link([&](std::uint32_t id) -> std::size_t& { return first.try_emplace(id, none).first->second; });
  }
  for (std::size_t p : partner)
    if (p == none) throw InvalidGenome("marker without paralog");
  return partner;
}

// Relabels copies so that, scanning chromosomes in order, the first occurrence
// of every id is copy 0.
inline Genome canonicalize_copies(const Genome& g) {
  Genome out = g;
  std::unordered_map<std::uint32_t, bool> flip;
  for (auto& c : out.chromosomes)
    for (auto& m : c.markers) {
      auto [it, first] = flip.try_emplace(m.id, m.copy != 0);
      if (it->second) m.copy ^= 1u;
    }
  return out;
}

// Rotation-normal form: each circular chromosome starts at its smallest
// occurrence and circular chromosomes are sorted; linear chromosomes keep
// their order and come first.
inline Genome normalized(const Genome& g) {
  Genome out;
  std::vector<Chromosome> circles;
  for (const auto& c : g.chromosomes) {
    if (c.is_linear()) {
      out.chromosomes.push_back(c);
      continue;
    }
    Chromosome r = c;
    auto smallest = std::min_element(r.markers.begin(), r.markers.end());
    std::rotate(r.markers.begin(), smallest, r.markers.end());
    circles.push_back(std::move(r));
  }
  std::sort(circles.begin(), circles.end(),
            [](const Chromosome& a, const Chromosome& b) { return a.markers < b.markers; });
  for (auto& c : circles) out.chromosomes.push_back(std::move(c));
  return out;
}

// Equality up to rotation of circular chromosomes and their order.
inline bool same_genome(const Genome& a, const Genome& b) { return normalized(a) == normalized(b); }

namespace detail {

// (left, right) keys of every adjacency, for membership tests.
struct AdjacencyKeySet {
  static std::uint64_t encode(const Element& e) {
    return e ? (static_cast<std::uint64_t>(e->id) << 1 | e->copy) + 1 : 0;
  }
  static std::uint64_t key(const Element& l, const Element& r) {
    return encode(l) * 0x9E3779B97F4A7C15ull ^ encode(r);
  }

  explicit AdjacencyKeySet(const Genome& g) {
    for (const auto& a : adjacencies(g)) pairs.emplace(key(a.left, a.right), std::pair{a.left, a.right});
  }

  bool contains(const Element& l, const Element& r) const {
    auto [lo, hi] = pairs.equal_range(key(l, r));
    for (auto it = lo; it != hi; ++it)
      if (it->second.first == l && it->second.second == r) return true;
    return false;
  }

  std::unordered_multimap<std::uint64_t, std::pair<Element, Element>> pairs;
};

}  // namespace detail

// (a b) is a double-adjacency iff (a' b') is an adjacency of g as well.
inline bool is_double_adjacency(const Genome& g, const Adjacency& a) {
  return detail::AdjacencyKeySet(g).contains(paralog(a.left), paralog(a.right));
}

// One linear chromosome whose two halves carry the same id sequence.
inline bool is_tandem_duplicated(std::span<const MarkerOccurrence> seq) {
  if (seq.size() % 2 != 0) return false;
  const std::size_t k = seq.size() / 2;
  for (std::size_t i = 0; i < k; ++i)
    if (seq[i].id != seq[k + i].id) return false;
  // Equal halves plus two occurrences per id already force each id once per half.
  return true;
}

inline bool is_tandem_duplicated(const Genome& g) {
  return g.is_single_linear() && is_tandem_duplicated(g.chromosomes.front().markers);
}

inline bool is_perfectly_duplicated(const Genome& g) {
  detail::AdjacencyKeySet keys(g);
  for (const auto& a : adjacencies(g))
    if (!keys.contains(paralog(a.left), paralog(a.right))) return false;
  return true;
}

}  // namespace bihalve
