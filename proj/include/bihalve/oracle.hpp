#pragma once

// Breadth-first search oracles for small genomes.
//
// States are packed into short byte strings (one byte per occurrence or per
// successor entry), which stay inside the small-string buffer for the sizes
// these searches are meant for. With `canonicalize` set, a state is keyed by a
// normal form under swapping the two copy labels of any id, which leaves every
// distance unchanged.

#include <unordered_set>

#include "bihalve/genome.hpp"
#include "bihalve/rearrangement.hpp"

namespace bihalve {

struct OracleConfig {
  std::size_t max_depth = 64;
  std::size_t node_budget = 10'000'000;  // expanded states
  bool canonicalize = true;
};

enum class OracleStatus { found, budget_exhausted, depth_exhausted, unreachable };

inline const char* to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::found: return "found";
    case OracleStatus::budget_exhausted: return "budget exhausted";
    case OracleStatus::depth_exhausted: return "depth exhausted";
    case OracleStatus::unreachable: return "unreachable";
  }
  return "unreachable";
}

struct OracleResult {
  OracleStatus status = OracleStatus::unreachable;
  std::optional<std::size_t> distance;
  std::size_t expanded = 0;
};

namespace detail {

// Dense relabeling: ids become 0..n-1 in increasing order; byte = 2 * id + copy.
inline std::string pack_dense(std::span<const MarkerOccurrence> seq) {
  std::vector<std::uint32_t> ids;
  for (const auto& m : seq) ids.push_back(m.id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > 100) throw std::invalid_argument("oracle state too large");
  std::string out;
  for (const auto& m : seq) {
    const auto d = static_cast<unsigned>(std::lower_bound(ids.begin(), ids.end(), m.id) - ids.begin());
    out.push_back(static_cast<char>(2 * d + m.copy));
  }
  return out;
}

// First occurrence of each id becomes copy 0.
inline void canonical_copies(std::string& s) {
  std::uint64_t flip_known[4] = {0, 0, 0, 0}, flip[4] = {0, 0, 0, 0};
  for (char& c : s) {
    const auto v = static_cast<unsigned char>(c);
    const unsigned id = v >> 1;
    const std::uint64_t bit = 1ull << (id & 63);
    if (!(flip_known[id >> 6] & bit)) {
      flip_known[id >> 6] |= bit;
      if (v & 1u) flip[id >> 6] |= bit;
    }
    if (flip[id >> 6] & bit) c = static_cast<char>(v ^ 1u);
  }
}

inline bool packed_tandem(const std::string& s) {
  if (s.size() % 2) return false;
  const std::size_t k = s.size() / 2;
  for (std::size_t i = 0; i < k; ++i)
    if ((static_cast<unsigned char>(s[i]) >> 1) != (static_cast<unsigned char>(s[k + i]) >> 1)) return false;
  return true;
}

// Layered BFS shared by both oracles. `expand(state, emit)` calls emit for
// every neighbor; emit returns true to stop when a goal is reached.
template <class Canon, class Goal, class Expand>
OracleResult layered_bfs(std::string start, const OracleConfig& cfg, Canon canon, Goal goal, Expand expand) {
  OracleResult res;
  if (goal(start)) {
    res.status = OracleStatus::found;
    res.distance = 0;
    return res;
  }
  std::unordered_set<std::string> seen;
  std::vector<std::string> frontier{canon(start)}, next;
  seen.insert(frontier.front());
  for (std::size_t depth = 1; depth <= cfg.max_depth; ++depth) {
    next.clear();
    for (const auto& state : frontier) {
      if (res.expanded >= cfg.node_budget) {
        res.status = OracleStatus::budget_exhausted;
        return res;
      }
      ++res.expanded;
      bool hit = false;
      expand(state, [&](std::string&& neighbor) {
        if (goal(neighbor)) return hit = true;
        std::string key = canon(std::move(neighbor));
        if (seen.insert(key).second) next.push_back(std::move(key));
        return false;
      });
      if (hit) {
        res.status = OracleStatus::found;
        res.distance = depth;
        return res;
      }
    }
    if (next.empty()) {
      res.status = OracleStatus::unreachable;
      return res;
    }
    frontier.swap(next);
  }
  res.status = OracleStatus::depth_exhausted;
  return res;
}

}  // namespace detail

// Minimum number of BIs from g to any tandem-duplicated genome.
inline OracleResult bfs_bi_distance(const Genome& g, const OracleConfig& cfg = {}) {
  validate(g);
  const std::string start = detail::pack_dense(linear_markers(g));
  auto canon = [&](std::string s) {
    if (cfg.canonicalize) detail::canonical_copies(s);
    return s;
  };
  auto expand = [](const std::string& s, auto&& emit) {
    const std::size_t len = s.size();
    std::string out(len, '\0');
    for (std::size_t g1 = 0; g1 < len; ++g1)
      for (std::size_t g2 = g1 + 1; g2 <= len; ++g2)
        for (std::size_t g3 = g2; g3 < len; ++g3)
          for (std::size_t g4 = g3 + 1; g4 <= len; ++g4) {
            auto w = out.begin();
            w = std::copy(s.begin(), s.begin() + g1, w);
            w = std::copy(s.begin() + g3, s.begin() + g4, w);
            w = std::copy(s.begin() + g2, s.begin() + g3, w);
            w = std::copy(s.begin() + g1, s.begin() + g2, w);
            std::copy(s.begin() + g4, s.end(), w);
            if (emit(std::string(out))) return;
          }
  };
  return detail::layered_bfs(start, cfg, canon, detail::packed_tandem, expand);
}

namespace detail {

// Successor encoding over 2n occurrence nodes (node 2 * id + copy) and one
// cap node 2n that plays both telomeres of the single linear chromosome.
inline std::string successor_state(std::span<const MarkerOccurrence> seq) {
  const std::string dense = pack_dense(seq);
  const std::size_t cap = dense.size();
  std::string succ(cap + 1, '\0');
  char prev = static_cast<char>(cap);
  for (char c : dense) {
    succ[static_cast<unsigned char>(prev)] = c;
    prev = c;
  }
  succ[static_cast<unsigned char>(prev)] = static_cast<char>(cap);
  return succ;
}

// Single linear chromosome and no circles, in occurrence bytes; empty if not.
inline std::optional<std::string> linear_walk(const std::string& succ) {
  const auto cap = static_cast<unsigned char>(succ.size() - 1);
  std::string seq;
  for (auto v = static_cast<unsigned char>(succ[cap]); v != cap; v = static_cast<unsigned char>(succ[v])) {
    seq.push_back(static_cast<char>(v));
    if (seq.size() > cap) return std::nullopt;
  }
  if (seq.size() != cap) return std::nullopt;
  return seq;
}

inline std::string relabel_successor(const std::string& succ, unsigned mask) {
  const std::size_t cap = succ.size() - 1;
  auto sigma = [&](unsigned char x) -> unsigned char {
    return x == cap ? x : static_cast<unsigned char>(x ^ ((mask >> (x >> 1)) & 1u));
  };
  std::string out(succ.size(), '\0');
  for (std::size_t x = 0; x <= cap; ++x)
    out[sigma(static_cast<unsigned char>(x))] = static_cast<char>(sigma(static_cast<unsigned char>(succ[x])));
  return out;
}

}  // namespace detail

// Minimum number of DCJs from g (one linear chromosome plus any circles along
// the way) to a single-linear tandem-duplicated genome. Every DCJ swaps the
// successors of two nodes. Meant for n <= 4; refuses n > 7.
inline OracleResult bfs_dcj_tandem_distance(const Genome& g, const OracleConfig& cfg = {}) {
  validate(g);
  const auto seq = linear_markers(g);
  if (seq.size() > 14) throw std::invalid_argument("DCJ oracle is limited to n <= 7");
  const std::size_t n = seq.size() / 2;
  auto canon = [&](std::string s) {
    if (!cfg.canonicalize) return s;
    std::string best = s;
    for (unsigned mask = 1; mask < (1u << n); ++mask) best = std::min(best, detail::relabel_successor(s, mask));
    return best;
  };
  auto goal = [](const std::string& succ) {
    const auto walk = detail::linear_walk(succ);
    return walk && detail::packed_tandem(*walk);
  };
  auto expand = [](const std::string& s, auto&& emit) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        std::string t = s;
        std::swap(t[i], t[j]);
        if (emit(std::move(t))) return;
      }
  };
  return detail::layered_bfs(detail::successor_state(seq), cfg, canon, goal, expand);
}

}  // namespace bihalve
