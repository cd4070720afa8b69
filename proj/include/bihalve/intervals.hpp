#pragma once

// Intervals of adjacencies on a single linear chromosome.
//
// The interval of a non-telomeric adjacency (u v) is the segment that
// DCJ(u v) excises: with u' at position pu and v' at position pv, it is the
// gap range [lo, hi] with lo = min(pu + 1, pv), hi = max(pu + 1, pv), and its
// content is positions [lo, hi). When pu < pv the content lies strictly
// between u' and v' (the open form ]u'; v'[); otherwise it runs from v' to u'
// inclusive (the closed form [v'; u']). The content is empty exactly for
// double-adjacencies.

#include <sstream>

#include "bihalve/natural_graph.hpp"
#include "bihalve/rearrangement.hpp"

namespace bihalve {

struct AdjacencyInterval {
  Adjacency owner;
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool closed = false;

  std::size_t width() const noexcept { return hi - lo; }
  bool empty() const noexcept { return lo == hi; }
  bool contains(std::size_t position) const noexcept { return lo <= position && position < hi; }

  friend bool operator==(const AdjacencyInterval&, const AdjacencyInterval&) = default;
};

enum class IntervalKind : std::uint8_t { type1, type2, neither };

inline const char* to_string(IntervalKind k) {
  switch (k) {
    case IntervalKind::type1: return "type1";
    case IntervalKind::type2: return "type2";
    case IntervalKind::neither: return "neither";
  }
  return "neither";
}

// Interval of the adjacency at gap `gap` (0 < gap < len).
inline AdjacencyInterval interval_at(std::span<const MarkerOccurrence> seq,
                                     std::span<const std::size_t> partner, std::size_t gap) {
  AdjacencyInterval i;
  i.owner = Adjacency{seq[gap - 1], seq[gap], 0, gap};
  const std::size_t after_u = partner[gap - 1] + 1, at_v = partner[gap];
  i.lo = std::min(after_u, at_v);
  i.hi = std::max(after_u, at_v);
  i.closed = at_v < after_u;
  return i;
}

inline AdjacencyInterval interval_of(const Genome& g, const Adjacency& a) {
  const auto seq = linear_markers(g);
  if (a.is_telomeric()) throw InvalidGenome("telomeric adjacency " + to_string(a) + " has no interval");
  if (a.chromosome != 0 || a.gap == 0 || a.gap >= seq.size() || seq[a.gap - 1] != *a.left ||
      seq[a.gap] != *a.right)
    throw InvalidGenome("adjacency " + to_string(a) + " is not in the genome");
  return interval_at(seq, partner_positions(seq), a.gap);
}

// One interval per non-telomeric adjacency, in genome order (2n - 1 entries).
inline std::vector<AdjacencyInterval> interval_set(std::span<const MarkerOccurrence> seq,
                                                   std::span<const std::size_t> partner) {
  std::vector<AdjacencyInterval> out;
  if (seq.size() < 2) return out;
  out.reserve(seq.size() - 1);
  for (std::size_t gap = 1; gap < seq.size(); ++gap) out.push_back(interval_at(seq, partner, gap));
  return out;
}

inline std::vector<AdjacencyInterval> interval_set(const Genome& g) {
  const auto seq = linear_markers(g);
  return interval_set(seq, partner_positions(seq));
}

// Gap ranges cross: they intersect and neither includes the other. Sharing a
// single cut gap counts (it induces an adjacent-blocks BI).
inline bool overlapping(const AdjacencyInterval& i, const AdjacencyInterval& j) noexcept {
  return (i.lo < j.lo && j.lo <= i.hi && i.hi < j.hi) || (j.lo < i.lo && i.lo <= j.hi && j.hi < i.hi);
}

// I(a b) and I(x y) overlap with x != a' and y != b', so that DCJ(a b) then
// DCJ(x y) is one sorting BI. When the ranges only share an endpoint, one of
// the cuts of DCJ(x y) is gone after the excision; the pair still composes if
// I(x y) is open, and not if it is closed.
inline bool compatible(const AdjacencyInterval& i, const AdjacencyInterval& j) {
  if (!overlapping(i, j) || j.owner.left == paralog(i.owner.left) || j.owner.right == paralog(i.owner.right))
    return false;
  const bool touching = j.lo == i.hi || i.lo == j.hi;
  return !(touching && j.closed);
}

// BI equivalent to DCJ(first.owner) followed by DCJ(second.owner).
inline BIStep induced_bi(const AdjacencyInterval& first, const AdjacencyInterval& second) {
  if (!overlapping(first, second)) throw InvalidStep("intervals do not overlap");
  const auto& a = first.lo < second.lo ? first : second;
  const auto& b = first.lo < second.lo ? second : first;
  return {a.lo, b.lo, a.hi, b.hi};
}

// Content characterization: type 1 holds one copy of every id, type 2 is
// closed under paralogy. O(width).
inline IntervalKind classify_interval(std::span<const MarkerOccurrence> seq,
                                      std::span<const std::size_t> partner, const AdjacencyInterval& i) {
  if (i.empty()) throw InvalidGenome("empty interval has no type");
  bool closed = true;
  bool one_copy_each = i.width() * 2 == seq.size();
  for (std::size_t p = i.lo; p < i.hi && (closed || one_copy_each); ++p) {
    if (i.contains(partner[p]))
      one_copy_each = false;
    else
      closed = false;
  }
  if (one_copy_each) return IntervalKind::type1;
  if (closed) return IntervalKind::type2;
  return IntervalKind::neither;
}

inline IntervalKind classify_interval(const Genome& g, const AdjacencyInterval& i) {
  const auto seq = linear_markers(g);
  return classify_interval(seq, partner_positions(seq), i);
}

// Simulation route: excise the interval with DCJ(owner), then test whether
// every non-telomeric adjacency has its paralog markers in the opposite
// chromosome (type 1) or in its own chromosome (type 2).
inline IntervalKind classify_by_excision(const Genome& g, const AdjacencyInterval& i) {
  if (i.empty()) throw InvalidGenome("empty interval has no type");
  const Genome a = apply_dcj_make_double(g, i.owner);
  std::unordered_map<std::uint64_t, std::size_t> home;
  auto key = [](const MarkerOccurrence& m) { return static_cast<std::uint64_t>(m.id) << 1 | m.copy; };
  for (std::size_t k = 0; k < a.chromosomes.size(); ++k)
    for (const auto& m : a.chromosomes[k].markers) home[key(m)] = k;
  bool opposite = true, same = true;
  for (const auto& adj : adjacencies(a)) {
    if (adj.is_telomeric()) continue;
    for (const auto& m : {*adj.left, *adj.right}) {
      if (home.at(key(m.paralog())) == adj.chromosome)
        opposite = false;
      else
        same = false;
    }
  }
  if (opposite) return IntervalKind::type1;
  if (same) return IntervalKind::type2;
  return IntervalKind::neither;
}

namespace detail {

// Offline range extremum of values[l..r] for every (l, r) query: maximum
// with std::greater, minimum with std::less. Queries are bucketed by r and a
// monotone stack links popped entries in a union-find.
template <class Better>
std::vector<std::size_t> range_best(std::span<const std::size_t> values,
                                    std::span<const std::pair<std::size_t, std::size_t>> queries,
                                    Better better) {
  const std::size_t len = values.size();
  std::vector<std::size_t> head(len + 1, 0);
  // Counting sort of queries by right end.
  for (const auto& q : queries) ++head[q.second + 1];
  for (std::size_t r = 0; r < len; ++r) head[r + 1] += head[r];
  std::vector<std::size_t> sorted(queries.size()), fill(head.begin(), head.end() - 1);
  for (std::size_t k = 0; k < queries.size(); ++k) sorted[fill[queries[k].second]++] = k;

  std::vector<std::size_t> answer(queries.size());
  std::vector<std::size_t> stack;
  UnionFind uf(len);
  for (std::size_t r = 0; r < len; ++r) {
    while (!stack.empty() && !better(values[stack.back()], values[r])) {
      uf.attach(stack.back(), r);
      stack.pop_back();
    }
    stack.push_back(r);
    for (std::size_t k = head[r]; k < head[r + 1]; ++k) {
      const std::size_t q = sorted[k];
      answer[q] = values[uf.find(queries[q].first)];
    }
  }
  return answer;
}

// type2[k] for the interval at gap k + 1, in O(n alpha(n)).
inline std::vector<char> type2_flags(std::span<const std::size_t> partner,
                                     std::span<const AdjacencyInterval> intervals) {
  std::vector<std::pair<std::size_t, std::size_t>> queries;
  std::vector<std::size_t> query_of(intervals.size(), detail::SuccessorForm::npos);
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    if (intervals[k].empty()) continue;
    query_of[k] = queries.size();
    queries.emplace_back(intervals[k].lo, intervals[k].hi - 1);
  }
  const auto max_partner = range_best(partner, queries, std::greater<>{});
  const auto min_partner = range_best(partner, queries, std::less<>{});
  std::vector<char> flags(intervals.size(), 0);
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    if (query_of[k] == detail::SuccessorForm::npos) continue;
    const std::size_t q = query_of[k];
    flags[k] = min_partner[q] >= intervals[k].lo && max_partner[q] < intervals[k].hi;
  }
  return flags;
}

}  // namespace detail

struct SortingPair {
  AdjacencyInterval first;   // smallest interval not of type 2
  AdjacencyInterval second;  // first compatible interval in genome order
};

// Checks that DCJ(first) then DCJ(second) gains exactly two natural-graph
// cycles and composes to the induced BI. Throws std::logic_error otherwise.
inline void check_sorting_pair(const Genome& g, const SortingPair& pair) {
  const std::size_t before = halving_summary(g).cycles;
  const Genome mid = apply_dcj_make_double(g, pair.first.owner);
  const auto site = locate(mid, pair.second.owner.left, pair.second.owner.right);
  if (!site) throw std::logic_error("second adjacency vanished after the excision");
  const Genome after = apply_dcj_make_double(mid, adjacency_at(mid, site->chromosome, site->gap));
  if (halving_summary(after).cycles != before + 2)
    throw std::logic_error("compatible pair did not gain two natural-graph cycles");
  if (after != apply_bi(g, induced_bi(pair.first, pair.second)))
    throw std::logic_error("DCJ pair does not compose to the induced block interchange");
}

namespace detail {

// The scan behind find_sorting_pair, without the marker-count guard.
inline SortingPair pick_sorting_pair(std::span<const MarkerOccurrence> seq,
                                     std::span<const std::size_t> partner) {
  const auto intervals = interval_set(seq, partner);
  for (const auto& i : intervals)
    if (i.empty()) throw InvalidGenome("genome is not reduced: " + to_string(i.owner) + " is double");
  const auto type2 = detail::type2_flags(partner, intervals);

  std::size_t best = detail::SuccessorForm::npos;
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    if (type2[k]) continue;
    if (best == detail::SuccessorForm::npos || intervals[k].width() < intervals[best].width() ||
        (intervals[k].width() == intervals[best].width() && intervals[k].lo < intervals[best].lo))
      best = k;
  }
  if (best == detail::SuccessorForm::npos) throw std::logic_error("every interval is of type 2");
  const AdjacencyInterval& j = intervals[best];
  for (const auto& k : intervals)
    if (compatible(j, k)) return {j, k};
  throw std::logic_error("smallest non-type-2 interval " + to_string(j.owner) +
                         " has no compatible interval");
}

}  // namespace detail

// Smallest non-type-2 interval (ties: smallest lo) and its first compatible
// partner in genome order. `seq` must be reduced with more than 3 markers.
inline SortingPair find_sorting_pair(std::span<const MarkerOccurrence> seq,
                                     std::span<const std::size_t> partner) {
  if (seq.size() <= 6) throw InvalidGenome("a sorting pair needs more than 3 distinct markers");
  return detail::pick_sorting_pair(seq, partner);
}

inline SortingPair find_sorting_pair(const Genome& g, bool verify = false) {
  const auto seq = linear_markers(g);
  const SortingPair pair = find_sorting_pair(seq, partner_positions(seq));
  if (verify) check_sorting_pair(g, pair);
  return pair;
}

// A BI made of two sorting DCJs: DCJ(first.owner) excises the content of
// `first`, then DCJ(integration) puts the circle back. `partner` is set when
// the second DCJ is the one of a compatible interval of the genome. Otherwise
// `integration` is an adjacency present only after the excision, or one whose
// interval nests with `first`.
struct SortingMove {
  AdjacencyInterval first;
  std::optional<AdjacencyInterval> partner;
  Adjacency integration;
  BIStep step;
};

namespace detail {

// After excising [j.lo, j.hi), finds the first adjacency (x y) of the
// resulting genome with x' and y' on different chromosomes; DCJ(x y) then
// reintegrates the circle. Linear adjacencies are scanned before circular
// ones, each in genome order. Returns the adjacency and the equivalent BI.
inline std::optional<std::pair<Adjacency, BIStep>> reintegration(
    std::span<const MarkerOccurrence> seq, std::span<const std::size_t> partner, const AdjacencyInterval& j) {
  const std::size_t len = seq.size(), lo = j.lo, hi = j.hi;
  if (j.empty() || hi > len) return std::nullopt;
  auto in_circle = [&](std::size_t pos) { return lo <= pos && pos < hi; };
  constexpr std::size_t junction = SuccessorForm::npos;

  // BI for: circle opened at position p, inserted at gap q of the remainder.
  auto step_for = [&](std::size_t q, std::size_t p) -> std::optional<BIStep> {
    if (q == junction) {
      if (p == lo) return std::nullopt;  // the circle would go back unchanged
      return BIStep{lo, p, p, hi};
    }
    if (q < lo) return BIStep{q, lo, p, hi};
    return p > lo ? BIStep{lo, p, hi, q} : BIStep{lo, hi, hi, q};
  };

  // (x y) with x at position i and y at position k of the original sequence.
  auto try_pair = [&](std::size_t i, std::size_t k) -> std::optional<BIStep> {
    const std::size_t xp = partner[i], yp = partner[k];
    if (in_circle(xp) == in_circle(yp)) return std::nullopt;
    if (in_circle(xp)) {
      // Cuts (x' e) in the circle and (f y') in the remainder.
      const std::size_t p = xp + 1 == hi ? lo : xp + 1;
      const std::size_t q = yp == hi ? junction : yp;
      return step_for(q, p);
    }
    // Cuts (x' e) in the remainder and (f y') in the circle.
    const std::size_t q = xp + 1 == lo ? junction : xp + 1;
    return step_for(q, yp);
  };

  auto emit = [&](std::size_t i, std::size_t k) -> std::optional<std::pair<Adjacency, BIStep>> {
    if (auto s = try_pair(i, k)) return std::pair{Adjacency{seq[i], seq[k]}, *s};
    return std::nullopt;
  };

  // Remainder adjacencies, including the junction (seq[lo-1] seq[hi]).
  for (std::size_t gap = 1; gap < len; ++gap) {
    if (gap < lo || gap > hi) {
      if (auto r = emit(gap - 1, gap)) return r;
    } else if (gap == lo && lo > 0 && hi < len) {
      if (auto r = emit(lo - 1, hi)) return r;
    }
  }
  // Circle adjacencies, ending with the closing one (seq[hi-1] seq[lo]).
  for (std::size_t gap = lo + 1; gap < hi; ++gap)
    if (auto r = emit(gap - 1, gap)) return r;
  return emit(hi - 1, lo);
}

}  // namespace detail

// The smallest interval not of type 2 (ties: smallest lo) and a sorting DCJ
// that reintegrates its excised content. The first compatible interval in
// genome order is preferred. When none exists, the reintegration is taken
// from the adjacencies of the genome after the excision, which always offers
// one when n > 3. `seq` must be reduced with more than 3 markers.
inline SortingMove find_sorting_move(std::span<const MarkerOccurrence> seq, std::span<const std::size_t> partner) {
  if (seq.size() <= 6) throw InvalidGenome("a sorting move needs more than 3 distinct markers");
  const auto intervals = interval_set(seq, partner);
  for (const auto& i : intervals)
    if (i.empty()) throw InvalidGenome("genome is not reduced: " + to_string(i.owner) + " is double");
  const auto type2 = detail::type2_flags(partner, intervals);

  std::size_t best = detail::SuccessorForm::npos;
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    if (type2[k]) continue;
    if (best == detail::SuccessorForm::npos || intervals[k].width() < intervals[best].width() ||
        (intervals[k].width() == intervals[best].width() && intervals[k].lo < intervals[best].lo))
      best = k;
  }
  if (best == detail::SuccessorForm::npos) throw std::logic_error("every interval is of type 2");
  SortingMove move;
  move.first = intervals[best];
  for (const auto& k : intervals)
    if (compatible(move.first, k)) {
      move.partner = k;
      move.integration = k.owner;
      move.step = induced_bi(move.first, k);
      return move;
    }
  const auto r = detail::reintegration(seq, partner, move.first);
  if (!r)
    throw std::logic_error("no sorting reintegration after excising " + to_string(move.first.owner));
  move.integration = r->first;
  move.step = r->second;
  return move;
}

inline SortingMove find_sorting_move(const Genome& g) {
  const auto seq = linear_markers(g);
  return find_sorting_move(seq, partner_positions(seq));
}

// One line per interval: adj=(u v) range=[lo,hi] kind=...
inline std::string dump_intervals(const Genome& g) {
  const auto seq = linear_markers(g);
  const auto partner = partner_positions(seq);
  std::ostringstream os;
  for (const auto& i : interval_set(seq, partner)) {
    os << "adj=" << to_string(i.owner) << " range=[" << i.lo << ',' << i.hi << "] kind="
       << (i.empty() ? "empty" : to_string(classify_interval(seq, partner, i))) << '\n';
  }
  return os.str();
}

}  // namespace bihalve
