#pragma once

// Block interchanges (BI) and double-cut-and-join (DCJ) operations.
//
// Markers are unsigned and chromosomes directed, so a DCJ that cuts (p q) and
// (r s) always rejoins them as (p s) and (r q): it swaps the successors of p
// and r. Internally a genome is turned into a successor permutation over its
// occurrences plus one cap node per linear chromosome (the cap stands for
// both telomeres); a DCJ is then a transposition of two successor entries.

#include <array>
#include <limits>

#include "bihalve/genome.hpp"

namespace bihalve {

class InvalidStep : public Error {
public:
  static constexpr std::size_t no_index = std::numeric_limits<std::size_t>::max();

  explicit InvalidStep(const std::string& what, std::size_t index = no_index)
      : Error(what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

// Exchanges blocks [g1, g2) and [g3, g4) of the linear chromosome.
// g2 == g3 is the adjacent-blocks case (a transposition).
struct BIStep {
  std::size_t g1 = 0, g2 = 0, g3 = 0, g4 = 0;

  friend constexpr auto operator<=>(const BIStep&, const BIStep&) = default;
};

inline std::string to_string(const BIStep& s) {
  return "bi " + std::to_string(s.g1) + " " + std::to_string(s.g2) + " " + std::to_string(s.g3) +
         " " + std::to_string(s.g4);
}

inline void check_bi(const BIStep& s, std::size_t length) {
  if (!(s.g1 < s.g2 && s.g2 <= s.g3 && s.g3 < s.g4))
    throw InvalidStep("gaps must satisfy g1 < g2 <= g3 < g4 (" + to_string(s) + ")");
  if (s.g4 > length)
    throw InvalidStep("gap " + std::to_string(s.g4) + " out of range for a chromosome of " +
                      std::to_string(length) + " markers");
}

// BI with the result written into `out`; `out` must not alias `seq`.
inline void apply_bi_into(std::span<const MarkerOccurrence> seq, const BIStep& s,
                          std::vector<MarkerOccurrence>& out) {
  check_bi(s, seq.size());
  out.clear();
  out.reserve(seq.size());
  auto part = [&](std::size_t from, std::size_t to) {
    out.insert(out.end(), seq.begin() + static_cast<std::ptrdiff_t>(from),
               seq.begin() + static_cast<std::ptrdiff_t>(to));
  };
  part(0, s.g1);
  part(s.g3, s.g4);
  part(s.g2, s.g3);
  part(s.g1, s.g2);
  part(s.g4, seq.size());
}

inline std::vector<MarkerOccurrence> apply_bi(std::span<const MarkerOccurrence> seq, const BIStep& s) {
  std::vector<MarkerOccurrence> out;
  apply_bi_into(seq, s, out);
  return out;
}

inline Genome apply_bi(const Genome& g, const BIStep& s) {
  if (!g.is_single_linear()) throw InvalidStep("block interchange needs a single linear chromosome");
  return Genome::linear(apply_bi(g.chromosomes.front().markers, s));
}

// Step that undoes `s` on the genome `s` produced.
inline BIStep inverse(const BIStep& s) {
  return {s.g1, s.g1 + (s.g4 - s.g3), s.g4 - (s.g2 - s.g1), s.g4};
}

struct CutSite {
  std::size_t chromosome = 0;
  std::size_t gap = 0;

  friend constexpr bool operator==(const CutSite&, const CutSite&) = default;
};

namespace detail {

struct SuccessorForm {
  std::vector<MarkerOccurrence> occurrence;  // flattened, chromosome order
  std::vector<std::size_t> offset;           // first flattened index per chromosome
  std::vector<std::size_t> cap;              // cap node per chromosome (npos if circular)
  std::vector<std::size_t> succ;             // over occurrences then caps
  std::size_t caps_begin = 0;

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  bool is_cap(std::size_t node) const noexcept { return node >= caps_begin; }
};

inline SuccessorForm to_successor(const Genome& g) {
  SuccessorForm f;
  for (const auto& c : g.chromosomes) {
    f.offset.push_back(f.occurrence.size());
    f.occurrence.insert(f.occurrence.end(), c.markers.begin(), c.markers.end());
  }
  f.caps_begin = f.occurrence.size();
  std::size_t next_cap = f.caps_begin;
  for (const auto& c : g.chromosomes) f.cap.push_back(c.is_linear() ? next_cap++ : SuccessorForm::npos);
  f.succ.assign(next_cap, SuccessorForm::npos);
  for (std::size_t k = 0; k < g.chromosomes.size(); ++k) {
    const auto& c = g.chromosomes[k];
    const std::size_t base = f.offset[k], m = c.size();
    if (c.is_linear()) {
      const std::size_t t = f.cap[k];
      f.succ[t] = m ? base : t;
      for (std::size_t i = 0; i < m; ++i) f.succ[base + i] = i + 1 < m ? base + i + 1 : t;
    } else {
      for (std::size_t i = 0; i < m; ++i) f.succ[base + i] = base + (i + 1) % m;
    }
  }
  return f;
}

// Linear chromosomes (one per cap, in cap order) come first, then circular
// ones in order of their smallest flattened node.
inline Genome from_successor(const SuccessorForm& f) {
  const std::size_t nodes = f.succ.size();
  std::vector<char> seen(nodes, 0);
  std::vector<Chromosome> linear(nodes - f.caps_begin);
  for (std::size_t t = f.caps_begin; t < nodes; ++t) {
    if (seen[t]) continue;
    seen[t] = 1;
    Chromosome* chrom = &linear[t - f.caps_begin];
    for (std::size_t v = f.succ[t]; v != t; v = f.succ[v]) {
      seen[v] = 1;
      if (f.is_cap(v)) {
        chrom = &linear[v - f.caps_begin];
        continue;
      }
      chrom->markers.push_back(f.occurrence[v]);
    }
  }
  Genome g;
  for (auto& c : linear) g.chromosomes.push_back(std::move(c));
  for (std::size_t s = 0; s < f.caps_begin; ++s) {
    if (seen[s]) continue;
    Chromosome c{Shape::circular, {}};
    for (std::size_t v = s; !seen[v]; v = f.succ[v]) {
      seen[v] = 1;
      c.markers.push_back(f.occurrence[v]);
    }
    g.chromosomes.push_back(std::move(c));
  }
  return g;
}

// Node whose successor link realizes the adjacency at `site`.
inline std::size_t left_node(const SuccessorForm& f, const Genome& g, const CutSite& site) {
  const Chromosome& c = g.chromosomes.at(site.chromosome);
  const std::size_t base = f.offset[site.chromosome], m = c.size();
  if (site.gap >= c.adjacency_count()) throw InvalidStep("cut gap out of range");
  if (c.is_linear()) return site.gap == 0 ? f.cap[site.chromosome] : base + site.gap - 1;
  return base + (site.gap + m - 1) % m;
}

}  // namespace detail

// Position of an occurrence: (chromosome, index in its marker list).
struct Locus {
  std::size_t chromosome = 0;
  std::size_t position = 0;
};

inline std::optional<Locus> find_occurrence(const Genome& g, const MarkerOccurrence& m) {
  for (std::size_t k = 0; k < g.chromosomes.size(); ++k) {
    const auto& ms = g.chromosomes[k].markers;
    for (std::size_t p = 0; p < ms.size(); ++p)
      if (ms[p] == m) return Locus{k, p};
  }
  return std::nullopt;
}

// Site of the adjacency having `m` on its left.
inline CutSite site_after(const Genome& g, const Locus& l) {
  const auto& c = g.chromosomes[l.chromosome];
  return {l.chromosome, c.is_linear() ? l.position + 1 : (l.position + 1) % c.size()};
}

// Site of the adjacency having `m` on its right.
inline CutSite site_before(const Genome&, const Locus& l) { return {l.chromosome, l.position}; }

// Finds where an adjacency with the given elements currently sits.
inline std::optional<CutSite> locate(const Genome& g, const Element& left, const Element& right) {
  if (left) {
    const auto l = find_occurrence(g, *left);
    if (!l) return std::nullopt;
    const CutSite s = site_after(g, *l);
    if (adjacency_at(g, s.chromosome, s.gap).right != right) return std::nullopt;
    return s;
  }
  if (right) {
    const auto r = find_occurrence(g, *right);
    if (!r || !g.chromosomes[r->chromosome].is_linear() || r->position != 0) return std::nullopt;
    return CutSite{r->chromosome, 0};
  }
  for (std::size_t k = 0; k < g.chromosomes.size(); ++k)
    if (g.chromosomes[k].is_linear() && g.chromosomes[k].markers.empty()) return CutSite{k, 0};
  return std::nullopt;
}

// General DCJ: cuts the adjacencies (p q) at `a` and (r s) at `b` and forms (p s), (r q).
inline Genome swap_successors(const Genome& g, const CutSite& a, const CutSite& b) {
  auto f = detail::to_successor(g);
  const std::size_t x = detail::left_node(f, g, a), y = detail::left_node(f, g, b);
  if (x == y) throw InvalidStep("a DCJ needs two different adjacencies");
  std::swap(f.succ[x], f.succ[y]);
  return detail::from_successor(f);
}

enum class DcjKind { excision, integration, general };

inline const char* to_string(DcjKind k) {
  switch (k) {
    case DcjKind::excision: return "excision";
    case DcjKind::integration: return "integration";
    case DcjKind::general: return "general";
  }
  return "general";
}

struct DCJStep {
  DcjKind kind = DcjKind::general;
  std::array<std::pair<Element, Element>, 2> cut;
  std::array<std::pair<Element, Element>, 2> formed;
};

inline DCJStep make_dcj(const Genome& g, const CutSite& a, const CutSite& b) {
  const Adjacency x = adjacency_at(g, a.chromosome, a.gap), y = adjacency_at(g, b.chromosome, b.gap);
  DCJStep s;
  s.cut = {std::pair{x.left, x.right}, std::pair{y.left, y.right}};
  s.formed = {std::pair{x.left, y.right}, std::pair{y.left, x.right}};
  const bool lin_a = g.chromosomes[a.chromosome].is_linear();
  const bool lin_b = g.chromosomes[b.chromosome].is_linear();
  if (a.chromosome == b.chromosome)
    s.kind = lin_a ? DcjKind::excision : DcjKind::general;
  else
    s.kind = lin_a != lin_b ? DcjKind::integration : DcjKind::general;
  return s;
}

inline Genome apply_dcj(const Genome& g, const DCJStep& s) {
  const auto a = locate(g, s.cut[0].first, s.cut[0].second);
  const auto b = locate(g, s.cut[1].first, s.cut[1].second);
  if (!a || !b) throw InvalidStep("DCJ cuts an adjacency that is not in the genome");
  return swap_successors(g, *a, *b);
}

// DCJ(u v): cuts (u' x) and (y v') and forms (u' v'), (y x), making (u v) a
// double-adjacency. On a single linear chromosome this excises the interval
// of (u v) as a circular chromosome.
inline DCJStep dcj_make_double_step(const Genome& g, const Adjacency& a) {
  if (a.is_telomeric()) throw InvalidStep("DCJ(u v) needs a non-telomeric adjacency");
  if (a.chromosome >= g.chromosomes.size() ||
      a.gap >= g.chromosomes[a.chromosome].adjacency_count() ||
      adjacency_at(g, a.chromosome, a.gap) != a)
    throw InvalidStep("adjacency " + to_string(a) + " is not in the genome");
  const auto u = find_occurrence(g, a.left->paralog());
  const auto v = find_occurrence(g, a.right->paralog());
  if (!u || !v) throw InvalidStep("paralog missing for " + to_string(a));
  const CutSite after_u = site_after(g, *u), before_v = site_before(g, *v);
  if (after_u == before_v)
    throw InvalidStep(to_string(a) + " is already a double-adjacency");
  return make_dcj(g, after_u, before_v);
}

inline Genome apply_dcj_make_double(const Genome& g, const Adjacency& a) {
  return apply_dcj(g, dcj_make_double_step(g, a));
}

// A BI as an excision of [g1, g3) followed by the integration of that circle
// at its former g2 boundary into gap g4.
inline std::pair<DCJStep, DCJStep> bi_to_dcj_pair(const Genome& g, const BIStep& s) {
  const auto seq = linear_markers(g);
  check_bi(s, seq.size());
  auto at = [&](std::size_t p) -> Element { return p < seq.size() ? Element{seq[p]} : Element{}; };
  auto before = [&](std::size_t gap) -> Element { return gap ? Element{seq[gap - 1]} : Element{}; };

  DCJStep excision;
  excision.kind = DcjKind::excision;
  excision.cut = {std::pair{before(s.g1), at(s.g1)}, std::pair{before(s.g3), at(s.g3)}};
  excision.formed = {std::pair{before(s.g1), at(s.g3)}, std::pair{before(s.g3), at(s.g1)}};

  // Inside the circle [g1, g3) the marker after g2-1 wraps to g1 when g2 == g3.
  const Element circle_next = s.g2 < s.g3 ? at(s.g2) : at(s.g1);
  DCJStep integration;
  integration.kind = DcjKind::integration;
  integration.cut = {std::pair{before(s.g2), circle_next}, std::pair{before(s.g4), at(s.g4)}};
  integration.formed = {std::pair{before(s.g2), at(s.g4)}, std::pair{before(s.g4), circle_next}};
  return {excision, integration};
}

}  // namespace bihalve
