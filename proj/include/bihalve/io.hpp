#pragma once

// Text formats.
//
// Genome file: one chromosome per line, `linear: <tok> ...` or
// `circular: <tok> ...`, where a token is a decimal id with an optional
// trailing `'` for copy 1. `#` starts a comment; blank lines are ignored.
//
// Scenario file: one `bi <g1> <g2> <g3> <g4>` line per step (0-based gaps
// in the genome at that step), with the same comment rules.

#include <charconv>
#include <sstream>

#include "bihalve/genome.hpp"
#include "bihalve/rearrangement.hpp"

namespace bihalve {

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Calls fn(line_number, content) for each non-blank line with comments removed.
template <class Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) fn(line_no, line);
  }
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace detail

inline MarkerOccurrence parse_marker(std::string_view tok, std::size_t line = 0) {
  MarkerOccurrence m;
  std::string_view digits = tok;
  if (!digits.empty() && digits.back() == '\'') {
    m.copy = 1;
    digits.remove_suffix(1);
  }
  if (!detail::parse_number(digits, m.id) || m.id == 0)
    throw ParseError(line, "malformed marker token '" + std::string(tok) + "'");
  return m;
}

// Parses and validates a genome; copy flags are kept as written.
inline Genome parse_genome(std::string_view text) {
  Genome g;
  std::unordered_map<std::uint32_t, std::pair<std::size_t, std::uint8_t>> first_seen;  // line, copy
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(line_no, "expected 'linear:' or 'circular:'");
    const auto kind = detail::trim(line.substr(0, colon));
    Chromosome c;
    if (kind == "linear")
      c.shape = Shape::linear;
    else if (kind == "circular")
      c.shape = Shape::circular;
    else
      throw ParseError(line_no, "unknown chromosome kind '" + std::string(kind) + "'");
    for (const auto tok : detail::split_ws(line.substr(colon + 1))) {
      const MarkerOccurrence m = parse_marker(tok, line_no);
      auto [it, fresh] = first_seen.try_emplace(m.id, line_no, m.copy);
      if (!fresh && it->second.second == m.copy)
        throw ParseError(line_no, "both occurrences of marker " + std::to_string(m.id) +
                                      " carry the same copy flag");
      c.markers.push_back(m);
    }
    if (!c.is_linear() && c.markers.empty()) throw ParseError(line_no, "empty circular chromosome");
    g.chromosomes.push_back(std::move(c));
  });
  if (g.chromosomes.empty()) throw ParseError(0, "no chromosome found");
  validate(g);
  return g;
}

inline std::string format_chromosome(const Chromosome& c) {
  std::string out = c.is_linear() ? "linear:" : "circular:";
  for (const auto& m : c.markers) out += " " + to_string(m);
  return out;
}

inline std::string format_genome(const Genome& g) {
  std::string out;
  for (const auto& c : g.chromosomes) out += format_chromosome(c) + "\n";
  return out;
}

// Single-line rendering, as in "(o 1 2' o)(3 4)".
inline std::string to_string(const Genome& g) {
  std::string out;
  for (const auto& c : g.chromosomes) {
    out += c.is_linear() ? "(o" : "(";
    bool first = !c.is_linear();
    for (const auto& m : c.markers) {
      if (!first) out += ' ';
      first = false;
      out += to_string(m);
    }
    out += c.is_linear() ? " o)" : ")";
  }
  return out;
}

inline std::vector<BIStep> parse_scenario(std::string_view text) {
  std::vector<BIStep> steps;
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto toks = detail::split_ws(line);
    if (toks.size() != 5 || toks[0] != "bi")
      throw ParseError(line_no, "expected 'bi <g1> <g2> <g3> <g4>'");
    BIStep s;
    std::size_t* fields[] = {&s.g1, &s.g2, &s.g3, &s.g4};
    for (std::size_t k = 0; k < 4; ++k)
      if (!detail::parse_number(toks[k + 1], *fields[k]))
        throw ParseError(line_no, "malformed gap '" + std::string(toks[k + 1]) + "'");
    steps.push_back(s);
  });
  return steps;
}

inline std::string format_scenario(std::span<const BIStep> steps) {
  std::string out;
  for (const auto& s : steps) out += to_string(s) + "\n";
  return out;
}

}  // namespace bihalve
