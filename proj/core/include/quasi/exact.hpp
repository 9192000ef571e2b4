#pragma once

// Exact (linear or brute-force) string algorithms: borders, periods,
// occurrences, covers and seeds. Everything else in the library is checked
// against these.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "quasi/text.hpp"

namespace quasi {

/// The set of periods of a pattern, with their gcd.
class PeriodSet {
 public:
  /// Ascending; the last element is always the pattern length.
  const std::vector<std::size_t>& periods() const noexcept { return periods_; }
  std::size_t gcd() const noexcept { return gcd_; }
  std::size_t pattern_length() const noexcept { return periods_.back(); }
  bool contains(std::size_t p) const;

  friend bool operator==(const PeriodSet&, const PeriodSet&) = default;

 private:
  friend PeriodSet period_set(std::span<const Letter> pattern);
  explicit PeriodSet(std::vector<std::size_t> periods);

  std::vector<std::size_t> periods_;
  std::size_t gcd_ = 1;
};

/// Start positions of a pattern, 1-based, strictly increasing.
struct OccurrenceList {
  std::size_t pattern_length = 0;
  std::vector<std::size_t> positions;

  bool empty() const noexcept { return positions.empty(); }
  std::size_t size() const noexcept { return positions.size(); }
};

/// Knuth-Morris-Pratt failure function: entry i is the length of the
/// longest proper border of s[0..i].
std::vector<std::size_t> prefix_function(std::span<const Letter> s);

/// Throws ParameterError("empty pattern") for an empty pattern.
PeriodSet period_set(std::span<const Letter> pattern);

/// Border lengths b in [1, q], ascending. Requires 1 <= q <= |s|.
std::vector<std::size_t> borders_up_to(std::span<const Letter> s,
                                       std::size_t q);

/// Every occurrence of pattern in s. Positions are reported as
/// `first_position` plus the 0-based offset, so callers working on a
/// fragment can pass the fragment's global start. A pattern longer than s
/// yields an empty list.
OccurrenceList occurrences(std::span<const Letter> pattern,
                           std::span<const Letter> s,
                           std::size_t first_position = 1);

/// Every position of s lies inside an occurrence of pattern.
/// Requires 1 <= |pattern| <= |s|.
bool is_cover(std::span<const Letter> pattern, std::span<const Letter> s);

/// Lengths c such that s[1..c] covers s, ascending; includes |s|.
std::vector<std::size_t> all_covers(std::span<const Letter> s);

std::size_t shortest_cover(std::span<const Letter> s);

/// Pattern covers some X.s.Y. Linear time: full occurrences plus the best
/// left overhang (a suffix of the pattern that is a prefix of s) and the
/// best right overhang (a prefix of the pattern that is a suffix of s) must
/// tile s without gaps. Requires 1 <= |pattern| <= |s|.
bool is_seed(std::span<const Letter> pattern, std::span<const Letter> s);

/// Reference seed check: tries every X = pattern[1..a], Y = the last b
/// letters of the pattern, a, b in [0, |pattern|], and asks is_cover on
/// X.s.Y. O(q^2 (n + q)).
bool is_seed_bruteforce(std::span<const Letter> pattern,
                        std::span<const Letter> s);

/// All distinct seeds of s of length at most q, sorted. Seeds with a full
/// occurrence are substrings of s; when |s| < 2q a seed may also be made of
/// a left overhang and a right overhang only, and those are enumerated too.
std::vector<Text> seeds_up_to(const Text& s, std::size_t q);

}  // namespace quasi
