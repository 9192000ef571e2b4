#pragma once

// One-pass shortest cover of length at most q in O(q) letters of memory.
//
// The stream is cut into fragments of length 4q whose starts are 2q apart.
// A prefix P[1..c] of the first q letters is a cover of the whole stream iff
// it is a seed of every fragment and a border of the stream; the first
// condition is checked as fragments complete, the second at the end from
// P, a sentinel and the last q letters.

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "quasi/text.hpp"

namespace quasi {

class CoverStream {
 public:
  /// Throws ParameterError for q = 0.
  explicit CoverStream(std::size_t q);

  void push(Letter letter);

  /// Shortest cover length <= q, or nullopt. Throws ParameterError if fewer
  /// than q letters arrived and UsageError on a second call.
  std::optional<std::size_t> finalize();

  std::size_t q() const noexcept { return q_; }
  std::size_t letters_seen() const noexcept { return seen_; }
  bool finalized() const noexcept { return finalized_; }

  /// Candidate lengths c in [1, q] still alive, ascending.
  std::vector<std::size_t> survivors() const;

  /// Letters currently held (prefix plus window).
  std::size_t buffered() const noexcept { return prefix_.size() + window_.size(); }
  std::size_t peak_buffered() const noexcept { return peak_; }
  /// Number of fragment seed checks run so far.
  std::size_t fragments_checked() const noexcept { return fragments_checked_; }

 private:
  void check_fragment();

  std::size_t q_;
  std::vector<Letter> prefix_;
  std::vector<bool> alive_;  // alive_[c] for c in [1, q]
  // Current fragment; holds at most 4q letters and drops its first 2q
  // after each completed fragment.
  std::vector<Letter> window_;
  std::size_t seen_ = 0;
  std::size_t last_checked_end_ = 0;
  std::unordered_map<Letter, Letter> letter_table_;
  bool dead_ = false;
  bool finalized_ = false;
  std::size_t peak_ = 0;
  std::size_t fragments_checked_ = 0;
};

/// Convenience: push every letter of s and finalize.
std::optional<std::size_t> stream_shortest_cover(std::span<const Letter> s,
                                                 std::size_t q);

}  // namespace quasi
