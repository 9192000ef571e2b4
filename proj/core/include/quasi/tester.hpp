#pragma once

// Sublinear-query testers for "has a cover (or seed) of length at most q".
//
// The text is reachable only through a QueryOracle. The testers sample
// fragments of length 4q^3 from a fixed decomposition whose fragments start
// every 2q^3 positions, read them, read the endpoints, and keep the
// candidates that are consistent on every sampled fragment. A text with a
// short cover (seed) is always accepted; a text that is epsilon-far from
// every such text is rejected with probability at least 3/4.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "quasi/text.hpp"

namespace quasi {

/// Positional access to a hidden text that counts every query.
class QueryOracle {
 public:
  /// Letter at a 1-based position.
  using Source = std::function<Letter(std::size_t)>;

  explicit QueryOracle(Text hidden);
  QueryOracle(std::size_t length, Source source);

  std::size_t size() const noexcept { return length_; }

  /// Letter at a 1-based position; throws ParameterError if out of range.
  Letter query(std::size_t position);

  std::size_t query_count() const noexcept { return count_; }

  void enable_log(bool on = true) { logging_ = on; }
  /// Positions in the order they were queried (only while logging).
  const std::vector<std::size_t>& access_log() const noexcept { return log_; }

 private:
  std::size_t length_;
  Source source_;
  std::size_t count_ = 0;
  bool logging_ = false;
  std::vector<std::size_t> log_;
};

struct FragmentSpec {
  std::size_t index = 0;         // 1-based
  std::size_t global_start = 0;  // 1-based
  std::size_t length = 0;

  std::size_t global_end() const noexcept { return global_start + length - 1; }
  friend bool operator==(const FragmentSpec&, const FragmentSpec&) = default;
};

/// Fragment i starts at 1 + (i-1) * 2q^3 and has length
/// min(4q^3, n - start + 1), for every start <= n.
std::vector<FragmentSpec> fragment_decomposition(std::size_t n, std::size_t q);

struct TesterConfig {
  std::size_t q = 1;
  std::size_t n = 0;
  double epsilon = 1.0;
  std::uint64_t rng_seed = 0;

  /// max(1, ceil(24 * log2(max(q, 2)) / epsilon)).
  std::size_t sample_count() const;
  /// (sample_count() + 1) * 4q^3 + 2q.
  std::size_t query_bound() const;
  /// Throws ParameterError unless 1 <= q < n and 0 < epsilon <= 1.
  void validate() const;
};

enum class Answer { kNo, kYes };

std::string to_string(Answer a);

struct Verdict {
  Answer answer = Answer::kNo;
  std::size_t queries_used = 0;
  /// Lengths of the candidates consistent on every sampled fragment.
  std::vector<std::size_t> surviving_candidates;
  /// Seed tester only: the surviving candidate strings themselves.
  std::vector<Text> surviving_seeds;
  /// Decomposition indices drawn, in draw order (with repetitions).
  std::vector<std::size_t> sampled_fragment_indices;
  /// True when n <= 4q^3 and the whole text was read.
  bool exhaustive = false;
};

/// Fragment of which the candidate is a seed and whose occurrences of the
/// candidate (fully inside, at global position p) all satisfy
/// gcd(periods) | p - 1. A fragment shorter than the candidate is not
/// consistent.
bool is_consistent(std::span<const Letter> candidate,
                   std::span<const Letter> fragment, std::size_t global_start);

/// Seed-tester consistency. A seed may hang over the text boundary by an
/// unknown amount, so the gcd condition is only required up to a common
/// shift: all occurrences across all sampled fragments must agree on
/// (p - 1) mod gcd(periods).
struct SeedConsistency {
  bool seed = false;
  /// allowed_residues[r]: every occurrence seen so far has (p - 1) mod gcd
  /// equal to r.
  std::vector<bool> allowed_residues;
};

/// Folds one fragment into the running residue set. Pass an empty vector
/// for the first fragment.
SeedConsistency seed_consistency(std::span<const Letter> candidate,
                                 std::span<const Letter> fragment,
                                 std::size_t global_start,
                                 std::vector<bool> allowed_residues);

/// Does the text have a cover of length <= q? One-sided: always YES when it
/// does. Throws InternalError if the query bound is ever exceeded.
Verdict run_cover_tester(const TesterConfig& config, QueryOracle& oracle);

/// Does the text have a seed of length <= q? Candidates are the distinct
/// substrings of S[1..2q] of length at most q.
Verdict run_seed_tester(const TesterConfig& config, QueryOracle& oracle);

}  // namespace quasi
