#pragma once

// Hamming distance from a text to the strings covered (or seeded) by short
// patterns, plus generators of coverable and certified far instances.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasi/random.hpp"
#include "quasi/text.hpp"

namespace quasi {

/// Hamming distance; nullopt is "infinite" (no string of that length is
/// covered by the pattern at all).
using Distance = std::optional<std::size_t>;
inline constexpr Distance kInfiniteDistance = std::nullopt;

std::string to_string(const Distance& d);

/// Minimum Hamming distance from s to a length-|s| string covered by the
/// pattern. DP over occurrence chains 1 = p_1 < ... < p_k = n - q + 1 whose
/// gaps are periods of the pattern. With verify_overlaps the DP also
/// re-checks that each overlapped copy agrees with the letters it overlaps.
/// Requires 1 <= |pattern| <= |s|.
Distance dist_to_cover(const Text& s, const Text& pattern,
                       bool verify_overlaps = false);

/// Minimum Hamming distance from s to a length-|s| string that has the
/// pattern as a seed. The chain may start up to |pattern| - 1 positions
/// before s and end past it; only letters inside s are charged. Always
/// finite. Requires 1 <= |pattern| <= |s|.
std::size_t dist_to_seed(const Text& s, const Text& pattern);

/// Outcome of exhaustive enumeration of every pattern in [sigma]^c, c <= q.
struct FarnessCertificate {
  Text text;
  std::size_t q = 0;
  Letter sigma = 0;
  std::size_t distance_lower_bound = 0;
  std::vector<std::pair<Text, Distance>> per_candidate;
};

inline constexpr std::size_t kDefaultEnumerationBudget = 100000;

/// Distance from s to Q(q), the strings with a quasiperiod at most q.
/// Throws BudgetError if sum of sigma^c over c in [1, q] exceeds budget.
FarnessCertificate dist_to_Q(const Text& s, std::size_t q, Letter sigma,
                             std::size_t budget = kDefaultEnumerationBudget);

/// Same enumeration against seeds: distance from s to the strings that have
/// a seed of length at most q.
FarnessCertificate dist_to_seeded(
    const Text& s, std::size_t q, Letter sigma,
    std::size_t budget = kDefaultEnumerationBudget);

/// Line format: "certificate n=<n> q=<q> sigma=<sigma> bound=<bound>", then
/// a "candidate,distance" header, then one row per pattern with the
/// pattern's letters space-separated and the distance as an integer or
/// "inf". The text itself is not serialised.
void write_certificate(std::ostream& os, const FarnessCertificate& cert);
FarnessCertificate read_certificate(std::istream& is);

/// Random string of length n covered by the pattern: a random chain of
/// overlapped copies, each gap drawn uniformly among the periods that keep
/// the remaining length reachable. Throws NotReachableError otherwise.
Text gen_coverable(const Text& pattern, std::size_t n, Rng& rng);

/// Uniform random text over [sigma]^n.
Text gen_uniform(std::size_t n, Letter sigma, Rng& rng);

inline constexpr std::size_t kDefaultFarAttempts = 64;

/// Rejection-samples uniform texts until dist_to_Q >= ceil(epsilon * n).
/// Throws GenerationError (carrying the best distance) when attempts run
/// out and ParameterError for sigma = 1.
FarnessCertificate gen_far(std::size_t q, Letter sigma, std::size_t n,
                           double epsilon, Rng& rng,
                           std::size_t max_attempts = kDefaultFarAttempts);

/// gen_far against dist_to_seeded.
FarnessCertificate gen_seed_far(std::size_t q, Letter sigma, std::size_t n,
                                double epsilon, Rng& rng,
                                std::size_t max_attempts = kDefaultFarAttempts);

/// ceil(epsilon * n), the distance an epsilon-far text must reach.
std::size_t far_threshold(double epsilon, std::size_t n);

}  // namespace quasi
