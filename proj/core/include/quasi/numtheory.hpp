#pragma once

// Conical (non-negative integer) combinations, the Erdos-Graham Frobenius
// bound, and building covered strings from overlapping copies of a pattern.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quasi/text.hpp"

namespace quasi {

/// target = sum of coefficients[i] * generators[i]; verified on construction.
class ConicalWitness {
 public:
  /// Throws InternalError if the sum does not match the target.
  ConicalWitness(std::vector<std::size_t> generators,
                 std::vector<std::size_t> coefficients, std::size_t target);

  /// Strictly increasing.
  const std::vector<std::size_t>& generators() const noexcept {
    return generators_;
  }
  const std::vector<std::size_t>& coefficients() const noexcept {
    return coefficients_;
  }
  std::size_t target() const noexcept { return target_; }

  /// Recomputes the sum.
  bool verify() const;

 private:
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> coefficients_;
  std::size_t target_;
};

/// Witness for n over the generator set, or nullopt. Among all witnesses
/// the lexicographically smallest coefficient vector (generators ascending)
/// is returned. O(n * |A|) time via reachability tables.
std::optional<ConicalWitness> conical_representable(
    std::span<const std::size_t> generators, std::size_t n);

/// 2 * a_{k-1} * floor(a_k / k) - a_k for the sorted distinct set; can be
/// negative for sets containing 1. Requires |A| >= 2 and gcd(A) = 1.
std::int64_t frobenius_bound(std::span<const std::size_t> generators);

/// Like conical_representable, but for n >= 2 q^3 with gcd(A) | n a witness
/// is guaranteed; it is found by dividing out the gcd, solving, and
/// scaling back. Throws InternalError if that guarantee fails. Requires
/// max(A) <= q.
std::optional<ConicalWitness> gcd_aware_representable(
    std::span<const std::size_t> generators, std::size_t q, std::size_t n);

/// A string of the given length covered by `pattern`: start from the
/// pattern and append overlapped copies, largest period first, as many
/// times as the witness for length - |pattern| over the period set says.
/// Throws NotReachableError("length not reachable") if no witness exists.
Text construct_covered_string(const Text& pattern, std::size_t length);

}  // namespace quasi
