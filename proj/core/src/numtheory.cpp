#include "quasi/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "quasi/errors.hpp"
#include "quasi/exact.hpp"

namespace quasi {
namespace {

std::vector<std::size_t> sorted_distinct(std::span<const std::size_t> a) {
  std::vector<std::size_t> v(a.begin(), a.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t gcd_of(const std::vector<std::size_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{0},
                         [](std::size_t a, std::size_t b) {
                           return std::gcd(a, b);
                         });
}

}  // namespace

ConicalWitness::ConicalWitness(std::vector<std::size_t> generators,
                               std::vector<std::size_t> coefficients,
                               std::size_t target)
    : generators_(std::move(generators)),
      coefficients_(std::move(coefficients)),
      target_(target) {
  if (generators_.size() != coefficients_.size() || !verify()) {
    throw InternalError("conical witness does not sum to its target");
  }
}

bool ConicalWitness::verify() const {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    sum += generators_[i] * coefficients_[i];
  }
  return sum == target_;
}

std::optional<ConicalWitness> conical_representable(
    std::span<const std::size_t> generators, std::size_t n) {
  const auto gens = sorted_distinct(generators);
  if (gens.empty()) throw ParameterError("empty generator set");
  if (gens.front() == 0) throw ParameterError("generators must be positive");
  const std::size_t k = gens.size();

  // reach[j][t]: t is a conical combination of gens[j..k).
  std::vector<std::vector<bool>> reach(k + 1, std::vector<bool>(n + 1, false));
  reach[k][0] = true;
  for (std::size_t j = k; j-- > 0;) {
    for (std::size_t t = 0; t <= n; ++t) {
      reach[j][t] = reach[j + 1][t] || (t >= gens[j] && reach[j][t - gens[j]]);
    }
  }
  if (!reach[0][n]) return std::nullopt;

  // Smallest x_1 that leaves a representable remainder, then x_2, ...
  std::vector<std::size_t> coeff(k, 0);
  std::size_t rest = n;
  for (std::size_t j = 0; j < k; ++j) {
    while (!reach[j + 1][rest]) {
      rest -= gens[j];
      ++coeff[j];
    }
  }
  return ConicalWitness(gens, std::move(coeff), n);
}

std::int64_t frobenius_bound(std::span<const std::size_t> generators) {
  const auto gens = sorted_distinct(generators);
  if (gens.size() < 2) {
    throw ParameterError("frobenius_bound needs at least two generators");
  }
  if (gens.front() == 0) throw ParameterError("generators must be positive");
  if (gcd_of(gens) != 1) {
    throw ParameterError("frobenius_bound requires gcd 1");
  }
  const auto k = static_cast<std::int64_t>(gens.size());
  const auto ak = static_cast<std::int64_t>(gens[gens.size() - 1]);
  const auto ak1 = static_cast<std::int64_t>(gens[gens.size() - 2]);
  return 2 * ak1 * (ak / k) - ak;
}

std::optional<ConicalWitness> gcd_aware_representable(
    std::span<const std::size_t> generators, std::size_t q, std::size_t n) {
  const auto gens = sorted_distinct(generators);
  if (gens.empty()) throw ParameterError("empty generator set");
  if (gens.front() == 0) throw ParameterError("generators must be positive");
  if (gens.back() > q) throw ParameterError("generator exceeds bound q");

  const std::size_t g = gcd_of(gens);
  if (n % g != 0) return std::nullopt;
  if (n < 2 * q * q * q) return conical_representable(gens, n);

  std::vector<std::size_t> reduced(gens.size());
  std::transform(gens.begin(), gens.end(), reduced.begin(),
                 [g](std::size_t a) { return a / g; });
  auto scaled = conical_representable(reduced, n / g);
  if (!scaled) {
    throw InternalError("no conical combination for n = " + std::to_string(n) +
                        " >= 2q^3 despite gcd divisibility");
  }
  return ConicalWitness(gens, scaled->coefficients(), n);
}

Text construct_covered_string(const Text& pattern, std::size_t length) {
  const std::size_t q = pattern.size();
  const PeriodSet periods = period_set(pattern);
  if (length < q) throw NotReachableError("length not reachable");

  // q is a period, so gcd | length and gcd | length - q coincide.
  const std::size_t g = periods.gcd();
  if ((length % g == 0) != ((length - q) % g == 0)) {
    throw InternalError("gcd of the period set does not divide |C|");
  }

  const auto witness =
      gcd_aware_representable(periods.periods(), q, length - q);
  if (!witness) throw NotReachableError("length not reachable");

  std::vector<Letter> out(pattern.begin(), pattern.end());
  out.reserve(length);
  const auto& gens = witness->generators();
  const auto& coeff = witness->coefficients();
  for (std::size_t j = gens.size(); j-- > 0;) {
    for (std::size_t rep = 0; rep < coeff[j]; ++rep) {
      out.insert(out.end(), pattern.end() - static_cast<std::ptrdiff_t>(gens[j]),
                 pattern.end());
    }
  }
  return Text(std::move(out), pattern.sigma());
}

}  // namespace quasi
