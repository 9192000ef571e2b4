#include "quasi/farness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "quasi/errors.hpp"
#include "quasi/exact.hpp"

namespace quasi {
namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

void require_fits(const Text& s, const Text& pattern) {
  if (pattern.empty()) throw ParameterError("empty pattern");
  if (pattern.size() > s.size()) {
    throw ParameterError("pattern longer than text");
  }
}

// Calls visit(pattern) for every pattern in [sigma]^c, c in [1, q], in
// length-then-lexicographic order.
template <typename Visit>
void for_each_pattern(std::size_t q, Letter sigma, std::size_t budget,
                      Visit visit) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t c = 1; c <= q; ++c) {
    if (layer > budget / sigma + 1) {
      throw BudgetError("candidate enumeration over [sigma]^{<=q} exceeds "
                        "budget; reduce sigma or q");
    }
    layer *= sigma;
    total += layer;
    if (total > budget) {
      throw BudgetError("candidate enumeration over [sigma]^{<=q} needs " +
                        std::to_string(total) + "+ patterns, budget is " +
                        std::to_string(budget) + "; reduce sigma or q");
    }
  }
  for (std::size_t c = 1; c <= q; ++c) {
    std::vector<Letter> letters(c, 1);
    while (true) {
      visit(Text(letters, sigma));
      std::size_t i = c;
      while (i > 0 && letters[i - 1] == sigma) letters[--i] = 1;
      if (i == 0) break;
      ++letters[i - 1];
    }
  }
}

template <typename Dist>
FarnessCertificate enumerate(const Text& s, std::size_t q, Letter sigma,
                             std::size_t budget, Dist dist) {
  if (q < 1) throw ParameterError("q must be positive");
  if (sigma < 1) throw ParameterError("sigma must be positive");
  if (s.sigma() > sigma) {
    for (Letter l : s) {
      if (l > sigma) throw ParameterError("text uses letters beyond sigma");
    }
  }
  FarnessCertificate cert;
  cert.text = s;
  cert.q = q;
  cert.sigma = sigma;
  std::size_t best = kUnset;
  for_each_pattern(std::min(q, s.size()), sigma, budget,
                   [&](const Text& pattern) {
                     Distance d = dist(s, pattern);
                     if (d) best = std::min(best, *d);
                     cert.per_candidate.emplace_back(pattern, d);
                   });
  cert.distance_lower_bound = best;
  return cert;
}

template <typename Certify>
FarnessCertificate rejection_sample(std::size_t q, Letter sigma,
                                    std::size_t n, double epsilon, Rng& rng,
                                    std::size_t max_attempts,
                                    Certify certify) {
  if (sigma < 2) {
    throw ParameterError(
        "sigma = 1: every unary string has quasiperiod 1, no far instance "
        "exists");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ParameterError("epsilon must lie in [0, 1]");
  }
  if (q < 1 || q > n) throw ParameterError("need 1 <= q <= n");
  const std::size_t threshold = far_threshold(epsilon, n);
  std::size_t best = 0;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    auto cert = certify(gen_uniform(n, sigma, rng));
    if (cert.distance_lower_bound >= threshold) return cert;
    best = std::max(best, cert.distance_lower_bound);
  }
  throw GenerationError("no instance at distance >= " +
                            std::to_string(threshold) + " after " +
                            std::to_string(max_attempts) +
                            " attempts; best distance " + std::to_string(best),
                        best);
}

}  // namespace

std::string to_string(const Distance& d) {
  return d ? std::to_string(*d) : std::string("inf");
}

Distance dist_to_cover(const Text& s, const Text& pattern,
                       bool verify_overlaps) {
  require_fits(s, pattern);
  const std::size_t n = s.size();
  const std::size_t q = pattern.size();
  const PeriodSet periods = period_set(pattern);

  if (verify_overlaps) {
    for (std::size_t d : periods.periods()) {
      for (std::size_t i = 0; i + d < q; ++i) {
        if (pattern[i + d] != pattern[i]) {
          throw InternalError("overlapped copies disagree");
        }
      }
    }
  }

  // f[p]: cheapest chain whose last copy starts at 0-based offset p.
  std::vector<std::size_t> f(n - q + 1, kUnset);
  f[0] = hamming(s.letters().first(q), pattern);
  for (std::size_t to = 1; to < f.size(); ++to) {
    for (std::size_t delta : periods.periods()) {
      if (delta > to || f[to - delta] == kUnset) continue;
      // The copy at `to` newly determines s[to-delta+q, to+q), matched
      // against the last delta letters of the pattern.
      std::size_t cost = f[to - delta];
      const std::size_t first_new = to - delta + q;
      for (std::size_t j = 0; j < delta; ++j) {
        cost += s[first_new + j] != pattern[q - delta + j];
      }
      f[to] = std::min(f[to], cost);
    }
  }
  if (f.back() == kUnset) return kInfiniteDistance;
  return f.back();
}

std::size_t dist_to_seed(const Text& s, const Text& pattern) {
  require_fits(s, pattern);
  const auto n = static_cast<std::int64_t>(s.size());
  const auto c = static_cast<std::int64_t>(pattern.size());
  const PeriodSet periods = period_set(pattern);

  // Copy starts range over [-(c-1), n-1]; slot = start + c - 1.
  const std::int64_t lo = -(c - 1);
  std::vector<std::size_t> f(static_cast<std::size_t>(n + c - 1), kUnset);
  auto slot = [&](std::int64_t start) {
    return static_cast<std::size_t>(start - lo);
  };
  auto charge = [&](std::int64_t start, std::int64_t from, std::int64_t to) {
    // Mismatches of the copy at `start` over text positions [from, to).
    std::size_t cost = 0;
    for (std::int64_t j = std::max<std::int64_t>(from, 0);
         j < std::min(to, n); ++j) {
      cost += s[static_cast<std::size_t>(j)] !=
              pattern[static_cast<std::size_t>(j - start)];
    }
    return cost;
  };

  for (std::int64_t start = lo; start < n; ++start) {
    std::size_t best = start <= 0 ? charge(start, start, start + c) : kUnset;
    for (std::size_t d : periods.periods()) {
      const auto delta = static_cast<std::int64_t>(d);
      const std::int64_t prev = start - delta;
      if (prev < lo || f[slot(prev)] == kUnset) continue;
      best = std::min(best, f[slot(prev)] +
                                charge(start, prev + c, start + c));
    }
    f[slot(start)] = best;
  }
  std::size_t best = kUnset;
  for (std::int64_t start = std::max(lo, n - c); start < n; ++start) {
    best = std::min(best, f[slot(start)]);
  }
  return best;
}

FarnessCertificate dist_to_Q(const Text& s, std::size_t q, Letter sigma,
                             std::size_t budget) {
  return enumerate(s, q, sigma, budget, [](const Text& t, const Text& c) {
    return dist_to_cover(t, c);
  });
}

FarnessCertificate dist_to_seeded(const Text& s, std::size_t q, Letter sigma,
                                  std::size_t budget) {
  return enumerate(s, q, sigma, budget, [](const Text& t, const Text& c) {
    return Distance(dist_to_seed(t, c));
  });
}

void write_certificate(std::ostream& os, const FarnessCertificate& cert) {
  os << "certificate n=" << cert.text.size() << " q=" << cert.q
     << " sigma=" << cert.sigma << " bound=" << cert.distance_lower_bound
     << '\n';
  os << "candidate,distance\n";
  for (const auto& [pattern, d] : cert.per_candidate) {
    os << pattern.to_ints() << ',' << to_string(d) << '\n';
  }
}

FarnessCertificate read_certificate(std::istream& is) {
  FarnessCertificate cert;
  std::string line;
  if (!std::getline(is, line)) throw ParameterError("empty certificate");
  std::size_t n = 0;
  unsigned long long sigma = 0;
  if (std::sscanf(line.c_str(), "certificate n=%zu q=%zu sigma=%llu bound=%zu",
                  &n, &cert.q, &sigma, &cert.distance_lower_bound) != 4) {
    throw ParameterError("malformed certificate header: " + line);
  }
  cert.sigma = static_cast<Letter>(sigma);
  if (!std::getline(is, line) || line != "candidate,distance") {
    throw ParameterError("missing certificate column header");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos) {
      throw ParameterError("malformed certificate row: " + line);
    }
    std::istringstream letters_in(line.substr(0, comma));
    std::vector<Letter> letters;
    for (Letter l; letters_in >> l;) letters.push_back(l);
    const std::string dist = line.substr(comma + 1);
    Distance d = dist == "inf" ? kInfiniteDistance
                               : Distance(std::stoull(dist));
    cert.per_candidate.emplace_back(Text(std::move(letters), cert.sigma), d);
  }
  // The text is not serialised; keep its length for the round trip.
  cert.text = Text(std::vector<Letter>(n, 1), std::max<Letter>(cert.sigma, 1));
  return cert;
}

Text gen_coverable(const Text& pattern, std::size_t n, Rng& rng) {
  if (pattern.empty()) throw ParameterError("empty pattern");
  const std::size_t q = pattern.size();
  const PeriodSet periods = period_set(pattern);
  if (n < q) throw NotReachableError("length shorter than the pattern");
  const std::size_t extra = n - q;
  std::vector<bool> reach(extra + 1, false);
  reach[0] = true;
  for (std::size_t t = 1; t <= extra; ++t) {
    for (std::size_t d : periods.periods()) {
      if (d <= t && reach[t - d]) {
        reach[t] = true;
        break;
      }
    }
  }
  if (!reach[extra]) {
    throw NotReachableError(
        "length " + std::to_string(n) + " not reachable: gcd of the period "
        "set (" + std::to_string(periods.gcd()) + ") does not divide n - |C| "
        "= " + std::to_string(extra) + ", or n - |C| is below the Frobenius "
        "threshold");
  }
  std::vector<Letter> out(pattern.begin(), pattern.end());
  out.reserve(n);
  std::vector<std::size_t> options;
  for (std::size_t rest = extra; rest > 0;) {
    options.clear();
    for (std::size_t d : periods.periods()) {
      if (d <= rest && reach[rest - d]) options.push_back(d);
    }
    const std::size_t d = options[uniform_below(rng, options.size())];
    out.insert(out.end(), pattern.end() - static_cast<std::ptrdiff_t>(d),
               pattern.end());
    rest -= d;
  }
  return Text(std::move(out), pattern.sigma());
}

Text gen_uniform(std::size_t n, Letter sigma, Rng& rng) {
  if (sigma < 1) throw ParameterError("sigma must be positive");
  std::vector<Letter> letters(n);
  for (auto& l : letters) l = static_cast<Letter>(1 + uniform_below(rng, sigma));
  return Text(std::move(letters), sigma);
}

std::size_t far_threshold(double epsilon, std::size_t n) {
  return static_cast<std::size_t>(std::ceil(epsilon * static_cast<double>(n)));
}

FarnessCertificate gen_far(std::size_t q, Letter sigma, std::size_t n,
                           double epsilon, Rng& rng,
                           std::size_t max_attempts) {
  return rejection_sample(q, sigma, n, epsilon, rng, max_attempts,
                          [&](const Text& t) { return dist_to_Q(t, q, sigma); });
}

FarnessCertificate gen_seed_far(std::size_t q, Letter sigma, std::size_t n,
                                double epsilon, Rng& rng,
                                std::size_t max_attempts) {
  return rejection_sample(
      q, sigma, n, epsilon, rng, max_attempts,
      [&](const Text& t) { return dist_to_seeded(t, q, sigma); });
}

}  // namespace quasi
