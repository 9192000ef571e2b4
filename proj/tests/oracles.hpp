#pragma once

// Definition-level brute force used only by the tests. Nothing here calls
// into the library's algorithms except where noted, so a bug in the
// library cannot hide behind the oracle.

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "quasi/random.hpp"
#include "quasi/text.hpp"

namespace quasi::oracle {

inline std::vector<std::size_t> periods_by_definition(
    std::span<const Letter> c) {
  std::vector<std::size_t> out;
  for (std::size_t p = 1; p <= c.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < c.size() && ok; ++i) ok = c[i] == c[i + p];
    if (ok) out.push_back(p);
  }
  return out;
}

inline std::vector<std::size_t> borders_by_definition(
    std::span<const Letter> s, std::size_t q) {
  std::vector<std::size_t> out;
  for (std::size_t b = 1; b <= q; ++b) {
    bool ok = true;
    for (std::size_t i = 0; i < b && ok; ++i) ok = s[i] == s[s.size() - b + i];
    if (ok) out.push_back(b);
  }
  return out;
}

inline std::vector<std::size_t> naive_occurrences(std::span<const Letter> c,
                                                  std::span<const Letter> s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + c.size() <= s.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < c.size() && ok; ++j) ok = s[i + j] == c[j];
    if (ok) out.push_back(i + 1);
  }
  return out;
}

/// Every position i has an occurrence starting in [max(i-|C|+1, 1), i].
inline bool covers_by_definition(std::span<const Letter> c,
                                 std::span<const Letter> s) {
  const auto occ = naive_occurrences(c, s);
  const std::set<std::size_t> starts(occ.begin(), occ.end());
  for (std::size_t i = 1; i <= s.size(); ++i) {
    bool hit = false;
    const std::size_t lo = i >= c.size() ? i - c.size() + 1 : 1;
    for (std::size_t p = lo; p <= i && !hit; ++p) hit = starts.count(p) > 0;
    if (!hit) return false;
  }
  return true;
}

/// Calls visit on every string in [sigma]^n.
inline void for_each_string(std::size_t n, Letter sigma,
                            const std::function<void(const std::vector<Letter>&)>& visit) {
  std::vector<Letter> w(n, 1);
  while (true) {
    visit(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == sigma) w[--i] = 1;
    if (i == 0) return;
    ++w[i - 1];
  }
}

/// C covers X.s.Y for some arbitrary X, Y over [sigma] of length <= |C|.
inline bool seed_by_definition(std::span<const Letter> c,
                               std::span<const Letter> s, Letter sigma) {
  const std::size_t q = c.size();
  for (std::size_t a = 0; a <= q; ++a) {
    for (std::size_t b = 0; b <= q; ++b) {
      bool found = false;
      for_each_string(a + b, sigma, [&](const std::vector<Letter>& xy) {
        if (found) return;
        std::vector<Letter> t(xy.begin(), xy.begin() + a);
        t.insert(t.end(), s.begin(), s.end());
        t.insert(t.end(), xy.begin() + a, xy.end());
        found = covers_by_definition(c, t);
      });
      if (found) return true;
    }
  }
  return false;
}

inline bool representable_by_table(const std::vector<std::size_t>& gens,
                                   std::size_t n) {
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (std::size_t t = 1; t <= n; ++t) {
    for (std::size_t a : gens) {
      if (a <= t && reach[t - a]) {
        reach[t] = true;
        break;
      }
    }
  }
  return reach[n];
}

inline std::size_t hamming_of(std::span<const Letter> a,
                              std::span<const Letter> b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

/// Enumerates every chain of copies of c starting at offset 0 whose gaps are
/// at most |c| and whose copies agree on overlaps, ending flush at n.
inline std::optional<std::size_t> dist_by_placements(
    std::span<const Letter> s, std::span<const Letter> c) {
  const std::size_t n = s.size();
  const std::size_t q = c.size();
  std::optional<std::size_t> best;
  std::vector<Letter> built;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (start + q == n) {
      const std::size_t d = hamming_of(s, built);
      if (!best || d < *best) best = d;
      return;
    }
    for (std::size_t gap = 1; gap <= q && start + gap + q <= n; ++gap) {
      // The new copy overlaps the last q - gap letters already placed.
      bool agree = true;
      for (std::size_t i = 0; i < q - gap && agree; ++i) {
        agree = built[start + gap + i] == c[i];
      }
      if (!agree) continue;
      const std::size_t keep = built.size();
      built.insert(built.end(), c.end() - static_cast<std::ptrdiff_t>(gap),
                   c.end());
      extend(start + gap);
      built.resize(keep);
    }
  };
  built.assign(c.begin(), c.end());
  extend(0);
  return best;
}

inline Text random_text(Rng& rng, std::size_t n, Letter sigma) {
  std::vector<Letter> w(n);
  for (auto& l : w) l = static_cast<Letter>(1 + uniform_below(rng, sigma));
  return Text(std::move(w), sigma);
}

}  // namespace quasi::oracle
