#include "quasi/exact.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "quasi/errors.hpp"

namespace quasi {
namespace {

// Length of the longest suffix of `text` that is a prefix of `pattern`,
// given the pattern's failure function.
std::size_t longest_suffix_prefix(std::span<const Letter> pattern,
                                  const std::vector<std::size_t>& fail,
                                  std::span<const Letter> text) {
  std::size_t k = 0;
  for (Letter x : text) {
    while (k > 0 && (k == pattern.size() || pattern[k] != x)) k = fail[k - 1];
    if (k < pattern.size() && pattern[k] == x) ++k;
  }
  return k;
}

void require_pattern_fits(std::span<const Letter> pattern,
                          std::span<const Letter> s) {
  if (pattern.empty()) throw ParameterError("empty pattern");
  if (pattern.size() > s.size()) {
    throw ParameterError("pattern longer than text");
  }
}

}  // namespace

PeriodSet::PeriodSet(std::vector<std::size_t> periods)
    : periods_(std::move(periods)) {
  gcd_ = std::accumulate(periods_.begin(), periods_.end(), std::size_t{0},
                         [](std::size_t a, std::size_t b) {
                           return std::gcd(a, b);
                         });
}

bool PeriodSet::contains(std::size_t p) const {
  return std::binary_search(periods_.begin(), periods_.end(), p);
}

std::vector<std::size_t> prefix_function(std::span<const Letter> s) {
  std::vector<std::size_t> fail(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && s[i] != s[k]) k = fail[k - 1];
    if (s[i] == s[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

PeriodSet period_set(std::span<const Letter> pattern) {
  if (pattern.empty()) throw ParameterError("empty pattern");
  const auto fail = prefix_function(pattern);
  const std::size_t q = pattern.size();
  // p is a period iff q - p is a border (0 counts).
  std::vector<std::size_t> periods;
  for (std::size_t b = fail[q - 1]; b > 0; b = fail[b - 1]) {
    periods.push_back(q - b);
  }
  periods.push_back(q);
  std::sort(periods.begin(), periods.end());
  return PeriodSet(std::move(periods));
}

std::vector<std::size_t> borders_up_to(std::span<const Letter> s,
                                       std::size_t q) {
  if (q < 1 || q > s.size()) {
    throw ParameterError("borders_up_to: q must lie in [1, |S|]");
  }
  const auto fail = prefix_function(s);
  std::vector<std::size_t> out;
  if (s.size() <= q) out.push_back(s.size());
  for (std::size_t b = fail.back(); b > 0; b = fail[b - 1]) {
    if (b <= q) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

OccurrenceList occurrences(std::span<const Letter> pattern,
                           std::span<const Letter> s,
                           std::size_t first_position) {
  if (pattern.empty()) throw ParameterError("empty pattern");
  OccurrenceList out{pattern.size(), {}};
  if (pattern.size() > s.size()) return out;
  const auto fail = prefix_function(pattern);
  const std::size_t m = pattern.size();
  std::size_t k = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    while (k > 0 && (k == m || pattern[k] != s[i])) k = fail[k - 1];
    if (pattern[k] == s[i]) ++k;
    if (k == m) out.positions.push_back(first_position + i + 1 - m);
  }
  return out;
}

bool is_cover(std::span<const Letter> pattern, std::span<const Letter> s) {
  require_pattern_fits(pattern, s);
  const auto occ = occurrences(pattern, s);
  const std::size_t q = pattern.size();
  if (occ.empty() || occ.positions.front() != 1) return false;
  if (occ.positions.back() != s.size() - q + 1) return false;
  for (std::size_t i = 1; i < occ.size(); ++i) {
    if (occ.positions[i] - occ.positions[i - 1] > q) return false;
  }
  return true;
}

std::vector<std::size_t> all_covers(std::span<const Letter> s) {
  if (s.empty()) throw ParameterError("covers are undefined for empty text");
  auto borders = borders_up_to(s, s.size());
  std::vector<std::size_t> out;
  for (std::size_t b : borders) {
    if (is_cover(s.first(b), s)) out.push_back(b);
  }
  return out;
}

std::size_t shortest_cover(std::span<const Letter> s) {
  if (s.empty()) throw ParameterError("covers are undefined for empty text");
  for (std::size_t b : borders_up_to(s, s.size())) {
    if (is_cover(s.first(b), s)) return b;
  }
  return s.size();  // unreachable: s covers itself
}

bool is_seed(std::span<const Letter> pattern, std::span<const Letter> s) {
  require_pattern_fits(pattern, s);
  const std::size_t c = pattern.size();
  const std::size_t n = s.size();

  // Left overhang: longest proper suffix of the pattern that is a prefix
  // of s. Feeding pattern[1..] keeps the match proper.
  const auto head = s.first(c);
  const std::size_t left =
      longest_suffix_prefix(head, prefix_function(head), pattern.subspan(1));

  // Right overhang: longest proper prefix of the pattern that is a suffix
  // of s.
  const auto fail = prefix_function(pattern);
  const std::size_t right =
      longest_suffix_prefix(pattern, fail, s.subspan(n - c + 1));

  std::size_t reach = left;  // s[0, reach) is covered
  const auto occ = occurrences(pattern, s, 0);
  for (std::size_t p : occ.positions) {
    if (p > reach) break;
    reach = std::max(reach, p + c);
  }
  return reach >= n || n - right <= reach;
}

bool is_seed_bruteforce(std::span<const Letter> pattern,
                        std::span<const Letter> s) {
  require_pattern_fits(pattern, s);
  const std::size_t c = pattern.size();
  std::vector<Letter> extended;
  extended.reserve(s.size() + 2 * c);
  for (std::size_t a = 0; a <= c; ++a) {
    for (std::size_t b = 0; b <= c; ++b) {
      extended.assign(pattern.begin(), pattern.begin() + a);
      extended.insert(extended.end(), s.begin(), s.end());
      extended.insert(extended.end(), pattern.end() - b, pattern.end());
      if (is_cover(pattern, extended)) return true;
    }
  }
  return false;
}

std::vector<Text> seeds_up_to(const Text& s, std::size_t q) {
  const std::size_t n = s.size();
  if (q < 1) throw ParameterError("seeds_up_to: q must be positive");
  std::set<Text> candidates;
  const std::size_t top = std::min(q, n);
  for (std::size_t c = 1; c <= top; ++c) {
    for (std::size_t i = 0; i + c <= n; ++i) candidates.insert(s.substr(i, c));
  }
  // Overhang-only seeds: pattern = s[n-r..n) followed by the tail of
  // s[0..l), with r + l >= n so the pattern is fully determined.
  for (std::size_t c = 2; c <= top; ++c) {
    for (std::size_t r = 1; r < c; ++r) {
      for (std::size_t l = std::max<std::size_t>(1, n > r ? n - r : 1); l < c;
           ++l) {
        std::vector<Letter> pat(c, kSentinel);
        bool ok = true;
        for (std::size_t i = 0; i < r; ++i) pat[i] = s[n - r + i];
        for (std::size_t i = 0; i < l && ok; ++i) {
          Letter& slot = pat[c - l + i];
          if (slot != kSentinel && slot != s[i]) ok = false;
          slot = s[i];
        }
        if (ok && std::find(pat.begin(), pat.end(), kSentinel) == pat.end()) {
          candidates.insert(Text(std::move(pat), s.sigma()));
        }
      }
    }
  }
  std::vector<Text> out;
  for (const Text& cand : candidates) {
    if (cand.size() <= n && is_seed(cand, s)) out.push_back(cand);
  }
  return out;
}

}  // namespace quasi
