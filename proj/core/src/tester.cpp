#include "quasi/tester.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "quasi/errors.hpp"
#include "quasi/exact.hpp"
#include "quasi/random.hpp"

namespace quasi {
namespace {

// Reads through the oracle, asking for each position at most once.
class LetterCache {
 public:
  explicit LetterCache(QueryOracle& oracle) : oracle_(oracle) {}

  std::vector<Letter> read(std::size_t start, std::size_t length) {
    std::vector<Letter> out(length);
    for (std::size_t i = 0; i < length; ++i) {
      const std::size_t pos = start + i;
      auto it = seen_.find(pos);
      if (it == seen_.end()) it = seen_.emplace(pos, oracle_.query(pos)).first;
      out[i] = it->second;
    }
    return out;
  }

 private:
  QueryOracle& oracle_;
  std::unordered_map<std::size_t, Letter> seen_;
};

Text as_text(std::vector<Letter> letters) {
  Letter sigma = 1;
  for (Letter l : letters) sigma = std::max(sigma, l);
  return Text(std::move(letters), sigma);
}

struct Sample {
  std::vector<std::size_t> drawn;  // 1-based indices in draw order
  // Distinct fragments to check: (global start, letters). Includes the
  // length-4q^3 suffix of the text.
  std::vector<std::pair<std::size_t, std::vector<Letter>>> fragments;
};

Sample sample_fragments(const TesterConfig& config, LetterCache& cache) {
  const std::size_t q3 = config.q * config.q * config.q;
  const auto decomposition = fragment_decomposition(config.n, config.q);
  const auto full = static_cast<std::size_t>(std::count_if(
      decomposition.begin(), decomposition.end(),
      [&](const FragmentSpec& f) { return f.length == 4 * q3; }));

  Sample sample;
  Rng rng(config.rng_seed);
  const std::size_t m = config.sample_count();
  sample.drawn.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    sample.drawn.push_back(1 + uniform_below(rng, full));
  }

  std::set<std::size_t> starts;
  for (std::size_t index : sample.drawn) {
    starts.insert(decomposition[index - 1].global_start);
  }
  starts.insert(config.n - 4 * q3 + 1);
  // Read in draw order so the access log follows the algorithm.
  std::set<std::size_t> read;
  auto fetch = [&](std::size_t start) {
    if (!read.insert(start).second) return;
    sample.fragments.emplace_back(start, cache.read(start, 4 * q3));
  };
  for (std::size_t index : sample.drawn) {
    fetch(decomposition[index - 1].global_start);
  }
  fetch(config.n - 4 * q3 + 1);
  return sample;
}

bool consistent_with_gcd(std::span<const Letter> candidate, std::size_t gcd,
                         std::span<const Letter> fragment,
                         std::size_t global_start) {
  if (fragment.size() < candidate.size()) return false;
  if (!is_seed(candidate, fragment)) return false;
  const auto occ = occurrences(candidate, fragment, global_start);
  return std::all_of(occ.positions.begin(), occ.positions.end(),
                     [gcd](std::size_t p) { return (p - 1) % gcd == 0; });
}

void check_bound(const TesterConfig& config, std::size_t used) {
  if (used > config.query_bound()) {
    throw InternalError("tester used " + std::to_string(used) +
                        " queries, bound is " +
                        std::to_string(config.query_bound()));
  }
}

void prepare(const TesterConfig& config, const QueryOracle& oracle) {
  config.validate();
  if (oracle.size() != config.n) {
    throw ParameterError("oracle length " + std::to_string(oracle.size()) +
                         " differs from configured n " +
                         std::to_string(config.n));
  }
}

}  // namespace

QueryOracle::QueryOracle(Text hidden)
    : length_(hidden.size()),
      source_([text = std::move(hidden)](std::size_t pos) {
        return text[pos - 1];
      }) {}

QueryOracle::QueryOracle(std::size_t length, Source source)
    : length_(length), source_(std::move(source)) {}

Letter QueryOracle::query(std::size_t position) {
  if (position < 1 || position > length_) {
    throw ParameterError("query position " + std::to_string(position) +
                         " outside [1, " + std::to_string(length_) + "]");
  }
  ++count_;
  if (logging_) log_.push_back(position);
  return source_(position);
}

std::vector<FragmentSpec> fragment_decomposition(std::size_t n,
                                                 std::size_t q) {
  if (q < 1 || n < 1) throw ParameterError("need q >= 1 and n >= 1");
  const std::size_t step = 2 * q * q * q;
  std::vector<FragmentSpec> out;
  for (std::size_t start = 1, index = 1; start <= n; start += step, ++index) {
    out.push_back({index, start, std::min(2 * step, n - start + 1)});
  }
  return out;
}

std::size_t TesterConfig::sample_count() const {
  const double base = static_cast<double>(std::max<std::size_t>(q, 2));
  const double m = std::ceil(24.0 * std::log2(base) / epsilon);
  return std::max<std::size_t>(1, static_cast<std::size_t>(m));
}

std::size_t TesterConfig::query_bound() const {
  return (sample_count() + 1) * 4 * q * q * q + 2 * q;
}

void TesterConfig::validate() const {
  if (q < 1) throw ParameterError("q must be at least 1");
  if (q >= n) throw ParameterError("q must be smaller than n");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw ParameterError("epsilon must lie in (0, 1]");
  }
}

std::string to_string(Answer a) { return a == Answer::kYes ? "YES" : "NO"; }

bool is_consistent(std::span<const Letter> candidate,
                   std::span<const Letter> fragment,
                   std::size_t global_start) {
  if (candidate.empty()) throw ParameterError("empty pattern");
  if (fragment.size() < candidate.size()) return false;
  return consistent_with_gcd(candidate, period_set(candidate).gcd(), fragment,
                             global_start);
}

SeedConsistency seed_consistency(std::span<const Letter> candidate,
                                 std::span<const Letter> fragment,
                                 std::size_t global_start,
                                 std::vector<bool> allowed_residues) {
  if (candidate.empty()) throw ParameterError("empty pattern");
  const std::size_t g = period_set(candidate).gcd();
  if (allowed_residues.empty()) allowed_residues.assign(g, true);
  SeedConsistency out{false, std::move(allowed_residues)};
  if (fragment.size() < candidate.size() || !is_seed(candidate, fragment)) {
    return out;
  }
  out.seed = true;
  for (std::size_t p :
       occurrences(candidate, fragment, global_start).positions) {
    const std::size_t r = (p - 1) % g;
    for (std::size_t other = 0; other < g; ++other) {
      if (other != r) out.allowed_residues[other] = false;
    }
  }
  return out;
}

Verdict run_cover_tester(const TesterConfig& config, QueryOracle& oracle) {
  prepare(config, oracle);
  const std::size_t before = oracle.query_count();
  const std::size_t q = config.q;
  const std::size_t n = config.n;
  LetterCache cache(oracle);
  Verdict verdict;

  if (n <= 4 * q * q * q) {
    verdict.exhaustive = true;
    const Text s = as_text(cache.read(1, n));
    for (std::size_t c : all_covers(s)) {
      if (c <= q) verdict.surviving_candidates.push_back(c);
    }
  } else {
    Sample sample = sample_fragments(config, cache);
    verdict.sampled_fragment_indices = std::move(sample.drawn);
    const auto head = cache.read(1, q);
    const auto tail = cache.read(n - q + 1, q);
    for (std::size_t b = 1; b <= q; ++b) {
      if (!std::equal(head.begin(), head.begin() + b, tail.end() - b)) continue;
      const std::span<const Letter> candidate(head.data(), b);
      const std::size_t g = period_set(candidate).gcd();
      const bool survives = std::all_of(
          sample.fragments.begin(), sample.fragments.end(),
          [&](const auto& frag) {
            return consistent_with_gcd(candidate, g, frag.second, frag.first);
          });
      if (survives) verdict.surviving_candidates.push_back(b);
    }
  }
  verdict.answer =
      verdict.surviving_candidates.empty() ? Answer::kNo : Answer::kYes;
  verdict.queries_used = oracle.query_count() - before;
  check_bound(config, verdict.queries_used);
  return verdict;
}

Verdict run_seed_tester(const TesterConfig& config, QueryOracle& oracle) {
  prepare(config, oracle);
  const std::size_t before = oracle.query_count();
  const std::size_t q = config.q;
  const std::size_t n = config.n;
  LetterCache cache(oracle);
  Verdict verdict;

  if (n <= 4 * q * q * q) {
    verdict.exhaustive = true;
    verdict.surviving_seeds = seeds_up_to(as_text(cache.read(1, n)), q);
  } else {
    Sample sample = sample_fragments(config, cache);
    verdict.sampled_fragment_indices = std::move(sample.drawn);
    const Text head = as_text(cache.read(1, 2 * q));
    std::set<Text> candidates;
    for (std::size_t c = 1; c <= q; ++c) {
      for (std::size_t i = 0; i + c <= head.size(); ++i) {
        candidates.insert(head.substr(i, c));
      }
    }
    for (const Text& candidate : candidates) {
      std::vector<bool> residues;
      bool survives = true;
      for (const auto& [start, letters] : sample.fragments) {
        auto step = seed_consistency(candidate, letters, start,
                                     std::move(residues));
        residues = std::move(step.allowed_residues);
        if (!step.seed ||
            std::none_of(residues.begin(), residues.end(),
                         [](bool b) { return b; })) {
          survives = false;
          break;
        }
      }
      if (survives) verdict.surviving_seeds.push_back(candidate);
    }
  }
  for (const Text& seed : verdict.surviving_seeds) {
    verdict.surviving_candidates.push_back(seed.size());
  }
  std::sort(verdict.surviving_candidates.begin(),
            verdict.surviving_candidates.end());
  verdict.surviving_candidates.erase(
      std::unique(verdict.surviving_candidates.begin(),
                  verdict.surviving_candidates.end()),
      verdict.surviving_candidates.end());
  verdict.answer =
      verdict.surviving_seeds.empty() ? Answer::kNo : Answer::kYes;
  verdict.queries_used = oracle.query_count() - before;
  check_bound(config, verdict.queries_used);
  return verdict;
}

}  // namespace quasi
