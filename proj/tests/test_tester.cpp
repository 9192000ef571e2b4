#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quasi/errors.hpp"
#include "quasi/exact.hpp"
#include "quasi/farness.hpp"
#include "quasi/tester.hpp"

namespace quasi {
namespace {

using Sizes = std::vector<std::size_t>;

Sizes starts_of(const std::vector<FragmentSpec>& f) {
  Sizes out;
  for (const auto& x : f) out.push_back(x.global_start);
  return out;
}
Sizes lengths_of(const std::vector<FragmentSpec>& f) {
  Sizes out;
  for (const auto& x : f) out.push_back(x.length);
  return out;
}

TEST(Decomposition, Examples) {
  const auto unit = fragment_decomposition(16, 1);
  EXPECT_EQ(starts_of(unit), (Sizes{1, 3, 5, 7, 9, 11, 13, 15}));
  EXPECT_EQ(lengths_of(unit), (Sizes{4, 4, 4, 4, 4, 4, 4, 2}));

  const auto exact = fragment_decomposition(4 * 27, 3);
  EXPECT_EQ(starts_of(exact), (Sizes{1, 55}));
  EXPECT_EQ(lengths_of(exact), (Sizes{108, 54}));

  const auto hundred = fragment_decomposition(100, 2);
  EXPECT_EQ(starts_of(hundred), (Sizes{1, 17, 33, 49, 65, 81, 97}));
  EXPECT_EQ(lengths_of(hundred), (Sizes{32, 32, 32, 32, 32, 20, 4}));
  EXPECT_EQ(hundred[2].index, 3u);
  EXPECT_THROW(fragment_decomposition(0, 1), ParameterError);
}

TEST(Consistency, Examples) {
  const Text ab = Text::from_alpha("ab");
  const Text frag = Text::from_alpha("ababab");
  EXPECT_TRUE(is_consistent(ab, frag, 1));
  EXPECT_FALSE(is_consistent(ab, frag, 2));
  EXPECT_FALSE(is_consistent(Text::from_alpha("abab"), Text::from_alpha("aba"), 1));
}

TEST(Consistency, CoverMakesEveryFragmentConsistent) {
  Rng rng(51);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t q = 1 + uniform_below(rng, 3);
    const Text c = oracle::random_text(rng, 1 + uniform_below(rng, q), 2);
    const Text s = gen_coverable(c, c.size() * (10 + uniform_below(rng, 40)), rng);
    for (const auto& f : fragment_decomposition(s.size(), q)) {
      if (f.length < c.size()) continue;
      ASSERT_TRUE(is_consistent(c, s.letters().subspan(f.global_start - 1, f.length),
                                f.global_start));
    }
  }
}

TEST(Config, SampleCountAndValidation) {
  EXPECT_EQ((TesterConfig{2, 4096, 0.1, 0}.sample_count()), 240u);
  EXPECT_EQ((TesterConfig{1, 100, 1.0, 0}.sample_count()), 24u);
  EXPECT_EQ((TesterConfig{6, 10000, 0.5, 0}.sample_count()), 125u);
  EXPECT_EQ((TesterConfig{2, 4096, 0.1, 0}.query_bound()), 241u * 32 + 4);
  EXPECT_THROW((TesterConfig{3, 3, 0.5, 0}.validate()), ParameterError);
  EXPECT_THROW((TesterConfig{0, 3, 0.5, 0}.validate()), ParameterError);
  EXPECT_THROW((TesterConfig{1, 3, 0.0, 0}.validate()), ParameterError);
  EXPECT_THROW((TesterConfig{1, 3, 1.5, 0}.validate()), ParameterError);
}

TEST(Oracle, CountsAndLogs) {
  QueryOracle oracle(Text::from_alpha("abc"));
  oracle.enable_log();
  EXPECT_EQ(oracle.query(2), 2u);
  EXPECT_EQ(oracle.query(2), 2u);
  EXPECT_EQ(oracle.query(3), 3u);
  EXPECT_EQ(oracle.query_count(), 3u);
  EXPECT_EQ(oracle.access_log(), (Sizes{2, 2, 3}));
  EXPECT_THROW(oracle.query(0), ParameterError);
  EXPECT_THROW(oracle.query(4), ParameterError);
}

TEST(CoverTester, AlwaysAcceptsCoverableText) {
  Rng rng(52);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t q = 1 + uniform_below(rng, 4);
    const Text c = oracle::random_text(rng, 1 + uniform_below(rng, q),
                                       static_cast<Letter>(2 + uniform_below(rng, 3)));
    const Text s = gen_coverable(c, c.size() * (50 + uniform_below(rng, 400)), rng);
    if (s.size() <= q) continue;
    TesterConfig config{q, s.size(), 0.25 + 0.75 * (iter % 4) / 3.0, rng()};
    QueryOracle oracle(s);
    const Verdict v = run_cover_tester(config, oracle);
    ASSERT_EQ(v.answer, Answer::kYes) << s.to_ints();
    EXPECT_TRUE(std::count(v.surviving_candidates.begin(),
                           v.surviving_candidates.end(), c.size()) ||
                std::any_of(v.surviving_candidates.begin(),
                            v.surviving_candidates.end(),
                            [&](std::size_t x) { return x < c.size(); }));
    EXPECT_LE(v.queries_used, config.query_bound());
    EXPECT_EQ(v.queries_used, oracle.query_count());
  }
}

TEST(CoverTester, QueriesOnlySampledFragmentsAndEndpoints) {
  Rng rng(53);
  const Text s = oracle::random_text(rng, 5000, 2);
  TesterConfig config{2, s.size(), 0.2, 99};
  QueryOracle oracle(s);
  oracle.enable_log();
  const Verdict v = run_cover_tester(config, oracle);
  ASSERT_FALSE(v.exhaustive);
  EXPECT_EQ(v.sampled_fragment_indices.size(), config.sample_count());

  const auto decomposition = fragment_decomposition(s.size(), 2);
  std::set<std::size_t> allowed;
  for (std::size_t idx : v.sampled_fragment_indices) {
    const auto& f = decomposition[idx - 1];
    EXPECT_EQ(f.length, 32u);
    for (std::size_t p = f.global_start; p <= f.global_end(); ++p) allowed.insert(p);
  }
  for (std::size_t p = s.size() - 31; p <= s.size(); ++p) allowed.insert(p);
  for (std::size_t p : {1u, 2u}) allowed.insert(p);
  for (std::size_t p = s.size() - 1; p <= s.size(); ++p) allowed.insert(p);

  const auto& log = oracle.access_log();
  const std::set<std::size_t> distinct(log.begin(), log.end());
  EXPECT_EQ(distinct.size(), log.size()) << "a position was queried twice";
  for (std::size_t p : log) EXPECT_TRUE(allowed.count(p)) << p;
  EXPECT_EQ(v.queries_used, log.size());
}

TEST(CoverTester, Deterministic) {
  Rng rng(54);
  const Text s = oracle::random_text(rng, 3000, 2);
  TesterConfig config{2, s.size(), 0.3, 1234};
  QueryOracle a(s), b(s);
  const Verdict va = run_cover_tester(config, a);
  const Verdict vb = run_cover_tester(config, b);
  EXPECT_EQ(va.answer, vb.answer);
  EXPECT_EQ(va.sampled_fragment_indices, vb.sampled_fragment_indices);
  EXPECT_EQ(va.surviving_candidates, vb.surviving_candidates);
  EXPECT_EQ(va.queries_used, vb.queries_used);
}

TEST(CoverTester, RejectsFarText) {
  Rng rng(55);
  const auto cert = gen_far(2, 2, 4096, 0.1, rng);
  int no = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    QueryOracle oracle(cert.text);
    no += run_cover_tester({2, 4096, 0.1, rng()}, oracle).answer == Answer::kNo;
  }
  EXPECT_GE(no, trials * 3 / 4);
}

TEST(CoverTester, SmallTextIsDecidedExactly) {
  const Text s = Text::from_alpha("abaababaababaaba");
  QueryOracle oracle(s);
  const Verdict v = run_cover_tester({3, s.size(), 0.5, 1}, oracle);
  EXPECT_TRUE(v.exhaustive);
  EXPECT_EQ(v.answer, Answer::kYes);
  EXPECT_EQ(v.surviving_candidates, (Sizes{3}));
  EXPECT_EQ(v.queries_used, s.size());

  QueryOracle two(s);
  const Verdict none = run_cover_tester({2, s.size(), 0.5, 1}, two);
  EXPECT_EQ(none.answer, Answer::kNo);
}

TEST(CoverTester, ParameterErrors) {
  QueryOracle oracle(Text::from_alpha("ab"));
  EXPECT_THROW(run_cover_tester({2, 2, 0.5, 0}, oracle), ParameterError);
  EXPECT_THROW(run_cover_tester({1, 3, 0.5, 0}, oracle), ParameterError);
}

TEST(CoverTester, LongTextWithSourceCallback) {
  // 10^6 letters of (aab)*: never materialised.
  const std::size_t n = 999999;
  QueryOracle oracle(n, [](std::size_t p) { return p % 3 == 0 ? Letter{2} : Letter{1}; });
  TesterConfig config{3, n, 0.5, 8};
  const Verdict v = run_cover_tester(config, oracle);
  EXPECT_EQ(v.answer, Answer::kYes);
  EXPECT_EQ(v.surviving_candidates, (Sizes{3}));
  EXPECT_LE(v.queries_used, config.query_bound());
}

TEST(SeedTester, CandidateEnumerationForQ2) {
  // n <= 4q^3 reads everything; check the candidate side on a long text.
  const std::size_t n = 200;
  std::vector<Letter> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = (i % 2) ? 1 : 2;  // "baba..."
  const Text s(w, 2);
  QueryOracle oracle(s);
  const Verdict v = run_seed_tester({2, n, 0.5, 3}, oracle);
  EXPECT_EQ(v.answer, Answer::kYes);
  // Substrings of "baba" of length <= 2: a, b, ab, ba; seeds: ab and ba.
  std::vector<Text> expected{Text({1, 2}, 2), Text({2, 1}, 2)};
  EXPECT_EQ(v.surviving_seeds, expected);
  EXPECT_EQ(v.surviving_candidates, (Sizes{2}));
}

TEST(SeedTester, AlwaysAcceptsSeededText) {
  Rng rng(56);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t q = 1 + uniform_below(rng, 3);
    const Text c = oracle::random_text(rng, 1 + uniform_below(rng, q), 2);
    const Text big = gen_coverable(c, c.size() * (100 + uniform_below(rng, 200)), rng);
    // Cut off a few letters at each end so the seed overhangs.
    const std::size_t cut_l = uniform_below(rng, c.size());
    const std::size_t cut_r = uniform_below(rng, c.size());
    const Text s = big.substr(cut_l, big.size() - cut_l - cut_r);
    ASSERT_TRUE(is_seed(c, s));
    QueryOracle oracle(s);
    TesterConfig config{q, s.size(), 0.5, rng()};
    const Verdict v = run_seed_tester(config, oracle);
    ASSERT_EQ(v.answer, Answer::kYes) << c.to_ints() << " cut " << cut_l;
    EXPECT_LE(v.queries_used, config.query_bound());
  }
}

TEST(SeedTester, SmallTextsMatchExhaustiveSeeds) {
  Rng rng(57);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 3 + uniform_below(rng, 12);
    const Text s = oracle::random_text(rng, n, 2);
    QueryOracle oracle(s);
    const Verdict v = run_seed_tester({2, n, 1.0, 0}, oracle);
    EXPECT_TRUE(v.exhaustive);
    EXPECT_EQ(v.answer == Answer::kYes, !seeds_up_to(s, 2).empty());
  }
}

TEST(SeedTester, RejectsSeedFarText) {
  Rng rng(58);
  const auto cert = gen_seed_far(2, 2, 4096, 0.1, rng);
  int no = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    QueryOracle oracle(cert.text);
    no += run_seed_tester({2, 4096, 0.1, rng()}, oracle).answer == Answer::kNo;
  }
  EXPECT_GE(no, trials * 3 / 4);
}

TEST(FarTexts, FarTextHasFewConsistentFragments) {
  Rng rng(59);
  const std::size_t q = 2;
  const double eps = 0.1;
  const auto cert = gen_far(q, 2, 4096, eps, rng);
  const auto& s = cert.text;
  const auto decomposition = fragment_decomposition(s.size(), q);
  for (std::size_t b : borders_up_to(s, q)) {
    const auto c = s.letters().first(b);
    std::size_t consistent = 0;
    for (const auto& f : decomposition) {
      consistent += is_consistent(c, s.letters().subspan(f.global_start - 1, f.length),
                                  f.global_start);
    }
    EXPECT_LE(static_cast<double>(consistent),
              (1 - eps) * static_cast<double>(s.size()) / (2.0 * q * q * q));
  }
}

}  // namespace
}  // namespace quasi
