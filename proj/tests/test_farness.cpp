#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quasi/errors.hpp"
#include "quasi/exact.hpp"
#include "quasi/farness.hpp"
#include "quasi/numtheory.hpp"

namespace quasi {
namespace {

TEST(DistToCover, Examples) {
  EXPECT_EQ(dist_to_cover(Text::from_alpha("abaababaababaaba"),
                          Text::from_alpha("aba")),
            Distance(0));
  EXPECT_EQ(dist_to_cover(Text::from_alpha("bbbb"), Text::from_alpha("ab")),
            Distance(2));
  EXPECT_EQ(dist_to_cover(Text::from_alpha("bbbbb"), Text::from_alpha("ab")),
            kInfiniteDistance);
  EXPECT_EQ(to_string(kInfiniteDistance), "inf");
  EXPECT_THROW(dist_to_cover(Text::from_alpha("ab"), Text::from_alpha("abc")),
               ParameterError);
}

TEST(DistToCover, MatchesPlacementEnumeration) {
  Rng rng(41);
  for (int iter = 0; iter < 1500; ++iter) {
    const std::size_t n = 1 + uniform_below(rng, 14);
    const Text s = oracle::random_text(rng, n, 2);
    const Text c = oracle::random_text(rng, 1 + uniform_below(rng, std::min<std::size_t>(n, 4)), 2);
    EXPECT_EQ(dist_to_cover(s, c, true), oracle::dist_by_placements(s, c))
        << s.to_ints() << " / " << c.to_ints();
  }
}

TEST(DistToCover, ZeroIffCoverAndInfiniteIffUnreachable) {
  Rng rng(42);
  for (int iter = 0; iter < 2000; ++iter) {
    const Text c = oracle::random_text(rng, 1 + uniform_below(rng, 4), 2);
    Text s = iter % 2 ? gen_coverable(c, c.size() * (2 + uniform_below(rng, 6)), rng)
                      : oracle::random_text(rng, c.size() + uniform_below(rng, 20), 2);
    const Distance d = dist_to_cover(s, c);
    EXPECT_EQ(d == Distance(0), is_cover(c, s));
    const auto periods = period_set(c).periods();
    EXPECT_EQ(!d.has_value(),
              !conical_representable(periods, s.size() - c.size()).has_value());
  }
}

TEST(DistToSeed, MatchesWholeSpaceEnumeration) {
  Rng rng(43);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + uniform_below(rng, 9);
    const Text s = oracle::random_text(rng, n, 2);
    const Text c = oracle::random_text(rng, 1 + uniform_below(rng, std::min<std::size_t>(n, 3)), 2);
    std::size_t best = n + 1;
    oracle::for_each_string(n, 2, [&](const std::vector<Letter>& t) {
      if (is_seed_bruteforce(c, t)) best = std::min(best, oracle::hamming_of(s, t));
    });
    EXPECT_EQ(dist_to_seed(s, c), best) << s.to_ints() << " / " << c.to_ints();
  }
}

TEST(DistToQ, ExamplesAndBruteForce) {
  const Text alt = Text::from_alpha("abababab");
  EXPECT_EQ(dist_to_Q(alt, 2, 2).distance_lower_bound, 0u);

  Rng rng(44);
  // All strings of length 10 with quasiperiod <= 2.
  std::vector<std::vector<Letter>> members;
  oracle::for_each_string(10, 2, [&](const std::vector<Letter>& t) {
    if (shortest_cover(t) <= 2) members.push_back(t);
  });
  for (int iter = 0; iter < 50; ++iter) {
    const Text s = oracle::random_text(rng, 10, 2);
    std::size_t best = 11;
    for (const auto& t : members) best = std::min(best, oracle::hamming_of(s, t));
    const auto cert = dist_to_Q(s, 2, 2);
    EXPECT_EQ(cert.distance_lower_bound, best);
    EXPECT_EQ(cert.per_candidate.size(), 6u);
  }
}

TEST(DistToQ, BudgetAndAlphabetChecks) {
  const Text s = Text::from_alpha("abab");
  EXPECT_THROW(dist_to_Q(s, 3, 2, 10), BudgetError);
  EXPECT_THROW(dist_to_Q(Text::from_alpha("abcd"), 2, 2), ParameterError);
  EXPECT_NO_THROW(dist_to_Q(s, 3, 2, 14));
}

TEST(Certificate, RoundTrip) {
  const auto cert = dist_to_Q(Text::from_alpha("abbab"), 2, 2);
  std::stringstream buf;
  write_certificate(buf, cert);
  const std::string first = buf.str();
  EXPECT_EQ(first.substr(0, first.find('\n')),
            "certificate n=5 q=2 sigma=2 bound=" +
                std::to_string(cert.distance_lower_bound));
  const auto back = read_certificate(buf);
  EXPECT_EQ(back.q, cert.q);
  EXPECT_EQ(back.sigma, cert.sigma);
  EXPECT_EQ(back.distance_lower_bound, cert.distance_lower_bound);
  EXPECT_EQ(back.per_candidate, cert.per_candidate);
  std::stringstream again;
  write_certificate(again, back);
  EXPECT_EQ(again.str(), first);
}

TEST(GenCoverable, ProducesCoveredStrings) {
  Rng rng(45);
  EXPECT_TRUE(is_cover(Text::from_alpha("aba"),
                       gen_coverable(Text::from_alpha("aba"), 16, rng)));
  EXPECT_THROW(gen_coverable(Text::from_alpha("ab"), 17, rng), NotReachableError);
  EXPECT_EQ(gen_coverable(Text::from_alpha("abc"), 3, rng), Text::from_alpha("abc"));
  for (int iter = 0; iter < 500; ++iter) {
    const Text c = oracle::random_text(rng, 1 + uniform_below(rng, 6), 3);
    const std::size_t n = c.size() * (1 + uniform_below(rng, 30));
    const Text s = gen_coverable(c, n, rng);
    EXPECT_EQ(s.size(), n);
    EXPECT_TRUE(is_cover(c, s));
  }
}

TEST(GenCoverable, DeterministicForSeed) {
  Rng a(7), b(7);
  const Text c = Text::from_alpha("aba");
  EXPECT_EQ(gen_coverable(c, 200, a), gen_coverable(c, 200, b));
}

TEST(GenFar, CertifiesDistance) {
  Rng rng(46);
  const auto cert = gen_far(2, 2, 4096, 0.1, rng);
  EXPECT_GE(cert.distance_lower_bound, 410u);
  EXPECT_EQ(far_threshold(0.1, 4096), 410u);
  EXPECT_EQ(cert.text.size(), 4096u);
}

TEST(GenFar, EdgeCases) {
  Rng rng(47);
  const auto easy = gen_far(2, 2, 16, 0.0, rng, 1);
  EXPECT_EQ(easy.text.size(), 16u);
  EXPECT_THROW(gen_far(2, 1, 16, 0.1, rng), ParameterError);
  try {
    gen_far(2, 2, 16, 1.0, rng, 3);
    FAIL() << "expected GenerationError";
  } catch (const GenerationError& e) {
    EXPECT_LT(e.best_distance(), 16u);
  }
}

}  // namespace
}  // namespace quasi
