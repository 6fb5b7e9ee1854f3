#include <cmath>

#include <gtest/gtest.h>

#include "qpat/qpat.hpp"

using namespace qpat;

TEST(Search, SingleSolutionOverSeededRuns) {
  for (int n = 3; n <= 5; ++n) {
    const basis_index target = dimension_of(n) - 3;
    const auto verifier = [target](basis_index x) { return x == target; };
    int found = 0;
    double invocations = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      Xoshiro256 rng(seed);
      const auto out = search_by_verification(verifier, n, rng);
      if (out.solution) {
        ASSERT_EQ(*out.solution, target);
        ++found;
      }
      invocations += double(out.oracle_invocations);
    }
    EXPECT_GE(found, 990) << "n=" << n;
    EXPECT_LE(invocations / 1000.0, 4.0 * std::sqrt(double(dimension_of(n)))) << "n=" << n;
  }
}

TEST(Search, NeverAcceptsNoFinds) {
  Xoshiro256 rng(1);
  const auto out = search_by_verification([](basis_index) { return false; }, 3, rng, 7);
  EXPECT_FALSE(out.solution);
  EXPECT_EQ(out.rounds, 7);
  EXPECT_EQ(out.iterations_per_round.size(), 7u);
}

TEST(Search, AlwaysTrueVerifierNeedsNoIterations) {
  Xoshiro256 rng(2);
  const auto out = search_by_verification([](basis_index) { return true; }, 4, rng);
  ASSERT_TRUE(out.solution);
  EXPECT_EQ(out.oracle_invocations, 0u);
  EXPECT_EQ(out.rounds, 1);
}

TEST(Search, ScheduleRespectsCaps) {
  Xoshiro256 rng(3);
  const auto out = search_by_verification([](basis_index) { return false; }, 4, rng, 30);
  const int cap = int(std::ceil(std::numbers::pi / 4 * 4.0));
  EXPECT_EQ(out.iterations_per_round[0], 0);
  for (std::size_t j = 1; j < out.iterations_per_round.size(); ++j) {
    const int growth = int(std::ceil(std::pow(1.28, double(j))));
    EXPECT_LE(out.iterations_per_round[j], std::min(growth, cap));
  }
}

TEST(Search, Errors) {
  Xoshiro256 rng(4);
  EXPECT_THROW(search_by_verification([](basis_index) { return true; }, 3, rng, 0), argument_error);
  EXPECT_THROW(search_by_verification([](basis_index) { return true; }, 25, rng), capacity_error);
}
