#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "qpat/qpat.hpp"
#include "support/oracles.hpp"

using namespace qpat;
namespace qt = qpat::testing;

namespace {
const double kR = 1.0 / std::sqrt(2.0);
}

TEST(Measurement, BasisStateIsCertain) {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 99ULL}) {
    Xoshiro256 rng(seed);
    const auto r = measure_all(StateVector::basis(3, 5), rng);
    EXPECT_EQ(r.bits, "101");
    EXPECT_EQ(r.collapsed, StateVector::basis(3, 5));
  }
}

TEST(Measurement, BornRuleWithinFourSigma) {
  const StateVector plus(1, {kR, kR});
  Xoshiro256 rng(2024);
  const auto counts = sample_counts(plus, 4096, rng);
  const double sigma = std::sqrt(4096 * 0.25);
  EXPECT_LE(std::abs(double(counts.at(0)) - 2048.0), 4 * sigma);
  EXPECT_LE(std::abs(double(counts.at(1)) - 2048.0), 4 * sigma);
}

TEST(Measurement, BornRuleOnRandomStates) {
  Xoshiro256 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = qt::random_state(3, rng);
    const std::uint64_t shots = 8192;
    const auto counts = sample_counts(s, shots, rng);
    for (basis_index x = 0; x < 8; ++x) {
      const double p = s.probability(x);
      const double got = counts.count(x) ? double(counts.at(x)) : 0.0;
      EXPECT_LE(std::abs(got - shots * p), 4 * std::sqrt(shots * p * (1 - p)) + 1e-9);
    }
  }
}

TEST(Measurement, SeedDeterminesCounts) {
  Xoshiro256 probe(0);
  const auto s = qt::random_state(4, probe);
  Xoshiro256 a(42), b(42);
  EXPECT_EQ(sample_counts(s, 1000, a), sample_counts(s, 1000, b));
}

TEST(Measurement, BellSubsetCollapse) {
  const StateVector bell(2, {kR, 0.0, 0.0, kR});
  int zeros = 0;
  Xoshiro256 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const auto r = measure_subset(bell, {1}, rng);
    if (r.outcome == 0) {
      ++zeros;
      EXPECT_LT(max_abs_diff(r.collapsed, StateVector::basis(2, 0)), 1e-12);
    } else {
      EXPECT_LT(max_abs_diff(r.collapsed, StateVector::basis(2, 3)), 1e-12);
    }
  }
  EXPECT_LE(std::abs(zeros - 1000), 4 * std::sqrt(500.0));
}

// Measuring the workspace of a function table leaves the computational
// register uniform over the preimage of the observed value.
TEST(Measurement, FunctionTableWorkspaceCollapse) {
  Xoshiro256 rng(31);
  for (basis_index code = 0; code < 16; ++code) {
    const BooleanFunction f(2, 1, {code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1});
    const auto s = function_table(f);
    for (int shot = 0; shot < 8; ++shot) {
      const auto r = measure_subset(s, {0}, rng);
      const auto pre = f.preimage(r.outcome);
      ASSERT_FALSE(pre.empty());
      const double a = 1.0 / std::sqrt(double(pre.size()));
      for (basis_index i = 0; i < 8; ++i) {
        const basis_index x = i >> 1, y = i & 1;
        const bool in = y == r.outcome && std::find(pre.begin(), pre.end(), x) != pre.end();
        EXPECT_NEAR(std::abs(r.collapsed[i] - amplitude(in ? a : 0.0)), 0.0, 1e-12);
      }
    }
  }
}

TEST(Measurement, SubsetOfAllQubitsMatchesMeasureAll) {
  Xoshiro256 probe(8);
  const auto s = qt::random_state(3, probe);
  Xoshiro256 a(100), b(100);
  for (int i = 0; i < 200; ++i) {
    const auto full = measure_all(s, a);
    const auto sub = measure_subset(s, {0, 1, 2}, b);
    EXPECT_EQ(full.outcome, sub.outcome);
    EXPECT_EQ(full.bits, sub.bits);
  }
}

TEST(Measurement, MarginalsSumToOne) {
  Xoshiro256 rng(4);
  const auto s = qt::random_state(4, rng);
  const std::vector<int> q{3, 1};
  double total = 0.0;
  for (double p : marginal_probabilities(s, q)) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Measurement, InvalidQubitSets) {
  Xoshiro256 rng(0);
  const auto s = state_zero(2);
  EXPECT_THROW(measure_subset(s, {2}, rng), argument_error);
  EXPECT_THROW(measure_subset(s, {0, 0}, rng), argument_error);
}
