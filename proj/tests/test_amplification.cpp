#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "qpat/qpat.hpp"
#include "support/oracles.hpp"

using namespace qpat;
namespace qt = qpat::testing;

namespace {
AmplificationProblem hadamard_problem(int n, std::vector<basis_index> good) {
  return AmplificationProblem(hadamard_preparation(n), GoodSet::of(dimension_of(n), std::move(good)));
}

// First k maximizing sin^2((2k+1) theta) over the first lobe, (2k+1) theta <= pi.
int brute_force_argmax(double theta) {
  int best = 0;
  double best_p = -1.0;
  const int limit = std::max(0, int(std::floor((std::numbers::pi / theta - 1.0) / 2.0)));
  for (int k = 0; k <= limit; ++k) {
    const double p = amplified_success(theta, k);
    if (p > best_p + 1e-12) {
      best_p = p;
      best = k;
    }
  }
  return best;
}
}  // namespace

TEST(Amplification, GoodAmplitudeExamples) {
  EXPECT_NEAR(good_amplitude(hadamard_problem(2, {3})), 0.5, 1e-12);
  EXPECT_NEAR(good_amplitude(AmplificationProblem(Circuit(1), GoodSet::of(2, {0}))), 1.0, 1e-12);
  EXPECT_NEAR(good_amplitude(hadamard_problem(3, {5})), 1.0 / std::sqrt(8.0), 1e-12);
}

TEST(Amplification, FourStatesOneStep) {
  const auto problem = hadamard_problem(2, {2});
  const auto s = grover_operator(problem, simulate(problem.prepare(), state_zero(2)));
  EXPECT_NEAR(s.probability(2), 1.0, 1e-12);
  EXPECT_NEAR(good_mass(problem.good(), amplitude_amplify(problem)), 1.0, 1e-9);
  EXPECT_NEAR(good_mass(hadamard_problem(3, {5}).good(), amplitude_amplify(hadamard_problem(3, {5}))),
              std::pow(std::sin(5 * std::asin(1 / std::sqrt(8.0))), 2), 1e-9);
}

TEST(Amplification, ZeroIterationsIsPreparedState) {
  const auto problem = hadamard_problem(3, {1, 6});
  const auto s = amplitude_amplify(problem, 0);
  EXPECT_EQ(s, simulate(problem.prepare(), state_zero(3)));
  EXPECT_NEAR(good_mass(problem.good(), s), problem.success_probability(), 1e-12);
}

TEST(Amplification, OptimalIterationExamples) {
  EXPECT_EQ(optimal_iterations(hadamard_problem(2, {1})), 1);
  EXPECT_EQ(optimal_iterations(hadamard_problem(3, {1})), 2);
  EXPECT_EQ(optimal_iterations(AmplificationProblem(Circuit(2), GoodSet::of(4, {0}))), 0);
  EXPECT_THROW(optimal_iterations(hadamard_problem(2, {})), no_solution_error);
  EXPECT_THROW(amplitude_amplify(hadamard_problem(2, {})), no_solution_error);
  EXPECT_THROW(amplitude_amplify(hadamard_problem(2, {}), 1), no_solution_error);
}

TEST(Amplification, OptimalIterationsIsArgmaxOverGrids) {
  for (int n = 1; n <= 10; ++n) {
    const double N = double(dimension_of(n));
    for (basis_index g = 1; g <= dimension_of(n); ++g) {
      const double a = std::sqrt(double(g) / N);
      EXPECT_EQ(optimal_iterations_for_amplitude(a), brute_force_argmax(std::asin(a))) << "n=" << n << " |G|=" << g;
    }
  }
}

TEST(Amplification, ClosedFormUpToSixQubits) {
  for (int n = 2; n <= 6; ++n) {
    for (std::size_t size : {1u, 2u, 4u}) {
      if (size >= dimension_of(n)) continue;
      std::vector<basis_index> good;
      for (std::size_t i = 0; i < size; ++i) good.push_back((i * 5 + 1) % dimension_of(n));
      const auto problem = hadamard_problem(n, good);
      ASSERT_EQ(problem.good().count(), size);
      StateVector s = simulate(problem.prepare(), state_zero(n));
      for (int k = 0; k <= 10; ++k) {
        EXPECT_NEAR(good_mass(problem.good(), s), amplified_success(problem.theta(), k), 1e-9);
        s = grover_operator(problem, s);
      }
    }
  }
}

// The iterate stays in span{|good>, |bad>}: the residual outside that plane
// is zero after every step, for a non-uniform preparation.
TEST(Amplification, StaysInTwoDimensionalPlane) {
  Xoshiro256 rng(70);
  Circuit prep(3);
  prep.add(Gate::generic({0, 1, 2}, qt::random_unitary(3, rng)));
  const AmplificationProblem problem(prep, GoodSet::of(8, {2, 7}));
  const auto u0 = simulate(prep, state_zero(3));
  qt::Vector good = qt::Vector::Zero(8), bad = qt::Vector::Zero(8);
  for (basis_index x = 0; x < 8; ++x) (problem.good().contains(x) ? good : bad)(Eigen::Index(x)) = u0[x];
  good.normalize();
  bad.normalize();
  StateVector s = u0;
  for (int k = 0; k < 6; ++k) {
    const qt::Vector v = qt::to_eigen(s);
    const qt::Vector residual = v - good * good.dot(v) - bad * bad.dot(v);
    EXPECT_LT(residual.norm(), 1e-10);
    EXPECT_NEAR(good_mass(problem.good(), s), amplified_success(problem.theta(), k), 1e-9);
    s = grover_operator(problem, s);
  }
}

TEST(Amplification, WholeUniverseIsGood) {
  const auto problem = hadamard_problem(2, {0, 1, 2, 3});
  EXPECT_EQ(optimal_iterations(problem), 0);
  EXPECT_NEAR(good_mass(problem.good(), amplitude_amplify(problem)), 1.0, 1e-12);
}

TEST(Amplification, OperatorMatchesExplicitMatrix) {
  Xoshiro256 rng(71);
  Circuit prep(2);
  prep.add(Gate::generic({0, 1}, qt::random_unitary(2, rng)));
  const AmplificationProblem problem(prep, GoodSet::of(4, {1}));
  const qt::Matrix u = qt::full_operator(prep);
  qt::Matrix sg = qt::Matrix::Identity(4, 4), s0 = qt::Matrix::Identity(4, 4);
  sg(1, 1) = -1;
  s0(0, 0) = -1;
  const qt::Matrix q = -u * s0 * u.adjoint() * sg;
  const auto s = qt::random_state(2, rng);
  EXPECT_LT(qt::max_diff(grover_operator(problem, s), q * qt::to_eigen(s)), 1e-12);
  EXPECT_LT(qt::max_diff(simulate(emit_grover_operator(problem), s), q * qt::to_eigen(s)), 1e-12);
}

TEST(Amplification, ProblemValidation) {
  Circuit m(2);
  m.measure({0});
  EXPECT_THROW(AmplificationProblem(m, GoodSet::of(4, {1})), argument_error);
  EXPECT_THROW(AmplificationProblem(Circuit(2), GoodSet::of(8, {1})), argument_error);
}
