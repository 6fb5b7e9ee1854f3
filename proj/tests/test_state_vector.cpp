#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "qpat/qpat.hpp"

using namespace qpat;

TEST(StateVector, ZeroStateHasSingleUnitAmplitude) {
  const auto s = state_zero(3);
  ASSERT_EQ(s.dimension(), 8u);
  EXPECT_EQ(s[0], amplitude(1.0));
  for (std::size_t i = 1; i < 8; ++i) EXPECT_EQ(s[i], amplitude(0.0));
}

TEST(StateVector, CapacityErrorAboveCap) {
  EXPECT_THROW(state_zero(25), capacity_error);
  EXPECT_THROW(state_zero(0), capacity_error);
  ScopedQubitCap cap(4);
  EXPECT_THROW(state_zero(5), capacity_error);
  EXPECT_NO_THROW(state_zero(4));
}

TEST(StateVector, RejectsUnnormalizedAndWrongLength) {
  EXPECT_THROW(StateVector(1, {1.0, 1.0}), argument_error);
  EXPECT_THROW(StateVector(2, {1.0, 0.0}), argument_error);
  EXPECT_THROW(StateVector(1, {amplitude(NAN, 0.0), 0.0}), argument_error);
  EXPECT_THROW(StateVector::normalized(1, {0.0, 0.0}), argument_error);
  const auto s = StateVector::normalized(1, {3.0, 4.0});
  EXPECT_NEAR(s[0].real(), 0.6, 1e-15);
  EXPECT_NEAR(s[1].real(), 0.8, 1e-15);
}

TEST(StateVector, TensorPutsSecondFactorOnLowQubits) {
  const auto s = tensor(StateVector::basis(1, 1), StateVector::basis(2, 0));
  EXPECT_EQ(s.num_qubits(), 3);
  EXPECT_EQ(s[4], amplitude(1.0));
  const auto t = tensor(StateVector::basis(2, 2), StateVector::basis(1, 1));
  EXPECT_EQ(t[5], amplitude(1.0));
}

TEST(StateVector, BitstringsPrintHighQubitFirst) {
  EXPECT_EQ(to_bitstring(5, 3), "101");
  EXPECT_EQ(to_bitstring(1, 4), "0001");
  EXPECT_EQ(parse_bitstring("110"), 6u);
  EXPECT_THROW(parse_bitstring("12"), argument_error);
  EXPECT_THROW(parse_bitstring(""), argument_error);
}

TEST(StateVector, GlobalPhaseEquality) {
  const double r = 1.0 / std::sqrt(2.0);
  const StateVector a(1, {r, r});
  const amplitude g = std::polar(1.0, 0.7);
  const StateVector b(1, {g * r, g * r});
  EXPECT_TRUE(states_equal_up_to_global_phase(a, b, 1e-12));
  EXPECT_GT(max_abs_diff(a, b), 0.1);
  const StateVector c(1, {r, -r});
  EXPECT_FALSE(states_equal_up_to_global_phase(a, c, 1e-12));
}

TEST(StateVector, InnerProduct) {
  const double r = 1.0 / std::sqrt(2.0);
  const StateVector plus(1, {r, r});
  EXPECT_NEAR(std::abs(inner_product(plus, StateVector::basis(1, 0))), r, 1e-15);
  EXPECT_NEAR(std::abs(inner_product(plus, plus)), 1.0, 1e-15);
}
