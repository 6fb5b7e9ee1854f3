#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "qpat/qpat.hpp"
#include "support/oracles.hpp"

using namespace qpat;
namespace qt = qpat::testing;

namespace {

struct GarbageCase {
  Circuit f_impl;
  RegisterLayout layout;
  BooleanFunction f;
};

std::vector<int> range(int first, int size) { return QubitRange{first, size}.qubits(); }

// |x>|0>|0> -> sum_y a_y |x>|y>|f(x)>: the workspace first receives h(x),
// the result register is computed from the workspace as g(h(x)), then the
// workspace is scrambled by a random unitary.
GarbageCase make_garbage_case(int n, int w, int r, Xoshiro256& rng) {
  const auto layout = RegisterLayout::stacked(n, w, {{"result", r}});
  const int total = layout.total_qubits();
  const auto h = qt::random_function(n, w, rng);
  const auto g = qt::random_function(w, r, rng);

  Circuit c(total);
  std::vector<int> xw = range(layout.workspace().first, w);
  for (int q : layout.computational().qubits()) xw.push_back(q);
  std::vector<basis_index> p1(dimension_of(n + w));
  for (basis_index b = 0; b < p1.size(); ++b) p1[b] = b ^ h(b >> w);
  c.add(Gate::permutation_of(xw, p1));

  std::vector<int> wr = range(0, r);
  for (int q : layout.workspace().qubits()) wr.push_back(q);
  std::vector<basis_index> p2(dimension_of(w + r));
  for (basis_index b = 0; b < p2.size(); ++b) p2[b] = b ^ g(b >> r);
  c.add(Gate::permutation_of(wr, p2));

  c.add(Gate::generic(layout.workspace().qubits(), qt::random_unitary(w, rng)));
  if (n >= 1) c.cnot(layout.computational().first, layout.workspace().first);

  const auto f = BooleanFunction::from_map(n, r, [&](basis_index x) { return g(h(x)); });
  return {std::move(c), layout, f};
}

}  // namespace

TEST(Uncompute, HandExampleNotX) {
  const auto layout = RegisterLayout::stacked(1, 1, {{"result", 1}});
  Circuit f_impl(3);
  f_impl.cnot(2, 1).cnot(2, 0).x(0);
  EXPECT_EQ(simulate(f_impl, StateVector::basis(3, 4)), StateVector::basis(3, 0b110));
  EXPECT_EQ(uncompute(f_impl, layout, StateVector::basis(3, 4)), StateVector::basis(3, 0b100));
  EXPECT_EQ(uncompute(f_impl, layout, StateVector::basis(3, 0)), StateVector::basis(3, 0b001));
}

TEST(Uncompute, GarbageFreeComputationIsUnchanged) {
  const auto layout = RegisterLayout::stacked(2, 1, {{"result", 1}});
  Circuit f_impl(4);
  f_impl.cnot(3, 0).cnot(2, 0);
  Xoshiro256 rng(60);
  const auto in = tensor(qt::random_state(2, rng), state_zero(2));
  EXPECT_LT(max_abs_diff(uncompute(f_impl, layout, in), simulate(f_impl, in)), 1e-12);
}

TEST(Uncompute, RandomGarbageCircuits) {
  Xoshiro256 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + int(rng.uniform_int(2)), w = 1 + int(rng.uniform_int(2)), r = 1 + int(rng.uniform_int(2));
    const auto gc = make_garbage_case(n, w, r, rng);
    const auto x = qt::random_state(n, rng);
    const auto in = tensor(x, state_zero(w + r));
    std::vector<amplitude> alpha(x.amplitudes().begin(), x.amplitudes().end());
    const auto out = uncompute(gc.f_impl, gc.layout, in);
    EXPECT_LT(max_abs_diff(out, qt::direct_uncomputed_state(alpha, gc.f, w)), 1e-10) << "trial " << trial;
    const auto ws = gc.layout.workspace().qubits();
    EXPECT_GT(marginal_probabilities(out, ws)[0], 1.0 - 1e-10);
    EXPECT_TRUE(is_separable(out, std::span<const int>(ws)));
  }
}

TEST(Uncompute, UniformInputMatchesFunctionTable) {
  Xoshiro256 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const auto gc = make_garbage_case(2, 2, 1, rng);
    const auto in = tensor(uniform_superposition(state_zero(2), {0, 1}), state_zero(3));
    const auto out = uncompute(gc.f_impl, gc.layout, in);
    const auto table = function_table(gc.f);
    // |x>|0>|f(x)>: drop the zero workspace and compare with |x>|f(x)>.
    EXPECT_LT(max_abs_diff(discard_register(out, {1, 2}), table), 1e-10);
  }
}

TEST(Uncompute, EmitMatchesStateVersion) {
  Xoshiro256 rng(63);
  for (int trial = 0; trial < 10; ++trial) {
    const auto gc = make_garbage_case(2, 1, 1, rng);
    const auto in = tensor(qt::random_state(2, rng), state_zero(2));
    const Circuit c = emit_uncompute(gc.f_impl, gc.layout);
    const auto recorded = discard_register(simulate(c, tensor(in, state_zero(1))), {0});
    EXPECT_LT(max_abs_diff(recorded, uncompute(gc.f_impl, gc.layout, in)), 1e-10);
    for (const auto& op : c.ops()) EXPECT_EQ(op.tag, tags::uncompute);
  }
}

TEST(Uncompute, EntangledResultIsRefused) {
  const auto layout = RegisterLayout::stacked(1, 1, {{"result", 1}});
  Circuit f_impl(3);
  f_impl.h(0);
  EXPECT_THROW(uncompute(f_impl, layout, state_zero(3)), entangled_discard_error);
}

TEST(Uncompute, ArgumentErrors) {
  const auto layout = RegisterLayout::stacked(1, 1, {{"result", 1}});
  EXPECT_THROW(uncompute(Circuit(2), layout, state_zero(3)), argument_error);
  EXPECT_THROW(uncompute(Circuit(3), layout, state_zero(2)), argument_error);
  EXPECT_THROW(uncompute(Circuit(2), RegisterLayout::standard(1, 1), state_zero(2)), argument_error);
  Circuit m(3);
  m.measure({0});
  EXPECT_THROW(uncompute(m, layout, state_zero(3)), argument_error);
}
