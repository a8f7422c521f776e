// Copyright 2026 The neps-pst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "neps_pst/spectral.hpp"

#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace neps_pst;
namespace nt = neps_pst::testing;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix p3_at_tau1() {
  ComplexMatrix h = ComplexMatrix::Zero(3, 3);
  h(0, 2) = h(2, 0) = h(1, 1) = -1.0;
  return h;
}

void expect_projector_algebra(const SpectralDecomposition& s, const RealMatrix& a) {
  const Eigen::Index order = a.rows();
  RealMatrix sum = RealMatrix::Zero(order, order);
  for (std::size_t r = 0; r < s.projectors.size(); ++r) {
    const RealMatrix& e = s.projectors[r];
    EXPECT_LE(max_abs_diff(e * e, e), 1e-10);
    for (std::size_t q = 0; q < s.projectors.size(); ++q) {
      if (q != r) EXPECT_LE(max_abs(e * s.projectors[q]), 1e-10);
    }
    sum += e;
  }
  EXPECT_LE(max_abs_diff(sum, RealMatrix::Identity(order, order)), 1e-10);
  EXPECT_LE(max_abs_diff(s.reconstruct(), a), 1e-10);
  EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
}

}  // namespace

TEST(time, tau_values_and_sqrt2_relation) {
  for (int k = -2; k <= 8; ++k) {
    EXPECT_NEAR(Time::tau(k).value(), kPi / std::pow(std::numbers::sqrt2, k), 1e-14);
    EXPECT_NEAR(std::numbers::sqrt2 * Time::tau(k + 1).value(), Time::tau(k).value(), 1e-14);
    EXPECT_EQ(Time::tau(k + 1).times_sqrt2().tau_k(), k);
  }
  EXPECT_EQ(Time::tau(0).phase(), Complex(-1.0, 0.0));
  EXPECT_EQ(Time::tau(2).phase(), Complex(0.0, -1.0));
  EXPECT_EQ(Time::tau(-2).phase(), Complex(1.0, 0.0));
  EXPECT_NEAR(std::abs(Time::seconds(0.3).phase() - std::polar(1.0, -0.3)), 0.0, 1e-16);
}

TEST(exp_minus_i_pi, exact_at_half_integers) {
  EXPECT_EQ(exp_minus_i_pi(0.0), Complex(1, 0));
  EXPECT_EQ(exp_minus_i_pi(0.5), Complex(0, -1));
  EXPECT_EQ(exp_minus_i_pi(1.0), Complex(-1, 0));
  EXPECT_EQ(exp_minus_i_pi(-0.5), Complex(0, 1));
  EXPECT_EQ(exp_minus_i_pi(7.0), Complex(-1, 0));
  EXPECT_NEAR(std::abs(exp_minus_i_pi(0.25) - std::polar(1.0, -kPi / 4)), 0.0, 1e-15);
}

TEST(eigendecompose, path3_spectrum_and_projectors) {
  const SpectralDecomposition s = eigendecompose(path3(), 1e-9);
  ASSERT_EQ(s.eigenvalues.size(), 3U);
  EXPECT_NEAR(s.eigenvalues[0], -std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(s.eigenvalues[1], 0.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues[2], std::numbers::sqrt2, 1e-12);
  const SpectralDecomposition closed = p3_spectral();
  for (int r = 0; r < 3; ++r) {
    EXPECT_LE(max_abs_diff(s.projectors[static_cast<std::size_t>(r)],
                           closed.projectors[static_cast<std::size_t>(r)]),
              1e-12);
  }
  expect_projector_algebra(s, path3());
}

TEST(eigendecompose, identity_and_complete_graph) {
  const SpectralDecomposition id = eigendecompose(RealMatrix::Identity(3, 3));
  ASSERT_EQ(id.eigenvalues.size(), 1U);
  EXPECT_NEAR(id.eigenvalues[0], 1.0, 1e-14);
  EXPECT_LE(max_abs_diff(id.projectors[0], RealMatrix::Identity(3, 3)), 1e-14);

  const SpectralDecomposition k4 = eigendecompose(complete_graph(4));
  ASSERT_EQ(k4.eigenvalues.size(), 2U);
  EXPECT_NEAR(k4.eigenvalues[0], -1.0, 1e-12);
  EXPECT_NEAR(k4.eigenvalues[1], 3.0, 1e-12);
  EXPECT_NEAR(k4.projectors[0].trace(), 3.0, 1e-12);
  EXPECT_NEAR(k4.projectors[1].trace(), 1.0, 1e-12);
}

TEST(eigendecompose, rejects_non_symmetric) {
  RealMatrix a(2, 2);
  a << 0, 1, 0, 0;
  EXPECT_THROW(eigendecompose(a), std::invalid_argument);
}

TEST(eigendecompose, projector_algebra_on_neps_spectra) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Basis b = nt::random_basis(1 + trial % 4, rng);
    const RealMatrix a = neps_adjacency(b);
    expect_projector_algebra(eigendecompose(a), a);
  }
}

TEST(p3_spectral, idempotent_identities) {
  const SpectralDecomposition s = p3_spectral();
  const auto& e = s.projectors;
  EXPECT_LE(max_abs_diff(e[0] + e[1] + e[2], RealMatrix::Identity(3, 3)), 1e-15);
  EXPECT_LE(max_abs_diff(e[0] - e[1] + e[2], RealMatrix(flip_matrix().cast<double>())), 1e-15);
  expect_projector_algebra(s, path3());
}

TEST(transition_matrix, p2_closed_form) {
  const RealMatrix p2 = complete_graph(2);
  const SpectralDecomposition s = eigendecompose(p2);
  for (double t : {0.0, 0.4, kPi / 2, 2.0}) {
    const ComplexMatrix expected =
        std::cos(t) * ComplexMatrix::Identity(2, 2) - Complex(0, std::sin(t)) * nt::to_complex(p2);
    EXPECT_LE(max_abs_diff(transition_matrix(s, Time::seconds(t)), expected), 1e-12);
  }
  const ComplexMatrix swap = Complex(0, -1) * nt::to_complex(p2);
  EXPECT_LE(max_abs_diff(transition_matrix(s, Time::seconds(kPi / 2)), swap), 1e-12);
}

TEST(transition_matrix, p3_at_tau1_and_zero) {
  EXPECT_LE(max_abs_diff(transition_matrix(p3_spectral(), Time::tau(1)), p3_at_tau1()), 1e-12);
  const ComplexMatrix h0 = transition_matrix(eigendecompose(path3()), Time::seconds(0));
  EXPECT_LE(max_abs_diff(h0, ComplexMatrix::Identity(3, 3)), 1e-14);
}

TEST(factor_transition, single_coordinate_is_minus_flip) {
  const ComplexMatrix h = factor_transition(BitVector::from_string("1"), Time::tau(1));
  EXPECT_LE(max_abs_diff(h, p3_at_tau1()), 1e-15);
}

TEST(factor_transition, trailing_zero_tensors_identity) {
  const ComplexMatrix h = factor_transition(BitVector::from_string("10"), Time::tau(1));
  EXPECT_LE(max_abs_diff(h, kron(p3_at_tau1(), ComplexMatrix::Identity(3, 3))), 1e-15);
}

TEST(factor_transition, weight_two_row_at_tau2) {
  const BitVector beta = BitVector::from_string("11");
  const ComplexMatrix h = factor_transition(beta, Time::tau(2));
  // With X = H_(1)(tau_1) = -P: (X + I) (x) E2 + X (x) P.
  const ComplexMatrix x = -nt::flip3();
  const ComplexMatrix e2 = p3_spectral().projectors[1].cast<Complex>();
  const ComplexMatrix expected = kron(ComplexMatrix(x + ComplexMatrix::Identity(3, 3)), e2) + kron(x, nt::flip3());
  EXPECT_LE(max_abs_diff(h, expected), 1e-14);
  EXPECT_LE(max_abs_diff(h, expm_oracle(kron(path3(), path3()), Time::tau(2).value())), 1e-10);
  EXPECT_LE(max_abs_diff(h, factor_transition(beta, Time::tau(2).negated())), 1e-14);
}

TEST(factor_transition, matches_series_on_every_row) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
      const BitVector beta(n, w);
      const RealMatrix a = neps_adjacency(Basis(n, {beta}));
      for (const Time& t : {Time::tau(weight(beta)), Time::seconds(0.9), Time::tau(1, 3.0)}) {
        EXPECT_LE(max_abs_diff(factor_transition(beta, t), expm_oracle(a, t.value())), 1e-10)
            << beta.to_string() << " at " << t.to_string();
      }
    }
  }
}

TEST(factor_transition, rejects_zero_row) {
  EXPECT_THROW(factor_transition(BitVector(3), Time::tau(1)), std::invalid_argument);
}

TEST(product_transition, examples) {
  const Basis single = Basis::from_strings({"101"});
  EXPECT_EQ(product_transition(single, Time::seconds(0.8)),
            factor_transition(single[0], Time::seconds(0.8)));

  const ComplexMatrix pp = kron(nt::flip3(), nt::flip3());
  const Basis cart = identity_basis(2);
  EXPECT_LE(max_abs_diff(product_transition(cart, Time::tau(1)), pp), 1e-14);
  EXPECT_LE(max_abs_diff(expm_oracle(neps_adjacency(cart), Time::tau(1).value()), pp), 1e-10);

  std::mt19937 rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    const Basis b = nt::random_basis(3, rng);
    EXPECT_LE(max_abs_diff(product_transition(b, Time::seconds(0.0)), ComplexMatrix::Identity(27, 27)),
              1e-14);
  }
}

TEST(expm_oracle, examples) {
  EXPECT_LE(max_abs_diff(expm_oracle(path3(), 0.0), ComplexMatrix::Identity(3, 3)), 0.0);
  EXPECT_LE(max_abs_diff(expm_oracle(path3(), Time::tau(1).value()), p3_at_tau1()), 1e-10);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    RealMatrix a(5, 5);
    for (Eigen::Index i = 0; i < 5; ++i) {
      for (Eigen::Index j = i; j < 5; ++j) a(i, j) = a(j, i) = u(rng);
    }
    EXPECT_LE(max_abs_diff(expm_oracle(a, 0.7), transition_matrix(eigendecompose(a), Time::seconds(0.7))),
              1e-9);
  }
}

TEST(expm_oracle, scaling_budget_overflow) {
  EXPECT_THROW(expm_oracle(path3(), 1e30), std::overflow_error);
}

TEST(transition, triple_agreement_unitary_symmetric) {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> pick_t(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial % 4;
    const Basis b = nt::random_basis(n, rng);
    const Time t = Time::seconds(pick_t(rng));
    const RealMatrix a = neps_adjacency(b);
    const ComplexMatrix hp = product_transition(b, t);
    const ComplexMatrix hs = transition_matrix(eigendecompose(a), t);
    const ComplexMatrix he = expm_oracle(a, t.value());
    EXPECT_LE(max_abs_diff(hp, hs), 1e-9);
    EXPECT_LE(max_abs_diff(hp, he), 1e-9);
    EXPECT_LE(max_abs_diff(hs, he), 1e-9);
    for (const ComplexMatrix* h : {&hp, &hs, &he}) {
      EXPECT_LE(unitarity_residual(*h), 1e-10);
      EXPECT_LE(symmetry_residual(*h), 1e-10);
    }
  }
}
