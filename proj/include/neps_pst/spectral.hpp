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

#ifndef NEPS_PST_SPECTRAL_HPP
#define NEPS_PST_SPECTRAL_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "neps_pst/gf2.hpp"
#include "neps_pst/graphs.hpp"

namespace neps_pst {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// exp(-i * pi * x), exact when 2x is an integer.
inline Complex exp_minus_i_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0) r += 2.0;
  const double twice = 2.0 * r;
  if (twice == std::floor(twice)) {
    switch (static_cast<int>(twice) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, -1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, 1.0};
    }
  }
  const double angle = std::numbers::pi * r;
  return {std::cos(angle), -std::sin(angle)};
}

/// A time value, either symbolic (multiple * tau_k with tau_k = pi / sqrt(2)^k)
/// or a plain real number.
///
/// The symbolic form keeps tau_k exact under multiplication by sqrt(2):
/// sqrt(2) * tau_k = tau_{k-1}. k may drop to zero or below (tau_0 = pi).
class Time {
 public:
  static Time tau(int k, double multiple = 1.0) { return Time(true, k, multiple); }
  static Time seconds(double t) { return Time(false, 0, t); }

  [[nodiscard]] bool is_tau() const { return symbolic_; }
  [[nodiscard]] int tau_k() const { return k_; }
  /// The multiple of tau_k, or the value itself for a plain time.
  [[nodiscard]] double multiple() const { return multiple_; }

  /// The time divided by pi.
  [[nodiscard]] double over_pi() const {
    if (!symbolic_) return multiple_ / std::numbers::pi;
    if (k_ % 2 == 0) return std::ldexp(multiple_, -k_ / 2);
    return std::ldexp(multiple_, -(k_ - 1) / 2) * std::numbers::sqrt2 / 2.0;
  }

  [[nodiscard]] double value() const {
    if (!symbolic_) return multiple_;
    if (k_ % 2 == 0) return std::ldexp(multiple_ * std::numbers::pi, -k_ / 2);
    return std::ldexp(multiple_ * std::numbers::pi, -(k_ - 1) / 2) * std::numbers::sqrt2 / 2.0;
  }

  [[nodiscard]] Time times_sqrt2() const {
    return symbolic_ ? Time(true, k_ - 1, multiple_) : Time(false, 0, multiple_ * std::numbers::sqrt2);
  }
  [[nodiscard]] Time scaled(double c) const { return Time(symbolic_, k_, multiple_ * c); }
  [[nodiscard]] Time negated() const { return scaled(-1.0); }
  [[nodiscard]] bool is_zero() const { return multiple_ == 0.0; }

  /// exp(-i * t).
  [[nodiscard]] Complex phase() const {
    if (!symbolic_) return std::polar(1.0, -multiple_);
    return exp_minus_i_pi(over_pi());
  }

  [[nodiscard]] std::string to_string() const {
    if (!symbolic_) return std::to_string(multiple_);
    std::string s = "tau:" + std::to_string(k_);
    if (multiple_ != 1.0) s += "*" + std::to_string(multiple_);
    return s;
  }

 private:
  Time(bool symbolic, int k, double multiple) : symbolic_(symbolic), k_(k), multiple_(multiple) {}

  bool symbolic_;
  int k_;
  double multiple_;
};

/// Distinct eigenvalues (ascending) with their orthogonal projectors.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<RealMatrix> projectors;

  [[nodiscard]] Eigen::Index order() const { return projectors.empty() ? 0 : projectors.front().rows(); }

  [[nodiscard]] RealMatrix reconstruct() const {
    RealMatrix a = RealMatrix::Zero(order(), order());
    for (std::size_t r = 0; r < eigenvalues.size(); ++r) a += eigenvalues[r] * projectors[r];
    return a;
  }
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().maxCoeff());
}

template <typename DerivedA, typename DerivedB>
double max_abs_diff(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shapes differ");
  }
  return max_abs(a - b);
}

inline double default_group_tol(const RealMatrix& a) { return 1e-8 * (1.0 + max_abs(a)); }

/// Symmetric eigendecomposition with eigenvalues closer than `group_tol`
/// merged into one distinct eigenvalue. A negative tolerance selects the
/// default 1e-8 * (1 + max|a_ij|).
inline SpectralDecomposition eigendecompose(const RealMatrix& a, double group_tol = -1.0) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigendecompose needs a square matrix");
  if (max_abs_diff(a, a.transpose()) > 1e-12 * (1.0 + max_abs(a))) {
    throw std::invalid_argument("eigendecompose needs a symmetric matrix");
  }
  if (group_tol < 0) group_tol = default_group_tol(a);

  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver failed to converge");
  }
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();

  SpectralDecomposition s;
  Eigen::Index start = 0;
  const Eigen::Index order = a.rows();
  while (start < order) {
    Eigen::Index stop = start + 1;
    while (stop < order && values(stop) - values(stop - 1) <= group_tol) ++stop;
    const Eigen::Index width = stop - start;
    const auto cluster = vectors.middleCols(start, width);
    s.eigenvalues.push_back(values.segment(start, width).mean());
    s.projectors.push_back(cluster * cluster.transpose());
    start = stop;
  }
  return s;
}

/// Closed-form decomposition of P3: eigenvalues (-sqrt 2, 0, sqrt 2).
inline SpectralDecomposition p3_spectral() {
  constexpr double r2 = std::numbers::sqrt2;
  RealMatrix e1(3, 3);
  e1 << 1, -r2, 1, -r2, 2, -r2, 1, -r2, 1;
  RealMatrix e2(3, 3);
  e2 << 1, 0, -1, 0, 0, 0, -1, 0, 1;
  RealMatrix e3(3, 3);
  e3 << 1, r2, 1, r2, 2, r2, 1, r2, 1;
  return {{-r2, 0.0, r2}, {e1 / 4.0, e2 / 2.0, e3 / 4.0}};
}

/// H(t) = sum_r exp(-i t lambda_r) E_r.
inline ComplexMatrix transition_matrix(const SpectralDecomposition& s, const Time& t) {
  const Eigen::Index order = s.order();
  ComplexMatrix h = ComplexMatrix::Zero(order, order);
  for (std::size_t r = 0; r < s.eigenvalues.size(); ++r) {
    h += t.scaled(s.eigenvalues[r]).phase() * s.projectors[r].cast<Complex>();
  }
  return h;
}

/// Transition matrix of NEPS(P3, ..., P3; {beta}) at time t.
///
/// Walks the coordinates left to right. A zero coordinate tensors on I3.
/// A one coordinate is a Kronecker product with P3, so its transition is
/// conj(X) (x) E1 + I (x) E2 + X (x) E3 where X is the prefix transition at
/// sqrt(2) * t. The prefix before any coordinate is the 1 x 1 matrix [1].
inline ComplexMatrix factor_transition(const BitVector& beta, const Time& t) {
  if (beta.none()) throw std::invalid_argument("factor_transition needs a nonzero row");
  const int n = beta.size();

  // Time at which the empty prefix is evaluated.
  Time base = t;
  for (int i = 0; i < weight(beta); ++i) base = base.times_sqrt2();

  const SpectralDecomposition p3 = p3_spectral();
  const RealMatrix& e1 = p3.projectors[0];
  const RealMatrix& e2 = p3.projectors[1];
  const RealMatrix& e3 = p3.projectors[2];

  ComplexMatrix h(1, 1);
  h(0, 0) = base.phase();
  for (int i = 0; i < n; ++i) {
    const Eigen::Index m = h.rows();
    ComplexMatrix next = ComplexMatrix::Zero(3 * m, 3 * m);
    if (!beta[i]) {
      for (Eigen::Index a = 0; a < m; ++a) {
        for (Eigen::Index b = 0; b < m; ++b) {
          const Complex x = h(a, b);
          if (x == Complex{}) continue;
          for (Eigen::Index p = 0; p < 3; ++p) next(3 * a + p, 3 * b + p) = x;
        }
      }
    } else {
      for (Eigen::Index a = 0; a < m; ++a) {
        for (Eigen::Index b = 0; b < m; ++b) {
          const Complex x = h(a, b);
          const Complex xc = std::conj(x);
          const double diag = (a == b) ? 1.0 : 0.0;
          for (Eigen::Index p = 0; p < 3; ++p) {
            for (Eigen::Index q = 0; q < 3; ++q) {
              next(3 * a + p, 3 * b + q) = xc * e1(p, q) + diag * e2(p, q) + x * e3(p, q);
            }
          }
        }
      }
    }
    h = std::move(next);
  }
  return h;
}

/// H_Omega(t) as the ordered product of the per-row transitions.
inline ComplexMatrix product_transition(const Basis& basis, const Time& t) {
  ComplexMatrix h = factor_transition(basis[0], t);
  for (std::size_t i = 1; i < basis.size(); ++i) {
    h = (h * factor_transition(basis[i], t)).eval();
  }
  return h;
}

/// exp(-i t A) by scaling and squaring of the truncated power series.
/// Independent of every spectral route in this header.
inline ComplexMatrix expm_oracle(const RealMatrix& a, double t) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm_oracle needs a square matrix");
  const Eigen::Index order = a.rows();
  const ComplexMatrix x = Complex(0.0, -t) * a.cast<Complex>();
  const double norm1 = order == 0 ? 0.0 : x.cwiseAbs().colwise().sum().maxCoeff();

  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  constexpr int kMaxSquarings = 60;
  if (squarings > kMaxSquarings) {
    throw std::overflow_error("expm_oracle: |tA| exceeds the scaling budget");
  }
  const ComplexMatrix y = x / std::ldexp(1.0, squarings);

  ComplexMatrix sum = ComplexMatrix::Identity(order, order);
  ComplexMatrix term = ComplexMatrix::Identity(order, order);
  for (int k = 1; k <= 40; ++k) {
    term = (term * y).eval() / static_cast<double>(k);
    sum += term;
    if (max_abs(term) < 1e-20) break;
  }
  for (int i = 0; i < squarings; ++i) sum = (sum * sum).eval();
  return sum;
}

/// max |(H H^*)_ij - delta_ij|.
inline double unitarity_residual(const ComplexMatrix& h) {
  return max_abs_diff(h * h.adjoint(), ComplexMatrix::Identity(h.rows(), h.cols()));
}

/// max |H_ij - H_ji|.
inline double symmetry_residual(const ComplexMatrix& h) { return max_abs_diff(h, h.transpose()); }

}  // namespace neps_pst

#endif  // NEPS_PST_SPECTRAL_HPP
