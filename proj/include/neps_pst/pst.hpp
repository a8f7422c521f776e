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

#ifndef NEPS_PST_PST_HPP
#define NEPS_PST_PST_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "neps_pst/gf2.hpp"
#include "neps_pst/graphs.hpp"
#include "neps_pst/spectral.hpp"

namespace neps_pst {

using StructuralMatrix = Eigen::Matrix3i;

/// The anti-diagonal flip of P3's vertices; P^2 = I and P = E1 - E2 + E3.
inline StructuralMatrix flip_matrix() {
  StructuralMatrix p;
  p << 0, 0, 1, 0, 1, 0, 1, 0, 0;
  return p;
}

/// Middle entry of an odd-order square matrix.
template <typename Derived>
typename Derived::Scalar center(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols() || a.rows() % 2 == 0) {
    throw std::invalid_argument("center needs a square matrix of odd order, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  const Eigen::Index mid = a.rows() / 2;
  return a(mid, mid);
}

/// Central 3x3 principal submatrix of an odd-order square matrix.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 3, 3> m3(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols() || a.rows() % 2 == 0 || a.rows() < 3) {
    throw std::invalid_argument("m3 needs a square matrix of odd order >= 3, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  const Eigen::Index first = a.rows() / 2 - 1;
  return a.block(first, first, 3, 3);
}

/// Principal submatrix of a 3^n-order matrix on the vertices (U_j, center, V_j).
/// For j = n this is m3; for other j it equals m3 of the matrix obtained by
/// exchanging coordinates j and n.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 3, 3> m3_at_coordinate(const Eigen::MatrixBase<Derived>& a,
                                                                int n, int j) {
  if (j < 1 || j > n) throw std::out_of_range("coordinate j must be in [1, n]");
  if (static_cast<std::size_t>(a.rows()) != pow3(n) || a.rows() != a.cols()) {
    throw std::invalid_argument("matrix order does not match 3^n");
  }
  const Eigen::Index idx[3] = {static_cast<Eigen::Index>(u_vertex(n, j)),
                               static_cast<Eigen::Index>(center_vertex(n)),
                               static_cast<Eigen::Index>(v_vertex(n, j))};
  Eigen::Matrix<typename Derived::Scalar, 3, 3> out;
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 3; ++q) out(p, q) = a(idx[p], idx[q]);
  }
  return out;
}

/// Exact M3 of H_Omega(tau_k) at coordinate j (1-based): (-1)^m P^r, where
/// m = |Omega| and r counts the rows with a one in coordinate j.
inline StructuralMatrix predict_m3(const Basis& basis, int j) {
  if (!has_uniform_weight(basis)) {
    throw std::invalid_argument("predict_m3 needs every row to have the same weight");
  }
  if (j < 1 || j > basis.n()) throw std::out_of_range("coordinate j must be in [1, n]");
  int r = 0;
  for (const auto& row : basis) r += row[j - 1] ? 1 : 0;
  const int sign = basis.size() % 2 == 0 ? 1 : -1;
  const StructuralMatrix base = r % 2 == 0 ? StructuralMatrix::Identity() : flip_matrix();
  return sign * base;
}

struct PstCheck {
  bool verdict;
  double magnitude;
  double phase;  // in (-pi, pi]
};

/// Tests | |H[u,v]| - 1 | <= tol. With u == v this is periodicity at u.
inline PstCheck check_pst(const ComplexMatrix& h, std::size_t u, std::size_t v, double tol) {
  const auto order = static_cast<std::size_t>(h.rows());
  if (u >= order || v >= order) {
    throw std::out_of_range("vertex index outside the transition matrix of order " +
                            std::to_string(order));
  }
  const Complex z = h(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
  const double magnitude = std::abs(z);
  double phase = std::arg(z);
  if (phase <= -std::numbers::pi + 1e-12) phase += 2.0 * std::numbers::pi;
  return {std::abs(magnitude - 1.0) <= tol, magnitude, phase};
}

enum class ClaimKind { Pst, Periodic };

inline const char* to_string(ClaimKind k) { return k == ClaimKind::Pst ? "pst" : "periodic"; }

/// One predicted transfer or periodicity event and its numeric measurement.
struct Claim {
  int j;  // coordinate (1-based); 0 marks the all-2 center vertex
  ClaimKind kind;
  std::size_t u;
  std::size_t v;
  Time time;
  int predicted_sign;  // the amplitude is predicted to be exactly this (+1 or -1)
  bool checked = false;
  double magnitude = std::numeric_limits<double>::quiet_NaN();
  double phase = std::numeric_limits<double>::quiet_NaN();
  bool verified = false;
};

struct Premise {
  std::string name;
  bool holds;
};

/// Predicted M3 at one coordinate and its distance from the measured block.
struct StructuralCheck {
  int j;
  StructuralMatrix predicted;
  std::optional<double> residual;
};

/// Extra facts gathered when the NEPS is multiplied by another graph G.
struct ProductFacts {
  int g_order = 0;
  double r = 1.0;
  std::vector<double> g_eigenvalues;
  bool eigenvalues_odd = false;
  bool g_connected = false;
  bool g_bipartite = false;
  std::optional<int> neps_components;
  std::optional<int> product_components;
};

struct PstReport {
  int n = 0;
  std::size_t m = 0;
  int rank = 0;
  bool connected = false;
  ParityClass parity = ParityClass::Mixed;
  std::optional<int> k;
  std::optional<Basis> omega_star;
  std::optional<BitVector> omega_star_sum;
  std::optional<double> reduction_residual;
  std::vector<Premise> premises;
  std::vector<Claim> claims;
  std::vector<StructuralCheck> structural;
  std::vector<std::string> notes;
  bool numeric = false;
  std::optional<ProductFacts> product;

  [[nodiscard]] bool premises_hold() const {
    return std::all_of(premises.begin(), premises.end(), [](const Premise& p) { return p.holds; });
  }
  [[nodiscard]] bool claims_verified() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const Claim& c) { return !c.checked || c.verified; });
  }
};

struct AnalysisOptions {
  double tol = 1e-9;
  /// Largest n for which transition matrices are materialized.
  int numeric_max_n = 8;
};

namespace detail {

inline void fill_basic(PstReport& report, const Basis& basis) {
  report.n = basis.n();
  report.m = basis.size();
  report.rank = rank_gf2(basis);
  report.connected = report.rank == basis.n();
  report.parity = parity_class(basis);
}

/// Claims that hold for a uniform-weight basis at tau_k, in coordinate order,
/// followed by the center vertex.
inline void append_uniform_claims(PstReport& report, const Basis& uniform, int k) {
  const int n = uniform.n();
  const BitVector sum = column_sum(uniform);
  const int sign = uniform.size() % 2 == 0 ? 1 : -1;
  const Time t = Time::tau(k);
  for (int j = 1; j <= n; ++j) {
    const std::size_t u = u_vertex(n, j);
    const std::size_t v = v_vertex(n, j);
    if (sum[j - 1]) {
      report.claims.push_back({j, ClaimKind::Pst, u, v, t, sign});
    } else {
      report.claims.push_back({j, ClaimKind::Periodic, u, u, t, sign});
      report.claims.push_back({j, ClaimKind::Periodic, v, v, t, sign});
    }
    report.structural.push_back({j, predict_m3(uniform, j), std::nullopt});
  }
  const std::size_t c = center_vertex(n);
  report.claims.push_back({0, ClaimKind::Periodic, c, c, t, sign});
}

inline void measure(PstReport& report, const ComplexMatrix& h, double tol) {
  for (auto& claim : report.claims) {
    const PstCheck check = check_pst(h, claim.u, claim.v, tol);
    claim.checked = true;
    claim.magnitude = check.magnitude;
    claim.phase = check.phase;
    claim.verified = check.verdict;
  }
  for (auto& s : report.structural) {
    const Eigen::Matrix3cd measured = m3_at_coordinate(h, report.n, s.j);
    s.residual = max_abs_diff(measured, s.predicted.cast<double>().cast<Complex>());
  }
  report.numeric = true;
}

}  // namespace detail

/// Applies the uniform-weight classification: PST between U_j and V_j where
/// the column sum is 1, periodicity at U_j and V_j where it is 0, and
/// periodicity at the center, all at tau_k. Claims are measured numerically
/// on H_Omega(tau_k) when n is within the numeric cap.
inline PstReport theorem_f7_classify(const Basis& basis, const AnalysisOptions& opts = {}) {
  if (!has_uniform_weight(basis)) {
    throw std::invalid_argument("uniform classification needs every row to have the same weight");
  }
  PstReport report;
  detail::fill_basic(report, basis);
  const int k = weight(basis[0]);
  report.k = k;
  report.omega_star = basis;
  report.omega_star_sum = column_sum(basis);
  report.premises.push_back({"uniform_weight", true});
  detail::append_uniform_claims(report, basis, k);
  if (basis.n() <= opts.numeric_max_n) {
    detail::measure(report, product_transition(basis, Time::tau(k)), opts.tol);
  }
  return report;
}

struct Reduction {
  int k;
  Basis omega_star;
  double residual;  // max |H_Omega(tau_k) - H_Omega*(tau_k)|
};

/// Drops every row heavier than the minimum weight and measures how far the
/// transition matrix at tau_k moves. Requires all weights to share parity.
inline Reduction theorem_f8_reduce(const Basis& basis) {
  if (parity_class(basis) == ParityClass::Mixed) {
    throw std::invalid_argument("reduction needs all row weights to share parity (got mixed)");
  }
  auto [k, star] = min_weight_subset(basis);
  const Time t = Time::tau(k);
  const ComplexMatrix full = product_transition(basis, t);
  const ComplexMatrix reduced = product_transition(star, t);
  return {k, std::move(star), max_abs_diff(full, reduced)};
}

/// Evaluates the premises of the connected-PST criterion in order (full GF(2)
/// rank, shared parity, nonzero column sum of the minimum-weight rows) and
/// emits the claims that follow from the minimum-weight rows. Failed premises
/// are recorded, never thrown.
inline PstReport sufficient_condition(const Basis& basis, const AnalysisOptions& opts = {}) {
  PstReport report;
  detail::fill_basic(report, basis);
  report.premises.push_back({"connected", report.connected});
  if (!report.connected) {
    report.notes.push_back("GF(2) rank " + std::to_string(report.rank) + " < n = " +
                           std::to_string(basis.n()) + ": the graph is disconnected");
  }

  const bool uniform_parity = report.parity != ParityClass::Mixed;
  report.premises.push_back({"uniform_parity", uniform_parity});
  if (!uniform_parity) {
    report.notes.push_back("row weights mix parities: no prediction at any tau_k");
    return report;
  }

  auto [k, star] = min_weight_subset(basis);
  const BitVector sum = column_sum(star);
  report.k = k;
  report.omega_star = star;
  report.omega_star_sum = sum;
  report.premises.push_back({"omega_star_sum_nonzero", !sum.none()});
  if (sum.none()) {
    report.notes.push_back(
        "minimum-weight rows sum to zero: no PST predicted; periodicity at every U_j, V_j applies");
  }

  detail::append_uniform_claims(report, star, k);
  if (basis.n() <= opts.numeric_max_n) {
    const Time t = Time::tau(k);
    const ComplexMatrix h = product_transition(basis, t);
    if (star.size() != basis.size()) {
      report.reduction_residual = max_abs_diff(h, product_transition(star, t));
    } else {
      report.reduction_residual = 0.0;
    }
    detail::measure(report, h, opts.tol);
  }
  return report;
}

struct SingleRowCheck {
  StructuralMatrix expected;  // -I or -P
  double m3_residual;
  double reversal_residual;  // max |H(-tau) - H(tau)|
};

/// Measures M3 of H_beta(tau_{s(beta)}) against -I / -P (by the last bit)
/// and the time-reversal symmetry at that time.
inline SingleRowCheck single_row_check(const BitVector& beta) {
  const Time t = Time::tau(weight(beta));
  const ComplexMatrix forward = factor_transition(beta, t);
  const ComplexMatrix backward = factor_transition(beta, t.negated());
  const StructuralMatrix expected =
      beta[beta.size() - 1] ? StructuralMatrix(-flip_matrix()) : StructuralMatrix(-StructuralMatrix::Identity());
  const Eigen::Matrix3cd measured = m3(forward);
  return {expected, max_abs_diff(measured, expected.cast<double>().cast<Complex>()),
          max_abs_diff(forward, backward)};
}

/// True when value / r is within 1e-8 of an odd integer.
inline bool is_odd_multiple(double value, double r) {
  const double q = value / r;
  const double nearest = std::round(q);
  return std::abs(q - nearest) <= 1e-8 && std::fmod(std::abs(nearest), 2.0) == 1.0;
}

/// Checks the lift of NEPS PST to the Kronecker product NEPS x G at time
/// tau_k / r, where every eigenvalue of G must be an odd multiple of r.
///
/// The transition matrix is assembled as sum_s H_Omega(lambda_s tau_k / r) (x) F_s
/// over G's spectrum, and PST is measured at ((U_j, w), (V_j, w)) for every
/// coordinate j with nonzero minimum-weight column sum and every vertex w of G.
inline PstReport theorem_f9_check(const Basis& basis, const RealMatrix& g, double r,
                                  const AnalysisOptions& opts = {}) {
  if (r == 0.0) throw std::invalid_argument("the eigenvalue scale r must be nonzero");
  if (g.rows() != g.cols() || g.rows() < 1) throw std::invalid_argument("G must be square");

  AnalysisOptions structural_only = opts;
  structural_only.numeric_max_n = -1;
  PstReport report = sufficient_condition(basis, structural_only);
  report.claims.clear();
  report.structural.clear();

  const SpectralDecomposition gs = eigendecompose(g);
  ProductFacts facts;
  facts.g_order = static_cast<int>(g.rows());
  facts.r = r;
  facts.g_eigenvalues = gs.eigenvalues;
  facts.eigenvalues_odd = std::all_of(gs.eigenvalues.begin(), gs.eigenvalues.end(),
                                      [r](double lambda) { return is_odd_multiple(lambda, r); });
  facts.g_connected = connected_components(g).count == 1;
  facts.g_bipartite = is_bipartite(g);
  report.premises.push_back({"eigenvalues_odd_multiples", facts.eigenvalues_odd});
  if (!facts.eigenvalues_odd) {
    report.notes.push_back("some eigenvalue of G divided by r is not an odd integer");
  }
  if (facts.g_connected && !facts.g_bipartite) {
    report.notes.push_back("G is connected and non-bipartite: the product has as many components as the NEPS");
  }

  const bool numeric = basis.n() <= opts.numeric_max_n;
  if (numeric) {
    const RealMatrix a = neps_adjacency(basis);
    facts.neps_components = connected_components(a).count;
    facts.product_components = connected_components(kron(a, g)).count;
  }

  if (report.premises_hold()) {
    const int k = *report.k;
    const int n = basis.n();
    const auto order_g = static_cast<std::size_t>(g.rows());
    const Time t = Time::tau(k, 1.0 / r);
    for (int j = 1; j <= n; ++j) {
      if (!(*report.omega_star_sum)[j - 1]) continue;
      for (std::size_t w = 0; w < order_g; ++w) {
        report.claims.push_back({j, ClaimKind::Pst, u_vertex(n, j) * order_g + w,
                                 v_vertex(n, j) * order_g + w, t,
                                 report.omega_star->size() % 2 == 0 ? 1 : -1});
      }
    }
    if (numeric) {
      const Eigen::Index big = static_cast<Eigen::Index>(pow3(n) * order_g);
      ComplexMatrix h = ComplexMatrix::Zero(big, big);
      for (std::size_t s = 0; s < gs.eigenvalues.size(); ++s) {
        const ComplexMatrix inner = product_transition(basis, Time::tau(k, gs.eigenvalues[s] / r));
        h += kron(inner, gs.projectors[s].cast<Complex>());
      }
      for (auto& claim : report.claims) {
        const PstCheck check = check_pst(h, claim.u, claim.v, opts.tol);
        claim.checked = true;
        claim.magnitude = check.magnitude;
        claim.phase = check.phase;
        claim.verified = check.verdict;
      }
      report.numeric = true;
    }
  }
  report.product = facts;
  return report;
}

}  // namespace neps_pst

#endif  // NEPS_PST_PST_HPP
