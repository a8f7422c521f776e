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

#ifndef NEPS_PST_GRAPHS_HPP
#define NEPS_PST_GRAPHS_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "neps_pst/gf2.hpp"

namespace neps_pst {

using RealMatrix = Eigen::MatrixXd;

/// 3^e as an index type.
inline std::size_t pow3(int e) {
  std::size_t p = 1;
  for (int i = 0; i < e; ++i) p *= 3;
  return p;
}

/// Adjacency matrix of the path on three vertices 1 - 2 - 3.
inline RealMatrix path3() {
  RealMatrix a = RealMatrix::Zero(3, 3);
  a(0, 1) = a(1, 0) = 1.0;
  a(1, 2) = a(2, 1) = 1.0;
  return a;
}

/// J - I of order m.
inline RealMatrix complete_graph(int m) {
  if (m < 2) throw std::invalid_argument("complete graph needs m >= 2, got " + std::to_string(m));
  RealMatrix a = RealMatrix::Ones(m, m);
  a.diagonal().setZero();
  return a;
}

/// Kronecker product for any pair of dense Eigen matrices of the same scalar.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

/// A vertex of the n-fold product of P3, one coordinate in {1, 2, 3} per factor.
struct VertexLabel {
  std::vector<int> coords;

  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (int c : coords) s.push_back(static_cast<char>('0' + c));
    return s;
  }
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// 0-based dictionary-order index: sum of (v_i - 1) * 3^(n - i).
inline std::size_t vertex_index(const VertexLabel& v) {
  if (v.coords.empty()) throw std::invalid_argument("vertex label must have at least one coordinate");
  std::size_t index = 0;
  for (int c : v.coords) {
    if (c < 1 || c > 3) {
      throw std::invalid_argument("vertex coordinate " + std::to_string(c) + " outside {1,2,3}");
    }
    index = 3 * index + static_cast<std::size_t>(c - 1);
  }
  return index;
}

inline VertexLabel vertex_label(std::size_t index, int n) {
  if (index >= pow3(n)) {
    throw std::out_of_range("vertex index " + std::to_string(index) + " outside 3^" +
                            std::to_string(n));
  }
  VertexLabel v{std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = n - 1; i >= 0; --i) {
    v.coords[static_cast<std::size_t>(i)] = static_cast<int>(index % 3) + 1;
    index /= 3;
  }
  return v;
}

/// Index of (2, ..., 2).
inline std::size_t center_vertex(int n) { return (pow3(n) - 1) / 2; }

/// U_j: all-2 except coordinate j (1-based) set to 1.
inline std::size_t u_vertex(int n, int j) { return center_vertex(n) - pow3(n - j); }

/// V_j: all-2 except coordinate j (1-based) set to 3.
inline std::size_t v_vertex(int n, int j) { return center_vertex(n) + pow3(n - j); }

/// Adjacency matrix of NEPS(P3, ..., P3; basis) in dictionary order.
///
/// Each row beta contributes the Kronecker term with P3 where beta_i = 1 and
/// I3 where beta_i = 0. Terms are written by index arithmetic: a vertex moves
/// to a P3 neighbour in every coordinate of beta's support and stays put
/// elsewhere.
inline RealMatrix neps_adjacency(const Basis& basis) {
  const int n = basis.n();
  const std::size_t order = pow3(n);
  RealMatrix a = RealMatrix::Zero(static_cast<Eigen::Index>(order), static_cast<Eigen::Index>(order));

  std::vector<std::size_t> stride(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) stride[static_cast<std::size_t>(i)] = pow3(n - 1 - i);

  std::vector<int> support;
  std::vector<std::size_t> frontier;
  std::vector<std::size_t> next;
  for (const auto& beta : basis) {
    support.clear();
    for (int i = 0; i < n; ++i) {
      if (beta[i]) support.push_back(i);
    }
    for (std::size_t x = 0; x < order; ++x) {
      frontier.assign(1, x);
      for (int i : support) {
        const std::size_t s = stride[static_cast<std::size_t>(i)];
        next.clear();
        for (std::size_t y : frontier) {
          const std::size_t digit = (y / s) % 3;
          if (digit == 1) {
            next.push_back(y - s);
            next.push_back(y + s);
          } else {
            next.push_back(digit == 0 ? y + s : y - s);
          }
        }
        frontier.swap(next);
      }
      for (std::size_t y : frontier) {
        a(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) += 1.0;
      }
    }
  }
  return a;
}

struct Components {
  int count = 0;
  std::vector<int> labels;  // component id per vertex, numbered in discovery order

  [[nodiscard]] std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out(static_cast<std::size_t>(count), 0);
    for (int l : labels) ++out[static_cast<std::size_t>(l)];
    return out;
  }
};

/// Breadth-first component labelling of a dense 0/1 adjacency matrix.
inline Components connected_components(const RealMatrix& a) {
  const Eigen::Index order = a.rows();
  Components c;
  c.labels.assign(static_cast<std::size_t>(order), -1);
  std::deque<Eigen::Index> queue;
  for (Eigen::Index s = 0; s < order; ++s) {
    if (c.labels[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = c.count++;
    c.labels[static_cast<std::size_t>(s)] = id;
    queue.push_back(s);
    while (!queue.empty()) {
      const Eigen::Index u = queue.front();
      queue.pop_front();
      for (Eigen::Index v = 0; v < order; ++v) {
        if (a(u, v) != 0.0 && c.labels[static_cast<std::size_t>(v)] < 0) {
          c.labels[static_cast<std::size_t>(v)] = id;
          queue.push_back(v);
        }
      }
    }
  }
  return c;
}

/// Two-colouring test by BFS; a graph with an odd cycle is not bipartite.
inline bool is_bipartite(const RealMatrix& a) {
  const Eigen::Index order = a.rows();
  std::vector<int> colour(static_cast<std::size_t>(order), -1);
  std::deque<Eigen::Index> queue;
  for (Eigen::Index s = 0; s < order; ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Eigen::Index u = queue.front();
      queue.pop_front();
      for (Eigen::Index v = 0; v < order; ++v) {
        if (a(u, v) == 0.0) continue;
        auto& cv = colour[static_cast<std::size_t>(v)];
        if (cv < 0) {
          cv = 1 - colour[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (cv == colour[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace neps_pst

#endif  // NEPS_PST_GRAPHS_HPP
