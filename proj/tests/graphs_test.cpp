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

#include "neps_pst/graphs.hpp"

#include <random>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace neps_pst;
namespace nt = neps_pst::testing;

TEST(path3, matches_displayed_matrix) {
  RealMatrix expected(3, 3);
  expected << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  const RealMatrix a = path3();
  EXPECT_EQ(a, expected);
  EXPECT_EQ(a, a.transpose());
  EXPECT_EQ(a.diagonal().sum(), 0.0);
  EXPECT_EQ(a.rowwise().sum(), Eigen::Vector3d(1, 2, 1));
}

TEST(complete_graph, examples) {
  RealMatrix k2(2, 2);
  k2 << 0, 1, 1, 0;
  EXPECT_EQ(complete_graph(2), k2);
  EXPECT_EQ(complete_graph(3).rowwise().sum(), Eigen::Vector3d(2, 2, 2));
  EXPECT_THROW(complete_graph(1), std::invalid_argument);
}

TEST(kron, identity_factor_is_block_diagonal) {
  const RealMatrix b = path3();
  const RealMatrix k = kron(RealMatrix::Identity(2, 2), b);
  EXPECT_EQ(k.block(0, 0, 3, 3), b);
  EXPECT_EQ(k.block(3, 3, 3, 3), b);
  EXPECT_TRUE(k.block(0, 3, 3, 3).isZero());
  EXPECT_TRUE(k.block(3, 0, 3, 3).isZero());
}

TEST(kron, path_square_entry_and_edge_count) {
  const RealMatrix k = kron(path3(), path3());
  // (2,2) ~ (1,1) because 2 ~ 1 in each factor.
  const auto r = static_cast<Eigen::Index>(vertex_index({{2, 2}}));
  const auto c = static_cast<Eigen::Index>(vertex_index({{1, 1}}));
  EXPECT_EQ(k(r, c), 1.0);
  EXPECT_EQ(k.sum(), path3().sum() * path3().sum());
}

TEST(kron, associative) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> bit(0, 1);
  auto random01 = [&](int n) {
    RealMatrix m(n, n);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = bit(rng);
    return m;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const RealMatrix a = random01(2);
    const RealMatrix b = random01(3);
    const RealMatrix c = random01(2);
    EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
  }
}

TEST(vertex_index, center_and_neighbours) {
  for (int n = 1; n <= 6; ++n) {
    VertexLabel center{std::vector<int>(static_cast<std::size_t>(n), 2)};
    const std::size_t c = (pow3(n) - 1) / 2;
    EXPECT_EQ(vertex_index(center), c);
    EXPECT_EQ(center_vertex(n), c);
    VertexLabel last1 = center;
    last1.coords.back() = 1;
    VertexLabel last3 = center;
    last3.coords.back() = 3;
    EXPECT_EQ(vertex_index(last1), c - 1);
    EXPECT_EQ(vertex_index(last3), c + 1);
  }
}

TEST(vertex_index, u_and_v_match_enumeration) {
  for (int n = 1; n <= 3; ++n) {
    const auto labels = nt::all_labels(n);
    for (int j = 1; j <= n; ++j) {
      std::vector<int> u(static_cast<std::size_t>(n), 2);
      std::vector<int> v(static_cast<std::size_t>(n), 2);
      u[static_cast<std::size_t>(j - 1)] = 1;
      v[static_cast<std::size_t>(j - 1)] = 3;
      const auto pos = [&](const std::vector<int>& x) {
        return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), x) - labels.begin());
      };
      EXPECT_EQ(u_vertex(n, j), pos(u));
      EXPECT_EQ(v_vertex(n, j), pos(v));
    }
  }
}

TEST(vertex_index, inverse_round_trip) {
  for (int n = 1; n <= 6; ++n) {
    const auto labels = nt::all_labels(n);
    ASSERT_EQ(labels.size(), pow3(n));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      EXPECT_EQ(vertex_label(i, n).coords, labels[i]);
      EXPECT_EQ(vertex_index(vertex_label(i, n)), i);
    }
  }
}

TEST(vertex_index, rejects_bad_coordinates) {
  EXPECT_THROW(vertex_index({{2, 4}}), std::invalid_argument);
  EXPECT_THROW(vertex_index({{0}}), std::invalid_argument);
  EXPECT_THROW(vertex_index({{}}), std::invalid_argument);
  EXPECT_THROW(vertex_label(27, 3), std::out_of_range);
}

TEST(neps_adjacency, examples) {
  EXPECT_EQ(neps_adjacency(Basis::from_strings({"1"})), path3());
  EXPECT_EQ(neps_adjacency(Basis::from_strings({"11"})), kron(path3(), path3()));
  const RealMatrix cart = neps_adjacency(identity_basis(2));
  const RealMatrix i3 = RealMatrix::Identity(3, 3);
  EXPECT_EQ(cart, kron(path3(), i3) + kron(i3, path3()));
  EXPECT_EQ(cart.row(static_cast<Eigen::Index>(vertex_index({{1, 1}}))).sum(), 2.0);
}

TEST(neps_adjacency, matches_definition_on_random_bases) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    const Basis b = nt::random_basis(n, rng);
    const RealMatrix a = neps_adjacency(b);
    EXPECT_EQ(a, nt::definitional_adjacency(b));
    EXPECT_EQ(a, a.transpose());
    EXPECT_LE(a.maxCoeff(), 1.0);
    EXPECT_EQ(a.diagonal().sum(), 0.0);
  }
}

TEST(neps_adjacency, center_degree_is_sum_of_powers_of_two) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    const Basis b = nt::random_basis(n, rng);
    double expected = 0;
    for (const auto& beta : b) expected += std::ldexp(1.0, weight(beta));
    const auto c = static_cast<Eigen::Index>(center_vertex(n));
    EXPECT_EQ(neps_adjacency(b).row(c).sum(), expected);
  }
}

TEST(connected_components, examples) {
  EXPECT_EQ(connected_components(path3()).count, 1);

  const RealMatrix square = neps_adjacency(Basis::from_strings({"11"}));
  const Components c = connected_components(square);
  EXPECT_EQ(c.count, 2);
  auto sizes = c.sizes();
  std::sort(sizes.rbegin(), sizes.rend());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{5, 4}));
  EXPECT_EQ(nt::union_find_sizes(square), (std::vector<std::size_t>{5, 4}));

  EXPECT_EQ(connected_components(neps_adjacency(identity_basis(2))).count, 1);
}

TEST(connected_components, agrees_with_union_find_and_rank) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    const Basis b = nt::random_basis(n, rng);
    const RealMatrix a = neps_adjacency(b);
    const Components c = connected_components(a);
    auto sizes = c.sizes();
    std::sort(sizes.rbegin(), sizes.rend());
    EXPECT_EQ(sizes, nt::union_find_sizes(a));
    EXPECT_EQ(c.count == 1, rank_gf2(b) == n) << b.to_strings().front();
  }
}

TEST(is_bipartite, examples) {
  EXPECT_TRUE(is_bipartite(path3()));
  EXPECT_TRUE(is_bipartite(complete_graph(2)));
  EXPECT_FALSE(is_bipartite(complete_graph(3)));
  EXPECT_TRUE(is_bipartite(neps_adjacency(identity_basis(3))));
}
