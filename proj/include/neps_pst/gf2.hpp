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

#ifndef NEPS_PST_GF2_HPP
#define NEPS_PST_GF2_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace neps_pst {

/// Largest tuple length supported by the packed representation.
inline constexpr int kMaxBits = 64;

/// A binary n-tuple (one row of a NEPS basis), packed into a single word.
///
/// Coordinate `i` (0-based) is stored at bit `i`. The textual form lists
/// coordinates left to right, so "110" has coordinates 0 and 1 set.
class BitVector {
 public:
  BitVector() = default;

  explicit BitVector(int n, std::uint64_t word = 0) : n_(n), word_(word) {
    if (n < 1 || n > kMaxBits) {
      throw std::invalid_argument("BitVector length must be in [1, 64], got " + std::to_string(n));
    }
    word_ &= mask();
  }

  static BitVector from_string(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxBits)) {
      throw std::invalid_argument("bit string length must be in [1, 64], got " +
                                  std::to_string(text.size()));
    }
    BitVector v(static_cast<int>(text.size()));
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        v.set(static_cast<int>(i), true);
      } else if (text[i] != '0') {
        throw std::invalid_argument("bit string may contain only '0' and '1': \"" +
                                    std::string(text) + "\"");
      }
    }
    return v;
  }

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] std::uint64_t word() const { return word_; }
  [[nodiscard]] bool none() const { return word_ == 0; }

  [[nodiscard]] bool operator[](int i) const { return ((word_ >> i) & 1U) != 0; }

  void set(int i, bool value) {
    if (i < 0 || i >= n_) {
      throw std::out_of_range("bit index " + std::to_string(i) + " outside length " +
                              std::to_string(n_));
    }
    const std::uint64_t bit = std::uint64_t{1} << i;
    word_ = value ? (word_ | bit) : (word_ & ~bit);
  }

  [[nodiscard]] std::string to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i) {
      if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
  }

  BitVector& operator^=(const BitVector& other) {
    require_same_length(other);
    word_ ^= other.word_;
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  [[nodiscard]] std::uint64_t mask() const {
    return n_ == kMaxBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
  }
  void require_same_length(const BitVector& other) const {
    if (other.n_ != n_) {
      throw std::invalid_argument("bit vector lengths differ: " + std::to_string(n_) + " vs " +
                                  std::to_string(other.n_));
    }
  }

  int n_ = 1;
  std::uint64_t word_ = 0;
};

/// Number of nonzero entries.
inline int weight(const BitVector& v) { return std::popcount(v.word()); }

/// An ordered set of distinct nonzero rows of common length n; doubles as an
/// m x n matrix over GF(2).
class Basis {
 public:
  Basis(int n, std::vector<BitVector> rows) : n_(n), rows_(std::move(rows)) { validate(); }

  static Basis from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("basis must contain at least one row");
    std::vector<BitVector> parsed;
    parsed.reserve(rows.size());
    for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
    const int n = parsed.front().size();
    return Basis(n, std::move(parsed));
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return rows_.size(); }
  [[nodiscard]] const std::vector<BitVector>& rows() const { return rows_; }
  [[nodiscard]] const BitVector& operator[](std::size_t i) const { return rows_[i]; }
  [[nodiscard]] auto begin() const { return rows_.begin(); }
  [[nodiscard]] auto end() const { return rows_.end(); }

  [[nodiscard]] std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.to_string());
    return out;
  }

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  void validate() const {
    if (n_ < 1 || n_ > kMaxBits) {
      throw std::invalid_argument("basis length n must be in [1, 64], got " + std::to_string(n_));
    }
    if (rows_.empty()) throw std::invalid_argument("basis must contain at least one row");
    std::vector<std::uint64_t> seen;
    seen.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& r = rows_[i];
      if (r.size() != n_) {
        throw std::invalid_argument("ragged basis: row " + std::to_string(i) + " has length " +
                                    std::to_string(r.size()) + ", expected " + std::to_string(n_));
      }
      if (r.none()) {
        throw std::invalid_argument("basis row " + std::to_string(i) + " is the all-zero tuple");
      }
      if (std::find(seen.begin(), seen.end(), r.word()) != seen.end()) {
        throw std::invalid_argument("duplicate basis row " + std::to_string(i) + " (\"" +
                                    r.to_string() + "\")");
      }
      seen.push_back(r.word());
    }
  }

  int n_;
  std::vector<BitVector> rows_;
};

/// Row rank over GF(2) by Gaussian elimination on packed rows.
inline int rank_gf2(const Basis& basis) {
  // pivot[b] holds a reduced row whose highest set bit is b, or 0.
  std::array<std::uint64_t, kMaxBits> pivot{};
  int rank = 0;
  for (const auto& row : basis) {
    std::uint64_t w = row.word();
    while (w != 0) {
      const int top = std::bit_width(w) - 1;
      if (pivot[static_cast<std::size_t>(top)] == 0) {
        pivot[static_cast<std::size_t>(top)] = w;
        ++rank;
        break;
      }
      w ^= pivot[static_cast<std::size_t>(top)];
    }
  }
  return rank;
}

/// Componentwise sum of all rows mod 2.
inline BitVector column_sum(const Basis& basis) {
  BitVector acc(basis.n());
  for (const auto& row : basis) acc ^= row;
  return acc;
}

enum class ParityClass { AllEven, AllOdd, Mixed };

inline const char* to_string(ParityClass p) {
  switch (p) {
    case ParityClass::AllEven: return "all_even";
    case ParityClass::AllOdd: return "all_odd";
    case ParityClass::Mixed: return "mixed";
  }
  return "mixed";
}

inline ParityClass parity_class(const Basis& basis) {
  bool any_even = false;
  bool any_odd = false;
  for (const auto& row : basis) {
    if (weight(row) % 2 == 0) {
      any_even = true;
    } else {
      any_odd = true;
    }
  }
  if (any_even && any_odd) return ParityClass::Mixed;
  return any_odd ? ParityClass::AllOdd : ParityClass::AllEven;
}

/// True when every row has the same weight.
inline bool has_uniform_weight(const Basis& basis) {
  const int w = weight(basis[0]);
  return std::all_of(basis.begin(), basis.end(), [w](const BitVector& r) { return weight(r) == w; });
}

struct MinWeightSubset {
  int k;
  Basis rows;
};

/// The minimum row weight k and the rows attaining it, in stored order.
inline MinWeightSubset min_weight_subset(const Basis& basis) {
  int k = kMaxBits + 1;
  for (const auto& row : basis) k = std::min(k, weight(row));
  std::vector<BitVector> kept;
  for (const auto& row : basis) {
    if (weight(row) == k) kept.push_back(row);
  }
  return {k, Basis(basis.n(), std::move(kept))};
}

/// Exchanges coordinates i and j (0-based) in every row.
inline Basis swap_coordinates(const Basis& basis, int i, int j) {
  std::vector<BitVector> rows;
  rows.reserve(basis.size());
  for (auto row : basis) {
    const bool bi = row[i];
    const bool bj = row[j];
    row.set(i, bj);
    row.set(j, bi);
    rows.push_back(row);
  }
  return Basis(basis.n(), std::move(rows));
}

/// Rows of the n x n identity matrix.
inline Basis identity_basis(int n) {
  std::vector<BitVector> rows;
  for (int i = 0; i < n; ++i) rows.emplace_back(n, std::uint64_t{1} << i);
  return Basis(n, std::move(rows));
}

/// Rows of J - I of order n (every row has weight n - 1). Requires n >= 2.
inline Basis complement_identity_basis(int n) {
  if (n < 2) throw std::invalid_argument("J - I needs order >= 2");
  std::vector<BitVector> rows;
  const BitVector all(n, ~std::uint64_t{0});
  for (int i = 0; i < n; ++i) rows.push_back(all ^ BitVector(n, std::uint64_t{1} << i));
  return Basis(n, std::move(rows));
}

/// Builds an n-row basis whose rows all have weight k and whose GF(2) rank is n.
///
/// Iterates the inductive construction: the chain starts from I_2 (k = 1) or
/// from J - I of order k + 1, and each step appends a zero column plus the
/// row (1^{k-1} 0 ... 0, 1). The new row is the only one touching the new
/// column, so rank grows by exactly one.
inline Basis construct_basis(int n, int k) {
  if (n < 2 || n > kMaxBits) {
    throw std::invalid_argument("construct_basis needs 2 <= n <= 64, got n = " + std::to_string(n));
  }
  if (k < 1 || k % 2 == 0) {
    throw std::invalid_argument("construct_basis needs a positive odd k, got k = " +
                                std::to_string(k));
  }
  if (k >= n) {
    throw std::invalid_argument("construct_basis needs k < n, got k = " + std::to_string(k) +
                                ", n = " + std::to_string(n));
  }

  int l = (k == 1) ? 2 : k + 1;
  std::vector<std::uint64_t> words;
  if (k == 1) {
    words = {0b01, 0b10};
  } else {
    const Basis start = complement_identity_basis(l);
    for (const auto& r : start) words.push_back(r.word());
  }
  const std::uint64_t leading_ones = (std::uint64_t{1} << (k - 1)) - 1;
  while (l < n) {
    words.push_back(leading_ones | (std::uint64_t{1} << l));
    ++l;
  }

  std::vector<BitVector> rows;
  rows.reserve(words.size());
  for (auto w : words) rows.emplace_back(n, w);
  return Basis(n, std::move(rows));
}

}  // namespace neps_pst

#endif  // NEPS_PST_GF2_HPP
