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

#ifndef NEPS_PST_IO_HPP
#define NEPS_PST_IO_HPP

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "neps_pst/gf2.hpp"
#include "neps_pst/graphs.hpp"
#include "neps_pst/pst.hpp"
#include "neps_pst/spectral.hpp"

namespace neps_pst {

using json = nlohmann::json;

// Basis

inline Basis basis_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("basis JSON must be an object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw std::invalid_argument("basis JSON needs an integer field \"n\"");
  }
  if (!j.contains("rows") || !j.at("rows").is_array()) {
    throw std::invalid_argument("basis JSON needs an array field \"rows\"");
  }
  const auto n = j.at("n").get<long long>();
  if (n < 1 || n > kMaxBits) {
    throw std::invalid_argument("basis length n must be in [1, 64], got " + std::to_string(n));
  }
  std::vector<BitVector> rows;
  for (const auto& r : j.at("rows")) {
    if (!r.is_string()) throw std::invalid_argument("basis rows must be strings of 0 and 1");
    const auto text = r.get<std::string>();
    if (static_cast<long long>(text.size()) != n) {
      throw std::invalid_argument("ragged basis: row \"" + text + "\" has length " +
                                  std::to_string(text.size()) + ", expected " + std::to_string(n));
    }
    rows.push_back(BitVector::from_string(text));
  }
  return Basis(static_cast<int>(n), std::move(rows));
}

inline json basis_to_json(const Basis& b) { return {{"n", b.n()}, {"rows", b.to_strings()}}; }

inline Basis parse_basis(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed basis JSON: ") + e.what());
  }
  return basis_from_json(j);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << contents;
}

inline Basis load_basis(const std::string& path) { return parse_basis(read_file(path)); }

/// Pretty-printed with sorted keys and a trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Time

/// Parses "tau:K" (K a positive integer) or a decimal number.
inline Time parse_time(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument("cannot parse integer \"" + std::string(s) + "\"");
    }
    return value;
  };
  constexpr std::string_view prefix = "tau:";
  if (text.starts_with(prefix)) {
    const int k = parse_int(text.substr(prefix.size()));
    if (k < 1) throw std::invalid_argument("tau:K needs a positive integer K");
    return Time::tau(k);
  }
  const std::string s(text);
  std::size_t used = 0;
  double t = 0.0;
  try {
    t = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse time \"" + s + "\" (expected tau:K or a decimal)");
  }
  if (used != s.size() || !std::isfinite(t)) {
    throw std::invalid_argument("cannot parse time \"" + s + "\" (expected tau:K or a decimal)");
  }
  return Time::seconds(t);
}

inline json time_to_json(const Time& t) {
  json j;
  if (t.is_tau()) {
    j["tau_k"] = t.tau_k();
    if (t.multiple() != 1.0) j["multiple"] = t.multiple();
  }
  j["value"] = t.value();
  return j;
}

// Matrices

inline json real_matrix_to_json(const RealMatrix& a) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    entries.push_back(std::move(row));
  }
  return {{"order", a.rows()}, {"entries", std::move(entries)}};
}

inline RealMatrix real_matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array()) {
    throw std::invalid_argument("matrix JSON needs an array field \"entries\"");
  }
  const auto& rows = j.at("entries");
  const auto order = static_cast<Eigen::Index>(rows.size());
  if (j.contains("order") && j.at("order").get<Eigen::Index>() != order) {
    throw std::invalid_argument("matrix JSON \"order\" does not match the number of rows");
  }
  RealMatrix a(order, order);
  for (Eigen::Index i = 0; i < order; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != order) {
      throw std::invalid_argument("matrix JSON must be square");
    }
    for (Eigen::Index k = 0; k < order; ++k) a(i, k) = row.at(static_cast<std::size_t>(k)).get<double>();
  }
  return a;
}

inline std::string real_matrix_to_csv(const RealMatrix& a) {
  std::ostringstream out;
  out.precision(17);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) out << ',';
      out << a(i, j);
    }
    out << '\n';
  }
  return out.str();
}

inline json complex_matrix_to_json(const ComplexMatrix& h) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < h.cols(); ++j) row.push_back({h(i, j).real(), h(i, j).imag()});
    entries.push_back(std::move(row));
  }
  return {{"order", h.rows()}, {"entries", std::move(entries)}};
}

inline ComplexMatrix complex_matrix_from_json(const json& j) {
  const auto& rows = j.at("entries");
  const auto order = static_cast<Eigen::Index>(rows.size());
  ComplexMatrix h(order, order);
  for (Eigen::Index i = 0; i < order; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != order) {
      throw std::invalid_argument("matrix JSON must be square");
    }
    for (Eigen::Index k = 0; k < order; ++k) {
      const auto& z = row.at(static_cast<std::size_t>(k));
      h(i, k) = {z.at(0).get<double>(), z.at(1).get<double>()};
    }
  }
  return h;
}

/// |h_ij| as CSV.
inline std::string magnitude_csv(const ComplexMatrix& h) {
  return real_matrix_to_csv(h.cwiseAbs());
}

// Reports

inline json structural_to_json(const StructuralMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back({m(i, 0), m(i, 1), m(i, 2)});
  return rows;
}

inline json report_to_json(const PstReport& r) {
  json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["rank"] = r.rank;
  j["connected"] = r.connected;
  j["parity"] = to_string(r.parity);
  j["k"] = r.k ? json(*r.k) : json(nullptr);
  j["omega_star"] = r.omega_star ? json(r.omega_star->to_strings()) : json(nullptr);
  j["omega_star_sum"] = r.omega_star_sum ? json(r.omega_star_sum->to_string()) : json(nullptr);
  j["numeric"] = r.numeric;
  if (r.reduction_residual) j["reduction_residual"] = *r.reduction_residual;

  json premises = json::array();
  for (const auto& p : r.premises) premises.push_back({{"name", p.name}, {"holds", p.holds}});
  j["premises"] = std::move(premises);

  const int n_label = r.n;
  const int g_order = r.product ? r.product->g_order : 1;
  auto label = [&](std::size_t index) {
    if (!r.product) return vertex_label(index, n_label).to_string();
    const auto g = static_cast<std::size_t>(g_order);
    return vertex_label(index / g, n_label).to_string() + "/" + std::to_string(index % g);
  };

  json claims = json::array();
  for (const auto& c : r.claims) {
    json cj;
    cj["j"] = c.j;
    cj["kind"] = to_string(c.kind);
    cj["u"] = c.u;
    cj["v"] = c.v;
    cj["u_label"] = label(c.u);
    cj["v_label"] = label(c.v);
    cj["time"] = time_to_json(c.time);
    cj["predicted_phase"] = c.predicted_sign > 0 ? 0.0 : std::numbers::pi;
    if (c.checked) {
      cj["magnitude"] = c.magnitude;
      cj["phase"] = c.phase;
      cj["verified"] = c.verified;
    } else {
      cj["magnitude"] = nullptr;
      cj["phase"] = nullptr;
      cj["verified"] = nullptr;
    }
    claims.push_back(std::move(cj));
  }
  j["claims"] = std::move(claims);

  json structural = json::array();
  for (const auto& s : r.structural) {
    structural.push_back({{"j", s.j},
                          {"predicted_m3", structural_to_json(s.predicted)},
                          {"residual", s.residual ? json(*s.residual) : json(nullptr)}});
  }
  j["structural"] = std::move(structural);
  j["notes"] = r.notes;

  if (r.product) {
    const auto& p = *r.product;
    j["product"] = {
        {"g_order", p.g_order},
        {"r", p.r},
        {"g_eigenvalues", p.g_eigenvalues},
        {"eigenvalues_odd", p.eigenvalues_odd},
        {"g_connected", p.g_connected},
        {"g_bipartite", p.g_bipartite},
        {"neps_components", p.neps_components ? json(*p.neps_components) : json(nullptr)},
        {"product_components", p.product_components ? json(*p.product_components) : json(nullptr)},
    };
  }
  return j;
}

}  // namespace neps_pst

#endif  // NEPS_PST_IO_HPP
