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

// Builds the weight-k basis for a given n and prints each predicted
// transfer with its measured |H[u,v]|.
//
//   pst_pairs N K

#include <cstdio>
#include <cstdlib>
#include <exception>

#include "neps_pst/neps_pst.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s N K\n", argv[0]);
    return 1;
  }
  try {
    const neps_pst::Basis basis = neps_pst::construct_basis(std::atoi(argv[1]), std::atoi(argv[2]));
    const neps_pst::PstReport report = neps_pst::sufficient_condition(basis);
    for (const auto& row : basis.to_strings()) std::printf("row %s\n", row.c_str());
    for (const auto& claim : report.claims) {
      if (claim.kind != neps_pst::ClaimKind::Pst) continue;
      std::printf("%s -> %s at %s: %s\n", neps_pst::vertex_label(claim.u, basis.n()).to_string().c_str(),
                  neps_pst::vertex_label(claim.v, basis.n()).to_string().c_str(),
                  claim.time.to_string().c_str(),
                  claim.checked ? (claim.verified ? "verified" : "FAILED") : "not checked");
    }
    return report.claims_verified() ? 0 : 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
