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

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "neps_pst/neps_pst.hpp"

namespace {

using namespace neps_pst;

void emit(const json& document, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << dump(document);
  } else {
    write_file(out_path, dump(document));
  }
}

int max_n(bool allow_large) { return allow_large ? kLargeMaxN : kDefaultMaxN; }

void require_numeric_size(const Basis& basis, bool allow_large) {
  if (basis.n() > max_n(allow_large)) {
    throw std::invalid_argument("n = " + std::to_string(basis.n()) +
                                " exceeds the full-matrix cap of " +
                                std::to_string(max_n(allow_large)) +
                                (allow_large ? "" : " (use --allow-large for up to 12)"));
  }
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect state transfer on NEPS of the path P3"};
  app.require_subcommand(1);

  std::string omega_path;
  std::string out_path;
  std::string time_text;
  double tol = 1e-9;
  bool allow_large = false;
  int n = 0;
  int k = 0;
  std::optional<int> max_m;
  std::string adjacency_path;
  std::string csv_path;

  auto* analyze = app.add_subcommand("analyze", "Check the PST premises and verify every claim");
  analyze->add_option("--omega", omega_path, "Basis JSON file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--tol", tol, "Tolerance on | |H[u,v]| - 1 |")->capture_default_str();
  analyze->add_option("--time", time_text, "Extra probe time: tau:K or a decimal");
  analyze->add_option("--out", out_path, "Write the report here instead of stdout");
  analyze->add_flag("--allow-large", allow_large, "Allow numeric checks up to n = 12");

  auto* construct = app.add_subcommand("construct-basis", "Build a connected PST basis");
  construct->add_option("--n", n, "Tuple length (>= 2)")->required();
  construct->add_option("--k", k, "Odd row weight (< n)")->required();
  construct->add_option("--out", out_path, "Basis JSON output file")->required();

  auto* transition = app.add_subcommand("transition", "Write the transition matrix H_Omega(t)");
  transition->add_option("--omega", omega_path, "Basis JSON file")->required()->check(CLI::ExistingFile);
  transition->add_option("--time", time_text, "tau:K or a decimal")->required();
  transition->add_option("--out", out_path, "ComplexMatrix JSON output file")->required();
  transition->add_option("--csv", csv_path, "Also write |H| as CSV");
  transition->add_flag("--allow-large", allow_large, "Allow n up to 12");

  auto* verify = app.add_subcommand("verify", "Run the cross-oracle suite on a basis");
  verify->add_option("--omega", omega_path, "Basis JSON file")->required()->check(CLI::ExistingFile);
  verify->add_option("--tol", tol, "Agreement tolerance")->capture_default_str();
  verify->add_option("--out", out_path, "Write the result here instead of stdout");
  verify->add_flag("--allow-large", allow_large, "Allow n up to 12");

  auto* components = app.add_subcommand("components", "Count components and compare with the rank");
  components->add_option("--omega", omega_path, "Basis JSON file")->required()->check(CLI::ExistingFile);
  components->add_option("--adjacency", adjacency_path, "Also export the adjacency (.json or .csv)");
  components->add_flag("--allow-large", allow_large, "Allow n up to 12");

  auto* scan = app.add_subcommand("scan", "Enumerate all bases for small n");
  scan->add_option("--n", n, "Tuple length (1..3)")->required();
  scan->add_option("--max-m", max_m, "Skip bases with more rows than this");
  scan->add_option("--out", out_path, "Write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code::kInputError;
  }

  try {
    if (*analyze) {
      const Basis basis = load_basis(omega_path);
      std::optional<Time> probe;
      if (!time_text.empty()) probe = parse_time(time_text);
      AnalysisOptions opts;
      opts.tol = tol;
      opts.numeric_max_n = max_n(allow_large);
      const CommandOutput result = neps_pst::analyze(basis, opts, probe);
      emit(result.document, out_path);
      return result.exit_code;
    }
    if (*construct) {
      const Basis basis = construct_basis(n, k);
      write_file(out_path, dump(basis_to_json(basis)));
      std::cout << "wrote " << basis.size() << " rows of weight " << k << ", GF(2) rank "
                << rank_gf2(basis) << " (n = " << n << ")\n";
      return exit_code::kOk;
    }
    if (*transition) {
      const Basis basis = load_basis(omega_path);
      const Time t = parse_time(time_text);
      require_numeric_size(basis, allow_large);
      const ComplexMatrix h = product_transition(basis, t);
      write_file(out_path, dump(complex_matrix_to_json(h)));
      if (!csv_path.empty()) write_file(csv_path, magnitude_csv(h));
      std::cout << "order " << h.rows() << ", unitarity residual " << unitarity_residual(h)
                << ", symmetry residual " << symmetry_residual(h) << "\n";
      return exit_code::kOk;
    }
    if (*verify) {
      const Basis basis = load_basis(omega_path);
      require_numeric_size(basis, allow_large);
      const CommandOutput result = neps_pst::verify(basis, tol);
      emit(result.document, out_path);
      return result.exit_code;
    }
    if (*components) {
      const Basis basis = load_basis(omega_path);
      require_numeric_size(basis, allow_large);
      const CommandOutput result = neps_pst::components(basis);
      if (!adjacency_path.empty()) {
        const RealMatrix a = neps_adjacency(basis);
        write_file(adjacency_path, ends_with(adjacency_path, ".csv") ? real_matrix_to_csv(a)
                                                                     : dump(real_matrix_to_json(a)));
      }
      emit(result.document, "");
      return result.exit_code;
    }
    if (*scan) {
      const CommandOutput result = neps_pst::scan(n, max_m, AnalysisOptions{tol, kDefaultMaxN});
      emit(result.document, out_path);
      return result.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::kInputError;
  }
  return exit_code::kInputError;
}
