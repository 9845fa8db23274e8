// coopinf: cooperative-inference matrix analysis front end.
// Exit codes: 0 success, 1 input/validation error, 2 non-convergence
// diagnostic, 3 internal invariant violation.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coopinf/matrix_io.hpp"
#include "coopinf/serialize.hpp"

namespace {

using namespace coopinf;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNotConverged = 2;
constexpr int kInternalError = 3;

std::pair<std::size_t, std::size_t> parse_at(const std::string& at) {
  auto comma = at.find(',');
  if (comma == std::string::npos) throw ParseError("--at expects i,j (0-based)");
  try {
    return {std::stoul(at.substr(0, comma)), std::stoul(at.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParseError("--at expects i,j (0-based)");
  }
}

std::vector<double> parse_eps_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      out.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw ParseError("bad eps value '" + cell + "'");
    }
  }
  if (out.empty()) throw ParseError("--eps-list is empty");
  return out;
}

std::vector<double> read_marginal(const std::string& path) {
  Matrix m = read_matrix_raw_file(path);
  if (m.rows() != 1 && m.cols() != 1)
    throw ParseError("marginal file must be a single row or column: " + path);
  return m.data();
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sinkhorn normalization, cooperative-index and support analysis"};
  app.require_subcommand(1);

  double tol = kDefaultTol;
  std::size_t max_iters = kDefaultMaxIters;
  std::size_t diag_limit = 1000000;
  double rel_tol = 1e-6;

  std::string file, file_b, at = "0,0", eps_list_text;
  double eps = 0.0, lambda = 1.0;
  bool use_pattern = false, keep_history = false, csv_out = false;
  std::string cost_file, r_file, c_file;

  auto* cmd_sinkhorn = app.add_subcommand("sinkhorn", "Sinkhorn iteration to the stable pair");
  cmd_sinkhorn->add_option("file", file)->required();
  cmd_sinkhorn->add_option("--tol", tol);
  cmd_sinkhorn->add_option("--max-iters", max_iters);
  cmd_sinkhorn->add_flag("--use-pattern", use_pattern, "iterate on M-bar");
  cmd_sinkhorn->add_flag("--history", keep_history, "record per-sweep residuals");

  auto* cmd_ci = app.add_subcommand("ci", "Cooperative index");
  cmd_ci->add_option("file", file)->required();
  cmd_ci->add_option("--tol", tol);
  cmd_ci->add_option("--max-iters", max_iters);

  auto* cmd_bounds = app.add_subcommand("bounds", "CI with its structural lower bounds");
  cmd_bounds->add_option("file", file)->required();
  cmd_bounds->add_option("--diag-limit", diag_limit);

  auto* cmd_pattern = app.add_subcommand("pattern", "On/off-diagonal support classification");
  cmd_pattern->add_option("file", file)->required();

  auto* cmd_cr = app.add_subcommand("cr-equiv", "Cross-ratio equivalence test");
  cmd_cr->add_option("fileA", file)->required();
  cmd_cr->add_option("fileB", file_b)->required();
  cmd_cr->add_option("--rel-tol", rel_tol);

  auto* cmd_perturb = app.add_subcommand("perturb", "Single-entry sensitivity report");
  cmd_perturb->add_option("file", file)->required();
  cmd_perturb->add_option("--at", at, "entry i,j (0-based)")->required();
  cmd_perturb->add_option("--eps", eps)->required();

  auto* cmd_sweep = app.add_subcommand("sweep", "Sensitivity reports over an eps list");
  cmd_sweep->add_option("file", file)->required();
  cmd_sweep->add_option("--at", at, "entry i,j (0-based)")->required();
  cmd_sweep->add_option("--eps-list", eps_list_text)->required();
  cmd_sweep->add_flag("--csv", csv_out, "emit CSV instead of JSON");

  auto* cmd_bvn = app.add_subcommand("bvn", "Birkhoff-von Neumann decomposition");
  cmd_bvn->add_option("file", file)->required();

  auto* cmd_witness = app.add_subcommand("stable-witness", "Binary stable-pair witness");
  cmd_witness->add_option("file", file)->required();

  auto* cmd_ot = app.add_subcommand("ot", "Entropic optimal transport plan");
  cmd_ot->add_option("--cost", cost_file)->required();
  cmd_ot->add_option("--lambda", lambda)->required();
  cmd_ot->add_option("--r", r_file, "row marginals (single-row/column file)");
  cmd_ot->add_option("--c", c_file, "column marginals");
  cmd_ot->add_option("--tol", tol);
  cmd_ot->add_option("--max-iters", max_iters);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    SinkhornOptions opts{tol, max_iters, keep_history};

    if (cmd_sinkhorn->parsed()) {
      Matrix m = read_matrix_file(file);
      auto res = use_pattern ? sinkhorn_on_pattern(m, opts) : sinkhorn(m, opts);
      emit(to_json(res));
      return res.converged ? kOk : kNotConverged;
    }
    if (cmd_ci->parsed()) {
      auto res = cooperative_index(read_matrix_file(file), opts);
      json out{{"ci", res.ci}};
      if (res.low_confidence) out["low_confidence"] = true;
      emit(out);
      return res.low_confidence ? kNotConverged : kOk;
    }
    if (cmd_bounds->parsed()) {
      emit(to_json(ci_bounds(read_matrix_file(file), diag_limit)));
      return kOk;
    }
    if (cmd_pattern->parsed()) {
      Matrix m = read_matrix_file(file);
      emit(to_json(m, classify_support(m)));
      return kOk;
    }
    if (cmd_cr->parsed()) {
      Matrix a = read_matrix_file(file);
      Matrix b = read_matrix_file(file_b);
      json out;
      out["equivalent"] = cr_equivalent(a, b, rel_tol, diag_limit);
      out["profiles"] = {{"A", to_json(cross_ratio_profile(a, diag_limit))},
                         {"B", to_json(cross_ratio_profile(b, diag_limit))}};
      emit(out);
      return kOk;
    }
    if (cmd_perturb->parsed()) {
      auto [i, j] = parse_at(at);
      emit(to_json(sensitivity_report(read_matrix_file(file), i, j, eps, opts)));
      return kOk;
    }
    if (cmd_sweep->parsed()) {
      auto [i, j] = parse_at(at);
      auto reports =
          continuity_sweep(read_matrix_file(file), i, j, parse_eps_list(eps_list_text), opts);
      if (csv_out) {
        std::cout << "eps,kind,limit_distance,ci_after\n";
        std::cout.precision(17);
        for (const auto& r : reports)
          std::cout << r.epsilon << ',' << to_string(r.kind) << ',' << r.limit_distance
                    << ',' << r.ci_after << '\n';
      } else {
        json out = json::array();
        for (const auto& r : reports) out.push_back(to_json(r));
        emit(out);
      }
      return kOk;
    }
    if (cmd_bvn->parsed()) {
      emit(to_json(bvn_decompose(read_matrix_file(file))));
      return kOk;
    }
    if (cmd_witness->parsed()) {
      emit(to_json(construct_stable_witness(read_matrix_file(file))));
      return kOk;
    }
    if (cmd_ot->parsed()) {
      Matrix kernel = entropic_kernel(read_matrix_raw_file(cost_file), lambda);
      SinkhornResult res;
      if (r_file.empty() != c_file.empty())
        throw ParseError("--r and --c must be given together");
      if (r_file.empty()) {
        res = sinkhorn(kernel, opts);  // uniform marginals
      } else {
        res = scalar_sinkhorn(kernel, read_marginal(r_file), read_marginal(c_file), opts);
      }
      json out = to_json(res);
      out["plan"] = to_json(res.limit.L);
      emit(out);
      return res.converged ? kOk : kNotConverged;
    }
  } catch (const NoPerfectMatching& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const InconsistentFactors& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}
