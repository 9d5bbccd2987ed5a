// Command-line front end wiring problems, encoders, the gadget compiler, the
// QAOA simulator and the search tools into reproducible pipelines.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hoq/coloring.hpp"
#include "hoq/compiler.hpp"
#include "hoq/encoders.hpp"
#include "hoq/io.hpp"
#include "hoq/qaoa.hpp"
#include "hoq/search.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

hoq::ColoringProblem load_problem(const std::string& source) {
  if (source == "four-corners") return hoq::four_corners();
  std::ifstream in(source, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return hoq::ColoringProblem::from_json_string(buf.str());
}

// Built-in name or an existing JSON file.
std::string validate_problem_flag(const std::string& source) {
  if (source == "four-corners") return "";
  if (!std::filesystem::exists(source)) {
    return "no such built-in problem or file: " + source;
  }
  return "";
}

hoq::IsingProgram build_program(const hoq::ColoringProblem& prob, hoq::Scheme scheme,
                                const hoq::Rational& lambda,
                                hoq::ReductionCertificate* cert_out = nullptr) {
  switch (scheme) {
    case hoq::Scheme::binary: return hoq::encode_binary(prob);
    case hoq::Scheme::unary: return hoq::encode_unary(prob);
    case hoq::Scheme::reduced: {
      auto [prog, cert] = hoq::reduce_order(hoq::encode_binary(prob), lambda);
      if (cert_out) *cert_out = cert;
      return prog;
    }
  }
  throw std::logic_error("unknown scheme");
}

void emit(const std::optional<std::string>& out_path, const std::string& contents) {
  if (out_path) {
    hoq::atomic_write_file(*out_path, contents);
  } else {
    std::cout << contents;
    if (!contents.empty() && contents.back() != '\n') std::cout << '\n';
  }
}

nlohmann::json run_result_json(const hoq::RunResult& result, double emin, double emax) {
  return {{"expectation", result.expectation},
          {"relative_error", result.relative_error},
          {"success_probability", result.success_probability},
          {"p", result.params.p()},
          {"betas", result.params.betas},
          {"gammas", result.params.gammas},
          {"evaluations", result.evaluations},
          {"emin", emin},
          {"emax", emax}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ising encodings, gadget circuits and QAOA simulation for graph coloring"};
  app.require_subcommand(1);

  std::string problem_flag = "four-corners";
  std::string scheme_flag = "binary";
  std::string lambda_flag = "3";
  std::optional<std::string> out_path;

  auto add_common = [&](CLI::App* cmd, bool with_scheme = true) {
    cmd->add_option("--problem", problem_flag, "built-in name (four-corners) or problem JSON file")
        ->check(CLI::Validator(validate_problem_flag, "PROBLEM"))
        ->capture_default_str();
    if (with_scheme) {
      cmd->add_option("--scheme", scheme_flag, "encoding scheme")
          ->check(CLI::IsMember({"binary", "reduced", "unary"}))
          ->capture_default_str();
    }
    cmd->add_option("--lambda", lambda_flag, "reduction constraint weight (rational)")
        ->capture_default_str();
    cmd->add_option("--out", out_path, "output file (stdout when omitted)");
  };

  auto* encode_cmd = app.add_subcommand("encode", "emit an encoding as JSON");
  add_common(encode_cmd);

  auto* compile_cmd = app.add_subcommand("compile", "lower an encoding to a CX/Rz circuit");
  add_common(compile_cmd);
  std::optional<std::string> qasm_path;
  double qasm_gamma = 1.0;
  compile_cmd->add_option("--qasm", qasm_path, "also write a QASM-style text export");
  compile_cmd->add_option("--gamma", qasm_gamma, "gamma binding for QASM angles")
      ->capture_default_str();

  auto* reduce_cmd = app.add_subcommand("reduce", "order-reduce the binary encoding");
  add_common(reduce_cmd, false);

  auto* simulate_cmd = app.add_subcommand("simulate", "run one QAOA schedule");
  add_common(simulate_cmd);
  int sim_p = 0;
  std::vector<double> sim_betas, sim_gammas;
  simulate_cmd->add_option("--p", sim_p, "layer count")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  simulate_cmd->add_option("--betas", sim_betas, "p mixer angles")->delimiter(',');
  simulate_cmd->add_option("--gammas", sim_gammas, "p phase angles")->delimiter(',');

  auto* grid_cmd = app.add_subcommand("gridsearch", "dense p=1 (beta, gamma) surface");
  add_common(grid_cmd);
  int resolution = 64;
  std::optional<std::string> svg_path;
  grid_cmd->add_option("--resolution", resolution, "points per axis")
      ->check(CLI::Range(2, 4096))
      ->capture_default_str();
  grid_cmd->add_option("--svg", svg_path, "also write a heatmap SVG");

  auto* experiment_cmd = app.add_subcommand("experiment", "seeded optimizer sweep over schemes");
  add_common(experiment_cmd, false);
  int pmax = 5, samples = 10, budget = 200;
  std::uint64_t seed = kDefaultSeed;
  experiment_cmd->add_option("--pmax", pmax, "largest layer count")->check(CLI::PositiveNumber)
      ->capture_default_str();
  experiment_cmd->add_option("--samples", samples, "optimizer runs per (scheme, p) cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  experiment_cmd->add_option("--seed", seed, "master seed")->capture_default_str();
  experiment_cmd->add_option("--budget", budget, "evaluation budget per run")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force coloring and ground-state counts");
  add_common(oracle_cmd, false);

  CLI11_PARSE(app, argc, argv);

  try {
    const hoq::ColoringProblem problem = load_problem(problem_flag);
    const hoq::Rational lambda = hoq::parse_rational(lambda_flag);

    if (encode_cmd->parsed()) {
      const auto prog = build_program(problem, hoq::scheme_from_name(scheme_flag), lambda);
      emit(out_path, prog.to_json_string(2) + "\n");
      const auto circ = hoq::compile_circuit(prog.poly);
      std::cout << "scheme=" << hoq::scheme_name(prog.scheme) << " qubits=" << prog.num_qubits()
                << " terms=" << prog.poly.term_count() - (prog.poly.constant_term() != hoq::Rational(0) ? 1 : 0)
                << " cx=" << hoq::cx_count(circ) << "\n";
      return 0;
    }

    if (compile_cmd->parsed()) {
      const auto prog = build_program(problem, hoq::scheme_from_name(scheme_flag), lambda);
      const auto ordered = hoq::order_terms(prog.poly);
      const auto circ = hoq::compile_circuit(prog.poly, ordered);
      const auto cancelled = hoq::cancel_pass(circ);
      emit(out_path, cancelled.to_json_string(2) + "\n");
      if (qasm_path) hoq::atomic_write_file(*qasm_path, cancelled.to_qasm(qasm_gamma));
      std::cout << "terms=" << ordered.size() << " cx=" << hoq::cx_count(circ)
                << " cx_after_cancel=" << hoq::cx_count(cancelled)
                << " rz=" << hoq::rz_count(circ) << "\n";
      return 0;
    }

    if (reduce_cmd->parsed()) {
      hoq::ReductionCertificate cert;
      const auto prog = build_program(problem, hoq::Scheme::reduced, lambda, &cert);
      emit(out_path, prog.to_json_string(2) + "\n");
      std::string subs;
      for (const auto& s : cert.substitutions) {
        subs += " (" + std::to_string(s.var_i) + "," + std::to_string(s.var_j) + ")->aux" +
                std::to_string(s.aux - (prog.num_qubits() - int(cert.substitutions.size())));
      }
      std::cout << "qubits=" << prog.num_qubits() << " substitutions=" << cert.substitutions.size()
                << " lambda=" << hoq::to_string(cert.lambda) << " safe_lambda_min="
                << (cert.safe_lambda_min ? std::to_string(*cert.safe_lambda_min) : "unknown")
                << subs << "\n";
      return 0;
    }

    if (simulate_cmd->parsed()) {
      if (static_cast<int>(sim_betas.size()) != sim_p ||
          static_cast<int>(sim_gammas.size()) != sim_p) {
        std::cerr << "error: --betas/--gammas must each carry exactly --p values\n";
        return 1;
      }
      const auto prog = build_program(problem, hoq::scheme_from_name(scheme_flag), lambda);
      const auto table = hoq::energy_table(prog.poly);
      const auto ground = table.ground_states();
      const auto result = hoq::run_qaoa(table, ground, hoq::QaoaParams(sim_betas, sim_gammas));
      const auto j = run_result_json(result, hoq::to_double(table.min_energy()),
                                     hoq::to_double(table.max_energy()));
      emit(out_path, j.dump(2) + "\n");
      std::cout << "scheme=" << scheme_flag << " p=" << sim_p
                << " relative_error=" << hoq::format_double(result.relative_error)
                << " success=" << hoq::format_double(result.success_probability) << "\n";
      return 0;
    }

    if (grid_cmd->parsed()) {
      const auto prog = build_program(problem, hoq::scheme_from_name(scheme_flag), lambda);
      const auto table = hoq::energy_table(prog.poly);
      const auto grid = hoq::grid_search(table, table.ground_states(), resolution);
      emit(out_path, hoq::grid_to_csv(grid));
      if (svg_path) hoq::atomic_write_file(*svg_path, hoq::grid_to_svg(grid));
      std::cout << "scheme=" << scheme_flag << " resolution=" << resolution
                << " best_beta=" << hoq::format_double(grid.best_beta)
                << " best_gamma=" << hoq::format_double(grid.best_gamma)
                << " best_relative_error=" << hoq::format_double(grid.best_relative_error)
                << " best_success=" << hoq::format_double(grid.best_success_probability) << "\n";
      return 0;
    }

    if (experiment_cmd->parsed()) {
      hoq::ExperimentConfig config;
      config.p_max = pmax;
      config.samples_per_cell = samples;
      config.seed = seed;
      config.lambda = lambda;
      config.optimizer.budget = budget;
      const auto records = hoq::experiment(problem, config);
      emit(out_path, hoq::records_to_csv(records));
      std::size_t outliers = 0;
      for (const auto& r : records) outliers += r.filtered_out ? 1 : 0;
      std::cout << "records=" << records.size() << " outliers=" << outliers << " seed=" << seed
                << "\n";
      return 0;
    }

    if (oracle_cmd->parsed()) {
      nlohmann::json j;
      j["problem"] = nlohmann::json::parse(problem.to_json_string());
      j["proper_colorings"] = hoq::count_proper(problem);
      for (const auto scheme : {hoq::Scheme::binary, hoq::Scheme::reduced, hoq::Scheme::unary}) {
        const auto prog = build_program(problem, scheme, lambda);
        const auto table = hoq::energy_table(prog.poly);
        const auto ground = table.ground_states();
        j[hoq::scheme_name(scheme)] = {{"qubits", prog.num_qubits()},
                                       {"min_energy", hoq::to_string(table.min_energy())},
                                       {"max_energy", hoq::to_string(table.max_energy())},
                                       {"ground_states", ground.size()}};
      }
      emit(out_path, j.dump(2) + "\n");
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
