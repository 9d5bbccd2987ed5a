// Acceptance suite: runs every contract criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status = number of failures.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hoq/coloring.hpp"
#include "hoq/compiler.hpp"
#include "hoq/encoders.hpp"
#include "hoq/io.hpp"
#include "hoq/qaoa.hpp"
#include "hoq/search.hpp"
#include "oracles.hpp"

using namespace hoq;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool expect(bool ok, const std::string& detail, std::string& log) {
  if (!ok && log.empty()) log = detail;
  return ok;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

// ---------------------------------------------------------------------------

bool criterion_gate_counts(std::string& log) {
  const ColoringProblem problem = four_corners();
  bool ok = true;

  const IsingProgram binary = encode_binary(problem);
  ok &= expect(cx_count(compile_circuit(binary.poly)) == 40, "binary CX != 40", log);

  const auto [reduced, cert] = reduce_order(binary, Rational(3));
  ok &= expect(reduced.poly.term_count_of_order(2) == 48, "reduced quadratic terms != 48", log);
  ok &= expect(cx_count(compile_circuit(reduced.poly)) == 96, "reduced CX != 96", log);

  const IsingProgram unary = encode_unary(problem);
  ok &= expect(unary.poly.term_count_of_order(2) == 40, "unary quadratic terms != 40", log);
  ok &= expect(cx_count(compile_circuit(unary.poly)) == 80, "unary CX != 80", log);
  return ok;
}

bool criterion_validity_equivalence(std::string& log) {
  const ColoringProblem problem = four_corners();
  const IsingProgram prog = encode_binary(problem);
  const EnergyTable table = energy_table(prog.poly);
  bool ok = expect(table.min_energy() == Rational(0), "minimum energy != 0", log);

  const auto ground = table.ground_states();
  ok &= expect(ground.size() == 84, "ground-state count != 84", log);

  std::set<std::vector<int>> decoded;
  for (std::size_t idx : ground) {
    const auto col = decode(prog, SpinAssignment::from_basis_index(idx, 8));
    if (!col || !is_proper(problem, *col)) {
      return expect(false, "a ground state does not decode to a proper coloring", log);
    }
    decoded.insert(col->colors);
  }
  ok &= expect(decoded.size() == 84, "ground states collide after decoding", log);
  ok &= expect(count_proper(problem) == 84, "proper-coloring count != 84", log);
  return ok;
}

bool criterion_reduction_soundness(std::string& log) {
  const IsingProgram binary = encode_binary(four_corners());
  bool ok = true;

  const auto safe = [&](const Rational& lambda) {
    const auto [prog, cert] = reduce_order(binary, lambda);
    const EnergyTable table = energy_table(prog.poly);
    if (table.min_energy() != Rational(0)) return false;
    const auto ground = table.ground_states();
    if (ground.size() != 84) return false;
    for (std::size_t idx : ground) {
      if (!oracles::reduced_auxiliaries_consistent(idx)) return false;
    }
    return true;
  };

  // Equality with the projected quartic energy exactly on consistent states.
  const auto [prog3, cert3] = reduce_order(binary, Rational(3));
  const EnergyTable table3 = energy_table(prog3.poly);
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << 12); ++idx) {
    const std::int64_t projected = oracles::four_corners_binary_energy(idx & 0xff);
    const bool consistent = oracles::reduced_auxiliaries_consistent(idx);
    const bool equal = table3.numerators()[idx] == projected;
    if (consistent != equal) {
      return expect(false, "energy equality does not match auxiliary consistency", log);
    }
  }
  ok &= expect(safe(Rational(3)), "lambda=3 is not safe", log);
  ok &= expect(!safe(Rational(1)), "lambda=1 unexpectedly safe", log);
  ok &= expect(!safe(Rational(2)), "lambda=2 unexpectedly safe", log);
  ok &= expect(cert3.safe_lambda_min.has_value() && *cert3.safe_lambda_min == 3,
               "reported minimal safe lambda != 3", log);
  return ok;
}

bool criterion_illegal_state_penalties(std::string& log) {
  for (int c = 2; c <= 32; ++c) {
    int l = 0;
    while ((1 << l) < c) ++l;
    l = std::max(l, 1);
    const SpinPolynomial penalty = illegal_state_penalty(c, 0, l, l);
    const EnergyTable table = energy_table(penalty);
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << l); ++idx) {
      int color = 0;
      for (int k = 0; k < l; ++k) color = (color << 1) | ((idx >> k) & 1);
      const Rational value = table.at(idx);
      if (color < c && value != Rational(0)) {
        return expect(false, "penalty nonzero on a legal color (c=" + std::to_string(c) + ")",
                      log);
      }
      if (color >= c && value <= Rational(0)) {
        return expect(false, "penalty not positive on an illegal color (c=" + std::to_string(c) + ")",
                      log);
      }
    }
    // Every multi-state penalty contributes exactly one constant unit.
    const int msp_count = int(penalty.constant_term().numerator());
    const int expected = std::popcount(unsigned((1 << l) - c));
    if (msp_count != expected) {
      return expect(false, "MSP count != popcount(2^l - c) for c=" + std::to_string(c), log);
    }
  }
  return true;
}

bool criterion_circuit_equivalence(std::string& log) {
  const ColoringProblem problem = four_corners();
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> angle(-6.3, 6.3);
  bool ok = true;

  const auto check_poly = [&](const SpinPolynomial& poly, const std::string& label) {
    const GateCircuit natural = compile_circuit(poly);
    const GateCircuit ordered = compile_circuit(poly, order_terms(poly));
    const GateCircuit slim = cancel_pass(ordered);
    for (int round = 0; round < 16; ++round) {
      const double gamma = angle(rng);
      if (verify_circuit(natural, poly, gamma) >= 1e-9 ||
          verify_circuit(slim, poly, gamma) >= 1e-9) {
        return expect(false, label + " circuit deviates beyond 1e-9", log);
      }
    }
    return true;
  };

  ok &= check_poly(encode_binary(problem).poly, "binary");
  ok &= check_poly(reduce_order(encode_binary(problem), Rational(3)).first.poly, "reduced");
  ok &= check_poly(encode_unary(problem).poly, "unary");

  // Dense-unitary cross-check at n <= 4.
  const auto dense_check = [&](const SpinPolynomial& poly, const std::string& label) {
    const double gamma = 1.31;
    const GateCircuit circ = cancel_pass(compile_circuit(poly, order_terms(poly)));
    const EnergyTable table = energy_table(poly);
    const std::size_t dim = table.size();
    for (std::size_t col = 0; col < dim; ++col) {
      std::vector<std::complex<double>> basis(dim);
      basis[col] = 1.0;
      apply_circuit(circ, basis, gamma);
      for (std::size_t row = 0; row < dim; ++row) {
        const std::complex<double> want =
            row == col ? std::polar(1.0, -gamma * table.value(row)) : 0.0;
        if (std::abs(basis[row] - want) >= 1e-9) {
          return expect(false, label + " dense unitary mismatch", log);
        }
      }
    }
    return true;
  };
  ok &= dense_check(encode_binary(ColoringProblem(2, {{0, 1}}, 4)).poly, "two-node binary");
  ok &= dense_check(encode_unary(ColoringProblem(1, {}, 4)).poly, "one-node unary");
  return ok;
}

bool criterion_cancellation(std::string& log) {
  const SpinPolynomial poly = encode_binary(four_corners()).poly;
  const GateCircuit ordered = compile_circuit(poly, order_terms(poly));
  const GateCircuit slim = cancel_pass(ordered);
  const int removed = cx_count(ordered) - cx_count(slim);
  std::printf("        cancellation achieved: %d CX removed (reference optimum: 16)\n", removed);
  bool ok = expect(removed >= 8, "fewer than 8 CX removed", log);
  ok &= expect(verify_circuit(slim, poly, 1.137) < 1e-9, "cancelled circuit deviates", log);
  return ok;
}

bool criterion_uniform_baselines(std::string& log) {
  const ColoringProblem problem = four_corners();
  bool ok = true;

  const EnergyTable binary = energy_table(encode_binary(problem).poly);
  const RunResult base = run_qaoa(binary, binary.ground_states(), QaoaParams{});
  ok &= expect(base.expectation == 4.0, "p=0 expectation != 4.0 exactly", log);
  ok &= expect(std::abs(base.success_probability - 84.0 / 256.0) < 1e-12,
               "binary baseline != 84/256", log);

  const EnergyTable reduced =
      energy_table(reduce_order(encode_binary(problem), Rational(3)).first.poly);
  const RunResult reduced_run = run_qaoa(reduced, reduced.ground_states(), QaoaParams{});
  ok &= expect(std::abs(reduced_run.success_probability - 84.0 / 4096.0) < 1e-12,
               "reduced baseline != 84/4096", log);

  const EnergyTable unary = energy_table(encode_unary(problem).poly);
  const RunResult unary_run = run_qaoa(unary, unary.ground_states(), QaoaParams{});
  ok &= expect(std::abs(unary_run.success_probability - 84.0 / 65536.0) < 1e-12,
               "unary baseline != 84/65536", log);
  return ok;
}

bool criterion_grid_ordering(std::string& log) {
  const ColoringProblem problem = four_corners();
  const auto run_grid = [&](const SpinPolynomial& poly) {
    const EnergyTable table = energy_table(poly);
    return grid_search(table, table.ground_states(), 64);
  };
  const GridResult binary = run_grid(encode_binary(problem).poly);
  const GridResult reduced =
      run_grid(reduce_order(encode_binary(problem), Rational(3)).first.poly);
  const GridResult unary = run_grid(encode_unary(problem).poly);

  std::printf("        best relative error: binary=%.6f reduced=%.6f unary=%.6f\n",
              binary.best_relative_error, reduced.best_relative_error,
              unary.best_relative_error);
  std::printf("        best success:        binary=%.6f reduced=%.6f unary=%.6f\n",
              binary.best_success_probability, reduced.best_success_probability,
              unary.best_success_probability);

  bool ok = expect(binary.best_relative_error < reduced.best_relative_error,
                   "binary best error not below reduced", log);
  ok &= expect(binary.best_relative_error < unary.best_relative_error,
               "binary best error not below unary", log);
  ok &= expect(binary.best_success_probability > reduced.best_success_probability,
               "binary best success not above reduced", log);
  ok &= expect(binary.best_success_probability > unary.best_success_probability,
               "binary best success not above unary", log);
  return ok;
}

bool criterion_experiment_protocol(std::string& log) {
  bool ok = expect(iqr_filter({1, 2, 3, 100}) == std::vector<double>({1, 2, 3}),
                   "IQR oracle case failed", log);

  ExperimentConfig config;
  config.p_max = 5;
  config.samples_per_cell = 10;
  config.seed = 7;
  const auto records = experiment(four_corners(), config);
  ok &= expect(records.size() == 150, "record count != 150", log);

  const std::string csv_again = records_to_csv(experiment(four_corners(), config));
  ok &= expect(records_to_csv(records) == csv_again, "experiment rerun not byte-identical", log);

  for (int p = 1; p <= 5 && ok; ++p) {
    std::vector<double> binary, reduced, unary;
    for (const auto& rec : records) {
      if (rec.p != p) continue;
      if (rec.scheme == "binary") binary.push_back(rec.success_probability);
      if (rec.scheme == "reduced") reduced.push_back(rec.success_probability);
      if (rec.scheme == "unary") unary.push_back(rec.success_probability);
    }
    const double mb = median(binary), mr = median(reduced), mu = median(unary);
    std::printf("        p=%d median success: binary=%.5f reduced=%.5f unary=%.5f\n", p, mb, mr,
                mu);
    ok &= expect(mb > mr && mb > mu,
                 "binary median success not highest at p=" + std::to_string(p), log);
  }
  return ok;
}

bool criterion_formula_transcriptions(std::string& log) {
  bool ok = expect(predicted_cx_unary(4, 4, 4) == 80, "unary formula != 80", log);
  ok &= expect(cx_count(compile_circuit(encode_unary(four_corners()).poly)) ==
                   predicted_cx_unary(4, 4, 4),
               "unary formula disagrees with the compiled count", log);

  std::mt19937_64 rng(67);
  for (std::int64_t l = 2; l <= 6 && ok; ++l) {
    for (int round = 0; round < 25; ++round) {
      const std::int64_t n = std::int64_t(rng() % 40);
      const std::int64_t e = std::int64_t(rng() % 80);
      if (predicted_cx_binary_binomial_sum(n, e, l) != predicted_cx_binary_closed_form(n, e, l)) {
        return expect(false, "binomial-sum and closed forms disagree", log);
      }
    }
  }

  // Known, documented divergence: the closed form says 16 where the compiler
  // counts 40 on four corners. Both sides are asserted, never reconciled.
  const std::int64_t closed = predicted_cx_binary_closed_form(4, 4, 2);
  const int compiled = cx_count(compile_circuit(encode_binary(four_corners()).poly));
  ok &= expect(closed == 16, "closed form at (4,4,2) != 16", log);
  ok &= expect(compiled == 40, "compiled four-corners count != 40", log);
  ok &= expect(closed != compiled, "divergence unexpectedly reconciled", log);
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"gate counts match the reference values exactly", criterion_gate_counts},
      {"validity equivalence on the 2^8 quartic table", criterion_validity_equivalence},
      {"order reduction soundness and minimal safe weight", criterion_reduction_soundness},
      {"illegal-state penalties partition every palette in [2,32]",
       criterion_illegal_state_penalties},
      {"compiled circuits match diagonal exponentiation", criterion_circuit_equivalence},
      {"greedy ordering cancels at least 8 CX on four corners", criterion_cancellation},
      {"p=0 uniform baselines", criterion_uniform_baselines},
      {"64x64 grid: binary encoding strictly wins", criterion_grid_ordering},
      {"experiment protocol: 150 records, determinism, medians", criterion_experiment_protocol},
      {"gate-count formula transcriptions and logged divergence",
       criterion_formula_transcriptions},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %2zu. %s%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
