#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hoq/spin_poly.hpp"

namespace hoq {

/// One (beta, gamma) pair per layer; p = 0 is the bare uniform state.
struct QaoaParams {
  std::vector<double> betas;
  std::vector<double> gammas;

  QaoaParams() = default;
  QaoaParams(std::vector<double> b, std::vector<double> g);

  int p() const { return static_cast<int>(betas.size()); }
};

struct StateVector {
  std::vector<std::complex<double>> amplitudes;
  int num_qubits = 0;

  double norm_squared() const;
};

struct RunResult {
  double expectation = 0.0;
  double relative_error = 0.0;
  double success_probability = 0.0;
  QaoaParams params;
  int evaluations = 0;
};

StateVector uniform_state(int num_qubits);

/// Diagonal phase layer: amp[i] *= exp(-i*gamma*energy[i]).
void apply_phase(StateVector& state, const EnergyTable& table, double gamma);

/// Transverse mixer exp(-i*beta*X) on every qubit.
void apply_mixer(StateVector& state, double beta);

/// Uniform start, then alternating phase/mixer layers.
StateVector qaoa_state(const EnergyTable& table, const QaoaParams& params);

double expectation(const StateVector& state, const EnergyTable& table);

double success_probability(const StateVector& state,
                           const std::vector<std::size_t>& ground_set);

/// (expectation - emin) / (emax - emin), clamped to [0, 1].
double relative_error(double expectation, double emin, double emax);

RunResult run_qaoa(const EnergyTable& table, const std::vector<std::size_t>& ground_set,
                   const QaoaParams& params);

/// Reusable evaluation context: hoists the distinct-energy classification and
/// scratch state out of optimizer/grid loops. One instance per worker.
class QaoaEvaluator {
 public:
  QaoaEvaluator(const EnergyTable& table, std::vector<std::size_t> ground_set);

  RunResult evaluate(const QaoaParams& params);
  double emin() const { return emin_; }
  double emax() const { return emax_; }
  int num_qubits() const { return num_qubits_; }

 private:
  int num_qubits_;
  double emin_;
  double emax_;
  std::vector<std::uint32_t> energy_class_;  // per basis state
  std::vector<double> class_energy_;         // distinct energies
  std::vector<std::size_t> ground_set_;
  std::vector<std::complex<double>> scratch_;
  std::vector<std::complex<double>> class_phase_;
};

}  // namespace hoq
