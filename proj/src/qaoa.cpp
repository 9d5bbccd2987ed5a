#include "hoq/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hoq {

namespace {

constexpr int kMaxQubits = 24;

void mixer_in_place(std::vector<std::complex<double>>& amp, int num_qubits, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const std::complex<double> minus_i_s(0.0, -s);
  for (int q = 0; q < num_qubits; ++q) {
    const std::size_t qbit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amp.size(); ++i) {
      if (i & qbit) continue;
      const std::complex<double> a = amp[i];
      const std::complex<double> b = amp[i | qbit];
      amp[i] = c * a + minus_i_s * b;
      amp[i | qbit] = minus_i_s * a + c * b;
    }
  }
}

}  // namespace

QaoaParams::QaoaParams(std::vector<double> b, std::vector<double> g)
    : betas(std::move(b)), gammas(std::move(g)) {
  if (betas.size() != gammas.size()) {
    throw std::invalid_argument("betas and gammas must have the same length");
  }
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

StateVector uniform_state(int num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range");
  }
  StateVector state;
  state.num_qubits = num_qubits;
  const std::size_t dim = std::size_t{1} << num_qubits;
  state.amplitudes.assign(dim, std::complex<double>(1.0 / std::sqrt(double(dim)), 0.0));
  return state;
}

void apply_phase(StateVector& state, const EnergyTable& table, double gamma) {
  if (state.amplitudes.size() != table.size()) {
    throw std::invalid_argument("statevector and energy table sizes differ");
  }
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    state.amplitudes[i] *= std::polar(1.0, -gamma * table.value(i));
  }
}

void apply_mixer(StateVector& state, double beta) {
  mixer_in_place(state.amplitudes, state.num_qubits, beta);
}

StateVector qaoa_state(const EnergyTable& table, const QaoaParams& params) {
  StateVector state = uniform_state(table.num_vars());
  for (int layer = 0; layer < params.p(); ++layer) {
    apply_phase(state, table, params.gammas[layer]);
    apply_mixer(state, params.betas[layer]);
  }
  return state;
}

double expectation(const StateVector& state, const EnergyTable& table) {
  if (state.amplitudes.size() != table.size()) {
    throw std::invalid_argument("statevector and energy table sizes differ");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    total += std::norm(state.amplitudes[i]) * table.value(i);
  }
  return total;
}

double success_probability(const StateVector& state,
                           const std::vector<std::size_t>& ground_set) {
  if (ground_set.empty()) throw std::invalid_argument("empty ground-state set");
  double total = 0.0;
  for (std::size_t i : ground_set) total += std::norm(state.amplitudes.at(i));
  return total;
}

double relative_error(double expectation, double emin, double emax) {
  if (!(emax > emin)) throw std::invalid_argument("degenerate spectrum: emax <= emin");
  return std::clamp((expectation - emin) / (emax - emin), 0.0, 1.0);
}

RunResult run_qaoa(const EnergyTable& table, const std::vector<std::size_t>& ground_set,
                   const QaoaParams& params) {
  QaoaEvaluator evaluator(table, ground_set);
  return evaluator.evaluate(params);
}

QaoaEvaluator::QaoaEvaluator(const EnergyTable& table, std::vector<std::size_t> ground_set)
    : num_qubits_(table.num_vars()), ground_set_(std::move(ground_set)) {
  if (num_qubits_ > kMaxQubits) throw std::invalid_argument("qubit count out of range");
  if (ground_set_.empty()) throw std::invalid_argument("empty ground-state set");

  std::vector<std::int64_t> distinct = table.numerators();
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  class_energy_.reserve(distinct.size());
  const double denom = static_cast<double>(table.denominator());
  for (std::int64_t numer : distinct) class_energy_.push_back(double(numer) / denom);

  energy_class_.resize(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto it = std::lower_bound(distinct.begin(), distinct.end(), table.numerators()[i]);
    energy_class_[i] = static_cast<std::uint32_t>(it - distinct.begin());
  }
  emin_ = class_energy_.front();
  emax_ = class_energy_.back();
  class_phase_.resize(class_energy_.size());
}

RunResult QaoaEvaluator::evaluate(const QaoaParams& params) {
  const std::size_t dim = std::size_t{1} << num_qubits_;
  scratch_.assign(dim, std::complex<double>(1.0 / std::sqrt(double(dim)), 0.0));

  for (int layer = 0; layer < params.p(); ++layer) {
    const double gamma = params.gammas[layer];
    for (std::size_t k = 0; k < class_energy_.size(); ++k) {
      class_phase_[k] = std::polar(1.0, -gamma * class_energy_[k]);
    }
    for (std::size_t i = 0; i < dim; ++i) scratch_[i] *= class_phase_[energy_class_[i]];
    mixer_in_place(scratch_, num_qubits_, params.betas[layer]);
  }

  double expect = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    expect += std::norm(scratch_[i]) * class_energy_[energy_class_[i]];
  }
  double success = 0.0;
  for (std::size_t i : ground_set_) success += std::norm(scratch_[i]);

  RunResult result;
  result.expectation = expect;
  result.relative_error = relative_error(expect, emin_, emax_);
  result.success_probability = success;
  result.params = params;
  result.evaluations = 1;
  return result;
}

}  // namespace hoq
