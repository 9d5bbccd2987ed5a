#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hoq/coloring.hpp"
#include "hoq/encoders.hpp"
#include "hoq/qaoa.hpp"
#include "hoq/spin_poly.hpp"

namespace hoq {

inline constexpr double kDefaultBetaMax = 3.14159265358979323846;       // pi
inline constexpr double kDefaultGammaMax = 6.28318530717958647692;      // 2*pi

/// Dense p=1 relative-error surface over a (beta, gamma) box.
struct GridResult {
  int resolution = 0;
  std::pair<double, double> beta_range{0.0, kDefaultBetaMax};
  std::pair<double, double> gamma_range{0.0, kDefaultGammaMax};
  /// Row-major: index = beta_index * resolution + gamma_index.
  std::vector<double> relative_errors;
  std::vector<double> success_probabilities;
  double best_beta = 0.0;
  double best_gamma = 0.0;
  double best_relative_error = 1.0;
  double best_success_probability = 0.0;

  double beta_at(int row) const;
  double gamma_at(int col) const;
};

/// Evaluates p=1 QAOA on every point of the half-open uniform grid and
/// returns the full surfaces plus the argmin (first minimum in row-major
/// order). Deterministic; points are farmed out to workers.
GridResult grid_search(const EnergyTable& table, const std::vector<std::size_t>& ground_set,
                       int resolution,
                       std::pair<double, double> beta_range = {0.0, kDefaultBetaMax},
                       std::pair<double, double> gamma_range = {0.0, kDefaultGammaMax});

struct SampleRecord {
  std::string scheme;
  int p = 0;
  std::uint64_t seed = 0;
  double relative_error = 0.0;
  double success_probability = 0.0;
  int evaluations = 0;
  /// True when the per-cell IQR rule flagged this record as an outlier.
  bool filtered_out = false;
};

struct OptimizeOptions {
  int budget = 200;                  // max QAOA evaluations
  double initial_step_fraction = 0.1;  // simplex edge as a fraction of each range
  double param_tolerance = 1e-4;     // convergence: simplex parameter spread
  /// Explicit start [betas..., gammas...]; seeded-random inside the box when
  /// absent.
  std::optional<std::vector<double>> start;
};

/// Derivative-free descent (Nelder-Mead simplex) over the 2p-dimensional
/// periodic box, minimizing relative error. Deterministic given the seed;
/// never returns a result worse than its evaluated start point.
SampleRecord optimize(const EnergyTable& table, const std::vector<std::size_t>& ground_set,
                      int p, std::uint64_t seed, const OptimizeOptions& options = {});

/// Drops values outside [Q1 - 1.5*IQR, Q3 + 1.5*IQR]; quartiles by linear
/// interpolation at 0.25(n-1) and 0.75(n-1) of the sorted data. Preserves
/// input order; requires at least 4 samples.
std::vector<double> iqr_filter(const std::vector<double>& samples);

struct ExperimentConfig {
  std::vector<Scheme> schemes{Scheme::binary, Scheme::reduced, Scheme::unary};
  int p_max = 5;
  int samples_per_cell = 10;
  std::uint64_t seed = 1;
  Rational lambda{3};  // reduction weight
  OptimizeOptions optimizer;
};

/// Runs samples_per_cell seeded optimizations for every (scheme, p) cell and
/// marks per-cell success-probability outliers via the IQR rule. Records are
/// ordered by scheme, then p, then sample; fully reproducible from the seed.
std::vector<SampleRecord> experiment(const ColoringProblem& problem,
                                     const ExperimentConfig& config);

}  // namespace hoq
