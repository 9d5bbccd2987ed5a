#include "hoq/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hoq/parallel.hpp"

namespace hoq {

double GridResult::beta_at(int row) const {
  return beta_range.first + (beta_range.second - beta_range.first) * row / resolution;
}

double GridResult::gamma_at(int col) const {
  return gamma_range.first + (gamma_range.second - gamma_range.first) * col / resolution;
}

GridResult grid_search(const EnergyTable& table, const std::vector<std::size_t>& ground_set,
                       int resolution, std::pair<double, double> beta_range,
                       std::pair<double, double> gamma_range) {
  if (resolution < 2) throw std::invalid_argument("grid resolution must be >= 2");
  if (!(beta_range.second > beta_range.first) || !(gamma_range.second > gamma_range.first)) {
    throw std::invalid_argument("empty parameter range");
  }
  if (table.min_energy() == table.max_energy()) {
    throw std::invalid_argument("degenerate spectrum: emax <= emin");
  }

  GridResult result;
  result.resolution = resolution;
  result.beta_range = beta_range;
  result.gamma_range = gamma_range;
  result.relative_errors.assign(std::size_t(resolution) * resolution, 0.0);
  result.success_probabilities.assign(std::size_t(resolution) * resolution, 0.0);

  parallel_for(resolution, [&](std::size_t row) {
    QaoaEvaluator evaluator(table, ground_set);
    const double beta = result.beta_at(static_cast<int>(row));
    for (int col = 0; col < resolution; ++col) {
      const QaoaParams params({beta}, {result.gamma_at(col)});
      const RunResult run = evaluator.evaluate(params);
      result.relative_errors[row * resolution + col] = run.relative_error;
      result.success_probabilities[row * resolution + col] = run.success_probability;
    }
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < result.relative_errors.size(); ++i) {
    if (result.relative_errors[i] < result.relative_errors[best]) best = i;
  }
  result.best_beta = result.beta_at(static_cast<int>(best / resolution));
  result.best_gamma = result.gamma_at(static_cast<int>(best % resolution));
  result.best_relative_error = result.relative_errors[best];
  result.best_success_probability = result.success_probabilities[best];
  return result;
}

namespace {

struct BoxSpec {
  std::vector<double> lo, hi;

  explicit BoxSpec(int p) {
    lo.assign(std::size_t(2) * p, 0.0);
    hi.resize(std::size_t(2) * p);
    for (int i = 0; i < p; ++i) hi[i] = kDefaultBetaMax;
    for (int i = p; i < 2 * p; ++i) hi[i] = kDefaultGammaMax;
  }

  std::vector<double> wrap(std::vector<double> x) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double range = hi[i] - lo[i];
      x[i] -= range * std::floor((x[i] - lo[i]) / range);
    }
    return x;
  }
};

}  // namespace

SampleRecord optimize(const EnergyTable& table, const std::vector<std::size_t>& ground_set,
                      int p, std::uint64_t seed, const OptimizeOptions& options) {
  if (p < 1) throw std::invalid_argument("optimization needs p >= 1");
  if (options.budget < 1) throw std::invalid_argument("budget must be >= 1");

  QaoaEvaluator evaluator(table, ground_set);
  const int dim = 2 * p;
  const BoxSpec box(p);

  std::vector<double> start;
  if (options.start) {
    if (static_cast<int>(options.start->size()) != dim) {
      throw std::invalid_argument("start point has wrong dimension");
    }
    start = box.wrap(*options.start);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    start.resize(dim);
    for (int i = 0; i < dim; ++i) start[i] = box.lo[i] + unit(rng) * (box.hi[i] - box.lo[i]);
  }

  int evaluations = 0;
  SampleRecord best;
  best.p = p;
  best.seed = seed;
  best.relative_error = 2.0;  // above any reachable value

  auto evaluate = [&](const std::vector<double>& x) {
    const std::vector<double> w = box.wrap(x);
    QaoaParams params(std::vector<double>(w.begin(), w.begin() + p),
                      std::vector<double>(w.begin() + p, w.end()));
    const RunResult run = evaluator.evaluate(params);
    ++evaluations;
    if (run.relative_error < best.relative_error) {
      best.relative_error = run.relative_error;
      best.success_probability = run.success_probability;
    }
    return run.relative_error;
  };

  // Nelder-Mead simplex descent with standard coefficients; the budget is a
  // hard cap on objective evaluations.
  std::vector<std::vector<double>> simplex{start};
  std::vector<double> values{evaluate(start)};
  for (int i = 0; i < dim && evaluations < options.budget; ++i) {
    std::vector<double> vertex = start;
    vertex[i] += options.initial_step_fraction * (box.hi[i] - box.lo[i]);
    simplex.push_back(vertex);
    values.push_back(evaluate(vertex));
  }

  const double rho = 1.0, chi = 2.0, psi = 0.5, sigma = 0.5;
  while (evaluations < options.budget && simplex.size() == std::size_t(dim) + 1) {
    std::vector<std::size_t> idx(simplex.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    double spread = 0.0;
    for (int d = 0; d < dim; ++d) {
      double lo = simplex[idx[0]][d], hi = lo;
      for (const auto& v : simplex) {
        lo = std::min(lo, v[d]);
        hi = std::max(hi, v[d]);
      }
      spread = std::max(spread, hi - lo);
    }
    if (spread < options.param_tolerance) break;

    const std::size_t worst = idx.back();
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i : idx) {
      if (i == worst) continue;
      for (int d = 0; d < dim; ++d) centroid[d] += simplex[i][d];
    }
    for (int d = 0; d < dim; ++d) centroid[d] /= dim;

    auto blend = [&](double t) {
      std::vector<double> x(dim);
      for (int d = 0; d < dim; ++d) x[d] = centroid[d] + t * (centroid[d] - simplex[worst][d]);
      return x;
    };

    const std::vector<double> reflected = blend(rho);
    const double f_reflected = evaluate(reflected);
    if (evaluations >= options.budget) break;

    if (f_reflected < values[idx[0]]) {
      const std::vector<double> expanded = blend(rho * chi);
      const double f_expanded = evaluate(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
    } else if (f_reflected < values[idx[idx.size() - 2]]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
    } else {
      const bool outside = f_reflected < values[worst];
      const std::vector<double> contracted = blend(outside ? psi * rho : -psi);
      const double f_contracted = evaluate(contracted);
      if (f_contracted < std::min(f_reflected, values[worst])) {
        simplex[worst] = contracted;
        values[worst] = f_contracted;
      } else {
        // Shrink toward the best vertex.
        for (std::size_t i : idx) {
          if (i == idx[0]) continue;
          for (int d = 0; d < dim; ++d) {
            simplex[i][d] = simplex[idx[0]][d] + sigma * (simplex[i][d] - simplex[idx[0]][d]);
          }
          if (evaluations >= options.budget) break;
          values[i] = evaluate(simplex[i]);
        }
      }
    }
  }

  best.evaluations = evaluations;
  return best;
}

namespace {

std::pair<double, double> iqr_fences(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const auto quantile = [&](double pos) {
    const std::size_t below = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - double(below);
    if (below + 1 >= values.size()) return values.back();
    return values[below] + frac * (values[below + 1] - values[below]);
  };
  const double q1 = quantile(0.25 * double(values.size() - 1));
  const double q3 = quantile(0.75 * double(values.size() - 1));
  const double iqr = q3 - q1;
  return {q1 - 1.5 * iqr, q3 + 1.5 * iqr};
}

// SplitMix64 step; enough mixing to decorrelate derived run seeds.
std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<double> iqr_filter(const std::vector<double>& samples) {
  if (samples.size() < 4) throw std::invalid_argument("IQR filter needs at least 4 samples");
  const auto [lo, hi] = iqr_fences(samples);
  std::vector<double> kept;
  kept.reserve(samples.size());
  for (double v : samples) {
    if (v >= lo && v <= hi) kept.push_back(v);
  }
  return kept;
}

std::vector<SampleRecord> experiment(const ColoringProblem& problem,
                                     const ExperimentConfig& config) {
  if (config.p_max < 1) throw std::invalid_argument("p_max must be >= 1");
  if (config.samples_per_cell < 1) throw std::invalid_argument("samples_per_cell must be >= 1");

  struct SchemeData {
    std::string name;
    EnergyTable table{{0, 0}, 1, 1};
    std::vector<std::size_t> ground;
  };
  std::vector<SchemeData> data;
  for (Scheme scheme : config.schemes) {
    IsingProgram prog;
    switch (scheme) {
      case Scheme::binary: prog = encode_binary(problem); break;
      case Scheme::unary: prog = encode_unary(problem); break;
      case Scheme::reduced:
        prog = reduce_order(encode_binary(problem), config.lambda).first;
        break;
    }
    SchemeData d{scheme_name(scheme), energy_table(prog.poly), {}};
    d.ground = d.table.ground_states();
    data.push_back(std::move(d));
  }

  const std::size_t cells = data.size() * std::size_t(config.p_max);
  const std::size_t total = cells * std::size_t(config.samples_per_cell);
  std::vector<SampleRecord> records(total);

  parallel_for(total, [&](std::size_t task) {
    const std::size_t sample = task % config.samples_per_cell;
    const std::size_t cell = task / config.samples_per_cell;
    const int p = 1 + static_cast<int>(cell % config.p_max);
    const std::size_t scheme_idx = cell / config.p_max;
    const std::uint64_t run_seed = mix_seed(
        mix_seed(config.seed) ^ (scheme_idx * 0x100000001b3ull + std::uint64_t(p) * 0x10001ull +
                                 sample));
    SampleRecord rec = optimize(data[scheme_idx].table, data[scheme_idx].ground, p, run_seed,
                                config.optimizer);
    rec.scheme = data[scheme_idx].name;
    records[task] = std::move(rec);
  });

  // Per-cell outlier marking on success probability.
  for (std::size_t cell = 0; cell < cells; ++cell) {
    const std::size_t begin = cell * config.samples_per_cell;
    std::vector<double> successes;
    for (int s = 0; s < config.samples_per_cell; ++s) {
      successes.push_back(records[begin + s].success_probability);
    }
    if (successes.size() < 4) continue;
    const auto [lo, hi] = iqr_fences(successes);
    for (int s = 0; s < config.samples_per_cell; ++s) {
      auto& rec = records[begin + s];
      rec.filtered_out = rec.success_probability < lo || rec.success_probability > hi;
    }
  }
  return records;
}

}  // namespace hoq
