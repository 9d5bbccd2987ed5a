#include "hoq/encoders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hoq {

namespace {

int bits_for(int c) {
  int l = 0;
  while ((1 << l) < c) ++l;
  return std::max(l, 1);
}

std::vector<std::string> binary_labels(int n, int l, int aux_count) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n) * l + aux_count);
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < l; ++k) labels.push_back("v" + std::to_string(v) + ".b" + std::to_string(k));
  }
  for (int a = 0; a < aux_count; ++a) labels.push_back("aux" + std::to_string(a));
  return labels;
}

}  // namespace

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::binary: return "binary";
    case Scheme::reduced: return "reduced";
    case Scheme::unary: return "unary";
  }
  throw std::logic_error("unknown scheme");
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "binary") return Scheme::binary;
  if (name == "reduced") return Scheme::reduced;
  if (name == "unary") return Scheme::unary;
  throw std::invalid_argument("unknown scheme: " + name);
}

std::string IsingProgram::to_json_string(int indent) const {
  nlohmann::json var_map = nlohmann::json::object();
  for (std::size_t q = 0; q < qubit_labels.size(); ++q) var_map[qubit_labels[q]] = q;
  nlohmann::json j{{"scheme", scheme_name(scheme)},
                   {"num_qubits", num_qubits()},
                   {"poly", nlohmann::json::parse(poly.to_json_string())},
                   {"var_map", var_map},
                   {"problem", nlohmann::json::parse(problem.to_json_string())}};
  if (lambda) j["lambda"] = to_string(*lambda);
  return j.dump(indent);
}

SpinPolynomial illegal_state_penalty(int c, int vertex, int l, int num_vars) {
  if (c < 1) throw std::invalid_argument("palette size must be >= 1");
  if (c > (1 << l)) throw std::invalid_argument("palette size exceeds 2^l");
  SpinPolynomial penalty(num_vars);
  int remaining = (1 << l) - c;  // states to penalize
  int target = (1 << l) - 1;     // next state to penalize, from the top
  while (remaining > 0) {
    // Cover the largest power-of-two block ending at `target` by fixing its
    // upper bits; the low `free_bits` bits stay unconstrained.
    const int free_bits = std::bit_width(static_cast<unsigned>(remaining)) - 1;
    SpinPolynomial msp = SpinPolynomial::constant(num_vars, Rational(1));
    for (int bit = free_bits; bit < l; ++bit) {
      // Qubit k = 0 holds the most significant color bit.
      const int qubit = vertex * l + (l - 1 - bit);
      SpinPolynomial factor = SpinPolynomial::constant(num_vars, Rational(1));
      const Rational sign = ((target >> bit) & 1) ? Rational(-1) : Rational(1);
      factor.add_term({qubit}, sign);
      msp = msp * factor;
    }
    penalty = penalty + msp;
    target -= 1 << free_bits;
    remaining -= 1 << free_bits;
  }
  return penalty;
}

IsingProgram encode_binary(const ColoringProblem& prob) {
  if (prob.colors < 2) throw std::invalid_argument("binary encoding needs >= 2 colors");
  const int l = bits_for(prob.colors);
  const int num_qubits = prob.n * l;

  SpinPolynomial poly(num_qubits);
  for (const auto& [u, v] : prob.edges) {
    SpinPolynomial clash = SpinPolynomial::constant(num_qubits, Rational(1));
    for (int k = 0; k < l; ++k) {
      SpinPolynomial factor = SpinPolynomial::constant(num_qubits, Rational(1));
      factor.add_term({u * l + k, v * l + k}, Rational(1));
      clash = clash * factor;
    }
    poly = poly + clash;
  }
  for (int v = 0; v < prob.n; ++v) {
    poly = poly + illegal_state_penalty(prob.colors, v, l, num_qubits);
  }

  IsingProgram prog;
  prog.poly = std::move(poly);
  prog.scheme = Scheme::binary;
  prog.problem = prob;
  prog.bits_per_vertex = l;
  prog.qubit_labels = binary_labels(prob.n, l, 0);
  return prog;
}

IsingProgram encode_unary(const ColoringProblem& prob) {
  if (prob.colors < 2) throw std::invalid_argument("unary encoding needs >= 2 colors");
  const int c = prob.colors;
  const int num_qubits = prob.n * c;

  SpinPolynomial poly(num_qubits);
  for (int v = 0; v < prob.n; ++v) {
    // 1-of-c constraint: (2 - c + sum_k mu_v^k)^2.
    SpinPolynomial sum = SpinPolynomial::constant(num_qubits, Rational(2 - c));
    for (int k = 0; k < c; ++k) sum.add_term({v * c + k}, Rational(1));
    poly = poly + sum * sum;
  }
  for (const auto& [u, v] : prob.edges) {
    for (int k = 0; k < c; ++k) {
      SpinPolynomial fu = SpinPolynomial::constant(num_qubits, Rational(1));
      fu.add_term({u * c + k}, Rational(-1));
      SpinPolynomial fv = SpinPolynomial::constant(num_qubits, Rational(1));
      fv.add_term({v * c + k}, Rational(-1));
      poly = poly + fu * fv;
    }
  }

  IsingProgram prog;
  prog.poly = std::move(poly);
  prog.scheme = Scheme::unary;
  prog.problem = prob;
  prog.bits_per_vertex = c;
  prog.qubit_labels.reserve(num_qubits);
  for (int v = 0; v < prob.n; ++v) {
    for (int k = 0; k < c; ++k) {
      prog.qubit_labels.push_back("v" + std::to_string(v) + ".c" + std::to_string(k));
    }
  }
  return prog;
}

namespace {

// Pair occurring in the most terms of degree >= 3; ties broken by lowest
// variable indices. Returns nullopt when the polynomial is quadratic.
std::optional<std::pair<int, int>> most_shared_pair(const SpinPolynomial& p) {
  std::map<std::pair<int, int>, int> counts;
  for (const auto& [vars, coeff] : p.terms()) {
    if (vars.size() < 3) continue;
    for (std::size_t a = 0; a < vars.size(); ++a) {
      for (std::size_t b = a + 1; b < vars.size(); ++b) {
        ++counts[{vars[a], vars[b]}];
      }
    }
  }
  if (counts.empty()) return std::nullopt;
  std::pair<int, int> best{};
  int best_count = 0;
  for (const auto& [pair, count] : counts) {
    if (count > best_count) {
      best = pair;
      best_count = count;
    }
  }
  return best;
}

// Widens a polynomial to a larger variable universe (indices unchanged).
SpinPolynomial widen(const SpinPolynomial& p, int num_vars) {
  SpinPolynomial out(num_vars);
  for (const auto& [vars, coeff] : p.terms()) out.add_term(vars, coeff);
  return out;
}

// Equality penalty for one substitution: zero exactly when the auxiliary
// equals the rewritten product, positive otherwise.
SpinPolynomial pair_constraint(int num_vars, int var_i, int var_j, int aux) {
  SpinPolynomial con(num_vars);
  con.add_term({aux, var_i}, Rational(-2));
  con.add_term({aux, var_j}, Rational(-2));
  con.add_term({aux}, Rational(-2));
  con.add_term({}, Rational(1));
  con.add_term({var_i}, Rational(1));
  con.add_term({var_j}, Rational(1));
  con.add_term({var_i, var_j}, Rational(1));
  con.add_term({}, Rational(2));
  return con;
}

// Smallest integer weight whose ground states coincide with the consistent
// extensions of the objective's own ground states.
std::optional<std::int64_t> sweep_safe_lambda(const SpinPolynomial& objective,
                                              const SpinPolynomial& constraints,
                                              std::int64_t lambda_cap = 64) {
  if (objective.num_vars() > 20) return std::nullopt;
  const EnergyTable obj = energy_table(objective);
  const EnergyTable con = energy_table(constraints);
  const std::int64_t denom = std::lcm(obj.denominator(), con.denominator());
  const std::int64_t obj_scale = denom / obj.denominator();
  const std::int64_t con_scale = denom / con.denominator();
  // Reference ground picture: minimum of obj over constraint-satisfying
  // states, which a safe weight must reproduce exactly.
  std::int64_t ref_min = 0;
  bool have_ref = false;
  for (std::size_t i = 0; i < obj.size(); ++i) {
    if (con.numerators()[i] != 0) continue;
    const std::int64_t e = obj.numerators()[i] * obj_scale;
    if (!have_ref || e < ref_min) {
      ref_min = e;
      have_ref = true;
    }
  }
  if (!have_ref) return std::nullopt;
  for (std::int64_t lambda = 1; lambda <= lambda_cap; ++lambda) {
    bool safe = true;
    for (std::size_t i = 0; i < obj.size() && safe; ++i) {
      if (con.numerators()[i] == 0) continue;
      const std::int64_t e =
          obj.numerators()[i] * obj_scale + lambda * con.numerators()[i] * con_scale;
      if (e <= ref_min) safe = false;  // a violating state ties or beats the true minimum
    }
    if (safe) return lambda;
  }
  return std::nullopt;
}

}  // namespace

std::pair<IsingProgram, ReductionCertificate> reduce_order(const IsingProgram& prog,
                                                           const Rational& lambda) {
  if (lambda <= Rational(0)) throw std::invalid_argument("lambda must be positive");
  ReductionCertificate cert;
  cert.lambda = lambda;
  if (prog.poly.degree() <= 2) {
    return {prog, cert};
  }

  const int original_qubits = prog.num_qubits();
  SpinPolynomial objective = prog.poly;
  std::vector<ReductionCertificate::Substitution> subs;

  // Each pass eliminates one pair; the auxiliary count is bounded by the
  // total number of variable pairs, so this always terminates.
  const int max_passes = original_qubits * original_qubits;
  int passes = 0;
  while (objective.degree() > 2) {
    if (++passes > max_passes) {
      throw std::logic_error("order reduction failed to reach degree 2");
    }
    const auto pair = most_shared_pair(objective);
    if (!pair) break;
    const int aux = objective.num_vars();
    objective = widen(objective, aux + 1);
    SpinPolynomial repl(aux + 1);
    repl.add_term({}, Rational(1));
    repl.add_term({pair->first}, Rational(1));
    repl.add_term({pair->second}, Rational(1));
    repl.add_term({aux}, Rational(-2));
    objective = substitute_pair(objective, pair->first, pair->second, repl);
    subs.push_back({pair->first, pair->second, aux});
  }

  const int num_qubits = objective.num_vars();
  objective = widen(objective, num_qubits);
  SpinPolynomial constraints(num_qubits);
  for (const auto& sub : subs) {
    constraints = constraints + pair_constraint(num_qubits, sub.var_i, sub.var_j, sub.aux);
  }

  IsingProgram out;
  out.poly = objective + constraints * lambda;
  out.scheme = Scheme::reduced;
  out.problem = prog.problem;
  out.bits_per_vertex = prog.bits_per_vertex;
  out.qubit_labels = binary_labels(prog.problem.n, prog.bits_per_vertex,
                                   num_qubits - original_qubits);
  out.lambda = lambda;

  cert.substitutions = std::move(subs);
  cert.safe_lambda_min = sweep_safe_lambda(objective, constraints);
  return {out, cert};
}

std::optional<Coloring> decode(const IsingProgram& prog, const SpinAssignment& a) {
  if (a.size() != prog.num_qubits()) {
    throw std::invalid_argument("assignment length does not match qubit count");
  }
  const int n = prog.problem.n;
  const int c = prog.problem.colors;
  Coloring col(std::vector<int>(n, 0));
  if (prog.scheme == Scheme::unary) {
    for (int v = 0; v < n; ++v) {
      int chosen = -1;
      for (int k = 0; k < c; ++k) {
        if (a.values[prog.qubit(v, k)] == -1) {
          if (chosen >= 0) return std::nullopt;  // two-hot
          chosen = k;
        }
      }
      if (chosen < 0) return std::nullopt;  // zero-hot
      col.colors[v] = chosen;
    }
    return col;
  }
  // binary/reduced: read bits MSB-first, spin +1 <-> bit 0.
  const int l = prog.bits_per_vertex;
  for (int v = 0; v < n; ++v) {
    int index = 0;
    for (int k = 0; k < l; ++k) {
      index = (index << 1) | (a.values[prog.qubit(v, k)] == -1 ? 1 : 0);
    }
    if (index >= c) return std::nullopt;
    col.colors[v] = index;
  }
  return col;
}

std::int64_t predicted_cx_unary(std::int64_t n, std::int64_t e, std::int64_t c) {
  if (n < 0 || e < 0 || c < 0) throw std::invalid_argument("negative input");
  return 2 * c * e + n * c * (c - 1);
}

std::int64_t predicted_cx_binary_closed_form(std::int64_t n, std::int64_t e, std::int64_t l) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  return ((std::int64_t{1} << l) - 2) * ((2 * e + n) * l - 2 * (e + n));
}

std::int64_t predicted_cx_binary_binomial_sum(std::int64_t n, std::int64_t e, std::int64_t l) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  std::int64_t edge_sum = 0;
  std::int64_t node_sum = 0;
  std::int64_t binom = l;  // C(l, 1)
  for (std::int64_t k = 1; k <= l - 1; ++k) {
    edge_sum += binom * (2 * k - 1);
    node_sum += binom * (k - 1);
    binom = binom * (l - k) / (k + 1);
  }
  return 2 * e * edge_sum + 2 * n * node_sum;
}

}  // namespace hoq
