#include "hoq/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hoq {

namespace {

constexpr int kVerifyWidthCap = 16;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string GateCircuit::to_json_string(int indent) const {
  nlohmann::json gate_list = nlohmann::json::array();
  for (const auto& g : gates) {
    if (const auto* cx = std::get_if<CxGate>(&g)) {
      gate_list.push_back({{"kind", "cx"}, {"control", cx->control}, {"target", cx->target}});
    } else {
      const auto& rz = std::get<RzGate>(g);
      gate_list.push_back(
          {{"kind", "rz"}, {"qubit", rz.qubit}, {"angle_coeff", to_string(rz.angle_coeff)}});
    }
  }
  nlohmann::json j{{"width", width},
                   {"global_phase", to_string(global_phase)},
                   {"gates", gate_list}};
  return j.dump(indent);
}

std::string GateCircuit::to_qasm(double gamma) const {
  std::string out;
  for (const auto& g : gates) {
    if (const auto* cx = std::get_if<CxGate>(&g)) {
      out += "cx q[" + std::to_string(cx->control) + "],q[" + std::to_string(cx->target) + "]\n";
    } else {
      const auto& rz = std::get<RzGate>(g);
      out += "rz(" + format_double(to_double(rz.angle_coeff) * gamma) + ") q[" +
             std::to_string(rz.qubit) + "]\n";
    }
  }
  return out;
}

std::vector<OrderedTerm> natural_order(const SpinPolynomial& p) {
  std::vector<OrderedTerm> order;
  for (const auto& [vars, coeff] : p.terms()) {
    if (vars.empty()) continue;
    order.push_back({vars, vars});
  }
  return order;
}

namespace {

// Sequence with `pair` fronted, remaining qubits ascending.
std::vector<int> fronted_sequence(const Term& term, std::pair<int, int> pair) {
  std::vector<int> seq{pair.first, pair.second};
  for (int v : term) {
    if (v != pair.first && v != pair.second) seq.push_back(v);
  }
  return seq;
}

}  // namespace

std::vector<OrderedTerm> order_terms(const SpinPolynomial& p) {
  std::vector<Term> remaining;
  for (const auto& [vars, coeff] : p.terms()) {
    if (!vars.empty()) remaining.push_back(vars);
  }
  std::vector<OrderedTerm> order;
  order.reserve(remaining.size());

  // Group terms that contain a common pair into runs fronted by that pair.
  // Terms with the fewest grouping options commit first, so a quadratic term
  // whose only partner is one specific higher-order term is not stranded.
  while (!remaining.empty()) {
    std::map<std::pair<int, int>, std::vector<std::size_t>> pair_members;
    for (std::size_t t = 0; t < remaining.size(); ++t) {
      const Term& vars = remaining[t];
      for (std::size_t a = 0; a < vars.size(); ++a) {
        for (std::size_t b = a + 1; b < vars.size(); ++b) {
          pair_members[{vars[a], vars[b]}].push_back(t);
        }
      }
    }

    std::size_t best_term = remaining.size();
    int best_options = -1;
    for (std::size_t t = 0; t < remaining.size(); ++t) {
      int options = 0;
      const Term& vars = remaining[t];
      for (std::size_t a = 0; a < vars.size(); ++a) {
        for (std::size_t b = a + 1; b < vars.size(); ++b) {
          if (pair_members[{vars[a], vars[b]}].size() >= 2) ++options;
        }
      }
      if (options == 0) continue;
      if (best_options < 0 || options < best_options ||
          (options == best_options && remaining[t] < remaining[best_term])) {
        best_term = t;
        best_options = options;
      }
    }

    if (best_options < 0) {
      // Nothing shares a pair any more; emit the rest in lexicographic order.
      std::sort(remaining.begin(), remaining.end());
      for (const Term& vars : remaining) order.push_back({vars, vars});
      break;
    }

    std::pair<int, int> best_pair{-1, -1};
    std::size_t best_size = 0;
    const Term& vars = remaining[best_term];
    for (std::size_t a = 0; a < vars.size(); ++a) {
      for (std::size_t b = a + 1; b < vars.size(); ++b) {
        const std::pair<int, int> pair{vars[a], vars[b]};
        const std::size_t size = pair_members[pair].size();
        if (size >= 2 && (size > best_size || (size == best_size && pair < best_pair))) {
          best_pair = pair;
          best_size = size;
        }
      }
    }

    std::vector<Term> run;
    std::vector<Term> rest;
    for (std::size_t t = 0; t < remaining.size(); ++t) {
      const bool member =
          std::binary_search(remaining[t].begin(), remaining[t].end(), best_pair.first) &&
          std::binary_search(remaining[t].begin(), remaining[t].end(), best_pair.second);
      (member ? run : rest).push_back(std::move(remaining[t]));
    }
    std::sort(run.begin(), run.end());
    for (const Term& member : run) {
      order.push_back({member, fronted_sequence(member, best_pair)});
    }
    remaining = std::move(rest);
  }
  return order;
}

GateCircuit compile_circuit(const SpinPolynomial& p, const std::vector<OrderedTerm>& order) {
  std::vector<Term> expected;
  for (const auto& [vars, coeff] : p.terms()) {
    if (!vars.empty()) expected.push_back(vars);
  }
  std::vector<Term> given;
  given.reserve(order.size());
  for (const auto& ot : order) {
    std::vector<int> sorted_seq = ot.sequence;
    std::sort(sorted_seq.begin(), sorted_seq.end());
    if (sorted_seq != ot.term) {
      throw std::invalid_argument("ordered-term sequence does not match its term");
    }
    given.push_back(ot.term);
  }
  std::sort(given.begin(), given.end());
  if (given != expected) {
    throw std::invalid_argument("order is not a permutation of the polynomial's terms");
  }

  GateCircuit circ;
  circ.width = p.num_vars();
  circ.global_phase = p.constant_term();
  for (const auto& ot : order) {
    const Rational coeff = p.coefficient(ot.term);
    const auto& seq = ot.sequence;
    const std::size_t m = seq.size();
    for (std::size_t i = 0; i + 1 < m; ++i) {
      circ.gates.push_back(CxGate{seq[i], seq[i + 1]});
    }
    circ.gates.push_back(RzGate{seq[m - 1], coeff * 2});
    for (std::size_t i = m - 1; i-- > 0;) {
      circ.gates.push_back(CxGate{seq[i], seq[i + 1]});
    }
  }
  return circ;
}

GateCircuit compile_circuit(const SpinPolynomial& p) {
  return compile_circuit(p, natural_order(p));
}

int cx_count(const GateCircuit& circ) {
  int count = 0;
  for (const auto& g : circ.gates) {
    if (std::holds_alternative<CxGate>(g)) ++count;
  }
  return count;
}

int rz_count(const GateCircuit& circ) {
  return static_cast<int>(circ.gates.size()) - cx_count(circ);
}

namespace {

bool touches(const Gate& g, int qubit) {
  if (const auto* cx = std::get_if<CxGate>(&g)) {
    return cx->control == qubit || cx->target == qubit;
  }
  return std::get<RzGate>(g).qubit == qubit;
}

}  // namespace

GateCircuit cancel_pass(const GateCircuit& circ) {
  GateCircuit out = circ;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.gates.size() && !changed; ++i) {
      const auto* cx = std::get_if<CxGate>(&out.gates[i]);
      if (!cx) continue;
      for (std::size_t j = i + 1; j < out.gates.size(); ++j) {
        const bool blocked = touches(out.gates[j], cx->control) || touches(out.gates[j], cx->target);
        if (!blocked) continue;
        const auto* other = std::get_if<CxGate>(&out.gates[j]);
        if (other && *other == *cx) {
          out.gates.erase(out.gates.begin() + j);
          out.gates.erase(out.gates.begin() + i);
          changed = true;
        }
        break;
      }
    }
  }
  return out;
}

void apply_circuit(const GateCircuit& circ, std::vector<std::complex<double>>& amplitudes,
                   double gamma) {
  const std::size_t dim = std::size_t{1} << circ.width;
  if (amplitudes.size() != dim) throw std::invalid_argument("statevector size mismatch");
  for (const auto& g : circ.gates) {
    if (const auto* cx = std::get_if<CxGate>(&g)) {
      const std::size_t cbit = std::size_t{1} << cx->control;
      const std::size_t tbit = std::size_t{1} << cx->target;
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cbit) && !(i & tbit)) std::swap(amplitudes[i], amplitudes[i | tbit]);
      }
    } else {
      const auto& rz = std::get<RzGate>(g);
      const double theta = to_double(rz.angle_coeff) * gamma;
      const std::complex<double> low = std::polar(1.0, -theta / 2);
      const std::complex<double> high = std::polar(1.0, +theta / 2);
      const std::size_t qbit = std::size_t{1} << rz.qubit;
      for (std::size_t i = 0; i < dim; ++i) {
        amplitudes[i] *= (i & qbit) ? high : low;
      }
    }
  }
  const std::complex<double> global = std::polar(1.0, -to_double(circ.global_phase) * gamma);
  for (auto& a : amplitudes) a *= global;
}

double verify_circuit(const GateCircuit& circ, const SpinPolynomial& p, double gamma) {
  if (circ.width > kVerifyWidthCap) {
    throw std::invalid_argument("circuit too wide for the diagonal verification oracle");
  }
  if (p.num_vars() != circ.width) {
    throw std::invalid_argument("polynomial and circuit widths differ");
  }
  const EnergyTable table = energy_table(p);
  const std::size_t dim = table.size();

  std::mt19937_64 rng(0x68f7c1a5u ^ static_cast<std::uint64_t>(circ.width));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<std::complex<double>> state(dim);
  double norm = 0.0;
  for (auto& a : state) {
    a = {unit(rng), unit(rng)};
    norm += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : state) a *= scale;

  std::vector<std::complex<double>> actual = state;
  apply_circuit(circ, actual, gamma);

  double max_dev = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const std::complex<double> expected = state[i] * std::polar(1.0, -gamma * table.value(i));
    max_dev = std::max(max_dev, std::abs(actual[i] - expected));
  }
  return max_dev;
}

}  // namespace hoq
