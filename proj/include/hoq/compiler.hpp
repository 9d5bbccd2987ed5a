#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "hoq/spin_poly.hpp"

namespace hoq {

struct CxGate {
  int control = 0;
  int target = 0;
  bool operator==(const CxGate&) const = default;
};

/// Z rotation whose angle is angle_coeff * gamma at simulation time.
struct RzGate {
  int qubit = 0;
  Rational angle_coeff{0};
  bool operator==(const RzGate&) const = default;
};

using Gate = std::variant<CxGate, RzGate>;

/// Ordered CX/Rz sequence realizing exp(-i*gamma*H) for a diagonal H, up to
/// the recorded global phase (gamma multiplier from the constant term).
struct GateCircuit {
  int width = 0;
  std::vector<Gate> gates;
  Rational global_phase{0};

  std::string to_json_string(int indent = -1) const;
  /// One gate per line: `cx q[a],q[b]` / `rz(theta) q[a]` with angles bound
  /// at the given gamma.
  std::string to_qasm(double gamma) const;
};

/// A term together with the qubit visiting order of its CX ladder.
struct OrderedTerm {
  Term term;                   // sorted variable set
  std::vector<int> sequence;   // permutation of term
};

/// Terms in map order, each ladder visiting qubits in ascending order.
std::vector<OrderedTerm> natural_order(const SpinPolynomial& p);

/// Deterministic greedy ordering that groups terms sharing a variable pair
/// and fronts that pair in both ladders, so the mirrored ladders of
/// consecutive terms cancel in cancel_pass.
std::vector<OrderedTerm> order_terms(const SpinPolynomial& p);

/// Lowers each order-m term (m >= 2) to a descending CX ladder, one Rz on
/// the ladder end, and the mirrored ladder: exactly 2(m-1) CX per term.
/// Order-1 terms emit a single Rz; the constant becomes global phase.
GateCircuit compile_circuit(const SpinPolynomial& p, const std::vector<OrderedTerm>& order);
GateCircuit compile_circuit(const SpinPolynomial& p);

int cx_count(const GateCircuit& circ);
int rz_count(const GateCircuit& circ);

/// Peephole pass: repeatedly removes identical adjacent CX pairs, looking
/// through gates on disjoint qubits. Unitarily equivalent output; idempotent.
GateCircuit cancel_pass(const GateCircuit& circ);

/// Applies the circuit (including global phase) to a statevector in place.
/// Amplitude index convention matches EnergyTable: bit q set <-> spin -1.
void apply_circuit(const GateCircuit& circ, std::vector<std::complex<double>>& amplitudes,
                   double gamma);

/// Max amplitude deviation between the circuit acting on a seeded random
/// state and elementwise multiplication by exp(-i*gamma*energy). Widths
/// beyond the diagonal-oracle cap (16 qubits) are rejected.
double verify_circuit(const GateCircuit& circ, const SpinPolynomial& p, double gamma);

}  // namespace hoq
