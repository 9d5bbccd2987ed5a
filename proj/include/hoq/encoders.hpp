#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hoq/coloring.hpp"
#include "hoq/spin_poly.hpp"

namespace hoq {

enum class Scheme { binary, reduced, unary };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

/// A coloring Hamiltonian over spin variables plus the qubit labeling needed
/// to decode measurement outcomes back into colorings.
///
/// Qubit layout:
///   binary/reduced: qubit(v, k) = v*l + k, k = 0 the most significant bit of
///   the color index (spin +1 <-> bit 0). Reduced appends one auxiliary qubit
///   per eliminated pair after the n*l originals.
///   unary: qubit(v, k) = v*c + k, k the color index (spin -1 <-> chosen).
struct IsingProgram {
  SpinPolynomial poly{0};
  Scheme scheme = Scheme::binary;
  ColoringProblem problem;
  /// l for binary/reduced, c for unary.
  int bits_per_vertex = 0;
  /// One label per qubit, e.g. "v0.b1", "v2.c3", "aux0".
  std::vector<std::string> qubit_labels;
  /// Lagrange weight on the reduction constraints (reduced scheme only).
  std::optional<Rational> lambda;

  int num_qubits() const { return poly.num_vars(); }
  int qubit(int vertex, int k) const { return vertex * bits_per_vertex + k; }

  std::string to_json_string(int indent = -1) const;
};

/// One pair elimination: product var_i*var_j rewritten via auxiliary aux.
struct ReductionCertificate {
  struct Substitution {
    int var_i = 0;
    int var_j = 0;
    int aux = 0;
  };
  std::vector<Substitution> substitutions;
  Rational lambda{1};
  /// Exact minimal integer weight preserving the ground states, found by
  /// brute force when the reduced space is small enough to sweep.
  std::optional<std::int64_t> safe_lambda_min;
};

/// Higher-order binary encoding: one spin per color bit, a product penalty
/// per edge, and multi-state penalties on each node when the palette size is
/// not a power of two. Ground energy 0 exactly at proper colorings.
IsingProgram encode_binary(const ColoringProblem& prob);

/// Penalty excluding color indices >= c on one node, built from multi-state
/// penalties that each cover a power-of-two block of illegal states. The
/// number of blocks equals popcount(2^l - c).
SpinPolynomial illegal_state_penalty(int c, int vertex, int l, int num_vars);

/// One-hot encoding: one spin per (vertex, color), a 1-of-c constraint per
/// node and a per-color clash penalty per edge. Always quadratic.
IsingProgram encode_unary(const ColoringProblem& prob);

/// Iteratively rewrites variable pairs with auxiliaries until the polynomial
/// is quadratic, adding weighted equality constraints. The default policy
/// picks the pair occurring in the most terms of degree >= 3 (ties: lowest
/// indices). An already-quadratic input is returned unchanged.
std::pair<IsingProgram, ReductionCertificate> reduce_order(const IsingProgram& prog,
                                                           const Rational& lambda);

/// Spin assignment -> coloring; nullopt marks an undecodable state (a color
/// index >= c, or a unary block that is not exactly one-hot).
std::optional<Coloring> decode(const IsingProgram& prog, const SpinAssignment& a);

/// Exact two-qubit-gate count of the unary encoding: 2ce + nc(c-1).
std::int64_t predicted_cx_unary(std::int64_t n, std::int64_t e, std::int64_t c);

/// Closed-form binary-encoding gate estimate (2^l - 2)[(2e+n)l - 2(e+n)].
/// Kept as a faithful transcription: it disagrees with the compiler's direct
/// per-term count (e.g. 16 vs 40 on the four corners instance) and is
/// reported side by side, never asserted against compiled circuits.
std::int64_t predicted_cx_binary_closed_form(std::int64_t n, std::int64_t e, std::int64_t l);

/// Binomial-sum form of the same estimate, 2e*sum C(l,k)(2k-1) +
/// 2n*sum C(l,k)(k-1) with k running to l-1. Equals the closed form.
std::int64_t predicted_cx_binary_binomial_sum(std::int64_t n, std::int64_t e, std::int64_t l);

}  // namespace hoq
