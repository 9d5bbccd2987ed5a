#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hoq/rational.hpp"

namespace hoq {

/// Sorted, duplicate-free variable index set. The empty term is the constant.
using Term = std::vector<int>;

/// An assignment of +1/-1 to every spin variable.
struct SpinAssignment {
  std::vector<int> values;

  SpinAssignment() = default;
  explicit SpinAssignment(std::vector<int> v) : values(std::move(v)) {}

  /// Assignment encoded by a basis index: bit j (LSB = variable 0) clear
  /// means spin +1, set means spin -1.
  static SpinAssignment from_basis_index(std::uint64_t index, int num_vars);

  int size() const { return static_cast<int>(values.size()); }
};

/// Exact multilinear polynomial over spin variables s in {+1,-1}.
///
/// Since s*s = 1, every monomial is a product of distinct variables; terms
/// map a sorted index set to a nonzero rational coefficient. Immutable in
/// spirit: arithmetic returns new polynomials.
class SpinPolynomial {
 public:
  explicit SpinPolynomial(int num_vars);

  static SpinPolynomial constant(int num_vars, const Rational& c);
  /// The single variable s_index.
  static SpinPolynomial variable(int num_vars, int index);
  static SpinPolynomial monomial(int num_vars, Term vars, const Rational& coeff);

  int num_vars() const { return num_vars_; }
  /// Max cardinality over stored index sets; 0 for constant-only or zero.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Terms of a given order (non-constant unless order == 0).
  std::size_t term_count_of_order(int order) const;

  const std::map<Term, Rational>& terms() const { return terms_; }
  Rational coefficient(const Term& vars) const;
  Rational constant_term() const { return coefficient({}); }

  /// Adds coeff * product(vars). vars may be unsorted or contain repeats;
  /// repeats annihilate in pairs (s*s = 1). Zero results are erased.
  void add_term(Term vars, const Rational& coeff);

  SpinPolynomial operator+(const SpinPolynomial& rhs) const;
  SpinPolynomial operator-(const SpinPolynomial& rhs) const;
  SpinPolynomial operator*(const SpinPolynomial& rhs) const;
  SpinPolynomial operator*(const Rational& scalar) const;
  SpinPolynomial operator-() const;
  bool operator==(const SpinPolynomial& rhs) const = default;

  Rational evaluate(const SpinAssignment& a) const;

  std::string to_json_string(int indent = -1) const;
  static SpinPolynomial from_json_string(const std::string& text);

 private:
  void check_same_universe(const SpinPolynomial& rhs) const;

  int num_vars_ = 0;
  std::map<Term, Rational> terms_;
};

/// Diagonal of the problem Hamiltonian: one exact energy per basis state,
/// stored as int64 numerators over a common denominator (8 bytes per entry).
class EnergyTable {
 public:
  EnergyTable(std::vector<std::int64_t> numerators, std::int64_t denominator, int num_vars);

  int num_vars() const { return num_vars_; }
  std::size_t size() const { return numerators_.size(); }

  Rational at(std::size_t index) const;
  double value(std::size_t index) const;

  Rational min_energy() const;
  Rational max_energy() const;
  /// All basis indices attaining the exact minimum.
  std::vector<std::size_t> ground_states() const;
  /// Exact mean over the hypercube (equals the constant coefficient).
  Rational mean() const;

  const std::vector<std::int64_t>& numerators() const { return numerators_; }
  std::int64_t denominator() const { return denominator_; }

 private:
  std::vector<std::int64_t> numerators_;
  std::int64_t denominator_ = 1;
  int num_vars_ = 0;
};

/// Tabulates all 2^n energies under the basis-index convention above.
EnergyTable energy_table(const SpinPolynomial& p, int max_vars = 24);

/// Reinterprets p as a QUBO over x in {0,1} and substitutes x = (1-s)/2.
SpinPolynomial qubo_to_ising(const SpinPolynomial& q);
/// Inverse change of variable, s = 1 - 2x.
SpinPolynomial ising_to_qubo(const SpinPolynomial& h);

/// Replaces the product s_i*s_j by repl (degree <= 1) in every term
/// containing both variables, re-expanding multilinearly.
SpinPolynomial substitute_pair(const SpinPolynomial& p, int var_i, int var_j,
                               const SpinPolynomial& repl);

}  // namespace hoq
