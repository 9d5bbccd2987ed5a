#include "hoq/spin_poly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hoq {

namespace {

// Sorts and cancels repeated indices in pairs (s*s = 1).
Term normalize_term(Term vars) {
  std::sort(vars.begin(), vars.end());
  Term out;
  out.reserve(vars.size());
  std::size_t i = 0;
  while (i < vars.size()) {
    if (i + 1 < vars.size() && vars[i] == vars[i + 1]) {
      i += 2;
    } else {
      out.push_back(vars[i]);
      ++i;
    }
  }
  return out;
}

// Symmetric difference of two sorted duplicate-free sets.
Term symmetric_difference(const Term& a, const Term& b) {
  Term out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

}  // namespace

SpinAssignment SpinAssignment::from_basis_index(std::uint64_t index, int num_vars) {
  SpinAssignment a;
  a.values.resize(num_vars);
  for (int j = 0; j < num_vars; ++j) {
    a.values[j] = ((index >> j) & 1u) ? -1 : +1;
  }
  return a;
}

SpinPolynomial::SpinPolynomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

SpinPolynomial SpinPolynomial::constant(int num_vars, const Rational& c) {
  SpinPolynomial p(num_vars);
  p.add_term({}, c);
  return p;
}

SpinPolynomial SpinPolynomial::variable(int num_vars, int index) {
  SpinPolynomial p(num_vars);
  p.add_term({index}, Rational(1));
  return p;
}

SpinPolynomial SpinPolynomial::monomial(int num_vars, Term vars, const Rational& coeff) {
  SpinPolynomial p(num_vars);
  p.add_term(std::move(vars), coeff);
  return p;
}

int SpinPolynomial::degree() const {
  std::size_t deg = 0;
  for (const auto& [vars, coeff] : terms_) deg = std::max(deg, vars.size());
  return static_cast<int>(deg);
}

std::size_t SpinPolynomial::term_count_of_order(int order) const {
  std::size_t count = 0;
  for (const auto& [vars, coeff] : terms_) {
    if (static_cast<int>(vars.size()) == order) ++count;
  }
  return count;
}

Rational SpinPolynomial::coefficient(const Term& vars) const {
  const auto it = terms_.find(vars);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SpinPolynomial::add_term(Term vars, const Rational& coeff) {
  if (coeff == Rational(0)) return;
  Term key = normalize_term(std::move(vars));
  if (!key.empty() && (key.front() < 0 || key.back() >= num_vars_)) {
    throw std::invalid_argument("variable index out of range");
  }
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == Rational(0)) terms_.erase(it);
  }
}

void SpinPolynomial::check_same_universe(const SpinPolynomial& rhs) const {
  if (num_vars_ != rhs.num_vars_) {
    throw std::invalid_argument("polynomials over different variable universes");
  }
}

SpinPolynomial SpinPolynomial::operator+(const SpinPolynomial& rhs) const {
  check_same_universe(rhs);
  SpinPolynomial out = *this;
  for (const auto& [vars, coeff] : rhs.terms_) out.add_term(vars, coeff);
  return out;
}

SpinPolynomial SpinPolynomial::operator-(const SpinPolynomial& rhs) const {
  check_same_universe(rhs);
  SpinPolynomial out = *this;
  for (const auto& [vars, coeff] : rhs.terms_) out.add_term(vars, -coeff);
  return out;
}

SpinPolynomial SpinPolynomial::operator*(const SpinPolynomial& rhs) const {
  check_same_universe(rhs);
  SpinPolynomial out(num_vars_);
  for (const auto& [lv, lc] : terms_) {
    for (const auto& [rv, rc] : rhs.terms_) {
      out.add_term(symmetric_difference(lv, rv), lc * rc);
    }
  }
  return out;
}

SpinPolynomial SpinPolynomial::operator*(const Rational& scalar) const {
  SpinPolynomial out(num_vars_);
  if (scalar == Rational(0)) return out;
  for (const auto& [vars, coeff] : terms_) out.terms_.emplace(vars, coeff * scalar);
  return out;
}

SpinPolynomial SpinPolynomial::operator-() const { return *this * Rational(-1); }

Rational SpinPolynomial::evaluate(const SpinAssignment& a) const {
  if (a.size() != num_vars_) {
    throw std::invalid_argument("assignment length does not match variable count");
  }
  for (int v : a.values) {
    if (v != 1 && v != -1) throw std::invalid_argument("spin values must be +1 or -1");
  }
  Rational total(0);
  for (const auto& [vars, coeff] : terms_) {
    int sign = 1;
    for (int v : vars) sign *= a.values[v];
    total += coeff * sign;
  }
  return total;
}

std::string SpinPolynomial::to_json_string(int indent) const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [vars, coeff] : terms_) {
    terms.push_back({{"vars", vars}, {"coeff", to_string(coeff)}});
  }
  nlohmann::json j{{"num_vars", num_vars_}, {"terms", terms}};
  return j.dump(indent);
}

SpinPolynomial SpinPolynomial::from_json_string(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  SpinPolynomial p(j.at("num_vars").get<int>());
  for (const auto& t : j.at("terms")) {
    p.add_term(t.at("vars").get<Term>(), parse_rational(t.at("coeff").get<std::string>()));
  }
  return p;
}

EnergyTable::EnergyTable(std::vector<std::int64_t> numerators, std::int64_t denominator,
                         int num_vars)
    : numerators_(std::move(numerators)), denominator_(denominator), num_vars_(num_vars) {
  if (denominator_ <= 0) throw std::invalid_argument("denominator must be positive");
  if (numerators_.size() != (std::size_t{1} << num_vars_)) {
    throw std::invalid_argument("table size must be 2^n");
  }
}

Rational EnergyTable::at(std::size_t index) const {
  return Rational(numerators_.at(index), denominator_);
}

double EnergyTable::value(std::size_t index) const {
  return static_cast<double>(numerators_[index]) / static_cast<double>(denominator_);
}

Rational EnergyTable::min_energy() const {
  return Rational(*std::min_element(numerators_.begin(), numerators_.end()), denominator_);
}

Rational EnergyTable::max_energy() const {
  return Rational(*std::max_element(numerators_.begin(), numerators_.end()), denominator_);
}

std::vector<std::size_t> EnergyTable::ground_states() const {
  const std::int64_t lowest = *std::min_element(numerators_.begin(), numerators_.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    if (numerators_[i] == lowest) out.push_back(i);
  }
  return out;
}

Rational EnergyTable::mean() const {
  Rational sum(0);
  for (std::int64_t n : numerators_) sum += Rational(n);
  return sum / (Rational(denominator_) * Rational(static_cast<std::int64_t>(size())));
}

EnergyTable energy_table(const SpinPolynomial& p, int max_vars) {
  const int n = p.num_vars();
  if (n > max_vars) {
    throw std::invalid_argument("variable count exceeds energy table cap");
  }
  // Scale every coefficient onto a common denominator so each entry is a
  // single int64 accumulation.
  std::int64_t denom = 1;
  for (const auto& [vars, coeff] : p.terms()) {
    denom = std::lcm(denom, coeff.denominator());
  }
  struct ScaledTerm {
    std::uint64_t mask;
    std::int64_t value;
  };
  std::vector<ScaledTerm> scaled;
  scaled.reserve(p.terms().size());
  for (const auto& [vars, coeff] : p.terms()) {
    std::uint64_t mask = 0;
    for (int v : vars) mask |= std::uint64_t{1} << v;
    scaled.push_back({mask, coeff.numerator() * (denom / coeff.denominator())});
  }

  std::vector<std::int64_t> energies(std::size_t{1} << n, 0);
  for (const auto& term : scaled) {
    for (std::size_t i = 0; i < energies.size(); ++i) {
      // Spin -1 on bit-set variables: the term sign is the parity of the
      // overlap with the mask.
      const int sign = (std::popcount(i & term.mask) & 1) ? -1 : 1;
      energies[i] += sign * term.value;
    }
  }
  return EnergyTable(std::move(energies), denom, n);
}

namespace {

// Expands prod_{i in vars} (a + b*s_i) into target with an extra coefficient.
void expand_affine_product(SpinPolynomial& target, const Term& vars, const Rational& a,
                           const Rational& b, const Rational& scale) {
  const std::size_t k = vars.size();
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << k); ++subset) {
    Term chosen;
    Rational c = scale;
    for (std::size_t j = 0; j < k; ++j) {
      if ((subset >> j) & 1u) {
        chosen.push_back(vars[j]);
        c *= b;
      } else {
        c *= a;
      }
    }
    target.add_term(std::move(chosen), c);
  }
}

}  // namespace

SpinPolynomial qubo_to_ising(const SpinPolynomial& q) {
  SpinPolynomial out(q.num_vars());
  for (const auto& [vars, coeff] : q.terms()) {
    // x_i = (1 - s_i)/2
    expand_affine_product(out, vars, Rational(1, 2), Rational(-1, 2), coeff);
  }
  return out;
}

SpinPolynomial ising_to_qubo(const SpinPolynomial& h) {
  SpinPolynomial out(h.num_vars());
  for (const auto& [vars, coeff] : h.terms()) {
    // s_i = 1 - 2 x_i; the expansion stays multilinear because x*x = x is
    // never produced from distinct variables.
    expand_affine_product(out, vars, Rational(1), Rational(-2), coeff);
  }
  return out;
}

SpinPolynomial substitute_pair(const SpinPolynomial& p, int var_i, int var_j,
                               const SpinPolynomial& repl) {
  if (var_i == var_j) throw std::invalid_argument("substitution needs two distinct variables");
  if (repl.degree() > 1) throw std::invalid_argument("replacement must have degree <= 1");
  SpinPolynomial out(p.num_vars());
  for (const auto& [vars, coeff] : p.terms()) {
    const bool has_i = std::binary_search(vars.begin(), vars.end(), var_i);
    const bool has_j = std::binary_search(vars.begin(), vars.end(), var_j);
    if (!has_i || !has_j) {
      out.add_term(vars, coeff);
      continue;
    }
    Term rest;
    rest.reserve(vars.size() - 2);
    for (int v : vars) {
      if (v != var_i && v != var_j) rest.push_back(v);
    }
    for (const auto& [rv, rc] : repl.terms()) {
      Term merged;
      std::set_symmetric_difference(rest.begin(), rest.end(), rv.begin(), rv.end(),
                                    std::back_inserter(merged));
      out.add_term(std::move(merged), coeff * rc);
    }
  }
  return out;
}

}  // namespace hoq
