#include <doctest.h>

#include <bit>
#include <stdexcept>
#include <random>
#include <set>

#include "hoq/encoders.hpp"
#include "oracles.hpp"

using namespace hoq;

TEST_CASE("binary four corners reproduces the quartic Hamiltonian") {
  const IsingProgram prog = encode_binary(four_corners());
  CHECK(prog.num_qubits() == 8);
  CHECK(prog.poly.degree() == 4);
  CHECK(prog.poly.constant_term() == Rational(4));
  CHECK(prog.poly.term_count_of_order(4) == 4);
  CHECK(prog.poly.term_count_of_order(2) == 8);
  CHECK(prog.poly.term_count() == 13);  // 12 non-constant terms + constant

  // Exact agreement with the independent direct-formula oracle.
  const EnergyTable table = energy_table(prog.poly);
  for (std::uint64_t idx = 0; idx < 256; ++idx) {
    CHECK(table.at(idx) == Rational(oracles::four_corners_binary_energy(idx)));
  }
  CHECK(table.min_energy() == Rational(0));
  CHECK(table.max_energy() == Rational(16));
  CHECK(table.ground_states().size() == 84);
}

TEST_CASE("published valid coloring has zero energy") {
  const IsingProgram prog = encode_binary(four_corners());
  const SpinAssignment valid({1, 1, -1, 1, 1, -1, -1, -1});
  CHECK(prog.poly.evaluate(valid) == Rational(0));
  const SpinAssignment all_plus(std::vector<int>(8, 1));
  CHECK(prog.poly.evaluate(all_plus) == Rational(16));
}

TEST_CASE("binary ground states decode onto proper colorings bijectively") {
  const ColoringProblem problem = four_corners();
  const IsingProgram prog = encode_binary(problem);
  const EnergyTable table = energy_table(prog.poly);
  std::set<std::vector<int>> decoded;
  for (std::size_t idx : table.ground_states()) {
    const auto col = decode(prog, SpinAssignment::from_basis_index(idx, 8));
    REQUIRE(col.has_value());
    CHECK(is_proper(problem, *col));
    CHECK(decoded.insert(col->colors).second);  // no two ground states collide
  }
  CHECK(decoded.size() == count_proper(problem));
}

TEST_CASE("two-vertex path with two colors") {
  const IsingProgram prog = encode_binary(ColoringProblem(2, {{0, 1}}, 2));
  CHECK(prog.num_qubits() == 2);
  CHECK(prog.poly.constant_term() == Rational(1));
  CHECK(prog.poly.coefficient({0, 1}) == Rational(1));
  CHECK(prog.poly.term_count() == 2);
  const EnergyTable table = energy_table(prog.poly);
  CHECK(table.min_energy() == Rational(0));
  CHECK(table.ground_states() == std::vector<std::size_t>{1, 2});
}

TEST_CASE("illegal-state penalties cover exactly the out-of-range colors") {
  SUBCASE("power of two palettes need no penalty") {
    CHECK(illegal_state_penalty(4, 0, 2, 2).is_zero());
  }

  SUBCASE("three colors penalize only the fourth state") {
    const SpinPolynomial penalty = illegal_state_penalty(3, 0, 2, 2);
    // (1 - sigma^0)(1 - sigma^1) on the node's two bits.
    CHECK(penalty.constant_term() == Rational(1));
    CHECK(penalty.coefficient({0}) == Rational(-1));
    CHECK(penalty.coefficient({1}) == Rational(-1));
    CHECK(penalty.coefficient({0, 1}) == Rational(1));
  }

  SUBCASE("five colors produce the two tabulated blocks") {
    const SpinPolynomial penalty = illegal_state_penalty(5, 0, 3, 3);
    // (1 - sigma^0)(1 - sigma^1) + (1 - sigma^0)(1 + sigma^1)(1 - sigma^2).
    const EnergyTable table = energy_table(penalty);
    for (std::uint64_t idx = 0; idx < 8; ++idx) {
      // Decode the color MSB-first: qubit 0 is the top bit.
      int color = 0;
      for (int k = 0; k < 3; ++k) color = (color << 1) | ((idx >> k) & 1);
      if (color >= 5) {
        CHECK(table.at(idx) > Rational(0));
      } else {
        CHECK(table.at(idx) == Rational(0));
      }
    }
    CHECK(penalty.term_count_of_order(2) > 0);
  }

  SUBCASE("block count equals popcount(2^l - c) for every palette") {
    for (int c = 2; c <= 32; ++c) {
      int l = 0;
      while ((1 << l) < c) ++l;
      l = std::max(l, 1);
      const SpinPolynomial penalty = illegal_state_penalty(c, 0, l, l);
      const EnergyTable table = energy_table(penalty);
      int positive = 0;
      for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << l); ++idx) {
        int color = 0;
        for (int k = 0; k < l; ++k) color = (color << 1) | ((idx >> k) & 1);
        if (color < c) {
          CHECK(table.at(idx) == Rational(0));
        } else {
          CHECK(table.at(idx) >= Rational(2));
          ++positive;
        }
      }
      CHECK(positive == (1 << l) - c);
      // Each block fixes the top bits of its target: the constant term counts
      // one unit per block.
      CHECK(penalty.constant_term() ==
            Rational(std::popcount(unsigned((1 << l) - c)) == 0
                         ? 0
                         : std::popcount(unsigned((1 << l) - c))));
    }
  }

  SUBCASE("validation") {
    CHECK_THROWS_AS(illegal_state_penalty(5, 0, 2, 2), std::invalid_argument);
  }
}

TEST_CASE("binary encoding handles non-power-of-two palettes") {
  const ColoringProblem problem(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 3);
  const IsingProgram prog = encode_binary(problem);
  CHECK(prog.num_qubits() == 8);
  const EnergyTable table = energy_table(prog.poly);
  CHECK(table.min_energy() == Rational(0));
  CHECK(table.ground_states().size() == count_proper(problem));  // 18 for C4 at k=3
  for (std::size_t idx : table.ground_states()) {
    const auto col = decode(prog, SpinAssignment::from_basis_index(idx, 8));
    REQUIRE(col.has_value());
    CHECK(is_proper(problem, *col));
  }
}

TEST_CASE("uncolorable problems have strictly positive minimum") {
  const IsingProgram prog = encode_binary(cycle_problem(3, 2));
  CHECK(energy_table(prog.poly).min_energy() > Rational(0));
  const IsingProgram unary_prog = encode_unary(cycle_problem(3, 2));
  CHECK(energy_table(unary_prog.poly).min_energy() > Rational(0));
}

TEST_CASE("unary four corners matches the one-hot Hamiltonian") {
  const IsingProgram prog = encode_unary(four_corners());
  CHECK(prog.num_qubits() == 16);
  CHECK(prog.poly.degree() == 2);
  CHECK(prog.poly.term_count_of_order(2) == 40);

  const EnergyTable table = energy_table(prog.poly);
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << 16); ++idx) {
    CHECK(table.numerators()[idx] == oracles::four_corners_unary_energy(idx));
  }
  CHECK(table.min_energy() == Rational(0));
  CHECK(table.ground_states().size() == 84);
}

TEST_CASE("single unary node enforces 1-of-2") {
  const IsingProgram prog = encode_unary(ColoringProblem(1, {}, 2));
  const EnergyTable table = energy_table(prog.poly);
  CHECK(table.min_energy() == Rational(0));
  // Exactly the two one-hot states: indices 01 and 10.
  CHECK(table.ground_states() == std::vector<std::size_t>{1, 2});
}

TEST_CASE("order reduction reproduces the quadratic form") {
  const auto [prog, cert] = reduce_order(encode_binary(four_corners()), Rational(3));
  CHECK(prog.scheme == Scheme::reduced);
  CHECK(prog.num_qubits() == 12);
  CHECK(prog.poly.degree() == 2);
  CHECK(prog.poly.term_count_of_order(2) == 48);
  CHECK(cert.substitutions.size() == 4);
  // Intra-node pairs, lowest-index first.
  CHECK(cert.substitutions[0].var_i == 0);
  CHECK(cert.substitutions[0].var_j == 1);
  CHECK(cert.substitutions[0].aux == 8);
  CHECK(cert.substitutions[3].var_i == 6);
  CHECK(cert.substitutions[3].var_j == 7);
  CHECK(cert.substitutions[3].aux == 11);

  const EnergyTable table = energy_table(prog.poly);
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << 12); ++idx) {
    const std::int64_t expected = oracles::four_corners_reduced_objective(idx) +
                                  3 * oracles::four_corners_reduced_constraint(idx);
    CHECK(table.numerators()[idx] == expected);
  }
  CHECK(table.min_energy() == Rational(0));
  CHECK(table.ground_states().size() == 84);
  REQUIRE(cert.safe_lambda_min.has_value());
  CHECK(*cert.safe_lambda_min == 3);
}

TEST_CASE("reduction soundness against the projected quartic energy") {
  const auto [prog, cert] = reduce_order(encode_binary(four_corners()), Rational(3));
  const EnergyTable table = energy_table(prog.poly);
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << 12); ++idx) {
    const std::int64_t original = oracles::four_corners_binary_energy(idx & 0xff);
    const std::int64_t reduced = table.numerators()[idx];
    CHECK(reduced >= original);
    if (oracles::reduced_auxiliaries_consistent(idx)) {
      CHECK(reduced == original);
    } else {
      CHECK(reduced > original);
    }
  }
}

TEST_CASE("already-quadratic input passes through reduction") {
  const IsingProgram prog = encode_unary(four_corners());
  const auto [same, cert] = reduce_order(prog, Rational(3));
  CHECK(same.poly == prog.poly);
  CHECK(cert.substitutions.empty());
}

TEST_CASE("reduction rejects non-positive weights") {
  CHECK_THROWS_AS(reduce_order(encode_binary(four_corners()), Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("decode reads colors MSB-first and flags invalid states") {
  const IsingProgram binary = encode_binary(four_corners());
  const auto col = decode(binary, SpinAssignment({1, 1, -1, 1, 1, -1, -1, -1}));
  REQUIRE(col.has_value());
  CHECK(col->colors == std::vector<int>{0, 2, 1, 3});

  const IsingProgram ternary = encode_binary(ColoringProblem(1, {}, 3));
  CHECK_FALSE(decode(ternary, SpinAssignment({-1, -1})).has_value());  // color 3 >= c

  const IsingProgram unary = encode_unary(ColoringProblem(1, {}, 4));
  const auto one_hot = decode(unary, SpinAssignment({-1, 1, 1, 1}));
  REQUIRE(one_hot.has_value());
  CHECK(one_hot->colors == std::vector<int>{0});
  CHECK_FALSE(decode(unary, SpinAssignment({-1, -1, 1, 1})).has_value());
  CHECK_FALSE(decode(unary, SpinAssignment({1, 1, 1, 1})).has_value());

  CHECK_THROWS_AS(decode(unary, SpinAssignment({1, 1})), std::invalid_argument);
}

TEST_CASE("small random encodings are valid exactly when colorable") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 12; ++round) {
    const int n = 2 + int(rng() % 3);
    const int c = 2 + int(rng() % 3);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2) edges.emplace_back(u, v);
      }
    }
    const ColoringProblem problem(n, edges, c);
    const bool colorable = count_proper(problem) > 0;
    for (const bool unary : {false, true}) {
      const IsingProgram prog = unary ? encode_unary(problem) : encode_binary(problem);
      const EnergyTable table = energy_table(prog.poly);
      CHECK((table.min_energy() == Rational(0)) == colorable);
      if (!colorable) continue;
      std::set<std::vector<int>> decoded;
      for (std::size_t idx : table.ground_states()) {
        const auto col = decode(prog, SpinAssignment::from_basis_index(idx, prog.num_qubits()));
        REQUIRE(col.has_value());
        CHECK(is_proper(problem, *col));
        CHECK(decoded.insert(col->colors).second);
      }
      CHECK(decoded.size() == count_proper(problem));
    }
  }
}

TEST_CASE("encoders reject degenerate palettes") {
  CHECK_THROWS_AS(encode_binary(ColoringProblem(2, {}, 1)), std::invalid_argument);
  CHECK_THROWS_AS(encode_unary(ColoringProblem(2, {}, 1)), std::invalid_argument);
}

TEST_CASE("gate-count formulas") {
  CHECK(predicted_cx_unary(4, 4, 4) == 80);
  CHECK(predicted_cx_unary(1, 0, 2) == 2);
  CHECK(predicted_cx_unary(4, 4, 3) == 60);

  CHECK(predicted_cx_binary_closed_form(4, 4, 2) == 16);
  CHECK(predicted_cx_binary_closed_form(4, 4, 3) == 120);
  CHECK(predicted_cx_binary_closed_form(7, 9, 1) == 0);

  // The binomial-sum and closed forms agree everywhere they are defined.
  std::mt19937_64 rng(29);
  for (std::int64_t l = 2; l <= 6; ++l) {
    for (int round = 0; round < 20; ++round) {
      const std::int64_t n = std::int64_t(rng() % 50);
      const std::int64_t e = std::int64_t(rng() % 100);
      CHECK(predicted_cx_binary_binomial_sum(n, e, l) ==
            predicted_cx_binary_closed_form(n, e, l));
    }
  }
}

TEST_CASE("program json carries scheme, var_map and polynomial") {
  const auto [prog, cert] = reduce_order(encode_binary(four_corners()), Rational(3));
  const std::string j = prog.to_json_string();
  CHECK(j.find("\"scheme\":\"reduced\"") != std::string::npos);
  CHECK(j.find("\"aux0\":8") != std::string::npos);
  CHECK(j.find("\"lambda\":\"3/1\"") != std::string::npos);
  CHECK(j.find("\"num_vars\":12") != std::string::npos);
}
