// Python bindings for the core operations: polynomial algebra, the three
// coloring encodings, gadget compilation and the QAOA simulation/search
// stack.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hoq/coloring.hpp"
#include "hoq/compiler.hpp"
#include "hoq/encoders.hpp"
#include "hoq/io.hpp"
#include "hoq/qaoa.hpp"
#include "hoq/search.hpp"

namespace py = pybind11;
using namespace hoq;

namespace {

std::pair<std::int64_t, std::int64_t> rational_pair(const Rational& r) {
  return {r.numerator(), r.denominator()};
}

Rational rational_from(py::handle value) {
  if (py::isinstance<py::int_>(value)) return Rational(value.cast<std::int64_t>());
  if (py::isinstance<py::str>(value)) return parse_rational(value.cast<std::string>());
  const auto pair = value.cast<std::pair<std::int64_t, std::int64_t>>();
  return Rational(pair.first, pair.second);
}

SpinAssignment assignment_from(const std::vector<int>& spins) {
  return SpinAssignment(spins);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Higher-order Ising encodings of graph coloring with QAOA simulation";

  py::class_<SpinPolynomial>(m, "SpinPolynomial")
      .def(py::init<int>(), py::arg("num_vars"))
      .def_property_readonly("num_vars", &SpinPolynomial::num_vars)
      .def_property_readonly("degree", &SpinPolynomial::degree)
      .def("term_count", &SpinPolynomial::term_count)
      .def("term_count_of_order", &SpinPolynomial::term_count_of_order, py::arg("order"))
      .def("add_term",
           [](SpinPolynomial& p, Term vars, py::handle coeff) {
             p.add_term(std::move(vars), rational_from(coeff));
           },
           py::arg("vars"), py::arg("coeff"))
      .def("coefficient",
           [](const SpinPolynomial& p, const Term& vars) {
             return rational_pair(p.coefficient(vars));
           },
           py::arg("vars"))
      .def("constant_term",
           [](const SpinPolynomial& p) { return rational_pair(p.constant_term()); })
      .def("terms",
           [](const SpinPolynomial& p) {
             std::vector<std::pair<Term, std::pair<std::int64_t, std::int64_t>>> out;
             for (const auto& [vars, coeff] : p.terms()) {
               out.emplace_back(vars, rational_pair(coeff));
             }
             return out;
           })
      .def("evaluate",
           [](const SpinPolynomial& p, const std::vector<int>& spins) {
             return rational_pair(p.evaluate(assignment_from(spins)));
           },
           py::arg("spins"))
      .def("__add__", [](const SpinPolynomial& a, const SpinPolynomial& b) { return a + b; })
      .def("__mul__", [](const SpinPolynomial& a, const SpinPolynomial& b) { return a * b; })
      .def("__eq__", [](const SpinPolynomial& a, const SpinPolynomial& b) { return a == b; })
      .def("to_json", [](const SpinPolynomial& p) { return p.to_json_string(); })
      .def_static("from_json", &SpinPolynomial::from_json_string, py::arg("text"));

  m.def("qubo_to_ising", &qubo_to_ising, py::arg("qubo"));
  m.def("ising_to_qubo", &ising_to_qubo, py::arg("ising"));
  m.def("substitute_pair",
        [](const SpinPolynomial& p, int i, int j, const SpinPolynomial& repl) {
          return substitute_pair(p, i, j, repl);
        },
        py::arg("poly"), py::arg("var_i"), py::arg("var_j"), py::arg("replacement"));

  py::class_<EnergyTable>(m, "EnergyTable")
      .def_property_readonly("num_vars", &EnergyTable::num_vars)
      .def("__len__", &EnergyTable::size)
      .def("value", &EnergyTable::value, py::arg("index"))
      .def("exact", [](const EnergyTable& t, std::size_t i) { return rational_pair(t.at(i)); },
           py::arg("index"))
      .def("min_energy", [](const EnergyTable& t) { return rational_pair(t.min_energy()); })
      .def("max_energy", [](const EnergyTable& t) { return rational_pair(t.max_energy()); })
      .def("ground_states", &EnergyTable::ground_states);

  m.def("energy_table", &energy_table, py::arg("poly"), py::arg("max_vars") = 24);

  py::class_<ColoringProblem>(m, "ColoringProblem")
      .def(py::init<int, std::vector<std::pair<int, int>>, int>(), py::arg("n"),
           py::arg("edges"), py::arg("colors"))
      .def_readonly("n", &ColoringProblem::n)
      .def_readonly("edges", &ColoringProblem::edges)
      .def_readonly("colors", &ColoringProblem::colors)
      .def("to_json", [](const ColoringProblem& p) { return p.to_json_string(); })
      .def_static("from_json", &ColoringProblem::from_json_string, py::arg("text"));

  m.def("four_corners", &four_corners);
  m.def("cycle_problem", &cycle_problem, py::arg("m"), py::arg("colors"));
  m.def("is_proper",
        [](const ColoringProblem& prob, const std::vector<int>& colors) {
          return is_proper(prob, Coloring(colors));
        },
        py::arg("problem"), py::arg("colors"));
  m.def("count_proper", &count_proper, py::arg("problem"),
        py::arg("cap") = std::uint64_t{1} << 24);

  py::class_<IsingProgram>(m, "IsingProgram")
      .def_readonly("poly", &IsingProgram::poly)
      .def_readonly("qubit_labels", &IsingProgram::qubit_labels)
      .def_property_readonly("scheme",
                             [](const IsingProgram& p) { return scheme_name(p.scheme); })
      .def_property_readonly("num_qubits", &IsingProgram::num_qubits)
      .def_property_readonly("lambda_weight",
                             [](const IsingProgram& p) -> py::object {
                               if (!p.lambda) return py::none();
                               return py::cast(rational_pair(*p.lambda));
                             })
      .def("qubit", &IsingProgram::qubit, py::arg("vertex"), py::arg("k"))
      .def("to_json", [](const IsingProgram& p) { return p.to_json_string(); });

  py::class_<ReductionCertificate>(m, "ReductionCertificate")
      .def_property_readonly("substitutions",
                             [](const ReductionCertificate& c) {
                               std::vector<std::tuple<int, int, int>> out;
                               for (const auto& s : c.substitutions) {
                                 out.emplace_back(s.var_i, s.var_j, s.aux);
                               }
                               return out;
                             })
      .def_property_readonly("lambda_weight",
                             [](const ReductionCertificate& c) { return rational_pair(c.lambda); })
      .def_readonly("safe_lambda_min", &ReductionCertificate::safe_lambda_min);

  m.def("encode_binary", &encode_binary, py::arg("problem"));
  m.def("encode_unary", &encode_unary, py::arg("problem"));
  m.def("illegal_state_penalty", &illegal_state_penalty, py::arg("colors"), py::arg("vertex"),
        py::arg("l"), py::arg("num_vars"));
  m.def("reduce_order",
        [](const IsingProgram& prog, py::handle lambda) {
          return reduce_order(prog, rational_from(lambda));
        },
        py::arg("program"), py::arg("lambda_weight") = 3);
  m.def("decode",
        [](const IsingProgram& prog, const std::vector<int>& spins) -> py::object {
          const auto col = decode(prog, assignment_from(spins));
          if (!col) return py::none();
          return py::cast(col->colors);
        },
        py::arg("program"), py::arg("spins"));
  m.def("predicted_cx_unary", &predicted_cx_unary, py::arg("n"), py::arg("e"), py::arg("c"));
  m.def("predicted_cx_binary_closed_form", &predicted_cx_binary_closed_form, py::arg("n"),
        py::arg("e"), py::arg("l"));
  m.def("predicted_cx_binary_binomial_sum", &predicted_cx_binary_binomial_sum, py::arg("n"),
        py::arg("e"), py::arg("l"));

  py::class_<GateCircuit>(m, "GateCircuit")
      .def_readonly("width", &GateCircuit::width)
      .def_property_readonly("cx_count", [](const GateCircuit& c) { return cx_count(c); })
      .def_property_readonly("rz_count", [](const GateCircuit& c) { return rz_count(c); })
      .def_property_readonly("gates",
                             [](const GateCircuit& c) {
                               py::list out;
                               for (const auto& g : c.gates) {
                                 if (const auto* cx = std::get_if<CxGate>(&g)) {
                                   out.append(py::make_tuple("cx", cx->control, cx->target));
                                 } else {
                                   const auto& rz = std::get<RzGate>(g);
                                   out.append(py::make_tuple("rz", rz.qubit,
                                                             rational_pair(rz.angle_coeff)));
                                 }
                               }
                               return out;
                             })
      .def("to_json", [](const GateCircuit& c) { return c.to_json_string(); })
      .def("to_qasm", &GateCircuit::to_qasm, py::arg("gamma"));

  m.def("compile_circuit",
        [](const SpinPolynomial& p, bool ordered) {
          return ordered ? compile_circuit(p, order_terms(p)) : compile_circuit(p);
        },
        py::arg("poly"), py::arg("ordered") = false);
  m.def("cancel_pass", &cancel_pass, py::arg("circuit"));
  m.def("verify_circuit", &verify_circuit, py::arg("circuit"), py::arg("poly"),
        py::arg("gamma"));

  py::class_<QaoaParams>(m, "QaoaParams")
      .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("betas"),
           py::arg("gammas"))
      .def_readonly("betas", &QaoaParams::betas)
      .def_readonly("gammas", &QaoaParams::gammas)
      .def_property_readonly("p", &QaoaParams::p);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("expectation", &RunResult::expectation)
      .def_readonly("relative_error", &RunResult::relative_error)
      .def_readonly("success_probability", &RunResult::success_probability)
      .def_readonly("evaluations", &RunResult::evaluations)
      .def_property_readonly("params", [](const RunResult& r) { return r.params; });

  m.def("run_qaoa",
        [](const EnergyTable& table, const std::vector<std::size_t>& ground,
           const std::vector<double>& betas, const std::vector<double>& gammas) {
          return run_qaoa(table, ground, QaoaParams(betas, gammas));
        },
        py::arg("table"), py::arg("ground_set"), py::arg("betas") = std::vector<double>{},
        py::arg("gammas") = std::vector<double>{});

  py::class_<GridResult>(m, "GridResult")
      .def_readonly("resolution", &GridResult::resolution)
      .def_readonly("relative_errors", &GridResult::relative_errors)
      .def_readonly("success_probabilities", &GridResult::success_probabilities)
      .def_readonly("best_beta", &GridResult::best_beta)
      .def_readonly("best_gamma", &GridResult::best_gamma)
      .def_readonly("best_relative_error", &GridResult::best_relative_error)
      .def_readonly("best_success_probability", &GridResult::best_success_probability);

  m.def("grid_search",
        [](const EnergyTable& table, const std::vector<std::size_t>& ground, int resolution,
           std::pair<double, double> beta_range, std::pair<double, double> gamma_range) {
          return grid_search(table, ground, resolution, beta_range, gamma_range);
        },
        py::arg("table"), py::arg("ground_set"), py::arg("resolution"),
        py::arg("beta_range") = std::pair<double, double>{0.0, kDefaultBetaMax},
        py::arg("gamma_range") = std::pair<double, double>{0.0, kDefaultGammaMax});

  py::class_<SampleRecord>(m, "SampleRecord")
      .def_readonly("scheme", &SampleRecord::scheme)
      .def_readonly("p", &SampleRecord::p)
      .def_readonly("seed", &SampleRecord::seed)
      .def_readonly("relative_error", &SampleRecord::relative_error)
      .def_readonly("success_probability", &SampleRecord::success_probability)
      .def_readonly("evaluations", &SampleRecord::evaluations)
      .def_readonly("filtered_out", &SampleRecord::filtered_out);

  m.def("optimize",
        [](const EnergyTable& table, const std::vector<std::size_t>& ground, int p,
           std::uint64_t seed, int budget, std::optional<std::vector<double>> start) {
          OptimizeOptions options;
          options.budget = budget;
          options.start = std::move(start);
          return optimize(table, ground, p, seed, options);
        },
        py::arg("table"), py::arg("ground_set"), py::arg("p"), py::arg("seed"),
        py::arg("budget") = 200, py::arg("start") = std::nullopt);

  m.def("iqr_filter", &iqr_filter, py::arg("samples"));

  m.def("experiment",
        [](const ColoringProblem& problem, int p_max, int samples, std::uint64_t seed,
           int budget) {
          ExperimentConfig config;
          config.p_max = p_max;
          config.samples_per_cell = samples;
          config.seed = seed;
          config.optimizer.budget = budget;
          return experiment(problem, config);
        },
        py::arg("problem"), py::arg("p_max") = 5, py::arg("samples") = 10, py::arg("seed") = 1,
        py::arg("budget") = 200);

  m.def("records_to_csv", &records_to_csv, py::arg("records"));
  m.def("grid_to_csv", &grid_to_csv, py::arg("grid"));
  m.def("grid_to_svg", &grid_to_svg, py::arg("grid"));
}
