"""Higher-order Ising encodings of graph coloring with QAOA simulation."""

from ._core import (
    ColoringProblem,
    EnergyTable,
    GateCircuit,
    GridResult,
    IsingProgram,
    QaoaParams,
    ReductionCertificate,
    RunResult,
    SampleRecord,
    SpinPolynomial,
    cancel_pass,
    compile_circuit,
    count_proper,
    cycle_problem,
    decode,
    encode_binary,
    encode_unary,
    energy_table,
    experiment,
    four_corners,
    grid_search,
    grid_to_csv,
    grid_to_svg,
    illegal_state_penalty,
    iqr_filter,
    is_proper,
    ising_to_qubo,
    optimize,
    predicted_cx_binary_binomial_sum,
    predicted_cx_binary_closed_form,
    predicted_cx_unary,
    qubo_to_ising,
    records_to_csv,
    reduce_order,
    run_qaoa,
    substitute_pair,
    verify_circuit,
)

__all__ = [
    "ColoringProblem",
    "EnergyTable",
    "GateCircuit",
    "GridResult",
    "IsingProgram",
    "QaoaParams",
    "ReductionCertificate",
    "RunResult",
    "SampleRecord",
    "SpinPolynomial",
    "cancel_pass",
    "compile_circuit",
    "count_proper",
    "cycle_problem",
    "decode",
    "encode_binary",
    "encode_unary",
    "energy_table",
    "experiment",
    "four_corners",
    "grid_search",
    "grid_to_csv",
    "grid_to_svg",
    "illegal_state_penalty",
    "iqr_filter",
    "is_proper",
    "ising_to_qubo",
    "optimize",
    "predicted_cx_binary_binomial_sum",
    "predicted_cx_binary_closed_form",
    "predicted_cx_unary",
    "qubo_to_ising",
    "records_to_csv",
    "reduce_order",
    "run_qaoa",
    "substitute_pair",
    "verify_circuit",
]
