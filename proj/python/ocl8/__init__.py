from ._core import (
    associator,
    cauchy_kernel,
    conj_poisson_kernel,
    mult_table,
    oct_conj,
    oct_inner,
    oct_mul,
    omega,
    poisson_kernel,
    run_scenario,
    scenario_names,
)

__all__ = [
    "associator",
    "cauchy_kernel",
    "conj_poisson_kernel",
    "mult_table",
    "oct_conj",
    "oct_inner",
    "oct_mul",
    "omega",
    "poisson_kernel",
    "run_scenario",
    "scenario_names",
]
