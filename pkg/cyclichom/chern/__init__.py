from cyclichom.chern.character import (
    ChernClass,
    chern,
    chern_k0,
    chern_minus,
    class_equal,
    idempotent_cycle,
    project_minus,
    trace_chain,
    trace_of_power,
)
from cyclichom.chern.generators import psi, psi_minus, u_generator, u_generator_minus, y_coefficient, z_coefficient
from cyclichom.chern.idempotents import Idempotent, K0Witness, load_idempotent, parse_short_form, witness

__all__ = [
    "ChernClass",
    "Idempotent",
    "K0Witness",
    "chern",
    "chern_k0",
    "chern_minus",
    "class_equal",
    "idempotent_cycle",
    "load_idempotent",
    "parse_short_form",
    "project_minus",
    "psi",
    "psi_minus",
    "trace_chain",
    "trace_of_power",
    "u_generator",
    "u_generator_minus",
    "witness",
    "y_coefficient",
    "z_coefficient",
]
