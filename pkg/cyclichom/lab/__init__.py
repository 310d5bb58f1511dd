from cyclichom.lab.checks import (
    verify_additivity,
    verify_complex_identities,
    verify_conjugation_invariance,
    verify_generators,
    verify_matrix_agreement,
    verify_minus_compat,
    verify_operator_tables,
    verify_parity,
    verify_s_compat,
    verify_scalar_separation,
)
from cyclichom.lab.corpus import CORPUS_EXPRESSIONS, corpus, standard_idempotents
from cyclichom.lab.reports import CheckReport, Summary
from cyclichom.lab.runner import build_jobs, run_jobs, run_suite

__all__ = [
    "CORPUS_EXPRESSIONS",
    "CheckReport",
    "Summary",
    "build_jobs",
    "corpus",
    "run_jobs",
    "run_suite",
    "standard_idempotents",
    "verify_additivity",
    "verify_complex_identities",
    "verify_conjugation_invariance",
    "verify_generators",
    "verify_matrix_agreement",
    "verify_minus_compat",
    "verify_operator_tables",
    "verify_parity",
    "verify_s_compat",
    "verify_scalar_separation",
]
