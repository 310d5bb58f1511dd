"""Fan verification checks out over worker threads and merge their reports."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

import structlog

from cyclichom.algebra.constructions import ground_field
from cyclichom.core.config_loader import RunConfig
from cyclichom.core.enums import InvariantKind, Suite
from cyclichom.lab import checks
from cyclichom.lab.corpus import CORPUS_EXPRESSIONS, corpus, shear, standard_idempotents
from cyclichom.lab.reports import CheckReport, Summary, sort_reports

logger = structlog.get_logger(__name__)

OPERATOR_TABLE_DEPTH = 8
PARITY_DEPTH = 9
ADDITIVITY_DEGREE = 3
ADDITIVITY_WINDOW = 1
ADDITIVITY_TOWER = 2
MORITA_DEGREE = 3
CHERN_COMPAT_TOP = 3
MINUS_TOP = 2


@dataclass(frozen=True)
class Job:
    name: str
    inputs: Dict[str, object]
    check: Callable[[], CheckReport]

    def __call__(self) -> CheckReport:
        return checks.guarded(self.name, self.inputs, self.check)


def _operator_jobs(cfg: RunConfig, algebras) -> List[Job]:
    f = cfg.field
    jobs = [
        Job("operator_tables", {"n_max": OPERATOR_TABLE_DEPTH}, lambda: checks.verify_operator_tables(OPERATOR_TABLE_DEPTH, f)),
        Job("parity", {"m_max": PARITY_DEPTH}, lambda: checks.verify_parity(PARITY_DEPTH, f)),
    ]
    for algebra in algebras:
        jobs.append(
            Job(
                "complex_identities",
                {"algebra": algebra.name},
                lambda a=algebra: checks.verify_complex_identities(a, cfg.n_max, cfg.cap),
            )
        )
    return jobs


def _generator_jobs(cfg: RunConfig) -> List[Job]:
    f = cfg.field
    return [
        Job("generators", {"n_max": cfg.n_max}, lambda: checks.verify_generators(cfg.n_max, cfg.window, f)),
        Job("scalar_separation", {"n_max": cfg.n_max}, lambda: checks.verify_scalar_separation(cfg.n_max, field=f)),
    ]


def _additivity_jobs(cfg: RunConfig, algebras) -> List[Job]:
    degree = ADDITIVITY_DEGREE if cfg.degree is None else cfg.degree
    levels = {
        InvariantKind.HH: degree,
        InvariantKind.HC: degree,
        InvariantKind.HC_MINUS: ADDITIVITY_WINDOW,
        InvariantKind.TOWER_LIMIT: ADDITIVITY_TOWER,
    }
    jobs = []
    for algebra in algebras:
        for invariant, n in levels.items():
            jobs.append(
                Job(
                    "additivity",
                    {"algebra": algebra.name, "invariant": invariant.value, "n": n},
                    lambda a=algebra, i=invariant, n=n: checks.verify_additivity(a, i, n, cap=cfg.cap),
                )
            )
    return jobs


def _morita_jobs(cfg: RunConfig) -> List[Job]:
    degree = MORITA_DEGREE if cfg.degree is None else cfg.degree
    return [
        Job(
            "matrix_agreement",
            {"r": r, "n": degree},
            lambda r=r: checks.verify_matrix_agreement(r, degree, cfg.field, cap=cfg.cap),
        )
        for r in (1, 2)
    ]


def _chern_compat_jobs(cfg: RunConfig) -> List[Job]:
    top = min(CHERN_COMPAT_TOP, cfg.n_max)
    jobs = []
    for label, e in standard_idempotents(cfg.field):
        for n in range(1, top + 1):
            for m in range(n):
                jobs.append(
                    Job(
                        "s_compat",
                        {"idempotent": label, "n": n, "m": m},
                        lambda e=e, n=n, m=m, label=label: checks.verify_s_compat(e, n, m, label, cap=cfg.cap),
                    )
                )
        for m in range(min(MINUS_TOP, cfg.window) + 1):
            jobs.append(
                Job(
                    "minus_compat",
                    {"idempotent": label, "m": m, "window": cfg.window},
                    lambda e=e, m=m, label=label: checks.verify_minus_compat(e, m, cfg.window, label, cap=cfg.cap),
                )
            )
    k = ground_field(cfg.field)
    e11 = dict(standard_idempotents(cfg.field))["E11:2"]
    for n in range(top):
        for i, j in ((0, 1), (1, 0)):
            jobs.append(
                Job(
                    "conjugation_invariance",
                    {"idempotent": "E11:2", "n": n, "shear": f"1+E{i + 1}{j + 1}"},
                    lambda n=n, i=i, j=j: checks.verify_conjugation_invariance(
                        e11, shear(k, 2, i, j), n, "E11:2", cap=cfg.cap
                    ),
                )
            )
    return jobs


def build_jobs(suite: Suite, cfg: RunConfig, expressions: Optional[Sequence[str]] = None) -> List[Job]:
    algebras = corpus(cfg.field, tuple(expressions or CORPUS_EXPRESSIONS))
    wanted = {suite} if suite != Suite.ALL else set(Suite) - {Suite.ALL}
    jobs: List[Job] = []
    if Suite.OPERATORS in wanted:
        jobs += _operator_jobs(cfg, algebras)
    if Suite.GENERATORS in wanted:
        jobs += _generator_jobs(cfg)
    if Suite.ADDITIVITY in wanted:
        jobs += _additivity_jobs(cfg, algebras)
    if Suite.MORITA in wanted:
        jobs += _morita_jobs(cfg)
    if Suite.CHERN_COMPAT in wanted:
        jobs += _chern_compat_jobs(cfg)
    return jobs


def run_jobs(jobs: Sequence[Job], max_workers: int = 1) -> List[CheckReport]:
    """Run jobs concurrently; the result order depends only on the reports."""
    if max_workers <= 1:
        reports = [job() for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            reports = list(pool.map(lambda job: job(), jobs))
    return sort_reports(reports)


def run_suite(
    suite: Suite, cfg: RunConfig, expressions: Optional[Sequence[str]] = None
) -> tuple[List[CheckReport], Summary]:
    jobs = build_jobs(suite, cfg, expressions)
    logger.info("running suite", suite=suite.value, checks=len(jobs), workers=cfg.max_workers)
    reports = run_jobs(jobs, cfg.max_workers)
    summary = Summary.of(reports)
    logger.info("suite finished", suite=suite.value, summary=summary.line())
    return reports, summary
