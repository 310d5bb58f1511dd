"""Executable checks of the operator tables, generators, additivity, Morita
invariance and the compatibility of Chern characters with S and HC_0^-."""

from __future__ import annotations

from typing import Callable, Dict, List, Optional, Sequence, Tuple

import structlog

from cyclichom.algebra.constructions import ground_field, matrix_algebra, upper_triangular_algebra
from cyclichom.algebra.matrices import MatrixOverA
from cyclichom.algebra.structure import Algebra
from cyclichom.chern.character import (
    chern_chain,
    chern_minus_chain,
    class_equal,
    idempotent_cycle,
    project_minus,
    trace_chain,
)
from cyclichom.chern.generators import psi, psi_minus, u_generator, u_generator_minus
from cyclichom.chern.idempotents import Idempotent
from cyclichom.core.config import settings
from cyclichom.core.enums import InvariantKind, Verdict
from cyclichom.core.errors import CyclicHomError, GeneratorError, GuardrailExceededError, InputFormatError
from cyclichom.cyclic.bicomplex import BicomplexLayout, boundary, check_guardrail, periodicity_shift, total_differential
from cyclichom.cyclic.homology import hc, hc_minus0, hc_per0, hh
from cyclichom.cyclic.operators import bar_bprime, hochschild_b, norm_operator, one_minus_t
from cyclichom.lab.reports import UNIQUENESS_NOTE, CheckReport, verdict_of
from cyclichom.linalg.elimination import rank
from cyclichom.linalg.field import FieldSpec, Scalar
from cyclichom.linalg.matrices import SparseMatrix

logger = structlog.get_logger(__name__)

SCALAR_SAMPLES: Tuple[object, ...] = (0, 1, -1, 2, 3, "1/2", "-7/3")


def _field(field: Optional[FieldSpec]) -> FieldSpec:
    return field or FieldSpec.parse(settings.field)


def _report(
    name: str,
    inputs: Dict,
    ok: bool,
    witnesses: Dict,
    notes: Sequence[str] = (),
    approximate: bool = False,
    skipped: bool = False,
) -> CheckReport:
    report = CheckReport(
        name=name,
        inputs=inputs,
        verdict=verdict_of(ok, approximate, skipped),
        witnesses=witnesses,
        notes=tuple(notes),
    )
    logger.info("check finished", check=name, verdict=report.verdict.value)
    return report


def _fmt(field: FieldSpec, x: Scalar) -> str:
    return field.format(x)


# operators


def verify_operator_tables(n_max: int = 8, field: Optional[FieldSpec] = None) -> CheckReport:
    """b, -b', 1-t and N on k^⊗(n+1) against their parity tables."""
    field = _field(field)
    k = ground_field(field)
    one = SparseMatrix.identity

    def expected(name: str, n: int) -> SparseMatrix:
        odd = n % 2 == 1
        if name == "b":
            return one(field, 1, 0 if odd else 1)
        if name == "-b'":
            return one(field, 1, -1 if odd else 0)
        if name == "1-t":
            return one(field, 1, 2 if odd else 0)
        return one(field, 1, 0 if odd else n + 1)

    failures: List[str] = []
    for n in range(n_max + 1):
        actual = {"1-t": one_minus_t(k, n), "N": norm_operator(k, n)}
        if n >= 1:
            actual["b"] = hochschild_b(k, n)
            actual["-b'"] = bar_bprime(k, n).scale(-1)
        for name, m in actual.items():
            if m != expected(name, n):
                failures.append(f"{name} at n={n}")
    return _report(
        "operator_tables",
        {"field": str(field), "n_max": n_max},
        not failures,
        {"failures": failures},
    )


def verify_parity(m_max: int = 9, field: Optional[FieldSpec] = None) -> CheckReport:
    """Over k, d: Tot_{m+1} -> Tot_m vanishes for even m and is onto for odd m."""
    field = _field(field)
    k = ground_field(field)
    failures: List[str] = []
    ranks: Dict[str, int] = {}
    for m in range(m_max + 1):
        d = total_differential(BicomplexLayout.first_quadrant(k, m), m + 1)
        r = rank(d)
        ranks[str(m)] = r
        if m % 2 == 0 and not d.is_zero():
            failures.append(f"d into degree {m} is nonzero")
        if m % 2 == 1 and r != d.rows:
            failures.append(f"d into degree {m} has rank {r} < {d.rows}")
    return _report("parity", {"field": str(field), "m_max": m_max}, not failures, {"ranks": ranks, "failures": failures})


def _admitted_degree(algebra: Algebra, max_degree: int, cap: int, extra_rows: int) -> int:
    """Largest n <= max_degree with dim(A)^(n + extra_rows) within the cap."""
    n = max_degree
    while n > 0 and algebra.dim ** (n + extra_rows) > cap:
        n -= 1
    return n


def verify_complex_identities(algebra: Algebra, max_degree: int = 4, cap: Optional[int] = None) -> CheckReport:
    """b^2 = 0, b'^2 = 0, b(1-t) = (1-t)b', Nb = b'N and d^2 = 0 at admitted arities."""
    cap = settings.cap if cap is None else cap
    failures: List[str] = []
    top = _admitted_degree(algebra, max_degree, cap, 2)
    for n in range(1, top + 1):
        b, bp = hochschild_b(algebra, n), bar_bprime(algebra, n)
        if n >= 2:
            if not (hochschild_b(algebra, n - 1) @ b).is_zero():
                failures.append(f"b^2 at arity {n + 1}")
            if not (bar_bprime(algebra, n - 1) @ bp).is_zero():
                failures.append(f"b'^2 at arity {n + 1}")
        if b @ one_minus_t(algebra, n) != one_minus_t(algebra, n - 1) @ bp:
            failures.append(f"b(1-t) = (1-t)b' at arity {n + 1}")
        if norm_operator(algebra, n - 1) @ b != bp @ norm_operator(algebra, n):
            failures.append(f"Nb = b'N at arity {n + 1}")
    d_top = _admitted_degree(algebra, max_degree, cap, 2)
    for m in range(1, d_top + 1):
        layout = BicomplexLayout.first_quadrant(algebra, m)
        if not (total_differential(layout, m) @ total_differential(layout, m + 1)).is_zero():
            failures.append(f"d^2 at degree {m + 1}")
    skipped = list(range(top + 1, max_degree + 1))
    return _report(
        "complex_identities",
        {"algebra": algebra.name, "field": str(algebra.field), "max_degree": max_degree},
        not failures,
        {"failures": failures, "admitted_degree": top, "skipped": skipped},
        skipped=top == 0 and max_degree > 0,
    )


# generators


def verify_generators(n_max: int = 4, window: int = 3, field: Optional[FieldSpec] = None) -> CheckReport:
    """d(u^n) = 0, HC_2n(k) = k, HC_2n+1(k) = 0, psi_n(u^n) = 1 and psi^-(u^inf) = 1."""
    field = _field(field)
    k = ground_field(field)
    failures: List[str] = []
    dims: Dict[str, int] = {}
    for n in range(n_max + 1):
        u = u_generator(n, field)
        if not boundary(u).is_zero():
            failures.append(f"d(u^{n}) != 0")
        even, odd = hc(k, 2 * n), hc(k, 2 * n + 1)
        dims[f"HC_{2 * n}"], dims[f"HC_{2 * n + 1}"] = even.dim, odd.dim
        if even.dim != 1:
            failures.append(f"dim HC_{2 * n}(k) = {even.dim}")
        if odd.dim != 0:
            failures.append(f"dim HC_{2 * n + 1}(k) = {odd.dim}")
        try:
            if psi(n, even.class_of(u)) != 1:
                failures.append(f"psi_{n}(u^{n}) != 1")
        except GeneratorError as exc:
            failures.append(str(exc))
    minus = hc_minus0(k, window)
    dims["HC-_0"] = minus.dim
    try:
        if psi_minus(minus.class_of(u_generator_minus(window, field))) != 1:
            failures.append("psi^-(u^inf) != 1")
    except GeneratorError as exc:
        failures.append(str(exc))
    return _report(
        "generators",
        {"field": str(field), "n_max": n_max, "window": window},
        not failures,
        {"dims": dims, "failures": failures},
        notes=() if field.is_rationals else ("canonical generators are only claimed over the rationals",),
    )


def verify_scalar_separation(
    n_max: int = 4, scalars: Sequence[object] = SCALAR_SAMPLES, field: Optional[FieldSpec] = None
) -> CheckReport:
    """psi_n([lambda u^n]) = lambda: distinct multiples of ch_n are told apart at [k]."""
    field = _field(field)
    k = ground_field(field)
    failures: List[str] = []
    skipped: List[str] = []
    for n in range(n_max + 1):
        group = hc(k, 2 * n)
        for sample in scalars:
            try:
                lam = field.coerce(sample)  # type: ignore[arg-type]
            except CyclicHomError:
                skipped.append(str(sample))
                continue
            value = psi(n, group.class_of(u_generator(n, field).scale(lam)))
            if value != lam:
                failures.append(f"psi_{n}({sample} u^{n}) = {_fmt(field, value)}")
    return _report(
        "scalar_separation",
        {"field": str(field), "n_max": n_max, "scalars": [str(s) for s in scalars]},
        not failures,
        {"failures": failures, "skipped": sorted(set(skipped))},
        notes=(UNIQUENESS_NOTE,),
    )


# additivity and Morita invariance


def _invariant_dim(
    algebra: Algebra, invariant: InvariantKind, n: int, cap: Optional[int]
) -> Tuple[int, bool]:
    """(dimension, approximate) of one invariant; guardrail refusals propagate."""
    if invariant == InvariantKind.HH:
        return hh(algebra, n, cap=cap).dim, False
    if invariant == InvariantKind.HC:
        return hc(algebra, n, cap=cap).dim, False
    if invariant == InvariantKind.HC_MINUS:
        group = hc_minus0(algebra, n, cap=cap)
        return group.dim, group.stabilized is not True
    limit = hc_per0(algebra, n, cap=cap)
    return limit.dim, limit.approximate


def _degrees(invariant: InvariantKind, n: int) -> List[int]:
    # HC-/tower-limit take a single window; HH/HC sweep degrees 0..n
    return [n] if invariant in (InvariantKind.HC_MINUS, InvariantKind.TOWER_LIMIT) else list(range(n + 1))


def verify_additivity(
    algebra: Algebra, invariant: InvariantKind, n: int, *, cap: Optional[int] = None
) -> CheckReport:
    """dim E(T(A)) = 2 dim E(A) at every admitted degree up to n."""
    triangular = upper_triangular_algebra(algebra)
    dims: Dict[str, List[int]] = {}
    failures: List[str] = []
    skipped: List[int] = []
    approximate = False
    for degree in _degrees(invariant, n):
        try:
            base, approx_a = _invariant_dim(algebra, invariant, degree, cap)
            doubled, approx_t = _invariant_dim(triangular, invariant, degree, cap)
        except GuardrailExceededError:
            skipped.append(degree)
            continue
        approximate = approximate or approx_a or approx_t
        dims[str(degree)] = [base, doubled]
        if doubled != 2 * base:
            failures.append(f"degree {degree}: {doubled} != 2*{base}")
    notes = ["dimension-level check of E(A) + E(A) = E(T(A))"]
    if approximate:
        notes.append("a window or tower did not stabilize (or its stability was not computable)")
    return _report(
        "additivity",
        {"algebra": algebra.name, "field": str(algebra.field), "invariant": invariant.value, "n": n},
        not failures,
        {"dims": dims, "failures": failures, "skipped": skipped},
        notes=notes,
        approximate=approximate,
        skipped=not dims,
    )


def verify_matrix_agreement(r: int, n: int, field: Optional[FieldSpec] = None, *, cap: Optional[int] = None) -> CheckReport:
    """HC_j(M_r(k)) = HC_j(k) for j <= n, and the trace sends generators to multiples of [u^m]."""
    field = _field(field)
    k = ground_field(field)
    mk = matrix_algebra(k, r)
    failures: List[str] = []
    dims: Dict[str, List[int]] = {}
    traces: Dict[str, str] = {}
    skipped: List[int] = []
    for j in range(n + 1):
        try:
            big = hc(mk, j, cap=cap)
        except GuardrailExceededError:
            skipped.append(j)
            continue
        small = hc(k, j, cap=cap)
        dims[str(j)] = [big.dim, small.dim]
        if big.dim != small.dim:
            failures.append(f"dim HC_{j}: {big.dim} != {small.dim}")
        if j % 2 or big.dim != 1:
            continue
        m = j // 2
        generator = psi(m, small.class_of(trace_chain(big.representatives[0])))
        traces[f"generator_{j}"] = _fmt(field, generator)
        if generator == 0:
            failures.append(f"trace of the HC_{j}(M_{r}(k)) generator is zero")
        e11 = Idempotent.diagonal(k, r, 0)
        untraced = idempotent_cycle(e11, m)
        if all(c == 0 for c in big.coords(untraced)):
            failures.append(f"untraced ch_{m}(E11) is a boundary")
        value = psi(m, small.class_of(trace_chain(untraced)))
        traces[f"ch_{m}(E11)"] = _fmt(field, value)
        if value != 1:
            failures.append(f"trace of ch_{m}(E11) is {_fmt(field, value)} [u^{m}]")
    return _report(
        "matrix_agreement",
        {"field": str(field), "r": r, "n": n},
        not failures,
        {"dims": dims, "traces": traces, "failures": failures, "skipped": skipped},
        skipped=not dims,
    )


# compatibility of Chern characters


def _e_inputs(label: str, e: Idempotent) -> Dict[str, object]:
    return {"idempotent": label, "algebra": e.inner_algebra.name, "size": e.size, "field": str(e.inner_algebra.field)}


def verify_s_compat(e: Idempotent, n: int, m: int, label: str = "e", *, cap: Optional[int] = None) -> CheckReport:
    """S^(n-m) ch_n(e) and ch_m(e) define the same class of HC_2m."""
    if not 0 <= m < n:
        raise InputFormatError(f"need 0 <= m < n, got m={m}, n={n}")
    algebra = e.inner_algebra
    check_guardrail(BicomplexLayout.first_quadrant(algebra, 2 * n), cap)
    chain = chern_chain(e, n)
    failures: List[str] = []
    if not boundary(chain).is_zero():
        failures.append(f"ch_{n} is not a cycle")
    trail: List[str] = []
    shifted = chain
    for j in range(n, m - 1, -1):
        if j < n:
            shifted = periodicity_shift(shifted)
        if algebra.is_ground_field:
            trail.append(_fmt(algebra.field, psi(j, hc(algebra, 2 * j).class_of(shifted))))
    if not failures and not class_equal(algebra, 2 * m, shifted, chern_chain(e, m)):
        failures.append(f"S^{n - m} ch_{n} != ch_{m}")
    is_unit = algebra.is_ground_field and e.size == 1 and e.matrix == MatrixOverA.identity(algebra, 1)
    if is_unit and any(v != "1" for v in trail):
        failures.append(f"psi trail {trail} is not constantly 1")
    witnesses: Dict[str, object] = {"failures": failures}
    if trail:
        witnesses["psi_trail"] = trail
    return _report(
        "s_compat",
        {**_e_inputs(label, e), "n": n, "m": m},
        not failures,
        witnesses,
        notes=(UNIQUENESS_NOTE,),
    )


def verify_minus_compat(e: Idempotent, m: int, window: int, label: str = "e", *, cap: Optional[int] = None) -> CheckReport:
    """The projection of ch^-(e) to rows 0..2m is class-equal to ch_m(e)."""
    if not 0 <= m <= window:
        raise InputFormatError(f"need 0 <= m <= window, got m={m}, window={window}")
    algebra = e.inner_algebra
    check_guardrail(BicomplexLayout.negative(algebra, window), cap)
    chain = chern_minus_chain(e, window)
    failures: List[str] = []
    if not boundary(chain).is_zero():
        failures.append("ch^- is not a cycle in the window")
    projected = project_minus(chain, m)
    target = chern_chain(e, m)
    if not failures and not class_equal(algebra, 2 * m, projected, target):
        failures.append(f"projection of ch^- is not ch_{m}")
    return _report(
        "minus_compat",
        {**_e_inputs(label, e), "m": m, "window": window},
        not failures,
        {"failures": failures, "componentwise": projected.same_as(target)},
        notes=(UNIQUENESS_NOTE,),
    )


def verify_conjugation_invariance(
    e: Idempotent, g: MatrixOverA, n: int, label: str = "e", *, cap: Optional[int] = None
) -> CheckReport:
    """ch_n(e) and ch_n(g e g^-1) are class-equal."""
    algebra = e.inner_algebra
    check_guardrail(BicomplexLayout.first_quadrant(algebra, 2 * n), cap)
    conjugate = e.conjugate(g)
    same = class_equal(algebra, 2 * n, chern_chain(e, n), chern_chain(conjugate, n))
    return _report(
        "conjugation_invariance",
        {**_e_inputs(label, e), "n": n, "conjugator": g.format()},
        same,
        {"conjugate": conjugate.matrix.format()},
    )


def guarded(name: str, inputs: Dict[str, object], check: Callable[[], CheckReport]) -> CheckReport:
    """Run a check; guardrail refusals become skips and other package errors failures."""
    try:
        return check()
    except GuardrailExceededError as exc:
        return CheckReport(
            name=name, inputs=inputs, verdict=Verdict.SKIPPED,
            witnesses={"skipped": True, "required": exc.required, "cap": exc.cap},
            notes=("skipped: beyond the size guardrail",),
        )
    except CyclicHomError as exc:
        logger.error("check raised", check=name, error=str(exc))
        return CheckReport(name=name, inputs=inputs, verdict=Verdict.FAIL, witnesses={"error": str(exc)})
