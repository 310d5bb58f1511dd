"""Chern characters of idempotents: chains over A built from traces of e^⊗m."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional

import structlog

from cyclichom.algebra.matrices import MatrixOverA, generalized_trace
from cyclichom.algebra.structure import Algebra, TensorElement
from cyclichom.chern.generators import slotted_chain
from cyclichom.chern.idempotents import Idempotent, K0Witness
from cyclichom.core.enums import LayoutKind
from cyclichom.core.errors import AlgebraMismatchError, DimensionMismatchError, NotACycleError
from cyclichom.cyclic.bicomplex import BicomplexLayout, ChainVector, boundary, total_differential
from cyclichom.cyclic.homology import HomologyClass, hc, hc_minus0
from cyclichom.linalg.elimination import preimage
from cyclichom.linalg.matrices import SparseVec

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class ChernClass:
    """A Chern cycle together with its class in HC_2n (or windowed HC_0^-)."""

    chain: ChainVector
    homology_class: HomologyClass


def trace_of_power(e: MatrixOverA, m: int) -> TensorElement:
    """tr(e^⊗m) = sum over i_0..i_{m-1} of e[i0][i1] ⊗ e[i1][i2] ⊗ ... ⊗ e[i_{m-1}][i0]."""
    if m < 1:
        raise DimensionMismatchError("tensor power must be at least 1")
    A = e.algebra
    d, r = A.dim, e.size
    norm = A.field.normalize
    total: SparseVec = {}
    for start in range(r):
        states: Dict[int, SparseVec] = {start: {0: 1}}
        for step in range(m):
            nxt: Dict[int, SparseVec] = {}
            targets = [start] if step == m - 1 else range(r)
            for i, partial in states.items():
                for j in targets:
                    entry = e.entries[i][j].coords
                    if not entry:
                        continue
                    acc = nxt.setdefault(j, {})
                    for flat, a in partial.items():
                        for l, b in entry.items():
                            key = flat * d + l
                            acc[key] = acc.get(key, 0) + a * b
            states = {j: {k: v for k, v in ((k, norm(v)) for k, v in acc.items()) if v != 0} for j, acc in nxt.items()}
        for flat, v in states.get(start, {}).items():
            total[flat] = total.get(flat, 0) + v
    return TensorElement.from_sparse(A, m, total)


def _powers(e: MatrixOverA) -> Callable[[int], TensorElement]:
    cache: Dict[int, TensorElement] = {}

    def power(m: int) -> TensorElement:
        if m not in cache:
            cache[m] = trace_of_power(e, m)
        return cache[m]

    return power


def _require_cycle(chain: ChainVector, what: str) -> None:
    if not boundary(chain).is_zero():
        logger.error("chern chain is not closed", chain=what, algebra=chain.algebra.name)
        raise NotACycleError(f"{what} over {chain.algebra.name} is not a cycle")


def idempotent_cycle(e: Idempotent, n: int) -> ChainVector:
    """The Chern cycle of e over M_r(A), before taking the trace."""
    element = e.matrix.to_element()
    outer = element.algebra
    layout = BicomplexLayout.first_quadrant(outer, 2 * n)
    return slotted_chain(layout, 2 * n, n, element.tensor_power)


def chern_chain(e: Idempotent, n: int) -> ChainVector:
    if n < 0:
        raise DimensionMismatchError(f"n must be >= 0, got {n}")
    layout = BicomplexLayout.first_quadrant(e.inner_algebra, 2 * n)
    return slotted_chain(layout, 2 * n, n, _powers(e.matrix))


def chern(e: Idempotent, n: int, *, cap: Optional[int] = None, force: bool = False) -> ChernClass:
    """ch_n(e) in Tot CC(A)_2n and its class in HC_2n(A)."""
    group = hc(e.inner_algebra, 2 * n, cap=cap, force=force)
    chain = chern_chain(e, n)
    _require_cycle(chain, f"ch_{n}")
    return ChernClass(chain, group.class_of(chain))


def chern_minus_chain(e: Idempotent, window: int) -> ChainVector:
    layout = BicomplexLayout.negative(e.inner_algebra, window)
    return slotted_chain(layout, 0, window, _powers(e.matrix))


def chern_minus(e: Idempotent, window: int, *, cap: Optional[int] = None, force: bool = False) -> ChernClass:
    """ch^-(e) cut to the window of rows 0..2M and its class in windowed HC_0^-(A)."""
    group = hc_minus0(e.inner_algebra, window, cap=cap, force=force)
    chain = chern_minus_chain(e, window)
    _require_cycle(chain, "ch^-")
    return ChernClass(chain, group.class_of(chain))


def chern_k0(w: K0Witness, n: int, *, cap: Optional[int] = None, force: bool = False) -> ChernClass:
    """sum ch_n(plus) - sum ch_n(minus)."""
    algebra = w.inner_algebra
    if algebra is None:
        raise DimensionMismatchError("empty witness has no algebra")
    group = hc(algebra, 2 * n, cap=cap, force=force)
    total = ChainVector.zero(group.layout, 2 * n)
    for sign, parts in ((1, w.plus), (-1, w.minus)):
        for e in parts:
            total = total + chern_chain(e, n).relayout(group.layout).scale(sign)
    _require_cycle(total, f"ch_{n} of a witness")
    return ChernClass(total, group.class_of(total))


def class_equal(algebra: Algebra, m: int, c1: ChainVector, c2: ChainVector) -> bool:
    """True iff c1 - c2 is a boundary of Tot_{m+1}."""
    for c in (c1, c2):
        if c.algebra is not algebra:
            raise AlgebraMismatchError(f"chain over {c.algebra.name}, expected {algebra.name}")
        if c.degree != m:
            raise DimensionMismatchError(f"chain of degree {c.degree}, expected {m}")
        if c.layout.kind != c1.layout.kind:
            raise AlgebraMismatchError("chains from different complexes")
    if c1.layout.kind == LayoutKind.FIRST_QUADRANT:
        layout = BicomplexLayout.first_quadrant(algebra, m)
    elif c1.layout != c2.layout:
        raise AlgebraMismatchError("chains sit in different windows")
    else:
        layout = c1.layout
    a, b = c1.relayout(layout), c2.relayout(layout)
    for c in (a, b):
        if not boundary(c).is_zero():
            raise NotACycleError(f"degree {m} chain over {algebra.name} is not a cycle")
    return preimage(total_differential(layout, m + 1), (a - b).flatten()) is not None


def project_minus(chain: ChainVector, m: int) -> ChainVector:
    """Rows 0..2m of a windowed minus-chain, moved to Tot CC(A)_2m (column p -> p + 2m)."""
    if chain.layout.kind != LayoutKind.NEGATIVE or chain.degree != 0:
        raise DimensionMismatchError("project_minus takes degree-0 chains of a negative window")
    window = chain.layout.window
    assert window is not None
    if m > window:
        raise DimensionMismatchError(f"cannot project a window of {window} to m = {m}")
    layout = BicomplexLayout.first_quadrant(chain.algebra, 2 * m)
    return ChainVector(layout, 2 * m, {p + 2 * m: x for p, x in chain.components.items() if p >= -2 * m})


def trace_chain(chain: ChainVector) -> ChainVector:
    """Apply the generalized trace componentwise; a chain map M_r(A) -> A."""
    inner = chain.algebra.inner
    if inner is None:
        raise AlgebraMismatchError(f"{chain.algebra.name} is not a matrix construction")
    layout = chain.layout.with_algebra(inner)
    return ChainVector(
        layout,
        chain.degree,
        {p: y for p, x in chain.components.items() if not (y := generalized_trace(x)).is_zero()},
    )
