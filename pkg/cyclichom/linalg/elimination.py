"""Deterministic sparse Gaussian elimination over exact fields.

All routines sit on :class:`EchelonBasis`, an incremental semi-echelon form whose
rows are normalized so that the pivot entry is 1. The pivot of a row is its
smallest index; vectors are inserted in the order given, so outputs depend only on
the inputs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple

import structlog

from cyclichom.core.errors import (
    CompositionNonzeroError,
    DimensionMismatchError,
    FieldMismatchError,
    NotACycleError,
)
from cyclichom.linalg.field import FieldSpec, Scalar
from cyclichom.linalg.matrices import DenseVector, SparseMatrix, SparseVec

logger = structlog.get_logger(__name__)


class EchelonBasis:
    """Semi-echelon basis of a growing subspace of k^n.

    Each stored row may carry a *tag*, a sparse vector recording which
    combination of tagged inputs it equals; tags make preimages and class
    coordinates recoverable.
    """

    def __init__(self, field: FieldSpec) -> None:
        self.field = field
        self.rows: Dict[int, SparseVec] = {}
        self.tags: Dict[int, SparseVec] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def _reduce(
        self, vec: Mapping[int, Scalar], tag: Optional[Mapping[int, Scalar]], full: bool
    ) -> Tuple[SparseVec, SparseVec, Optional[int]]:
        """Subtract pivot rows in increasing index order.

        Returns (residual, tag, lead). With ``full=False`` the reduction stops at the
        first index without a pivot (``lead``); with ``full=True`` it continues and the
        residual is supported on non-pivot indices only.
        """
        norm = self.field.normalize
        v: SparseVec = {i: x for i, x in vec.items() if x != 0}
        t: SparseVec = dict(tag or {})
        heap = list(v)
        heapq.heapify(heap)
        lead: Optional[int] = None
        while heap:
            j = heapq.heappop(heap)
            c = v.get(j)
            if c is None:
                continue
            row = self.rows.get(j)
            if row is None:
                if lead is None:
                    lead = j
                if not full:
                    break
                continue
            for k, a in row.items():
                new = norm(v.get(k, 0) - c * a)
                if new == 0:
                    v.pop(k, None)
                else:
                    if k not in v:
                        heapq.heappush(heap, k)
                    v[k] = new
            for k, a in self.tags.get(j, {}).items():
                new = norm(t.get(k, 0) - c * a)
                if new == 0:
                    t.pop(k, None)
                else:
                    t[k] = new
        return v, t, lead

    def insert(self, vec: Mapping[int, Scalar], tag: Optional[Mapping[int, Scalar]] = None) -> Optional[int]:
        """Add a vector; returns its new pivot, or None if it was already in the span."""
        v, t, lead = self._reduce(vec, tag, full=False)
        if lead is None:
            return None
        scale = self.field.inv(v[lead])
        norm = self.field.normalize
        self.rows[lead] = {k: norm(x * scale) for k, x in v.items()}
        if t:
            self.tags[lead] = {k: norm(x * scale) for k, x in t.items()}
        return lead

    def contains(self, vec: Mapping[int, Scalar]) -> bool:
        _, _, lead = self._reduce(vec, None, full=False)
        return lead is None

    def express(self, vec: Mapping[int, Scalar]) -> Optional[SparseVec]:
        """Combination of tags equal to ``vec``, or None when ``vec`` is outside the span."""
        v, t, lead = self._reduce(vec, None, full=False)
        if lead is not None:
            return None
        norm = self.field.normalize
        return {k: norm(-x) for k, x in t.items()}

    def normal_form(self, vec: Mapping[int, Scalar]) -> SparseVec:
        """Representative of ``vec`` modulo the span, supported off the pivots."""
        v, _, _ = self._reduce(vec, None, full=True)
        return v

    def reduced_rows(self) -> Dict[int, SparseVec]:
        """Reduced row echelon form: no row has an entry at another row's pivot."""
        norm = self.field.normalize
        done: Dict[int, SparseVec] = {}
        for p in sorted(self.rows, reverse=True):
            row = dict(self.rows[p])
            for q in sorted(k for k in row if k != p and k in done):
                c = row.get(q)
                if not c:
                    continue
                for k, a in done[q].items():
                    new = norm(row.get(k, 0) - c * a)
                    if new == 0:
                        row.pop(k, None)
                    else:
                        row[k] = new
            done[p] = row
        return done


def _echelon_of(field: FieldSpec, vectors: Iterable[Mapping[int, Scalar]]) -> EchelonBasis:
    basis = EchelonBasis(field)
    for vec in vectors:
        basis.insert(vec)
    return basis


def rank(m: SparseMatrix) -> int:
    """Rank over the matrix's field, eliminating along the shorter side."""
    if m.rows <= m.cols:
        rows = m.row_map
        vectors = (rows[r] for r in sorted(rows))
    else:
        vectors = (m.columns[c] for c in sorted(m.columns))
    return _echelon_of(m.field, vectors).rank


def _free_kernel(m: SparseMatrix) -> Tuple[List[int], List[DenseVector]]:
    rows = m.row_map
    basis = _echelon_of(m.field, (rows[r] for r in sorted(rows)))
    rref = basis.reduced_rows()
    norm = m.field.normalize
    free = [c for c in range(m.cols) if c not in rref]
    by_free: Dict[int, SparseVec] = {f: {f: 1} for f in free}
    for p, row in rref.items():
        for k, a in row.items():
            if k != p:
                by_free[k][p] = norm(-a)
    return free, [DenseVector.from_sparse(m.field, m.cols, by_free[f]) for f in free]


def kernel_basis(m: SparseMatrix) -> List[DenseVector]:
    """Basis of ker(m), one vector per free column in increasing order.

    The vector for free column f has a 1 at f, zeros at the other free columns and
    minus the reduced-row entries at the pivot columns.
    """
    return _free_kernel(m)[1]


def preimage(m: SparseMatrix, v: DenseVector) -> Optional[DenseVector]:
    """Some x with m x = v, or None when v is not in the image of m."""
    if m.field != v.field:
        raise FieldMismatchError(f"field mismatch: {m.field} vs {v.field}")
    if v.length != m.rows:
        raise DimensionMismatchError(f"vector of length {v.length} for a matrix with {m.rows} rows")
    basis = EchelonBasis(m.field)
    for c in sorted(m.columns):
        basis.insert(m.columns[c], {c: 1})
    x = basis.express(v.to_sparse())
    if x is None:
        return None
    return DenseVector.from_sparse(m.field, m.cols, x)


@dataclass(frozen=True)
class Subquotient:
    """ker(d_out) / im(d_in) with chosen representative cycles."""

    field: FieldSpec
    ambient: int
    dim: int
    representatives: Tuple[DenseVector, ...]
    image_rank: int
    kernel_dim: int
    _coords: Callable[[SparseVec], Tuple[Scalar, ...]] = dc_field(repr=False, compare=False)

    def coords(self, cycle: DenseVector) -> Tuple[Scalar, ...]:
        """Class coordinates of a cycle; raises NotACycleError for non-cycles."""
        if cycle.field != self.field:
            raise FieldMismatchError(f"field mismatch: {self.field} vs {cycle.field}")
        if cycle.length != self.ambient:
            raise DimensionMismatchError(f"vector of length {cycle.length} in a space of dimension {self.ambient}")
        return self._coords(cycle.to_sparse())


def subquotient(d_in: SparseMatrix, d_out: SparseMatrix) -> Subquotient:
    """Homology at the shared space of ``d_in`` (incoming) and ``d_out`` (outgoing).

    Non-pivot coordinates of an echelon basis of im(d_in) span a complement of the
    image; ker(d_out) modulo the image is the kernel of d_out restricted to those
    coordinates, whose reduced-row-echelon kernel basis gives the representatives.
    """
    if d_in.field != d_out.field:
        raise FieldMismatchError(f"field mismatch: {d_in.field} vs {d_out.field}")
    if d_out.cols != d_in.rows:
        raise DimensionMismatchError(
            f"d_in lands in dimension {d_in.rows} but d_out starts from {d_out.cols}"
        )
    if not (d_out @ d_in).is_zero():
        raise CompositionNonzeroError("d_out o d_in is nonzero")

    field = d_out.field
    n = d_out.cols
    image = _echelon_of(field, (d_in.columns[c] for c in sorted(d_in.columns)))
    complement = [c for c in range(n) if c not in image.rows]
    position = {c: i for i, c in enumerate(complement)}
    restricted = SparseMatrix(
        field, d_out.rows, len(complement),
        {position[c]: col for c, col in d_out.columns.items() if c in position},
    )
    local_free, local = _free_kernel(restricted)
    reps = tuple(
        DenseVector.from_sparse(field, n, {complement[i]: x for i, x in vec.to_sparse().items()})
        for vec in local
    )
    free = [complement[i] for i in local_free]
    logger.debug("subquotient", ambient=n, image_rank=image.rank, dim=len(reps))

    def coords(vec: SparseVec) -> Tuple[Scalar, ...]:
        if d_out.apply_sparse(vec):
            raise NotACycleError("vector is not a cycle")
        nf = image.normal_form(vec)
        return tuple(nf.get(f, 0) for f in free)

    return Subquotient(
        field=field,
        ambient=n,
        dim=len(reps),
        representatives=reps,
        image_rank=image.rank,
        kernel_dim=image.rank + len(reps),
        _coords=coords,
    )
