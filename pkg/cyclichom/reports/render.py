"""Text and structured renderings of homology results, chains, matrices and check reports.

Structured output is one canonical JSON record per line, version record first;
every scalar is written as an exact string.
"""

from __future__ import annotations

from typing import Any, Dict, Iterable, List, Optional, Sequence

from cyclichom import __version__
from cyclichom.core.enums import OutputFormat
from cyclichom.cyclic.bicomplex import ChainVector
from cyclichom.cyclic.homology import HomologyClass, HomologyResult, TowerLimit
from cyclichom.lab.reports import CheckReport, Summary, canonical_json
from cyclichom.linalg.field import FieldSpec
from cyclichom.linalg.matrices import SparseMatrix

Record = Dict[str, Any]


def version_record() -> Record:
    return {"record": "version", "tool": "cyclichom", "version": __version__}


def chain_record(chain: ChainVector, slot_labels: Optional[Dict[int, str]] = None) -> Record:
    field = chain.algebra.field
    components = []
    for p, q, x in chain.items():
        if x.is_zero():
            continue
        entry: Record = {
            "column": p,
            "row": q,
            "terms": [[chain.algebra.label(idx), field.format(v)] for idx, v in x.terms()],
        }
        if slot_labels and q in slot_labels:
            entry["slot"] = slot_labels[q]
        components.append(entry)
    return {"degree": chain.degree, "components": components}


def slot_labels(top: int) -> Dict[int, str]:
    """Row -> y_i / z_i name for the canonical slot pattern."""
    labels = {2 * i: f"y{i}" for i in range(top + 1)}
    labels.update({2 * i - 1: f"z{i}" for i in range(1, top + 1)})
    return labels


def homology_record(group: HomologyResult) -> Record:
    record: Record = {
        "record": "homology",
        "field": str(group.field),
        "algebra": group.algebra.name,
        "group": group.group.value,
        "degree": group.degree,
        "truncation": group.layout.describe(),
        "dim": group.dim,
        "representatives": [chain_record(rep) for rep in group.representatives],
    }
    if group.window is not None:
        record["window"] = group.window
        record["stabilized"] = group.stabilized
    return record


def class_record(cls: HomologyClass) -> Record:
    return {"group": cls.group.name, "coords": cls.format()}


def matrix_record(name: str, field: FieldSpec, m: SparseMatrix) -> Record:
    return {
        "record": "matrix",
        "name": name,
        "field": str(field),
        "shape": [m.rows, m.cols],
        "rows": [[field.format(v) for v in row] for row in m.to_rows()],
    }


def tower_record(limit: TowerLimit) -> Record:
    field = limit.algebra.field
    return {
        "record": "tower_limit",
        "field": str(field),
        "algebra": limit.algebra.name,
        "n_max": limit.n_max,
        "dims": [g.dim for g in limit.groups],
        "s_maps": [[[field.format(v) for v in row] for row in s.to_rows()] for s in limit.s_maps],
        "dim": limit.dim,
        "stabilized": limit.stabilized,
    }


def check_record(report: CheckReport) -> Record:
    return {"record": "check", **report.model_dump(mode="json")}


def summary_record(summary: Summary) -> Record:
    return {"record": "summary", **summary.model_dump(mode="json"), "line": summary.line()}


# text


def _chain_lines(chain: ChainVector, indent: str = "  ", labels: Optional[Dict[int, str]] = None) -> List[str]:
    out = []
    for p, q, x in chain.items():
        if x.is_zero():
            continue
        name = f"{labels[q]} " if labels and q in labels else ""
        terms = " + ".join(x.format())
        out.append(f"{indent}{name}({p}, {q}): {terms}")
    return out


def homology_text(group: HomologyResult) -> List[str]:
    lines = [
        f"field: {group.field}",
        f"algebra: {group.algebra.name}",
        f"group: {group.name}",
        f"truncation: {group.layout.describe()}",
        f"dim {group.dim}",
    ]
    if group.window is not None:
        flag = "unknown" if group.stabilized is None else str(group.stabilized).lower()
        lines.append(f"window {group.window} stabilized={flag}")
    for i, rep in enumerate(group.representatives, start=1):
        lines.append(f"representative {i}:")
        lines += _chain_lines(rep)
    return lines


def chain_text(title: str, chain: ChainVector, labels: Optional[Dict[int, str]] = None) -> List[str]:
    return [f"{title} (degree {chain.degree}, {chain.algebra.name} over {chain.algebra.field}):"] + _chain_lines(
        chain, labels=labels
    )


def matrix_text(name: str, field: FieldSpec, m: SparseMatrix) -> List[str]:
    lines = [f"{name}: {m.rows}x{m.cols} over {field}"]
    lines += ["  [" + ", ".join(field.format(v) for v in row) + "]" for row in m.to_rows()]
    return lines


def tower_text(limit: TowerLimit) -> List[str]:
    lines = [
        f"field: {limit.algebra.field}",
        f"algebra: {limit.algebra.name}",
        f"tower HC_0 <- ... <- HC_{2 * limit.n_max}: dims {[g.dim for g in limit.groups]}",
    ]
    for j, s in enumerate(limit.s_maps, start=1):
        lines += matrix_text(f"S_{j}", limit.algebra.field, s)
    lines.append(f"dim {limit.dim} stabilized={str(limit.stabilized).lower()}")
    return lines


def check_text(report: CheckReport) -> List[str]:
    inputs = " ".join(f"{k}={v}" for k, v in sorted(report.inputs.items()))
    lines = [f"[{report.verdict.value.upper()}] {report.name} {inputs}"]
    for key in sorted(report.witnesses):
        lines.append(f"    {key}: {canonical_json(report.witnesses[key])}")
    lines += [f"    note: {note}" for note in report.notes]
    return lines


def checks_text(reports: Sequence[CheckReport], summary: Summary) -> List[str]:
    lines: List[str] = []
    for report in reports:
        lines += check_text(report)
    if summary.approximate:
        lines.append(f"warning: {summary.approximate} approximate verdict(s)")
    if summary.skipped:
        lines.append(f"warning: {summary.skipped} check(s) skipped by the size guardrail")
    lines.append(summary.line())
    return lines


def structured(records: Iterable[Record]) -> str:
    return "\n".join(canonical_json(r) for r in [version_record(), *records]) + "\n"


def emit(fmt: OutputFormat, text_lines: Sequence[str], records: Iterable[Record]) -> str:
    if fmt == OutputFormat.STRUCTURED:
        return structured(records)
    return "\n".join(text_lines) + "\n"
