from cyclichom.reports.render import (
    check_record,
    checks_text,
    chain_record,
    chain_text,
    class_record,
    emit,
    homology_record,
    homology_text,
    matrix_record,
    matrix_text,
    slot_labels,
    summary_record,
    tower_record,
    tower_text,
)

__all__ = [
    "chain_record",
    "chain_text",
    "check_record",
    "checks_text",
    "class_record",
    "emit",
    "homology_record",
    "homology_text",
    "matrix_record",
    "matrix_text",
    "slot_labels",
    "summary_record",
    "tower_record",
    "tower_text",
]
