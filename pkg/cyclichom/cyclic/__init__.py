from cyclichom.cyclic.bicomplex import (
    BicomplexLayout,
    ChainVector,
    boundary,
    check_guardrail,
    periodicity_shift,
    total_differential,
)
from cyclichom.cyclic.homology import (
    HomologyClass,
    HomologyResult,
    TowerLimit,
    hc,
    hc_minus0,
    hc_per0,
    hh,
    homology_in,
    s_map,
)
from cyclichom.cyclic.operators import bar_bprime, cyclic_ops, hochschild_b, norm_operator, one_minus_t

__all__ = [
    "BicomplexLayout",
    "ChainVector",
    "HomologyClass",
    "HomologyResult",
    "TowerLimit",
    "bar_bprime",
    "boundary",
    "check_guardrail",
    "cyclic_ops",
    "hc",
    "hc_minus0",
    "hc_per0",
    "hh",
    "hochschild_b",
    "homology_in",
    "norm_operator",
    "one_minus_t",
    "periodicity_shift",
    "s_map",
    "total_differential",
]
