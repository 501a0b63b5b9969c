"""Three-qubit pure states as linked rings.

Basis-independent correspondence between 3-qubit entanglement and links of
three rings, built on partial traces, the Wootters concurrence and the Peres
partial-transpose test.
"""

from qlink.classify import ClassificationReport, LinkClass, classify, generalized_ghz_check, link_sketch
from qlink.density import (
    DensityOperator,
    from_pure,
    mixture,
    partial_trace,
    partial_transpose,
    purity,
    reduced_from_pure,
)
from qlink.ketparse import format_state, parse, parse_state
from qlink.measurement import basis_dependence_demo, measure, single_qubit_projectors
from qlink.measures import concurrence, lambdas_oracle, ppt_separable, pure_bipartite_separable, spin_flip
from qlink.qstate import (
    PureState,
    bell,
    chain,
    equal_up_to_global_phase,
    ghz,
    inner,
    standard_state,
    tensor,
    w3,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "DensityOperator",
    "LinkClass",
    "PureState",
    "basis_dependence_demo",
    "bell",
    "chain",
    "classify",
    "concurrence",
    "equal_up_to_global_phase",
    "format_state",
    "from_pure",
    "generalized_ghz_check",
    "ghz",
    "inner",
    "lambdas_oracle",
    "link_sketch",
    "measure",
    "mixture",
    "parse",
    "parse_state",
    "partial_trace",
    "partial_transpose",
    "ppt_separable",
    "pure_bipartite_separable",
    "purity",
    "reduced_from_pure",
    "single_qubit_projectors",
    "spin_flip",
    "standard_state",
    "tensor",
    "w3",
]
