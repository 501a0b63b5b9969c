"""Recompute the worked 3-qubit examples and compare them with their closed forms.

Each :class:`Row` pairs a closed-form expected value with the value qlink
computes.  Numbers are compared as ``|computed - expected| <= tolerance``;
verdicts (booleans, link classes) by equality.
"""

import math
from dataclasses import asdict, dataclass

import numpy as np

from qlink.classify import classify, generalized_ghz_check
from qlink.density import reduced_from_pure
from qlink.measurement import basis_dependence_demo
from qlink.measures import concurrence, ppt_separable, spin_flip
from qlink.qstate import (
    PureState,
    basis_state,
    bell,
    chain,
    equal_up_to_global_phase,
    ghz,
    ket0,
    permute_qubits,
    tensor,
    w3,
)

CHAIN_GRID = tuple(round(0.1 * k, 1) for k in range(1, 10))

GHZ_BC = np.diag([0.5, 0, 0, 0.5]).astype(complex)
W_BC = np.array([[1, 0, 0, 0], [0, 1, 1, 0], [0, 1, 1, 0], [0, 0, 0, 0]], dtype=complex) / 3
W_PRODUCT = np.array([[0, 0, 0, 0], [0, 2, 2, 0], [0, 2, 2, 0], [0, 0, 0, 0]], dtype=complex) / 9


@dataclass(frozen=True)
class Row:
    name: str
    expected: object
    computed: object
    tolerance: float
    passed: bool

    def to_dict(self):
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def _num(name, expected, computed, tol):
    expected = float(expected)
    computed = float(computed)
    return Row(name, expected, computed, tol, abs(computed - expected) <= tol)


def _same(name, expected, computed):
    return Row(name, expected, computed, 0.0, expected == computed)


def _max_dev(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def rows(tol=None):
    """All reproduction rows.  ``tol`` replaces every numeric row's own tolerance."""

    def t(default):
        return default if tol is None else tol

    out = []

    # GHZ: tracing out A leaves the separable mixture (|00><00| + |11><11|)/2
    g = ghz(3)
    rho = reduced_from_pure(g, "BC")
    out.append(_num("ghz: max |rho_BC - diag(1/2,0,0,1/2)|", 0.0, _max_dev(rho.matrix, GHZ_BC), t(1e-12)))
    out.append(_num("ghz: C(rho_BC)", 0.0, concurrence(rho).concurrence, t(1e-9)))
    out.append(_same("ghz: rho_BC PPT separable", True, ppt_separable(rho).separable))

    # W: rho_BC, rho_tilde rho, lambdas, concurrence
    rho = reduced_from_pure(w3(), "BC")
    rep = concurrence(rho)
    out.append(_num("w: max |rho_BC - 1/3 matrix|", 0.0, _max_dev(rho.matrix, W_BC), t(1e-12)))
    out.append(_num("w: max |rho_tilde rho - 2/9 matrix|", 0.0, _max_dev(spin_flip(rho) @ rho.matrix, W_PRODUCT), t(1e-12)))
    for i, expected in enumerate((2 / 3, 0.0, 0.0, 0.0)):
        out.append(_num(f"w: lambda_{i + 1}", expected, rep.lambdas[i], t(1e-9)))
    out.append(_num("w: C(rho_BC)", 2 / 3, rep.concurrence, t(1e-9)))
    out.append(_same("w: rho_BC PPT separable", False, ppt_separable(rho).separable))

    # chain a|000> + b|+1+> on a grid
    for a in CHAIN_GRID:
        b = math.sqrt(1 - a * a)
        s = chain(a, b)
        ab = abs(a * b)
        ab_rep = concurrence(reduced_from_pure(s, "AB"))
        out.append(_num(f"chain a={a}: C(rho_AC)", 0.0, concurrence(reduced_from_pure(s, "AC")).concurrence, t(1e-9)))
        out.append(_num(f"chain a={a}: C(rho_AB)", ab, ab_rep.concurrence, t(1e-9)))
        out.append(_num(f"chain a={a}: C(rho_BC)", ab, concurrence(reduced_from_pure(s, "BC")).concurrence, t(1e-9)))
        out.append(_num(f"chain a={a}: lambda_1", (math.sqrt(2) + 1) / 2 * ab, ab_rep.lambdas[0], t(1e-9)))
        out.append(_num(f"chain a={a}: lambda_2", (math.sqrt(2) - 1) / 2 * ab, ab_rep.lambdas[1], t(1e-9)))

    # measuring GHZ qubit A: Z leaves B,C separable, X leaves them maximally entangled
    demo = basis_dependence_demo(g, "A")
    z_expected = {"0": basis_state("000"), "1": basis_state("111")}
    s2 = 1 / math.sqrt(2)
    x_expected = {
        "+": tensor(PureState([s2, s2]), PureState([s2, 0, 0, s2])),
        "-": tensor(PureState([s2, -s2]), PureState([s2, 0, 0, -s2])),
    }
    for basis, expected_posts in (("Z", z_expected), ("X", x_expected)):
        for branch in demo[basis]:
            tag = f"ghz measure A in {basis}, outcome {branch.label}"
            out.append(_num(f"{tag}: probability", 0.5, branch.probability, t(1e-12)))
            same = branch.post_state is not None and equal_up_to_global_phase(branch.post_state, expected_posts[branch.label], tol=1e-12)
            out.append(_same(f"{tag}: post-state", True, same))
            if basis == "Z":
                out.append(_same(f"{tag}: B,C separable", True, branch.remaining_separable))
            else:
                out.append(_num(f"{tag}: C(B,C)", 1.0, branch.remaining_concurrence, t(1e-9)))

    # classification table
    bell_c = tensor(bell(), ket0())
    cases = [
        ("ghz", g, "BORROMEAN"),
        ("w", w3(), "THREE_HOPF"),
        ("product |000>", basis_state("000"), "UNLINKED"),
        ("bell(AB) x |0>_C", bell_c, "HOPF_PLUS_FREE(C)"),
        ("bell(AC) x |0>_B", permute_qubits(bell_c, [0, 2, 1]), "HOPF_PLUS_FREE(B)"),
        ("bell(BC) x |0>_A", permute_qubits(bell_c, [1, 2, 0]), "HOPF_PLUS_FREE(A)"),
    ]
    cases += [(f"chain a={a}", chain(a, math.sqrt(1 - a * a)), "CHAIN(B)") for a in CHAIN_GRID]
    for name, s, expected in cases:
        out.append(_same(f"classify {name}", expected, str(classify(s).link)))

    for n in (3, 4, 5, 8):
        out.append(_same(f"generalized ghz n={n}: Borromean signature", True, generalized_ghz_check(n)))
    return out

