import math

import numpy as np
import pytest

from qlink.density import DensityOperator, from_pure, mixture
from qlink.qstate import PureState, basis_state, bell, chain, ghz, ket0, permute_qubits, tensor, w3


def random_pure(rng, n):
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return PureState(v / np.linalg.norm(v))


def random_unitary(rng, d=2):
    z = (rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_mixture(rng, rank=2, product_fraction=0.0):
    """Mixture of ``rank`` random 2-qubit pure states with random weights.

    Each component is, with probability ``product_fraction``, a product of
    two random qubits instead of a random 2-qubit state.
    """
    weights = rng.random(rank)
    weights /= weights.sum()
    parts = []
    for w in weights:
        if rng.random() < product_fraction:
            s = tensor(random_pure(rng, 1), random_pure(rng, 1))
        else:
            s = random_pure(rng, 2)
        parts.append((w, from_pure(s)))
    return mixture(parts)


def random_product(rng, n=3):
    return tensor(*[random_pure(rng, 1) for _ in range(n)])


def corpus():
    """Named 3-qubit fixture states with their expected link class."""
    bc = tensor(bell(), ket0())
    states = {
        "ghz": (ghz(3), "BORROMEAN"),
        "w": (w3(), "THREE_HOPF"),
        "product": (basis_state("000"), "UNLINKED"),
        "bell_AB": (bc, "HOPF_PLUS_FREE(C)"),
        "bell_AC": (permute_qubits(bc, [0, 2, 1]), "HOPF_PLUS_FREE(B)"),
        "bell_BC": (permute_qubits(bc, [1, 2, 0]), "HOPF_PLUS_FREE(A)"),
    }
    for k in range(1, 10):
        a = k / 10
        states[f"chain_{k}"] = (chain(a, math.sqrt(1 - a * a)), "CHAIN(B)")
    return states


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


def dm(matrix):
    return DensityOperator(np.asarray(matrix, dtype=complex))


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[number])
