"""Projective measurement of pure states (Born rule plus collapse).

Includes the basis-dependence demonstration: measuring one qubit of GHZ in
the Z basis leaves the other two in a product state, while measuring it in
the X basis leaves them maximally entangled.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from qlink.density import reduced_from_pure
from qlink.errors import BadBasisVector, DimensionMismatch, IncompleteProjectors
from qlink.measures import concurrence, pure_bipartite_separable
from qlink.numeric import dagger, hermitian_defect, kron_all
from qlink.qstate import PureState, qubit_index

ZERO_PROBABILITY = 1e-12

_S2 = 1 / math.sqrt(2)

BASES = {
    "Z": (("0", np.array([1, 0], dtype=complex)), ("1", np.array([0, 1], dtype=complex))),
    "X": (("+", np.array([_S2, _S2], dtype=complex)), ("-", np.array([_S2, -_S2], dtype=complex))),
}


@dataclass(frozen=True, eq=False)
class ProjectorSet:
    labels: tuple
    projectors: tuple
    tol: float = 1e-9

    def __post_init__(self):
        if len(self.labels) != len(self.projectors) or not self.projectors:
            raise IncompleteProjectors("need one label per projector")
        dim = self.projectors[0].shape[0]
        total = np.zeros((dim, dim), dtype=complex)
        for p in self.projectors:
            if p.shape != (dim, dim):
                raise DimensionMismatch("projectors differ in shape")
            if hermitian_defect(p) > self.tol or np.max(np.abs(p @ p - p)) > self.tol:
                raise IncompleteProjectors("operator is not an orthogonal projector")
            total = total + p
        if np.max(np.abs(total - np.eye(dim))) > self.tol:
            raise IncompleteProjectors("projectors do not sum to the identity")

    @property
    def dim(self):
        return self.projectors[0].shape[0]


@dataclass(frozen=True, eq=False)
class MeasurementOutcome:
    """One outcome; ``post_state`` is None when the outcome has (numerically) zero probability."""

    label: str
    probability: float
    post_state: PureState = field(default=None)


def single_qubit_projectors(n, target, basis="Z", tol=1e-9):
    """Two projectors ``|u><u|`` and ``|u_perp><u_perp|`` on qubit ``target`` of ``n``.

    ``basis`` is "Z", "X", or a normalized 2-vector ``u``.
    """
    t = qubit_index(target, n)
    if isinstance(basis, str):
        try:
            (l0, u), (l1, u_perp) = BASES[basis.upper()]
        except KeyError:
            raise BadBasisVector(f"unknown basis {basis!r}") from None
    else:
        u = np.asarray(basis, dtype=complex).reshape(-1)
        if u.size != 2 or abs(np.linalg.norm(u) - 1.0) > tol:
            raise BadBasisVector(f"custom basis vector must be a normalized 2-vector, got {basis!r}")
        u_perp = np.array([-np.conj(u[1]), np.conj(u[0])])
        l0, l1 = "u", "u_perp"
    eye = np.eye(2, dtype=complex)
    projectors = []
    for v in (u, u_perp):
        local = np.outer(v, np.conj(v))
        factors = [eye] * n
        factors[t] = local
        projectors.append(kron_all(*factors))
    return ProjectorSet(labels=(l0, l1), projectors=tuple(projectors), tol=tol)


def measure(s, ps):
    """Born-rule probabilities and normalized post-measurement states, one per projector."""
    if ps.dim != s.dim:
        raise DimensionMismatch(f"state dimension {s.dim} vs projector dimension {ps.dim}")
    psi = s.amplitudes
    outcomes = []
    for label, p in zip(ps.labels, ps.projectors):
        projected = p @ psi
        prob = float(np.real(np.vdot(psi, projected)))
        prob = min(max(prob, 0.0), 1.0)
        post = None
        if prob > ZERO_PROBABILITY:
            post = PureState(projected / math.sqrt(prob), tol=1e-6)
        outcomes.append(MeasurementOutcome(label=label, probability=prob, post_state=post))
    return outcomes


def post_measurement_mixture(s, ps):
    """``sum_m P_m rho P_m`` for ``rho = |s><s|``; the non-selective update."""
    rho = np.outer(s.amplitudes, np.conj(s.amplitudes))
    return sum(p @ rho @ dagger(p) for p in ps.projectors)


@dataclass(frozen=True, eq=False)
class BranchReport:
    label: str
    probability: float
    post_state: PureState
    remaining_separable: bool
    remaining_concurrence: float


def _remaining_pair(post, target, tol):
    n = post.num_qubits
    others = [q for q in range(n) if q != target]
    rho = reduced_from_pure(post, others)
    c = concurrence(rho, tol=tol).concurrence
    # the measured qubit factors out, so the remaining pair is pure
    separable = pure_bipartite_separable(post, others[0], tol=tol)
    return separable, c


def basis_dependence_demo(s, target="A", tol=1e-9, bases=("Z", "X")):
    """Measure ``target`` in each basis and report whether the other two qubits stay entangled.

    Returns a dict mapping basis name to a list of :class:`BranchReport`.
    """
    if s.num_qubits != 3:
        raise DimensionMismatch("basis dependence demo needs a 3-qubit state")
    t = qubit_index(target, 3)
    report = {}
    for basis in bases:
        branches = []
        for outcome in measure(s, single_qubit_projectors(3, t, basis)):
            if outcome.post_state is None:
                branches.append(BranchReport(outcome.label, outcome.probability, None, True, 0.0))
                continue
            separable, c = _remaining_pair(outcome.post_state, t, tol)
            branches.append(BranchReport(outcome.label, outcome.probability, outcome.post_state, separable, c))
        report[basis.upper() if isinstance(basis, str) else "custom"] = branches
    return report
