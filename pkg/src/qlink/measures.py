"""Two-qubit separability tests: Wootters concurrence and the Peres PPT criterion.

Also the pure-state test across an arbitrary cut, via the purity of the
reduced state (a pure state is a product across a cut iff either side's
reduction is pure).
"""

from dataclasses import dataclass

import mpmath
import numpy as np

from qlink.density import partial_transpose, purity, reduced_from_pure
from qlink.errors import NumericalFailure, UnsupportedSize
from qlink.numeric import SIGMA_Y, charpoly_roots_mp, dagger, hermitian_eig, kron, matrix_sqrt_psd

YY = kron(SIGMA_Y, SIGMA_Y)


@dataclass(frozen=True, eq=False)
class ConcurrenceReport:
    lambdas: tuple
    concurrence: float
    spin_flipped: np.ndarray
    tol: float

    @property
    def separable(self):
        return self.concurrence <= self.tol


@dataclass(frozen=True)
class PptReport:
    min_eigenvalue: float
    separable: bool
    tol: float


def _require_two_qubits(rho):
    if rho.num_qubits != 2:
        raise UnsupportedSize(f"expected a 2-qubit operator, got {rho.num_qubits} qubits")


def spin_flip(rho):
    """(sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)."""
    _require_two_qubits(rho)
    return YY @ np.conj(rho.matrix) @ YY


def concurrence(rho, tol=1e-9, rank_tol=1e-12):
    """Wootters concurrence of a 2-qubit density operator.

    The ``lambdas`` are the square roots of the eigenvalues of
    ``rho_tilde @ rho`` in decreasing order.  They are obtained without a
    non-Hermitian eigensolver: with ``S = sqrt(rho)``,
    ``S rho_tilde S = N N^dagger`` where ``N = S (Y(x)Y) S*``, so the lambdas
    are the singular values of ``N``.  Those are read off the Hermitian
    dilation ``[[0, N], [N^dagger, 0]]``, whose spectrum is ``+-lambda_i``;
    this keeps tiny lambdas accurate instead of taking square roots of
    rounding noise.

    Parameters
    ----------
    rho : DensityOperator
        Two-qubit state.
    tol : float
        The state is reported separable when the concurrence is at most
        ``tol``.
    rank_tol : float
        Eigenvalues of ``rho`` below this are treated as exact zeros when
        forming ``sqrt(rho)``.

    Returns
    -------
    ConcurrenceReport
    """
    _require_two_qubits(rho)
    rho_tilde = spin_flip(rho)
    root = matrix_sqrt_psd(rho.matrix, tol=1e-9, floor=rank_tol)
    n_mat = root @ YY @ np.conj(root)
    dilation = np.zeros((8, 8), dtype=complex)
    dilation[:4, 4:] = n_mat
    dilation[4:, :4] = dagger(n_mat)
    vals, _ = hermitian_eig(dilation, tol=1e-9)
    top = vals[:4]
    if top[-1] < -10 * tol:
        raise NumericalFailure(f"negative singular value estimate {top[-1]:.3g}")
    lambdas = tuple(float(x) for x in np.clip(top, 0.0, None))
    c = max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3])
    return ConcurrenceReport(lambdas=lambdas, concurrence=c, spin_flipped=rho_tilde, tol=tol)


def lambdas_oracle(rho, dps=60):
    """Reference lambdas straight from the definition, for testing :func:`concurrence`.

    ``rho_tilde @ rho`` is formed in ``mpmath`` at ``dps`` digits (exact for
    float input, since ``Y(x)Y`` only permutes entries and flips signs), its
    eigenvalues come from the characteristic polynomial, and the square
    roots of their clamped real parts are returned in decreasing order.
    """
    _require_two_qubits(rho)
    with mpmath.workdps(dps):
        r = mpmath.matrix([[mpmath.mpc(complex(x)) for x in row] for row in rho.matrix])
        yy = mpmath.matrix(YY.real.tolist())
        conj = mpmath.matrix([[mpmath.conj(r[i, j]) for j in range(4)] for i in range(4)])
        prod = yy * conj * yy * r
        roots = charpoly_roots_mp(prod, dps=dps)
        lams = sorted((mpmath.sqrt(max(mpmath.re(z), 0)) for z in roots), reverse=True)
        return tuple(float(x) for x in lams)


def ppt_separable(rho, tol=1e-9, subsystem="B"):
    """Peres criterion: separable iff the partial transpose has no negative eigenvalue."""
    _require_two_qubits(rho)
    vals, _ = hermitian_eig(partial_transpose(rho, subsystem), tol=1e-9)
    lo = float(vals[-1])
    return PptReport(min_eigenvalue=lo, separable=lo >= -tol, tol=tol)


def pure_bipartite_separable(s, cut, tol=1e-9):
    """True iff ``s`` is a product state across ``cut`` versus the remaining qubits."""
    return purity(reduced_from_pure(s, cut)) >= 1.0 - tol
