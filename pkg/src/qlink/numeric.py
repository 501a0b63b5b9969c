"""Dense complex linear algebra for small qubit operators.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  Everything here
is a pure function of its arguments; tolerances are always explicit keyword
parameters.

The Hermitian eigensolver is a cyclic complex Jacobi method.  It is slow in
the asymptotic sense but accurate and simple, and every matrix qlink touches
is at most 32 x 32 (1024 x 1024 only for the generalized GHZ reductions, which
never go through it).
"""

import math

import mpmath
import numpy as np

from qlink.errors import NotHermitian, NotPSD, UnsupportedSize

MAX_JACOBI_DIM = 32
# largest size handled by the pure-Python kernel; bigger matrices use blocked numpy rotations
SCALAR_KERNEL_MAX = 12

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)


def as_matrix(m):
    """Coerce ``m`` to a 2-d complex array (no copy when already one)."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise UnsupportedSize(f"expected a 2-d matrix, got shape {a.shape}")
    return a


def dagger(m):
    return np.conj(as_matrix(m)).T


def kron(a, b):
    """Kronecker product; entry ``(i*b_rows + k, j*b_cols + l)`` is ``a[i,j]*b[k,l]``."""
    a = as_matrix(a)
    b = as_matrix(b)
    ra, ca = a.shape
    rb, cb = b.shape
    out = a[:, None, :, None] * b[None, :, None, :]
    return out.reshape(ra * rb, ca * cb)


def kron_all(*factors):
    out = np.ones((1, 1), dtype=complex)
    for f in factors:
        out = kron(out, f)
    return out


def hermitian_defect(m):
    """Largest entry of ``|m - m^dagger|``."""
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        return math.inf
    if m.size == 0:
        return 0.0
    return float(np.max(np.abs(m - dagger(m))))


def is_hermitian(m, eps=1e-9):
    return hermitian_defect(m) <= eps


def trace_is(m, t, eps=1e-9):
    return abs(np.trace(as_matrix(m)) - t) <= eps


def is_psd(m, eps=1e-9):
    if not is_hermitian(m, eps):
        return False
    vals, _ = hermitian_eig(m, tol=eps)
    return bool(vals[-1] >= -eps)


def _check_square(m):
    if m.shape[0] != m.shape[1]:
        raise UnsupportedSize(f"matrix must be square, got shape {m.shape}")


def hermitian_eig(m, tol=1e-9, off_tol=1e-12, max_sweeps=100):
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    m : array_like
        Square Hermitian matrix, at most 32 x 32.
    tol : float
        Largest tolerated entry of ``|m - m^dagger|``.
    off_tol : float
        Converged once the off-diagonal Frobenius norm falls below
        ``off_tol * ||m||_F``; one polishing sweep follows.
    max_sweeps : int
        Hard cap on the number of full sweeps.

    Returns
    -------
    eigenvalues : ndarray of float, shape (n,)
        Sorted in descending order.
    eigenvectors : ndarray of complex, shape (n, n)
        Unitary matrix whose columns are the matching eigenvectors, so that
        ``m == V @ diag(eigenvalues) @ V^dagger``.
    """
    a = np.array(as_matrix(m), dtype=complex)
    _check_square(a)
    n = a.shape[0]
    if n > MAX_JACOBI_DIM:
        raise UnsupportedSize(f"hermitian_eig supports at most {MAX_JACOBI_DIM}x{MAX_JACOBI_DIM}")
    defect = hermitian_defect(a)
    if defect > tol:
        raise NotHermitian(f"max |m - m^dagger| = {defect:.3g} exceeds {tol:.3g}")
    # symmetrize so rounding in the input cannot accumulate
    a = 0.5 * (a + dagger(a))
    v = np.eye(n, dtype=complex)
    scale = float(np.linalg.norm(a))
    if n <= 1 or scale == 0.0:
        vals = np.real(np.diag(a)).copy()
        return vals, v

    threshold = off_tol * scale
    negligible = 1e-30 * scale
    if n <= SCALAR_KERNEL_MAX:
        vals, v = _jacobi_scalar(a, threshold, negligible, max_sweeps)
    else:
        vals, v = _jacobi_blocked(a, threshold, negligible, max_sweeps)
    order = np.argsort(-vals, kind="stable")
    return vals[order], v[:, order]


def _jacobi_blocked(a, threshold, negligible, max_sweeps):
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    steps = _round_robin(n)
    converged = False
    for _ in range(max_sweeps):
        if converged:
            break
        off = math.sqrt(max(float(np.sum(np.abs(a) ** 2) - np.sum(np.abs(np.diag(a)) ** 2)), 0.0))
        # one extra sweep after reaching the threshold; convergence is quadratic
        converged = off < threshold
        for p, q in steps:
            apq = a[p, q]
            mag = np.abs(apq)
            keep = mag > negligible
            if not keep.all():
                p, q, apq, mag = p[keep], q[keep], apq[keep], mag[keep]
                if p.size == 0:
                    continue
            _rotate(a, v, p, q, apq, mag)
    return np.real(np.diag(a)).copy(), v


def _rotation(app, aqq, apq, mag):
    """(c, s, conj(phase)) for the rotation that annihilates a_pq."""
    # angle of the real problem after removing the phase of a_pq
    theta = (aqq - app) / (2.0 * mag)
    if abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
        if theta < 0.0:
            t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    return c, t * c, (apq / mag).conjugate()


def _jacobi_scalar(m, threshold, negligible, max_sweeps):
    """Row-cyclic Jacobi on nested lists of Python complex numbers.

    For the small matrices that dominate here this is several times faster
    than per-rotation numpy calls, whose fixed overhead exceeds the arithmetic.
    """
    n = m.shape[0]
    a = m.tolist()
    v = np.eye(n, dtype=complex).tolist()
    converged = False
    for _ in range(max_sweeps):
        if converged:
            break
        off = math.sqrt(sum(abs(a[i][j]) ** 2 for i in range(n) for j in range(n) if i != j))
        converged = off < threshold
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                mag = abs(apq)
                if mag <= negligible:
                    continue
                c, s, ph = _rotation(a[p][p].real, a[q][q].real, apq, mag)
                # G = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                g10 = -s * ph
                g11 = c * ph
                h10 = g10.conjugate()
                h11 = g11.conjugate()
                for row in a:
                    x, y = row[p], row[q]
                    row[p] = x * c + y * g10
                    row[q] = x * s + y * g11
                rp, rq = a[p], a[q]
                for k in range(n):
                    x, y = rp[k], rq[k]
                    rp[k] = x * c + y * h10
                    rq[k] = x * s + y * h11
                rp[q] = rq[p] = 0j
                rp[p] = complex(rp[p].real)
                rq[q] = complex(rq[q].real)
                for row in v:
                    x, y = row[p], row[q]
                    row[p] = x * c + y * g10
                    row[q] = x * s + y * g11
    return np.array([a[i][i].real for i in range(n)]), np.array(v, dtype=complex)


def _round_robin(n):
    """Cyclic pair ordering in which every step is a set of disjoint pairs.

    Returns a list of ``(p, q)`` index arrays with ``p < q``; each pair of
    ``range(n)`` appears exactly once per sweep.
    """
    players = list(range(n + (n % 2)))
    m = len(players)
    steps = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(x, y), max(x, y)) for x, y in pairs if max(x, y) < n]
        steps.append((np.array([x for x, _ in pairs]), np.array([y for _, y in pairs])))
        players = [players[0], players[-1]] + players[1:-1]
    return steps


def _rotate(a, v, p, q, apq, mag):
    """Annihilate a[p, q] for each of the disjoint pairs at once.

    Rotations on disjoint index pairs commute and leave each other's 2x2
    pivot blocks untouched, so this equals applying them one by one.
    """
    app = a[p, p].real
    aqq = a[q, q].real
    # rotation angle of the real problem after removing the phase of a_pq
    theta = (aqq - app) / (2.0 * mag)
    big = np.abs(theta) > 1e150
    safe = np.where(big, 1.0, theta)
    t = np.where(safe < 0, -1.0, 1.0) / (np.abs(safe) + np.sqrt(safe * safe + 1.0))
    t = np.where(big, 0.5 / np.where(big, theta, 1.0), t)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    phase_c = np.conj(apq / mag)
    # G = diag(1, conj(phase)) @ [[c, s], [-s, c]] in each (p, q) plane
    g10 = -s * phase_c
    g11 = c * phase_c

    col_p = a[:, p]
    col_q = a[:, q]
    a[:, p] = col_p * c + col_q * g10
    a[:, q] = col_p * s + col_q * g11
    row_p = a[p, :]
    row_q = a[q, :]
    a[p, :] = row_p * c[:, None] + row_q * np.conj(g10)[:, None]
    a[q, :] = row_p * s[:, None] + row_q * np.conj(g11)[:, None]
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real

    vp = v[:, p]
    vq = v[:, q]
    v[:, p] = vp * c + vq * g10
    v[:, q] = vp * s + vq * g11


def matrix_sqrt_psd(m, tol=1e-9, floor=None):
    """Principal square root of a Hermitian positive semidefinite matrix.

    An eigenvalue below ``-tol`` raises :class:`NotPSD`.  Eigenvalues at or
    below ``floor`` (default ``tol``) are treated as exact zeros, which keeps
    rounding noise from being amplified by the square root.
    """
    if floor is None:
        floor = tol
    vals, vecs = hermitian_eig(m, tol=tol)
    if vals.size and vals[-1] < -tol:
        raise NotPSD(f"smallest eigenvalue {vals[-1]:.3g} is below -{tol:.3g}")
    roots = np.where(vals > floor, np.sqrt(np.clip(vals, 0.0, None)), 0.0)
    r = (vecs * roots) @ dagger(vecs)
    return 0.5 * (r + dagger(r))


def charpoly_coefficients(m, dps=60):
    """Coefficients ``[1, c_{n-1}, ..., c_0]`` of ``det(x I - m)``.

    Faddeev-LeVerrier recursion carried out in ``mpmath`` at ``dps`` digits.
    Float entries convert to ``mpf`` exactly, so for the small matrices used
    here the coefficients are those of the float matrix itself.
    """
    with mpmath.workdps(dps):
        A = _to_mp(m)
        n = A.rows
        eye = mpmath.eye(n)
        coeffs = [mpmath.mpc(1)]
        M = mpmath.zeros(n, n)
        c = mpmath.mpc(1)
        for k in range(1, n + 1):
            M = A * M + c * eye
            AM = A * M
            c = -sum(AM[i, i] for i in range(n)) / k
            coeffs.append(c)
    return coeffs


def charpoly_eigenvalues_oracle(m, dps=60):
    """All eigenvalues of a matrix up to 4 x 4, as roots of its characteristic polynomial.

    Independent of :func:`hermitian_eig`: no rotations or similarity
    transforms are involved, only the polynomial coefficients and a
    high-precision root finder.
    """
    with mpmath.workdps(dps):
        return [complex(r) for r in charpoly_roots_mp(m, dps)]


def charpoly_roots_mp(m, dps=60):
    """Like :func:`charpoly_eigenvalues_oracle` but returns ``mpc`` roots."""
    with mpmath.workdps(dps):
        a = _to_mp(m)
    n = a.rows
    if n > 4:
        raise UnsupportedSize("charpoly oracle supports matrices up to 4x4")
    if n == 0:
        return []
    coeffs = charpoly_coefficients(a, dps=dps)
    with mpmath.workdps(dps):
        # strip exact zero roots first; polyroots struggles with them
        zeros = 0
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
            zeros += 1
        roots = []
        if len(coeffs) > 1:
            roots = mpmath.polyroots(coeffs, maxsteps=500, extraprec=4 * dps, error=False)
        return list(roots) + [mpmath.mpc(0)] * zeros


def _to_mp(m):
    """numpy or nested-list matrix to an ``mpmath.matrix`` (exact for float entries)."""
    if isinstance(m, mpmath.matrix):
        if m.rows != m.cols:
            raise UnsupportedSize(f"matrix must be square, got {m.rows}x{m.cols}")
        return m
    a = as_matrix(m)
    _check_square(a)
    return mpmath.matrix([[mpmath.mpc(complex(x)) for x in row] for row in a])
