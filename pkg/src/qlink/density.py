"""Density operators: construction, mixtures, partial trace and partial transpose."""

import json
import math
from dataclasses import dataclass

import numpy as np

from qlink.errors import (
    BadSubset,
    BadWeights,
    DimensionMismatch,
    MalformedData,
    NotDensityOperator,
    UnsupportedSize,
)
from qlink.numeric import MAX_JACOBI_DIM, as_matrix, dagger, hermitian_defect, hermitian_eig
from qlink.qstate import load_json, qubit_index, qubit_indices

VALIDATION_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Hermitian, positive semidefinite, unit-trace operator on ``num_qubits`` qubits.

    Positivity is checked with the Jacobi eigensolver, so it is only verified
    for operators of at most 5 qubits; larger ones are checked for
    Hermiticity and trace only.
    """

    num_qubits: int
    matrix: np.ndarray

    def __init__(self, matrix, tol=VALIDATION_TOL, *, _validate=True):
        m = np.array(as_matrix(matrix), dtype=complex)
        dim = m.shape[0]
        n = int(round(math.log2(dim))) if dim else 0
        if m.shape[0] != m.shape[1] or dim < 2 or 2**n != dim:
            raise DimensionMismatch(f"shape {m.shape} is not 2**n x 2**n")
        if _validate:
            defect = hermitian_defect(m)
            if defect > tol:
                raise NotDensityOperator(f"not Hermitian (defect {defect:.3g})")
            tr = np.trace(m)
            if abs(tr - 1.0) > tol:
                raise NotDensityOperator(f"trace is {tr!r}, expected 1")
            if dim <= MAX_JACOBI_DIM:
                vals, _ = hermitian_eig(m, tol=tol)
                if vals[-1] < -tol:
                    raise NotDensityOperator(f"negative eigenvalue {vals[-1]:.3g}")
        m.setflags(write=False)
        object.__setattr__(self, "num_qubits", n)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def _trusted(cls, matrix):
        return cls(matrix, _validate=False)

    @property
    def dim(self):
        return self.matrix.shape[0]

    def __repr__(self):
        return f"DensityOperator(num_qubits={self.num_qubits}, matrix={self.matrix!r})"

    def to_dict(self):
        return {
            "num_qubits": self.num_qubits,
            "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in self.matrix],
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data, tol=VALIDATION_TOL):
        try:
            m = np.array([[complex(re, im) for re, im in row] for row in data["matrix"]], dtype=complex)
            n = data["num_qubits"]
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedData(f"not a serialized DensityOperator: {exc!r}") from None
        rho = cls(m, tol=tol)
        if rho.num_qubits != n:
            raise DimensionMismatch("num_qubits does not match the matrix size")
        return rho

    @classmethod
    def from_json(cls, text, tol=VALIDATION_TOL):
        return cls.from_dict(load_json(text), tol=tol)


def from_pure(s):
    amps = s.amplitudes
    m = np.outer(amps, np.conj(amps))
    return DensityOperator._trusted(m)


def mixture(parts, tol=VALIDATION_TOL):
    """Ensemble average ``sum_i p_i rho_i`` of ``(weight, DensityOperator)`` pairs."""
    parts = list(parts)
    if not parts:
        raise BadWeights("empty ensemble")
    weights = np.array([float(w) for w, _ in parts])
    if np.any(weights < 0) or abs(weights.sum() - 1.0) > tol:
        raise BadWeights(f"weights must be non-negative and sum to 1, got {weights.tolist()}")
    dims = {rho.dim for _, rho in parts}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed operator dimensions {sorted(dims)}")
    total = sum(w * rho.matrix for w, (_, rho) in zip(weights, parts))
    return DensityOperator(total, tol=tol)


def _traced_positions(traced_out, n):
    positions = set(qubit_indices(traced_out, n))
    if not positions or len(positions) >= n:
        raise BadSubset(f"must trace out a proper nonempty subset of {n} qubits, got {sorted(positions)}")
    return positions


def partial_trace(rho, traced_out):
    """Reduced operator on the qubits not in ``traced_out``, kept in their original order."""
    n = rho.num_qubits
    gone = _traced_positions(traced_out, n)
    kept = [q for q in range(n) if q not in gone]
    t = rho.matrix.reshape((2,) * (2 * n))
    letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    row = list(letters[:n])
    col = list(letters[n : 2 * n])
    for q in gone:
        col[q] = row[q]
    out = "".join(row[q] for q in kept) + "".join(col[q] for q in kept)
    reduced = np.einsum("".join(row) + "".join(col) + "->" + out, t)
    d = 2 ** len(kept)
    return DensityOperator._trusted(reduced.reshape(d, d))


def reduced_from_pure(s, keep):
    """Reduced operator of a pure state on the qubits in ``keep`` (kept in ascending order).

    Equivalent to ``partial_trace(from_pure(s), complement)`` without ever
    forming the full ``2**n x 2**n`` matrix.
    """
    n = s.num_qubits
    kept = qubit_indices(keep, n)
    if not kept or len(kept) >= n:
        raise BadSubset(f"must keep a proper nonempty subset of {n} qubits")
    rest = [q for q in range(n) if q not in kept]
    psi = np.transpose(s.amplitudes.reshape((2,) * n), kept + rest).reshape(2 ** len(kept), -1)
    return DensityOperator._trusted(psi @ dagger(psi))


def partial_transpose(rho, subsystem="B"):
    """Transpose one qubit of a 2-qubit operator; returns a plain matrix."""
    if rho.num_qubits != 2:
        raise UnsupportedSize(f"partial transpose is defined here for 2 qubits, got {rho.num_qubits}")
    which = qubit_index(subsystem, 2)
    t = rho.matrix.reshape(2, 2, 2, 2)  # (i, k, j, l) for rho[(i,k),(j,l)]
    if which == 1:
        t = t.transpose(0, 3, 2, 1)
    else:
        t = t.transpose(2, 1, 0, 3)
    return np.ascontiguousarray(t.reshape(4, 4))


def purity(rho):
    m = rho.matrix
    # tr(m m) for Hermitian m is the squared Frobenius norm
    return float(np.sum(np.abs(m) ** 2))
