"""Pure qubit states.

Index convention, used by every qlink module: qubit A (the leftmost label in
``|psi_A psi_B psi_C>``) is the most significant bit, so ``|abc>`` sits at
index ``4a + 2b + c``.  Qubits are addressed either by position (0, 1, ...)
or by letter ("A", "B", ...).
"""

import json
import math
import string
from dataclasses import dataclass

import numpy as np

from qlink.errors import BadLabel, BadParameters, DimensionMismatch, MalformedData, NotNormalized
from qlink.numeric import kron

MAX_QUBITS = 10
NORM_TOL = 1e-9

LABELS = string.ascii_uppercase


def qubit_label(index):
    return LABELS[index]


def qubit_index(label, num_qubits):
    """Resolve a qubit position or letter to a 0-based index."""
    if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
        idx = int(label)
    elif isinstance(label, str) and len(label) == 1 and label.upper() in LABELS:
        idx = LABELS.index(label.upper())
    else:
        raise BadLabel(f"not a qubit label: {label!r}")
    if not 0 <= idx < num_qubits:
        raise BadLabel(f"qubit {label!r} out of range for {num_qubits} qubits")
    return idx


def qubit_indices(labels, num_qubits):
    """Resolve one label, a string of letters ("BC"), or an iterable of labels to sorted indices."""
    if isinstance(labels, (int, np.integer)) or (isinstance(labels, str) and len(labels) == 1):
        labels = [labels]
    elif isinstance(labels, str):
        labels = list(labels.replace(",", "").replace(" ", ""))
    return sorted({qubit_index(q, num_qubits) for q in labels})


@dataclass(frozen=True, eq=False)
class PureState:
    """A unit vector of ``2**num_qubits`` complex amplitudes."""

    num_qubits: int
    amplitudes: np.ndarray

    def __init__(self, amplitudes, num_qubits=None, tol=NORM_TOL):
        amps = np.array(amplitudes, dtype=complex).reshape(-1)
        n = int(round(math.log2(amps.size))) if amps.size else 0
        if amps.size < 2 or 2**n != amps.size:
            raise DimensionMismatch(f"amplitude count {amps.size} is not 2**n with n >= 1")
        if num_qubits is not None and num_qubits != n:
            raise DimensionMismatch(f"{amps.size} amplitudes do not describe {num_qubits} qubits")
        if n > MAX_QUBITS:
            raise DimensionMismatch(f"at most {MAX_QUBITS} qubits supported")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > tol:
            raise NotNormalized(f"state norm is {norm!r}, expected 1")
        amps.setflags(write=False)
        object.__setattr__(self, "num_qubits", n)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self):
        return self.amplitudes.size

    def norm(self):
        return float(np.linalg.norm(self.amplitudes))

    def __repr__(self):
        return f"PureState(num_qubits={self.num_qubits}, amplitudes={self.amplitudes!r})"

    def to_dict(self):
        return {
            "num_qubits": self.num_qubits,
            "amplitudes": [[float(z.real), float(z.imag)] for z in self.amplitudes],
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data):
        try:
            amps = [complex(re, im) for re, im in data["amplitudes"]]
            n = data["num_qubits"]
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedData(f"not a serialized PureState: {exc!r}") from None
        return cls(amps, num_qubits=n)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(load_json(text))


def load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedData(f"invalid JSON: {exc}") from None


def normalized(amplitudes):
    """Build a state from an arbitrary nonzero vector by rescaling it."""
    amps = np.asarray(amplitudes, dtype=complex)
    norm = np.linalg.norm(amps)
    if norm == 0:
        raise BadParameters("cannot normalize the zero vector")
    return PureState(amps / norm)


def basis_state(bits):
    """Computational basis state from a bit string such as ``"010"``."""
    amps = np.zeros(2 ** len(bits), dtype=complex)
    amps[int(bits, 2)] = 1.0
    return PureState(amps)


_S2 = 1 / math.sqrt(2)


def ket0():
    return PureState([1, 0])


def ket1():
    return PureState([0, 1])


def plus():
    return PureState([_S2, _S2])


def minus():
    return PureState([_S2, -_S2])


def bell():
    """(|00> + |11>)/sqrt(2)."""
    return PureState([_S2, 0, 0, _S2])


def ghz(n=3):
    if not isinstance(n, (int, np.integer)) or n < 2 or n > MAX_QUBITS:
        raise BadParameters(f"ghz needs 2 <= n <= {MAX_QUBITS}, got {n!r}")
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = amps[-1] = _S2
    return PureState(amps)


def w3():
    s3 = 1 / math.sqrt(3)
    amps = np.zeros(8, dtype=complex)
    amps[[1, 2, 4]] = s3
    return PureState(amps)


def chain(a, b, tol=NORM_TOL):
    """``a|000> + b|+1+>`` for real ``a, b`` with ``a**2 + b**2 = 1``."""
    if isinstance(a, complex) or isinstance(b, complex):
        raise BadParameters("chain parameters must be real")
    a = float(a)
    b = float(b)
    if abs(a * a + b * b - 1.0) > tol:
        raise BadParameters(f"chain needs a^2 + b^2 = 1, got {a * a + b * b!r}")
    amps = np.zeros(8, dtype=complex)
    amps[0] = a
    amps[[2, 3, 6, 7]] = b / 2
    return PureState(amps, tol=tol)


_NAMED = {
    "ket0": ket0,
    "ket1": ket1,
    "plus": plus,
    "minus": minus,
    "bell": bell,
    "ghz": ghz,
    "w3": w3,
    "chain": chain,
}


def standard_state(name, *params):
    """Look up one of the named states: ket0, ket1, plus, minus, bell, ghz(n), w3, chain(a, b)."""
    try:
        factory = _NAMED[name]
    except KeyError:
        raise BadParameters(f"unknown standard state {name!r}") from None
    try:
        return factory(*params)
    except TypeError as exc:
        raise BadParameters(f"bad parameters for {name}: {exc}") from None


def tensor(*states):
    """Tensor product in argument order; the first state holds the most significant qubits."""
    if len(states) == 1 and isinstance(states[0], (list, tuple)):
        states = tuple(states[0])
    if not states:
        raise BadParameters("tensor needs at least one state")
    amps = np.ones((1, 1), dtype=complex)
    for s in states:
        amps = kron(amps, s.amplitudes.reshape(-1, 1))
    return PureState(amps.reshape(-1))


def inner(a, b):
    """<a|b>, conjugate-linear in the first argument."""
    if a.num_qubits != b.num_qubits:
        raise DimensionMismatch(f"{a.num_qubits} vs {b.num_qubits} qubits")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def equal_up_to_global_phase(a, b, tol=1e-9):
    return abs(inner(a, b)) >= 1.0 - tol


def permute_qubits(s, perm):
    """Reorder qubits: qubit ``i`` of ``s`` becomes qubit ``perm[i]`` of the result."""
    n = s.num_qubits
    if sorted(perm) != list(range(n)):
        raise BadParameters(f"{perm!r} is not a permutation of {n} qubits")
    tensor_form = s.amplitudes.reshape((2,) * n)
    # result axis perm[i] takes input axis i
    axes = [0] * n
    for i, target in enumerate(perm):
        axes[target] = i
    return PureState(np.transpose(tensor_form, axes).reshape(-1))


def apply_local(s, unitaries):
    """Apply one 2x2 matrix per qubit (``U_A (x) U_B (x) ...``) to ``s``."""
    n = s.num_qubits
    if len(unitaries) != n:
        raise DimensionMismatch(f"need {n} single-qubit operators, got {len(unitaries)}")
    psi = s.amplitudes.reshape((2,) * n)
    for axis, u in enumerate(unitaries):
        u = np.asarray(u, dtype=complex)
        psi = np.moveaxis(np.tensordot(u, psi, axes=([1], [axis])), 0, axis)
    return PureState(psi.reshape(-1))
