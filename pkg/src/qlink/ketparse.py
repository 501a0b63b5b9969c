"""Parser for bra-ket state expressions such as ``1/sqrt(2)(|000> + |111>)``.

Grammar (whitespace is ignored outside kets)::

    expr    := ['+' | '-'] term (('+' | '-') term)*
    term    := [coeff ['*']] factor ([('*' | '⊗')] factor)* ('/' scalar)*
    factor  := ket | '(' expr ')'
    coeff   := scalar (('*' | '/') scalar)*
    scalar  := number ['i'] | 'i' | 'sqrt' '(' number ')' | '√' number
    ket     := '|' symbol+ '>'          symbol in {0, 1, +, -}

Adjacent factors in a term are tensored.  Inside ``|...>`` the characters
``+`` and ``-`` are basis labels; outside they are operators.  The Unicode
forms ``⟩``, ``−`` and ``√`` are accepted as aliases.
"""

import cmath
import math
import re
from dataclasses import dataclass

import numpy as np

from qlink.errors import KetSyntaxError, MixedArity, NotNormalized, ZeroVector
from qlink.qstate import MAX_QUBITS, PureState

_S2 = 1 / math.sqrt(2)
_SYMBOLS = {
    "0": np.array([1, 0], dtype=complex),
    "1": np.array([0, 1], dtype=complex),
    "+": np.array([_S2, _S2], dtype=complex),
    "-": np.array([_S2, -_S2], dtype=complex),
}
_ALIASES = {"⟩": ">", "−": "-", "〉": ">"}
_DIGITS = "0123456789"
_NUMBER = re.compile(r"\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?", re.ASCII)


@dataclass(frozen=True)
class Token:
    kind: str  # num, ket, sqrt, i, or the punctuation character itself
    text: str
    pos: int


def tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = _ALIASES.get(text[pos], text[pos])
        if ch.isspace():
            pos += 1
        elif ch == "|":
            start = pos
            pos += 1
            symbols = []
            while pos < n and _ALIASES.get(text[pos], text[pos]) != ">":
                sym = _ALIASES.get(text[pos], text[pos])
                if sym not in _SYMBOLS:
                    raise KetSyntaxError(f"invalid ket symbol {text[pos]!r}", pos)
                symbols.append(sym)
                pos += 1
            if pos >= n:
                raise KetSyntaxError("unterminated ket, expected '>'", pos)
            if not symbols:
                raise KetSyntaxError("empty ket", pos)
            tokens.append(Token("ket", "".join(symbols), start))
            pos += 1
        elif ch in _DIGITS or (ch == "." and pos + 1 < n and text[pos + 1] in _DIGITS):
            m = _NUMBER.match(text, pos)
            tokens.append(Token("num", m.group(), pos))
            pos = m.end()
        elif text.startswith("sqrt", pos):
            tokens.append(Token("sqrt", "sqrt", pos))
            pos += 4
        elif ch == "√":
            tokens.append(Token("sqrt", ch, pos))
            pos += 1
        elif ch == "i":
            tokens.append(Token("i", ch, pos))
            pos += 1
        elif ch in "+-*/()⊗":
            tokens.append(Token(ch, ch, pos))
            pos += 1
        elif ch == ">":
            raise KetSyntaxError("'>' without a matching '|'", pos)
        else:
            raise KetSyntaxError(f"unexpected character {text[pos]!r}", pos)
    tokens.append(Token("end", "", n))
    return tokens


# AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Ket:
    symbols: str
    pos: int

    @property
    def arity(self):
        return len(self.symbols)


@dataclass(frozen=True)
class Tensor:
    factors: tuple

    @property
    def arity(self):
        return sum(f.arity for f in self.factors)


@dataclass(frozen=True)
class Scaled:
    coeff: complex
    body: object

    @property
    def arity(self):
        return self.body.arity


@dataclass(frozen=True)
class Sum:
    """Signed terms: a tuple of ``(sign, node)`` with sign in {+1, -1}."""

    terms: tuple

    @property
    def arity(self):
        return self.terms[0][1].arity


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind):
        if self.tok.kind != kind:
            raise KetSyntaxError(f"expected {kind!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)
        return self.advance()

    def parse(self):
        if self.tok.kind == "end":
            raise KetSyntaxError("empty expression", 0)
        node = self.expr()
        if self.tok.kind != "end":
            raise KetSyntaxError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self):
        start = self.tok.pos
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
        terms = [(sign, self.term())]
        while self.tok.kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
            terms.append((sign, self.term()))
        arity = terms[0][1].arity
        for _, t in terms[1:]:
            if t.arity != arity:
                raise MixedArity(f"terms act on {arity} and {t.arity} qubits (expression at position {start})")
        return Sum(tuple(terms))

    def term(self):
        coeff = None
        if self.tok.kind in ("num", "sqrt", "i"):
            coeff = self.coeff()
            if self.tok.kind == "*":
                self.advance()
        factors = [self.factor()]
        while True:
            if self.tok.kind in ("*", "⊗"):
                self.advance()
                factors.append(self.factor())
            elif self.tok.kind in ("ket", "("):
                factors.append(self.factor())
            else:
                break
        body = factors[0] if len(factors) == 1 else Tensor(tuple(factors))
        if body.arity > MAX_QUBITS:
            raise KetSyntaxError(f"more than {MAX_QUBITS} qubits in one term", self.tok.pos)
        # trailing divisors, as in (|01> + |10>)/sqrt(2)
        while self.tok.kind == "/":
            op = self.advance()
            coeff = self._divide(1 if coeff is None else coeff, self.scalar(), op)
        return body if coeff is None else Scaled(coeff, body)

    def factor(self):
        t = self.tok
        if t.kind == "ket":
            self.advance()
            if len(t.text) > MAX_QUBITS:
                raise KetSyntaxError(f"ket has more than {MAX_QUBITS} qubits", t.pos)
            return Ket(t.text, t.pos)
        if t.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        raise KetSyntaxError(f"expected a ket or '(', found {t.text or 'end of input'!r}", t.pos)

    def coeff(self):
        value = self.scalar()
        while self.tok.kind in ("*", "/"):
            nxt = self.tokens[self.i + 1]
            if nxt.kind not in ("num", "sqrt", "i"):
                break
            op = self.advance()
            rhs = self.scalar()
            if op.kind == "*":
                value = value * rhs
            else:
                value = self._divide(value, rhs, op)
        if not cmath.isfinite(value):
            raise KetSyntaxError("coefficient out of range", self.tok.pos)
        return value

    def _divide(self, value, rhs, op):
        if rhs == 0:
            raise KetSyntaxError("division by zero", op.pos)
        value = value / rhs
        if not cmath.isfinite(value):
            raise KetSyntaxError("coefficient out of range", op.pos)
        return value

    def scalar(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            value = complex(float(t.text))
            if not cmath.isfinite(value):
                raise KetSyntaxError("number out of range", t.pos)
            if self.tok.kind == "i":
                self.advance()
                value *= 1j
            return value
        if t.kind == "i":
            self.advance()
            return 1j
        if t.kind == "sqrt":
            self.advance()
            if t.text == "√" and self.tok.kind == "num":
                arg = float(self.advance().text)
            else:
                self.expect("(")
                arg = float(self.expect("num").text)
                self.expect(")")
            if not math.isfinite(arg):
                raise KetSyntaxError("number out of range", t.pos)
            return complex(math.sqrt(arg))
        raise KetSyntaxError(f"expected a number, found {t.text or 'end of input'!r}", t.pos)


def parse(text):
    """Parse ``text`` into an expression tree.

    Raises
    ------
    KetSyntaxError
        With the 0-based ``position`` of the offending character.
    MixedArity
        If terms of a sum act on different numbers of qubits.
    """
    return _Parser(text).parse()


def raw_vector(node):
    """Amplitude vector of an expression tree, without normalization."""
    if isinstance(node, Ket):
        vec = np.ones(1, dtype=complex)
        for sym in node.symbols:
            vec = np.kron(vec, _SYMBOLS[sym])
        return vec
    if isinstance(node, Tensor):
        vec = np.ones(1, dtype=complex)
        for f in node.factors:
            vec = np.kron(vec, raw_vector(f))
        return vec
    if isinstance(node, Scaled):
        return node.coeff * raw_vector(node.body)
    if isinstance(node, Sum):
        return sum(sign * raw_vector(t) for sign, t in node.terms)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node, normalize=False, tol=1e-9):
    vec = raw_vector(node)
    norm = float(np.linalg.norm(vec))
    if not math.isfinite(norm):
        raise NotNormalized("amplitudes overflow")
    if norm <= 1e-300:
        raise ZeroVector("expression evaluates to the zero vector")
    if normalize:
        vec = vec / norm
    elif abs(norm - 1.0) > tol:
        raise NotNormalized(f"state norm is {norm!r}; pass normalize=True to rescale")
    if vec.size < 2:
        raise MixedArity("a state needs at least one qubit")
    return PureState(vec, tol=tol)


def parse_state(text, normalize=False, tol=1e-9):
    return evaluate(parse(text), normalize=normalize, tol=tol)


def format_state(s, cutoff=0.0):
    """Canonical text form of a state that :func:`parse_state` reads back exactly.

    Amplitudes are written with ``repr`` floats; complex amplitudes become two
    terms on the same ket (real part, then imaginary part with ``i``).
    """
    n = s.num_qubits
    pieces = []
    for idx, amp in enumerate(s.amplitudes):
        ket = "|" + format(idx, f"0{n}b") + ">"
        for part, suffix in ((amp.real, ""), (amp.imag, "i")):
            if part == 0.0 or abs(part) <= cutoff:
                continue
            sign = "-" if part < 0 else "+"
            pieces.append((sign, f"{abs(float(part))!r}{suffix}{ket}"))
    if not pieces:
        raise ZeroVector("state has no amplitudes above the cutoff")
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
