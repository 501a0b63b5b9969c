"""Map a 3-qubit pure state to a configuration of three linked rings.

Each qubit is a ring.  "Cutting" a ring means tracing its qubit out, so the
verdict depends only on reduced density operators and is therefore the same
in every local basis:

* every qubit is a product factor                        -> unlinked
* exactly one qubit is a product factor                  -> Hopf pair + free ring
* genuinely tripartite, no pair entangled after a cut    -> Borromean rings
* genuinely tripartite, every pair entangled after a cut -> three pairwise Hopf links
* genuinely tripartite, exactly one pair disentangled    -> linear chain

Anything else (for instance two pairs disentangled with no product factor)
is reported as unclassified rather than forced into one of the above.
"""

import json
from dataclasses import dataclass, field
from itertools import combinations

from qlink.density import purity, reduced_from_pure
from qlink.errors import BadCount, MalformedData, WrongQubitCount
from qlink.measures import concurrence, pure_bipartite_separable
from qlink.qstate import ghz, load_json, qubit_label

UNLINKED = "UNLINKED"
HOPF_PLUS_FREE = "HOPF_PLUS_FREE"
CHAIN = "CHAIN"
BORROMEAN = "BORROMEAN"
THREE_HOPF = "THREE_HOPF"
UNCLASSIFIED = "UNCLASSIFIED"

PAIRS = ("BC", "AC", "AB")


@dataclass(frozen=True)
class LinkClass:
    kind: str
    qubit: str = None
    pattern: str = None

    def __str__(self):
        if self.kind in (HOPF_PLUS_FREE, CHAIN):
            return f"{self.kind}({self.qubit})"
        if self.kind == UNCLASSIFIED:
            return f"{self.kind}({self.pattern})"
        return self.kind

    @classmethod
    def parse(cls, text):
        if "(" in text:
            kind, arg = text[:-1].split("(", 1)
            if kind == UNCLASSIFIED:
                return cls(kind, pattern=arg)
            return cls(kind, qubit=arg)
        return cls(text)


@dataclass(frozen=True)
class ClassificationReport:
    separable_cuts: dict
    pairwise_concurrence: dict
    link: LinkClass
    tolerance: float
    warnings: tuple = field(default=())

    def to_dict(self):
        return {
            "separable_cuts": dict(self.separable_cuts),
            "pairwise_concurrence": dict(self.pairwise_concurrence),
            "link": str(self.link),
            "tolerance": self.tolerance,
            "warnings": list(self.warnings),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(
                separable_cuts={k: bool(v) for k, v in data["separable_cuts"].items()},
                pairwise_concurrence={k: float(v) for k, v in data["pairwise_concurrence"].items()},
                link=LinkClass.parse(data["link"]),
                tolerance=float(data["tolerance"]),
                warnings=tuple(data.get("warnings", ())),
            )
        except (AttributeError, KeyError, TypeError, ValueError) as exc:
            raise MalformedData(f"not a serialized ClassificationReport: {exc!r}") from None

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(load_json(text))


def decide(separable_cuts, pairwise_concurrence, tol):
    """The decision table: cut flags and pairwise concurrences to a :class:`LinkClass`."""
    cut = [separable_cuts[q] for q in "ABC"]
    entangled_pairs = [p for p in PAIRS if pairwise_concurrence[p] > tol]
    if all(cut):
        return LinkClass(UNLINKED)
    if sum(cut) == 1:
        return LinkClass(HOPF_PLUS_FREE, qubit="ABC"[cut.index(True)])
    if not any(cut):
        if not entangled_pairs:
            return LinkClass(BORROMEAN)
        if len(entangled_pairs) == 3:
            return LinkClass(THREE_HOPF)
        if len(entangled_pairs) == 2:
            center = set(entangled_pairs[0]) & set(entangled_pairs[1])
            return LinkClass(CHAIN, qubit=center.pop())
    pattern = "cuts=" + "".join("1" if c else "0" for c in cut)
    pattern += ",pairs=" + "+".join(entangled_pairs or ["none"])
    return LinkClass(UNCLASSIFIED, pattern=pattern)


def classify(s, tol=1e-9, noise_floor=1e-12, margin=1e3):
    """Classify a 3-qubit pure state as a link of three rings.

    Parameters
    ----------
    s : PureState
        Exactly three qubits.
    tol : float
        Threshold for both tests: a cut is separable when the reduced purity
        is at least ``1 - tol``; a pair is entangled when its concurrence
        exceeds ``tol``.
    noise_floor, margin : float
        A warning is attached when any tested quantity (``1 - purity`` of a
        cut, or a pairwise concurrence) lies in ``(noise_floor, margin * tol]``,
        i.e. close enough to the threshold that the verdict is fragile.

    Returns
    -------
    ClassificationReport
    """
    if s.num_qubits != 3:
        raise WrongQubitCount(f"classification needs 3 qubits, got {s.num_qubits}")
    cuts = {}
    warnings = []
    for q in range(3):
        label = qubit_label(q)
        deficit = 1.0 - purity(reduced_from_pure(s, q))
        cuts[label] = pure_bipartite_separable(s, q, tol=tol)
        if noise_floor < deficit <= margin * tol:
            warnings.append(f"cut {label}: 1 - purity = {deficit:.3g} is near the threshold {tol:.3g}")
    pairs = {}
    for pair in PAIRS:
        c = concurrence(reduced_from_pure(s, pair), tol=tol).concurrence
        pairs[pair] = c
        if noise_floor < c <= margin * tol:
            warnings.append(f"pair {pair}: concurrence {c:.3g} is near the threshold {tol:.3g}")
    link = decide(cuts, pairs, tol)
    return ClassificationReport(
        separable_cuts=cuts,
        pairwise_concurrence=pairs,
        link=link,
        tolerance=tol,
        warnings=tuple(warnings),
    )


def generalized_ghz_check(n, tol=1e-9):
    """Borromean signature of the n-qubit GHZ state.

    True iff no single qubit factors out of ``ghz(n)`` while every 2-qubit
    reduction has concurrence at most ``tol``.
    """
    if not isinstance(n, int) or not 3 <= n <= 10:
        raise BadCount(f"generalized GHZ check needs 3 <= n <= 10, got {n!r}")
    s = ghz(n)
    if any(pure_bipartite_separable(s, q, tol=tol) for q in range(n)):
        return False
    return all(concurrence(reduced_from_pure(s, pair), tol=tol).concurrence <= tol for pair in combinations(range(n), 2))


_SKETCHES = {
    UNLINKED: [
        "   ___       ___       ___   ",
        "  /   \\     /   \\     /   \\  ",
        " |  A  |   |  B  |   |  C  | ",
        "  \\___/     \\___/     \\___/  ",
        "",
        "  three free rings",
    ],
    HOPF_PLUS_FREE: [
        "   ___   ___          ___   ",
        "  /   \\ /   \\        /   \\  ",
        " |  {0}  X  {1}  |      |  {2}  | ",
        "  \\___/ \\___/        \\___/  ",
        "",
        "  {0} and {1} form a Hopf link; {2} is free",
    ],
    CHAIN: [
        "   ___   ___   ___   ",
        "  /   \\ /   \\ /   \\  ",
        " |  {0}  X  {1}  X  {2}  | ",
        "  \\___/ \\___/ \\___/  ",
        "",
        "  linear chain: cutting {1} frees {0} and {2};",
        "  cutting {0} or {2} leaves the other two linked",
    ],
    BORROMEAN: [
        "          (A)          ",
        "         .   .         ",
        "        .  *  .        ",
        "       .       .       ",
        "    (B) . . . . (C)    ",
        "",
        "  Borromean rings: the three are linked jointly (*)",
        "  but no two are; cutting any one frees the other two",
    ],
    THREE_HOPF: [
        "          (A)          ",
        "         // \\\\         ",
        "        X     X        ",
        "       //       \\\\       ",
        "    (B)=====X=====(C)  ",
        "",
        "  three pairwise Hopf links: every pair stays",
        "  linked after the third ring is cut",
    ],
}


def link_sketch(link):
    """Fixed ASCII picture of a link class (an ``X`` marks a pairwise link)."""
    if link.kind == UNCLASSIFIED:
        return f"  unclassified pattern: {link.pattern}\n"
    lines = _SKETCHES[link.kind]
    if link.kind == HOPF_PLUS_FREE:
        linked = [q for q in "ABC" if q != link.qubit]
        lines = [line.format(linked[0], linked[1], link.qubit) for line in lines]
    elif link.kind == CHAIN:
        ends = [q for q in "ABC" if q != link.qubit]
        lines = [line.format(ends[0], link.qubit, ends[1]) for line in lines]
    return "\n".join(line.rstrip() for line in lines) + "\n"
