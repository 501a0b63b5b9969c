import itertools
import math
from pathlib import Path

import pytest

from conftest import corpus, random_product, random_pure
from qlink.classify import (
    BORROMEAN,
    CHAIN,
    HOPF_PLUS_FREE,
    THREE_HOPF,
    UNCLASSIFIED,
    UNLINKED,
    ClassificationReport,
    LinkClass,
    classify,
    decide,
    generalized_ghz_check,
    link_sketch,
)
from qlink.errors import BadCount, WrongQubitCount
from qlink.qstate import bell, chain, ghz, permute_qubits

GOLDEN = Path(__file__).parent / "golden"


def relabel(link, perm):
    """Where qubit i goes to position perm[i], a named qubit label moves with it."""
    if link.qubit is None:
        return link
    return LinkClass(link.kind, qubit="ABC"[perm["ABC".index(link.qubit)]])


@pytest.mark.parametrize("name", list(corpus()))
def test_corpus_classes(name):
    s, expected = corpus()[name]
    assert str(classify(s).link) == expected


@pytest.mark.parametrize("perm", list(itertools.permutations(range(3))))
@pytest.mark.parametrize("name", ["ghz", "w", "product", "bell_AB", "chain_6"])
def test_permutation_equivariance(name, perm):
    s, _ = corpus()[name]
    before = classify(s)
    after = classify(permute_qubits(s, list(perm)))
    assert after.link == relabel(before.link, perm)


def test_chain_center_follows_permutation():
    s = chain(0.6, 0.8)
    assert classify(permute_qubits(s, [1, 0, 2])).link == LinkClass(CHAIN, qubit="A")
    assert classify(permute_qubits(s, [0, 2, 1])).link == LinkClass(CHAIN, qubit="C")


@pytest.mark.parametrize("a, b", [(1.0, 0.0), (0.0, 1.0)])
def test_degenerate_chain_is_unlinked(a, b):
    report = classify(chain(a, b))
    assert report.link.kind == UNLINKED
    assert report.warnings == ()


def test_nearly_degenerate_chain_warns():
    a = 1e-10
    report = classify(chain(a, math.sqrt(1 - a * a)))
    assert report.link.kind == UNLINKED
    assert report.warnings
    assert any("near the threshold" in w for w in report.warnings)


def test_clean_states_do_not_warn():
    for name in ("ghz", "w", "chain_5", "bell_AC"):
        assert classify(corpus()[name][0]).warnings == ()


def test_random_states_are_genuinely_tripartite(rng):
    for _ in range(10):
        assert classify(random_pure(rng, 3)).link.kind == THREE_HOPF


def test_random_products_are_unlinked(rng):
    for _ in range(10):
        assert classify(random_product(rng)).link.kind == UNLINKED


@pytest.mark.parametrize(
    "cuts, pairs, expected",
    [
        ("111", {}, LinkClass(UNLINKED)),
        ("001", {"AB": 1}, LinkClass(HOPF_PLUS_FREE, qubit="C")),
        ("100", {"BC": 1}, LinkClass(HOPF_PLUS_FREE, qubit="A")),
        ("000", {}, LinkClass(BORROMEAN)),
        ("000", {"AB": 1, "AC": 1, "BC": 1}, LinkClass(THREE_HOPF)),
        ("000", {"AB": 1, "BC": 1}, LinkClass(CHAIN, qubit="B")),
        ("000", {"AB": 1, "AC": 1}, LinkClass(CHAIN, qubit="A")),
        ("000", {"AB": 1}, LinkClass(UNCLASSIFIED, pattern="cuts=000,pairs=AB")),
        ("110", {}, LinkClass(UNCLASSIFIED, pattern="cuts=110,pairs=none")),
    ],
)
def test_decision_table(cuts, pairs, expected):
    flags = {q: c == "1" for q, c in zip("ABC", cuts)}
    conc = {p: float(pairs.get(p, 0.0)) for p in ("BC", "AC", "AB")}
    assert decide(flags, conc, 1e-9) == expected


def test_link_class_text_round_trip():
    for link in (
        LinkClass(UNLINKED),
        LinkClass(CHAIN, qubit="B"),
        LinkClass(HOPF_PLUS_FREE, qubit="A"),
        LinkClass(UNCLASSIFIED, pattern="cuts=000,pairs=AB"),
    ):
        assert LinkClass.parse(str(link)) == link


def test_report_json_round_trip():
    for name in ("w", "chain_3", "bell_BC"):
        report = classify(corpus()[name][0])
        back = ClassificationReport.from_json(report.to_json())
        assert back == report
        assert back.to_json() == report.to_json()


def test_wrong_qubit_count():
    with pytest.raises(WrongQubitCount):
        classify(ghz(4))
    with pytest.raises(WrongQubitCount):
        classify(bell())


@pytest.mark.parametrize("n", range(3, 11))
def test_generalized_ghz(n):
    assert generalized_ghz_check(n)


@pytest.mark.parametrize("n", [2, 11, 3.0])
def test_generalized_ghz_bad_count(n):
    with pytest.raises(BadCount):
        generalized_ghz_check(n)


@pytest.mark.parametrize(
    "name, link",
    [
        ("unlinked", LinkClass(UNLINKED)),
        ("hopf_plus_free_C", LinkClass(HOPF_PLUS_FREE, qubit="C")),
        ("chain_B", LinkClass(CHAIN, qubit="B")),
        ("borromean", LinkClass(BORROMEAN)),
        ("three_hopf", LinkClass(THREE_HOPF)),
    ],
)
def test_sketch_golden(name, link):
    assert link_sketch(link) == (GOLDEN / f"sketch_{name}.txt").read_text()


def test_sketch_labels_follow_link():
    text = link_sketch(LinkClass(HOPF_PLUS_FREE, qubit="A"))
    assert "B and C form a Hopf link; A is free" in text
    assert all(line == line.rstrip() for line in text.splitlines())
    assert "cuts=000" in link_sketch(LinkClass(UNCLASSIFIED, pattern="cuts=000,pairs=AB"))

