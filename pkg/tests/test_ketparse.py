import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_pure
from qlink.errors import KetSyntaxError, MixedArity, NotNormalized, QlinkError, ZeroVector
from qlink.ketparse import evaluate, format_state, parse, parse_state, raw_vector
from qlink.qstate import basis_state, chain, ghz, tensor, w3, plus, ket1

S2 = 1 / math.sqrt(2)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1/sqrt(2)(|000> + |111>)", ghz(3)),
        ("1/√2 (|000⟩ + |111⟩)", ghz(3)),
        ("(|000> + |111>)/sqrt(2)", ghz(3)),
        ("(|001> + |010> + |100>)/sqrt(3)", w3()),
        ("1/sqrt(3)|001> + 1/sqrt(3)|010> + 1/sqrt(3)|100>", w3()),
        ("0.6|000> + 0.8|+1+>", chain(0.6, 0.8)),
        ("|+>|1>|+>", tensor(plus(), ket1(), plus())),
        ("|+> ⊗ |1> * |+>", tensor(plus(), ket1(), plus())),
        ("|010>", basis_state("010")),
    ],
)
def test_examples(text, expected):
    assert np.allclose(parse_state(text).amplitudes, expected.amplitudes, atol=1e-15)


def test_trailing_divisor_combines_with_coefficient():
    assert np.allclose(raw_vector(parse("3|0>/2/3")), [0.5, 0])
    with pytest.raises(KetSyntaxError) as info:
        parse("|0>/0")
    assert info.value.position == 3


def test_minus_ket():
    assert np.allclose(parse_state("-|1>").amplitudes, [0, -1])
    assert np.allclose(parse_state("|->").amplitudes, [S2, -S2])
    assert np.allclose(parse_state("|−>").amplitudes, [S2, -S2])


def test_imaginary_coefficients():
    s = parse_state("1/sqrt(2)|0> + i/sqrt(2)|1>")
    assert np.allclose(s.amplitudes, [S2, 1j * S2])
    s = parse_state("0.6|0> - 0.8i|1>")
    assert np.allclose(s.amplitudes, [0.6, -0.8j])


def test_normalize_flag():
    with pytest.raises(NotNormalized):
        parse_state("|000> + |111>")
    assert np.allclose(parse_state("|000> + |111>", normalize=True).amplitudes, ghz(3).amplitudes)


def test_raw_vector_is_linear():
    a = raw_vector(parse("2|01> + 3|10>"))
    b = raw_vector(parse("2|01>")) + raw_vector(parse("3|10>"))
    assert np.array_equal(a, b)
    assert np.allclose(raw_vector(parse("2(|0> + |1>)")), [2, 2])


def test_distribution_over_groups():
    left = raw_vector(parse("|0>(|0> + |1>)"))
    right = raw_vector(parse("|00> + |01>"))
    assert np.allclose(left, right)


@pytest.mark.parametrize(
    "text, position",
    [
        ("|0", 2),
        ("|2>", 1),
        ("|0> + |x>", 7),
        ("|>", 1),
        ("|0> +", 5),
        ("|0> ! |1>", 4),
        ("0>", 1),
        ("", 0),
        ("(|0>", 4),
        ("1/0 |0>", 1),
    ],
)
def test_error_positions(text, position):
    with pytest.raises(KetSyntaxError) as info:
        parse(text)
    assert info.value.position == position
    assert f"position {position}" in str(info.value)


def test_mixed_arity():
    with pytest.raises(MixedArity):
        parse("|0> + |11>")


def test_zero_vector():
    with pytest.raises(ZeroVector):
        parse_state("|0> - |0>", normalize=True)


def test_too_many_qubits():
    with pytest.raises(KetSyntaxError):
        parse("|" + "0" * 11 + ">")


@pytest.mark.parametrize("s", [ghz(3), w3(), chain(0.6, 0.8), basis_state("101")])
def test_format_round_trip_fixtures(s):
    assert np.array_equal(parse_state(format_state(s)).amplitudes, s.amplitudes)


def test_format_round_trip_random(rng):
    for n in (1, 2, 3, 4):
        s = random_pure(rng, n)
        assert np.array_equal(parse_state(format_state(s)).amplitudes, s.amplitudes)


def test_format_cutoff_drops_noise():
    s = parse_state("0.6|000> + 0.8|+1+>")
    text = format_state(s, cutoff=1e-15)
    assert text.count("|") == 5


_ALPHABET = st.sampled_from(list("|01+->()*/ .ie2√⊗⟩−sqrt") + ["sqrt(", "|0>", "|1>", "1/"])


@settings(max_examples=300, deadline=None)
@given(st.lists(_ALPHABET, max_size=20).map("".join))
def test_parser_is_total(text):
    # every input either parses or raises a library error, never anything else
    try:
        node = parse(text)
        evaluate(node, normalize=True)
    except QlinkError:
        pass


@settings(max_examples=200, deadline=None)
@given(st.text(max_size=30))
def test_parser_total_on_arbitrary_text(text):
    try:
        parse_state(text, normalize=True)
    except QlinkError:
        pass


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.tuples(st.floats(-5, 5), st.sampled_from(["|00>", "|01>", "|1+>", "|-0>"])), min_size=1, max_size=4),
    st.lists(st.tuples(st.floats(-5, 5), st.sampled_from(["|00>", "|11>", "|+->"])), min_size=1, max_size=4),
)
def test_additivity(xs, ys):
    def text(terms):
        return "".join(f" {'+' if c >= 0 else '-'} {abs(c)!r}{k}" for c, k in terms)

    def vec(terms):
        return raw_vector(parse(text(terms)))

    assert np.allclose(raw_vector(parse(text(xs) + text(ys))), vec(xs) + vec(ys), atol=1e-12)
