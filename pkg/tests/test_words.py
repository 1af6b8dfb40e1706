"""Bitplane word representation against the scalar layer it packs."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from circ4.errors import CapacityError, DimensionMismatch
from circ4.gf4 import ELEMENTS, OMEGA, OMEGA2, ONE, ZERO, gf4_add, herm_trace_ip
from circ4.words import (
    BitplaneWord,
    decode_word,
    encode_word,
    rotate_word,
    word_add,
    word_distance,
    word_symplectic_ip,
    word_weight,
    zero_word,
)

symbol_vectors = st.lists(st.sampled_from(ELEMENTS), min_size=1, max_size=64).map(tuple)


def test_encode_examples():
    w = encode_word((ONE, OMEGA2, OMEGA))
    assert w.plane_a == 0b011  # coordinates 0 and 1 carry the low bit
    assert w.plane_b == 0b110
    assert encode_word((ZERO,) * 5) == zero_word(5)
    w3 = encode_word((OMEGA, OMEGA, OMEGA))
    assert w3.plane_a == 0 and w3.plane_b == 0b111


@given(symbol_vectors)
def test_encode_decode_round_trip(symbols):
    assert decode_word(encode_word(symbols)) == symbols


def test_capacity_and_validation():
    with pytest.raises(CapacityError):
        encode_word((ZERO,) * 65)
    with pytest.raises(CapacityError):
        BitplaneWord(65, 0, 0)
    with pytest.raises(ValueError):
        BitplaneWord(0, 0, 0)
    with pytest.raises(ValueError):
        BitplaneWord(2, 0b100, 0)  # bit above position n-1


def test_add_examples():
    u = encode_word((ONE, OMEGA, OMEGA2, ZERO))
    assert word_add(u, u) == zero_word(4)
    assert word_add(u, zero_word(4)) == u
    assert word_add(encode_word((ONE, ZERO)), encode_word((OMEGA, ZERO))) == encode_word(
        (OMEGA2, ZERO)
    )
    with pytest.raises(DimensionMismatch):
        word_add(u, zero_word(5))


def test_weight_examples():
    assert word_weight(zero_word(7)) == 0
    assert word_weight(encode_word((ONE, OMEGA2, OMEGA))) == 3
    assert word_weight(encode_word((ZERO, OMEGA, ZERO, ONE))) == 2


@given(symbol_vectors)
def test_add_matches_scalar_addition(symbols):
    shifted = symbols[1:] + symbols[:1]
    expected = tuple(gf4_add(a, b) for a, b in zip(symbols, shifted))
    assert decode_word(word_add(encode_word(symbols), encode_word(shifted))) == expected


def test_symplectic_examples():
    assert word_symplectic_ip(encode_word((OMEGA,)), encode_word((ONE,))) == 1
    u = encode_word((ONE, OMEGA, OMEGA2))
    assert word_symplectic_ip(u, u) == 0
    with pytest.raises(DimensionMismatch):
        word_symplectic_ip(u, zero_word(2))


def test_symplectic_equals_hermitian_trace_exhaustive_n1():
    for x in ELEMENTS:
        for y in ELEMENTS:
            assert word_symplectic_ip(encode_word((x,)), encode_word((y,))) == herm_trace_ip(
                (x,), (y,)
            )


@given(st.data())
def test_symplectic_equals_hermitian_trace(data):
    n = data.draw(st.integers(min_value=1, max_value=64))
    vecs = st.lists(st.sampled_from(ELEMENTS), min_size=n, max_size=n).map(tuple)
    u = data.draw(vecs)
    v = data.draw(vecs)
    assert word_symplectic_ip(encode_word(u), encode_word(v)) == herm_trace_ip(u, v)


@given(st.data())
def test_weight_triangle_inequality_and_distance(data):
    n = data.draw(st.integers(min_value=1, max_value=64))
    vecs = st.lists(st.sampled_from(ELEMENTS), min_size=n, max_size=n).map(tuple)
    u = encode_word(data.draw(vecs))
    v = encode_word(data.draw(vecs))
    s = word_add(u, v)
    assert abs(word_weight(u) - word_weight(v)) <= word_weight(s)
    assert word_weight(s) <= word_weight(u) + word_weight(v)
    # subtraction equals addition in characteristic 2
    assert word_distance(u, v) == word_weight(s)


def test_rotate_word():
    w = encode_word((OMEGA, ONE, ZERO, ZERO))
    assert decode_word(rotate_word(w, 1)) == (ZERO, OMEGA, ONE, ZERO)
    assert decode_word(rotate_word(w, -1)) == (ONE, ZERO, ZERO, OMEGA)
    assert rotate_word(rotate_word(w, 3), 1) == w
