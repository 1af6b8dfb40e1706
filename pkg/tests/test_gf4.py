"""Scalar GF(4) algebra: exhaustive axioms plus the trace/conjugation maps."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from circ4 import gf4
from circ4.errors import DimensionMismatch, VectorFormatError
from circ4.gf4 import (
    ELEMENTS,
    OMEGA,
    OMEGA2,
    ONE,
    ZERO,
    gf4_add,
    gf4_conj,
    gf4_mul,
    gf4_trace,
    herm_trace_ip,
)

elements = st.sampled_from(ELEMENTS)
vectors = st.lists(elements, min_size=1, max_size=64).map(tuple)


def test_add_examples():
    assert gf4_add(OMEGA, OMEGA) == ZERO
    assert gf4_add(ONE, OMEGA) == OMEGA2  # w^2 = 1 + w
    assert gf4_add(ZERO, OMEGA2) == OMEGA2


def test_mul_examples():
    assert gf4_mul(OMEGA, OMEGA) == OMEGA2
    assert gf4_mul(OMEGA, OMEGA2) == ONE  # w * (1+w) = w + w^2 = 1
    assert gf4_mul(ZERO, OMEGA) == ZERO


def test_field_axioms_exhaustive():
    for x in ELEMENTS:
        assert gf4_add(x, ZERO) == x
        assert gf4_add(x, x) == ZERO  # characteristic 2
        assert gf4_mul(x, ONE) == x
        assert gf4_mul(x, ZERO) == ZERO
        for y in ELEMENTS:
            assert gf4_add(x, y) == gf4_add(y, x)
            assert gf4_mul(x, y) == gf4_mul(y, x)
            for z in ELEMENTS:
                assert gf4_add(gf4_add(x, y), z) == gf4_add(x, gf4_add(y, z))
                assert gf4_mul(gf4_mul(x, y), z) == gf4_mul(x, gf4_mul(y, z))
                assert gf4_mul(x, gf4_add(y, z)) == gf4_add(gf4_mul(x, y), gf4_mul(x, z))


def test_nonzero_elements_cyclic_of_order_3():
    assert gf4_mul(OMEGA, gf4_mul(OMEGA, OMEGA)) == ONE
    for x in (ONE, OMEGA, OMEGA2):
        cubed = gf4_mul(x, gf4_mul(x, x))
        assert cubed == ONE


def test_conj_examples():
    assert gf4_conj(OMEGA) == OMEGA2
    assert gf4_conj(ONE) == ONE
    assert gf4_conj(OMEGA2) == OMEGA  # w^4 = w since w^3 = 1


def test_conj_is_squaring_and_involution():
    for x in ELEMENTS:
        assert gf4_conj(x) == gf4_mul(x, x)
        assert gf4_conj(gf4_conj(x)) == x


def test_trace_values():
    assert gf4_trace(ZERO) == 0
    assert gf4_trace(ONE) == 0  # 1 + 1 = 0
    assert gf4_trace(OMEGA) == 1  # w + w^2 = w + 1 + w = 1
    assert gf4_trace(OMEGA2) == 1
    for x in ELEMENTS:
        assert gf4_trace(x) == gf4_add(x, gf4_conj(x))
        for y in ELEMENTS:
            assert gf4_trace(gf4_add(x, y)) == gf4_trace(x) ^ gf4_trace(y)


def test_herm_trace_ip_examples():
    assert herm_trace_ip((OMEGA,), (ONE,)) == 1
    assert herm_trace_ip((ONE, OMEGA), (OMEGA, ONE)) == 0  # 1 + 1


def test_herm_trace_ip_matches_definition_exhaustive_n1():
    # u*v = Tr(u conj(v)) = u v^2 + u^2 v summed over GF(2)
    for u in ELEMENTS:
        for v in ELEMENTS:
            direct = gf4_add(
                gf4_mul(u, gf4_mul(v, v)), gf4_mul(gf4_mul(u, u), v)
            )
            assert direct in (ZERO, ONE)
            assert herm_trace_ip((u,), (v,)) == direct


def test_herm_trace_ip_length_mismatch():
    with pytest.raises(DimensionMismatch):
        herm_trace_ip((ONE,), (ONE, ONE))


@given(vectors)
def test_self_pairing_vanishes(u):
    assert herm_trace_ip(u, u) == 0


@given(st.data())
def test_biadditivity(data):
    n = data.draw(st.integers(min_value=1, max_value=16))
    fixed = st.lists(elements, min_size=n, max_size=n).map(tuple)
    u = data.draw(fixed)
    w = data.draw(fixed)
    v = data.draw(fixed)
    lhs = herm_trace_ip(tuple(gf4_add(a, b) for a, b in zip(u, w)), v)
    assert lhs == herm_trace_ip(u, v) ^ herm_trace_ip(w, v)


def test_parse_and_format_symbols():
    assert gf4.parse_symbols("01wW") == (ZERO, ONE, OMEGA, OMEGA2)
    assert gf4.format_symbols((OMEGA, ZERO, OMEGA2)) == "w0W"
    with pytest.raises(VectorFormatError, match="position 2"):
        gf4.parse_symbols("01x")
