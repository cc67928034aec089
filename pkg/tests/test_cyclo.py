"""Factored cyclotomic arithmetic against expansion and resultant oracles."""

from math import gcd

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from neroncalc.cyclo import (
    CycloProduct,
    cyclotomic,
    cyclotomic_at_one,
    poly_divexact,
    poly_eval,
    poly_mul,
    poly_str,
)

t, x = sympy.symbols("t x")


def to_sympy(coeffs):
    return sum(c * t**i for i, c in enumerate(coeffs))


def test_phi_basis_conversion():
    P = CycloProduct({6: 1, 3: -1, 2: -1, 1: 1})
    assert P.phi_exponents() == {6: 1}
    assert P.as_poly() == [1, -1, 1]
    assert P.poly_str() == "t^2 - t + 1"

    square = CycloProduct({1: 2})
    assert square.as_poly() == [1, -2, 1]

    bad = CycloProduct({2: -1, 1: 1})
    assert bad.phi_exponents() == {2: -1}
    assert not bad.is_polynomial


def test_power_d_examples():
    assert CycloProduct({6: 1}).power_d(5) == CycloProduct({6: 1})
    assert CycloProduct({6: 1}).power_d(2) == CycloProduct({3: 2})
    phi6 = CycloProduct({6: 1, 3: -1, 2: -1, 1: 1})
    cubed = phi6.power_d(3)
    assert cubed.phi_exponents() == {2: 2}
    assert cubed.as_poly() == [1, 2, 1]


def test_multiplication_and_cancellation():
    assert CycloProduct({2: 1}) * CycloProduct({2: -1, 3: 2}) == CycloProduct({3: 2})
    assert (CycloProduct({4: 2}) ** 3).as_dict() == {4: 6}
    assert CycloProduct() * CycloProduct() == CycloProduct.one()


def test_cyclotomic_against_sympy():
    for m in (1, 2, 3, 4, 6, 8, 12, 30, 105):
        ours = list(cyclotomic(m))
        theirs = sympy.Poly(sympy.cyclotomic_poly(m, t), t).all_coeffs()[::-1]
        assert ours == [int(c) for c in theirs]


def test_cyclotomic_at_one_divides_m():
    for m in range(2, 80):
        v = cyclotomic_at_one(m)
        assert v > 0 and m % v == 0
    assert cyclotomic_at_one(1) == 0


factored = st.dictionaries(
    st.integers(1, 10), st.integers(-3, 3), min_size=0, max_size=4
)


@given(factored, st.integers(1, 12))
@settings(max_examples=200)
def test_power_d_preserves_degree(factors, d):
    P = CycloProduct(factors)
    assert P.power_d(d).degree == P.degree


@given(factored, st.integers(1, 8), st.integers(1, 8))
@settings(max_examples=150)
def test_power_d_composes(factors, d1, d2):
    P = CycloProduct(factors)
    assert P.power_d(d1).power_d(d2) == P.power_d(d1 * d2)


@given(st.dictionaries(st.integers(1, 8), st.integers(0, 2), max_size=3), st.integers(1, 9))
@settings(max_examples=60, deadline=None)
def test_power_d_matches_resultant_on_roots(factors, d):
    """Independent oracle: the image polynomial is res_x(Q(x), t - x^d)."""
    P = CycloProduct(factors)
    Q = to_sympy(P.as_poly())
    image = to_sympy(P.power_d(d).as_poly())
    resultant = sympy.resultant(Q.subs(t, x), t - x**d, x)
    # the resultant convention contributes a sign (-1)^(deg Q * d); the image
    # polynomial is monic, so compare up to that sign
    assert (
        sympy.expand(resultant - image) == 0
        or sympy.expand(resultant + image) == 0
    )


def test_value_at_one_matches_expansion():
    for factors in ({6: 1}, {2: 2, 3: 1}, {4: 1, 2: 1}):
        P = CycloProduct(factors)
        assert P.value_at_one() == poly_eval(P.as_poly(), 1)
    assert CycloProduct({1: 1}).value_at_one() == 0
    with pytest.raises(ZeroDivisionError):
        CycloProduct({1: -1}).value_at_one()


def test_root_order():
    assert CycloProduct({6: 1, 3: -1, 2: -1, 1: 1}).root_order() == 6
    assert CycloProduct({1: 4}).root_order() == 1
    assert CycloProduct().root_order() == 1


def test_divides_is_phi_domination():
    phi6 = CycloProduct({6: 1, 3: -1, 2: -1, 1: 1})
    P = phi6 * CycloProduct({1: 2})
    assert phi6.divides(P)
    assert not P.divides(phi6)


def test_poly_helpers():
    assert poly_mul([1, 1], [-1, 1]) == [-1, 0, 1]
    assert poly_divexact([-1, 0, 1], [1, 1]) == [-1, 1]
    with pytest.raises(ValueError):
        poly_divexact([1, 0, 1], [1, 1])
    assert poly_str([0]) == "0"
    assert poly_str([-1, 0, 2]) == "2*t^2 - 1"


def test_pretty_factored_form():
    P = CycloProduct({6: 1, 1: -2})
    assert str(P) == "(t-1)^-2(t^6-1)"
    assert str(CycloProduct()) == "1"
