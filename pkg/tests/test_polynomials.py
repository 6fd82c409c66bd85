"""Graded polynomial arithmetic, the monomial order, and serialization."""

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defectk.linalg import det
from defectk.macaulay import binomial
from defectk.polynomials import GradedPoly, monomial_basis, monomial_index, product


def random_form(rng, nvars, degree, terms=6):
    basis = monomial_basis(nvars, degree)
    coeffs = {}
    for _ in range(terms):
        coeffs[rng.choice(basis)] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return GradedPoly(nvars, degree, coeffs)


def test_monomial_basis_lengths():
    assert len(monomial_basis(5, 3)) == 35 == binomial(7, 4)
    assert monomial_basis(1, 7) == ((7,),)
    assert len(monomial_basis(4, 2)) == 10


def test_monomial_order_is_documented_grevlex():
    assert monomial_basis(3, 2) == (
        (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2),
    )
    idx = monomial_index(3, 2)
    assert idx[(2, 0, 0)] == 0 and idx[(0, 0, 2)] == 5


def test_multiply_examples():
    x = [GradedPoly.variable(5, i) for i in range(5)]
    assert (x[0] * x[1]).coeffs == {(1, 1, 0, 0, 0): Fraction(1)}
    sq = (x[0] + x[1]) * (x[0] - x[1])
    assert sq == x[0] * x[0] - x[1] * x[1]
    zero = GradedPoly.zero(5, 2)
    assert (x[0] * x[0] * zero).is_zero


def test_partial_derivative_examples():
    x = [GradedPoly.variable(5, i) for i in range(5)]
    f = x[0] * x[0] * x[1]
    assert f.partial_derivative(0) == (x[0] * x[1]).scale(2)
    assert (x[1] * x[1] * x[1]).partial_derivative(0).is_zero
    with pytest.raises(ValueError):
        GradedPoly(5, 0, {(0, 0, 0, 0, 0): 1}).partial_derivative(0)


def test_euler_identity_on_random_forms():
    rng = random.Random(0)
    for _ in range(25):
        nvars = rng.randint(2, 5)
        degree = rng.randint(1, 8)
        f = random_form(rng, nvars, degree)
        if f.is_zero:
            continue
        acc = GradedPoly.zero(nvars, degree)
        for i in range(nvars):
            acc = acc + GradedPoly.variable(nvars, i) * f.partial_derivative(i)
        assert acc == f.scale(degree)


def test_substitute_zero_examples():
    x = [GradedPoly.variable(5, i) for i in range(5)]
    f = x[0] * x[4] + x[1] * x[1]
    g = f.substitute_zero(4)
    assert g.nvars == 4 and g.coeffs == {(0, 2, 0, 0): Fraction(1)}
    assert (x[4] * x[4]).substitute_zero(4).is_zero


def test_linear_change_examples():
    x = [GradedPoly.variable(3, i) for i in range(3)]
    f = x[0] * x[0] + x[1] * x[2]
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert f.linear_change(ident) == f
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert x[0].linear_change(swap) == x[1]
    with pytest.raises(ValueError):
        f.linear_change([[1, 0, 0], [1, 0, 0], [0, 0, 1]])


def test_linear_change_preserves_degree_and_composes():
    rng = random.Random(4)
    f = random_form(rng, 3, 4)
    m = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
    while not det(m):
        m = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
    g = f.linear_change(m)
    assert g.degree == f.degree
    # substitution commutes with evaluation: g(y) = f(M y)
    y = (Fraction(2), Fraction(-1), Fraction(3))
    my = tuple(sum(Fraction(m[i][j]) * y[j] for j in range(3)) for i in range(3))
    assert g.evaluate(y) == f.evaluate(my)


def test_evaluate_examples():
    x = [GradedPoly.variable(5, i) for i in range(5)]
    p = (1, 2, 0, 0, 0)
    assert (x[0] * x[1]).evaluate(p) == 2
    assert x[4].evaluate(p) == 0
    with pytest.raises(ValueError):
        x[0].evaluate((0, 0, 0, 0, 0))
    # homogeneity: scaling coordinates preserves vanishing
    f = x[0] * x[1] - x[2] * x[4]
    q = (1, 3, 1, 3, 1)
    scaled = tuple(Fraction(7) * c for c in q)
    assert (f.evaluate(q) == 0) == (f.evaluate(scaled) == 0)


def test_addition_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        GradedPoly.variable(3, 0) + GradedPoly.zero(3, 2)
    with pytest.raises(ValueError):
        GradedPoly(3, 2, {(1, 0, 0): 1})


def test_serialization_roundtrip_is_identity():
    rng = random.Random(9)
    for _ in range(10):
        f = random_form(rng, rng.randint(2, 5), rng.randint(0, 6))
        blob = json.dumps(f.to_json_dict(), sort_keys=True)
        g = GradedPoly.from_json_dict(json.loads(blob))
        assert g == f
        assert json.dumps(g.to_json_dict(), sort_keys=True) == blob


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=4), st.integers(min_value=1, max_value=4), st.data())
def test_product_degree_additivity(nvars, degree, data):
    basis = monomial_basis(nvars, degree)
    exps = data.draw(st.lists(st.sampled_from(basis), min_size=1, max_size=4))
    coeffs = data.draw(
        st.lists(st.integers(min_value=-5, max_value=5), min_size=len(exps), max_size=len(exps))
    )
    f = GradedPoly(nvars, degree, dict(zip(exps, coeffs)))
    g = GradedPoly.variable(nvars, 0)
    assert (f * g).degree == degree + 1
    assert product([g, g, g]).degree == 3


def test_reduce_mod_maps_coefficients():
    from defectk.scalars import Fp

    f = GradedPoly(2, 2, {(2, 0): Fraction(1, 2), (0, 2): 3})
    g = f.reduce_mod(7)
    assert g.char == 7
    assert g.evaluate((Fp(1, 7),) * 2).val == (4 + 3) % 7  # 1/2 = 4 mod 7
