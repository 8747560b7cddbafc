from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gring.errors import MismatchedRegistry
from gring.poly import (
    NEG_INF,
    REGISTRY,
    Poly,
    VariableRegistry,
    block_order,
    chebyshev_like,
    degrevlex,
    parse_poly,
)

x = Poly.variable("x")
y = Poly.variable("y")


def test_basic_arithmetic():
    assert (x + 1) * (x - 1) == x * x - 1
    p = 3 * x * y - Fraction(1, 2)
    assert p + 0 == p
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y


def test_zero_and_one():
    assert Poly.zero().is_zero()
    assert (x - x).is_zero()
    assert Poly.one() == 1
    assert x * 0 == Poly.zero()


def test_substitute_numeric():
    p = x * x + 1
    assert p.substitute({"x": 2}) == 5


def test_substitute_poly():
    assert x.substitute({"x": y + 1}) == y + 1
    p = (x + y) ** 2
    q = p.substitute({"x": y})
    assert q == 4 * y * y


def test_substitute_is_homomorphism():
    p, q = x * y + 1, x - 2 * y
    sub = {"x": y + 1, "y": x * x}
    assert (p * q).substitute(sub) == p.substitute(sub) * q.substitute(sub)
    assert (p + q).substitute(sub) == p.substitute(sub) + q.substitute(sub)


def test_degree_in():
    assert (x * x * y + x).degree_in("x") == 2
    assert Poly.zero().degree_in("x") == NEG_INF
    assert y.degree_in("x") == 0


def test_coefficient_in():
    p = 3 * x * x * y + x - 5
    assert p.coefficient_in("x", 2) == 3 * y
    assert p.coefficient_in("x", 1) == Poly.one()
    assert p.coefficient_in("x", 0) == Poly.const(-5)


def test_render_and_parse_round_trip():
    p = Fraction(3, 2) * x * x * y - 1
    assert p.render() == "3/2*x^2*y - 1"
    assert parse_poly(p.render()) == p
    assert parse_poly("0") == Poly.zero()
    for q in (x, -x, x - y, 2 * x * y - Fraction(7, 3)):
        assert parse_poly(q.render()) == q


def test_registry_mismatch():
    other = VariableRegistry()
    p = Poly.variable("x", other)
    with pytest.raises(MismatchedRegistry):
        _ = p + x


def test_order_degrevlex():
    xv, yv = REGISTRY.lookup("x"), REGISTRY.lookup("y")
    order = degrevlex([xv, yv])
    # total degree dominates; ties broken so that earlier variables win
    assert order.key(((xv, 2),)) > order.key(((xv, 1), (yv, 1)))
    assert order.key(((xv, 1), (yv, 1))) > order.key(((yv, 2),))
    lead, c = order.leading((x + y) ** 2 + x)
    assert lead == ((xv, 2),)


def test_block_order_isolates_top_variable():
    xv, yv = REGISTRY.lookup("x"), REGISTRY.lookup("y")
    order = block_order((xv,), (yv,))
    # any power of x beats any power of y
    assert order.key(((xv, 1),)) > order.key(((yv, 9),))
    lead, _ = order.leading(x + y ** 5)
    assert lead == ((xv, 1),)


# -- the recurrence family ------------------------------------------------


def test_family_base_cases():
    assert chebyshev_like(0).is_zero()
    assert chebyshev_like(1) == Poly.one()
    assert chebyshev_like(-1) == Poly.const(-1)


def test_family_small_members():
    assert chebyshev_like(2) == 2 * x
    assert chebyshev_like(3) == 4 * x * x - 1


def test_family_recurrence_holds():
    for n in range(-12, 12):
        lhs = 2 * x * chebyshev_like(n)
        rhs = chebyshev_like(n - 1) + chebyshev_like(n + 1)
        assert lhs == rhs, n


def test_family_degree_and_values():
    for n in range(1, 51):
        p = chebyshev_like(n)
        assert p.degree_in("x") == n - 1
        assert p.substitute({"x": 1}) == n
        assert p.substitute({"x": -1}) == Poly.const((-1) ** (n + 1) * n)
        assert chebyshev_like(-n) == -p


coeffs = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)
monos = st.lists(
    st.tuples(st.sampled_from(["x", "y"]), st.integers(1, 3)), max_size=2
)


@st.composite
def polys(draw):
    n = draw(st.integers(0, 4))
    p = Poly.zero()
    for _ in range(n):
        c = draw(coeffs)
        term = Poly.const(c)
        for name, e in draw(monos):
            term = term * Poly.variable(name) ** e
        p = p + term
    return p


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
