from random import Random

import pytest

from metabelian.cyclo import ambient_order, imag_unit, root_of_unity
from metabelian.poly import CommPoly, Monomial, RationalSeries
from helpers import random_cyc


def _var(name, order=4):
    return CommPoly.variable(name, order)


def _pow(p, k):
    return p.power(k)


def test_ring_examples():
    u, v = _var("u"), _var("v")
    assert (u + v) * (u - v) == u * u - v * v
    uv = u * v
    assert uv * uv == _pow(u, 2) * _pow(v, 2)


def test_power_sum_identity():
    # (u^n + v^n)^2 - 2 (uv)^n == u^(2n) + v^(2n)
    for n in (3, 4, 5):
        u, v = _var("u"), _var("v")
        lhs = _pow(_pow(u, n) + _pow(v, n), 2) - (_pow(u * v, n)).scale(2)
        assert lhs == _pow(u, 2 * n) + _pow(v, 2 * n)


def test_substitute_rotation_fixes_uv():
    n = 3
    m = ambient_order(n)
    xi = root_of_unity(m, m // n)
    u, v = _var("u", m), _var("v", m)
    p = u * v
    images = {"u": u.scale(xi), "v": v.scale(xi.conj())}
    assert p.substitute(images) == p


def test_substitute_swap_fixes_power_sum():
    u, v = _var("u"), _var("v")
    p = _pow(u, 3) + _pow(v, 3)
    assert p.substitute({"u": v, "v": u}) == p


def test_substitute_into_xy():
    order = 4
    u = _var("u", order)
    x, y = _var("x", order), _var("y", order)
    img = x + y.scale(imag_unit(order))
    assert u.substitute({"u": img}) == img


def test_substitute_missing_image():
    u, v = _var("u"), _var("v")
    with pytest.raises(ValueError):
        (u * v).substitute({"u": u})


def test_substitute_is_multiplicative():
    rng = Random(3)
    order = 12
    u, v = _var("u", order), _var("v", order)
    images = {"u": u + v.scale(random_cyc(rng, order)), "v": u * v + v}
    for _ in range(20):
        p = CommPoly.zero()
        q = CommPoly.zero()
        for _ in range(3):
            mono = Monomial((rng.randint(0, 3), rng.randint(0, 3)))
            p = p + CommPoly.term(mono, random_cyc(rng, order))
            mono = Monomial((rng.randint(0, 2), rng.randint(0, 2)))
            q = q + CommPoly.term(mono, random_cyc(rng, order))
        assert (p * q).substitute(images) == p.substitute(images) * q.substitute(images)


def test_monomial_exponent_map_has_no_zeros():
    mono = Monomial((2, 0, 1))
    assert mono.exponents == {"u": 2, "u1": 1}
    assert mono.degree() == 3


def test_homogeneous_helpers():
    u, v = _var("u"), _var("v")
    p = u * u + v
    assert p.homogeneous_component(2) == u * u
    assert p.homogeneous_degree() is None
    assert (u * v).homogeneous_degree() == 2
    assert CommPoly.zero().degree() == -1


# ----------------------------------------------------------------------
# Series
# ----------------------------------------------------------------------

def test_series_geometric():
    assert RationalSeries((1,), (1, -1)).coefficients(4) == [1, 1, 1, 1, 1]


def test_series_invariant_ring_count():
    # 1/((1-t^2)(1-t^3)): count the monomials (uv)^p (u^(3q)+v^(3q)) per degree
    den = (1, 0, -1)
    den3 = (1, 0, 0, -1)
    s = RationalSeries((1,), den) * RationalSeries((1,), den3)
    expected = []
    for d in range(7):
        expected.append(
            sum(1 for p in range(d + 1) for q in range(d + 1) if 2 * p + 3 * q == d)
        )
    assert s.coefficients(6) == expected == [1, 0, 1, 1, 1, 1, 2]


def test_series_module_generator_degrees():
    # (1+t)(1+t+t^2) expands to one degree-0, two each of degrees 1..2, one degree-3
    s = RationalSeries((1, 1)) * RationalSeries((1, 1, 1))
    assert s.coefficients(3) == [1, 2, 2, 1]


def test_series_product_is_convolution():
    r = RationalSeries((1, 2), (1, 0, -1))
    s = RationalSeries((0, 1), (1, -1, 0, 5))
    rc = r.coefficients(12)
    sc = s.coefficients(12)
    conv = [sum(rc[i] * sc[k - i] for i in range(k + 1)) for k in range(13)]
    assert (r * s).coefficients(12) == conv


def test_series_sum_matches_summed_expansions():
    r = RationalSeries((1,), (1, 0, -1))
    s = RationalSeries((0, 0, 1), (1, -1))
    add = r + s
    rc, sc = r.coefficients(10), s.coefficients(10)
    assert add.coefficients(10) == [a + b for a, b in zip(rc, sc)]


def test_series_reciprocal_product():
    r = RationalSeries((1, 0, 3), (1, -1))
    recip = RationalSeries((1, -1), (1, 0, 3))
    assert (r * recip).coefficients(6) == [1, 0, 0, 0, 0, 0, 0]


def test_series_equality_by_cross_multiplication():
    a = RationalSeries((1,), (1, -1))
    b = RationalSeries((1, 1), (1, 0, -1))  # same function, unreduced
    assert a == b
    assert a != RationalSeries((1,), (1, 1))


def test_series_denominator_validation():
    with pytest.raises(ValueError):
        RationalSeries((1,), (0, 1))
