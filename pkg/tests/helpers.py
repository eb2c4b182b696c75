"""Seeded random element generators shared by the test modules."""

from __future__ import annotations

from fractions import Fraction
from random import Random

from metabelian.assoc import MetAssocElem
from metabelian.cyclo import CycNum, imag_unit
from metabelian.lie import MetLieElem
from metabelian.poly import CommPoly, Monomial


def random_gaussian(rng: Random, order: int, nonzero: bool = False) -> CycNum:
    """A random element of Q(i) inside the order-m field."""
    while True:
        a = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        b = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        c = CycNum.from_rational(order, a) + imag_unit(order) * b
        if not (nonzero and c.is_zero()):
            return c


def random_cyc(rng: Random, order: int, nonzero: bool = False) -> CycNum:
    """A random field element with a few zeta-power components."""
    while True:
        c = CycNum.zero(order)
        for _ in range(rng.randint(1, 3)):
            k = rng.randint(0, order - 1)
            q = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            c = c + CycNum(order, {k: q})
        if not (nonzero and c.is_zero()):
            return c


def random_assoc(
    rng: Random, order: int = 4, max_degree: int = 5, terms: int = 4
) -> MetAssocElem:
    e = MetAssocElem.zero()
    for _ in range(terms):
        c = random_gaussian(rng, order)
        if rng.random() < 0.5:
            a = rng.randint(0, max_degree)
            b = rng.randint(0, max_degree - a)
            e = e + MetAssocElem(CommPoly.term(Monomial((a, b)), c))
        else:
            inner = max(0, max_degree - 2)
            a = rng.randint(0, inner)
            b = rng.randint(0, inner - a)
            cc = rng.randint(0, inner - a - b)
            d = rng.randint(0, inner - a - b - cc)
            mono = Monomial((0, 0, a, b, cc, d))
            e = e + MetAssocElem.from_comm(CommPoly.term(mono, c))
    return e


def random_lie(
    rng: Random, order: int = 4, max_degree: int = 5, terms: int = 3
) -> MetLieElem:
    e = MetLieElem(
        random_gaussian(rng, order), random_gaussian(rng, order)
    )
    inner = max(0, max_degree - 2)
    for _ in range(terms):
        a = rng.randint(0, inner)
        b = rng.randint(0, inner - a)
        e = e + MetLieElem.from_comm(
            CommPoly.term(Monomial((a, b)), random_gaussian(rng, order)),
            order=order,
        )
    return e


def random_word(rng: Random, max_len: int = 6) -> str:
    return "".join(rng.choice("uv") for _ in range(rng.randint(0, max_len)))
