import itertools
from math import comb
from random import Random

import pytest

from metabelian.assoc import MetAssocElem, basis, commutator, from_word
from metabelian.cyclo import CycNum
from metabelian.poly import CommPoly, Monomial
from helpers import random_assoc, random_word


def _mono(*exps):
    return Monomial(exps)


def _one():
    return CycNum.one(4)


def test_from_word_examples():
    vu = from_word("vu")
    assert vu.poly_part == CommPoly.term(_mono(1, 1), _one())
    assert vu.comm_part == CommPoly.constant(_one())

    uvu = from_word("uvu")
    assert uvu.poly_part == CommPoly.term(_mono(2, 1), _one())
    assert uvu.comm_part == CommPoly.term(_mono(0, 0, 1), _one())

    uuvv = from_word("uuvv")
    assert uuvv.poly_part == CommPoly.term(_mono(2, 2), _one())
    assert uuvv.comm_part.is_zero()

    assert from_word("") == MetAssocElem.one(4)
    with pytest.raises(ValueError):
        from_word("uw")


def test_mul_examples():
    u = MetAssocElem.letter("u")
    v = MetAssocElem.letter("v")
    assert v * u == from_word("vu")
    bracket = MetAssocElem.from_comm(CommPoly.constant(_one()))
    assert (bracket * bracket).is_zero()
    assert from_word("uv") * u == from_word("uvu")


def test_commutator_examples():
    u = MetAssocElem.letter("u")
    v = MetAssocElem.letter("v")
    c = commutator(v, u)
    assert c.poly_part.is_zero()
    assert c.comm_part == CommPoly.constant(_one())
    e = from_word("uv") + from_word("vu")
    assert commutator(e, e).is_zero()


def test_lift_commutator_degree():
    # [uv+vu, u^n+v^n] is homogeneous of degree n+2 with zero image in the quotient
    for n in (3, 4):
        p = from_word("uv") + from_word("vu")
        q = from_word("u" * n) + from_word("v" * n)
        c = commutator(p, q)
        assert c.poly_part.is_zero()
        assert c.homogeneous_degree() == n + 2


def test_homogeneous_component():
    e = from_word("uv") + from_word("vu")  # 2uv + [v,u], all degree 2
    assert e.homogeneous_component(2) == e
    f = MetAssocElem.letter("u") + from_word("uuv")
    assert f.homogeneous_component(3) == from_word("uuv")
    g = from_word("u" * 3) * MetAssocElem.from_comm(CommPoly.constant(_one()))
    assert g.homogeneous_component(5) == g


def test_basis_counts_and_order():
    for d in range(9):
        want = (d + 1) + (comb(d + 1, 3) if d >= 2 else 0)
        assert len(basis(d)) == want
    b2 = basis(2)
    assert b2[0].poly_part == CommPoly.term(_mono(2, 0), _one())
    assert b2[1].poly_part == CommPoly.term(_mono(1, 1), _one())
    assert b2[2].poly_part == CommPoly.term(_mono(0, 2), _one())
    assert b2[3].comm_part == CommPoly.constant(_one())
    assert basis(0) == [MetAssocElem.one(4)]


def test_word_oracle_exhaustive():
    # the closed-form product must agree with letter-by-letter straightening
    for total in range(7):
        for l1 in range(total + 1):
            for w1 in itertools.product("uv", repeat=l1):
                for w2 in itertools.product("uv", repeat=total - l1):
                    a, b = "".join(w1), "".join(w2)
                    assert from_word(a) * from_word(b) == from_word(a + b)


def test_associativity_randomized():
    rng = Random(11)
    for _ in range(150):
        e1 = random_assoc(rng, max_degree=4, terms=3)
        e2 = random_assoc(rng, max_degree=4, terms=3)
        e3 = random_assoc(rng, max_degree=4, terms=3)
        assert (e1 * e2) * e3 == e1 * (e2 * e3)


def test_metabelian_law_randomized():
    rng = Random(13)
    for _ in range(150):
        a, b, c, d = (random_assoc(rng, max_degree=3, terms=2) for _ in range(4))
        assert (commutator(a, b) * commutator(c, d)).is_zero()


def test_normalization_identities():
    u = MetAssocElem.letter("u")
    bracket = MetAssocElem.from_comm(CommPoly.constant(_one()))
    assert (u * bracket).comm_part == CommPoly.term(_mono(0, 0, 1), _one())
    assert (bracket * u).comm_part == CommPoly.term(_mono(0, 0, 0, 0, 1), _one())
    # left factors of a commutator commute: uv[v,u] == vu[v,u]
    lhs = from_word("uv") * bracket
    assert lhs.comm_part == CommPoly.term(_mono(0, 0, 1, 1), _one())
    assert from_word("vu") * bracket == lhs


def test_scalar_and_power():
    rng = Random(17)
    e = random_assoc(rng, max_degree=3, terms=3)
    assert e * 2 == e + e
    assert e ** 2 == e * e
    assert e ** 0 == MetAssocElem.one(4)


def test_word_concat_randomized():
    rng = Random(19)
    for _ in range(100):
        w1, w2 = random_word(rng, 5), random_word(rng, 5)
        assert from_word(w1) * from_word(w2) == from_word(w1 + w2)
