"""Canonical forms in the rank-2 free metabelian associative algebra.

An element is a pair (poly_part, comm_part).  The poly part collects the
basis words u^a v^b as a commutative polynomial in u, v.  The comm part
encodes the commutator ideal: the monomial u1^a v1^b u2^c v2^d stands for
the basis word u^a v^b [v,u] u^c v^d, with u1, v1 tracking multipliers on
the left of [v,u] and u2, v2 multipliers on the right.  This works
because left factors of a commutator commute with each other, right
factors commute with each other, and any product of two commutator terms
vanishes.

Multiplication uses a closed form for the cross term that appears when
the u-letters of the right factor move through the v-letters of the left
factor.  ``from_word`` straightens a word letter by letter using only
the rewrite vu = uv + [v,u]; it is deliberately independent of the
closed form so that the two can be checked against each other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cyclo import CycNum
from .poly import IU1, IU2, IV1, IV2, CommPoly, Monomial

__all__ = [
    "MetAssocElem",
    "basis",
    "commutator",
    "from_word",
]

_TO_LEFT = {"u": "u1", "v": "v1"}
_TO_RIGHT = {"u": "u2", "v": "v2"}


def _comm_monomial(a: int, b: int, c: int, d: int) -> Monomial:
    exps = [0] * 8
    exps[IU1], exps[IV1], exps[IU2], exps[IV2] = a, b, c, d
    return Monomial(exps)


def _cross_term(p1: CommPoly, p2: CommPoly) -> CommPoly:
    """Commutator terms of (sum of u^a v^b) * (sum of u^c v^d)."""
    out: dict[Monomial, CycNum] = {}
    for m1, c1 in p1.terms.items():
        a, b = m1.exps[0], m1.exps[1]
        if b == 0:
            continue
        for m2, c2 in p2.terms.items():
            c, d = m2.exps[0], m2.exps[1]
            if c == 0:
                continue
            coeff = c1 * c2
            for i in range(c):
                for j in range(b):
                    mono = _comm_monomial(a + i, j, c - 1 - i, b - 1 - j + d)
                    prev = out.get(mono)
                    s = coeff if prev is None else prev + coeff
                    if s.is_zero():
                        out.pop(mono, None)
                    else:
                        out[mono] = s
    return CommPoly._make(out)


class MetAssocElem:
    """An element of the rank-2 free metabelian associative algebra."""

    __slots__ = ("poly_part", "comm_part")

    def __init__(self, poly_part: CommPoly | None = None, comm_part: CommPoly | None = None):
        self.poly_part = poly_part if poly_part is not None else CommPoly.zero()
        self.comm_part = comm_part if comm_part is not None else CommPoly.zero()

    @classmethod
    def zero(cls) -> MetAssocElem:
        return cls()

    @classmethod
    def one(cls, order: int = 4) -> MetAssocElem:
        return cls(CommPoly.constant(CycNum.one(order)))

    @classmethod
    def letter(cls, name: str, order: int = 4) -> MetAssocElem:
        if name not in ("u", "v"):
            raise ValueError(f"generators are 'u' and 'v', got {name!r}")
        return cls(CommPoly.variable(name, order))

    @classmethod
    def from_poly(cls, p: CommPoly) -> MetAssocElem:
        return cls(p, CommPoly.zero())

    @classmethod
    def from_comm(cls, h: CommPoly) -> MetAssocElem:
        return cls(CommPoly.zero(), h)

    def is_zero(self) -> bool:
        return self.poly_part.is_zero() and self.comm_part.is_zero()

    def __add__(self, other: MetAssocElem) -> MetAssocElem:
        return MetAssocElem(
            self.poly_part + other.poly_part, self.comm_part + other.comm_part
        )

    def __neg__(self) -> MetAssocElem:
        return MetAssocElem(-self.poly_part, -self.comm_part)

    def __sub__(self, other: MetAssocElem) -> MetAssocElem:
        return self + (-other)

    def scale(self, c) -> MetAssocElem:
        return MetAssocElem(self.poly_part.scale(c), self.comm_part.scale(c))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        if not isinstance(other, MetAssocElem):
            return NotImplemented
        p1, h1 = self.poly_part, self.comm_part
        p2, h2 = other.poly_part, other.comm_part
        comm = (
            p1.remap_variables(_TO_LEFT) * h2
            + h1 * p2.remap_variables(_TO_RIGHT)
            + _cross_term(p1, p2)
        )
        return MetAssocElem(p1 * p2, comm)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> MetAssocElem:
        if k < 0:
            raise ValueError("negative power in the algebra")
        result = MetAssocElem.one(self._order())
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def commutator(self, other: MetAssocElem) -> MetAssocElem:
        return self * other - other * self

    def homogeneous_component(self, d: int) -> MetAssocElem:
        if d < 0:
            return MetAssocElem.zero()
        comm = (
            self.comm_part.homogeneous_component(d - 2)
            if d >= 2
            else CommPoly.zero()
        )
        return MetAssocElem(self.poly_part.homogeneous_component(d), comm)

    def degree(self) -> int:
        """Total degree, -1 for zero; comm monomials weigh a+b+c+d+2."""
        dp = self.poly_part.degree()
        dc = self.comm_part.degree()
        return max(dp, dc + 2 if dc >= 0 else -1)

    def homogeneous_degree(self) -> int | None:
        degs = {m.degree() for m in self.poly_part.terms}
        degs |= {m.degree() + 2 for m in self.comm_part.terms}
        return degs.pop() if len(degs) == 1 else None

    def _order(self) -> int:
        for c in self.poly_part.terms.values():
            return c.order
        for c in self.comm_part.terms.values():
            return c.order
        return 4

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MetAssocElem)
            and self.poly_part == other.poly_part
            and self.comm_part == other.comm_part
        )

    __hash__ = None

    def __repr__(self) -> str:
        from .expr import print_elem

        return print_elem(self)


def commutator(e1: MetAssocElem, e2: MetAssocElem) -> MetAssocElem:
    return e1.commutator(e2)


@lru_cache(maxsize=None)
def _mono_times_u(a: int, b: int, order: int) -> MetAssocElem:
    """Straighten the word u^a v^b u with one vu = uv + [v,u] rewrite per step."""
    if b == 0:
        return MetAssocElem(
            CommPoly.term(Monomial((a + 1,)), CycNum.one(order))
        )
    rec = _mono_times_u(a, b - 1, order)
    appended = _times_v(rec)
    bump = CommPoly.term(_comm_monomial(a, b - 1, 0, 0), CycNum.one(order))
    return appended + MetAssocElem.from_comm(bump)


def _times_v(e: MetAssocElem) -> MetAssocElem:
    """Right multiplication by v, which never needs rewriting.

    Appending v to a basis word u^a v^b and appending any letter to a
    commutator term are already canonical (right factors of a commutator
    commute).
    """
    shift = Monomial.from_exponents({"v2": 1})
    comm_terms = {m * shift: c for m, c in e.comm_part.terms.items()}
    vstep = Monomial.from_exponents({"v": 1})
    poly_terms = {m * vstep: c for m, c in e.poly_part.terms.items()}
    return MetAssocElem(CommPoly._make(poly_terms), CommPoly._make(comm_terms))


def _times_u(e: MetAssocElem) -> MetAssocElem:
    shift = Monomial.from_exponents({"u2": 1})
    comm = CommPoly._make({m * shift: c for m, c in e.comm_part.terms.items()})
    out = MetAssocElem.from_comm(comm)
    for mono, c in e.poly_part.terms.items():
        out = out + _mono_times_u(mono.exps[0], mono.exps[1], c.order).scale(c)
    return out


def from_word(word: str, order: int = 4) -> MetAssocElem:
    """Canonical form of a product of letters, the straightening oracle.

    The empty word gives 1.  Letters outside {u, v} are rejected.
    """
    e = MetAssocElem.one(order)
    for ch in word:
        if ch == "v":
            e = _times_v(e)
        elif ch == "u":
            e = _times_u(e)
        else:
            raise ValueError(f"word letters must be 'u' or 'v', got {ch!r}")
    return e


def basis(degree: int, order: int = 4) -> list[MetAssocElem]:
    """All degree-d basis monomials, largest first in the monomial order."""
    if degree < 0:
        return []
    one = CycNum.one(order)
    out = [
        MetAssocElem(CommPoly.term(Monomial((a, degree - a)), one))
        for a in range(degree, -1, -1)
    ]
    inner = degree - 2
    if inner >= 0:
        monos = []
        for a in range(inner, -1, -1):
            for b in range(inner - a, -1, -1):
                for c in range(inner - a - b, -1, -1):
                    monos.append(_comm_monomial(a, b, c, inner - a - b - c))
        monos.sort(key=lambda m: m.exps, reverse=True)
        out.extend(MetAssocElem.from_comm(CommPoly.term(m, one)) for m in monos)
    return out
