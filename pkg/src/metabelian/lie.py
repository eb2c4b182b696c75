"""The rank-2 free metabelian Lie algebra and its associative embedding.

An element is (lin_u, lin_v, comm): two scalars for the generators and a
polynomial in u, v for the commutator ideal, where the monomial u^a v^b
stands for the basis bracket [v,u] ad^a(u) ad^b(v).  The commutator
ideal is a free rank-1 module over the polynomial ring acting through
ad, which is what makes this coordinate form a basis.
"""

from __future__ import annotations

from .cyclo import CycNum
from .poly import CommPoly, Monomial

__all__ = [
    "MetLieElem",
    "bracket",
    "embed_assoc",
]


class MetLieElem:
    """An element of the rank-2 free metabelian Lie algebra."""

    __slots__ = ("lin_u", "lin_v", "comm")

    def __init__(self, lin_u: CycNum, lin_v: CycNum, comm: CommPoly | None = None):
        if lin_u.order != lin_v.order:
            raise ValueError("mixed cyclotomic orders in linear part")
        self.lin_u = lin_u
        self.lin_v = lin_v
        self.comm = comm if comm is not None else CommPoly.zero()

    @property
    def order(self) -> int:
        return self.lin_u.order

    @classmethod
    def zero(cls, order: int = 4) -> MetLieElem:
        z = CycNum.zero(order)
        return cls(z, z)

    @classmethod
    def generator(cls, name: str, order: int = 4) -> MetLieElem:
        if name == "u":
            return cls(CycNum.one(order), CycNum.zero(order))
        if name == "v":
            return cls(CycNum.zero(order), CycNum.one(order))
        raise ValueError(f"generators are 'u' and 'v', got {name!r}")

    @classmethod
    def from_comm(cls, comm: CommPoly, order: int | None = None) -> MetLieElem:
        if order is None:
            if comm.is_zero():
                raise ValueError("order needed for a zero commutator part")
            order = next(iter(comm.terms.values())).order
        z = CycNum.zero(order)
        return cls(z, z, comm)

    def is_zero(self) -> bool:
        return self.lin_u.is_zero() and self.lin_v.is_zero() and self.comm.is_zero()

    def __add__(self, other: MetLieElem) -> MetLieElem:
        return MetLieElem(
            self.lin_u + other.lin_u, self.lin_v + other.lin_v, self.comm + other.comm
        )

    def __neg__(self) -> MetLieElem:
        return MetLieElem(-self.lin_u, -self.lin_v, -self.comm)

    def __sub__(self, other: MetLieElem) -> MetLieElem:
        return self + (-other)

    def scale(self, c) -> MetLieElem:
        return MetLieElem(self.lin_u * c, self.lin_v * c, self.comm.scale(c))

    def _linear_poly(self) -> CommPoly:
        terms = {}
        if not self.lin_u.is_zero():
            terms[Monomial((1, 0))] = self.lin_u
        if not self.lin_v.is_zero():
            terms[Monomial((0, 1))] = self.lin_v
        return CommPoly(terms)

    def bracket(self, other: MetLieElem) -> MetLieElem:
        """Lie bracket; brackets of two commutator terms vanish."""
        c = self.lin_v * other.lin_u - self.lin_u * other.lin_v
        comm = CommPoly.constant(c) if not c.is_zero() else CommPoly.zero()
        comm = comm + self.comm * other._linear_poly()
        comm = comm - other.comm * self._linear_poly()
        return MetLieElem.from_comm(comm, order=self.order)

    def module_action(self, f: CommPoly) -> MetLieElem:
        """Act by a polynomial through ad; defined on the commutator ideal only."""
        if not (self.lin_u.is_zero() and self.lin_v.is_zero()):
            raise ValueError("module action needs a zero linear part")
        return MetLieElem.from_comm(self.comm * f, order=self.order)

    def homogeneous_component(self, d: int) -> MetLieElem:
        z = CycNum.zero(self.order)
        lin_u = self.lin_u if d == 1 else z
        lin_v = self.lin_v if d == 1 else z
        comm = self.comm.homogeneous_component(d - 2) if d >= 2 else CommPoly.zero()
        return MetLieElem(lin_u, lin_v, comm)

    def degree(self) -> int:
        d = -1
        if not (self.lin_u.is_zero() and self.lin_v.is_zero()):
            d = 1
        dc = self.comm.degree()
        if dc >= 0:
            d = max(d, dc + 2)
        return d

    def homogeneous_degree(self) -> int | None:
        degs = set()
        if not (self.lin_u.is_zero() and self.lin_v.is_zero()):
            degs.add(1)
        degs |= {m.degree() + 2 for m in self.comm.terms}
        return degs.pop() if len(degs) == 1 else None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MetLieElem)
            and self.lin_u == other.lin_u
            and self.lin_v == other.lin_v
            and self.comm == other.comm
        )

    __hash__ = None

    def __repr__(self) -> str:
        from .expr import print_elem

        return print_elem(self)


def bracket(e1: MetLieElem, e2: MetLieElem) -> MetLieElem:
    return e1.bracket(e2)


def embed_assoc(e: MetLieElem):
    """Embed into the associative algebra via the commutator operation.

    ad by u becomes right minus left multiplication, so the comm monomial
    u^a v^b lands on (u2 - u1)^a (v2 - v1)^b over the [v,u] marker.
    """
    from .assoc import MetAssocElem

    order = e.order
    one = CycNum.one(order)
    poly_terms = {}
    if not e.lin_u.is_zero():
        poly_terms[Monomial((1, 0))] = e.lin_u
    if not e.lin_v.is_zero():
        poly_terms[Monomial((0, 1))] = e.lin_v

    ad_u = CommPoly(
        {Monomial.from_exponents({"u2": 1}): one, Monomial.from_exponents({"u1": 1}): -one}
    )
    ad_v = CommPoly(
        {Monomial.from_exponents({"v2": 1}): one, Monomial.from_exponents({"v1": 1}): -one}
    )
    powers_u: dict[int, CommPoly] = {0: CommPoly.constant(one)}
    powers_v: dict[int, CommPoly] = {0: CommPoly.constant(one)}

    comm = CommPoly.zero()
    for mono, c in e.comm.terms.items():
        a, b = mono.exps[0], mono.exps[1]
        for k in range(1, a + 1):
            if k not in powers_u:
                powers_u[k] = powers_u[k - 1] * ad_u
        for k in range(1, b + 1):
            if k not in powers_v:
                powers_v[k] = powers_v[k - 1] * ad_v
        comm = comm + (powers_u[a] * powers_v[b]).scale(c)
    return MetAssocElem(CommPoly(poly_terms), comm)
