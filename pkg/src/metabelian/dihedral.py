"""The dihedral group of the regular n-gon acting on the algebras.

Group elements are written tau^flip rho^rot where rho rotates by 2*pi/n
and tau is the reflection swapping the diagonalizing coordinates u and
v.  On u, v the rotation acts by u -> xi*u, v -> conj(xi)*v with xi a
primitive n-th root of unity taken inside the ambient field of order
lcm(4, n).  Reflections act as algebra automorphisms, so their effect on
a basis word u^a v^b is the canonical form of the swapped word, which
picks up commutator corrections; the commutator coordinates themselves
transform without corrections.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .assoc import MetAssocElem
from .cyclo import CycNum, ambient_order, root_of_unity
from .lie import MetLieElem
from .poly import IU, IU1, IU2, IV, IV1, IV2, CommPoly, Monomial

__all__ = [
    "DihedralElement",
    "act_assoc",
    "act_lie",
    "act_tensor",
    "act_uv",
    "group_elements",
    "reynolds_assoc",
    "reynolds_lie",
    "reynolds_tensor",
    "reynolds_uv",
    "rotation_scalar",
]


@dataclass(frozen=True)
class DihedralElement:
    """tau^flip rho^rot in the symmetry group of the regular n-gon."""

    n: int
    rot: int = 0
    flip: bool = False

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("dihedral groups here need n >= 3")
        object.__setattr__(self, "rot", self.rot % self.n)

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        """Composition, applying ``other`` first."""
        if self.n != other.n:
            raise ValueError("mixed dihedral groups")
        if other.flip:
            return DihedralElement(self.n, other.rot - self.rot, not self.flip)
        return DihedralElement(self.n, self.rot + other.rot, self.flip)

    def inverse(self) -> DihedralElement:
        if self.flip:
            return self
        return DihedralElement(self.n, -self.rot, False)

    @staticmethod
    def identity(n: int) -> DihedralElement:
        return DihedralElement(n, 0, False)


def group_elements(n: int) -> list[DihedralElement]:
    """All 2n elements, rotations first, then the reflections tau rho^k."""
    if n < 3:
        raise ValueError("dihedral groups here need n >= 3")
    return [DihedralElement(n, k, False) for k in range(n)] + [
        DihedralElement(n, k, True) for k in range(n)
    ]


@lru_cache(maxsize=None)
def rotation_scalar(n: int, j: int) -> CycNum:
    """xi^j in the ambient field, xi the primitive n-th root of unity."""
    m = ambient_order(n)
    return root_of_unity(m, (j % n) * (m // n))


@lru_cache(maxsize=None)
def _swap_straighten(a: int, b: int, order: int) -> MetAssocElem:
    """Canonical form of the word v^a u^b."""
    one = CycNum.one(order)
    va = MetAssocElem(CommPoly.term(Monomial((0, a)), one))
    ub = MetAssocElem(CommPoly.term(Monomial((b, 0)), one))
    return va * ub


def act_assoc(g: DihedralElement, e: MetAssocElem) -> MetAssocElem:
    """Algebra automorphism action on a canonical element.

    Elements must carry coefficients in the ambient field of order
    lcm(4, g.n) so that xi exists.
    """
    order = ambient_order(g.n)
    poly_out: dict[Monomial, CycNum] = {}
    comm_out: dict[Monomial, CycNum] = {}

    def _bump(target: dict, mono: Monomial, val: CycNum) -> None:
        prev = target.get(mono)
        s = val if prev is None else prev + val
        if s.is_zero():
            target.pop(mono, None)
        else:
            target[mono] = s

    for mono, c in e.poly_part.terms.items():
        a, b = mono.exps[IU], mono.exps[IV]
        s = c * rotation_scalar(g.n, g.rot * (a - b))
        if not g.flip:
            _bump(poly_out, mono, s)
        else:
            w = _swap_straighten(a, b, order)
            for m2, c2 in w.poly_part.terms.items():
                _bump(poly_out, m2, s * c2)
            for m2, c2 in w.comm_part.terms.items():
                _bump(comm_out, m2, s * c2)

    for mono, c in e.comm_part.terms.items():
        a, b, cc, d = (mono.exps[IU1], mono.exps[IV1], mono.exps[IU2], mono.exps[IV2])
        s = c * rotation_scalar(g.n, g.rot * (a - b + cc - d))
        if g.flip:
            # tau sends [v,u] to -[v,u] and swaps left/right u,v trackers
            exps = [0] * 8
            exps[IU1], exps[IV1], exps[IU2], exps[IV2] = b, a, d, cc
            _bump(comm_out, Monomial(exps), -s)
        else:
            _bump(comm_out, mono, s)

    return MetAssocElem(CommPoly._make(poly_out), CommPoly._make(comm_out))


def act_lie(g: DihedralElement, e: MetLieElem) -> MetLieElem:
    if g.flip:
        lin_u = e.lin_v * rotation_scalar(g.n, -g.rot)
        lin_v = e.lin_u * rotation_scalar(g.n, g.rot)
    else:
        lin_u = e.lin_u * rotation_scalar(g.n, g.rot)
        lin_v = e.lin_v * rotation_scalar(g.n, -g.rot)

    comm_out: dict[Monomial, CycNum] = {}
    for mono, c in e.comm.terms.items():
        a, b = mono.exps[IU], mono.exps[IV]
        s = c * rotation_scalar(g.n, g.rot * (a - b))
        if g.flip:
            mono = Monomial((b, a))
            s = -s
        prev = comm_out.get(mono)
        t = s if prev is None else prev + s
        if t.is_zero():
            comm_out.pop(mono, None)
        else:
            comm_out[mono] = t
    return MetLieElem(lin_u, lin_v, CommPoly._make(comm_out))


def _act_comm_poly(g: DihedralElement, p: CommPoly, pairs) -> CommPoly:
    """Commutative monomial action; pairs lists (u-slot, v-slot) indices."""
    out: dict[Monomial, CycNum] = {}
    for mono, c in p.terms.items():
        weight = sum(mono.exps[iu] - mono.exps[iv] for iu, iv in pairs)
        s = c * rotation_scalar(g.n, g.rot * weight)
        if g.flip:
            exps = list(mono.exps)
            for iu, iv in pairs:
                exps[iu], exps[iv] = exps[iv], exps[iu]
            mono = Monomial(exps)
        prev = out.get(mono)
        t = s if prev is None else prev + s
        if t.is_zero():
            out.pop(mono, None)
        else:
            out[mono] = t
    return CommPoly._make(out)


def act_uv(g: DihedralElement, p: CommPoly) -> CommPoly:
    """The action on the commutative polynomial ring in u, v."""
    return _act_comm_poly(g, p, ((IU, IV),))


def act_tensor(g: DihedralElement, p: CommPoly) -> CommPoly:
    """The diagonal action on the ring in u1, v1, u2, v2 (no sign twist)."""
    return _act_comm_poly(g, p, ((IU1, IV1), (IU2, IV2)))


def _average(n: int, e, act):
    acc = None
    for g in group_elements(n):
        img = act(g, e)
        acc = img if acc is None else acc + img
    return acc.scale(Fraction(1, 2 * n))


def reynolds_assoc(n: int, e: MetAssocElem) -> MetAssocElem:
    """Group average; a projection onto the invariants."""
    return _average(n, e, act_assoc)


def reynolds_lie(n: int, e: MetLieElem) -> MetLieElem:
    return _average(n, e, act_lie)


def reynolds_uv(n: int, p: CommPoly) -> CommPoly:
    return _average(n, p, act_uv)


def reynolds_tensor(n: int, p: CommPoly) -> CommPoly:
    return _average(n, p, act_tensor)
