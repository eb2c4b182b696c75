"""Sparse commutative polynomials over CycNum, plus exact rational series.

Monomials live over a fixed variable universe: u, v for the rank-2
alphabet, u1, v1, u2, v2 for commutator-ideal coordinates, and x, y for
coordinate-change work.  The printing and pivoting order is the
lexicographic order on the exponent tuples in that variable order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .cyclo import CycNum

__all__ = [
    "CommPoly",
    "Monomial",
    "RationalSeries",
    "VARIABLES",
    "intpoly_add",
    "intpoly_mul",
]

VARIABLES = ("u", "v", "u1", "v1", "u2", "v2", "x", "y")
_VAR_INDEX = {name: j for j, name in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)

# slot indices used throughout the package
IU, IV, IU1, IV1, IU2, IV2, IX, IY = range(8)


class Monomial:
    """A power product of the variables, e.g. u^2*v or u1*v2^3."""

    __slots__ = ("exps",)

    def __init__(self, exps: Iterable[int] = ()):
        t = tuple(exps)
        if len(t) < _NVARS:
            t = t + (0,) * (_NVARS - len(t))
        if len(t) > _NVARS or any(e < 0 for e in t):
            raise ValueError(f"bad exponent tuple {t}")
        self.exps = t

    @classmethod
    def from_exponents(cls, exponents: dict[str, int]) -> Monomial:
        exps = [0] * _NVARS
        for name, e in exponents.items():
            exps[_VAR_INDEX[name]] = e
        return cls(exps)

    @property
    def exponents(self) -> dict[str, int]:
        """Exponent map with no zero entries stored."""
        return {VARIABLES[j]: e for j, e in enumerate(self.exps) if e}

    def degree(self) -> int:
        return sum(self.exps)

    def remap(self, mapping: dict[str, str]) -> Monomial:
        exps = [0] * _NVARS
        for j, e in enumerate(self.exps):
            if e:
                exps[_VAR_INDEX[mapping.get(VARIABLES[j], VARIABLES[j])]] += e
        return Monomial(exps)

    def __mul__(self, other: Monomial) -> Monomial:
        out = object.__new__(Monomial)
        out.exps = tuple(a + b for a, b in zip(self.exps, other.exps))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __repr__(self) -> str:
        if not any(self.exps):
            return "1"
        parts = []
        for j, e in enumerate(self.exps):
            if e == 1:
                parts.append(VARIABLES[j])
            elif e:
                parts.append(f"{VARIABLES[j]}^{e}")
        return "*".join(parts)


MONO_ONE = Monomial()


class CommPoly:
    """A sparse polynomial with CycNum coefficients and no stored zeros."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, CycNum] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def _make(cls, terms: dict[Monomial, CycNum]) -> CommPoly:
        self = object.__new__(cls)
        self.terms = terms
        return self

    @classmethod
    def zero(cls) -> CommPoly:
        return cls._make({})

    @classmethod
    def constant(cls, c: CycNum) -> CommPoly:
        return cls({MONO_ONE: c})

    @classmethod
    def variable(cls, name: str, order: int) -> CommPoly:
        mono = Monomial.from_exponents({name: 1})
        return cls._make({mono: CycNum.one(order)})

    @classmethod
    def term(cls, mono: Monomial, coeff: CycNum) -> CommPoly:
        return cls({mono: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: CommPoly) -> CommPoly:
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            s = c if prev is None else prev + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return CommPoly._make(out)

    def __neg__(self) -> CommPoly:
        return CommPoly._make({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: CommPoly) -> CommPoly:
        return self + (-other)

    def __mul__(self, other: CommPoly) -> CommPoly:
        out: dict[Monomial, CycNum] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                c = c1 * c2
                prev = out.get(m)
                s = c if prev is None else prev + c
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return CommPoly._make(out)

    def scale(self, c) -> CommPoly:
        if isinstance(c, (int, Fraction)):
            c = Fraction(c)
            if not c:
                return CommPoly.zero()
            return CommPoly._make({m: v * c for m, v in self.terms.items()})
        if c.is_zero():
            return CommPoly.zero()
        return CommPoly({m: v * c for m, v in self.terms.items()})

    def power(self, k: int) -> CommPoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        if not self.terms:
            return CommPoly.zero() if k else _one_like(self)
        result = CommPoly.constant(CycNum.one(next(iter(self.terms.values())).order))
        for _ in range(k):
            result = result * self
        return result

    def substitute(self, images: dict[str, CommPoly]) -> CommPoly:
        """Apply the ring homomorphism sending each variable to its image."""
        cache: dict[tuple[str, int], CommPoly] = {}
        out = CommPoly.zero()
        for mono, coeff in self.terms.items():
            acc = CommPoly.constant(coeff)
            for name, e in mono.exponents.items():
                img = images.get(name)
                if img is None:
                    raise ValueError(f"no image given for variable {name!r}")
                key = (name, e)
                p = cache.get(key)
                if p is None:
                    p = img.power(e)
                    cache[key] = p
                acc = acc * p
            out = out + acc
        return out

    def remap_variables(self, mapping: dict[str, str]) -> CommPoly:
        out: dict[Monomial, CycNum] = {}
        for m, c in self.terms.items():
            mm = m.remap(mapping)
            prev = out.get(mm)
            s = c if prev is None else prev + c
            if not s.is_zero():
                out[mm] = s
            else:
                out.pop(mm, None)
        return CommPoly._make(out)

    def homogeneous_component(self, d: int) -> CommPoly:
        return CommPoly._make({m: c for m, c in self.terms.items() if m.degree() == d})

    def degree(self) -> int:
        """Total degree, -1 for the zero polynomial."""
        return max((m.degree() for m in self.terms), default=-1)

    def homogeneous_degree(self) -> int | None:
        degs = {m.degree() for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def sorted_terms(self) -> list[tuple[Monomial, CycNum]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].exps, reverse=True)

    def __eq__(self, other) -> bool:
        return isinstance(other, CommPoly) and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            ctext = str(c)
            if " " in ctext:
                ctext = f"({ctext})"
            mtext = repr(m)
            if mtext == "1":
                parts.append(ctext)
            elif ctext == "1":
                parts.append(mtext)
            else:
                parts.append(f"{ctext}*{mtext}")
        return " + ".join(parts)


def _one_like(p: CommPoly) -> CommPoly:
    order = next(iter(p.terms.values())).order
    return CommPoly.constant(CycNum.one(order))


# ----------------------------------------------------------------------
# Integer polynomials in t and rational power series
# ----------------------------------------------------------------------

def _trim_int(p: Iterable[int]) -> tuple[int, ...]:
    t = list(p)
    while len(t) > 1 and t[-1] == 0:
        t.pop()
    return tuple(int(c) for c in t)


def intpoly_add(a: Iterable[int], b: Iterable[int]) -> tuple[int, ...]:
    a, b = list(a), list(b)
    if len(a) < len(b):
        a, b = b, a
    for j, c in enumerate(b):
        a[j] += c
    return _trim_int(a)


def intpoly_mul(a: Iterable[int], b: Iterable[int]) -> tuple[int, ...]:
    a, b = list(a), list(b)
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                if d:
                    out[i + j] += c * d
    return _trim_int(out)


class RationalSeries:
    """A quotient of integer polynomials in t, expanded exactly on demand.

    The numerator and denominator are kept unreduced; equality is decided
    by cross multiplication, so no gcd machinery is needed.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Iterable[int], den: Iterable[int] = (1,)):
        self.num = _trim_int(num)
        self.den = _trim_int(den)
        if self.den[0] == 0:
            raise ValueError("series denominator must have nonzero constant term")

    def coefficients(self, upto: int) -> list[int]:
        """Exact coefficients of t^0 .. t^upto by power series long division."""
        out: list[Fraction] = []
        d0 = self.den[0]
        for k in range(upto + 1):
            acc = Fraction(self.num[k]) if k < len(self.num) else Fraction(0)
            for j in range(1, min(k, len(self.den) - 1) + 1):
                acc -= self.den[j] * out[k - j]
            out.append(acc / d0)
        ints = []
        for q in out:
            if q.denominator != 1:
                raise ValueError(f"non-integer series coefficient {q}")
            ints.append(q.numerator)
        return ints

    def __add__(self, other: RationalSeries) -> RationalSeries:
        return RationalSeries(
            intpoly_add(intpoly_mul(self.num, other.den), intpoly_mul(other.num, self.den)),
            intpoly_mul(self.den, other.den),
        )

    def __mul__(self, other: RationalSeries) -> RationalSeries:
        return RationalSeries(
            intpoly_mul(self.num, other.num), intpoly_mul(self.den, other.den)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return intpoly_mul(self.num, other.den) == intpoly_mul(other.num, self.den)

    __hash__ = None

    def __repr__(self) -> str:
        return f"RationalSeries(num={self.num}, den={self.den})"
