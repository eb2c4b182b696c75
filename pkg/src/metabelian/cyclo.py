"""Exact arithmetic in the cyclotomic fields Q(zeta_m).

A value is the canonical residue modulo the m-th cyclotomic polynomial,
stored sparsely as {exponent: rational} with all exponents below phi(m)
and no zero entries.  Two values are equal exactly when their maps are
equal, so equality is decidable, and every operation is exact: there is
no floating point anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm

__all__ = [
    "CycNum",
    "ambient_order",
    "cyclotomic_polynomial",
    "euler_phi",
    "imag_unit",
    "root_of_unity",
]

_F0 = Fraction(0)
_F1 = Fraction(1)


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("cyclotomic order must be a positive integer")
    result = m
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            result -= result // p
            while rest % p == 0:
                rest //= p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def ambient_order(n: int) -> int:
    """Smallest order whose field contains both i and a primitive n-th root."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return lcm(4, n)


def _divide_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic, so the quotient stays integral
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for shift in range(len(num) - dn - 1, -1, -1):
        c = num[shift + dn]
        if c:
            quot[shift] = c
            for j, dc in enumerate(den):
                num[shift + j] -= c * dc
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Dense integer coefficients of Phi_m, index equals exponent.

    Computed once per order by dividing x^m - 1 by Phi_d over the proper
    divisors d of m, and cached for the rest of the process.
    """
    if m < 1:
        raise ValueError("cyclotomic order must be a positive integer")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _divide_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce_dense(order: int, dense: list[Fraction]) -> dict[int, Fraction]:
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    for e in range(len(dense) - 1, deg - 1, -1):
        c = dense[e]
        if c:
            dense[e] = _F0
            base = e - deg
            for j in range(deg):
                pj = phi[j]
                if pj:
                    dense[base + j] -= c * pj
    return {e: c for e, c in enumerate(dense[:deg]) if c}


def _ptrim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _pdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    if len(a) < len(b):
        return [], a
    q = [_F0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        c = a[shift + len(b) - 1] / lead
        if c:
            q[shift] = c
            for j, bc in enumerate(b):
                a[shift + j] -= c * bc
    return q, _ptrim(a)


def _psub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [_F0] * (len(b) - len(a))
    for j, c in enumerate(b):
        out[j] -= c
    return out


def _pmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_F0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                if d:
                    out[i + j] += c * d
    return out


class CycNum:
    """An element of Q(zeta_m), immutable after construction."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: dict[int, Fraction] | None = None):
        if order < 1:
            raise ValueError("cyclotomic order must be a positive integer")
        deg = euler_phi(order)
        items: list[tuple[int, Fraction]] = []
        in_range = True
        for e, c in (coeffs or {}).items():
            q = c if isinstance(c, Fraction) else Fraction(c)
            if not q:
                continue
            e = int(e)
            if not 0 <= e < deg:
                in_range = False
            items.append((e, q))
        self.order = order
        if in_range:
            self.coeffs = dict(items)
        else:
            dense = [_F0] * order
            for e, q in items:
                dense[e % order] += q
            self.coeffs = _reduce_dense(order, dense)

    @classmethod
    def _make(cls, order: int, coeffs: dict[int, Fraction]) -> CycNum:
        self = object.__new__(cls)
        self.order = order
        self.coeffs = coeffs
        return self

    @classmethod
    def zero(cls, order: int) -> CycNum:
        return cls(order, {})

    @classmethod
    def one(cls, order: int) -> CycNum:
        return cls(order, {0: _F1})

    @classmethod
    def from_rational(cls, order: int, value) -> CycNum:
        return cls(order, {0: Fraction(value)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return not self.coeffs or set(self.coeffs) == {0}

    def rational_value(self) -> Fraction:
        if not self.coeffs:
            return _F0
        if set(self.coeffs) != {0}:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise ValueError(
                    f"mixed cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNum._make(self.order, {0: q} if q else {})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, _F0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return CycNum._make(self.order, out)

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum._make(self.order, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return CycNum._make(self.order, {})
            return CycNum._make(self.order, {e: c * q for e, c in self.coeffs.items()})
        if not isinstance(other, CycNum):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"mixed cyclotomic orders {self.order} and {other.order}")
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return CycNum._make(self.order, {})
        if len(a) == 1 and 0 in a:
            q = a[0]
            return CycNum._make(self.order, {e: c * q for e, c in b.items()})
        if len(b) == 1 and 0 in b:
            q = b[0]
            return CycNum._make(self.order, {e: c * q for e, c in a.items()})
        deg = euler_phi(self.order)
        dense = [_F0] * (2 * deg - 1)
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                dense[e1 + e2] += c1 * c2
        return CycNum._make(self.order, _reduce_dense(self.order, dense))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycNum:
        if k < 0:
            return self.inv() ** (-k)
        result = CycNum.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inv(self) -> CycNum:
        """Multiplicative inverse; division by zero is a reported error."""
        if not self.coeffs:
            raise ZeroDivisionError(f"division by zero in Q(zeta_{self.order})")
        if self.is_rational():
            return CycNum._make(self.order, {0: 1 / self.coeffs[0]})
        deg = euler_phi(self.order)
        a = [_F0] * deg
        for e, c in self.coeffs.items():
            a[e] = c
        # extended euclid against Phi_m, tracking the cofactor of a only
        r0 = _ptrim([Fraction(c) for c in cyclotomic_polynomial(self.order)])
        r1 = _ptrim(a)
        s0: list[Fraction] = []
        s1: list[Fraction] = [_F1]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _ptrim(_psub(s0, _pmul(q, s1)))
        if not r1:
            raise ArithmeticError("gcd degenerated, Phi_m should be irreducible")
        g = r1[0]
        return CycNum._make(
            self.order, _reduce_dense(self.order, [c / g for c in s1])
        )

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced * self.inv()

    def conj(self) -> CycNum:
        """Complex conjugation, zeta_m maps to zeta_m^(m-1)."""
        if not self.coeffs:
            return self
        return CycNum(
            self.order,
            {(self.order - e) % self.order: c for e, c in self.coeffs.items()},
        )

    def as_gaussian(self) -> tuple[Fraction, Fraction] | None:
        """Write the value as a + b*i with rational a, b, or None."""
        if self.is_rational():
            return (self.coeffs.get(0, _F0), _F0)
        if self.order % 4:
            return None
        iu = imag_unit(self.order)
        b = None
        for e, c in self.coeffs.items():
            if e == 0:
                continue
            ie = iu.coeffs.get(e)
            if ie is None:
                return None
            b = c / ie
            break
        if b is None:
            return None
        a = self.coeffs.get(0, _F0) - b * iu.coeffs.get(0, _F0)
        if CycNum.from_rational(self.order, a) + iu * b == self:
            return (a, b)
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return self.is_rational() and self.coeffs.get(0, _F0) == q
        if not isinstance(other, CycNum):
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        return (
            self.is_rational()
            and other.is_rational()
            and self.coeffs.get(0, _F0) == other.coeffs.get(0, _F0)
        )

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs.get(0, _F0))
        return hash((self.order, tuple(sorted(self.coeffs.items()))))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            neg = c < 0
            mag = -c if neg else c
            if e == 0:
                body = _fraction_text(mag)
            elif mag == 1:
                body = f"z({self.order},{e})"
            else:
                body = f"{_fraction_text(mag)}*z({self.order},{e})"
            parts.append((neg, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"CycNum({self.order}, {self})"


def _fraction_text(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def root_of_unity(m: int, k: int) -> CycNum:
    """The canonical representative of zeta_m^k."""
    if m < 1:
        raise ValueError("cyclotomic order must be a positive integer")
    return CycNum(m, {k % m: _F1})


def imag_unit(order: int) -> CycNum:
    """The square root of -1 inside Q(zeta_order); requires 4 | order."""
    if order % 4:
        raise ValueError(f"Q(zeta_{order}) does not contain i, need 4 | order")
    return root_of_unity(order, order // 4)
