"""Division-free exact row reduction over the cyclotomic field.

Rows are sparse {column: CycNum} maps with no zero entries.  Elimination
uses cross multiplication (row <- p*row - a*pivot) so no field inversion
happens on the elimination path; pivot rows with a rational leading
entry are rescaled by that rational to keep entries small.  Pivoting is
deterministic: always the smallest remaining column.
"""

from __future__ import annotations

from .cyclo import CycNum

__all__ = ["RowEchelon", "express_in_span", "rank_of"]

Row = dict


class RowEchelon:
    """An incrementally maintained echelon basis of a row space."""

    def __init__(self):
        self._pivots: dict[int, Row] = {}

    def reduce(self, row: Row) -> Row:
        """Residual of a row after elimination against the stored pivots."""
        row = {c: v for c, v in row.items() if not v.is_zero()}
        while row:
            lead = min(row)
            piv = self._pivots.get(lead)
            if piv is None:
                return row
            a = row[lead]
            p = piv[lead]
            if p == 1:
                new = dict(row)
            else:
                new = {c: v * p for c, v in row.items()}
            for c, v in piv.items():
                t = new.get(c)
                s = -(a * v) if t is None else t - a * v
                if s.is_zero():
                    new.pop(c, None)
                else:
                    new[c] = s
            row = new
        return row

    def insert(self, row: Row) -> bool:
        """Add a row; True when it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        lead = min(r)
        pval = r[lead]
        if pval.is_rational() and pval != 1:
            q = 1 / pval.rational_value()
            r = {c: v * q for c, v in r.items()}
        self._pivots[lead] = r
        return True

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def rows(self) -> list[Row]:
        return [self._pivots[c] for c in sorted(self._pivots)]


def rank_of(rows) -> int:
    ech = RowEchelon()
    for row in rows:
        ech.insert(row)
    return ech.rank


def express_in_span(rows: list[Row], target: Row, order: int) -> list[CycNum] | None:
    """Exact coefficients writing target as a combination of rows, or None.

    Elimination tracks cofactors; the one division happens at the very
    end when normalizing by the target's accumulated scale.
    """
    one = CycNum.one(order)
    pivots: dict[int, tuple[Row, Row]] = {}

    def _reduce(row: Row, track: Row) -> tuple[Row, Row]:
        row = {c: v for c, v in row.items() if not v.is_zero()}
        track = {c: v for c, v in track.items() if not v.is_zero()}
        while row:
            lead = min(row)
            hit = pivots.get(lead)
            if hit is None:
                return row, track
            prow, ptrack = hit
            a = row[lead]
            p = prow[lead]
            def _combine(cur: Row, other: Row) -> Row:
                if p == 1:
                    new = dict(cur)
                else:
                    new = {c: v * p for c, v in cur.items()}
                for c, v in other.items():
                    t = new.get(c)
                    s = -(a * v) if t is None else t - a * v
                    if s.is_zero():
                        new.pop(c, None)
                    else:
                        new[c] = s
                return new
            row = _combine(row, prow)
            track = _combine(track, ptrack)
        return row, track

    for idx, row in enumerate(rows):
        r, t = _reduce(row, {idx: one})
        if r:
            pivots[min(r)] = (r, t)

    res, track = _reduce(target, {-1: one})
    if res:
        return None
    t0 = track.pop(-1, None)
    if t0 is None:
        raise ArithmeticError("target tracking lost during elimination")
    scale = -t0.inv()
    zero = CycNum.zero(order)
    return [track.get(j, zero) * scale for j in range(len(rows))]
