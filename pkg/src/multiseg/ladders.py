"""Ladder multisegments: block tableaux, truncations, and single-point peels.

A ladder is a multisegment whose rows have pairwise distinct starts and
pairwise distinct ends, with both orders agreeing.  Rows stay oriented: the
tableau of a quad has descending rows for zeta=+ and ascending rows for
zeta=-.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import HalfInt, Multisegment, Segment
from .params import Quad


def _is_ladder(rows: tuple[Segment, ...]) -> bool:
    starts = [r.start for r in rows]
    ends = [r.end for r in rows]
    if len(set(starts)) != len(rows) or len(set(ends)) != len(rows):
        return False
    order = sorted(range(len(rows)), key=lambda i: starts[i].twice, reverse=True)
    return all(
        ends[order[i]] > ends[order[i + 1]] for i in range(len(rows) - 1)
    )


@dataclass(frozen=True, slots=True)
class Ladder:
    """Rows sorted by descending start; origin quad kept as a tag only."""

    rho: object
    rows: tuple[Segment, ...]
    origin: Quad | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(
            sorted(self.rows, key=lambda r: r.start.twice, reverse=True)
        )
        object.__setattr__(self, "rows", rows)
        if any(r.rho != self.rho for r in rows):
            raise ValueError("ladder rows must share the ladder's label")
        if not _is_ladder(rows):
            raise ValueError(f"rows do not satisfy the ladder condition: {list(map(str, rows))}")

    def multisegment(self) -> Multisegment:
        return Multisegment(self.rows)

    @property
    def size(self) -> int:
        return sum(r.length for r in self.rows)

    def __str__(self) -> str:
        return "L{" + ", ".join(str(r) for r in self.rows) + "}"


def ladder_multisegment(q: Quad) -> Ladder:
    """Tableau of the quad: rows [zeta(B+k) .. -zeta(A-k)] for k = 0..A-B."""
    rows = []
    for k in range((q.A - q.B).twice // 2 + 1):
        start = (q.B + HalfInt.of(k)) * q.zeta
        end = -((q.A - HalfInt.of(k)) * q.zeta)
        rows.append(Segment(q.rho, start, end))
    return Ladder(q.rho, tuple(rows), origin=q)


def tableau_cols(q: Quad) -> Multisegment:
    """Column reading of the quad's tableau, as an (unoriented) multisegment."""
    cols = []
    for m in range((q.A + q.B).twice // 2 + 1):
        top = (q.B - HalfInt.of(m)) * q.zeta
        bottom = (q.A - HalfInt.of(m)) * q.zeta
        cols.append(Segment(q.rho, top, bottom))
    return Multisegment(cols)


def peel_left(x: HalfInt, lad: Ladder) -> Ladder | None:
    """Drop the first element of the unique row starting at x; None if that
    kills the ladder condition or no row starts at x."""
    hit = [i for i, r in enumerate(lad.rows) if r.start == x]
    if not hit:
        return None
    i = hit[0]
    row = lad.rows[i]
    rows = list(lad.rows)
    if row.length == 1:
        rows.pop(i)
    else:
        rows[i] = Segment(row.rho, HalfInt(row.start.twice + 2 * row.step), row.end)
    rows = tuple(rows)
    if not _is_ladder(rows):
        return None
    return Ladder(lad.rho, rows, origin=lad.origin)


def peel_right(x: HalfInt, lad: Ladder) -> Ladder | None:
    """Mirror of peel_left: drop the last element of the unique row ending at x."""
    hit = [i for i, r in enumerate(lad.rows) if r.end == x]
    if not hit:
        return None
    i = hit[0]
    row = lad.rows[i]
    rows = list(lad.rows)
    if row.length == 1:
        rows.pop(i)
    else:
        rows[i] = Segment(row.rho, row.start, HalfInt(row.end.twice - 2 * row.step))
    rows = tuple(rows)
    if not _is_ladder(rows):
        return None
    return Ladder(lad.rho, rows, origin=lad.origin)


def trunc_ladder(q: Quad, C: HalfInt) -> Ladder:
    """Truncated tableau built on the base quad (A, B+2, zeta).

    Realized operationally: starting from the full base tableau, peel
    zeta*x on the left and -zeta*x on the right for x = B+2, ..., C.
    C = B+1 returns the base tableau unchanged.
    """
    C = HalfInt.of(C)
    two = HalfInt.of(2)
    base_B = q.B + two
    if q.A < base_B:
        raise ValueError(f"trunc_ladder needs A >= B+2, got {q}")
    if not (q.B < C <= q.A):
        raise ValueError(f"C={C} outside ]B, A] for {q}")
    lad = ladder_multisegment(Quad(q.rho, q.A, base_B, q.zeta))
    x = base_B
    while x <= C:
        nxt = peel_left(x * q.zeta, lad)
        if nxt is None:
            raise ValueError(f"left peel at {x * q.zeta} failed while truncating {q}")
        lad = nxt
        nxt = peel_right(-(x * q.zeta), lad)
        if nxt is None:
            raise ValueError(f"right peel at {-(x * q.zeta)} failed while truncating {q}")
        lad = nxt
        x = x + HalfInt.of(1)
    return lad
