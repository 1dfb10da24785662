"""Formal integer combinations of induced words, with the Jacquet engine.

A word is an ordered list of atoms (oriented segment socles and ladder
atoms).  Words are identified up to commutation of adjacent atoms whose
supports are everywhere at distance >= 2 for a shared label; the canonical
representative is the lexicographically least word of the commutation class.
Jac_x acts by the Leibniz rule over word factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CuspidalLabel, HalfInt, Multisegment, Segment
from .ladders import Ladder, peel_left, peel_right


@dataclass(frozen=True, slots=True)
class SegmentAtom:
    """Socle <rho||^start, ..., rho||^end>; orientation is meaningful."""

    rho: CuspidalLabel
    start: HalfInt
    end: HalfInt

    @property
    def size(self) -> int:
        return (abs(self.start.twice - self.end.twice) // 2 + 1) * self.rho.d

    def support(self) -> frozenset[int]:
        lo = min(self.start.twice, self.end.twice)
        hi = max(self.start.twice, self.end.twice)
        return frozenset(range(lo, hi + 1, 2))

    def sort_key(self):
        return (self.rho.name, 0, (self.start.twice, self.end.twice))

    def to_json(self):
        return {"type": "segment", "rho": self.rho.name,
                "start": str(self.start), "end": str(self.end)}

    def __str__(self) -> str:
        return f"[{self.start}..{self.end}]{self.rho.name}"


@dataclass(frozen=True, slots=True)
class LadderAtom:
    """Multi-row ladder factor; rows are oriented segments sorted by start."""

    rho: CuspidalLabel
    rows: tuple[tuple[HalfInt, HalfInt], ...]

    @property
    def size(self) -> int:
        return sum(abs(s.twice - e.twice) // 2 + 1 for s, e in self.rows) * self.rho.d

    def support(self) -> frozenset[int]:
        pts = set()
        for s, e in self.rows:
            lo, hi = min(s.twice, e.twice), max(s.twice, e.twice)
            pts.update(range(lo, hi + 1, 2))
        return frozenset(pts)

    def sort_key(self):
        return (self.rho.name, 1, tuple((s.twice, e.twice) for s, e in self.rows))

    def to_json(self):
        return {"type": "ladder", "rho": self.rho.name,
                "rows": [[str(s), str(e)] for s, e in self.rows]}

    def __str__(self) -> str:
        body = ",".join(f"[{s}..{e}]" for s, e in self.rows)
        return f"L({body}){self.rho.name}"


Atom = SegmentAtom | LadderAtom


def ladder_atom(lad: Ladder) -> Atom:
    """Atom for a ladder; single rows collapse to plain segment atoms."""
    if len(lad.rows) == 1:
        r = lad.rows[0]
        return SegmentAtom(r.rho, r.start, r.end)
    return LadderAtom(lad.rho, tuple((r.start, r.end) for r in lad.rows))


def atom_ladder(atom: Atom) -> Ladder:
    if isinstance(atom, SegmentAtom):
        return Ladder(atom.rho, (Segment(atom.rho, atom.start, atom.end),))
    return Ladder(atom.rho, tuple(Segment(atom.rho, s, e) for s, e in atom.rows))


def _commute(a: Atom, b: Atom) -> bool:
    if a.rho != b.rho:
        return True
    sa, sb = a.support(), b.support()
    return all(x - 2 not in sb and x not in sb and x + 2 not in sb for x in sa)


def canonical_word(atoms) -> tuple[Atom, ...]:
    """Lexicographically least representative of the commutation class."""
    pending = [a for a in atoms if a.size > 0]
    out = []
    while pending:
        best = None
        for i, a in enumerate(pending):
            if all(_commute(pending[j], a) for j in range(i)):
                if best is None or a.sort_key() < pending[best].sort_key():
                    best = i
        out.append(pending.pop(best))
    return tuple(out)


def total_size(word: tuple[Atom, ...]) -> int:
    return sum(a.size for a in word)


def gl_multisegment(word: tuple[Atom, ...]) -> Multisegment:
    segs = []
    for a in word:
        segs.extend(atom_ladder(a).rows)
    return Multisegment(segs)


class GrothExpr:
    """Map from canonical words to nonzero integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, _canonical=False):
        acc: dict[tuple[Atom, ...], int] = {}
        for word, coeff in (terms or {}).items():
            if coeff == 0:
                continue
            if not _canonical:
                word = canonical_word(word)
            acc[word] = acc.get(word, 0) + coeff
            if acc[word] == 0:
                del acc[word]
        object.__setattr__(self, "terms", acc)

    def __setattr__(self, *a):
        raise AttributeError("GrothExpr is immutable")

    @staticmethod
    def zero() -> "GrothExpr":
        return GrothExpr()

    @staticmethod
    def word(atoms, coeff: int = 1) -> "GrothExpr":
        return GrothExpr({tuple(atoms): coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, GrothExpr) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "GrothExpr") -> "GrothExpr":
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
            if acc[w] == 0:
                del acc[w]
        return GrothExpr(acc, _canonical=True)

    def __sub__(self, other: "GrothExpr") -> "GrothExpr":
        return self + (-1) * other

    def __rmul__(self, k: int) -> "GrothExpr":
        if k == 0:
            return GrothExpr.zero()
        return GrothExpr({w: k * c for w, c in self.terms.items()}, _canonical=True)

    def __neg__(self) -> "GrothExpr":
        return (-1) * self

    def coeff(self, word) -> int:
        return self.terms.get(canonical_word(word), 0)

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda wc: (total_size(wc[0]), tuple(a.sort_key() for a in wc[0])),
        )

    def to_json(self):
        return [
            {"coeff": c, "word": [a.to_json() for a in w]}
            for w, c in self.sorted_terms()
        ]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            body = "*".join(str(a) for a in w) if w else "1"
            parts.append(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{body}")
        return " ".join(parts)

    __repr__ = __str__


def induce(parts) -> GrothExpr:
    """Multilinear concatenation of words; sizes add."""
    parts = list(parts)
    if not parts:
        return GrothExpr.word(())
    acc = {(): 1}
    for p in parts:
        nxt: dict[tuple[Atom, ...], int] = {}
        for w1, c1 in acc.items():
            for w2, c2 in p.terms.items():
                w = w1 + w2
                nxt[w] = nxt.get(w, 0) + c1 * c2
        acc = nxt
    return GrothExpr(acc)


def _peel_atom_left(atom: Atom, rho: CuspidalLabel, x: HalfInt):
    # -> None (zero), () (atom vanishes), or replacement atom
    if atom.rho != rho:
        return None
    if isinstance(atom, SegmentAtom):
        if atom.start != x:
            return None
        if atom.start == atom.end:
            return ()
        step = -1 if atom.start >= atom.end else 1
        return SegmentAtom(rho, HalfInt(atom.start.twice + 2 * step), atom.end)
    lad = peel_left(x, atom_ladder(atom))
    if lad is None:
        return None
    if not lad.rows:
        return ()
    return ladder_atom(lad)


def _peel_atom_right(atom: Atom, rho: CuspidalLabel, x: HalfInt):
    if atom.rho != rho:
        return None
    if isinstance(atom, SegmentAtom):
        if atom.end != x:
            return None
        if atom.start == atom.end:
            return ()
        step = -1 if atom.start >= atom.end else 1
        return SegmentAtom(rho, atom.start, HalfInt(atom.end.twice - 2 * step))
    lad = peel_right(x, atom_ladder(atom))
    if lad is None:
        return None
    if not lad.rows:
        return ()
    return ladder_atom(lad)


def _jac(peel, rho: CuspidalLabel, x: HalfInt, e: GrothExpr) -> GrothExpr:
    acc: dict[tuple[Atom, ...], int] = {}
    for word, c in e.terms.items():
        for i, atom in enumerate(word):
            res = peel(atom, rho, x)
            if res is None:
                continue
            w = word[:i] + ((res,) if res != () else ()) + word[i + 1:]
            w = canonical_word(w)
            acc[w] = acc.get(w, 0) + c
            if acc[w] == 0:
                del acc[w]
    return GrothExpr(acc, _canonical=True)


def jac_left(rho: CuspidalLabel, x: HalfInt, e: GrothExpr) -> GrothExpr:
    """Leibniz sum of left peels at rho||^x over all word factors."""
    return _jac(_peel_atom_left, rho, HalfInt.of(x), e)


def jac_right(rho: CuspidalLabel, x: HalfInt, e: GrothExpr) -> GrothExpr:
    return _jac(_peel_atom_right, rho, HalfInt.of(x), e)


def jac_theta(rho: CuspidalLabel, x: HalfInt, e: GrothExpr) -> GrothExpr:
    """Two-sided peel: rho||^x from the left, then rho||^-x from the right."""
    x = HalfInt.of(x)
    return jac_right(rho, -x, jac_left(rho, x, e))


def jac_theta_seq(points, e: GrothExpr) -> GrothExpr:
    """Apply jac_theta at (rho, x) pairs in list order (first entry first)."""
    for rho, x in points:
        if e.is_zero:
            return e
        e = jac_theta(rho, x, e)
    return e


def commutative_image(e: GrothExpr) -> dict:
    """Collapse each word to its atom multiset (full commutativity).

    Canonical-word equality refines this; comparisons here test identities
    that only hold after forgetting factor order.
    """
    acc: dict = {}
    for w, c in e.terms.items():
        key = frozenset((a, w.count(a)) for a in set(w))
        acc[key] = acc.get(key, 0) + c
        if acc[key] == 0:
            del acc[key]
    return acc
