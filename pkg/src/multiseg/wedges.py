"""Compositions of n, wedge-basis signs, and subset-complex homology.

A composition M of n is identified with its cut set S(M) inside {1..n-1};
Delta^M is the complement.  The wedge element e^M strings the cuts in
increasing order, and xi(M', M) compares e^{M'} with e^M ^ e_m for a
one-step refinement.  Homology ranks are exact (Fraction arithmetic).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations


@dataclass(frozen=True, slots=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def cuts(self) -> frozenset[int]:
        out, acc = [], 0
        for p in self.parts[:-1]:
            acc += p
            out.append(acc)
        return frozenset(out)

    def delta(self) -> frozenset[int]:
        return frozenset(range(1, self.n)) - self.cuts()

    @property
    def corank(self) -> int:
        return len(self.parts) - 1

    def reversed(self) -> "Composition":
        return Composition(self.parts[::-1])

    @staticmethod
    def from_cuts(n: int, cuts) -> "Composition":
        pts = sorted(cuts)
        if any(not 1 <= c <= n - 1 for c in pts):
            raise ValueError(f"cuts must lie in 1..{n - 1}")
        bounds = [0] + pts + [n]
        return Composition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def compositions(n: int):
    for r in range(n):
        for cuts in combinations(range(1, n), r):
            yield Composition.from_cuts(n, cuts)


def _xi_from_cuts(cuts: frozenset[int], m: int) -> int:
    return 1 if sum(1 for s in cuts if s > m) % 2 == 0 else -1


def xi_sign(mp: Composition, m: Composition) -> int:
    """Sign in e^{M'} = xi * e^M ^ e_m for a one-step refinement M' of M."""
    if mp.n != m.n:
        raise ValueError("compositions of different n")
    extra = mp.cuts() - m.cuts()
    if len(extra) != 1 or not m.cuts() <= mp.cuts():
        raise ValueError(f"{mp.parts} is not a one-step refinement of {m.parts}")
    (new,) = extra
    return _xi_from_cuts(m.cuts(), new)


def check_nilpotent(n: int) -> bool:
    """xi(M'',M'_1)xi(M'_1,M) + xi(M'',M'_2)xi(M'_2,M) = 0 for all 2-step chains."""
    for m in compositions(n):
        free = sorted(m.delta())
        for m1, m2 in combinations(free, 2):
            big = Composition.from_cuts(n, m.cuts() | {m1, m2})
            mid1 = Composition.from_cuts(n, m.cuts() | {m1})
            mid2 = Composition.from_cuts(n, m.cuts() | {m2})
            if (
                xi_sign(big, mid1) * xi_sign(mid1, m)
                + xi_sign(big, mid2) * xi_sign(mid2, m)
                != 0
            ):
                return False
    return True


def check_theta_sign(n: int) -> bool:
    """(-1)^[j/2] xi(M',M) = (-1)^[(j+1)/2] xi(theta M', theta M) with theta
    reversing compositions and j the corank of M."""
    for m in compositions(n):
        j = m.corank
        for new in sorted(m.delta()):
            mp = Composition.from_cuts(n, m.cuts() | {new})
            lhs = (-1) ** (j // 2) * xi_sign(mp, m)
            rhs = (-1) ** ((j + 1) // 2) * xi_sign(mp.reversed(), m.reversed())
            if lhs != rhs:
                return False
    return True


def _rank(rows: list[dict[int, Fraction]], ncols: int) -> int:
    # Gaussian elimination over Q on sparse rows.
    rank = 0
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c in pivots:
                piv = pivots[c]
                f = row[c] / piv[c]
                for cc, v in piv.items():
                    row[cc] = row.get(cc, Fraction(0)) - f * v
                    if row[cc] == 0:
                        del row[cc]
            else:
                pivots[c] = row
                rank += 1
                break
    return rank


def subset_complex_homology(delta, dm, dpm) -> dict[int, int]:
    """Homology ranks of the complex whose degree-j term is spanned by the
    sets X with dm <= X <= dpm and |X| = |delta| - j, with differential
    X -> X - {m} weighted by the wedge sign.

    Exact everywhere when dm is proper in dpm; a single rank-1 group in
    degree |delta| - |dm| when dm = dpm.
    """
    delta, dm, dpm = frozenset(delta), frozenset(dm), frozenset(dpm)
    if not (dm <= dpm <= delta):
        raise ValueError("need dm <= dpm <= delta")
    free = sorted(dpm - dm)
    degree = lambda X: len(delta) - len(X)
    layers: dict[int, list[frozenset[int]]] = {}
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            X = dm | set(extra)
            layers.setdefault(degree(X), []).append(frozenset(X))
    index = {
        j: {X: i for i, X in enumerate(sorted(basis, key=sorted))}
        for j, basis in layers.items()
    }
    ranks: dict[int, int] = {}
    dims = {j: len(b) for j, b in layers.items()}
    boundary_rank: dict[int, int] = {}
    for j in sorted(layers):
        if j + 1 not in layers:
            boundary_rank[j] = 0
            continue
        rows = []
        for X in layers[j]:
            row: dict[int, Fraction] = {}
            cuts = delta - X
            for m in sorted(X - dm):
                Y = X - {m}
                row[index[j + 1][Y]] = Fraction(_xi_from_cuts(cuts, m))
            rows.append(row)
        boundary_rank[j] = _rank(rows, dims[j + 1])
    for j in sorted(layers):
        ranks[j] = dims[j] - boundary_rank[j] - boundary_rank.get(j - 1, 0)
    return ranks
