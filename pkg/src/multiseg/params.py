"""Jordan blocks, parameters, block predicates, and the domination construction."""

from __future__ import annotations

from dataclasses import dataclass

from .core import ZERO, ONE, CuspidalLabel, HalfInt


@dataclass(frozen=True, slots=True)
class JordanBlock:
    """Triple (rho, a, b); size a*b*d_rho."""

    rho: CuspidalLabel
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"block ({self.rho.name},{self.a},{self.b}): a,b must be >= 1")

    @property
    def size(self) -> int:
        return self.a * self.b * self.rho.d

    def __str__(self) -> str:
        return f"({self.rho.name},{self.a},{self.b})"


@dataclass(frozen=True, slots=True)
class Quad:
    """Quadruple recoding (rho, A, B, zeta): A=(a+b)/2-1, B=|a-b|/2, zeta=sign(a-b).

    A quad with B=0 is normalized to zeta=+1 on construction (the two signs
    give isomorphic data there).
    """

    rho: CuspidalLabel
    A: HalfInt
    B: HalfInt
    zeta: int

    def __post_init__(self):
        if self.zeta not in (1, -1):
            raise ValueError("zeta must be +1 or -1")
        if self.B < ZERO or self.A < self.B:
            raise ValueError(f"need A >= B >= 0, got A={self.A}, B={self.B}")
        if not (self.A - self.B).is_integer:
            raise ValueError("A - B must be an integer")
        if self.B == ZERO and self.zeta == -1:
            object.__setattr__(self, "zeta", 1)

    @property
    def is_half_integral(self) -> bool:
        return not self.B.is_integer

    def __str__(self) -> str:
        return f"({self.rho.name},A={self.A},B={self.B},{'+' if self.zeta == 1 else '-'})"


def to_quad(bl: JordanBlock) -> Quad:
    A = HalfInt(bl.a + bl.b - 2)
    B = HalfInt(abs(bl.a - bl.b))
    zeta = 1 if bl.a >= bl.b else -1
    return Quad(bl.rho, A, B, zeta)


def from_quad(q: Quad) -> JordanBlock:
    hi = (q.A + q.B).twice // 2 + 1
    lo = (q.A - q.B).twice // 2 + 1
    if q.zeta == 1:
        return JordanBlock(q.rho, hi, lo)
    return JordanBlock(q.rho, lo, hi)


def block_order_cmp(q: Quad, qp: Quad) -> int:
    """Total order on same-label, same-integrality quads: A, then B, then zeta=+."""
    if q.rho != qp.rho:
        raise ValueError(f"quads {q} and {qp} have different labels; incomparable")
    if q.is_half_integral != qp.is_half_integral:
        raise ValueError(f"quads {q} and {qp} lie in different integrality families")
    for x, y in ((q.A, qp.A), (q.B, qp.B)):
        if x != y:
            return 1 if x > y else -1
    if q.B > ZERO and q.zeta != qp.zeta:
        return 1 if q.zeta == 1 else -1
    return 0


def _quad_sort_key(q: Quad):
    # Deterministic order across labels and integrality families; within one
    # family it refines block_order_cmp.
    return (q.rho.name, q.A.twice, q.B.twice, q.zeta)


class Parameter:
    """Multiset of Jordan blocks with derived total size n.

    Blocks are stored as a sorted tuple; multiplicity is repetition, and an
    instance is addressed by its index.
    """

    __slots__ = ("blocks",)

    def __init__(self, blocks=()):
        blocks = tuple(sorted(blocks, key=lambda b: (b.rho.name, b.a, b.b)))
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, *a):
        raise AttributeError("Parameter is immutable")

    @property
    def n(self) -> int:
        return sum(b.size for b in self.blocks)

    def labels(self) -> tuple[CuspidalLabel, ...]:
        seen = {}
        for b in self.blocks:
            seen.setdefault(b.rho.name, b.rho)
        return tuple(seen[k] for k in sorted(seen))

    def jord_rho(self, rho: CuspidalLabel) -> tuple[JordanBlock, ...]:
        return tuple(b for b in self.blocks if b.rho == rho)

    def quads(self) -> tuple[Quad, ...]:
        return tuple(to_quad(b) for b in self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, Parameter) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __str__(self) -> str:
        return "{" + ", ".join(str(b) for b in self.blocks) + "}"

    __repr__ = __str__


def diag_restriction(psi: Parameter) -> Parameter:
    """Replace each (rho,a,b) by its Clebsch-Gordan pieces (rho,c,1)."""
    out = []
    for b in psi:
        for c in range(abs(b.a - b.b) + 1, b.a + b.b, 2):
            out.append(JordanBlock(b.rho, c, 1))
    return Parameter(out)


def is_elementary(psi: Parameter) -> bool:
    blocks = psi.blocks
    return len(set(blocks)) == len(blocks) and all(min(b.a, b.b) == 1 for b in blocks)


def is_discrete(psi: Parameter) -> bool:
    return len(set(psi.blocks)) == len(psi.blocks)


def _interval(q: Quad) -> tuple[int, int]:
    return (q.B.twice, q.A.twice)


def _disjoint(i1: tuple[int, int], i2: tuple[int, int]) -> bool:
    return i1[1] < i2[0] or i2[1] < i1[0]


def is_discrete_diagonal(psi: Parameter) -> bool:
    """True iff all same-label, same-integrality [B,A] intervals are pairwise disjoint."""
    fams: dict[tuple[str, int], list[tuple[int, int]]] = {}
    for q in psi.quads():
        fams.setdefault((q.rho.name, q.B.twice % 2), []).append(_interval(q))
    for ivs in fams.values():
        ivs.sort()
        for i1, i2 in zip(ivs, ivs[1:]):
            if not _disjoint(i1, i2):
                return False
    return True


def dominate(psi: Parameter, rule: str = "minimal"):
    """Discrete-diagonal dominating parameter plus the ordered peel list E.

    Per label the blocks are processed in increasing order; each block keeps
    its zeta and A-B and gets a new base point Bt >= B so that the shifted
    intervals [Bt, Bt+A-B] are pairwise disjoint within the family.

    rule="minimal": keep Bt=B when possible, else the least admissible shift.
    rule="staircase": shift every block well above the previously used region
    (a second valid domination, used to test choice-independence).

    E lists, per label in increasing block order, the peel points: for D
    running down from Bt to B+1, the ordered elements of [zeta*D,
    zeta*(D+A-B)].  Returns (psi_tilde, E) with E a tuple of (label, point).
    """
    if rule not in ("minimal", "staircase"):
        raise ValueError(f"unknown domination rule {rule!r}")
    new_blocks = []
    peel: list[tuple[CuspidalLabel, HalfInt]] = []
    by_rho: dict[str, list[Quad]] = {}
    for q in psi.quads():
        by_rho.setdefault(q.rho.name, []).append(q)
    for name in sorted(by_rho):
        quads = sorted(by_rho[name], key=_quad_sort_key)
        used: dict[int, list[tuple[int, int]]] = {0: [], 1: []}
        for q in quads:
            fam = q.B.twice % 2
            width = (q.A - q.B).twice
            cand = q.B.twice
            if rule == "staircase":
                top = max((e for _, e in used[fam]), default=q.B.twice - 2)
                cand = max(cand, top + 8 - (top + 8 - q.B.twice) % 2)
            if any(not _disjoint((cand, cand + width), iv) for iv in used[fam]):
                top = max(e for _, e in used[fam])
                cand = top + 2 - (top + 2 - q.B.twice) % 2
            used[fam].append((cand, cand + width))
            Bt = HalfInt(cand)
            new_blocks.append(from_quad(Quad(q.rho, Bt + (q.A - q.B), Bt, q.zeta)))
            d = Bt
            while d > q.B:
                for k in range(width // 2 + 1):
                    peel.append((q.rho, (d + HalfInt.of(k)) * q.zeta))
                d = d - ONE
    return Parameter(new_blocks), tuple(peel)


def psi_sharp(psi: Parameter, rho: CuspidalLabel, d: int) -> Parameter:
    """Flip (a,b) on the blocks with label rho, sup(a,b) <= d and sup(a,b) = d mod 2."""
    if not is_elementary(psi):
        raise ValueError("psi_sharp is defined for elementary parameters")
    out = []
    for b in psi:
        if b.rho == rho and max(b.a, b.b) <= d and (max(b.a, b.b) - d) % 2 == 0:
            out.append(JordanBlock(b.rho, b.b, b.a))
        else:
            out.append(b)
    return Parameter(out)


def imp_variants(psi: Parameter):
    """The three parity reductions: (b odd -> (a,1)), (a odd -> (1,b)), (both odd -> (1,1))."""
    psi2 = Parameter(JordanBlock(b.rho, b.a, 1) for b in psi if b.b % 2 == 1)
    psi1 = Parameter(JordanBlock(b.rho, 1, b.b) for b in psi if b.a % 2 == 1)
    psi_ii = Parameter(
        JordanBlock(b.rho, 1, 1) for b in psi if b.a % 2 == 1 and b.b % 2 == 1
    )
    return psi2, psi1, psi_ii


def in_Psi_H(psi: Parameter, n: int) -> bool:
    """Parity membership: eta_rho*(-1)^(a+b) = (-1)^(n+1) per block and prod chi^(ab) = 1."""
    if n != psi.n:
        raise ValueError(f"n={n} does not match parameter size {psi.n}")
    chi_prod = 1
    target = (-1) ** (n + 1)
    for b in psi:
        if b.rho.eta is None:
            raise ValueError(f"label {b.rho.name}: parity unknown, cannot test membership")
        if b.rho.eta * (-1) ** (b.a + b.b) != target:
            return False
        chi_prod *= b.rho.chi ** (b.a * b.b)
    return chi_prod == 1


def reducibility_point(phi: Parameter, rho: CuspidalLabel) -> HalfInt:
    """The nonnegative reducibility point attached to a discrete tempered-coded phi."""
    if any(b.b != 1 for b in phi):
        raise ValueError("phi must be tempered-coded (all b = 1)")
    if not is_discrete(phi):
        raise ValueError("phi must be multiplicity-free")
    ours = [b.a for b in phi if b.rho == rho]
    if ours:
        return HalfInt(max(ours) + 1)
    if rho.eta is None:
        raise ValueError(f"label {rho.name}: parity unknown")
    if rho.eta == (-1) ** (phi.n + 1):
        return HalfInt(1)
    raise ValueError("case not covered: no rho-blocks and eta has the wrong parity")
