"""Normalization signs: pair sets, their characters, and the ratio formulas.

All pair sets range over ordered pairs of distinct block instances of a
parameter (instances are addressed by index, so multiplicities count).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ZERO, CuspidalLabel
from .params import Parameter, imp_variants, is_elementary, to_quad


@dataclass(frozen=True, slots=True)
class ZPair:
    first: int
    second: int
    which: str  # "W" or "U"


def _gate(b1, b2) -> bool:
    if b1.rho != b2.rho:
        return False
    return (
        max(b1.a, b2.a) % 2 == 0
        and min(b1.a, b2.a) % 2 == 1
        and max(b1.b, b2.b) % 2 == 0
        and min(b1.b, b2.b) % 2 == 1
    )


def z_sets(psi: Parameter):
    """(Z, Z_W, Z_U): ordered pairs of distinct instances passing the parity
    gate, split by the quadruple-form conditions."""
    blocks = psi.blocks
    Z, ZW, ZU = [], [], []
    for i, b1 in enumerate(blocks):
        for j, b2 in enumerate(blocks):
            if i == j or not _gate(b1, b2):
                continue
            q1, q2 = to_quad(b1), to_quad(b2)
            s = q1.B * q1.zeta + q2.B * q2.zeta
            if s < ZERO:
                which = "W"
            elif s > ZERO:
                which = "U"
            elif q1.B == ZERO and q2.B == ZERO:
                which = "U"
            else:
                # s = 0 with B = B' != 0 forces zeta*zeta' = -1
                which = "W" if (q1.A - q2.A) * q1.zeta < ZERO else "U"
            pair = ZPair(i, j, which)
            Z.append(pair)
            (ZW if which == "W" else ZU).append(pair)
    return tuple(Z), tuple(ZW), tuple(ZU)


def z_sign(psi: Parameter, which: str) -> int:
    """(-1)^(|Z_?|/2); the pair sets always have even cardinality."""
    Z, ZW, ZU = z_sets(psi)
    chosen = {"W": ZW, "U": ZU, "": Z, "empty": Z}[which]
    assert len(chosen) % 2 == 0
    return 1 if (len(chosen) // 2) % 2 == 0 else -1


@dataclass(frozen=True, slots=True)
class SignChar:
    """Map from block instances to signs, for one of the three pair sets."""

    values: tuple[int, ...]
    which: str


def eps_char(psi: Parameter, which: str) -> SignChar:
    Z, ZW, ZU = z_sets(psi)
    chosen = {"W": ZW, "U": ZU, "": Z, "empty": Z}[which]
    counts = [0] * len(psi.blocks)
    for p in chosen:
        counts[p.first] += 1
    return SignChar(tuple(1 if c % 2 == 0 else -1 for c in counts), which)


def eval_at_z(sc: SignChar) -> int:
    out = 1
    for v in sc.values:
        out *= v
    return out


def eval_at_c2(sc: SignChar, psi: Parameter) -> int:
    out = 1
    for v, b in zip(sc.values, psi.blocks):
        if b.b % 2 == 0:
            out *= v
    return out


_A_CONVENTIONS = ("unordered-distinct", "ordered-distinct-halved")


def a_sign(psi: Parameter, convention: str = "unordered-distinct") -> int:
    """Sign with exponent sum of inf(a,a')inf(b,b') over same-label pairs of
    distinct instances, under the chosen pair-counting convention."""
    if convention not in _A_CONVENTIONS:
        raise ValueError(f"unknown a_sign convention {convention!r}")
    blocks = psi.blocks
    total = 0
    for i, b1 in enumerate(blocks):
        for j, b2 in enumerate(blocks):
            if j <= i or b1.rho != b2.rho:
                continue
            total += min(b1.a, b2.a) * min(b1.b, b2.b)
    if convention == "ordered-distinct-halved":
        total = (2 * total) // 2
    return 1 if total % 2 == 0 else -1


def theta_ratio_WU(psi: Parameter, convention: str = "unordered-distinct") -> dict:
    """The Whittaker/unipotent normalization ratio, computed three ways.

    half_sum: the explicit half-sum exponent over ordered distinct pairs;
    a_chain: a(psi) a(psi1) a(psi2) a(psi_ii) under the given convention;
    zW_zU:   z_W(psi) * z_U(psi).  The exported ratio is zW_zU.
    """
    blocks = psi.blocks
    twice = 0
    for i, b1 in enumerate(blocks):
        for j, b2 in enumerate(blocks):
            if i == j or b1.rho != b2.rho:
                continue
            twice += (
                min(b1.a, b2.a) * (1 + max(b1.a, b2.a))
                * min(b1.b, b2.b) * (1 + max(b1.b, b2.b))
            )
    assert twice % 2 == 0
    half_sum = 1 if (twice // 2) % 2 == 0 else -1
    psi2, psi1, psi_ii = imp_variants(psi)
    a_chain = (
        a_sign(psi, convention) * a_sign(psi1, convention)
        * a_sign(psi2, convention) * a_sign(psi_ii, convention)
    )
    zz = z_sign(psi, "W") * z_sign(psi, "U")
    return {
        "half_sum": half_sum,
        "a_chain": a_chain,
        "zW_zU": zz,
        "ratio": zz,
        "convention": convention,
        "consistent": half_sum == zz,
    }


def r_ratio_sign(bl, blp) -> int:
    """Sign of the two-block normalization-factor ratio at the origin."""
    if bl.rho != blp.rho:
        return 1
    return 1 if (min(bl.a, blp.a) * min(bl.b, blp.b)) % 2 == 0 else -1


def _j_le_d(psi: Parameter, rho: CuspidalLabel, d: int):
    return [
        i
        for i, b in enumerate(psi.blocks)
        if b.rho == rho and max(b.a, b.b) <= d and (max(b.a, b.b) - d) % 2 == 0
    ]


def j_psi(psi: Parameter, rho: CuspidalLabel, d: int) -> tuple[int, int]:
    """(j0, j): j0 sums sup(a,b) over the J_{<=d} blocks; j drops by one
    exactly when every block lies in J_{<=d}."""
    idx = _j_le_d(psi, rho, d)
    j0 = sum(max(psi.blocks[i].a, psi.blocks[i].b) for i in idx)
    j = j0 - 1 if len(idx) == len(psi.blocks) else j0
    return j0, j


def beta_sign(psi: Parameter, rho: CuspidalLabel, d: int) -> int:
    """(-1)^floor(j/2); the exported form of the duality-complex sign."""
    if not is_elementary(psi):
        raise ValueError("beta_sign is defined for elementary parameters")
    _, j = j_psi(psi, rho, d)
    return 1 if (j // 2) % 2 == 0 else -1


BETA_CONVENTIONS = tuple(
    f"{rounding}+{pair}"
    for rounding in ("floor", "ceil")
    for pair in ("pair-always", "pair-odd-d", "pair-never")
)


def beta_closed_form(psi: Parameter, rho: CuspidalLabel, d: int,
                     convention: str) -> int:
    """Product form of the sign under an explicit rounding and pair-term
    convention; used only to reconcile against beta_sign."""
    if not is_elementary(psi):
        raise ValueError("beta_closed_form is defined for elementary parameters")
    if convention not in BETA_CONVENTIONS:
        raise ValueError(f"unknown beta convention {convention!r}")
    rounding, pair = convention.split("+")
    idx = _j_le_d(psi, rho, d)
    exp = 0
    for i in idx:
        b = psi.blocks[i]
        ab = b.a * b.b
        exp += (ab - 1) // 2 if rounding == "floor" else ab // 2
    t = len(idx)
    if pair == "pair-always" or (pair == "pair-odd-d" and d % 2 == 1):
        exp += t * (t - 1) // 2
    return 1 if exp % 2 == 0 else -1
