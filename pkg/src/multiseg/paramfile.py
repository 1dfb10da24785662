"""Parameter file format: one `cuspidal` or `block` declaration per line."""

from __future__ import annotations

from collections import Counter

from .core import CuspidalLabel
from .params import JordanBlock, Parameter


class ParamFileError(ValueError):
    def __init__(self, line_no: int, msg: str):
        super().__init__(f"line {line_no}: {msg}")
        self.line_no = line_no


_SIGNS = {"+1": 1, "-1": -1, "1": 1}


def _sign(tok: str, what: str, line_no: int) -> int:
    if tok in _SIGNS:
        return _SIGNS[tok]
    raise ParamFileError(line_no, f"{what} must be +1 or -1, got {tok!r}")


def parse_parameter_file(text: str) -> tuple[Parameter, dict[str, CuspidalLabel]]:
    """Parse declarations into a Parameter plus the label table."""
    labels: dict[str, CuspidalLabel] = {}
    blocks: list[JordanBlock] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        kind = toks[0]
        if kind == "cuspidal":
            if len(toks) < 2:
                raise ParamFileError(line_no, "cuspidal needs a name")
            name = toks[1]
            if name in labels:
                raise ParamFileError(line_no, f"duplicate cuspidal name {name!r}")
            d, eta, chi = 1, None, 1
            for opt in toks[2:]:
                if "=" not in opt:
                    raise ParamFileError(line_no, f"expected key=value, got {opt!r}")
                key, val = opt.split("=", 1)
                if key == "d":
                    try:
                        d = int(val)
                    except ValueError:
                        raise ParamFileError(line_no, f"bad d value {val!r}") from None
                    if d < 1:
                        raise ParamFileError(line_no, "d must be >= 1")
                elif key == "eta":
                    eta = None if val == "?" else _sign(val, "eta", line_no)
                elif key == "chi":
                    chi = _sign(val, "chi", line_no)
                else:
                    raise ParamFileError(line_no, f"unknown option {key!r}")
            try:
                labels[name] = CuspidalLabel(name, d, eta, chi)
            except ValueError as exc:
                raise ParamFileError(line_no, str(exc)) from None
        elif kind == "block":
            if len(toks) not in (4, 5):
                raise ParamFileError(line_no, "block needs: block <name> <a> <b> [xMult]")
            name = toks[1]
            if name not in labels:
                raise ParamFileError(line_no, f"block references unknown cuspidal {name!r}")
            try:
                a, b = int(toks[2]), int(toks[3])
            except ValueError:
                raise ParamFileError(line_no, "a and b must be integers") from None
            if a < 1:
                raise ParamFileError(line_no, "a must be >= 1")
            if b < 1:
                raise ParamFileError(line_no, "b must be >= 1")
            mult = 1
            if len(toks) == 5:
                if not toks[4].startswith("x"):
                    raise ParamFileError(line_no, f"multiplicity must be xN, got {toks[4]!r}")
                try:
                    mult = int(toks[4][1:])
                except ValueError:
                    raise ParamFileError(line_no, f"bad multiplicity {toks[4]!r}") from None
                if mult < 1:
                    raise ParamFileError(line_no, "multiplicity must be >= 1")
            blocks.extend(JordanBlock(labels[name], a, b) for _ in range(mult))
        else:
            raise ParamFileError(line_no, f"unknown declaration {kind!r}")
    return Parameter(blocks), labels


def render_parameter_file(psi: Parameter) -> str:
    """Deterministic text form; parse(render(psi)) reproduces psi."""
    lines = []
    for rho in psi.labels():
        eta = "?" if rho.eta is None else f"{rho.eta:+d}"
        lines.append(f"cuspidal {rho.name} d={rho.d} eta={eta} chi={rho.chi:+d}")
    for block, mult in sorted(
        Counter(psi.blocks).items(), key=lambda bm: (bm[0].rho.name, bm[0].a, bm[0].b)
    ):
        suffix = f" x{mult}" if mult > 1 else ""
        lines.append(f"block {block.rho.name} {block.a} {block.b}{suffix}")
    return "\n".join(lines) + "\n"
