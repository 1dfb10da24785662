"""Command line front end.

Exit codes: 0 success, 1 input/validation error, 2 violated internal
identity (something that must vanish or agree did not).
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import HalfInt, mw_dual, parse_multisegment
from .groth import jac_left, jac_theta
from .paramfile import ParamFileError, parse_parameter_file, render_parameter_file
from .params import (dominate, in_Psi_H, is_discrete, is_discrete_diagonal,
                     is_elementary)
from .resolve import degree_conserved, resolve_general, verify_cancellation
from .signs import (eps_char, eval_at_c2, eval_at_z, theta_ratio_WU, z_sets,
                    z_sign)
from .wedges import check_nilpotent, check_theta_sign, subset_complex_homology

OK, BAD_INPUT, BAD_IDENTITY = 0, 1, 2


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParamFileError(0, f"cannot read {path}: {exc}") from None
    return parse_parameter_file(text)


def _emit(payload, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        for line in lines:
            print(line)


def _sgn(v: int) -> str:
    return f"{v:+d}"


def cmd_classify(args) -> int:
    psi, _ = _load(args.file)
    quads = [str(q) for q in psi.quads()]
    payload = {
        "n": psi.n,
        "blocks": [str(b) for b in psi.blocks],
        "quads": quads,
        "elementary": is_elementary(psi),
        "discrete": is_discrete(psi),
        "discrete_diagonal": is_discrete_diagonal(psi),
    }
    lines = [f"n = {psi.n}"]
    lines += [f"block {b}  ->  quad {q}" for b, q in zip(payload["blocks"], quads)]
    lines += [
        f"elementary         : {payload['elementary']}",
        f"discrete           : {payload['discrete']}",
        f"discrete diagonal  : {payload['discrete_diagonal']}",
    ]
    try:
        payload["in_Psi_H"] = in_Psi_H(psi, psi.n)
        lines.append(f"parity membership  : {payload['in_Psi_H']}")
    except ValueError as exc:
        payload["in_Psi_H"] = None
        lines.append(f"parity membership  : not decidable ({exc})")
    _emit(payload, args.json, lines)
    return OK


def cmd_signs(args) -> int:
    psi, _ = _load(args.file)
    Z, ZW, ZU = z_sets(psi)
    chars = {w: eps_char(psi, w) for w in ("W", "U", "")}
    zvals = {w: z_sign(psi, w) for w in ("W", "U", "")}
    ratio = theta_ratio_WU(psi)
    evals = {
        w: {"at_z": eval_at_z(chars[w]), "at_c2": eval_at_c2(chars[w], psi)}
        for w in ("W", "U", "")
    }
    for w in ("W", "U", ""):
        if evals[w]["at_z"] != 1 or evals[w]["at_c2"] != zvals[w]:
            print(f"identity failure: eps_{w or 'empty'} evaluations disagree",
                  file=sys.stderr)
            return BAD_IDENTITY
    if not ratio["consistent"]:
        print("identity failure: half-sum ratio != z_W*z_U", file=sys.stderr)
        return BAD_IDENTITY
    payload = {
        "blocks": [str(b) for b in psi.blocks],
        "eps_W": list(chars["W"].values),
        "eps_U": list(chars["U"].values),
        "eps_empty": list(chars[""].values),
        "z_W": zvals["W"],
        "z_U": zvals["U"],
        "z_empty": zvals[""],
        "pairs": {"Z": len(Z), "Z_W": len(ZW), "Z_U": len(ZU)},
        "theta_ratio_WU": ratio,
        "evaluations": evals,
    }
    lines = [f"{'block':<14}{'eps_W':>6}{'eps_U':>6}{'eps_0':>6}"]
    for i, b in enumerate(psi.blocks):
        lines.append(
            f"{str(b):<14}{_sgn(chars['W'].values[i]):>6}"
            f"{_sgn(chars['U'].values[i]):>6}{_sgn(chars[''].values[i]):>6}"
        )
    lines += [
        f"z_W = {_sgn(zvals['W'])}   z_U = {_sgn(zvals['U'])}   z_empty = {_sgn(zvals[''])}",
        f"theta_W/theta_U ratio = {_sgn(ratio['ratio'])}"
        f"  (half-sum {_sgn(ratio['half_sum'])},"
        f" a-chain {_sgn(ratio['a_chain'])} [{ratio['convention']}])",
    ]
    for w in ("W", "U", ""):
        lines.append(
            f"eps_{w or 'empty'}: value at z = {_sgn(evals[w]['at_z'])},"
            f" at c2 = {_sgn(evals[w]['at_c2'])}"
        )
    _emit(payload, args.json, lines)
    return OK


def cmd_resolve(args) -> int:
    psi, _ = _load(args.file)
    res = resolve_general(psi, rule=args.rule)
    if not degree_conserved(res):
        print("identity failure: a resolution term has the wrong degree",
              file=sys.stderr)
        return BAD_IDENTITY
    payload = {
        "psi": str(psi),
        "n": psi.n,
        "terms": res.expr.to_json(),
        "trace": res.trace,
    }
    lines = [f"psi = {psi}  (n = {psi.n})", f"resolution = {res.expr}"]
    _emit(payload, args.json, lines)
    return OK


def cmd_jacquet(args) -> int:
    psi, labels = _load(args.file)
    if args.rho not in labels:
        print(f"error: unknown cuspidal {args.rho!r}", file=sys.stderr)
        return BAD_INPUT
    rho = labels[args.rho]
    try:
        x = HalfInt.parse(args.x)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    expr = resolve_general(psi).expr
    out = jac_theta(rho, x, expr) if args.theta else jac_left(rho, x, expr)
    payload = {
        "psi": str(psi),
        "op": "jac_theta" if args.theta else "jac_left",
        "rho": args.rho,
        "x": str(x),
        "terms": out.to_json(),
    }
    _emit(payload, args.json, [f"{payload['op']}({x}) = {out}"])
    return OK


def cmd_dominate(args) -> int:
    psi, _ = _load(args.file)
    tilde, peel = dominate(psi, rule=args.rule)
    payload = {
        "psi": str(psi),
        "psi_tilde": str(tilde),
        "peel": [[rho.name, str(x)] for rho, x in peel],
        "file": render_parameter_file(tilde),
    }
    lines = [
        f"psi       = {psi}",
        f"psi~      = {tilde}",
        "peel list = (" + ", ".join(f"{r.name}:{x}" for r, x in peel) + ")",
    ]
    _emit(payload, args.json, lines)
    return OK


def cmd_dual(args) -> int:
    try:
        m = parse_multisegment(args.multisegment)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    d = mw_dual(m)
    if mw_dual(d) != m:
        print("identity failure: dual applied twice did not return the input",
              file=sys.stderr)
        return BAD_IDENTITY
    _emit({"input": str(m), "dual": str(d)}, args.json, [str(d)])
    return OK


def cmd_complex_check(args) -> int:
    n = args.n
    results = []
    for k in range(2, n + 1):
        results.append(("nilpotency", k, check_nilpotent(k)))
        results.append(("theta-sign", k, check_theta_sign(k)))
    delta = frozenset(range(1, min(n, 5) + 1))
    import itertools
    hom_ok = True
    for dpm_size in range(len(delta) + 1):
        for dpm in itertools.combinations(sorted(delta), dpm_size):
            for dm_size in range(len(dpm) + 1):
                for dm in itertools.combinations(dpm, dm_size):
                    ranks = subset_complex_homology(delta, dm, dpm)
                    nonzero = {j: r for j, r in ranks.items() if r != 0}
                    if set(dm) == set(dpm):
                        expected = {len(delta) - len(dm): 1}
                    else:
                        expected = {}
                    hom_ok = hom_ok and nonzero == expected
    results.append(("subset-homology", len(delta), hom_ok))
    payload = [
        {"suite": name, "n": k, "pass": ok} for name, k, ok in results
    ]
    lines = [f"{name:<18} n={k:<3} {'PASS' if ok else 'FAIL'}" for name, k, ok in results]
    _emit(payload, args.json, lines)
    return OK if all(ok for _, _, ok in results) else BAD_IDENTITY


def cmd_verify(args) -> int:
    psi, _ = _load(args.file)
    report = verify_cancellation(psi)
    lines = [f"expansion of {report['quad']}"]
    for ch in report["checks"]:
        status = "vanishes" if ch["vanishes"] else f"RESIDUAL({ch['residual']})"
        lines.append(f"{ch['kind']:<12} x={ch['x']:<6} {status}")
    _emit(report, args.json, lines)
    return OK if report["all_vanish"] else BAD_IDENTITY


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="multiseg",
        description="Segment combinatorics for twisted general linear groups",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(fn=fn)
        return p

    p = add("classify", cmd_classify, help="block predicates and quad recoding")
    p.add_argument("file")
    p = add("signs", cmd_signs, help="sign characters and normalization ratios")
    p.add_argument("file")
    p = add("resolve", cmd_resolve, help="resolution in the formal group")
    p.add_argument("file")
    p.add_argument("--rule", choices=("minimal", "staircase"), default="minimal")
    p = add("jacquet", cmd_jacquet, help="Jacquet projection of the resolution")
    p.add_argument("file")
    p.add_argument("--rho", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--theta", action="store_true")
    p = add("dominate", cmd_dominate, help="discrete-diagonal dominating parameter")
    p.add_argument("file")
    p.add_argument("--rule", choices=("minimal", "staircase"), default="minimal")
    p = add("dual", cmd_dual, help="dual multisegment")
    p.add_argument("multisegment")
    p = add("complex-check", cmd_complex_check, help="wedge-sign and homology suites")
    p.add_argument("--n", type=int, default=5)
    p = add("verify", cmd_verify, help="cancellation report for a parameter")
    p.add_argument("file")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParamFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
