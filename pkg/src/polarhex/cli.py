"""Command-line front end: every command emits one JSON document.

Exit codes: 0 success, 1 input error, 2 typed numerical failure (the error
name lands in the JSON "error" field), 3 a verification check failed.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from fractions import Fraction

from . import covers as covers_mod
from . import symplectic as symp
from .apolarity import klein_pair
from .decompose import reconstruct, verify
from .errors import ComputationError
from .poly import DualPoint, Form, form_to_text
from .serialize import SCHEMA_ID, decomposition_from_json, decomposition_to_json
from .varieties import _build_discriminant, g3_fiber_probe, sample_p2, sample_p3


def _parse_scalar(token: str):
    try:
        return Fraction(token)
    except ValueError:
        return complex(token)


def _parse_point(text: str) -> DualPoint:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated coordinates, got {text!r}")
    return DualPoint(*(_parse_scalar(p) for p in parts))


def _parse_params(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated parameters, got {text!r}")
    return tuple(complex(_parse_scalar(p)) for p in parts)


def _cmd_decompose(args) -> tuple[dict, bool]:
    d = reconstruct(_parse_point(args.L), _parse_point(args.M), tol=args.tol)
    return {
        "schema": SCHEMA_ID,
        "command": "decompose",
        "decomposition": decomposition_to_json(d),
    }, True


def _cmd_verify(args) -> tuple[dict, bool]:
    with open(args.infile) as fh:
        doc = json.load(fh)
    body = doc.get("decomposition", doc)
    d = decomposition_from_json(body)
    residual = verify(d)
    pts = [p.normalized() for p in d.points()]
    max_pair = max(
        abs(complex(klein_pair(a, b))) for a, b in itertools.combinations(pts, 2)
    )
    ok = residual < args.tol and max_pair < max(args.tol, 1e-8)
    return {
        "schema": SCHEMA_ID,
        "command": "verify",
        "residual": residual,
        "max_pairing": max_pair,
        "ok": ok,
    }, ok


def _cmd_sample(args) -> tuple[dict, bool]:
    from .varieties import membership_p2, membership_p3

    samples = []
    ok = True
    for i in range(args.count):
        item_seed = args.seed ^ i
        if args.variety == "p2":
            pts = sample_p2(item_seed, tol=args.tol)
            member = membership_p2(*pts, tol=1e-8)
        else:
            pts = sample_p3(item_seed, tol=args.tol)
            member = membership_p3(*pts, tol=1e-8)
        ok = ok and member
        samples.append(
            {
                "seed": item_seed,
                "points": [
                    [[z.real, z.imag] for z in p.normalized().complex_coords()]
                    for p in pts
                ],
                "member": member,
            }
        )
    return {
        "schema": SCHEMA_ID,
        "command": "sample",
        "variety": args.variety,
        "count": args.count,
        "samples": samples,
    }, ok


def _cmd_discriminant(args) -> tuple[dict, bool]:
    det = _build_discriminant()
    reference = Form(
        3,
        6,
        {
            (1, 5, 0): 1,
            (5, 0, 1): 1,
            (2, 2, 2): -5,
            (0, 1, 5): 1,
        },
    )
    identity_ok = (4 * det + reference).is_zero
    return {
        "schema": SCHEMA_ID,
        "command": "discriminant",
        "sextic": form_to_text(det),
        "identity_ok": identity_ok,
        "matrix_scale": "-1/4",
    }, identity_ok


def _cmd_covers(args) -> tuple[dict, bool]:
    L, M = sample_p2(args.seed, tol=args.tol)
    d = reconstruct(L, M, tol=args.tol)
    checks = covers_mod.enumeration_checks(d)
    alpha_ok = covers_mod.alpha_fiber_check(d, 0)
    ok = all(checks.values()) and alpha_ok
    return {
        "schema": SCHEMA_ID,
        "command": "covers",
        "degrees": covers_mod.degree_table(),
        "checks": checks,
        "alpha_check": alpha_ok,
        "ok": ok,
    }, ok


def _cmd_orbits(args) -> tuple[dict, bool]:
    group = symp.sp4_group()
    orbs = symp.orbits()
    even, odd = symp.parity_counts()
    report = symp.cover_report()
    perms = symp.perm_representation()
    arfs = [symp.arf(q) for q in symp.quadratic_forms()]
    stab_orders = sorted(
        symp.stabilizer_order(m) for m in symp.enumerate_characteristics()
    )
    ident = tuple(range(6))
    checks = {
        "group_order_720": len(group) == 720,
        "two_orbits_10_6": [len(o) for o in orbs] == [10, 6],
        "parity_constant_on_orbits": all(
            len({symp.parity(m) for m in o}) == 1 for o in orbs
        ),
        "parity_invariant_all_pairs": all(
            symp.parity(symp.act(g, m)) == symp.parity(m)
            for g in group
            for m in symp.enumerate_characteristics()
        ),
        "even_odd_counts_10_6": (even, odd) == (10, 6),
        "stabilizers_72_120": stab_orders == [72] * 10 + [120] * 6,
        "perm_image_720": len(set(perms.values())) == 720,
        "perm_kernel_trivial": sum(1 for v in perms.values() if v == ident) == 1,
        "arf_split_10_6": (arfs.count(0), arfs.count(1)) == (10, 6),
        "form_matching_equivariant": symp.forms_equivariant(),
    }
    ok = all(checks.values())
    return {
        "schema": SCHEMA_ID,
        "command": "orbits",
        "group_order": len(group),
        "orbit_sizes": [len(o) for o in orbs],
        "stab_even": report["stab_even"],
        "stab_odd": report["stab_odd"],
        "cover_degrees": {
            "odd": report["odd_cover_degree"],
            "even": report["even_cover_degree"],
            "level22": report["level22_cover_degree"],
        },
        "checks": checks,
        "ok": ok,
    }, ok


def _cmd_chart(args) -> tuple[dict, bool]:
    pd = covers_mod.vsp6_chart(_parse_params(args.params), tol=args.tol)
    return {
        "schema": SCHEMA_ID,
        "command": "chart",
        "marked": pd.marked,
        "decomposition": decomposition_to_json(pd.base),
    }, True


def _cmd_probe(args) -> tuple[dict, bool]:
    report = g3_fiber_probe(
        _parse_point(args.L0), args.count, seed=args.seed, tol=args.tol
    )
    ok = report.min_rank == 3 and report.max_residual < 1e-9
    return {
        "schema": SCHEMA_ID,
        "command": "probe-fiber",
        "report": report.to_dict(),
        "ok": ok,
    }, ok


_HANDLERS = {
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "sample": _cmd_sample,
    "discriminant": _cmd_discriminant,
    "covers": _cmd_covers,
    "orbits": _cmd_orbits,
    "chart": _cmd_chart,
    "probe-fiber": _cmd_probe,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarhex",
        description="Power-sum decompositions of the Klein quartic and their covers",
    )
    parser.add_argument("--out", help="write the JSON document to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("decompose", help="reconstruct a decomposition from one apolar pair")
    p.add_argument("--L", required=True, help="a,b,c (rational or complex)")
    p.add_argument("--M", required=True, help="a,b,c (rational or complex)")
    common(p)

    p = sub.add_parser("verify", help="re-check a decomposition file")
    p.add_argument("--in", dest="infile", required=True)
    common(p)

    p = sub.add_parser("sample", help="seeded samples of apolar pairs or triples")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--variety", choices=["p2", "p3"], default="p2")
    common(p)

    p = sub.add_parser("discriminant", help="the conic-bundle discriminant sextic")
    common(p)

    p = sub.add_parser("covers", help="cover-degree table with enumeration checks")
    common(p)

    p = sub.add_parser("orbits", help="symplectic group, orbit and stabilizer report")
    common(p)

    p = sub.add_parser("chart", help="pointed decomposition from three chart parameters")
    p.add_argument("--params", required=True, help="p1,p2,p3 (complex)")
    common(p)

    p = sub.add_parser("probe-fiber", help="sample one fibration fiber and probe smoothness")
    p.add_argument("--L0", required=True, help="a,b,c base point")
    p.add_argument("--count", type=int, default=50)
    common(p)

    return parser


def _emit(doc: dict, out_path: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out_path:
        out_dir = os.environ.get("POLARHEX_OUT_DIR")
        if out_dir and not os.path.isabs(out_path):
            out_path = os.path.join(out_dir, out_path)
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1

    handler = _HANDLERS[args.command]
    try:
        doc, ok = handler(args)
    except ComputationError as exc:
        _emit(
            {
                "schema": SCHEMA_ID,
                "command": args.command,
                "error": type(exc).__name__,
                "detail": str(exc),
            },
            args.out,
        )
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1

    _emit(doc, args.out)
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
