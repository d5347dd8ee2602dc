"""Acceptance suite: one test per release criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import io
import itertools
import json
import time
from contextlib import redirect_stdout
from fractions import Fraction

import pytest

from polarhex.apolarity import (
    catalecticant4,
    contraction_pair,
    klein_pair,
    klein_quartic,
    omega_matrix,
)
from polarhex.covers import alpha_fiber_check, enumeration_checks, match_point_sets
from polarhex.decompose import reconstruct, tangent_nullity
from polarhex.errors import ComputationError, DegeneratePoint, IllConditioned
from polarhex.poly import Form, evaluate, form_from_text
from polarhex.varieties import _build_discriminant, g3_fiber_probe, sample_p2
from polarhex.poly import DualPoint

F4 = klein_quartic()

_BATCH: list = []


def batch100():
    if not _BATCH:
        for seed in range(100):
            L, M = sample_p2(seed)
            _BATCH.append(reconstruct(L, M))
    return _BATCH


def report(num, name, ok, extra=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({extra})" if extra else ""
    print(f"ACCEPTANCE {num:02d} {name}: {status}{suffix}")
    assert ok, f"criterion {num} failed{suffix}"


def test_criterion_01_klein_catalecticant():
    expected = [
        [0, 3, 0, 0, 0, 0],
        [3, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 3],
        [0, 0, 0, 0, 3, 0],
        [0, 0, 0, 3, 0, 0],
        [0, 0, 3, 0, 0, 0],
    ]
    catalecticant4(F4)  # warm-up (imports, cached basis)
    t0 = time.perf_counter()
    cat = catalecticant4(F4)
    dt = time.perf_counter() - t0
    exact = [[Fraction(x) for x in row] for row in cat] == [
        [Fraction(v) for v in row] for row in expected
    ]
    report(1, "klein catalecticant exact", exact and dt < 1e-3, f"{dt * 1e3:.3f} ms")


def test_criterion_02_discriminant_identity():
    sextic = form_from_text("x0*x1^5 + x0^5*x2 - 5*x0^2*x1^2*x2^2 + x1*x2^5")
    _build_discriminant()  # warm-up
    t0 = time.perf_counter()
    det = _build_discriminant()
    ok = (4 * det + sextic).is_zero
    dt = time.perf_counter() - t0
    report(2, "discriminant identity exact", ok and dt < 1e-2, f"{dt * 1e3:.2f} ms")


def test_criterion_03_convention_locks():
    t0 = time.perf_counter()
    vars6 = [Form.variable(6, i) for i in range(6)]
    L, M = vars6[:3], vars6[3:]
    lock_matrix = omega_matrix(F4, L, M) == 3 * klein_pair(L, M)
    lock_contraction = contraction_pair(F4, L, M) == 12 * klein_pair(L, M)
    vars3 = [Form.variable(3, i) for i in range(3)]
    lock_self = klein_pair(vars3, vars3) == 2 * evaluate(F4, vars3)
    dt = time.perf_counter() - t0
    ok = lock_matrix and lock_contraction and lock_self
    report(3, "convention locks exact", ok and dt < 0.1, f"{dt * 1e3:.1f} ms")


def test_criterion_04_reconstruction_suite():
    t0 = time.perf_counter()
    decomps = batch100()
    residual_ok = all(d.residual < 1e-8 for d in decomps)
    pairing_ok = True
    for d in decomps:
        pts = [p.normalized() for p in d.points()]
        for a, b in itertools.combinations(pts, 2):
            if abs(complex(klein_pair(a, b))) >= 1e-8:
                pairing_ok = False
    round_trip_good = 0
    for d in decomps:
        pts = d.points()
        sample_ok = True
        for i, j in itertools.combinations(range(6), 2):
            try:
                d2 = reconstruct(pts[i], pts[j])
            except DegeneratePoint:
                continue  # pair off the chart: not part of the claim
            except ComputationError:
                sample_ok = False
                break
            if not match_point_sets(d2.points(), pts, 1e-6):
                sample_ok = False
                break
        round_trip_good += sample_ok
    dt = time.perf_counter() - t0
    ok = residual_ok and pairing_ok and round_trip_good >= 95 and dt < 10.0
    report(
        4,
        "reconstruction suite (100 seeds)",
        ok,
        f"round-trip {round_trip_good}/100, {dt:.2f} s",
    )


def test_criterion_05_dimension_check():
    decomps = batch100()
    t0 = time.perf_counter()
    good = 0
    for d in decomps:
        try:
            good += tangent_nullity(d) == 3
        except IllConditioned:
            pass
    dt = time.perf_counter() - t0
    report(5, "tangent nullity = 3", good >= 95 and dt < 5.0, f"{good}/100, {dt:.2f} s")


def test_criterion_06_alpha_degree_check():
    decomps = batch100()
    t0 = time.perf_counter()
    good = 0
    for d in decomps:
        try:
            good += bool(alpha_fiber_check(d, 0))
        except ComputationError:
            pass
    dt = time.perf_counter() - t0
    report(6, "degree-5 fiber check", good >= 95 and dt < 30.0, f"{good}/100, {dt:.2f} s")


def test_criterion_07_cover_combinatorics():
    d = batch100()[0]
    t0 = time.perf_counter()
    checks = enumeration_checks(d)
    dt = time.perf_counter() - t0
    report(7, "cover combinatorics 720/6/10/24/6", all(checks.values()) and dt < 1.0, f"{dt:.2f} s")


def test_criterion_08_symplectic_suite():
    import polarhex.symplectic as symp

    t0 = time.perf_counter()
    group = symp.sp4_group()
    chars = symp.enumerate_characteristics()
    orbs = symp.orbits()
    ok = len(group) == 720
    ok = ok and [len(o) for o in orbs] == [10, 6]
    stab_orders = sorted(symp.stabilizer_order(m) for m in chars)
    ok = ok and stab_orders == [72] * 10 + [120] * 6
    ok = ok and all(
        symp.parity(symp.act(g, m)) == symp.parity(m) for g in group for m in chars
    )
    perms = symp.perm_representation()
    ident = tuple(range(6))
    ok = ok and len(set(perms.values())) == 720
    ok = ok and sum(1 for v in perms.values() if v == ident) == 1
    arfs = [symp.arf(q) for q in symp.quadratic_forms()]
    ok = ok and (arfs.count(0), arfs.count(1)) == (10, 6)
    ok = ok and symp.forms_equivariant()
    dt = time.perf_counter() - t0
    report(8, "symplectic suite exhaustive", ok and dt < 5.0, f"{dt:.2f} s")


def test_criterion_09_fiber_probe():
    t0 = time.perf_counter()
    rep = g3_fiber_probe(DualPoint(1, 1, 1), 50)
    dt = time.perf_counter() - t0
    ok = (
        rep.produced == 50
        and rep.min_rank == 3
        and rep.max_residual < 1e-9
        and dt < 10.0
    )
    report(9, "fibration fiber probe", ok, f"max residual {rep.max_residual:.1e}, {dt:.2f} s")


def test_criterion_10_cli_determinism(tmp_path):
    from polarhex.cli import main

    def run(argv):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main(argv)
        return code, buf.getvalue()

    def fmt(z):
        z = complex(z)
        if z.imag == 0:
            return repr(z.real)
        sign = "+" if z.imag >= 0 else "-"
        return f"({z.real!r}{sign}{abs(z.imag)!r}j)"

    L, M = sample_p2(0)
    l_arg = ",".join(str(x) for x in L.coords)
    m_arg = ",".join(fmt(x) for x in M.coords)

    _, dec_out = run(["decompose", "--L", l_arg, "--M", m_arg])
    dfile = tmp_path / "d.json"
    dfile.write_text(dec_out)

    commands = [
        ["decompose", "--L", l_arg, "--M", m_arg],
        ["verify", "--in", str(dfile)],
        ["sample", "--count", "3", "--seed", "42"],
        ["discriminant"],
        ["covers", "--seed", "2"],
        ["orbits"],
        ["chart", "--params", "0.3+0.2j,0.1-0.4j,0.7+0.1j"],
        ["probe-fiber", "--L0", "1,1,1", "--count", "5", "--seed", "1"],
    ]
    ok = True
    for argv in commands:
        code1, out1 = run(argv)
        code2, out2 = run(argv)
        if out1 != out2 or code1 != code2 or not out1:
            ok = False
    report(10, "CLI determinism", ok, f"{len(commands)} commands, byte-identical")
