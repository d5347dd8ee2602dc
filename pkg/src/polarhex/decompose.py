"""Six-term power-sum reconstruction of the Klein quartic from an apolar pair.

Given two dual points L, M with vanishing Klein pairing and off the Klein
curve, the pipeline is:

1. peel off alpha*L^4 + beta*M^4 with the unique coefficients that drop the
   catalecticant rank of the remainder to 4 (for the Klein quartic the
   capacitance condition collapses to the closed form alpha = 1/(8 F(L)));
2. the kernel of the remainder catalecticant is a pencil of conics through
   the four missing dual points; intersect two independent members;
3. solve the 15-equation linear system for the four remaining coefficients
   by least squares and check the residual.

All heavy numerics (SVD, eigenvalue root finding, least squares) run in
numpy over complex doubles; the peel-off coefficients stay exact when the
input points are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .apolarity import catalecticant4, klein_pair, klein_quartic, nullspace, power_vec
from .errors import (
    DegenerateIntersection,
    DegeneratePoint,
    EntryCount,
    IllConditioned,
    NonTransverse,
    NotApolarPair,
    NotDegenerate,
    RankUnexpected,
    ResidualTooLarge,
)
from .poly import DualPoint, Form, chordal_distance, evaluate, exponents, is_exact_scalar, pow_linear

_KLEIN = klein_quartic()
_QUARTIC_EXPS = exponents(3, 4)  # 15 monomials, lexicographically decreasing


@dataclass(frozen=True, eq=False)
class Decomposition:
    """An ordered six-term power-sum decomposition target = sum(lam_i * L_i^4)."""

    target: Form
    entries: tuple  # six (DualPoint, scalar) pairs
    residual: float = 0.0

    def points(self) -> list[DualPoint]:
        return [p for p, _ in self.entries]

    def lambdas(self) -> list:
        return [lam for _, lam in self.entries]


# ---------------------------------------------------------------------------
# Step 1: peel-off coefficients
# ---------------------------------------------------------------------------

def _one_over(x, mult: int):
    if is_exact_scalar(x):
        return Fraction(1, mult) / Fraction(x)
    return 1.0 / (mult * x)


def residual_quartic(L, M, alpha, beta, quartic: Form | None = None) -> Form:
    base = _KLEIN if quartic is None else quartic
    return base - alpha * pow_linear(L, 4) - beta * pow_linear(M, 4)


def _as_complex_matrix(rows) -> np.ndarray:
    return np.array([[complex(x) for x in row] for row in rows], dtype=complex)


def _numeric_rank(matrix: np.ndarray, tol: float) -> int:
    s = np.linalg.svd(matrix, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def pair_coefficients(L: DualPoint, M: DualPoint, tol: float = 1e-9, quartic: Form | None = None):
    """Coefficients (alpha, beta) making rank(Cat(F - alpha L^4 - beta M^4)) = 4.

    For the Klein target the closed form alpha = 1/(8 F(L)) applies and is
    exact on exact points; any other quartic goes through the generic
    capacitance conditions 12*alpha * u^T C^-1 u = 1 with a vanishing cross
    term.  Either way the rank-4 property is cross-checked numerically.
    """
    Ln, Mn = L.normalized(), M.normalized()
    if quartic is None:
        fL = evaluate(_KLEIN, Ln)
        fM = evaluate(_KLEIN, Mn)
        if abs(complex(fL)) <= tol:
            raise DegeneratePoint("first point lies on the Klein curve")
        if abs(complex(fM)) <= tol:
            raise DegeneratePoint("second point lies on the Klein curve")
        pairing = klein_pair(Ln, Mn)
        if abs(complex(pairing)) > tol:
            raise NotApolarPair(f"pairing value {complex(pairing)!r} exceeds tolerance")
        alpha = _one_over(evaluate(_KLEIN, L), 8)
        beta = _one_over(evaluate(_KLEIN, M), 8)
    else:
        cat = _as_complex_matrix(catalecticant4(quartic))
        u = np.array([complex(x) for x in power_vec(Ln)])
        v = np.array([complex(x) for x in power_vec(Mn)])
        guu = u @ np.linalg.solve(cat, u)
        gvv = v @ np.linalg.solve(cat, v)
        guv = u @ np.linalg.solve(cat, v)
        if abs(guu) <= tol or abs(gvv) <= tol:
            raise DegeneratePoint("capacitance denominator vanishes")
        if abs(guv) > tol * abs(guu * gvv) ** 0.5:
            raise NotApolarPair("capacitance cross term does not vanish")
        # capacitance conditions on the caller's own representatives
        uf = np.array([complex(x) for x in power_vec(L)])
        vf = np.array([complex(x) for x in power_vec(M)])
        alpha = 1.0 / (12.0 * (uf @ np.linalg.solve(cat, uf)))
        beta = 1.0 / (12.0 * (vf @ np.linalg.solve(cat, vf)))
    G = residual_quartic(L, M, alpha, beta, quartic)
    rank = _numeric_rank(_as_complex_matrix(catalecticant4(G)), max(tol, 1e-12))
    if rank != 4:
        raise RankUnexpected(f"catalecticant rank {rank} after peeling, expected 4")
    return alpha, beta


# ---------------------------------------------------------------------------
# Step 2: the kernel pencil and its intersection
# ---------------------------------------------------------------------------

def conic_from_vec(q) -> np.ndarray:
    """Symmetric matrix of the conic with coefficient vector (q1..q6) in the
    power-vector coordinates (a^2, ab, ac, b^2, bc, c^2)."""
    q = [complex(x) for x in q]
    return np.array(
        [
            [q[0], q[1] / 2, q[2] / 2],
            [q[1] / 2, q[3], q[4] / 2],
            [q[2] / 2, q[4] / 2, q[5]],
        ],
        dtype=complex,
    )


def conic_value(Q: np.ndarray, point) -> complex:
    x = np.array([complex(c) for c in point])
    return complex(x @ Q @ x)


def remainder_pencil(G: Form, tol: float = 1e-9) -> tuple[np.ndarray, np.ndarray]:
    """Two independent conics spanning the kernel of the catalecticant of G."""
    kernel = nullspace(catalecticant4(G), tol)
    if len(kernel) != 2:
        raise RankUnexpected(f"kernel dimension {len(kernel)}, expected 2")
    return conic_from_vec(kernel[0]), conic_from_vec(kernel[1])


def _adjugate3(A: np.ndarray) -> np.ndarray:
    out = np.empty((3, 3), dtype=complex)
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != j]
            c = [k for k in range(3) if k != i]
            minor = A[r[0], c[0]] * A[r[1], c[1]] - A[r[0], c[1]] * A[r[1], c[0]]
            out[i, j] = ((-1) ** (i + j)) * minor
    return out


def _normalize_vec(v: np.ndarray) -> np.ndarray:
    k = int(np.argmax(np.abs(v)))
    return v / v[k]


def split_conic(Q, tol: float = 1e-9) -> tuple[np.ndarray, np.ndarray]:
    """Split a rank <= 2 conic into two lines whose product recovers it.

    Rank 1 gives a double line.  The rank-2 case goes through the adjugate:
    adj(Q) = -p p^T for the singular point p, and Q + [p]_x has rank 1 with
    the two lines as its nonzero row and column.
    """
    A = np.asarray(Q, dtype=complex)
    scale = float(np.max(np.abs(A)))
    if scale == 0.0:
        raise ValueError("zero conic")
    A = A / scale
    s = np.linalg.svd(A, compute_uv=False)
    if s[2] > tol * s[0]:
        raise NotDegenerate(f"conic has numerical rank 3 (s3/s1 = {s[2] / s[0]:.2e})")
    if s[1] <= tol * s[0]:
        j = int(np.argmax(np.linalg.norm(A, axis=0)))
        g = _normalize_vec(A[:, j])
        return g, g
    B = _adjugate3(A)
    i = int(np.argmax(np.abs(np.diag(B))))
    p = B[:, i] / np.sqrt(-B[i, i])
    cross = np.array(
        [[0, p[2], -p[1]], [-p[2], 0, p[0]], [p[1], -p[0], 0]], dtype=complex
    )
    C = A + cross
    r, c = np.unravel_index(int(np.argmax(np.abs(C))), C.shape)
    return _normalize_vec(C[r, :]), _normalize_vec(C[:, c])


def _line_span(line: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Null space of the *bilinear* functional l^T x: svd null vectors are the
    # conjugated rows of vh, since A V = U S uses plain matrix products.
    _, _, vh = np.linalg.svd(np.asarray(line, dtype=complex).reshape(1, 3))
    return vh[1].conj(), vh[2].conj()


def _line_conic_points(line: np.ndarray, Q: np.ndarray, tol: float) -> list[DualPoint]:
    u, v = _line_span(line)
    A = u @ Q @ u
    B = u @ Q @ v
    C = v @ Q @ v
    if max(abs(A), abs(B), abs(C)) < tol:
        raise NonTransverse("a line of the degenerate member lies in the reference conic")
    r = np.sqrt(B * B - A * C)

    def pick(n1, d1, n2, d2):
        return (n1, d1) if max(abs(n1), abs(d1)) >= max(abs(n2), abs(d2)) else (n2, d2)

    roots = [pick(-B + r, A, C, -B - r), pick(-B - r, A, C, -B + r)]
    pts = []
    for s, sp in roots:
        w = s * u + sp * v
        pts.append(DualPoint(complex(w[0]), complex(w[1]), complex(w[2])).normalized())
    return pts


def _point_sort_key(p: DualPoint):
    return tuple((round(z.real, 9), round(z.imag, 9)) for z in p.complex_coords())


def _polish_root(t: complex, A: np.ndarray, B: np.ndarray) -> complex:
    # Newton steps on det(A + t B); f'(t) = tr(adj(A + t B) B).
    for _ in range(3):
        N = A + t * B
        f = np.linalg.det(N)
        fp = np.trace(_adjugate3(N) @ B)
        if fp == 0:
            break
        step = f / fp
        t = t - step
        if abs(step) < 1e-15 * max(1.0, abs(t)):
            break
    return t


def intersect_conics(Q1, Q2, tol: float = 1e-9, distinct_tol: float = 1e-6) -> tuple[DualPoint, ...]:
    """The four intersection points of two conics, via the pencil method.

    Finds a degenerate member of the pencil Q1 + t*Q2 (cubic in t, roots by
    companion-matrix eigenvalues, Newton-polished), splits it into two lines
    and intersects each line with the least degenerate of the two inputs.
    """
    A = np.asarray(Q1, dtype=complex)
    B = np.asarray(Q2, dtype=complex)
    sA, sB = float(np.max(np.abs(A))), float(np.max(np.abs(B)))
    if sA == 0.0 or sB == 0.0:
        raise ValueError("zero conic")
    A, B = A / sA, B / sB
    mu = np.vdot(B, A) / np.vdot(B, B)
    if float(np.max(np.abs(A - mu * B))) < 10 * tol:
        raise NonTransverse("the conics are proportional")

    dets = [np.linalg.det(A + t * B) for t in (0.0, 1.0, -1.0, 2.0)]
    c0 = dets[0]
    c2 = (dets[1] + dets[2]) / 2 - c0
    s1 = (dets[1] - dets[2]) / 2
    s2 = (dets[3] - c0 - 4 * c2) / 2
    c3 = (s2 - s1) / 3
    c1 = s1 - c3
    coeffs = np.array([c3, c2, c1, c0])
    cscale = float(np.max(np.abs(coeffs)))

    candidates: list[np.ndarray] = []
    if cscale < 1e-12:
        # every pencil member is degenerate
        candidates = [A, B, A + B, A - B]
    else:
        cc = coeffs / cscale
        lead = 0
        while lead < 3 and abs(cc[lead]) < 1e-10:
            lead += 1
        for t in np.roots(cc[lead:]):
            candidates.append(A + _polish_root(complex(t), A, B) * B)
        if lead > 0:
            candidates.append(B)  # the member at t = infinity

    splits = []
    for order, N in enumerate(candidates):
        ns = float(np.max(np.abs(N)))
        if ns == 0.0:
            continue
        N = N / ns
        sv = np.linalg.svd(N, compute_uv=False)
        defect = sv[2] / sv[0]
        if defect > 1e-5:
            continue
        try:
            g, h = split_conic(N, tol=1e-4)
        except NotDegenerate:
            continue
        sep = chordal_distance(g, h)
        splits.append((0 if sep > distinct_tol else 1, defect, order, g, h))
    if not splits:
        raise DegenerateIntersection("no usable degenerate member in the pencil")
    splits.sort(key=lambda rec: rec[:3])
    _, _, _, g, h = splits[0]

    big = 10 * tol
    for line in (g, h):
        if _line_in_conic(line, A, big) and _line_in_conic(line, B, big):
            raise NonTransverse("the conics share a line")

    # intersect each line with the least degenerate input conic not containing it
    refs = sorted((A, B), key=lambda Q: -np.linalg.svd(Q, compute_uv=False)[2])
    pts = []
    for line in (g, h):
        ref = refs[1] if _line_in_conic(line, refs[0], big) else refs[0]
        pts.extend(_line_conic_points(line, ref, tol))

    unique: list[DualPoint] = []
    for p in pts:
        if not any(chordal_distance(p, q) <= distinct_tol for q in unique):
            unique.append(p)
    if len(unique) < 4:
        raise DegenerateIntersection(f"only {len(unique)} distinct intersection points")
    return tuple(sorted(unique, key=_point_sort_key))


def _line_in_conic(line: np.ndarray, Q: np.ndarray, tol: float) -> bool:
    u, v = _line_span(line)
    return max(abs(u @ Q @ u), abs(u @ Q @ v), abs(v @ Q @ v)) < tol


# ---------------------------------------------------------------------------
# Step 3: coefficients and assembly
# ---------------------------------------------------------------------------

def _quartic_vec(form: Form) -> np.ndarray:
    return np.array([complex(form.coeffs.get(e, 0)) for e in _QUARTIC_EXPS])


def _solve_coefficients(G: Form, pts) -> tuple[np.ndarray, float]:
    A = np.zeros((15, len(pts)), dtype=complex)
    for k, p in enumerate(pts):
        A[:, k] = _quartic_vec(pow_linear(p, 4))
    b = _quartic_vec(G)
    lam, *_ = np.linalg.lstsq(A, b, rcond=None)
    resid = float(np.linalg.norm(A @ lam - b) / np.linalg.norm(b))
    return lam, resid


def reconstruct(L: DualPoint, M: DualPoint, tol: float = 1e-9) -> Decomposition:
    """Full decomposition of the Klein quartic through the pair (L, M)."""
    alpha, beta = pair_coefficients(L, M, tol)
    G = residual_quartic(L, M, alpha, beta)
    C1, C2 = remainder_pencil(G, tol)
    pts = intersect_conics(C1, C2, tol)
    lam, resid = _solve_coefficients(G, pts)
    if not resid < tol:
        raise ResidualTooLarge(f"relative residual {resid:.3e} exceeds {tol:.1e}")
    entries = [(L, alpha), (M, beta)] + [(p, complex(v)) for p, v in zip(pts, lam)]
    d = Decomposition(_KLEIN, tuple(entries))
    return Decomposition(_KLEIN, tuple(entries), residual=verify(d))


def verify(d: Decomposition, tol: float | None = None) -> float:
    """Relative coefficient-norm residual of target - sum(lam_i L_i^4).

    Exact inputs that cancel exactly return 0.0.  When ``tol`` is given, a
    residual above it raises :class:`ResidualTooLarge`.
    """
    if len(d.entries) != 6:
        raise EntryCount(f"expected 6 entries, got {len(d.entries)}")
    diff = d.target
    for p, lam in d.entries:
        diff = diff - lam * pow_linear(p, 4)
    if diff.is_zero:
        return 0.0
    num = sum(abs(complex(c)) ** 2 for _, c in sorted(diff.coeffs.items()))
    den = sum(abs(complex(c)) ** 2 for _, c in sorted(d.target.coeffs.items()))
    resid = float(np.sqrt(num / den))
    if tol is not None and resid > tol:
        raise ResidualTooLarge(f"relative residual {resid:.3e} exceeds {tol:.1e}")
    return resid


# ---------------------------------------------------------------------------
# Tangent-space dimension of the decomposition variety at a decomposition
# ---------------------------------------------------------------------------

def _jacobian(d: Decomposition) -> np.ndarray:
    """15 x 18 Jacobian of the residual map in local charts.

    Unknowns: two affine coordinates per dual point (the largest-modulus
    coordinate stays fixed) plus one coefficient per entry.
    """
    cols = []
    x_forms = [Form.variable(3, j) for j in range(3)]
    for p, lam in d.entries:
        c = p.complex_coords()
        pivot = max(range(3), key=lambda i: abs(c[i]))
        cube = pow_linear(c, 3)
        for j in range(3):
            if j == pivot:
                continue
            cols.append(_quartic_vec(cube * x_forms[j]) * (4.0 * complex(lam)))
    for p, _ in d.entries:
        cols.append(_quartic_vec(pow_linear(p.complex_coords(), 4)))
    return np.column_stack(cols)


def tangent_nullity(d: Decomposition, tol: float = 1e-8, gap: float = 1e3) -> int:
    """Kernel dimension of the 15 x 18 residual Jacobian at the decomposition.

    A generic six-term decomposition of a ternary quartic gives 3 (full row
    rank 15 on 18 unknowns).  Raises :class:`IllConditioned` when the
    singular values show no clean rank gap at the cut.
    """
    if len(d.entries) != 6:
        raise EntryCount(f"expected 6 entries, got {len(d.entries)}")
    s = np.linalg.svd(_jacobian(d), compute_uv=False)
    srel = s / s[0]
    if srel[-1] > tol:
        return 18 - 15
    rank = int(np.sum(srel > tol))
    if s[rank] != 0.0 and s[rank - 1] / s[rank] < gap:
        raise IllConditioned(
            f"no clear rank gap: s[{rank - 1}]/s[{rank}] = {s[rank - 1] / s[rank]:.1f}"
        )
    return 18 - rank
