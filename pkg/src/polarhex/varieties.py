"""Pairs and triples of mutually apolar dual points for the Klein quartic.

The pair condition D(L, M) = 0 is a single equation of bidegree (2, 2); for
fixed L it is a conic in M, so projecting to the first factor gives a conic
bundle.  The matrix of that fiber conic, the sextic discriminant of the
bundle, a rational parametrization of the smooth fibers, seeded samplers,
and a numeric smoothness probe for the triple-locus fibration all live
here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

import numpy as np

from .apolarity import klein_pair, klein_quartic
from .decompose import intersect_conics, reconstruct
from .errors import ComputationError, DegenerateFiber, RetriesExhausted
from .poly import DualPoint, Form, evaluate

_KLEIN = klein_quartic()
_HALF = Fraction(1, 2)

# Fixed generic line used to choose a base point on a fiber conic; samplers
# perturb it from their seed so that repeated draws cannot share a bad line.
_BASE_LINE = (Fraction(3, 64), Fraction(5, 64), Fraction(1))


def membership_p2(L, M, tol: float = 1e-9) -> bool:
    """True iff the normalized pairing of the two points vanishes within tol."""
    Ln = L.normalized() if isinstance(L, DualPoint) else DualPoint(*L).normalized()
    Mn = M.normalized() if isinstance(M, DualPoint) else DualPoint(*M).normalized()
    return abs(complex(klein_pair(Ln, Mn))) < tol


def membership_p3(L, M, N, tol: float = 1e-9) -> bool:
    """True iff all three pairings of the triple vanish within tol."""
    return membership_p2(L, M, tol) and membership_p2(L, N, tol) and membership_p2(M, N, tol)


def fiber_conic(L):
    """Symmetric matrix Q with M^T Q M = klein_pair(L, M) for every M.

    Entries follow the scalars of L: exact in, exact out; works for
    form-valued coordinates too.
    """
    a, b, c = tuple(L)
    return [
        [a * b, a * a * _HALF, c * c * _HALF],
        [a * a * _HALF, b * c, b * b * _HALF],
        [c * c * _HALF, b * b * _HALF, a * c],
    ]


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _build_discriminant() -> Form:
    coords = [Form.variable(3, i) for i in range(3)]
    return _det3(fiber_conic(coords))


@cache
def discriminant_sextic() -> Form:
    """det Q(L) as an exact sextic in the base coordinates.

    Equals -1/4 * (a*b^5 + a^5*c - 5*a^2*b^2*c^2 + b*c^5); the scalar is
    fixed by the halving of the off-diagonal entries in :func:`fiber_conic`.
    """
    return _build_discriminant()


def _conic_array(L) -> np.ndarray:
    return np.array(
        [[complex(x) for x in row] for row in fiber_conic(L)], dtype=complex
    )


def _line_points(line) -> tuple[np.ndarray, np.ndarray]:
    _, _, vh = np.linalg.svd(np.array([[complex(x) for x in line]]))
    return vh[1].conj(), vh[2].conj()


def parametrize_fiber(L, t, tol: float = 1e-9, line=None) -> DualPoint:
    """A point M(t) of the fiber conic over L, rationally parametrized.

    A base point comes from cutting the conic with a fixed generic line;
    M(t) is then the second intersection of the conic with the line through
    the base point in direction r1 + t*r2.  Requires a smooth fiber.
    """
    Lp = L if isinstance(L, DualPoint) else DualPoint(*L)
    Ln = Lp.normalized()
    disc = evaluate(discriminant_sextic(), Ln)
    if abs(complex(disc)) < tol:
        raise DegenerateFiber("discriminant vanishes at the base point")
    Q = _conic_array(Ln)
    u, v = _line_points(line if line is not None else _BASE_LINE)
    A = u @ Q @ u
    B = u @ Q @ v
    C = v @ Q @ v
    r = np.sqrt(B * B - A * C)
    if max(abs(-B + r), abs(A)) >= max(abs(C), abs(-B - r)):
        s, sp = -B + r, A
    else:
        s, sp = C, -B - r
    p0 = s * u + sp * v
    # direction points: the two coordinate vectors least aligned with p0
    order = np.argsort(np.abs(p0))
    r1 = np.zeros(3, dtype=complex)
    r2 = np.zeros(3, dtype=complex)
    r1[order[0]] = 1.0
    r2[order[1]] = 1.0
    d = r1 + complex(t) * r2
    M = (d @ Q @ d) * p0 - 2.0 * (p0 @ Q @ d) * d
    return DualPoint(complex(M[0]), complex(M[1]), complex(M[2])).normalized()


def pair_gradient(L, M) -> np.ndarray:
    """Gradient of the pairing in the six coordinates of (L, M)."""
    Lc = np.array([complex(x) for x in L])
    Mc = np.array([complex(x) for x in M])
    gL = 2.0 * _conic_array(Mc) @ Lc
    gM = 2.0 * _conic_array(Lc) @ Mc
    return np.concatenate([gL, gM])


# ---------------------------------------------------------------------------
# Seeded samplers
# ---------------------------------------------------------------------------

def sample_p2(seed: int, tol: float = 1e-9, retries: int = 32) -> tuple[DualPoint, DualPoint]:
    """Deterministic pair (L, M) with vanishing pairing.

    L gets small integer coordinates (cheap exact cross-checks), rejected
    while it sits on the discriminant or the Klein curve; M comes from the
    fiber parametrization at a random complex parameter.
    """
    rng = np.random.default_rng(seed)
    for _ in range(retries):
        coords = tuple(int(x) for x in rng.integers(-9, 10, size=3))
        if coords == (0, 0, 0):
            continue
        if evaluate(discriminant_sextic(), coords) == 0:
            continue
        if evaluate(_KLEIN, coords) == 0:
            continue
        L = DualPoint(*coords)
        eps1 = Fraction(int(rng.integers(1, 64)), 512)
        eps2 = Fraction(int(rng.integers(1, 64)), 512)
        t = complex(rng.standard_normal(), rng.standard_normal())
        try:
            M = parametrize_fiber(L, t, tol=tol, line=(eps1, eps2, Fraction(1)))
        except DegenerateFiber:
            continue
        return L, M
    raise RetriesExhausted(f"no admissible pair after {retries} draws")


def sample_p3(seed: int, tol: float = 1e-9, retries: int = 32) -> tuple[DualPoint, DualPoint, DualPoint]:
    """Deterministic mutually-apolar triple: the first three points of a
    reconstructed decomposition seeded by :func:`sample_p2`."""
    last: ComputationError | None = None
    for attempt in range(retries):
        L, M = sample_p2(seed + (attempt << 32), tol=tol, retries=retries)
        try:
            d = reconstruct(L, M, tol=max(tol, 1e-9))
        except ComputationError as exc:
            last = exc
            continue
        pts = d.points()
        return pts[0], pts[1], pts[2]
    raise RetriesExhausted(f"no reconstructible pair after {retries} draws: {last}")


# ---------------------------------------------------------------------------
# Fibration probe
# ---------------------------------------------------------------------------

@dataclass
class ProbeReport:
    """Smoothness statistics for sampled points of one fibration fiber."""

    requested: int
    produced: int = 0
    failures: int = 0
    min_rank: int | None = None
    rank_counts: dict = field(default_factory=dict)
    max_residual: float = 0.0
    max_condition: float = 0.0

    def record(self, rank: int, residual: float, condition: float) -> None:
        self.produced += 1
        self.rank_counts[rank] = self.rank_counts.get(rank, 0) + 1
        self.min_rank = rank if self.min_rank is None else min(self.min_rank, rank)
        self.max_residual = max(self.max_residual, residual)
        self.max_condition = max(self.max_condition, condition)

    def to_dict(self) -> dict:
        return {
            "requested": self.requested,
            "produced": self.produced,
            "failures": self.failures,
            "min_jacobian_rank": self.min_rank,
            "rank_counts": {str(k): v for k, v in sorted(self.rank_counts.items())},
            "max_residual": self.max_residual,
            "max_condition": self.max_condition,
        }


def _chart(vec: np.ndarray) -> list[int]:
    pivot = int(np.argmax(np.abs(vec)))
    return [i for i in range(3) if i != pivot]


def _fiber_point_data(L0c: np.ndarray, Mp: DualPoint, Np: DualPoint) -> tuple[int, float, float]:
    Mc = np.array(Mp.complex_coords())
    Nc = np.array(Np.complex_coords())
    QL0 = _conic_array(L0c)
    QM = _conic_array(Mc)
    QN = _conic_array(Nc)
    residual = max(
        abs(Mc @ QL0 @ Mc),
        abs(Nc @ QL0 @ Nc),
        abs(Nc @ QM @ Nc),
    )
    dM1 = 2.0 * QL0 @ Mc
    dN2 = 2.0 * QL0 @ Nc
    dM3 = 2.0 * QN @ Mc
    dN3 = 2.0 * QM @ Nc
    cm, cn = _chart(Mc), _chart(Nc)
    J = np.array(
        [
            [dM1[cm[0]], dM1[cm[1]], 0.0, 0.0],
            [0.0, 0.0, dN2[cn[0]], dN2[cn[1]]],
            [dM3[cm[0]], dM3[cm[1]], dN3[cn[0]], dN3[cn[1]]],
        ],
        dtype=complex,
    )
    s = np.linalg.svd(J, compute_uv=False)
    rank = int(np.sum(s > 1e-8 * s[0])) if s[0] > 0 else 0
    condition = float(s[0] / s[2]) if s[2] > 0 else float("inf")
    return rank, float(residual), condition


def g3_fiber_probe(L0, count: int, seed: int = 0, tol: float = 1e-9) -> ProbeReport:
    """Sample fiber points over a fixed base point and report Jacobian ranks.

    A fiber point is a pair (M, N) with all three pairings against L0 and
    each other vanishing; M runs over the fiber conic of L0 and N over the
    intersection of the conics cut out by L0 and M.  Rank 3 of the 3x4
    chart Jacobian at every sample is the smoothness signal (the fiber is
    then locally a curve); connectedness is not probed.
    """
    L0p = L0 if isinstance(L0, DualPoint) else DualPoint(*L0)
    L0n = L0p.normalized()
    disc = evaluate(discriminant_sextic(), L0n)
    if abs(complex(disc)) < tol:
        raise DegenerateFiber("discriminant vanishes at the base point")
    L0c = np.array(L0n.complex_coords())
    QL0 = _conic_array(L0c)
    rng = np.random.default_rng(seed)
    report = ProbeReport(requested=count)
    attempts = 0
    while report.produced < count and attempts < 8 * count + 32:
        attempts += 1
        t = complex(rng.standard_normal(), rng.standard_normal())
        try:
            M = parametrize_fiber(L0n, t, tol=tol)
            QM = _conic_array(np.array(M.complex_coords()))
            candidates = intersect_conics(QL0, QM, tol)
        except ComputationError:
            report.failures += 1
            continue
        for N in candidates:
            rank, residual, condition = _fiber_point_data(L0c, M, N)
            report.record(rank, residual, condition)
            if report.produced >= count:
                break
    return report
