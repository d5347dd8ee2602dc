"""Quotient combinatorics of six-point decompositions and the cover degrees.

An ordered decomposition has 720 orderings; marking one point gives a
6-to-1 cover, an unordered 3+3 split a 10-to-1 cover, and fixing the first
two or three slots leaves 24 or 6 completions.  The degree-5 statement for
the marked cover is checked computationally: all five pairs through the
marked point reconstruct the same pointed decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .decompose import Decomposition, reconstruct
from .errors import DuplicatePoints
from .poly import DualPoint, chordal_distance
from .varieties import parametrize_fiber

DISTINCT_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class PointedDecomposition:
    """A decomposition with one distinguished entry."""

    base: Decomposition
    marked: int

    def __post_init__(self):
        if not 0 <= self.marked < len(self.base.entries):
            raise ValueError("marked index out of range")

    def marked_point(self) -> DualPoint:
        return self.base.entries[self.marked][0]


@dataclass(frozen=True, eq=False)
class Bipartition:
    """A decomposition with an unordered split into two 3-point blocks."""

    base: Decomposition
    split: frozenset  # frozenset of two frozensets of indices

    def __post_init__(self):
        blocks = sorted(self.split, key=sorted)
        flat = sorted(i for b in blocks for i in b)
        if len(self.split) != 2 or flat != list(range(6)):
            raise ValueError("split must be two disjoint 3-element blocks covering 0..5")


def _require_distinct(d: Decomposition, tol: float = DISTINCT_TOL) -> None:
    pts = d.points()
    for i, j in combinations(range(len(pts)), 2):
        if chordal_distance(pts[i], pts[j]) <= tol:
            raise DuplicatePoints(f"points {i} and {j} coincide at tolerance {tol}")


def orderings_count(d: Decomposition) -> int:
    """Number of orderings of the six entries (the top cover degree)."""
    _require_distinct(d)
    return 720


def orderings_iter(d: Decomposition):
    """Iterator over all orderings, as tuples of entry indices."""
    _require_distinct(d)
    return permutations(range(6))


def to_pointed(d: Decomposition) -> list[PointedDecomposition]:
    _require_distinct(d)
    return [PointedDecomposition(d, i) for i in range(6)]


def to_bipartitions(d: Decomposition) -> list[Bipartition]:
    _require_distinct(d)
    seen = set()
    out = []
    for block in combinations(range(6), 3):
        other = tuple(i for i in range(6) if i not in block)
        key = frozenset({frozenset(block), frozenset(other)})
        if key not in seen:
            seen.add(key)
            out.append(Bipartition(d, key))
    return out


def f2_fiber_count(d: Decomposition, i: int, j: int) -> int:
    """Orderings that fix entries i, j in the first two slots (counted by enumeration)."""
    if i == j or not (0 <= i < 6 and 0 <= j < 6):
        raise IndexError("indices must be distinct and in range")
    return sum(1 for perm in orderings_iter(d) if perm[0] == i and perm[1] == j)


def f3_fiber_count(d: Decomposition, i: int, j: int, k: int) -> int:
    """Orderings that fix entries i, j, k in the first three slots."""
    if len({i, j, k}) != 3 or not all(0 <= x < 6 for x in (i, j, k)):
        raise IndexError("indices must be distinct and in range")
    return sum(
        1 for perm in orderings_iter(d) if perm[0] == i and perm[1] == j and perm[2] == k
    )


def match_point_sets(a, b, tol: float = DISTINCT_TOL) -> bool:
    """True iff the two point lists agree as sets up to chordal tolerance."""
    if len(a) != len(b):
        return False
    remaining = list(b)
    for p in a:
        dists = [chordal_distance(p, q) for q in remaining]
        k = min(range(len(remaining)), key=dists.__getitem__)
        if dists[k] > tol:
            return False
        remaining.pop(k)
    return True


def alpha_fiber_check(d: Decomposition, marked: int, tol: float = DISTINCT_TOL) -> bool:
    """Do all five pairs through the marked point rebuild this pointed decomposition?

    This is the computational content of the degree-5 cover from apolar
    pairs to pointed decompositions.  Reconstruction errors propagate.
    """
    pts = d.points()
    Lm = pts[marked]
    for j in range(6):
        if j == marked:
            continue
        d2 = reconstruct(Lm, pts[j])
        if chordal_distance(d2.points()[0], Lm) > tol:
            return False
        if not match_point_sets(d2.points(), pts, tol):
            return False
    return True


def vsp6_chart(params, tol: float = 1e-9) -> PointedDecomposition:
    """Three complex parameters -> a pointed decomposition (a dominant chart).

    The first two parameters fix the marked point in an affine chart of the
    dual plane, the third picks a partner on its fiber conic; the pair is
    then completed by reconstruction.
    """
    p1, p2, p3 = (complex(x) for x in params)
    L = DualPoint(1, p1, p2)
    M = parametrize_fiber(L, p3, tol=tol)
    d = reconstruct(L, M, tol=tol)
    return PointedDecomposition(d, 0)


def canonical_key(d: Decomposition, digits: int = 6):
    """Hashable key invariant under reordering and rescaling of the entries.

    Points are normalized, coordinates rounded to ``digits`` decimals, and
    the six rounded triples sorted.
    """

    def clean(x: float) -> float:
        r = round(x, digits)
        return 0.0 if r == 0 else r

    keyed = []
    for p in d.points():
        n = p.normalized().complex_coords()
        keyed.append(tuple((clean(z.real), clean(z.imag)) for z in n))
    return tuple(sorted(keyed))


def degree_table() -> dict:
    """The cover degrees around a six-point decomposition.

    The ``diagram_only`` entries are expectations that are exposed but not
    verified by any enumeration here.
    """
    return {
        "phi6_orderings": 720,
        "chi6_pointed": 6,
        "chi6_bipartitions": 10,
        "f2_fiber": 24,
        "f3_fiber": 6,
        "alpha_degree": 5,
        "diagram_only": {
            "p3_to_p2": 4,
            "p3_to_vsp": 120,
            "p3_to_vsp6_upper": 12,
        },
    }


def enumeration_checks(d: Decomposition) -> dict:
    """Run every counting identity on a concrete decomposition."""
    orderings = orderings_count(d)
    pointed = len(to_pointed(d))
    bipartitions = len(to_bipartitions(d))
    f2 = f2_fiber_count(d, 0, 1)
    f3 = f3_fiber_count(d, 0, 1, 2)
    pair_split = sum(f2_fiber_count(d, i, j) for i in range(6) for j in range(6) if i != j)
    per_block = []
    for bp in to_bipartitions(d):
        blocks = [frozenset(b) for b in bp.split]
        per_block.append(
            sum(1 for perm in orderings_iter(d) if frozenset(perm[:3]) in blocks)
        )
    return {
        "orderings_720": orderings == 720,
        "pointed_6": pointed == 6,
        "bipartitions_10": bipartitions == 10,
        "f2_24": f2 == 24,
        "f3_6": f3 == 6,
        "orderings_eq_pairs_times_f2": pair_split == 720,
        "orderings_eq_bipartitions_times_refinements": per_block == [72] * 10,
        "product_6_5_24": 6 * 5 * 24 == 720,
        "product_10_72": 10 * 72 == 720,
    }
