"""Sp4(F2), half-integer characteristics, and quadratic forms on F2^4.

Everything here is finite and enumerated exhaustively: the group has 720
elements (it is abstractly the symmetric group on six letters), there are
16 characteristics splitting 10 even / 6 odd, and the same split shows up
as the Arf invariant of the 16 quadratic forms refining the symplectic
pairing.  Vectors are 4-tuples over {0,1}; the symplectic Gram matrix is
[[0,I],[I,0]] (signs are invisible mod 2).
"""

from __future__ import annotations

from functools import cache
from itertools import product
from typing import NamedTuple

VECTORS = tuple(product((0, 1), repeat=4))

_J = ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0))


def symplectic_product(x, y) -> int:
    return (x[0] * y[2] + x[1] * y[3] + x[2] * y[0] + x[3] * y[1]) % 2


def _mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(4)) % 2 for j in range(4))
        for i in range(4)
    )


def _mat_vec(a, v):
    return tuple(sum(a[i][k] * v[k] for k in range(4)) % 2 for i in range(4))


def _transpose(a):
    return tuple(tuple(a[j][i] for j in range(4)) for i in range(4))


class SympMatrixF2:
    """A 4x4 matrix over F2 preserving the symplectic pairing (checked on construction)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) % 2 for x in r) for r in rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("expected a 4x4 matrix")
        if _mat_mul(_mat_mul(_transpose(rows), _J), rows) != _J:
            raise ValueError("matrix does not preserve the symplectic pairing")
        self.rows = rows

    def __mul__(self, other: "SympMatrixF2") -> "SympMatrixF2":
        out = SympMatrixF2.__new__(SympMatrixF2)
        out.rows = _mat_mul(self.rows, other.rows)
        return out

    def __eq__(self, other):
        return isinstance(other, SympMatrixF2) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __lt__(self, other):
        return self.rows < other.rows

    def apply(self, v):
        return _mat_vec(self.rows, v)

    def inverse(self) -> "SympMatrixF2":
        # M^T J M = J gives M^-1 = J M^T J over F2.
        out = SympMatrixF2.__new__(SympMatrixF2)
        out.rows = _mat_mul(_mat_mul(_J, _transpose(self.rows)), _J)
        return out

    def blocks(self):
        r = self.rows
        a = ((r[0][0], r[0][1]), (r[1][0], r[1][1]))
        b = ((r[0][2], r[0][3]), (r[1][2], r[1][3]))
        c = ((r[2][0], r[2][1]), (r[3][0], r[3][1]))
        d = ((r[2][2], r[2][3]), (r[3][2], r[3][3]))
        return a, b, c, d

    def __repr__(self):
        return f"SympMatrixF2({self.rows!r})"


def identity() -> SympMatrixF2:
    return SympMatrixF2(tuple(tuple(int(i == j) for j in range(4)) for i in range(4)))


def transvections() -> list[SympMatrixF2]:
    """The 15 symplectic transvections x -> x + <x, v> v, one per nonzero vector."""
    out = []
    for v in VECTORS:
        if v == (0, 0, 0, 0):
            continue
        jv = _mat_vec(_J, v)
        rows = tuple(
            tuple((int(i == j) + v[i] * jv[j]) % 2 for j in range(4)) for i in range(4)
        )
        out.append(SympMatrixF2(rows))
    return out


@cache
def sp4_group() -> tuple[SympMatrixF2, ...]:
    """The full group, generated from the transvections by breadth-first closure."""
    gens = transvections()
    elements = set(gens)
    elements.add(identity())
    boundary = list(elements)
    while boundary:
        new = []
        for g in gens:
            for m in boundary:
                prod_ = g * m
                if prod_ not in elements:
                    elements.add(prod_)
                    new.append(prod_)
        boundary = new
    if len(elements) != 720:
        raise AssertionError(f"group closure has {len(elements)} elements, expected 720")
    return tuple(sorted(elements))


class Characteristic(NamedTuple):
    """Half-integer characteristic (a/2, b/2), stored as bit pairs."""

    a: tuple
    b: tuple

    @property
    def vec(self):
        return (self.a[0], self.a[1], self.b[0], self.b[1])

    @classmethod
    def from_vec(cls, v):
        return cls((v[0], v[1]), (v[2], v[3]))


def parity(m: Characteristic) -> int:
    """+1 for even, -1 for odd: the sign (-1)^(a.b)."""
    return -1 if (m.a[0] * m.b[0] + m.a[1] * m.b[1]) % 2 else 1


def enumerate_characteristics() -> list[Characteristic]:
    return [Characteristic.from_vec(v) for v in VECTORS]


def parity_counts() -> tuple[int, int]:
    chars = enumerate_characteristics()
    even = sum(1 for m in chars if parity(m) == 1)
    return even, len(chars) - even


def _diag2(m):
    return (m[0][0] % 2, m[1][1] % 2)


def _mul2(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(2)) % 2 for j in range(2))
        for i in range(2)
    )


def _t2(x):
    return ((x[0][0], x[1][0]), (x[0][1], x[1][1]))


def act(m: SympMatrixF2, char: Characteristic) -> Characteristic:
    """Affine action on characteristics: linear part [[D, C], [B, A]] plus the
    shift (diag(C D^T), diag(A B^T)), everything mod 2."""
    A, B, C, D = m.blocks()
    a, b = char.a, char.b
    lin_a = (
        (D[0][0] * a[0] + D[0][1] * a[1] + C[0][0] * b[0] + C[0][1] * b[1]) % 2,
        (D[1][0] * a[0] + D[1][1] * a[1] + C[1][0] * b[0] + C[1][1] * b[1]) % 2,
    )
    lin_b = (
        (B[0][0] * a[0] + B[0][1] * a[1] + A[0][0] * b[0] + A[0][1] * b[1]) % 2,
        (B[1][0] * a[0] + B[1][1] * a[1] + A[1][0] * b[0] + A[1][1] * b[1]) % 2,
    )
    sa = _diag2(_mul2(C, _t2(D)))
    sb = _diag2(_mul2(A, _t2(B)))
    return Characteristic(
        ((lin_a[0] + sa[0]) % 2, (lin_a[1] + sa[1]) % 2),
        ((lin_b[0] + sb[0]) % 2, (lin_b[1] + sb[1]) % 2),
    )


def orbits() -> list[tuple[Characteristic, ...]]:
    """Orbits of the characteristic action, largest first."""
    gens = transvections()
    seen = set()
    out = []
    for m0 in enumerate_characteristics():
        if m0 in seen:
            continue
        orbit = {m0}
        boundary = [m0]
        while boundary:
            new = []
            for g in gens:
                for m in boundary:
                    image = act(g, m)
                    if image not in orbit:
                        orbit.add(image)
                        new.append(image)
            boundary = new
        seen |= orbit
        out.append(tuple(sorted(orbit)))
    return sorted(out, key=len, reverse=True)


def stabilizer(char: Characteristic) -> list[SympMatrixF2]:
    return [m for m in sp4_group() if act(m, char) == char]


def stabilizer_order(char: Characteristic) -> int:
    return len(stabilizer(char))


def odd_characteristics() -> list[Characteristic]:
    return [m for m in enumerate_characteristics() if parity(m) == -1]


def perm_representation() -> dict:
    """Each group element as the permutation it induces on the 6 odd characteristics."""
    odd = odd_characteristics()
    index = {m: i for i, m in enumerate(odd)}
    return {g: tuple(index[act(g, m)] for m in odd) for g in sp4_group()}


# ---------------------------------------------------------------------------
# Quadratic forms refining the symplectic pairing
# ---------------------------------------------------------------------------

_VECTOR_INDEX = {v: i for i, v in enumerate(VECTORS)}


class QuadFormF2(NamedTuple):
    """Values of a quadratic form on F2^4, indexed by VECTORS order."""

    values: tuple

    def __call__(self, v) -> int:
        return self.values[_VECTOR_INDEX[v]]


def _q0(v) -> int:
    return (v[0] * v[2] + v[1] * v[3]) % 2


def form_from_shift(s) -> QuadFormF2:
    return QuadFormF2(tuple((_q0(v) + symplectic_product(s, v)) % 2 for v in VECTORS))


def quadratic_forms() -> list[QuadFormF2]:
    """All 16 quadratic forms with the standard symplectic polar form."""
    return [form_from_shift(s) for s in VECTORS]


def arf(q: QuadFormF2) -> int:
    """Arf invariant: sum of q(e_i) q(f_i) over a symplectic basis."""
    e1, f1 = (1, 0, 0, 0), (0, 0, 1, 0)
    e2, f2 = (0, 1, 0, 0), (0, 0, 0, 1)
    return (q(e1) * q(f1) + q(e2) * q(f2)) % 2


def char_form(m: Characteristic) -> QuadFormF2:
    """The quadratic form matched to a characteristic.

    The shift is (b, a): this is the one choice for which the matching
    intertwines the characteristic action with q -> q o M^-1, and it sends
    parity to the Arf invariant.
    """
    return form_from_shift((m.b[0], m.b[1], m.a[0], m.a[1]))


def compose_form(q: QuadFormF2, m: SympMatrixF2) -> QuadFormF2:
    """The form q o M^-1."""
    minv = m.inverse()
    return QuadFormF2(tuple(q(minv.apply(v)) for v in VECTORS))


def forms_equivariant() -> bool:
    """Exhaustive check that char_form(act(M, m)) == char_form(m) o M^-1."""
    chars = enumerate_characteristics()
    forms = {m: char_form(m) for m in chars}
    for g in sp4_group():
        minv = g.inverse()
        perm = tuple(_VECTOR_INDEX[minv.apply(v)] for v in VECTORS)
        for m in chars:
            composed = tuple(forms[m].values[i] for i in perm)
            if forms[act(g, m)].values != composed:
                return False
    return True


def cover_report() -> dict:
    """Index data of the characteristic covers through the mod-2 group."""
    group_order = len(sp4_group())
    even0 = Characteristic((0, 0), (0, 0))
    odd0 = odd_characteristics()[0]
    stab_even = stabilizer_order(even0)
    stab_odd = stabilizer_order(odd0)
    return {
        "group_order": group_order,
        "stab_even": stab_even,
        "stab_odd": stab_odd,
        "even_cover_degree": group_order // stab_even,
        "odd_cover_degree": group_order // stab_odd,
        "level22_cover_degree": group_order,
    }
