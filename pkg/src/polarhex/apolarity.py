"""Catalecticant machinery for ternary quartics and the Klein pairing.

Conventions, fixed once and used everywhere:

* the middle catalecticant of a ternary quartic is the 6x6 matrix whose
  rows are indexed by the second-derivative pairs (00),(01),(02),(11),
  (12),(22) and whose columns are the coordinates in the multinomial basis
  [x0^2, 2*x0*x1, 2*x0*x2, x1^2, 2*x1*x2, x2^2];
* a dual point (a : b : c) enters through its power vector
  (a^2, ab, ac, b^2, bc, c^2), the coordinate vector of its square.

Three realizations of the induced pairing are provided: the matrix pairing
``omega_matrix``, the differential contraction ``contraction_pair``, and for
the Klein quartic the explicit two-point polynomial ``klein_pair``.  On the
Klein quartic they satisfy  omega = 3 * klein_pair  and
contraction = 12 * klein_pair;  the test suite pins both constants, which
guards against any silent change of basis or scaling.
"""

from __future__ import annotations

import numpy as np

from .poly import Form, coefficient_vector, multinomial_basis, partial

SECOND_PAIRS = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))
PAIR_WEIGHTS = (1, 2, 2, 1, 2, 1)

_BASIS2 = None


def _basis2() -> list[Form]:
    global _BASIS2
    if _BASIS2 is None:
        _BASIS2 = multinomial_basis(2, 2)
    return _BASIS2


def klein_quartic() -> Form:
    """The Klein quartic x0^3*x1 + x1^3*x2 + x0*x2^3 over the integers."""
    return Form(3, 4, {(3, 1, 0): 1, (0, 3, 1): 1, (1, 0, 3): 1})


def catalecticant4(form: Form) -> list[list]:
    """6x6 middle catalecticant of a ternary quartic, exact in the scalars of the input."""
    if form.n_vars != 3 or form.degree != 4:
        raise ValueError("catalecticant4 expects a quartic in three variables")
    basis = _basis2()
    rows = []
    for i, j in SECOND_PAIRS:
        rows.append(coefficient_vector(partial(partial(form, i), j), basis))
    return rows


def power_vec(point):
    """(a^2, ab, ac, b^2, bc, c^2) for a dual point (a, b, c)."""
    a, b, c = tuple(point)
    if a == 0 and b == 0 and c == 0:
        raise ValueError("power_vec of the zero point")
    return (a * a, a * b, a * c, b * b, b * c, c * c)


def omega_matrix(form: Form, L, M):
    """Pairing of two dual points through the catalecticant: pv(L)^T Cat pv(M)."""
    cat = catalecticant4(form)
    w = power_vec(L)
    v = power_vec(M)
    total = 0
    for i in range(6):
        for j in range(6):
            c = cat[i][j]
            if c == 0:
                continue
            total = total + w[i] * c * v[j]
    return total


def klein_pair(L, M):
    """Explicit polynomial realization of the Klein pairing of two dual points.

    Symmetric in its arguments, and klein_pair(L, L) = 2 * F(L) where F is
    the Klein quartic.
    """
    ai, bi, ci = tuple(L)
    aj, bj, cj = tuple(M)
    return (
        aj * bj * ai ** 2
        + aj ** 2 * ai * bi
        + cj ** 2 * ai * ci
        + bj * cj * bi ** 2
        + bj ** 2 * bi * ci
        + aj * cj * ci ** 2
    )


def contraction_pair(form: Form, L, M):
    """Apply the squared linear differential operators of both points to the quartic.

    L(d)^2 M(d)^2 form, a scalar; the independent differential realization
    of the same pairing as :func:`omega_matrix`.
    """
    if form.n_vars != 3 or form.degree != 4:
        raise ValueError("contraction_pair expects a quartic in three variables")
    wL = power_vec(L)
    wM = power_vec(M)
    zero_key = (0, 0, 0)
    total = 0
    for qi, (i, j) in enumerate(SECOND_PAIRS):
        mid = partial(partial(form, i), j)
        for qk, (k, l) in enumerate(SECOND_PAIRS):
            const = partial(partial(mid, k), l).coeffs.get(zero_key, 0)
            if const == 0:
                continue
            total = total + PAIR_WEIGHTS[qi] * PAIR_WEIGHTS[qk] * const * wM[qi] * wL[qk]
    return total


def nullspace(matrix, tol: float = 1e-9) -> list[np.ndarray]:
    """Orthonormal basis of the numerical kernel of a complex matrix.

    Singular values below tol * sigma_max count as zero; the zero matrix
    returns the full space, a full-rank matrix the empty list.
    """
    a = np.array([[complex(x) for x in row] for row in matrix], dtype=complex)
    _, s, vh = np.linalg.svd(a)
    if s.size == 0 or s[0] == 0.0:
        rank = 0
    else:
        rank = int(np.sum(s > tol * s[0]))
    # a @ x = 0 in the plain (non-Hermitian) sense holds for the conjugated
    # rows of vh, since a = u s vh gives a @ vh.conj().T = u s.
    return [vh[k].conj() for k in range(rank, vh.shape[0])]
