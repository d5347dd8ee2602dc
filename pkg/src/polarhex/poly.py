"""Sparse homogeneous polynomial arithmetic over exact or complex scalars.

A form keeps its coefficients in a dict mapping exponent tuples (one entry
per variable, entries summing to the degree) to scalars.  Scalars are duck
typed: exact work uses int / Fraction, numeric work uses Python complex,
and symbolic identity checks push forms themselves through the same code
paths (a form whose "coordinates" are degree-one forms).  The zero form is
the one with an empty coefficient dict.

Dense coefficient vectors appear only at linear-algebra boundaries; the
dict representation is canonical everywhere else.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

# Nothing in this project needs degree > 6; products beyond this cap are bugs.
MULT_DEGREE_CAP = 8


def is_exact_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def exponents(n_vars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, lexicographically decreasing."""
    if n_vars == 0:
        return [()] if degree == 0 else []
    if n_vars == 1:
        return [(degree,)]
    out = []
    for e in range(degree, -1, -1):
        out.extend((e,) + rest for rest in exponents(n_vars - 1, degree - e))
    return out


def multinomial(m: int, exps) -> int:
    num = math.factorial(m)
    for e in exps:
        num //= math.factorial(e)
    return num


class Form:
    """Homogeneous polynomial in a fixed number of variables.

    Immutable by convention: never mutate ``coeffs`` after construction.
    Coefficients equal to zero are dropped, and keys are stored in sorted
    order so that iteration (hence floating accumulation) is reproducible.
    """

    __slots__ = ("n_vars", "degree", "coeffs")

    def __init__(self, n_vars: int, degree: int, coeffs=None):
        if n_vars < 0 or degree < 0:
            raise ValueError("n_vars and degree must be non-negative")
        store = {}
        for exps, c in (coeffs or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n_vars or any(e < 0 for e in exps) or sum(exps) != degree:
                raise ValueError(f"exponent {exps} invalid for degree {degree} in {n_vars} variables")
            if c != 0:
                store[exps] = c
        self.n_vars = n_vars
        self.degree = degree
        self.coeffs = dict(sorted(store.items(), reverse=True))

    @classmethod
    def zero(cls, n_vars: int, degree: int = 0) -> "Form":
        return cls(n_vars, degree)

    @classmethod
    def variable(cls, n_vars: int, index: int) -> "Form":
        exps = [0] * n_vars
        exps[index] = 1
        return cls(n_vars, 1, {tuple(exps): 1})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.n_vars == other.n_vars and self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        if self.n_vars != other.n_vars:
            raise ValueError("variable counts differ")
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        out = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            out[exps] = out.get(exps, 0) + c
        return Form(self.n_vars, self.degree, out)

    def __radd__(self, other):
        if other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return Form(self.n_vars, self.degree, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Form):
            # scalar multiple
            if other == 0:
                return Form(self.n_vars, self.degree)
            return Form(self.n_vars, self.degree, {e: c * other for e, c in self.coeffs.items()})
        if self.n_vars != other.n_vars:
            raise ValueError("variable counts differ")
        deg = self.degree + other.degree
        if deg > MULT_DEGREE_CAP:
            raise ValueError(f"product degree {deg} exceeds cap {MULT_DEGREE_CAP}")
        out: dict = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return Form(self.n_vars, deg, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Form(self.n_vars, 0, {(0,) * self.n_vars: 1})
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self):
        return f"Form({self.n_vars}, {self.degree}, {form_to_text(self)!r})"


def space_dim(n: int, d: int) -> int:
    """Projective dimension of the degree-d forms in n+1 variables."""
    return math.comb(n + d, d) - 1


def multinomial_basis(n: int, m: int) -> list[Form]:
    """Basis of degree-m forms in n+1 variables, each monomial scaled by its
    multinomial coefficient, ordered by lexicographically decreasing exponents."""
    return [Form(n + 1, m, {e: multinomial(m, e)}) for e in exponents(n + 1, m)]


def partial(form: Form, i: int) -> Form:
    """Formal partial derivative with respect to variable i."""
    if not 0 <= i < form.n_vars:
        raise ValueError("variable index out of range")
    if form.degree == 0:
        return Form(form.n_vars, 0)
    out = {}
    for exps, c in form.coeffs.items():
        if exps[i] == 0:
            continue
        key = exps[:i] + (exps[i] - 1,) + exps[i + 1:]
        out[key] = out.get(key, 0) + exps[i] * c
    return Form(form.n_vars, form.degree - 1, out)


def evaluate(form: Form, point):
    """Substitute the point's coordinates into the form.

    Works for exact, complex, and form-valued coordinates alike.
    """
    coords = tuple(point)
    if len(coords) != form.n_vars:
        raise ValueError("point arity does not match variable count")
    total = 0
    for exps in sorted(form.coeffs, reverse=True):
        term = form.coeffs[exps]
        for x, e in zip(coords, exps):
            for _ in range(e):
                term = term * x
        total = total + term
    return total


def pow_linear(point, d: int) -> Form:
    """Expand (a*x0 + b*x1 + ...)^d as a form."""
    if d < 1:
        raise ValueError("power must be at least 1")
    coords = tuple(point)
    n = len(coords)
    out = {}
    for exps in exponents(n, d):
        term = multinomial(d, exps)
        for x, e in zip(coords, exps):
            for _ in range(e):
                term = term * x
        if term != 0:
            out[exps] = term
    return Form(n, d, out)


def _div(x, y):
    if is_exact_scalar(x) and is_exact_scalar(y):
        return Fraction(x) / Fraction(y)
    return x / y


def coefficient_vector(form: Form, basis: list[Form]) -> list:
    """Coordinates of the form in a basis of scaled monomials.

    Each basis element must be a single monomial times a scalar (as produced
    by :func:`multinomial_basis`).
    """
    index = {}
    for k, b in enumerate(basis):
        if len(b.coeffs) != 1:
            raise ValueError("basis elements must be single monomials")
        ((exps, scale),) = b.coeffs.items()
        index[exps] = (k, scale)
    vec = [0] * len(basis)
    for exps, c in form.coeffs.items():
        if exps not in index:
            raise ValueError(f"monomial {exps} is outside the basis span")
        k, scale = index[exps]
        vec[k] = _div(c, scale)
    return vec


def form_to_complex(form: Form) -> Form:
    """Copy of the form with every coefficient converted to complex."""
    return Form(form.n_vars, form.degree, {e: complex(c) for e, c in form.coeffs.items()})


# ---------------------------------------------------------------------------
# Dual points
# ---------------------------------------------------------------------------

class DualPoint:
    """Projective point (a : b : c) of the dual plane, i.e. the linear form
    a*x0 + b*x1 + c*x2.  Defined up to a global scalar; comparisons go
    through :meth:`normalized`, which divides by the largest-modulus
    coordinate."""

    __slots__ = ("coords",)

    def __init__(self, a, b, c):
        coords = []
        for x in (a, b, c):
            if is_exact_scalar(x):
                coords.append(x)
            else:
                coords.append(complex(x))
        if all(x == 0 for x in coords):
            raise ValueError("dual point must be nonzero")
        self.coords = tuple(coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return 3

    @property
    def is_exact(self) -> bool:
        return all(is_exact_scalar(x) for x in self.coords)

    def complex_coords(self) -> tuple[complex, complex, complex]:
        return tuple(complex(x) for x in self.coords)

    def normalized(self) -> "DualPoint":
        pivot_index = max(range(3), key=lambda i: abs(complex(self.coords[i])))
        pivot = self.coords[pivot_index]
        if self.is_exact:
            return DualPoint(*(Fraction(x) / Fraction(pivot) for x in self.coords))
        c = self.complex_coords()
        pivot = c[pivot_index]
        return DualPoint(*(x / pivot for x in c))

    def __eq__(self, other):
        if not isinstance(other, DualPoint):
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        if a.is_exact and b.is_exact:
            return tuple(Fraction(x) for x in a.coords) == tuple(Fraction(x) for x in b.coords)
        return a.complex_coords() == b.complex_coords()

    __hash__ = None

    def approx_eq(self, other: "DualPoint", tol: float = 1e-9) -> bool:
        return chordal_distance(self, other) <= tol

    def __repr__(self):
        return f"DualPoint{self.coords!r}"


def chordal_distance(p, q) -> float:
    """Sine of the Fubini-Study angle between two projective points (0 iff equal).

    Computed as the norm of the projection residual, which stays accurate
    for nearly identical points (no 1 - |inner|^2 cancellation).
    """
    pc = tuple(complex(x) for x in p)
    qc = tuple(complex(x) for x in q)
    pn = math.sqrt(sum(abs(x) ** 2 for x in pc))
    qn = math.sqrt(sum(abs(x) ** 2 for x in qc))
    pu = tuple(x / pn for x in pc)
    qu = tuple(x / qn for x in qc)
    inner = sum(x * y.conjugate() for x, y in zip(pu, qu))
    return math.sqrt(sum(abs(x - inner * y) ** 2 for x, y in zip(pu, qu)))


# ---------------------------------------------------------------------------
# Text serialization ("3*x0^2*x1 + x2^3", rational coefficients only)
# ---------------------------------------------------------------------------

def _coeff_str(c) -> str:
    f = Fraction(c)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def form_to_text(form: Form) -> str:
    """Render a form with integer or p/q coefficients as plain text."""
    if form.is_zero:
        return "0"
    parts = []
    for exps in sorted(form.coeffs, reverse=True):
        c = form.coeffs[exps]
        if not is_exact_scalar(c):
            raise TypeError("text serialization requires exact rational coefficients")
        mono = "*".join(
            f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(exps) if e
        )
        cs = _coeff_str(c)
        if mono and cs == "1":
            term = mono
        elif mono and cs == "-1":
            term = "-" + mono
        elif mono:
            term = f"{cs}*{mono}"
        else:
            term = cs
        parts.append(term)
    text = parts[0]
    for term in parts[1:]:
        if term.startswith("-"):
            text += " - " + term[1:]
        else:
            text += " + " + term
    return text


_TOKEN = re.compile(r"x(\d+)(?:\^(\d+))?$")


def form_from_text(text: str, n_vars: int = 3) -> Form:
    """Parse the textual serialization back into a form."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return Form(n_vars, 0)
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks) != s:
        raise ValueError(f"cannot parse form text: {text!r}")
    terms = []
    for chunk in chunks:
        sign = 1
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = -1
            chunk = chunk[1:]
        coeff = Fraction(sign)
        exps = [0] * n_vars
        for factor in chunk.split("*"):
            m = _TOKEN.match(factor)
            if m:
                i = int(m.group(1))
                if i >= n_vars:
                    raise ValueError(f"variable x{i} out of range for {n_vars} variables")
                exps[i] += int(m.group(2) or 1)
            else:
                coeff *= Fraction(factor)
        terms.append((tuple(exps), coeff))
    degree = sum(terms[0][0])
    if any(sum(e) != degree for e, _ in terms):
        raise ValueError("terms are not homogeneous of a common degree")
    out: dict = {}
    for exps, c in terms:
        out[exps] = out.get(exps, 0) + c
    return Form(n_vars, degree, out)
