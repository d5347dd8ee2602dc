"""JSON encoding conventions shared by the CLI and the file formats.

Complex scalars always serialize as [re, im] pairs, exact rationals as
"p/q" strings, plain integers as JSON integers.  Points are normalized
before they are written.
"""

from __future__ import annotations

from fractions import Fraction

from .decompose import Decomposition
from .poly import DualPoint, Form, form_from_text, form_to_text, is_exact_scalar

SCHEMA_ID = "polarhex/1"


def scalar_to_json(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars here")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    z = complex(x)
    return [z.real, z.imag]


def scalar_from_json(v):
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, list) and len(v) == 2:
        return complex(v[0], v[1])
    raise ValueError(f"cannot decode scalar {v!r}")


def point_to_json(p: DualPoint) -> list:
    z = p.normalized().complex_coords()
    return [[c.real, c.imag] for c in z]


def point_from_json(v) -> DualPoint:
    return DualPoint(*(complex(c[0], c[1]) for c in v))


def matrix_to_json(rows) -> list:
    return [[scalar_to_json(x) for x in row] for row in rows]


def decomposition_to_json(d: Decomposition) -> dict:
    entries = []
    for p, lam in d.entries:
        # Points are written normalized; the coefficient absorbs the gauge
        # factor pivot^4 so that sum(lambda * point^4) is unchanged.
        coords = p.complex_coords()
        pivot = max(coords, key=abs)
        scaled = complex(lam) * pivot**4
        entries.append(
            {"point": point_to_json(p), "lambda": [scaled.real, scaled.imag]}
        )
    return {
        "schema": SCHEMA_ID,
        "target": form_to_text(d.target),
        "entries": entries,
        "residual": float(d.residual),
    }


def decomposition_from_json(doc: dict) -> Decomposition:
    target = form_from_text(doc["target"])
    entries = tuple(
        (point_from_json(e["point"]), complex(e["lambda"][0], e["lambda"][1]))
        for e in doc["entries"]
    )
    return Decomposition(target, entries, residual=float(doc.get("residual", 0.0)))
