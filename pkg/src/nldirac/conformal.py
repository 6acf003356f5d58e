"""Scaling-dimension bookkeeping for dimensionless self-couplings.

For an interaction term chi^(lambda+2) of total conformal degree -n the
admissible nonlinearity power lambda follows from the free field's
degree: scalars carry degree 1 - n/2, spinors (1 - n)/2. Everything here
is exact rational arithmetic so the defining identities hold with no
round-off; the divergent scalar case in n = 2 is a distinct sentinel, not
a float infinity.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidDimensionError


class FieldKind(enum.Enum):
    SCALAR = "scalar"
    SPINOR = "spinor"


class _Divergent:
    """Marker for an unbounded admissible exponent (scalar field, n = 2)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Divergent"


DIVERGENT = _Divergent()

Exponent = Union[Fraction, _Divergent]


def _check_dimension(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidDimensionError(f"dimension must be an integer, got {n!r}")
    if n < 2:
        raise InvalidDimensionError(f"dimension must be >= 2, got {n}")
    return n


def conformal_degree(kind: FieldKind, n: int) -> Fraction:
    """Scaling dimension of the free field in n space-time dimensions."""
    n = _check_dimension(n)
    if kind is FieldKind.SCALAR:
        return 1 - Fraction(n, 2)
    return Fraction(1 - n, 2)


def nonlinearity_exponent(kind: FieldKind, n: int) -> Exponent:
    """Power lambda making the coupling of chi^(lambda+2) dimensionless.

    Scalars: lambda = 2 / (n/2 - 1), divergent at n = 2.
    Spinors: lambda = 2 / (n - 1) = 2/D.
    """
    n = _check_dimension(n)
    if kind is FieldKind.SCALAR:
        if n == 2:
            return DIVERGENT
        return Fraction(4, n - 2)
    return Fraction(2, n - 1)


@dataclass(frozen=True)
class QuarticTerm:
    """One admissible quartic self-interaction in 1+1 dimensions."""

    label: str
    factors: tuple
    coupling: str


def quartic_terms_1p1():
    """The four products of bilinears allowed in 1+1, mapped to the
    coupling each one drives (tensor and pseudo-vector structures are
    redundant in 1+1 and do not appear)."""
    return [
        QuarticTerm("S^2", ("S", "S"), "alpha_s"),
        QuarticTerm("W^2", ("W", "W"), "alpha_w"),
        QuarticTerm("SW", ("S", "W"), "alpha_sw"),
        QuarticTerm("V^2", ("V", "V"), "alpha_v"),
    ]


def exponent_table(max_dimension: int = 6):
    """Rows (kind, n, conformal degree, lambda) for n = 2..max_dimension."""
    rows = []
    for kind in (FieldKind.SCALAR, FieldKind.SPINOR):
        for n in range(2, max_dimension + 1):
            rows.append(
                (kind, n, conformal_degree(kind, n), nonlinearity_exponent(kind, n))
            )
    return rows
