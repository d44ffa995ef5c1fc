"""Exact resultants, P_G curves and growth exponents at infinity of polynomial maps.

Every function takes the text of a system file::

    vars: z1 z2
    F1 = z1
    F2 = z1*z2 - 1
"""

import json
from fractions import Fraction

from ._core import (
    ArityError,
    CertificationError,
    ConvergenceError,
    Error,
    GridCapError,
    InconsistencyError,
    MatrixSizeError,
    ParseError,
    roots,
)
from . import _core

__all__ = [
    "analyze",
    "resultant",
    "pg_slice",
    "verify",
    "roots",
    "min_on_sphere",
    "Error",
    "ParseError",
    "ArityError",
    "CertificationError",
    "ConvergenceError",
    "GridCapError",
    "InconsistencyError",
    "MatrixSizeError",
]


def analyze(text, seed=0):
    """Invariants d(F), mu, delta0 and the exponent bounds, as a dict."""
    return json.loads(_core.analyze_json(text, seed))


def resultant(text):
    """Exact resultant of n+1 forms in n+1 variables; returns (Fraction, method)."""
    value, method = _core.resultant(text)
    return Fraction(value), method


def pg_slice(text, w, seed=0):
    """The exact polynomial T -> P_G(w, T) for a certified G."""
    return json.loads(_core.pg_slice_json(text, [str(Fraction(x)) for x in w], seed))


def verify(text, seed=0, radii=(1e1, 1e2, 1e3, 1e4), samples=2000):
    """Growth-slope and root-escape checks."""
    return json.loads(_core.verify_json(text, seed, list(radii), samples))


def min_on_sphere(text, radius, seed=0, budget=2000):
    """Upper estimate of min |F| on the max-norm sphere; returns (value, witness)."""
    return _core.min_on_sphere(text, radius, seed, budget)
