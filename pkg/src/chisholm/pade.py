"""Diagonal Pade approximants [M/M] of univariate series."""

import json
from fractions import Fraction

from . import linalg
from .errors import InsufficientTerms, NotNormalized, PoleHit, SingularSystem
from .series import UniSeries, UNKNOWN
from ._scalars import all_exact, is_exact, scalar_from_json, scalar_to_json

FLOAT_POLE_EPS = 1e-300


class PadeApproximant:
    """P(x-a)/Q(x-a) with deg P = deg Q = order and Q(0) = 1."""

    def __init__(self, order, center, num, den):
        num = list(num)
        den = list(den)
        if len(num) != order + 1 or len(den) != order + 1:
            raise ValueError("coefficient vectors must have length order+1")
        if den[0] != 1:
            raise ValueError("denominator must be normalized to q0 = 1")
        self.order = order
        self.center = center
        self.num = num
        self.den = den

    def is_exact(self):
        return (
            all_exact(self.num) and all_exact(self.den) and is_exact(self.center)
        )

    def __repr__(self):
        return "PadeApproximant(order=%d, center=%r)" % (self.order, self.center)


def fit_diagonal(s, order):
    """Fit the [order/order] approximant matching s through 2*order.

    Solves the homogeneous block for the denominator first, then fills
    the numerator by convolution; the input constant term is divided out
    and restored on the numerator.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    need = 2 * order + 1
    missing = [k for k in range(need) if s.coefficient(k) is UNKNOWN]
    if missing:
        raise InsufficientTerms(missing)
    a0 = s.coefficient(0)
    if a0 == 0:
        raise NotNormalized(
            "constant term is zero; add a constant to the series first"
        )
    coeffs = [s.coefficient(k) / a0 for k in range(need)]

    if order == 0:
        return PadeApproximant(0, s.center, [a0 * coeffs[0]], [_one_like(a0)])

    matrix = [
        [coeffs[k - j] for j in range(1, order + 1)]
        for k in range(order + 1, 2 * order + 1)
    ]
    rhs = [-coeffs[k] for k in range(order + 1, 2 * order + 1)]
    q_tail = linalg.solve(linalg.DenseSystem(matrix, rhs))
    den = [_one_like(q_tail[0])] + list(q_tail)
    num = [
        a0 * sum(den[j] * coeffs[i - j] for j in range(min(i, order) + 1))
        for i in range(order + 1)
    ]
    return PadeApproximant(order, s.center, num, den)


def evaluate(pa, z):
    """P(z-a)/Q(z-a); exact when everything in sight is exact."""
    w = z - pa.center
    exact = pa.is_exact() and is_exact(w)
    if exact:
        num = _horner(pa.num, w)
        den = _horner(pa.den, w)
        if den == 0:
            raise PoleHit("denominator vanishes at %r" % (z,))
        return num / den
    wf = complex(w) if isinstance(w, complex) else float(w)
    num = _horner([_to_float(c, wf) for c in pa.num], wf)
    den = _horner([_to_float(c, wf) for c in pa.den], wf)
    if abs(den) < FLOAT_POLE_EPS:
        raise PoleHit("denominator vanishes at %r" % (z,))
    return num / den


def taylor_coefficients(pa, count):
    """First `count` Taylor coefficients of P/Q about the center."""
    inv = [None] * count
    inv[0] = 1 / Fraction(1) if pa.is_exact() else 1.0
    den = list(pa.den) + [0] * max(0, count - len(pa.den))
    for k in range(1, count):
        acc = 0
        for j in range(1, k + 1):
            acc += den[j] * inv[k - j]
        inv[k] = -acc
    num = list(pa.num) + [0] * max(0, count - len(pa.num))
    out = []
    for k in range(count):
        out.append(sum(num[j] * inv[k - j] for j in range(k + 1)))
    return out


def _horner(coeffs, w):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * w + c
    return acc


def _to_float(v, like):
    return complex(v) if isinstance(like, complex) else float(v)


def _one_like(v):
    return Fraction(1) if is_exact(v) else 1.0


# ---------------------------------------------------------------------------
# file format


def to_json(pa):
    return {
        "kind": "pade",
        "M": pa.order,
        "center": scalar_to_json(_centered(pa.center)),
        "p": [scalar_to_json(_centered(v)) for v in pa.num],
        "q": [scalar_to_json(_centered(v)) for v in pa.den],
    }


def from_json(doc):
    if doc.get("kind") != "pade":
        raise ValueError("not a pade approximant document")
    return PadeApproximant(
        int(doc["M"]),
        scalar_from_json(doc["center"]),
        [scalar_from_json(v) for v in doc["p"]],
        [scalar_from_json(v) for v in doc["q"]],
    )


def write(pa, path):
    with open(path, "w") as fh:
        json.dump(to_json(pa), fh)
        fh.write("\n")


def read(path):
    with open(path) as fh:
        return from_json(json.load(fh))


def _centered(v):
    return Fraction(v) if isinstance(v, int) else v
