"""Diagonal two-variable rational approximants (Chisholm approximants).

The order-M fit determines (M+1)^2 - 1 denominator unknowns from a
square linear system: one equation per series coefficient of total
degree <= 2M that the numerator cannot absorb (index outside the
numerator grid), plus M symmetrized equations pairing the mirrored
degree-(2M+1) coefficients. Numerator entries then follow by
convolution. The construction reduces to the diagonal Pade fit on
either axis and is invariant under the homographic substitutions
x = Au/(1-Bu), y = Av/(1-Bv).
"""

import json
from fractions import Fraction

from . import linalg, pade
from .errors import InsufficientTerms, NotNormalized, PoleHit
from .series import UNKNOWN, has_chisholm_support
from ._scalars import is_exact, scalar_from_json, scalar_to_json

FLOAT_POLE_EPS = 1e-300


class ChisholmApproximant:
    """N(X,Y)/D(X,Y) on X = x-a, Y = y-b with (order+1)^2 coefficient grids."""

    def __init__(self, order, center, num, den):
        num = [list(row) for row in num]
        den = [list(row) for row in den]
        for grid in (num, den):
            if len(grid) != order + 1 or any(len(r) != order + 1 for r in grid):
                raise ValueError("grids must be (order+1) x (order+1)")
        self.order = order
        self.center = tuple(center)
        self.num = num
        self.den = den

    def is_exact(self):
        return all(
            is_exact(v) for grid in (self.num, self.den) for row in grid for v in row
        ) and all(is_exact(c) for c in self.center)

    def scale_numerator(self, factor):
        """Undo a scale_to_unit_constant normalization on the input series."""
        num = [[factor * v for v in row] for row in self.num]
        return ChisholmApproximant(self.order, self.center, num, self.den)

    def __repr__(self):
        return "ChisholmApproximant(order=%d, center=%r)" % (
            self.order,
            self.center,
        )


class FitReport:
    """Bookkeeping for one fit: equation counts and (float) solve residual."""

    def __init__(self, order, residual_max=None):
        self.equations_total = 2 * order * order + 4 * order
        self.equations_symmetrized = order
        self.residual_max = residual_max

    def __repr__(self):
        return (
            "FitReport(equations_total=%d, equations_symmetrized=%d, "
            "residual_max=%r)" % (
                self.equations_total,
                self.equations_symmetrized,
                self.residual_max,
            )
        )


def assemble_denominator_system(s, order):
    """The square linear system for the denominator grid.

    Unknowns: b[r,s] for (r,s) != (0,0), row-major. Rows: coefficient
    equations at indices (p,q), p+q <= 2M with p > M or q > M, then the
    M symmetrized rows for j = 1..M. Returns (DenseSystem, unknowns).
    """
    M = order
    unknowns = [(r, sq) for r in range(M + 1) for sq in range(M + 1)][1:]
    col = {rs: i for i, rs in enumerate(unknowns)}
    c = s.coefficient

    rows = []
    rhs = []

    def coeff_row(pairs):
        # pairs: list of (p, q) whose residuals are summed
        row = [0] * len(col)
        b = 0
        for (p, q) in pairs:
            for (r, sq) in unknowns:
                if r <= p and sq <= q:
                    row[col[(r, sq)]] += c(p - r, q - sq)
            b -= c(p, q)
        return row, b

    for t in range(M + 1, 2 * M + 1):
        for p in range(t + 1):
            q = t - p
            if p <= M and q <= M:
                continue
            row, b = coeff_row([(p, q)])
            rows.append(row)
            rhs.append(b)
    for j in range(1, M + 1):
        row, b = coeff_row([(2 * M + 1 - j, j), (j, 2 * M + 1 - j)])
        rows.append(row)
        rhs.append(b)

    return linalg.DenseSystem(rows, rhs), unknowns


def fit_diagonal(s, order):
    """Fit the order-M diagonal approximant of a normalized double series.

    Returns (ChisholmApproximant, FitReport). The series must carry every
    coefficient of total degree <= 2M+1 except the two pure powers, and
    its constant term must be exactly 1.
    """
    ok, missing = has_chisholm_support(s, order)
    if not ok:
        raise InsufficientTerms(missing)
    c00 = s.coefficient(0, 0)
    if c00 != 1:
        raise NotNormalized(
            "constant coefficient must be 1 (got %r); use "
            "scale_to_unit_constant or add_polynomial first" % (c00,)
        )

    system, unknowns = assemble_denominator_system(s, order)
    solution = linalg.solve(system)

    exact = system.is_exact()
    one = Fraction(1) if exact else 1.0
    M = order
    den = [[one * 0 for _ in range(M + 1)] for _ in range(M + 1)]
    den[0][0] = one
    for (r, sq), v in zip(unknowns, solution):
        den[r][sq] = v

    c = s.coefficient
    num = [[one * 0 for _ in range(M + 1)] for _ in range(M + 1)]
    for p in range(M + 1):
        for q in range(M + 1):
            acc = 0
            for r in range(p + 1):
                for sq in range(q + 1):
                    brs = den[r][sq]
                    if brs:
                        acc += brs * c(p - r, q - sq)
            num[p][q] = acc

    residual = None
    if not exact:
        residual = float(linalg.residual_max(system, solution))
    ca = ChisholmApproximant(order, s.center, num, den)
    return ca, FitReport(order, residual)


def evaluate(ca, x, y):
    """N(x-a, y-b) / D(x-a, y-b) by nested Horner sums."""
    X = x - ca.center[0]
    Y = y - ca.center[1]
    exact = ca.is_exact() and is_exact(X) and is_exact(Y)
    if exact:
        num = _grid_eval(ca.num, X, Y)
        den = _grid_eval(ca.den, X, Y)
        if den == 0:
            raise PoleHit("denominator vanishes at (%r, %r)" % (x, y))
        return num / den
    if isinstance(X, complex) or isinstance(Y, complex):
        conv = complex
    else:
        conv = float
    num_g = [[conv(v) for v in row] for row in ca.num]
    den_g = [[conv(v) for v in row] for row in ca.den]
    num = _grid_eval(num_g, conv(X), conv(Y))
    den = _grid_eval(den_g, conv(X), conv(Y))
    if abs(den) < FLOAT_POLE_EPS:
        raise PoleHit("denominator vanishes at (%r, %r)" % (x, y))
    return num / den


def evaluate_mapped(ca, X, Y):
    """Evaluate a fit done in transformed coordinates.

    The caller maps its physical variables to the fit's (X, Y) plane
    (e.g. X = -x/y, Y = 1/y for the large-y continuation, or the
    half-sum/half-difference coordinates of the rotation trick); the
    arithmetic is identical to `evaluate` at (X, Y).
    """
    return evaluate(ca, X, Y)


def reciprocal(ca):
    """Swap numerator and denominator grids."""
    if ca.num[0][0] != 1:
        raise ValueError("numerator constant must be 1 to stay normalized")
    return ChisholmApproximant(ca.order, ca.center, ca.den, ca.num)


def reduce_to_pade(ca):
    """The y = center_y restriction: a diagonal Pade approximant in x."""
    return pade.PadeApproximant(
        ca.order,
        ca.center[0],
        [row[0] for row in ca.num],
        [row[0] for row in ca.den],
    )


class ResidualReport:
    """Order-by-order mismatch of N - D*f up to total degree 2M+1."""

    def __init__(self, entries, symmetrized):
        self.entries = entries          # {(p, q): residual} for p+q <= 2M
        self.symmetrized = symmetrized  # [paired residual for j = 1..M]

    @property
    def max_abs(self):
        vals = [abs(v) for v in self.entries.values()]
        vals += [abs(v) for v in self.symmetrized]
        return max(vals) if vals else 0

    def is_zero(self):
        return all(v == 0 for v in self.entries.values()) and all(
            v == 0 for v in self.symmetrized
        )


def taylor_residuals(ca, s):
    """Re-expand the defining equations of the fit against `s`."""
    M = ca.order

    def e(p, q):
        acc = 0
        for r in range(min(p, M) + 1):
            for sq in range(min(q, M) + 1):
                brs = ca.den[r][sq]
                if brs:
                    cv = s.coefficient(p - r, q - sq)
                    if cv is UNKNOWN:
                        raise InsufficientTerms([(p - r, q - sq)])
                    acc += brs * cv
        if p <= M and q <= M:
            acc -= ca.num[p][q]
        return acc

    entries = {}
    for t in range(2 * M + 1):
        for p in range(t + 1):
            entries[(p, t - p)] = e(p, t - p)
    symmetrized = [
        e(2 * M + 1 - j, j) + e(j, 2 * M + 1 - j) for j in range(1, M + 1)
    ]
    return ResidualReport(entries, symmetrized)


def _grid_eval(grid, X, Y):
    acc = 0
    for row in reversed(grid):
        inner = row[-1]
        for c in reversed(row[:-1]):
            inner = inner * Y + c
        acc = acc * X + inner
    return acc


# ---------------------------------------------------------------------------
# file format


def to_json(ca):
    enc = lambda v: scalar_to_json(Fraction(v) if isinstance(v, int) else v)
    return {
        "kind": "chisholm",
        "M": ca.order,
        "center": [enc(c) for c in ca.center],
        "num": [[enc(v) for v in row] for row in ca.num],
        "den": [[enc(v) for v in row] for row in ca.den],
    }


def from_json(doc):
    if doc.get("kind") != "chisholm":
        raise ValueError("not a chisholm approximant document")
    return ChisholmApproximant(
        int(doc["M"]),
        tuple(scalar_from_json(c) for c in doc["center"]),
        [[scalar_from_json(v) for v in row] for row in doc["num"]],
        [[scalar_from_json(v) for v in row] for row in doc["den"]],
    )


def write(ca, path):
    with open(path, "w") as fh:
        json.dump(to_json(ca), fh)
        fh.write("\n")


def read(path):
    with open(path) as fh:
        return from_json(json.load(fh))
