"""Truncated bivariate (and univariate) Taylor series values.

A DoubleSeries distinguishes "coefficient is known to be zero" from
"coefficient was never supplied": fits must refuse to run on the latter.
The canonical support is everything up to a total-degree bound, which is
what the file format encodes; explicit known-index sets are carried for
series built by hand with holes.

All values are immutable by convention: operations return new series and
never touch their inputs.
"""

import json
from fractions import Fraction

from .errors import NotNormalized
from ._scalars import is_exact, scalar_from_json, scalar_to_json


class _Unknown:
    __slots__ = ()

    def __repr__(self):
        return "Unknown"

    def __bool__(self):
        return False


UNKNOWN = _Unknown()


class DoubleSeries:
    """Sum of c[m,n] * X^m * Y^n, X = x - a, Y = y - b, m + n <= degree."""

    def __init__(self, center, degree, coeffs, known=None):
        a, b = center
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.center = (a, b)
        self.degree = int(degree)
        clean = {}
        for (m, n), v in coeffs.items():
            if m < 0 or n < 0:
                raise ValueError("negative exponent (%d, %d)" % (m, n))
            if m + n > self.degree:
                raise ValueError(
                    "term (%d, %d) exceeds degree bound %d" % (m, n, self.degree)
                )
            if v != 0:
                clean[(m, n)] = v
        self._coeffs = clean
        if known is not None:
            known = frozenset(known)
            missing = set(clean) - known
            if missing:
                raise ValueError("coefficients outside known support: %s" % missing)
        self._known = known

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def is_known(self, m, n):
        if m < 0 or n < 0:
            return False
        if self._known is None:
            return m + n <= self.degree
        return (m, n) in self._known

    def coefficient(self, m, n):
        """c[m,n] if known (0 when known-zero), UNKNOWN otherwise."""
        if not self.is_known(m, n):
            return UNKNOWN
        return self._coeffs.get((m, n), 0)

    def terms(self):
        """Known nonzero terms as (m, n, value), sorted."""
        return [
            (m, n, self._coeffs[(m, n)])
            for (m, n) in sorted(self._coeffs)
        ]

    def is_downward_closed(self):
        return self._known is None

    def is_exact(self):
        return all(is_exact(v) for v in self._coeffs.values()) and all(
            is_exact(c) for c in self.center
        )

    def __repr__(self):
        return "DoubleSeries(center=%r, degree=%d, %d terms)" % (
            self.center,
            self.degree,
            len(self._coeffs),
        )


class UniSeries:
    """Sum of coeffs[k] * (x - center)^k."""

    def __init__(self, center, coeffs):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("need at least the constant coefficient")
        self.center = center
        self.coeffs = coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return UNKNOWN

    def is_exact(self):
        return all(is_exact(v) for v in self.coeffs) and is_exact(self.center)

    def __repr__(self):
        return "UniSeries(center=%r, degree=%d)" % (self.center, self.degree)


class SeparableMap:
    """Pair of univariate substitutions x = sx(u), y = sy(v), both fixing 0."""

    def __init__(self, sx, sy):
        if sx.coeffs[0] != 0 or sy.coeffs[0] != 0:
            raise ValueError("substitution series must have zero constant term")
        self.sx = sx
        self.sy = sy


def homographic_map(scale, shift, degree):
    """The substitution t = scale*u / (1 - shift*u) expanded to `degree`."""
    coeffs = [0] + [scale * shift ** (k - 1) for k in range(1, degree + 1)]
    s = UniSeries(0, coeffs)
    return SeparableMap(s, s)


def has_chisholm_support(s, order):
    """Check the coefficient inventory a diagonal order-M fit needs.

    Everything with total degree <= 2M+1 must be known except the two
    pure powers x^(2M+1), y^(2M+1). Returns (ok, missing_indices).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    top = 2 * order + 1
    missing = []
    for t in range(top + 1):
        for m in range(t + 1):
            n = t - m
            if t == top and (n == 0 or m == 0):
                continue
            if not s.is_known(m, n):
                missing.append((m, n))
    return (not missing), missing


def scale_to_unit_constant(s):
    """Divide by c00 so the fit normalization holds; returns (series, c00)."""
    c00 = s.coefficient(0, 0)
    if c00 is UNKNOWN or c00 == 0:
        raise NotNormalized("constant coefficient is zero or unknown")
    if c00 == 1:
        return s, c00
    coeffs = {k: v / c00 for k, v in s._coeffs.items()}
    return DoubleSeries(s.center, s.degree, coeffs, s._known), c00


def add_polynomial(s, poly):
    """Coefficientwise sum with a small polynomial given as {(m,n): coeff}.

    The polynomial's indices become known; everything else is untouched.
    """
    coeffs = s.coeffs
    for (m, n), v in poly.items():
        if m + n > s.degree:
            raise ValueError("polynomial term exceeds series degree bound")
        coeffs[(m, n)] = coeffs.get((m, n), 0) + v
    known = s._known
    if known is not None:
        known = frozenset(known | set(poly))
    return DoubleSeries(s.center, s.degree, coeffs, known)


def rotate_pm(s):
    """Re-expand a series in (z1, z2) under z1 = x - y, z2 = x + y.

    Exact binomial expansion truncated at the input's total degree bound
    (total degree is preserved termwise).
    """
    if s.center != (0, 0):
        raise ValueError("rotation requires an origin-centered series")
    _require_dense(s)
    out = {}
    binom = _binomial_rows(s.degree)
    for (m, n, c) in s.terms():
        bm = binom[m]
        bn = binom[n]
        for i in range(m + 1):
            ci = c * bm[i] * (-1 if i % 2 else 1)
            for j in range(n + 1):
                key = (m + n - i - j, i + j)
                out[key] = out.get(key, 0) + ci * bn[j]
    return DoubleSeries((0, 0), s.degree, out)


def compose_separable(s, smap, degree):
    """Substitute x = sx(u), y = sy(v), truncating at total degree `degree`."""
    if degree > s.degree:
        raise ValueError("cannot compose beyond the input degree bound")
    _require_dense(s)
    pow_x = _power_table(smap.sx.coeffs, degree)
    pow_y = _power_table(smap.sy.coeffs, degree)
    out = {}
    for (m, n, c) in s.terms():
        if m >= len(pow_x) or n >= len(pow_y):
            continue  # valuation exceeds the truncation degree
        px = pow_x[m]
        py = pow_y[n]
        for i, xi in enumerate(px):
            if xi == 0:
                continue
            cxi = c * xi
            for j, yj in enumerate(py):
                if yj == 0 or i + j > degree:
                    continue
                key = (i, j)
                out[key] = out.get(key, 0) + cxi * yj
    return DoubleSeries(s.center, degree, out)


def truncated_reciprocal(s, degree):
    """Series d with s*d = 1 up to total degree `degree` (needs c00 = 1)."""
    if degree > s.degree:
        raise ValueError("cannot invert beyond the input degree bound")
    _require_dense(s)
    if s.coefficient(0, 0) != 1:
        raise NotNormalized("reciprocal needs constant coefficient 1")
    src = s._coeffs
    out = {(0, 0): 1}
    for t in range(1, degree + 1):
        for i in range(t + 1):
            j = t - i
            acc = 0
            for (u, v), cu in src.items():
                if (u, v) == (0, 0) or u > i or v > j:
                    continue
                d = out.get((i - u, j - v))
                if d:
                    acc += cu * d
            if acc != 0:
                out[(i, j)] = -acc
    return DoubleSeries(s.center, degree, out)


def slice_y0(s):
    """The univariate restriction y = center_y: sum of c[m,0] x^m."""
    coeffs = []
    for m in range(s.degree + 1):
        v = s.coefficient(m, 0)
        if v is UNKNOWN:
            break
        coeffs.append(v)
    if not coeffs:
        raise ValueError("constant coefficient unknown; nothing to slice")
    return UniSeries(s.center[0], coeffs)


def to_float(s):
    """Binary64 copy (floats stay put, exact values round once)."""
    if isinstance(s, UniSeries):
        return UniSeries(float(s.center), [float(v) for v in s.coeffs])
    coeffs = {k: float(v) for k, v in s._coeffs.items()}
    return DoubleSeries(
        (float(s.center[0]), float(s.center[1])), s.degree, coeffs, s._known
    )


def _require_dense(s):
    if not s.is_downward_closed():
        raise ValueError(
            "operation requires a series whose support is the full "
            "total-degree triangle"
        )


def _binomial_rows(limit):
    rows = [[1]]
    for m in range(1, limit + 1):
        prev = rows[-1]
        rows.append(
            [1] + [prev[k - 1] + prev[k] for k in range(1, m)] + [1]
        )
    return rows


def _power_table(coeffs, degree):
    # powers of a zero-constant univariate series, truncated at `degree`
    one = [0] * (degree + 1)
    one[0] = 1
    table = [one]
    base = list(coeffs[: degree + 1]) + [0] * max(0, degree + 1 - len(coeffs))
    cur = one
    for m in range(1, degree + 1):
        nxt = [0] * (degree + 1)
        for i, ci in enumerate(cur):
            if ci == 0:
                continue
            for j in range(1, degree + 1 - i):
                bj = base[j]
                if bj != 0:
                    nxt[i + j] += ci * bj
        table.append(nxt)
        cur = nxt
    return table


# ---------------------------------------------------------------------------
# file format


def double_series_to_json(s):
    if not s.is_downward_closed():
        raise ValueError("file format cannot express support holes")
    return {
        "center": [scalar_to_json(_as_scalar(c)) for c in s.center],
        "degree": s.degree,
        "terms": [[m, n, scalar_to_json(v)] for (m, n, v) in s.terms()],
    }


def double_series_from_json(doc):
    center = tuple(scalar_from_json(c) for c in doc["center"])
    degree = int(doc["degree"])
    coeffs = {}
    for m, n, v in doc["terms"]:
        coeffs[(int(m), int(n))] = scalar_from_json(v)
    return DoubleSeries(center, degree, coeffs)


def uni_series_to_json(s):
    return {
        "center": scalar_to_json(_as_scalar(s.center)),
        "degree": s.degree,
        "terms": [
            [k, scalar_to_json(v)]
            for k, v in enumerate(s.coeffs)
            if v != 0
        ],
    }


def uni_series_from_json(doc):
    degree = int(doc["degree"])
    coeffs = [Fraction(0)] * (degree + 1)
    for k, v in doc["terms"]:
        coeffs[int(k)] = scalar_from_json(v)
    return UniSeries(scalar_from_json(doc["center"]), coeffs)


def write_series(s, path):
    doc = (
        uni_series_to_json(s)
        if isinstance(s, UniSeries)
        else double_series_to_json(s)
    )
    with open(path, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def read_series(path):
    with open(path) as fh:
        doc = json.load(fh)
    first = doc["terms"][0] if doc["terms"] else None
    if isinstance(doc["center"], list):
        return double_series_from_json(doc)
    if first is not None and len(first) == 3:
        return double_series_from_json(doc)
    return uni_series_from_json(doc)


def _as_scalar(v):
    return v if not isinstance(v, int) else Fraction(v)
