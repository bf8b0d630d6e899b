"""Series generators for every function the approximants are exercised on.

Origin-centered generators with rational parameters emit exact rational
coefficients. Recentered elementary generators use closed-form derivative
formulas with binary64 prefactors (exp/sin/sinh values, log of the shifted
argument), good to at least 12 significant digits; they never shift a
truncated series, which would be wrong.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterPole
from .series import DoubleSeries, UniSeries, truncated_reciprocal
from ._scalars import is_exact, principal_power


def pochhammer(x, k):
    """Rising factorial x(x+1)...(x+k-1); empty product is 1.

    Negative k is handled by the reflection (q)_{-k} = (-1)^k / (1-q)_k,
    i.e. 1/((q-1)(q-2)...(q-k)).
    """
    if k >= 0:
        acc = x - x + 1 if not isinstance(x, (int, float, Fraction)) else _one(x)
        for i in range(k):
            acc *= x + i
        return acc
    den = pochhammer(x + k, -k)
    if den == 0:
        raise ParameterPole("rising factorial (%r)_%d is infinite" % (x, k))
    return 1 / den


def _one(x):
    return Fraction(1) if is_exact(x) else 1.0


def _factorials(n):
    out = [Fraction(1)]
    for k in range(1, n + 1):
        out.append(out[-1] * k)
    return out


# ---------------------------------------------------------------------------
# elementary functions of (x + y) / 2 and log(1 + x + y)


def exp_half_sum(center=(0, 0), degree=21):
    """exp((x+y)/2): c[m,n] = exp((a+b)/2) / (2^(m+n) m! n!)."""
    a, b = center
    fact = _factorials(degree)
    origin = a == 0 and b == 0
    lead = Fraction(1) if origin else math.exp((a + b) / 2)
    coeffs = {}
    for m in range(degree + 1):
        for n in range(degree + 1 - m):
            base = Fraction(1, 2 ** (m + n)) / (fact[m] * fact[n])
            coeffs[(m, n)] = base * lead if origin else float(base) * lead
    return DoubleSeries(center, degree, coeffs)


def sin_half_sum(center=(0, 0), degree=21):
    """sin((x+y)/2); derivative phases cycle sin, cos, -sin, -cos."""
    return _trig_half_sum(center, degree, math.sin, math.cos, period=4)


def sinh_half_sum(center=(0, 0), degree=21):
    """sinh((x+y)/2); derivative phases cycle sinh, cosh."""
    return _trig_half_sum(center, degree, math.sinh, math.cosh, period=2)


def _trig_half_sum(center, degree, f0, f1, period):
    a, b = center
    fact = _factorials(degree)
    origin = a == 0 and b == 0
    u = 0.0 if origin else (a + b) / 2
    if period == 4:
        phases = [f0(u), f1(u), -f0(u), -f1(u)]
    else:
        phases = [f0(u), f1(u)]
    coeffs = {}
    for m in range(degree + 1):
        for n in range(degree + 1 - m):
            k = m + n
            base = Fraction(1, 2 ** k) / (fact[m] * fact[n])
            if origin:
                # phases at 0 are exactly 0, 1, 0, -1 (resp. 0, 1)
                if k % 2 == 0:
                    continue
                sign = -1 if (period == 4 and k % 4 == 3) else 1
                coeffs[(m, n)] = base * sign
            else:
                v = float(base) * phases[k % period]
                coeffs[(m, n)] = v
    return DoubleSeries(center, degree, coeffs)


def log_one_plus_sum(center=(0, 0), degree=21):
    """log(1+x+y) about (a,b): needs 1+a+b > 0.

    c[m,n] = (-1)^(m+n+1) (m+n-1)! / ((1+a+b)^(m+n) m! n!) for m+n >= 1,
    constant log(1+a+b).
    """
    a, b = center
    shift = 1 + a + b
    if shift <= 0:
        raise ValueError("log(1+x+y) is not analytic at this center")
    fact = _factorials(degree)
    origin = a == 0 and b == 0
    coeffs = {}
    if not origin:
        coeffs[(0, 0)] = math.log(shift)
    for m in range(degree + 1):
        for n in range(degree + 1 - m):
            k = m + n
            if k == 0:
                continue
            base = fact[k - 1] / (fact[m] * fact[n]) * (-1) ** (k + 1)
            if origin:
                coeffs[(m, n)] = base
            else:
                coeffs[(m, n)] = float(base) / shift ** k
    return DoubleSeries(center, degree, coeffs)


# ---------------------------------------------------------------------------
# hypergeometric series (origin only)


def gauss_2f1(a, b, c, degree=20):
    """The Gauss series: coefficients (a)_n (b)_n / ((c)_n n!)."""
    _reject_gamma_pole("c", c)
    coeffs = []
    t = _one(a) * _one(b) * _one(c)
    for n in range(degree + 1):
        coeffs.append(t)
        t = t * (a + n) * (b + n) / ((c + n) * (n + 1))
    return UniSeries(0, coeffs)


def appell_f1(a, b1, b2, c, degree=21):
    """First Appell series: (a)_{m+n} (b1)_m (b2)_n / ((c)_{m+n} m! n!)."""
    _reject_gamma_pole("c", c)
    coeffs = {}
    tm = _one(a)
    for m in range(degree + 1):
        t = tm
        for n in range(degree + 1 - m):
            if t != 0:
                coeffs[(m, n)] = t
            t = t * (a + m + n) * (b2 + n) / ((c + m + n) * (n + 1))
        tm = tm * (a + m) * (b1 + m) / ((c + m) * (m + 1))
    return DoubleSeries((0, 0), degree, coeffs)


def appell_f1_transformed(a, b1, b2, c, degree=21):
    """The series fitted for the F1 continuation into the third quadrant.

    This is the F1 series with first parameter c-a; the fit runs in the
    mapped coordinates u = x/(x-1), v = y/(y-1) and the evaluation-time
    prefactor is (1-x)^(-b1) (1-y)^(-b2).
    """
    return appell_f1(c - a, b1, b2, c, degree)


def f1_transform_point(x, y):
    """(u, v) = (x/(x-1), y/(y-1))."""
    return x / (x - 1), y / (y - 1)


def f1_transform_prefactor(b1, b2, x, y):
    return float((1 - x)) ** float(-b1) * float((1 - y)) ** float(-b2)


def appell_f2(a, b1, b2, c1, c2, degree=21):
    """Second Appell series: (a)_{m+n} (b1)_m (b2)_n / ((c1)_m (c2)_n m! n!)."""
    _reject_gamma_pole("c1", c1)
    _reject_gamma_pole("c2", c2)
    coeffs = {}
    tm = _one(a)
    for m in range(degree + 1):
        t = tm
        for n in range(degree + 1 - m):
            if t != 0:
                coeffs[(m, n)] = t
            t = t * (a + m + n) * (b2 + n) / ((c2 + n) * (n + 1))
        tm = tm * (a + m) * (b1 + m) / ((c1 + m) * (m + 1))
    return DoubleSeries((0, 0), degree, coeffs)


@dataclass(frozen=True)
class PrefactorSpec:
    """Closed-form scalar in front of one continuation component.

    gamma_num/gamma_den hold gamma-function arguments; neg_x_power and
    neg_y_power are the exponents on (-x) and (-y). Everything stays
    symbolic until evaluate() is called.
    """

    gamma_num: tuple
    gamma_den: tuple
    neg_x_power: object
    neg_y_power: object

    def evaluate(self, x, y):
        acc = complex(1)
        for g in self.gamma_num:
            acc *= math.gamma(float(g))
        for g in self.gamma_den:
            acc /= math.gamma(float(g))
        if self.neg_x_power != 0:
            acc *= principal_power(-complex(x), float(self.neg_x_power))
        if self.neg_y_power != 0:
            acc *= principal_power(-complex(y), float(self.neg_y_power))
        return acc


@dataclass(frozen=True)
class MappedComponent:
    """A continuation component: series to fit, its coordinates, prefactor."""

    series: DoubleSeries
    prefactor: PrefactorSpec
    map_label: str

    def map_point(self, x, y):
        if self.map_label == "(-x/y, 1/y)":
            return -x / y, 1 / y
        if self.map_label == "(1/x, 1/y)":
            return 1 / x, 1 / y
        if self.map_label == "(1/x, x/y)":
            return 1 / x, x / y
        raise ValueError("unknown coordinate map %r" % (self.map_label,))


def appell_f2_ac_components(a, b1, b2, c1, c2, degree=21):
    """The three double series continuing F2 to large |x|, |y|.

    Valid where 1/|x| < 1, |x/y| < 1, |x/y| < |x/(x+1)|, 1/|y| < 1 and
    |x/y| + 1/|y| < 1. Each component's series has constant term 1; the
    gamma/power prefactors are returned symbolically.
    """
    for label, g in (
        ("b2-a", b2 - a),
        ("c2-a", c2 - a),
        ("a-b1-b2", a - b1 - b2),
        ("c1-b1", c1 - b1),
        ("c2-b2", c2 - b2),
        ("a-b2", a - b2),
        ("-a+b1+b2", -a + b1 + b2),
        ("-a+b2+c1", -a + b2 + c1),
        ("a", a),
        ("b1", b1),
        ("b2", b2),
        ("c1", c1),
        ("c2", c2),
    ):
        _reject_gamma_pole(label, g)

    # component 1: arguments (-x/y, 1/y)
    coeffs = {}
    tm = _one(a)
    for m in range(degree + 1):
        t = tm
        for n in range(degree + 1 - m):
            if t != 0:
                coeffs[(m, n)] = t
            t = t * (a + m + n) * (a - c2 + 1 + m + n) / (
                (a - b2 + 1 + m + n) * (n + 1)
            )
        tm = tm * (b1 + m) * (a + m) * (a - c2 + 1 + m) / (
            (c1 + m) * (a - b2 + 1 + m) * (m + 1)
        )
    comp1 = MappedComponent(
        DoubleSeries((0, 0), degree, coeffs),
        PrefactorSpec((c2, b2 - a), (b2, c2 - a), 0, -a),
        "(-x/y, 1/y)",
    )

    # component 2: arguments (1/x, 1/y)
    coeffs = {}
    tm = _one(a)
    for m in range(degree + 1):
        t = tm
        for n in range(degree + 1 - m):
            if t != 0:
                coeffs[(m, n)] = t
            t = t * (b2 + n) * (b2 - c2 + 1 + n) / (
                (-a + b1 + b2 + 1 + m + n) * (n + 1)
            )
        tm = tm * (b1 + m) * (b1 - c1 + 1 + m) / (
            (-a + b1 + b2 + 1 + m) * (m + 1)
        )
    comp2 = MappedComponent(
        DoubleSeries((0, 0), degree, coeffs),
        PrefactorSpec(
            (c1, c2, a - b1 - b2), (a, c1 - b1, c2 - b2), -b1, -b2
        ),
        "(1/x, 1/y)",
    )

    # component 3: arguments (1/x, x/y); the (q)_{m-n} factors go through
    # the negative-index reflection when m < n
    coeffs = {}
    fact = _factorials(degree)
    for n in range(degree + 1):
        wn = (
            pochhammer(b2, n)
            * pochhammer(b2 - c2 + 1, n)
            / fact[n]
        )
        for m in range(degree + 1 - n):
            t = (
                wn
                * pochhammer(a - b2, m - n)
                * pochhammer(a - b2 - c1 + 1, m - n)
                / (pochhammer(a - b1 - b2 + 1, m - n) * fact[m])
            )
            if t != 0:
                coeffs[(m, n)] = t
    comp3 = MappedComponent(
        DoubleSeries((0, 0), degree, coeffs),
        PrefactorSpec(
            (c1, c2, a - b2, -a + b1 + b2),
            (a, b1, c2 - b2, -a + b2 + c1),
            b2 - a,
            -b2,
        ),
        "(1/x, x/y)",
    )
    return [comp1, comp2, comp3]


def _reject_gamma_pole(label, v):
    as_int = None
    if isinstance(v, int):
        as_int = v
    elif isinstance(v, Fraction) and v.denominator == 1:
        as_int = v.numerator
    elif isinstance(v, float) and v.is_integer():
        as_int = int(v)
    if as_int is not None and as_int <= 0:
        raise ParameterPole("parameter %s = %r sits on a gamma pole" % (label, v))


# ---------------------------------------------------------------------------
# polylogarithm and condensed-matter series


def li22(degree=21):
    """Double polylogarithm of weight (2,2): x^i y^j / (i^2 j^2), i > j >= 1."""
    coeffs = {}
    for j in range(1, degree):
        jj = j * j
        for i in range(j + 1, degree + 1 - j):
            coeffs[(i, j)] = Fraction(1, i * i * jj)
    return DoubleSeries((0, 0), degree, coeffs)


def li22_partial_sum(x, y, terms_per_index):
    """sum over i,j = 1..N of x^i (xy)^j / ((i+j)^2 j^2), exact for exact input."""
    n = terms_per_index
    total = Fraction(0) if is_exact(x) and is_exact(y) else 0.0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            total += x ** i * (x * y) ** j * Fraction(1, (i + j) ** 2 * j * j)
    return total


def legendre_coefficients(l):
    """Coefficient list of the degree-l Legendre polynomial (Bonnet)."""
    if l == 0:
        return [Fraction(1)]
    prev = [Fraction(1)]
    cur = [Fraction(0), Fraction(1)]
    for k in range(1, l):
        nxt = [Fraction(0)] * (k + 2)
        for i, v in enumerate(cur):
            nxt[i + 1] += Fraction(2 * k + 1, k + 1) * v
        for i, v in enumerate(prev):
            nxt[i] -= Fraction(k, k + 1) * v
        prev, cur = cur, nxt
    return cur


def ising_susceptibility(degree=21, polynomial_family=legendre_coefficients):
    """Model susceptibility series: sum over l of P_l(z1) z2^l.

    P_l defaults to the Legendre family (the l = 0 term is the constant 1).
    The grid key is (power of z1, power of z2).
    """
    coeffs = {}
    for l in range(degree + 1):
        poly = polynomial_family(l)
        for m, v in enumerate(poly):
            if v != 0 and m + l <= degree:
                coeffs[(m, l)] = coeffs.get((m, l), 0) + v
    return DoubleSeries((0, 0), degree, coeffs)


def ising_reference(z1, z2, terms=101):
    """Partial sum of the Legendre generating series at a point."""
    acc = 0.0
    for l in range(terms):
        poly = legendre_coefficients(l)
        pl = 0.0
        for v in reversed(poly):
            pl = pl * z1 + float(v)
        acc += pl * z2 ** l
    return acc


def cm2_function(degree=21):
    """1 / (exp(z1 z2) - z2), built by exact truncated reciprocal."""
    fact = _factorials(degree)
    coeffs = {}
    for k in range(degree // 2 + 1):
        coeffs[(k, k)] = Fraction(1) / fact[k]
    coeffs[(0, 1)] = coeffs.get((0, 1), Fraction(0)) - 1
    base = DoubleSeries((0, 0), degree, coeffs)
    return truncated_reciprocal(base, degree)


def cm2_reference(z1, z2):
    return 1.0 / (math.exp(z1 * z2) - z2)


# ---------------------------------------------------------------------------
# generator registry for the CLI


@dataclass(frozen=True)
class GeneratorSpec:
    """A named generator with parameters, center and degree bound."""

    name: str
    params: dict
    center: tuple = (0, 0)
    degree: int = 21

    def __post_init__(self):
        if self.degree < 3:
            raise ValueError("degree must be at least 3")


_F1_DEFAULTS = {"a": Fraction(1, 2), "b1": Fraction(1, 3),
                "b2": Fraction(1, 5), "c": Fraction(1, 7)}
_F2_DEFAULTS = {"a": Fraction(3, 10), "b1": Fraction(4, 10),
                "b2": Fraction(3, 17), "c1": Fraction(1, 5),
                "c2": Fraction(1, 7)}
_2F1_DEFAULTS = {"a": Fraction(1, 2), "b": Fraction(1, 3), "c": Fraction(1, 5)}
_F2AC_DEFAULTS = {"a": Fraction(123, 100), "b1": Fraction(154, 100),
                  "b2": Fraction(167, 100), "c1": Fraction(211, 100),
                  "c2": Fraction(239, 100)}


def build(spec):
    """Instantiate a GeneratorSpec. f2ac yields the component list."""
    name = spec.name
    p = dict(spec.params)
    if name == "exp":
        return exp_half_sum(spec.center, spec.degree)
    if name == "sin":
        return sin_half_sum(spec.center, spec.degree)
    if name == "sinh":
        return sinh_half_sum(spec.center, spec.degree)
    if name == "log":
        return log_one_plus_sum(spec.center, spec.degree)
    if name == "2f1":
        q = {**_2F1_DEFAULTS, **p}
        _require_origin(spec)
        return gauss_2f1(q["a"], q["b"], q["c"], spec.degree)
    if name == "f1":
        q = {**_F1_DEFAULTS, **p}
        _require_origin(spec)
        return appell_f1(q["a"], q["b1"], q["b2"], q["c"], spec.degree)
    if name == "f1t":
        q = {**_F1_DEFAULTS, **p}
        _require_origin(spec)
        return appell_f1_transformed(q["a"], q["b1"], q["b2"], q["c"], spec.degree)
    if name == "f2":
        q = {**_F2_DEFAULTS, **p}
        _require_origin(spec)
        return appell_f2(q["a"], q["b1"], q["b2"], q["c1"], q["c2"], spec.degree)
    if name == "f2ac":
        q = {**_F2AC_DEFAULTS, **p}
        _require_origin(spec)
        return appell_f2_ac_components(
            q["a"], q["b1"], q["b2"], q["c1"], q["c2"], spec.degree
        )
    if name == "li22":
        _require_origin(spec)
        return li22(spec.degree)
    if name == "ising":
        _require_origin(spec)
        return ising_susceptibility(spec.degree)
    if name == "cm2":
        _require_origin(spec)
        return cm2_function(spec.degree)
    raise ValueError("unknown generator %r" % (name,))


GENERATOR_NAMES = (
    "exp", "sin", "sinh", "log", "2f1", "f1", "f1t", "f2", "f2ac",
    "li22", "ising", "cm2",
)


def _require_origin(spec):
    if tuple(spec.center) != (0, 0):
        raise ValueError(
            "generator %r supports only origin expansion" % (spec.name,)
        )
