"""Command-line front end: fit, evaluate, tabulate, demo.

The demo subcommand chains the preprocessing tricks (offset polynomial,
plus/minus rotation, constant rescaling) exactly as each workflow needs
them, so every published table is a one-liner. The same workflow
functions back the acceptance tests.
"""

import argparse
import json
import math
import os
import re
import sys
from fractions import Fraction

from . import core, generators, linalg, pade, series
from .errors import (
    ApproximationError,
    InsufficientTerms,
    NotNormalized,
    ParameterPole,
    PoleHit,
    SingularSystem,
)
from ._scalars import fraction_to_decimal, is_exact, sig_str

DEFAULT_MAX_ORDER = 25

EXIT_USAGE = 2
EXIT_INSUFFICIENT_TERMS = 3
EXIT_SINGULAR = 4
EXIT_NOT_NORMALIZED = 5
EXIT_POLE = 6
EXIT_PARAMETER_POLE = 7


class ErrorTableRow:
    """One table line: evaluation point, fit value, reference, percent error."""

    def __init__(self, point, ca_value, reference_value):
        self.point = point
        self.ca_value = ca_value
        self.reference_value = reference_value
        self.flag = ""
        if ca_value is None:
            self.percent_error = None
            self.flag = "pole"
        elif reference_value == 0:
            self.percent_error = abs(_num(ca_value))
            self.flag = "abs"
        else:
            self.percent_error = (
                100.0
                * abs(_num(ca_value) - _num(reference_value))
                / abs(_num(reference_value))
            )


def _num(v):
    if isinstance(v, complex):
        return v
    if is_exact(v):
        return float(v)
    return v


# ---------------------------------------------------------------------------
# workflow plumbing


def normalize_for_fit(s):
    """Make the constant coefficient exactly 1.

    Returns (prepared, offset, scale): a zero constant gets +1 added
    (subtract `offset` from evaluations), any other non-unit constant is
    divided out (rescale the numerator by `scale` afterwards).
    """
    c00 = s.coefficient(0, 0)
    if c00 is series.UNKNOWN:
        raise InsufficientTerms([(0, 0)])
    one = Fraction(1) if is_exact(c00) else 1.0
    if c00 == 1:
        return s, 0, one
    if c00 == 0:
        return series.add_polynomial(s, {(0, 0): one}), one, one
    prepared, scale = series.scale_to_unit_constant(s)
    return prepared, 0, scale


def fit_normalized(s, order, backend="exact"):
    """Normalize, fit, and undo the normalization on the result.

    Returns (approximant, offset, report); evaluations of the approximant
    minus `offset` reproduce the original series' function.
    """
    if backend == "float":
        s = series.to_float(s)
    elif not s.is_exact():
        backend = "float"
    prepared, offset, scale = normalize_for_fit(s)
    ca, report = core.fit_diagonal(prepared, order)
    if scale != 1:
        ca = ca.scale_numerator(scale)
        offset = offset * scale
    return ca, offset, report


_HALF_SUM_REFS = {
    "exp": lambda t: math.exp(t / 2),
    "sin": lambda t: math.sin(t / 2),
    "sinh": lambda t: math.sinh(t / 2),
}


def elementary_table(name, order, grid_x, grid_y=None, center=(0, 0)):
    """Accuracy table for exp/sin/sinh of (x+y)/2 or log(1+x+y)."""
    if grid_y is None:
        grid_y = grid_x
    degree = 2 * order + 1
    spec = generators.GeneratorSpec(name, {}, center, degree)
    s = generators.build(spec)
    ca, offset, _ = fit_normalized(s, order)
    if name == "log":
        ref = lambda x, y: math.log(1 + x + y)
    else:
        ref = lambda x, y, f=_HALF_SUM_REFS[name]: f(x + y)
    rows = []
    for xv in grid_x:
        for yv in grid_y:
            x, y = _eval_point(xv, ca)
            try:
                val = core.evaluate(ca, x, y) - offset
            except PoleHit:
                val = None
            rows.append(ErrorTableRow((xv, yv), val, ref(float(x), float(y))))
    return rows


def _eval_point(xv, yv, ca):
    # exact fits evaluate at exact points; float fits in binary64
    if ca.is_exact():
        to = lambda v: v if isinstance(v, Fraction) else Fraction(str(v))
    else:
        to = float
    return to(xv), to(yv)


def appell_f1_table_origin(order=10, grid=("0.1", "0.34", "0.58", "0.82"),
                           depth=100):
    """F1 accuracy table: origin fit vs partial sums of the defining series."""
    degree = 2 * order + 1
    p = generators._F1_DEFAULTS
    s = generators.appell_f1(p["a"], p["b1"], p["b2"], p["c"], degree)
    ca, _ = core.fit_diagonal(s, order)
    rows = []
    for xv in grid:
        for yv in grid:
            if (xv, yv) == (grid[-1], grid[-1]):
                continue  # published grid stops short of the corner
            x, y = Fraction(xv), Fraction(yv)
            val = core.evaluate(ca, x, y)
            ref = _f1_partial_sum(float(x), float(y), depth)
            rows.append(ErrorTableRow((xv, yv), val, ref))
    return rows


def appell_f1_table_continued(order=10, grid=("-1", "-1.5", "-2", "-2.5", "-3"),
                              depth=100):
    """Origin F1 fit evaluated in the third quadrant vs its continuation.

    The reference sums the transformed series (arguments x/(x-1), y/(y-1))
    with the (1-x)^(-b1) (1-y)^(-b2) prefactor.
    """
    degree = 2 * order + 1
    p = generators._F1_DEFAULTS
    s = generators.appell_f1(p["a"], p["b1"], p["b2"], p["c"], degree)
    ca, _ = core.fit_diagonal(s, order)
    rows = []
    for xv in grid[:3]:
        for yv in grid:
            x, y = Fraction(xv), Fraction(yv)
            val = core.evaluate(ca, x, y)
            u, v = generators.f1_transform_point(float(x), float(y))
            ref = _f1_partial_sum(
                u, v, depth, first=p["c"] - p["a"]
            ) * generators.f1_transform_prefactor(p["b1"], p["b2"], float(x), float(y))
            rows.append(ErrorTableRow((xv, yv), val, ref))
    return rows


def _f1_partial_sum(x, y, depth, first=None):
    p = generators._F1_DEFAULTS
    a = float(first if first is not None else p["a"])
    b1, b2, c = float(p["b1"]), float(p["b2"]), float(p["c"])
    total = 0.0
    tm = 1.0
    for m in range(depth + 1):
        t = tm
        for n in range(depth + 1):
            total += t
            t *= (a + m + n) * (b2 + n) / ((c + m + n) * (n + 1)) * y
        tm *= (a + m) * (b1 + m) / ((c + m) * (m + 1)) * x
    return total


def appell_f2_table(order=10, depth=150):
    """F2 accuracy table at the published sample points."""
    pts = [
        ("-0.6", "-0.2"), ("-0.6", "0.2"), ("-0.2", "-0.6"), ("-0.2", "-0.2"),
        ("-0.2", "0.2"), ("-0.2", "0.6"), ("0.2", "-0.6"), ("0.2", "-0.2"),
        ("0.2", "0.2"), ("0.6", "-0.2"), ("0.6", "0.2"),
    ]
    degree = 2 * order + 1
    p = generators._F2_DEFAULTS
    s = generators.appell_f2(p["a"], p["b1"], p["b2"], p["c1"], p["c2"], degree)
    ca, _ = core.fit_diagonal(s, order)
    rows = []
    for xv, yv in pts:
        x, y = Fraction(xv), Fraction(yv)
        val = core.evaluate(ca, x, y)
        ref = _f2_partial_sum(float(x), float(y), depth)
        rows.append(ErrorTableRow((xv, yv), val, ref))
    return rows


def _f2_partial_sum(x, y, depth):
    p = generators._F2_DEFAULTS
    a, b1, b2 = float(p["a"]), float(p["b1"]), float(p["b2"])
    c1, c2 = float(p["c1"]), float(p["c2"])
    total = 0.0
    tm = 1.0
    for m in range(depth + 1):
        t = tm
        for n in range(depth + 1):
            total += t
            t *= (a + m + n) * (b2 + n) / ((c2 + n) * (n + 1)) * y
        tm *= (a + m) * (b1 + m) / ((c1 + m) * (m + 1)) * x
    return total


F2AC_TRUE_POINTS = ((5.0, 15.0), (-5.0, 15.0), (-5.0, -15.0), (5.0, -15.0))


def appell_f2_continuation_values(order=10, points=F2AC_TRUE_POINTS, degree=None):
    """Assembled continuation fit of F2 at large arguments.

    Fits the three component series in their own coordinates and sums
    prefactor * component at each point. Returns rows whose reference is
    the directly summed continuation (the published package's values).
    """
    if degree is None:
        degree = 2 * order + 1
    q = generators._F2AC_DEFAULTS
    params = (q["a"], q["b1"], q["b2"], q["c1"], q["c2"])
    comps = generators.appell_f2_ac_components(*params, degree)
    deep = generators.appell_f2_ac_components(*params, max(60, degree))
    fits = [core.fit_diagonal(c.series, order)[0] for c in comps]
    rows = []
    for (x, y) in points:
        xf, yf = Fraction(str(x)), Fraction(str(y))
        val = 0j
        ref = 0j
        for comp, deep_comp, ca in zip(comps, deep, fits):
            X, Y = comp.map_point(xf, yf)
            pref = comp.prefactor.evaluate(x, y)
            val += pref * float(core.evaluate_mapped(ca, X, Y))
            ref += pref * _sum_component(deep_comp, float(X), float(Y))
        rows.append(ErrorTableRow((x, y), val, ref))
    return rows


def _sum_component(comp, X, Y):
    total = 0.0
    for (m, n, c) in comp.series.terms():
        total += float(c) * X ** m * Y ** n
    return total


def condensed_matter_table(which, order=10, points=None):
    """The rotated-fit tables: susceptibility model or 1/(e^(z1 z2) - z2).

    `which` is "ising" (offset x+y, per the published workflow) or "cm2"
    (no offset; its rotated series already fits directly). Points are
    (z1, z2) pairs; evaluation maps to x = (z1+z2)/2, y = (z2-z1)/2.
    """
    degree = 2 * order + 1
    if which == "ising":
        s = generators.ising_susceptibility(degree)
        ref = lambda z1, z2: generators.ising_reference(z1, z2, 101)
        offset_poly = {(1, 0): Fraction(1), (0, 1): Fraction(1)}
        if points is None:
            grid = ("0.01", "0.21", "0.41", "0.61", "0.81")
            points = [(a, b) for a in grid for b in grid]
    elif which == "cm2":
        s = generators.cm2_function(degree)
        ref = generators.cm2_reference
        offset_poly = {}
        if points is None:
            points = [
                (a, b)
                for a in ("0.1", "0.4", "0.7", "1.", "1.3", "1.6", "1.9")
                for b in ("0.1", "1.1", "2.1")
            ]
    else:
        raise ValueError("unknown condensed-matter workflow %r" % (which,))
    rotated = series.rotate_pm(s)
    if offset_poly:
        rotated = series.add_polynomial(rotated, offset_poly)
    ca, _ = core.fit_diagonal(rotated, order)
    rows = []
    for (z1v, z2v) in points:
        z1, z2 = Fraction(z1v), Fraction(z2v)
        x, y = (z1 + z2) / 2, (z2 - z1) / 2
        try:
            val = core.evaluate_mapped(ca, x, y)
            for (m, n), cf in offset_poly.items():
                val -= cf * x ** m * y ** n
        except PoleHit:
            val = None
        rows.append(ErrorTableRow((z1v, z2v), val, ref(float(z1), float(z2))))
    return rows


def li22_acceleration(orders=range(5, 21)):
    """Convergence-acceleration table at (1,1) for the weight-(2,2) series.

    For each order o: exact fit of 1 + x + y + Li22(x-y, x+y), evaluated
    at (1, 0) minus 2, against the (2o+1)^2-term partial sum.
    """
    out = []
    for o in orders:
        degree = 2 * o + 1
        s = series.rotate_pm(generators.li22(degree))
        s = series.add_polynomial(
            s, {(0, 0): Fraction(1), (1, 0): Fraction(1), (0, 1): Fraction(1)}
        )
        ca, _ = core.fit_diagonal(s, o)
        val = core.evaluate(ca, Fraction(1), Fraction(0)) - 2
        terms = 2 * o + 1
        psum = generators.li22_partial_sum(Fraction(1), Fraction(1), terms)
        out.append(
            {
                "order": o,
                "ca": val,
                "partial_sum": psum,
                "terms": terms * terms,
            }
        )
    return out


def gauss_2f1_demo(order=10):
    """The complex-point continuation demo for the Gauss series."""
    p = generators._2F1_DEFAULTS
    s = generators.gauss_2f1(p["a"], p["b"], p["c"], 2 * order)
    pa = pade.fit_diagonal(s, order)
    z = complex(0.5, -0.5 * math.sqrt(3.0))
    return z, pade.evaluate(pa, z)


# ---------------------------------------------------------------------------
# rendering


def render_rows(rows, fmt="csv", digits=10):
    cols = ["x", "y", "CA", "Function", "% Error"]
    table = []
    for r in rows:
        ca = "pole" if r.ca_value is None else sig_str(r.ca_value, digits)
        pe = "" if r.percent_error is None else sig_str(r.percent_error, 2)
        if r.flag == "abs":
            pe += " (abs)"
        table.append(
            [str(r.point[0]), str(r.point[1]), ca,
             sig_str(r.reference_value, digits), pe]
        )
    return _render_table(cols, table, fmt)


def _render_table(cols, table, fmt):
    if fmt == "csv":
        lines = [",".join(cols)]
        lines += [",".join(row) for row in table]
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        lines = ["| " + " | ".join(cols) + " |"]
        lines.append("|" + "|".join(["---"] * len(cols)) + "|")
        lines += ["| " + " | ".join(row) + " |" for row in table]
        return "\n".join(lines) + "\n"
    raise ValueError("unknown format %r" % (fmt,))


# ---------------------------------------------------------------------------
# argument helpers


_POLY_TERM = re.compile(
    r"^\s*(?P<coef>[0-9]+(?:\.[0-9]+)?|[0-9]*\.?[0-9]*)\s*\*?\s*"
    r"(?P<vars>(?:x|y|xy|x\*y)?)\s*$"
)


def parse_polynomial(text):
    """Parse offsets like "1", "x+y", "1+x+y", "2x-y" into {(m,n): coeff}."""
    out = {}
    s = text.replace("-", "+-")
    for chunk in s.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        neg = chunk.startswith("-")
        if neg:
            chunk = chunk[1:].strip()
        m = _POLY_TERM.match(chunk)
        if not m or (not m.group("coef") and not m.group("vars")):
            raise ValueError("cannot parse polynomial term %r" % (chunk,))
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if neg:
            coef = -coef
        v = m.group("vars").replace("*", "")
        key = {"": (0, 0), "x": (1, 0), "y": (0, 1), "xy": (1, 1)}[v]
        out[key] = out.get(key, 0) + coef
    return out


def parse_scalar(text):
    text = text.strip()
    if "j" in text or "i" in text or "I" in text:
        return complex(text.replace("i", "j").replace("I", "j").replace(" ", ""))
    try:
        return Fraction(text)
    except ValueError:
        return float(text)


def parse_points(text):
    pts = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError("point %r is not 'x,y'" % (chunk,))
        pts.append((parse_scalar(parts[0]), parse_scalar(parts[1])))
    return pts


def parse_params(text):
    out = {}
    if not text:
        return out
    for chunk in text.split(","):
        if not chunk.strip():
            continue
        k, _, v = chunk.partition("=")
        if not _:
            raise ValueError("parameter %r is not 'key=value'" % (chunk,))
        out[k.strip()] = Fraction(v.strip())
    return out


def max_order():
    raw = os.environ.get("CHISHOLM_MAX_ORDER", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_ORDER
    except ValueError:
        return DEFAULT_MAX_ORDER


def _check_order(order, parser):
    cap = max_order()
    if order > cap:
        parser.error(
            "order %d exceeds CHISHOLM_MAX_ORDER=%d" % (order, cap)
        )
    if order < 1:
        parser.error("order must be >= 1")


def _load_input(args, parser):
    name_or_path = args.input
    if os.path.exists(name_or_path):
        return series.read_series(name_or_path)
    if name_or_path in generators.GENERATOR_NAMES:
        center = _parse_center(args.center, parser)
        degree = args.degree if args.degree else 2 * args.order + 1
        spec = generators.GeneratorSpec(
            name_or_path, parse_params(args.params), center, degree
        )
        built = generators.build(spec)
        if isinstance(built, list):
            parser.error(
                "generator %r yields continuation components; fit them "
                "via 'demo f2ac'" % (name_or_path,)
            )
        return built
    parser.error(
        "input %r is neither a readable file nor a generator name %s"
        % (name_or_path, list(generators.GENERATOR_NAMES))
    )


def _parse_center(text, parser):
    if not text:
        return (0, 0)
    parts = text.split(",")
    if len(parts) != 2:
        parser.error("--center must be 'a,b'")
    return (parse_scalar(parts[0]), parse_scalar(parts[1]))


# ---------------------------------------------------------------------------
# subcommands


def cmd_fit(args, parser):
    _check_order(args.order, parser)
    s = _load_input(args, parser)
    if isinstance(s, series.UniSeries):
        parser.error("input is univariate; use pade-fit")
    if args.rotate_pm:
        s = series.rotate_pm(s)
    if args.offset:
        s = series.add_polynomial(s, parse_polynomial(args.offset))
    if args.backend == "float":
        s = series.to_float(s)
    prepared, scale = (s, 1)
    if args.scale_constant:
        prepared, scale = series.scale_to_unit_constant(s)
    ca, report = core.fit_diagonal(prepared, args.order)
    if scale != 1:
        ca = ca.scale_numerator(scale)
    doc = core.to_json(ca)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(doc, fh)
            fh.write("\n")
    else:
        json.dump(doc, sys.stdout)
        sys.stdout.write("\n")
    print(
        "fit order %d: %d equations (%d symmetrized)%s"
        % (
            args.order,
            report.equations_total,
            report.equations_symmetrized,
            ""
            if report.residual_max is None
            else ", max solve residual %s" % sig_str(report.residual_max, 3),
        ),
        file=sys.stderr,
    )
    return 0


def cmd_pade_fit(args, parser):
    _check_order(args.order, parser)
    s = _load_input(args, parser)
    if not isinstance(s, series.UniSeries):
        parser.error("input is bivariate; use fit")
    if args.backend == "float":
        s = series.to_float(s)
    pa = pade.fit_diagonal(s, args.order)
    doc = pade.to_json(pa)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(doc, fh)
            fh.write("\n")
    else:
        json.dump(doc, sys.stdout)
        sys.stdout.write("\n")
    return 0


def cmd_eval(args, parser):
    with open(args.approximant) as fh:
        doc = json.load(fh)
    if doc.get("kind") != "chisholm":
        parser.error("not a chisholm approximant file; use pade-eval")
    ca = core.from_json(doc)
    for (x, y) in parse_points(args.points):
        val = core.evaluate(ca, x, y)
        print(
            "%s %s %s"
            % (sig_str(x, args.precision), sig_str(y, args.precision),
               sig_str(val, args.precision))
        )
    return 0


def cmd_pade_eval(args, parser):
    with open(args.approximant) as fh:
        doc = json.load(fh)
    if doc.get("kind") != "pade":
        parser.error("not a pade approximant file; use eval")
    pa = pade.from_json(doc)
    for chunk in args.points.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        z = parse_scalar(chunk)
        val = pade.evaluate(pa, z)
        print("%s %s" % (sig_str(z, args.precision), sig_str(val, args.precision)))
    return 0


def cmd_gen(args, parser):
    center = _parse_center(args.center, parser)
    spec = generators.GeneratorSpec(
        args.name, parse_params(args.params), center, args.degree
    )
    built = generators.build(spec)
    if isinstance(built, list):
        parser.error("f2ac yields three component series; see 'demo f2ac'")
    doc = (
        series.uni_series_to_json(built)
        if isinstance(built, series.UniSeries)
        else series.double_series_to_json(built)
    )
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(doc, fh)
            fh.write("\n")
    else:
        json.dump(doc, sys.stdout)
        sys.stdout.write("\n")
    return 0


def cmd_error_table(args, parser):
    _check_order(args.order, parser)
    grid_x = [v.strip() for v in args.grid.split(",") if v.strip()]
    grid_y = (
        [v.strip() for v in args.grid_y.split(",") if v.strip()]
        if args.grid_y
        else grid_x
    )
    name = args.generator
    if name in ("exp", "sin", "sinh", "log"):
        center = _parse_center(args.center, parser)
        rows = elementary_table(name, args.order, grid_x, grid_y, center)
    elif name == "f1":
        rows = appell_f1_table_origin(args.order, tuple(grid_x))
    elif name == "f2":
        rows = appell_f2_table(args.order)
    elif name in ("ising", "cm2"):
        pts = [(a, b) for a in grid_x for b in grid_y]
        rows = condensed_matter_table(name, args.order, pts)
    elif name == "li22":
        data = li22_acceleration([args.order])[0]
        ref = math.pi ** 4 / 120
        rows = [ErrorTableRow((1, 1), data["ca"], ref)]
    else:
        parser.error("no reference oracle for generator %r" % (name,))
    out = render_rows(rows, args.format)
    sys.stdout.write(out)
    return 0


def cmd_demo(args, parser):
    name = args.name
    fmt = args.format
    if name == "2f1":
        z, val = gauss_2f1_demo(args.order or 10)
        print("diagonal Pade continuation of the Gauss series")
        print("z = %s" % sig_str(z, 10))
        print("[%d/%d] value = %s" % (args.order or 10, args.order or 10,
                                      sig_str(val, 10)))
        return 0
    if name in ("exp", "sin", "sinh", "log"):
        order = args.order or 10
        _check_order(order, parser)
        if name == "exp":
            grid = ("0", "3", "6", "9")
            second_center = (3, 6)
        elif name == "log":
            grid = ("0.1", "1.1", "2.1", "3.1")
            second_center = None
        else:
            grid = ("0.1", "1.6", "3.1", "4.6")
            second_center = (1.6, 1.6)
        print("# around (0,0)")
        sys.stdout.write(render_rows(elementary_table(name, order, grid), fmt))
        if second_center is not None:
            print("# around (%g,%g)" % second_center)
            sys.stdout.write(
                render_rows(
                    elementary_table(name, order, grid, center=second_center),
                    fmt,
                )
            )
        return 0
    if name == "f1":
        order = args.order or 10
        _check_order(order, parser)
        print("# origin fit inside the unit square")
        sys.stdout.write(render_rows(appell_f1_table_origin(order), fmt))
        print("# origin fit continued into the third quadrant")
        sys.stdout.write(render_rows(appell_f1_table_continued(order), fmt))
        return 0
    if name == "f2":
        order = args.order or 10
        _check_order(order, parser)
        sys.stdout.write(render_rows(appell_f2_table(order), fmt))
        return 0
    if name == "f2ac":
        order = args.order or 10
        _check_order(order, parser)
        rows = appell_f2_continuation_values(order)
        sys.stdout.write(render_rows(rows, fmt, digits=11))
        return 0
    if name in ("ising", "cm2"):
        order = args.order or 10
        _check_order(order, parser)
        sys.stdout.write(render_rows(condensed_matter_table(name, order), fmt))
        return 0
    if name == "li22":
        orders = (
            [int(v) for v in args.orders.split(",")]
            if args.orders
            else list(range(5, 21))
        )
        for o in orders:
            _check_order(o, parser)
        data = li22_acceleration(orders)
        cols = ["order", "CA value", "partial sum", "terms"]
        table = [
            [
                str(d["order"]),
                str(fraction_to_decimal(d["ca"], 15)),
                str(fraction_to_decimal(d["partial_sum"], 15)),
                str(d["terms"]),
            ]
            for d in data
        ]
        sys.stdout.write(_render_table(cols, table, fmt))
        print("closed form at (1,1): pi^4/120 = %.15f" % (math.pi ** 4 / 120))
        return 0
    parser.error("unknown demo %r" % (name,))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chisholm",
        description=(
            "Diagonal rational approximants of two-variable power series "
            "(and diagonal Pade approximants of one-variable series)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common_fit(p):
        p.add_argument("input", help="series file or generator name")
        p.add_argument("--order", type=int, required=True)
        p.add_argument("--backend", choices=("exact", "float"), default="exact")
        p.add_argument("--center", default="", help="generator center 'a,b'")
        p.add_argument("--degree", type=int, default=0,
                       help="generator degree bound (default 2*order+1)")
        p.add_argument("--params", default="", help="generator params 'k=v,...'")
        p.add_argument("-o", "--output", default="")

    p = sub.add_parser("fit", help="fit a bivariate diagonal approximant")
    add_common_fit(p)
    p.add_argument("--offset", default="",
                   help="polynomial added before the fit, e.g. '1+x+y'")
    p.add_argument("--rotate-pm", action="store_true",
                   help="substitute z1 = x-y, z2 = x+y before the fit")
    p.add_argument("--scale-constant", action="store_true",
                   help="divide out a non-unit constant term")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("pade-fit", help="fit a univariate diagonal approximant")
    add_common_fit(p)
    p.set_defaults(func=cmd_pade_fit)

    p = sub.add_parser("eval", help="evaluate a chisholm approximant file")
    p.add_argument("approximant")
    p.add_argument("--points", required=True, help="'x,y;x,y;...'")
    p.add_argument("--precision", type=int, default=10)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("pade-eval", help="evaluate a pade approximant file")
    p.add_argument("approximant")
    p.add_argument("--points", required=True, help="'z;z;...'")
    p.add_argument("--precision", type=int, default=10)
    p.set_defaults(func=cmd_pade_eval)

    p = sub.add_parser("gen", help="emit a generator's series file")
    p.add_argument("name", choices=generators.GENERATOR_NAMES)
    p.add_argument("--degree", type=int, default=21)
    p.add_argument("--center", default="")
    p.add_argument("--params", default="")
    p.add_argument("-o", "--output", default="")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("error-table", help="accuracy table against a reference")
    p.add_argument("generator", choices=generators.GENERATOR_NAMES)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--grid", default="0,3,6,9")
    p.add_argument("--grid-y", default="")
    p.add_argument("--center", default="")
    p.add_argument("--format", choices=("csv", "markdown"), default="csv")
    p.set_defaults(func=cmd_error_table)

    p = sub.add_parser("demo", help="reproduce a published workflow end to end")
    p.add_argument(
        "name",
        choices=("exp", "sin", "sinh", "log", "f1", "f2", "f2ac", "li22",
                 "ising", "cm2", "2f1"),
    )
    p.add_argument("--order", type=int, default=0)
    p.add_argument("--orders", default="", help="li22 only: e.g. '5,10,15,20'")
    p.add_argument("--format", choices=("csv", "markdown"), default="csv")
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except InsufficientTerms as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INSUFFICIENT_TERMS
    except SingularSystem as exc:
        print("error: approximant does not exist at this order (%s)" % exc,
              file=sys.stderr)
        return EXIT_SINGULAR
    except NotNormalized as exc:
        print(
            "error: %s (hint: pass --offset '1' or --offset '1+x+y', or "
            "--scale-constant)" % exc,
            file=sys.stderr,
        )
        return EXIT_NOT_NORMALIZED
    except PoleHit as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_POLE
    except ParameterPole as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARAMETER_POLE
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
