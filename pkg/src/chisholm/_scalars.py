"""Scalar plumbing shared across modules.

Two scalar regimes coexist: exact (int / Fraction) and binary64
(float / complex). Helpers here classify values, move them through the
JSON file formats, and render them at a fixed number of significant
digits so table output is byte-stable.
"""

import cmath
import decimal
from fractions import Fraction

EXACT_TYPES = (int, Fraction)


def is_exact(value):
    return isinstance(value, EXACT_TYPES)


def all_exact(values):
    return all(is_exact(v) for v in values)


def to_fraction(value):
    """Exact conversion; floats map to their exact binary64 rational."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def scalar_to_json(value):
    """Exact values encode as "p/q" strings, floats as JSON numbers."""
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        value = Fraction(value)
    if isinstance(value, Fraction):
        return "%d/%d" % (value.numerator, value.denominator)
    if isinstance(value, float):
        return value
    raise TypeError("cannot encode scalar of type %s" % type(value).__name__)


def scalar_from_json(value):
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, bool):
        raise ValueError("bool is not a scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return value
    raise ValueError("cannot decode scalar from %r" % (value,))


def fraction_to_decimal(value, digits):
    """Correctly rounded Decimal with `digits` significant digits."""
    value = to_fraction(value)
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        return decimal.Decimal(value.numerator) / decimal.Decimal(value.denominator)


def sig_str(value, digits=10):
    """Render a scalar at a fixed number of significant digits.

    Exact rationals are rounded correctly via decimal arithmetic; floats
    go through repr-stable formatting. Complex values render as
    "re+imj" with both parts at the same precision.
    """
    if isinstance(value, complex):
        re = sig_str(value.real, digits)
        im = sig_str(value.imag, digits)
        sign = "" if im.startswith("-") else "+"
        return "%s%s%sj" % (re, sign, im)
    if is_exact(value):
        if value == 0:
            return "0"
        dec = fraction_to_decimal(value, digits)
        return _plain_decimal(dec, digits)
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        dec = +decimal.Decimal(value)
    return _plain_decimal(dec, digits)


def _plain_decimal(dec, digits):
    # plain notation for moderate exponents, scientific otherwise
    if dec.is_nan() or dec.is_infinite():
        return str(dec)
    exp = dec.adjusted()
    if -5 <= exp < digits + 4:
        return format(dec, "f")
    return format(dec, "e")


def principal_power(base, exponent):
    """base**exponent on the principal branch with log(-r) = ln r + i*pi.

    Negating a complex with +0.0 imaginary part lands on the -0.0 side of
    the cut, which flips the branch; normalize that away so real negative
    bases behave like the continuation from above (x - i0 points map to
    -x + i0 bases).
    """
    b = complex(base)
    if b.imag == 0.0:
        b = complex(b.real, 0.0)
    return cmath.exp(complex(exponent) * cmath.log(b))
