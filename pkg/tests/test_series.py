import json
import math
from fractions import Fraction as F

import pytest

from chisholm import series
from chisholm.series import (
    UNKNOWN,
    DoubleSeries,
    SeparableMap,
    UniSeries,
    add_polynomial,
    compose_separable,
    has_chisholm_support,
    homographic_map,
    rotate_pm,
    scale_to_unit_constant,
    slice_y0,
    truncated_reciprocal,
)
from chisholm.errors import NotNormalized
from chisholm import generators as g


def exp_xy(degree):
    # exp(x+y): c[m,n] = 1/(m! n!)
    coeffs = {
        (m, n): F(1, math.factorial(m) * math.factorial(n))
        for m in range(degree + 1)
        for n in range(degree + 1 - m)
    }
    return DoubleSeries((0, 0), degree, coeffs)


def geometric(degree):
    coeffs = {(m, n): F(1) for m in range(degree + 1)
              for n in range(degree + 1 - m)}
    return DoubleSeries((0, 0), degree, coeffs)


class TestCoefficient:
    def test_exp_mixed_term(self):
        assert exp_xy(4).coefficient(1, 1) == 1

    def test_geometric_term(self):
        assert geometric(3).coefficient(2, 1) == 1

    def test_outside_support_is_unknown(self):
        assert geometric(3).coefficient(4, 0) is UNKNOWN

    def test_known_zero_is_zero(self):
        s = DoubleSeries((0, 0), 3, {(1, 0): F(2)})
        assert s.coefficient(0, 1) == 0


class TestSupport:
    def test_exp_degree3_supports_order1(self):
        ok, missing = has_chisholm_support(exp_xy(3), 1)
        assert ok and missing == []

    def test_degree_2m_misses_mixed_top_terms(self):
        for M in (1, 2, 3):
            ok, missing = has_chisholm_support(geometric(2 * M), M)
            assert not ok
            expected = [(m, 2 * M + 1 - m) for m in range(1, 2 * M + 1)]
            assert sorted(missing) == sorted(expected)

    def test_full_degree_2m_plus_1_is_enough(self):
        for M in (1, 2):
            ok, missing = has_chisholm_support(geometric(2 * M + 1), M)
            assert ok

    def test_pure_top_powers_not_required(self):
        M = 2
        top = 2 * M + 1
        known = {(m, n) for m in range(top + 1) for n in range(top + 1 - m)}
        known -= {(top, 0), (0, top)}
        coeffs = {k: F(1) for k in known}
        s = DoubleSeries((0, 0), top, coeffs, known=known)
        ok, _ = has_chisholm_support(s, M)
        assert ok

    def test_monotone_in_order(self):
        s = geometric(9)
        for M in (1, 2, 3, 4):
            ok, _ = has_chisholm_support(s, M)
            assert ok == (2 * M + 1 <= 9)


class TestScaleAndOffset:
    def test_unit_constant_unchanged(self):
        s = exp_xy(3)
        out, scale = scale_to_unit_constant(s)
        assert scale == 1 and out.coefficient(2, 1) == s.coefficient(2, 1)

    def test_double_exp_scales_back(self):
        s = exp_xy(3)
        doubled = DoubleSeries((0, 0), 3, {k: 2 * v for (k0, k1, v) in s.terms()
                                           for k in [(k0, k1)]})
        out, scale = scale_to_unit_constant(doubled)
        assert scale == 2
        assert out.coefficient(1, 1) == s.coefficient(1, 1)

    def test_zero_constant_raises(self):
        with pytest.raises(NotNormalized):
            scale_to_unit_constant(g.li22(6))

    def test_li22_offset(self):
        s = add_polynomial(g.li22(6), {(0, 0): F(1), (1, 0): F(1), (0, 1): F(1)})
        assert s.coefficient(0, 0) == 1
        assert s.coefficient(1, 0) == 1
        assert s.coefficient(0, 1) == 1
        assert s.coefficient(2, 1) == F(1, 4)

    def test_zero_polynomial_is_identity(self):
        s = exp_xy(3)
        out = add_polynomial(s, {})
        assert out.terms() == s.terms()


class TestRotate:
    def test_z1_maps_to_x_minus_y(self):
        s = DoubleSeries((0, 0), 2, {(1, 0): F(1)})
        out = rotate_pm(s)
        assert out.coefficient(1, 0) == 1
        assert out.coefficient(0, 1) == -1

    def test_product_gives_difference_of_squares(self):
        s = DoubleSeries((0, 0), 2, {(1, 1): F(1)})
        out = rotate_pm(s)
        assert out.coefficient(2, 0) == 1
        assert out.coefficient(0, 2) == -1
        assert out.coefficient(1, 1) == 0

    def test_sum_of_squares(self):
        s = DoubleSeries((0, 0), 2, {(2, 0): F(1), (0, 2): F(1)})
        out = rotate_pm(s)
        assert out.coefficient(2, 0) == 2
        assert out.coefficient(0, 2) == 2
        assert out.coefficient(1, 1) == 0

    def test_inverse_substitution_restores(self):
        # x -> (z1+z2)/2, y -> (z2-z1)/2 realized as linear compose
        s = g.cm2_function(6)
        rotated = rotate_pm(s)
        half = F(1, 2)
        sx = UniSeries(0, [F(0), half, half])      # not separable; do by hand
        # verify via direct double substitution instead
        back = {}
        for (m, n, c) in rotated.terms():
            # (x, y) = ((z1+z2)/2, (z2-z1)/2)
            for i in range(m + 1):
                for j in range(n + 1):
                    k1 = (m - i) + j                 # z1 exponents
                    k2 = i + (n - j)                 # z2 exponents
                    sign = (-1) ** j
                    w = (
                        c
                        * math.comb(m, i)
                        * math.comb(n, j)
                        * sign
                        * half ** (m + n)
                    )
                    if k1 + k2 <= rotated.degree:
                        back[(k1, k2)] = back.get((k1, k2), 0) + w
        for (m, n, c) in s.terms():
            assert back.get((m, n), 0) == c, (m, n)


class TestCompose:
    def test_identity_map(self):
        s = exp_xy(4)
        ident = SeparableMap(UniSeries(0, [F(0), F(1)]), UniSeries(0, [F(0), F(1)]))
        out = compose_separable(s, ident, 4)
        assert out.terms() == s.terms()

    def test_geometric_expansion_of_homographic_map(self):
        s = DoubleSeries((0, 0), 3, {(1, 0): F(1)})
        m = homographic_map(F(2), F(3), 3)
        out = compose_separable(s, m, 3)
        assert out.coefficient(1, 0) == 2
        assert out.coefficient(2, 0) == 6
        assert out.coefficient(3, 0) == 18

    def test_product_through_unit_map(self):
        s = DoubleSeries((0, 0), 3, {(1, 1): F(1)})
        m = homographic_map(F(1), F(1), 3)
        out = compose_separable(s, m, 3)
        assert out.coefficient(1, 1) == 1
        assert out.coefficient(2, 1) == 1
        assert out.coefficient(1, 2) == 1

    def test_constant_term_must_vanish(self):
        with pytest.raises(ValueError):
            SeparableMap(UniSeries(0, [F(1), F(1)]), UniSeries(0, [F(0), F(1)]))


class TestReciprocal:
    def test_reciprocal_of_one(self):
        s = DoubleSeries((0, 0), 3, {(0, 0): F(1)})
        out = truncated_reciprocal(s, 3)
        assert out.terms() == [(0, 0, F(1))]

    def test_reciprocal_of_product_form(self):
        s = DoubleSeries(
            (0, 0), 4,
            {(0, 0): F(1), (1, 0): F(-1), (0, 1): F(-1), (1, 1): F(1)},
        )
        out = truncated_reciprocal(s, 4)
        for m in range(5):
            for n in range(5 - m):
                assert out.coefficient(m, n) == 1

    def test_exp_reciprocal_flips_sign(self):
        s = exp_xy(5)
        out = truncated_reciprocal(s, 5)
        for (m, n, c) in out.terms():
            assert c == F((-1) ** (m + n), math.factorial(m) * math.factorial(n))

    def test_involution(self):
        s = g.cm2_function(7)
        twice = truncated_reciprocal(truncated_reciprocal(s, 7), 7)
        assert twice.terms() == s.terms()

    def test_needs_unit_constant(self):
        with pytest.raises(NotNormalized):
            truncated_reciprocal(geometric(3), 3)


class TestSlice:
    def test_exp_slice(self):
        out = slice_y0(exp_xy(4))
        assert out.coeffs == [F(1, math.factorial(m)) for m in range(5)]

    def test_li22_slice_is_zero(self):
        out = slice_y0(g.li22(8))
        assert all(v == 0 for v in out.coeffs)

    def test_symmetric_slice_matches_swap(self):
        s = exp_xy(4)
        sx = slice_y0(s)
        swapped = DoubleSeries((0, 0), 4, {(n, m): v for (m, n, v) in s.terms()})
        assert sx.coeffs == slice_y0(swapped).coeffs


class TestJson:
    def test_round_trip_exact(self, tmp_path):
        s = g.li22(7)
        path = tmp_path / "s.json"
        series.write_series(s, path)
        back = series.read_series(path)
        assert back.terms() == s.terms()
        assert back.center == s.center and back.degree == s.degree

    def test_round_trip_float(self, tmp_path):
        s = series.to_float(g.exp_half_sum((3, 6), 5))
        path = tmp_path / "s.json"
        series.write_series(s, path)
        back = series.read_series(path)
        assert back.terms() == s.terms()

    def test_univariate_round_trip(self, tmp_path):
        s = g.gauss_2f1(F(1, 2), F(1, 3), F(1, 5), 8)
        path = tmp_path / "u.json"
        series.write_series(s, path)
        back = series.read_series(path)
        assert isinstance(back, UniSeries)
        assert back.coeffs == s.coeffs

    def test_scalar_encoding(self, tmp_path):
        s = DoubleSeries((0, 0), 2, {(1, 0): F(1, 3), (0, 1): F(2)})
        path = tmp_path / "s.json"
        series.write_series(s, path)
        doc = json.loads(path.read_text())
        values = {(m, n): v for m, n, v in doc["terms"]}
        assert values[(1, 0)] == "1/3"
        assert values[(0, 1)] == "2/1"
