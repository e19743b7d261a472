"""Exact scalar arithmetic: canonical forms, evaluation, interpolation."""

from fractions import Fraction

import pytest

from interpcat.ratfunc import (
    PoleError,
    Poly,
    RatFunc,
    RF_ONE,
    RF_T,
    format_ratfunc,
    interpolate,
    parse_poly,
    parse_ratfunc,
    t_power,
)

t = RF_T


class TestArithmetic:
    def test_inverse_pair(self):
        assert t * (RF_ONE / t) == RF_ONE

    def test_factorization_division(self):
        assert (t * t - 1) / (t - 1) == t + 1

    def test_mixed_subtraction(self):
        assert (t * t + t) / 2 - t == RatFunc(Poly((0, -1, 1)), Poly((2,)))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            t / RatFunc(0)
        with pytest.raises(ZeroDivisionError):
            RatFunc(Poly((1,)), Poly(()))

    def test_canonical_form_is_structural(self):
        a = RatFunc(Poly((0, 2)), Poly((0, 0, 2)))  # 2t / 2t^2
        b = RF_ONE / t
        assert a == b and hash(a) == hash(b)
        assert a.den.leading() == 1

    def test_scalar_coercion(self):
        assert 1 + t == t + 1
        assert 2 * t == t + t
        assert t - Fraction(1, 2) == RatFunc(Poly((Fraction(-1, 2), 1)))


class TestEval:
    def test_hook_dimension_point(self):
        # generic dimension of the (n-2, 2) family evaluated at n = 4
        f = RatFunc(Poly((0, -3, 1)), Poly((2,)))
        assert f.eval(4) == 2

    def test_root(self):
        assert (t - 1).eval(1) == 0

    def test_pole(self):
        with pytest.raises(PoleError):
            (RF_ONE / t).eval(0)

    def test_rational_point(self):
        assert ((t + 1) / (t - 1)).eval(Fraction(1, 2)) == -3


class TestInterpolate:
    def test_hook_family(self):
        # dims of the (n-2, 2) irreps at n = 4, 5, 6 pin down t(t-3)/2
        p = interpolate([(4, 2), (5, 5), (6, 9)])
        assert p == Poly((0, Fraction(-3, 2), Fraction(1, 2)))

    def test_linear(self):
        assert interpolate([(0, 0), (1, 1)]) == Poly((0, 1))

    def test_double_root(self):
        p = interpolate([(1, 0), (2, 0), (3, 1)])
        assert p == Poly((1, Fraction(-3, 2), Fraction(1, 2)))
        assert p(1) == 0 and p(2) == 0 and p(3) == 1

    def test_duplicate_abscissae(self):
        with pytest.raises(ValueError):
            interpolate([(1, 2), (1, 3)])

    def test_reproduces_points(self):
        pts = [(-2, 7), (0, Fraction(1, 3)), (5, -1), (9, 0)]
        p = interpolate(pts)
        assert all(p(x) == y for x, y in pts)


class TestText:
    def test_display_matches_cli_contract(self):
        assert format_ratfunc((t * t - 3 * t) / 2) == "(t^2 - 3*t)/(2)"

    def test_parse_full_form(self):
        assert parse_ratfunc("(t^2 - 3*t)/(2)") == (t * t - 3 * t) / 2

    def test_parse_shorthands(self):
        assert parse_ratfunc("5") == RatFunc(5)
        assert parse_ratfunc("3/4") == RatFunc(Fraction(3, 4))
        assert parse_ratfunc("t^2 + 1") == t * t + 1
        assert parse_ratfunc("-t + 1/2") == RatFunc(Poly((Fraction(1, 2), -1)))

    def test_roundtrip(self):
        for f in [t_power(3), (t + 1) / (t * t - 2), RatFunc(0), RatFunc(Fraction(-7, 3))]:
            assert parse_ratfunc(format_ratfunc(f)) == f

    def test_parse_garbage(self):
        with pytest.raises(ValueError):
            parse_poly("t^")
        with pytest.raises(ValueError):
            parse_poly("")
        with pytest.raises(ValueError):
            parse_poly("2 x")
