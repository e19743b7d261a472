"""Exact scalar arithmetic over Q(t).

Every Hom space in the library is a module over the field of rational
functions in the single parameter t with rational coefficients.  Scalars come
in three layers:

  Fraction            -- arbitrary-precision rationals (stdlib)
  Poly                -- univariate polynomials in t, dense coefficient tuple
  RatFunc             -- reduced fractions of Polys with monic denominator

A RatFunc is always canonical: gcd(num, den) = 1 and den is monic, so
equality and hashing are structural.  All values are immutable.

Text format (used by the CLI): ``(num)/(den)`` where each side is a sparse
sum of terms ``c``, ``c*t``, ``c*t^k``.  Bare integers, ``a/b`` rationals and
denominator-free polynomials are accepted as shorthand on input.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction, "RatFunc"]


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a pole."""


class Poly:
    """Polynomial in t with Fraction coefficients, stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial having degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def scale(self, c: Fraction | int) -> "Poly":
        c = Fraction(c)
        return Poly(tuple(a * c for a in self.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        d, lead = other.degree, other.leading()
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[i + shift] -= factor * c
        return Poly(q), Poly(rem)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading()
        return self if lead == 1 else self.scale(1 / lead)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, divmod(a, b)[1]
        return a.monic()

    def __call__(self, t0: Fraction | int) -> Fraction:
        t0 = Fraction(t0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        return acc

    def at_minus_t(self) -> "Poly":
        """Substitute t -> -t."""
        return Poly(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                tk = "t" if k == 1 else f"t^{k}"
                body = tk if mag == 1 else f"{mag}*{tk}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


POLY_ZERO = Poly()
POLY_ONE = Poly((1,))
POLY_T = Poly((0, 1))


def poly_t_power(k: int) -> Poly:
    if k < 0:
        raise ValueError("negative power of t is not a polynomial")
    return Poly((0,) * k + (1,))


class RatFunc:
    """Reduced fraction of two Polys; the scalar field Q(t)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc):
            if den is not None:
                raise TypeError("RatFunc(RatFunc, den) is not supported")
            self.num, self.den = num.num, num.den
            return
        num = _as_poly(num)
        den = POLY_ONE if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = num.gcd(den)
        if g.degree > 0:
            num = divmod(num, g)[0]
            den = divmod(den, g)[0]
        lead = den.leading()
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.num, self.den = num, den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFunc(Poly((other,)))
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __add__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other) -> "RatFunc":
        return _as_ratfunc(other) + (-self)

    def __mul__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return _as_ratfunc(other) / self

    def eval(self, t0: Fraction | int) -> Fraction:
        """Exact value at t = t0; raises PoleError at a pole."""
        t0 = Fraction(t0)
        d = self.den(t0)
        if d == 0:
            raise PoleError(f"pole at t = {t0}")
        return self.num(t0) / d

    def at_minus_t(self) -> "RatFunc":
        return RatFunc(self.num.at_minus_t(), self.den.at_minus_t())

    def is_polynomial(self) -> bool:
        return self.den == POLY_ONE

    def __str__(self) -> str:
        # Display with integer coefficients: scale num and den jointly so the
        # pair is integral with content 1 (parses back to the same value).
        if self.is_zero():
            return "(0)/(1)"
        coeffs = list(self.num.coeffs) + list(self.den.coeffs)
        lcm_den = 1
        for c in coeffs:
            lcm_den = lcm_den * c.denominator // _gcd(lcm_den, c.denominator)
        gcd_num = 0
        for c in coeffs:
            gcd_num = _gcd(gcd_num, abs(c.numerator))
        scale = Fraction(lcm_den, gcd_num or 1)
        return f"({self.num.scale(scale)})/({self.den.scale(scale)})"

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly((x,))
    raise TypeError(f"cannot interpret {x!r} as a polynomial in t")


def _as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction, Poly)):
        return RatFunc(x)
    raise TypeError(f"cannot interpret {x!r} as a rational function in t")


RF_ZERO = RatFunc(POLY_ZERO)
RF_ONE = RatFunc(POLY_ONE)
RF_T = RatFunc(POLY_T)


def t_power(k: int) -> RatFunc:
    """t^k for k >= 0."""
    return RatFunc(poly_t_power(k))


def interpolate(points: Sequence[tuple[Fraction | int, Fraction | int]]) -> Poly:
    """Unique polynomial of degree < len(points) through the given points.

    Lagrange interpolation over exact rationals; the abscissae must be
    pairwise distinct.
    """
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be distinct")
    total = POLY_ZERO
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = POLY_ONE
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * Poly((-xj, 1))
            denom *= xi - xj
        total = total + basis.scale(yi / denom)
    return total


# -- text parsing -----------------------------------------------------------

_TERM_RE = re.compile(
    r"""
    (?P<sign>[+-]?)\s*
    (?:
        (?P<coeff>\d+(?:/\d+)?)\s*(?:\*\s*(?P<tpow1>t(?:\^\d+)?))?
      | (?P<tpow2>t(?:\^\d+)?)
    )
    """,
    re.VERBOSE,
)


def parse_poly(text: str) -> Poly:
    """Parse a sparse polynomial like ``t^2 - 3*t + 1/2``."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        sign_txt = m.group("sign")
        if not first and sign_txt == "":
            raise ValueError(f"missing +/- between terms in {text!r}")
        sign = -1 if sign_txt == "-" else 1
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        tpow = m.group("tpow1") or m.group("tpow2")
        k = 0 if tpow is None else (1 if tpow == "t" else int(tpow[2:]))
        coeffs[k] = coeffs.get(k, Fraction(0)) + sign * coeff
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
        first = False
    deg = max(coeffs) if coeffs else 0
    return Poly(tuple(coeffs.get(k, Fraction(0)) for k in range(deg + 1)))


def _split_fraction_bar(s: str) -> tuple[str, str] | None:
    """Split at the single '/' outside parentheses, if any.

    A '/' squeezed between two digits is a rational coefficient ("1/2"),
    not the fraction bar, and is left to the polynomial parser.
    """
    depth = 0
    slash = None
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if 0 < i < len(s) - 1 and s[i - 1].isdigit() and s[i + 1].isdigit():
                continue
            if slash is not None:
                return None
            slash = i
    if slash is None:
        return None
    return s[:slash], s[slash + 1 :]


def _strip_parens(s: str) -> str:
    s = s.strip()
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(s) - 1:
                    return s
        s = s[1:-1].strip()
    return s


def parse_ratfunc(text: str) -> RatFunc:
    """Parse ``(num)/(den)``; integers, ``a/b`` and bare polynomials also work."""
    s = text.strip()
    split = _split_fraction_bar(s)
    if split is None:
        return RatFunc(parse_poly(_strip_parens(s)))
    num_txt, den_txt = split
    return RatFunc(parse_poly(_strip_parens(num_txt)), parse_poly(_strip_parens(den_txt)))


def format_ratfunc(f: RatFunc) -> str:
    return str(f)
