"""Exact univariate polynomials and rational functions over the integers.

Coefficients are Python ints, so there is no overflow.  A
:class:`RationalFunction` is always kept in a canonical form:

* numerator and denominator are coprime over Q,
* the combined content of both is 1,
* the lowest-order nonzero coefficient of the denominator is positive.

Two rational functions are equal exactly when their canonical forms agree
structurally.  The module also provides the word-counting building blocks
``T_u``, ``f(u, v)``, the elementary symmetric functions and the ``g``/``h``
quotients used for exponent-window word counts.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Poly",
    "RationalFunction",
    "NotExpandableError",
    "t_poly",
    "f_poly",
    "elem_sym",
    "g_func",
    "h_func",
    "taylor",
    "add",
    "sub",
    "mul",
    "div",
    "equals",
]


class NotExpandableError(ArithmeticError):
    """Raised when a power series expansion at t = 0 does not exist."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Dense integer polynomial in ``t``; ``coeffs[i]`` is the coefficient of t^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)

    # construction helpers
    @classmethod
    def const(cls, c: int) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, deg: int, c: int = 1) -> Poly:
        if deg < 0:
            raise ValueError("negative degree")
        return cls([0] * deg + [c])

    # basic queries
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def low_order(self) -> int:
        """Index of the lowest nonzero coefficient (-1 for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> Poly:
        c = self.content()
        if c <= 1:
            return self
        return Poly(x // c for x in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # arithmetic
    def __add__(self, other: Poly | int) -> Poly:
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Poly | int) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: Poly | int) -> Poly:
        return _as_poly(other) - self

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale_div(self, c: int) -> Poly:
        """Exact division of every coefficient by the integer ``c``."""
        out = []
        for x in self.coeffs:
            q, r = divmod(x, c)
            if r:
                raise ArithmeticError(f"{c} does not divide {self}")
            out.append(q)
        return Poly(out)

    def pseudo_rem(self, other: Poly) -> Poly:
        """Remainder of self by other, up to a nonzero integer factor."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo-remainder by zero polynomial")
        r = list(self.coeffs)
        b = other.coeffs
        db, lb = len(b) - 1, b[-1]
        while len(r) - 1 >= db and r:
            shift = len(r) - 1 - db
            lr = r[-1]
            r = [x * lb for x in r]
            for i, y in enumerate(b):
                r[shift + i] -= lr * y
            while r and r[-1] == 0:
                r.pop()
            if r:
                g = math.gcd(*r)
                if g > 1:
                    r = [x // g for x in r]
        return Poly(r)

    def exact_div(self, other: Poly) -> Poly:
        """Quotient self/other, which must be exact over the integers."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coeffs)
        b = other.coeffs
        db, lb = len(b) - 1, b[-1]
        if len(r) - 1 < db:
            if r:
                raise ArithmeticError("inexact polynomial division")
            return Poly()
        q = [0] * (len(r) - db)
        for shift in range(len(r) - 1 - db, -1, -1):
            c, rem = divmod(r[shift + db], lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            q[shift] = c
            if c:
                for i, y in enumerate(b):
                    r[shift + i] -= c * y
        if any(r):
            raise ArithmeticError("inexact polynomial division")
        return Poly(q)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        return render_poly(self)


def _as_poly(x: Poly | int) -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd of two polynomials (positive leading coefficient).

    Euclid on primitive parts with pseudo-division.
    """
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        if b.degree == 0:
            return Poly.const(1)
        a, b = b, a.pseudo_rem(b).primitive()
    if a.is_zero():
        return Poly.const(1)
    return -a if a.lead() < 0 else a


def render_poly(p: Poly, var: str = "t", power: str = "^") -> str:
    """Plain rendering in ascending degree, e.g. ``1 + 2*t - t^3``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for deg, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            mono = var if deg == 1 else f"{var}{power}{deg}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def _latex_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for deg, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            mono = "t" if deg == 1 else f"t^{{{deg}}}"
            body = mono if mag == 1 else f"{mag} {mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(parts)


class RationalFunction:
    """Quotient ``num/den`` of integer polynomials in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | int, den: Poly | int = 1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> RationalFunction:
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: RationalFunction | Poly | int) -> RationalFunction:
        other = _as_rf(other)
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero():
            return other
        if c.is_zero():
            return self
        g = poly_gcd(b, d)
        if g.degree > 0:
            b1, d1 = b.exact_div(g), d.exact_div(g)
            return RationalFunction(a * d1 + c * b1, b1 * d)
        return RationalFunction(a * d + c * b, b * d)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other: RationalFunction | Poly | int) -> RationalFunction:
        return self + (-_as_rf(other))

    def __rsub__(self, other: RationalFunction | Poly | int) -> RationalFunction:
        return _as_rf(other) - self

    def __mul__(self, other: RationalFunction | Poly | int) -> RationalFunction:
        other = _as_rf(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction(0)
        # cross-cancel first to keep degrees small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        a = self.num.exact_div(g1) if g1.degree > 0 else self.num
        d = other.den.exact_div(g1) if g1.degree > 0 else other.den
        c = other.num.exact_div(g2) if g2.degree > 0 else other.num
        b = self.den.exact_div(g2) if g2.degree > 0 else self.den
        return RationalFunction(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalFunction | Poly | int) -> RationalFunction:
        other = _as_rf(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return self * RationalFunction._raw(other.den, other.num)

    def __rtruediv__(self, other: RationalFunction | Poly | int) -> RationalFunction:
        return _as_rf(other) / self

    def __pow__(self, e: int) -> RationalFunction:
        if e < 0:
            return RationalFunction(1) / (self ** -e)
        return RationalFunction(self.num ** e, self.den ** e)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Poly)):
            other = _as_rf(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def cross_equal(self, num: Poly, den: Poly) -> bool:
        """Equality with num/den tested by cross-multiplication."""
        return self.num * den == num * self.den

    def __repr__(self) -> str:
        return f"RationalFunction({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self) -> str:
        return self.render()

    def render(self, fmt: str = "plain") -> str:
        """Render as ``plain``, ``latex`` or ``factored`` text."""
        if fmt == "plain":
            if self.den == Poly.const(1):
                return render_poly(self.num)
            return f"({render_poly(self.num)}) / ({render_poly(self.den)})"
        if fmt == "latex":
            return f"\\frac{{{_latex_poly(self.num)}}}{{{_latex_poly(self.den)}}}"
        if fmt == "factored":
            return _render_factored(self)
        raise ValueError(f"unknown format {fmt!r}")


def _render_factored(rf: RationalFunction) -> str:
    # Display only; equality is never decided on this string.
    import sympy

    t = sympy.Symbol("t")
    num = sum(c * t**i for i, c in enumerate(rf.num.coeffs))
    den = sum(c * t**i for i, c in enumerate(rf.den.coeffs))
    return str(sympy.factor(num / den)).replace("**", "^")


def _as_rf(x: RationalFunction | Poly | int) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction._raw(_as_poly(x), Poly.const(1))


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return Poly(), Poly.const(1)
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = num.exact_div(g), den.exact_div(g)
    c = math.gcd(num.content(), den.content())
    if c > 1:
        num, den = num.scale_div(c), den.scale_div(c)
    if den.coeffs[den.low_order()] < 0:
        num, den = -num, -den
    return num, den


# ---------------------------------------------------------------------------
# building blocks for window word counts


def t_poly(u: int) -> Poly:
    """``T_u = t + t^2 + ... + t^u`` with ``T_0 = 0``."""
    if u < 0:
        raise ValueError("u must be nonnegative")
    return Poly([0] + [1] * u)


def f_poly(u: int, v: int) -> Poly:
    """``f(u, v) = T_u + T_v``: syllable exponents in ``[-u, v]`` minus zero."""
    return t_poly(u) + t_poly(v)


def elem_sym(i: int, xs: Sequence[Poly]) -> Poly:
    """Elementary symmetric polynomial of degree ``i`` in ``xs``.

    Coefficient extraction from ``prod_j (1 + x_j Y)`` in an auxiliary ``Y``.
    """
    k = len(xs)
    if not 0 <= i <= k:
        raise ValueError(f"degree {i} out of range for {k} arguments")
    return _elem_sym_all(xs)[i]


def _elem_sym_all(xs: Sequence[Poly]) -> list[Poly]:
    e = [Poly.const(1)]
    for x in xs:
        nxt = e + [Poly()]
        for j in range(1, len(nxt)):
            nxt[j] = nxt[j] + e[j - 1] * x
        e = nxt
    return e


def _pair_f(pairs: Sequence[tuple[int, int]]) -> list[Poly]:
    return [f_poly(u, v) for u, v in pairs]


def g_denominator(fs: Sequence[Poly]) -> Poly:
    """``1 - sum_{i>=2} (i-1) F^i(fs)``."""
    e = _elem_sym_all(fs)
    acc = Poly.const(1)
    for i in range(2, len(fs) + 1):
        acc = acc - e[i] * (i - 1)
    return acc


def g_func(pairs: Sequence[tuple[int, int]]) -> RationalFunction:
    """``g_k = 1 / (1 - sum_{i=2}^{k} (i-1) F_k^i(f(u_1,v_1), ..., f(u_k,v_k)))``."""
    if not pairs:
        raise ValueError("g_func needs at least one window")
    return RationalFunction(1, g_denominator(_pair_f(pairs)))


def h_func(pairs: Sequence[tuple[int, int]]) -> RationalFunction:
    """``h_k = prod_j (1 + f(u_j, v_j)) * g_k``."""
    if not pairs:
        raise ValueError("h_func needs at least one window")
    fs = _pair_f(pairs)
    num = Poly.const(1)
    for x in fs:
        num = num * (x + 1)
    return RationalFunction(num, g_denominator(fs))


def taylor(rf: RationalFunction, L: int) -> list[int]:
    """First ``L + 1`` power series coefficients of ``rf`` at t = 0."""
    num, den = rf.num.coeffs, rf.den.coeffs
    if not den or den[0] == 0:
        raise NotExpandableError("denominator vanishes at t = 0")
    d0 = den[0]
    out: list = []
    for i in range(L + 1):
        acc = num[i] if i < len(num) else 0
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        q, r = divmod(acc, d0)
        out.append(q if r == 0 else Fraction(acc, d0))
    return out


# functional aliases
def add(a, b) -> RationalFunction:
    return _as_rf(a) + b


def sub(a, b) -> RationalFunction:
    return _as_rf(a) - b


def mul(a, b) -> RationalFunction:
    return _as_rf(a) * b


def div(a, b) -> RationalFunction:
    return _as_rf(a) / b


def equals(a, b) -> bool:
    return _as_rf(a) == _as_rf(b)
