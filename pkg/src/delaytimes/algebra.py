"""Exact arithmetic: polynomials, rational functions and truncated power series.

Scalars are :class:`fractions.Fraction`.  A :class:`Poly` is a dense
univariate polynomial with ascending coefficients; a :class:`RatFunc` is a
reduced quotient of two polynomials with a monic denominator.  A
:class:`TruncSeries` carries an explicit truncation ``order``: coefficients
beyond it are *unknown*, not zero, and every binary operation truncates to
the smaller order of its operands.

:class:`AlgebraicSeries` represents ``a(z) + b(z) * sqrt(y(z))`` with
``y = z**2 - 6*z + 1`` and the branch ``sqrt(y(0)) = +1``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "Poly",
    "RatFunc",
    "TruncSeries",
    "SpectralCurve",
    "AlgebraicSeries",
    "SPECTRAL_CURVE",
    "ratfunc_reduce",
    "series_sqrt",
    "series_integrate",
    "expand_in_invN",
    "is_integer",
]

VARIABLES = ("N", "z", "zeta", "s", "x")


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


def is_integer(q: Scalar) -> bool:
    """True when ``q`` is an integer after canonicalization (denominator 1)."""
    return isinstance(q, int) or q.denominator == 1


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial over Q, coefficients in ascending degree."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "N"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    # construction ---------------------------------------------------------
    @classmethod
    def const(cls, c: Scalar, var: str = "N") -> Poly:
        return cls([c], var)

    @classmethod
    def gen(cls, var: str = "N") -> Poly:
        return cls([0, 1], var)

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], var: str = "N") -> Poly:
        p = cls([1], var)
        for r in roots:
            p = p * cls([-_frac(r), 1], var)
        return p

    # basic properties ------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]}, var={self.var!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" + (f"*{mono}" if mono else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic ------------------------------------------------------------
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other], self.var)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly((self[i] + o[i] for i in range(n)), self.var)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly((-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly([1], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> Poly:
        c = _frac(c)
        return Poly((c * a for a in self.coeffs), self.var)

    def shift_degree(self, m: int) -> Poly:
        """Multiply by ``var**m``."""
        if not self.coeffs:
            return self
        return Poly([0] * m + list(self.coeffs), self.var)

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly([], self.var), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Poly(quot, self.var), Poly(rem[: len(other.coeffs) - 1], self.var)

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        return self.scale(1 / self.lc)

    def derivative(self) -> Poly:
        return Poly((i * c for i, c in enumerate(self.coeffs) if i), self.var)

    def primitive(self) -> Poly:
        """Scale to coprime integer coefficients with positive leading term."""
        if not self.coeffs:
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Poly((Fraction(v, g) for v in ints), self.var)

    def gcd(self, other: Poly) -> Poly:
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self.primitive(), other.primitive()
        while not b.is_zero():
            a, b = b, (a % b).primitive()
        return a.monic()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    return a.gcd(b)


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """Reduced rational function ``num/den`` with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        if not isinstance(num, Poly):
            num = Poly([num], den.var if isinstance(den, Poly) else "N")
        if den is None:
            den = Poly([1], num.var)
        elif not isinstance(den, Poly):
            den = Poly([den], num.var)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def var(cls, name: str = "N") -> RatFunc:
        return cls(Poly.gen(name), Poly([1], name), _reduced=True)

    @property
    def variable(self) -> str:
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Poly)):
            return self == RatFunc(other if isinstance(other, Poly) else Poly([other], self.variable))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc(({self.num}) / ({self.den}))"

    def __str__(self) -> str:
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def _coerce(self, other) -> RatFunc:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other, Poly([1], other.var), _reduced=True)
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly([other], self.variable), Poly([1], self.variable), _reduced=True)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        # cross-cancel first to keep intermediate degrees low
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        n1, d2 = self.num // g1, o.den // g1
        n2, d1 = o.num // g2, self.den // g2
        return RatFunc(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return self * RatFunc(o.den, o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> RatFunc:
        if n >= 0:
            return RatFunc(self.num**n, self.den**n, _reduced=True)
        return RatFunc(self.den ** (-n), self.num ** (-n))

    def poles(self) -> list[Fraction]:
        """Rational roots of the denominator (the only poles we can name exactly)."""
        return _rational_roots(self.den)

    def __call__(self, x):
        """Evaluate; raises ``ZeroDivisionError`` naming the pole if ``x`` is one."""
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {self.variable} = {x}")
        return self.num(x) / d

    evaluate = __call__


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return Poly([], num.var), Poly([1], num.var)
    g = num.gcd(den)
    if g.degree > 0:
        num, den = num // g, den // g
    lead = den.lc
    return num.scale(1 / lead), den.scale(1 / lead)


def ratfunc_reduce(num: Poly, den: Poly) -> RatFunc:
    """Return the canonical reduced form of ``num/den``."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    return RatFunc(num, den)


def _rational_roots(p: Poly) -> list[Fraction]:
    """Rational roots of ``p`` via the rational root theorem (with multiplicity dropped)."""
    if p.degree <= 0:
        return []
    q = p.primitive()
    cs = [int(c) for c in q.coeffs]
    roots: list[Fraction] = []
    low = 0
    while cs[low] == 0:
        low += 1
    if low:
        roots.append(Fraction(0))
    cs = cs[low:]
    if len(cs) <= 1:
        return roots
    a0, an = abs(cs[0]), abs(cs[-1])
    cand = set()
    for num in _divisors(a0):
        for den in _divisors(an):
            cand.add(Fraction(num, den))
            cand.add(Fraction(-num, den))
    poly = Poly(cs, p.var)
    roots.extend(r for r in sorted(cand) if poly(r) == 0)
    return roots


def _divisors(n: int) -> list[int]:
    out = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            out.append(n // d)
    return out


def expand_in_invN(r: RatFunc, g_max: int) -> list[Fraction]:
    """Coefficients ``c_0..c_gmax`` with ``r(N) = sum c_g N**-g + O(N**-(g_max+1))``.

    The expansion starts at ``N**(deg num - deg den)``; a positive leading
    exponent is rejected.  Computed by reversing both polynomials and dividing
    the resulting power series in ``x = 1/N``.
    """
    if r.den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if r.is_zero():
        return [Fraction(0)] * (g_max + 1)
    lead = r.num.degree - r.den.degree
    if lead > 0:
        raise ValueError(f"leading exponent N^{lead} is positive; not an expansion in 1/N")
    offset = -lead
    if offset > g_max:
        return [Fraction(0)] * (g_max + 1)
    order = g_max - offset
    rnum = TruncSeries(reversed(r.num.coeffs), order)
    rden = TruncSeries(reversed(r.den.coeffs), order)
    q = rnum / rden
    return [Fraction(0)] * offset + list(q.coeffs)


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


class TruncSeries:
    """Power series known exactly through ``z**order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < -1:
            order = -1
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.order = order

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> TruncSeries:
        return cls(p.coeffs[: order + 1], order)

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls([1], order)

    def __len__(self) -> int:
        return self.order + 1

    def __getitem__(self, i):
        if isinstance(i, slice):
            return self.coeffs[i]
        if i < 0:
            raise IndexError(i)
        if i > self.order:
            raise IndexError(f"coefficient {i} lies beyond truncation order {self.order}")
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1], order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # arithmetic ------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, Poly):
            return TruncSeries.from_poly(other, self.order)
        if isinstance(other, (int, Fraction)):
            return TruncSeries([other], self.order)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = min(self.order, o.order)
        return TruncSeries((self.coeffs[i] + o.coeffs[i] for i in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return TruncSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return TruncSeries((c * a for a in self.coeffs), self.order)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = min(self.order, o.order)
        a, b = self.coeffs, o.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += ai * b[j]
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> TruncSeries:
        a = self.coeffs
        if not a or a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            s = sum((a[j] * out[n - j] for j in range(1, n + 1)), Fraction(0))
            out.append(-s * inv0)
        return TruncSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / _frac(other))
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = min(self.order, o.order)
        return self.truncate(n) * o.truncate(n).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def mul_z(self, m: int) -> TruncSeries:
        """Multiply by ``z**m``; known coefficients extend by ``m``."""
        return TruncSeries([0] * m + list(self.coeffs), self.order + m)

    def derivative(self) -> TruncSeries:
        return TruncSeries((i * c for i, c in enumerate(self.coeffs) if i), self.order - 1)

    def integrate(self) -> TruncSeries:
        return series_integrate(self)

    def power(self, exponent) -> TruncSeries:
        """``self**exponent`` for a rational exponent; requires constant term 1.

        Uses the recurrence from ``f * g' = exponent * f' * g``.
        """
        e = _frac(exponent)
        a = self.coeffs
        if not a:
            return self
        if a[0] != 1:
            raise ValueError("branch undefined: constant term must be 1")
        out = [Fraction(1)]
        for n in range(1, self.order + 1):
            s = Fraction(0)
            for j in range(1, n + 1):
                if a[j]:
                    s += (e * j - (n - j)) * a[j] * out[n - j]
            out.append(s / n)
        return TruncSeries(out, self.order)

    def sqrt(self) -> TruncSeries:
        return series_sqrt(self)

    def to_poly(self, var: str = "z") -> Poly:
        return Poly(self.coeffs, var)


def series_sqrt(f: TruncSeries) -> TruncSeries:
    """Square root with ``g(0) = +1``; ``f`` must have constant term 1."""
    if not f.coeffs or f.coeffs[0] != 1:
        raise ValueError("branch undefined")
    a = f.coeffs
    g = [Fraction(1)]
    for n in range(1, f.order + 1):
        s = sum((g[j] * g[n - j] for j in range(1, n)), Fraction(0))
        g.append((a[n] - s) / 2)
    return TruncSeries(g, f.order)


def series_integrate(f: TruncSeries) -> TruncSeries:
    """Term-by-term antiderivative vanishing at 0; the order grows by one."""
    return TruncSeries([0] + [c / (i + 1) for i, c in enumerate(f.coeffs)], f.order + 1)


# ---------------------------------------------------------------------------
# Spectral curve and the quadratic extension by sqrt(y)
# ---------------------------------------------------------------------------


class SpectralCurve:
    """``y(z) = z**2 - 6z + 1`` with edges ``3 ± 2*sqrt(2)``.

    The edges are held exactly as the pair ``(3, 2)`` meaning ``3 ± 2*sqrt(2)``.
    """

    y = Poly([1, -6, 1], "z")
    edges = (3, 2)

    def edge(self, sign: int = -1, dps: int = 50):
        import mpmath

        with mpmath.workdps(dps):
            a, b = self.edges
            return mpmath.mpf(a) + sign * b * mpmath.sqrt(2)

    def series(self, order: int) -> TruncSeries:
        return TruncSeries.from_poly(self.y, order)

    def sqrt_series(self, order: int) -> TruncSeries:
        return series_sqrt(self.series(order))

    def power_series(self, exponent, order: int) -> TruncSeries:
        """Series of ``y(z)**exponent`` on the principal branch."""
        e = _frac(exponent)
        if e.denominator == 1 and e >= 0:
            return TruncSeries.from_poly(self.y ** int(e), order)
        return self.series(order).power(e)


SPECTRAL_CURVE = SpectralCurve()


class AlgebraicSeries:
    """``a(z) + b(z) * sqrt(y(z))`` with ``a``, ``b`` truncated series."""

    __slots__ = ("a", "b")

    def __init__(self, a: TruncSeries, b: TruncSeries | None = None):
        if b is None:
            b = TruncSeries([], a.order)
        self.a = a
        self.b = b

    @property
    def order(self) -> int:
        return min(self.a.order, self.b.order)

    def __add__(self, other):
        if isinstance(other, AlgebraicSeries):
            return AlgebraicSeries(self.a + other.a, self.b + other.b)
        return AlgebraicSeries(self.a + other, self.b)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicSeries(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraicSeries):
            y = SPECTRAL_CURVE.y
            return AlgebraicSeries(
                self.a * other.a + self.b * other.b * y,
                self.a * other.b + self.b * other.a,
            )
        return AlgebraicSeries(self.a * other, self.b * other)

    __rmul__ = __mul__

    def mul_sqrt_y(self, power: int = 1) -> AlgebraicSeries:
        """Multiply by ``y**(power/2)``; negative powers divide."""
        y = SPECTRAL_CURVE.y
        out = self
        for _ in range(abs(power)):
            if power > 0:
                out = AlgebraicSeries(out.b * y, out.a)
            else:
                inv_y = TruncSeries.from_poly(y, out.order).inverse()
                out = AlgebraicSeries(out.b, out.a * inv_y)
        return out

    def mul_z(self, m: int) -> AlgebraicSeries:
        return AlgebraicSeries(self.a.mul_z(m), self.b.mul_z(m))

    def derivative(self) -> AlgebraicSeries:
        # d(b sqrt y) = (b' + b y' / (2y)) sqrt y
        y = SPECTRAL_CURVE.y
        b = self.b
        inv_y = TruncSeries.from_poly(y, b.order).inverse()
        return AlgebraicSeries(self.a.derivative(), b.derivative() + b * y.derivative() * inv_y / 2)

    def to_series(self) -> TruncSeries:
        """Plain expansion ``a + b * sqrt_series(y)``."""
        n = self.order
        return self.a.truncate(n) + self.b.truncate(n) * SPECTRAL_CURVE.sqrt_series(n)

    def integrate(self) -> AlgebraicSeries:
        """Antiderivative from 0, returned with ``b = 0``."""
        return AlgebraicSeries(series_integrate(self.to_series()))

    def truncate(self, order: int) -> AlgebraicSeries:
        return AlgebraicSeries(self.a.truncate(order), self.b.truncate(order))

    def __repr__(self) -> str:
        return f"AlgebraicSeries(a={self.a!r}, b={self.b!r})"
