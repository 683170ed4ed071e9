"""
Sparse (Laurent) polynomials and rational functions over exact scalars.

A LaurentPoly is a map {exponent: coefficient} in a single named variable;
exponents may be negative.  Coefficients can be int, Fraction, Cyclotomic,
or another LaurentPoly in a *different* variable, which gives nested
Laurent rings such as Z[u,u^-1][v,v^-1].  Scalars of a different variable
never mix implicitly: adding or multiplying two LaurentPolys requires the
same variable, everything else is treated as a scalar.

RationalFunction keeps a num/den pair of polynomials over a field, stored
gcd-reduced with monic denominator, so equality is structural.

>>> x = x_poly()
>>> (x**2 - 1) // (x - 1)
LaurentPoly(x + 1)
>>> RationalFunction.of(x**2 - 1, x - 1)
RationalFunction((x + 1)/(1))
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyclotomic

__all__ = ["LaurentPoly", "RationalFunction", "x_poly"]

_SCALARS = (int, Fraction, Cyclotomic)


def _coeff_is_zero(c) -> bool:
    return not c


def _inv_coeff(c):
    if isinstance(c, int):
        return Fraction(1, c)
    if isinstance(c, Fraction):
        return 1 / c
    if isinstance(c, Cyclotomic):
        return c.inverse()
    if isinstance(c, LaurentPoly) and len(c.c) == 1:
        return c ** -1
    raise TypeError(f"cannot invert coefficient of type {type(c).__name__}")


class LaurentPoly:
    __slots__ = ("var", "c")

    def __init__(self, coeffs: dict | None = None, var: str = "x"):
        self.var = var
        self.c = {e: v for e, v in (coeffs or {}).items() if not _coeff_is_zero(v)}

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, var: str = "x") -> "LaurentPoly":
        return cls({}, var)

    @classmethod
    def one(cls, var: str = "x") -> "LaurentPoly":
        return cls({0: 1}, var)

    @classmethod
    def monomial(cls, exp: int, coeff=1, var: str = "x") -> "LaurentPoly":
        return cls({exp: coeff}, var)

    @classmethod
    def const(cls, coeff, var: str = "x") -> "LaurentPoly":
        return cls({0: coeff}, var)

    def _wrap(self, other):
        if isinstance(other, LaurentPoly) and other.var == self.var:
            return other
        if isinstance(other, _SCALARS) or isinstance(other, LaurentPoly):
            return LaurentPoly({0: other}, self.var)
        return None

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    __bool__ = lambda self: bool(self.c)  # noqa: E731

    def degree(self) -> int:
        if not self.c:
            raise ValueError("zero polynomial has no degree")
        return max(self.c)

    def valuation(self) -> int:
        if not self.c:
            raise ValueError("zero polynomial has no valuation")
        return min(self.c)

    def is_polynomial(self) -> bool:
        return not self.c or min(self.c) >= 0

    def leading_coeff(self):
        return self.c[self.degree()]

    def constant_coeff(self):
        return self.c.get(0, 0)

    def coeff(self, e: int):
        return self.c.get(e, 0)

    def terms(self):
        return sorted(self.c.items())

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        out = dict(self.c)
        for e, v in other.c.items():
            w = out.get(e, 0) + v
            if _coeff_is_zero(w):
                out.pop(e, None)
            else:
                out[e] = w
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self.c.items()}, self.var)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentPoly) and other.var == self.var:
            out: dict = {}
            for e1, v1 in self.c.items():
                for e2, v2 in other.c.items():
                    e = e1 + e2
                    w = out.get(e, 0) + v1 * v2
                    if _coeff_is_zero(w):
                        out.pop(e, None)
                    else:
                        out[e] = w
            return LaurentPoly(out, self.var)
        if isinstance(other, _SCALARS) or isinstance(other, LaurentPoly):
            if _coeff_is_zero(other):
                return LaurentPoly.zero(self.var)
            return LaurentPoly({e: v * other for e, v in self.c.items()}, self.var)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.c) == 1:
                (e, v), = self.c.items()
                return LaurentPoly({e * k: _inv_coeff(v) ** (-k) if not
                                    (v == 1) else 1}, self.var)
            raise ValueError("negative power of a non-monomial")
        result = LaurentPoly.one(self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by var^k."""
        return LaurentPoly({e + k: v for e, v in self.c.items()}, self.var)

    def substitute_var(self, image: "LaurentPoly") -> "LaurentPoly":
        """Evaluate self at var = image (image must be invertible if self
        has negative exponents, i.e. a monomial or unit)."""
        out = LaurentPoly.zero(image.var)
        for e, v in self.c.items():
            out = out + image ** e * v
        return out

    def evaluate(self, point):
        """Evaluate at a scalar point (nonzero if negative exponents)."""
        total = 0
        for e, v in self.c.items():
            if e >= 0:
                total = total + v * point ** e
            else:
                total = total + v * _inv_coeff(point) ** (-e)
        return total

    def map_coeffs(self, f) -> "LaurentPoly":
        return LaurentPoly({e: f(v) for e, v in self.c.items()}, self.var)

    def reverse(self) -> "LaurentPoly":
        """Substitute var -> var^(-1)."""
        return LaurentPoly({-e: v for e, v in self.c.items()}, self.var)

    # -- polynomial division (field coefficients) -------------------------

    def divmod_poly(self, other: "LaurentPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if not (self.is_polynomial() and other.is_polynomial()):
            raise ValueError("divmod requires ordinary polynomials")
        rem = dict(self.c)
        quo: dict = {}
        d_deg = other.degree()
        d_lead_inv = _inv_coeff(other.leading_coeff())
        while rem:
            r_deg = max(rem)
            if r_deg < d_deg:
                break
            f = rem[r_deg] * d_lead_inv
            quo[r_deg - d_deg] = f
            for e, v in other.c.items():
                k = r_deg - d_deg + e
                w = rem.get(k, 0) - f * v
                if _coeff_is_zero(w):
                    rem.pop(k, None)
                else:
                    rem[k] = w
        return LaurentPoly(quo, self.var), LaurentPoly(rem, self.var)

    def __floordiv__(self, other):
        other = self._wrap(other)
        q, r = self.divmod_poly(other)
        if not r.is_zero():
            raise ValueError("non-exact polynomial division")
        return q

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division allowing Laurent operands (shifts both to polys)."""
        if self.is_zero():
            return LaurentPoly.zero(self.var)
        sv, ov = self.valuation(), other.valuation()
        q = self.shift(-sv) // other.shift(-ov)
        return q.shift(sv - ov)

    def divides(self, other: "LaurentPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        if other.is_zero():
            return True
        _, r = other.shift(-other.valuation()).divmod_poly(
            self.shift(-self.valuation()))
        return r.is_zero()

    def monic(self) -> "LaurentPoly":
        if self.is_zero():
            return self
        inv = _inv_coeff(self.leading_coeff())
        return self * inv

    def gcd_poly(self, other: "LaurentPoly") -> "LaurentPoly":
        """Monic gcd over a field (ordinary polynomials)."""
        a, b = self, other
        if not a.is_polynomial() or not b.is_polynomial():
            raise ValueError("gcd requires ordinary polynomials")
        while not b.is_zero():
            _, r = a.divmod_poly(b)
            a, b = b, r
        if a.is_zero():
            return a
        return a.monic()

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: v * e for e, v in self.c.items() if e},
                           self.var)

    # -- comparisons -------------------------------------------------------

    def _key(self):
        return (self.var, tuple(sorted(
            (e, v._key() if isinstance(v, LaurentPoly) else v)
            for e, v in self.c.items())))

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            if _coeff_is_zero(other):
                return not self.c
            return len(self.c) == 1 and 0 in self.c and self.c[0] == other
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                return self.c.get(0, 0) == other and len(self.c) <= 1
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self._key())

    # -- display -----------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            v = self.c[e]
            if e == 0:
                s = _coeff_str(v, bracket=False)
            else:
                xe = self.var if e == 1 else f"{self.var}^{e}"
                if v == 1:
                    s = xe
                elif v == -1:
                    s = f"-{xe}"
                else:
                    s = f"{_coeff_str(v, bracket=True)}*{xe}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += f" - {s[1:]}" if s.startswith("-") else f" + {s}"
        return out


def _coeff_str(v, bracket: bool) -> str:
    s = str(v)
    if bracket and any(op in s for op in (" + ", " - ")):
        return f"({s})"
    return s


def x_poly(var: str = "x") -> LaurentPoly:
    """The variable itself, as a polynomial."""
    return LaurentPoly({1: 1}, var)


class RationalFunction:
    """num/den over a field, gcd-reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, _normalized=False):
        if _normalized:
            self.num, self.den = num, den
            return
        rf = RationalFunction.of(num, den)
        self.num, self.den = rf.num, rf.den

    @classmethod
    def of(cls, num, den=1) -> "RationalFunction":
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.const(num)
        den = num._wrap(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return cls(LaurentPoly.zero(num.var), LaurentPoly.one(num.var),
                       _normalized=True)
        # clear Laurent parts into a single shift of the numerator
        shift = 0
        if num.valuation() < 0 or den.valuation() < 0:
            shift = min(num.valuation(), den.valuation())
            num, den = num.shift(-shift), den.shift(-shift)
            shift = 0
        v = den.valuation()
        if v > 0:
            den = den.shift(-v)
            shift -= v
        g = num.gcd_poly(den)
        if g.degree() > 0:
            num = num // g
            den = den // g
        lead_inv = _inv_coeff(den.leading_coeff())
        num, den = num * lead_inv, den * lead_inv
        if shift:
            num = num.shift(shift)
        return cls(num, den, _normalized=True)

    @classmethod
    def zero(cls, var: str = "x") -> "RationalFunction":
        return cls.of(LaurentPoly.zero(var), LaurentPoly.one(var))

    @classmethod
    def one(cls, var: str = "x") -> "RationalFunction":
        return cls.of(LaurentPoly.one(var), LaurentPoly.one(var))

    @property
    def var(self) -> str:
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == 1

    def as_poly(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction.of(self.num * other.den + other.num * self.den,
                                   self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction.of(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction.of(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly) and other.var == self.var:
            return RationalFunction.of(other, LaurentPoly.one(self.var))
        if isinstance(other, _SCALARS):
            return RationalFunction.of(LaurentPoly.const(other, self.var),
                                       LaurentPoly.one(self.var))
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # canonical reduced form makes structural equality agree with the
        # cross-multiplication criterion (checked by the property suite)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num._key(), self.den._key()))

    def series_coeffs(self, upto: int) -> list:
        """Power-series coefficients c_0..c_(upto-1); needs den(0) != 0."""
        den0 = self.den.constant_coeff()
        if _coeff_is_zero(den0):
            raise ValueError("series expansion needs den(0) != 0")
        if not self.num.is_polynomial():
            raise ValueError("series expansion needs a Taylor numerator")
        inv0 = _inv_coeff(den0)
        out = []
        for k in range(upto):
            acc = self.num.coeff(k)
            for j, v in self.den.c.items():
                if 0 < j <= k:
                    acc = acc - v * out[k - j]
            out.append(acc * inv0)
        return out

    def __repr__(self):
        return f"RationalFunction(({self.num})/({self.den}))"

    def __str__(self):
        return f"({self.num})/({self.den})"


if __name__ == "__main__":
    import doctest
    doctest.testmod()
