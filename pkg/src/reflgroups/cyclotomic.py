"""
Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored as a coefficient vector of length phi(n) in the power
basis 1, z, ..., z^(phi(n)-1) of Q[x]/(Phi_n(x)), where z = exp(2*pi*i/n)
and Phi_n is the n-th cyclotomic polynomial.  After every operation the
result is reduced mod Phi_n of the least common conductor and then demoted
to the smallest subfield Q(zeta_m), m | n, that contains it.  Two equal
elements therefore always have identical stored form, so `==` and `hash`
are structural.

>>> zeta(4) * zeta(4)
Cyc(-1)
>>> 1 + zeta(3) + zeta(3) ** 2
Cyc(0)
>>> zeta(5) / zeta(5) ** 2
Cyc(z5^4)
>>> zeta(8) * zeta(8)          # demoted to conductor 4
Cyc(z4)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

__all__ = [
    "Cyclotomic", "zeta", "cyc", "euler_phi", "divisors", "prime_factors",
    "cyclotomic_poly", "real_sign",
]


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def euler_phi(n: int) -> int:
    phi = n
    for p in prime_factors(n):
        phi = phi // p * (p - 1)
    return phi


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the monic integer polynomial Phi_n.

    >>> cyclotomic_poly(1)
    (-1, 1)
    >>> cyclotomic_poly(6)
    (1, -1, 1)
    """
    # (x^n - 1) / prod_{d|n, d<n} Phi_d, by exact integer division
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in divisors(n):
        if d == n:
            continue
        phi_d = cyclotomic_poly(d)
        num = _int_poly_div_exact(num, phi_d)
    return tuple(num)


def _int_poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic; division is exact
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - dd - 1, -1, -1):
        q = num[i + dd]
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    assert all(c == 0 for c in num[: dd]), "non-exact cyclotomic division"
    return out


def _reduce_mod_phi(coeffs: list, n: int) -> list:
    """Reduce a coefficient list (any length) mod Phi_n; length becomes phi(n)."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, deg - 1, -1):
        q = c[i]
        if q:
            c[i] = 0
            for j in range(deg):
                c[i - deg + j] -= q * phi[j]
    del c[deg:]
    while len(c) < deg:
        c.append(0)
    return c


@lru_cache(maxsize=None)
def _power_table(n: int, upto: int) -> tuple[tuple, ...]:
    """z^k mod Phi_n for 0 <= k < upto, as coefficient tuples."""
    deg = euler_phi(n)
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(upto):
        rows.append(tuple(cur))
        cur = _reduce_mod_phi([0] + cur, n)
    return tuple(rows)


class _Solver:
    """Solve E y = b for a fixed exact matrix E with independent columns."""

    def __init__(self, columns: list[tuple]):
        rows = len(columns[0])
        cols = len(columns)
        aug = [[Fraction(columns[j][i]) for j in range(cols)] for i in range(rows)]
        # row-reduce, remembering the operations as a row-transform matrix
        trans = [[Fraction(int(i == j)) for j in range(rows)] for i in range(rows)]
        pivots = []
        r = 0
        for c in range(cols):
            pr = next((i for i in range(r, rows) if aug[i][c]), None)
            assert pr is not None, "embedding matrix must have full column rank"
            aug[r], aug[pr] = aug[pr], aug[r]
            trans[r], trans[pr] = trans[pr], trans[r]
            inv = 1 / aug[r][c]
            aug[r] = [v * inv for v in aug[r]]
            trans[r] = [v * inv for v in trans[r]]
            for i in range(rows):
                if i != r and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
                    trans[i] = [a - f * b for a, b in zip(trans[i], trans[r])]
            pivots.append(c)
            r += 1
        self._trans = trans
        self._ncols = cols
        self._nrows = rows

    def solve(self, b: list):
        y = [sum(t * v for t, v in zip(row, b) if v) for row in self._trans]
        sol, rest = y[: self._ncols], y[self._ncols:]
        if any(rest):
            return None
        return sol


@lru_cache(maxsize=None)
def _demotion_solver(n: int, m: int) -> _Solver:
    """Solver expressing elements of Q(zeta_n) in the basis of Q(zeta_m), m | n."""
    step = n // m
    deg_m = euler_phi(m)
    table = _power_table(n, step * deg_m if deg_m else 1)
    columns = [table[j * step] for j in range(deg_m)]
    return _Solver(columns)


class Cyclotomic:
    """An exact element of Q(zeta_n), always stored in minimal conductor."""

    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs, _normalized: bool = False):
        if _normalized:
            self.n = n
            self.c = coeffs
            return
        c = _reduce_mod_phi(list(coeffs), n)
        n, c = _minimize_conductor(n, c)
        self.n = n
        self.c = tuple(c)

    # -- construction helpers ------------------------------------------

    @staticmethod
    def of(value) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, int):
            return Cyclotomic(1, (value,), _normalized=True)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return Cyclotomic(1, (value.numerator,), _normalized=True)
            return Cyclotomic(1, (value,), _normalized=True)
        raise TypeError(f"cannot coerce {type(value).__name__} to Cyclotomic")

    # -- predicates / accessors ----------------------------------------

    def is_zero(self) -> bool:
        return not any(self.c)

    __bool__ = lambda self: any(self.c)  # noqa: E731

    def is_rational(self) -> bool:
        return self.n == 1

    def rational_value(self) -> Fraction:
        if self.n != 1:
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.c[0])

    def is_one(self) -> bool:
        return self.n == 1 and self.c[0] == 1

    # -- ring operations -----------------------------------------------

    def _lift(self, n: int) -> list:
        """Coefficients of self viewed in Q(zeta_n), self.n | n."""
        if n == self.n:
            return list(self.c)
        step = n // self.n
        table = _power_table(n, step * len(self.c) if self.c else 1)
        deg = euler_phi(n)
        out = [0] * deg
        for j, cj in enumerate(self.c):
            if cj:
                row = table[j * step]
                for i in range(deg):
                    if row[i]:
                        out[i] += cj * row[i]
        return out

    def __add__(self, other):
        other = Cyclotomic.of(other)
        n = _lcm(self.n, other.n)
        a, b = self._lift(n), other._lift(n)
        return Cyclotomic(n, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, tuple(-x for x in self.c), _normalized=True)

    def __sub__(self, other):
        return self + (-Cyclotomic.of(other))

    def __rsub__(self, other):
        return Cyclotomic.of(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return _ZERO
            return Cyclotomic(self.n, tuple(x * other for x in self.c),
                              _normalized=True)
        other = Cyclotomic.of(other)
        n = _lcm(self.n, other.n)
        a, b = self._lift(n), other._lift(n)
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return Cyclotomic(n, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("division by zero cyclotomic")
        if self.n == 1:
            return Cyclotomic(1, (Fraction(1) / Fraction(self.c[0]),))
        # extended Euclid in Q[x] against Phi_n
        phi = [Fraction(v) for v in cyclotomic_poly(self.n)]
        a = [Fraction(v) for v in self.c]
        inv = _poly_modinv(a, phi)
        return Cyclotomic(self.n, inv)

    def __truediv__(self, other):
        other = Cyclotomic.of(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.of(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def galois(self, a: int) -> "Cyclotomic":
        """Apply the automorphism zeta -> zeta^a (gcd(a, n) must be 1)."""
        n = self.n
        a %= n
        if n == 1 or a == 1:
            return self
        if gcd(a, n) != 1:
            raise ValueError(f"{a} is not prime to the conductor {n}")
        table = _power_table(n, (len(self.c) - 1) * a + 1)
        deg = euler_phi(n)
        out = [0] * deg
        for j, cj in enumerate(self.c):
            if cj:
                row = table[j * a]
                for i in range(deg):
                    if row[i]:
                        out[i] += cj * row[i]
        return Cyclotomic(n, out)

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation (zeta -> zeta^(-1))."""
        if self.n == 1:
            return self
        return self.galois(self.n - 1)

    def is_real(self) -> bool:
        return self == self.conjugate()

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.n == 1 and self.c[0] == other
        if isinstance(other, Cyclotomic):
            return self.n == other.n and self.c == other.c
        return NotImplemented

    def __hash__(self):
        if self.n == 1:
            return hash(self.c[0])
        return hash((self.n, self.c))

    def sort_key(self):
        return (self.n,) + tuple(Fraction(v) for v in self.c)

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return f"Cyc({self})"

    def __str__(self):
        if self.n == 1:
            return str(self.c[0])
        parts = []
        for k, v in enumerate(self.c):
            if not v:
                continue
            if k == 0:
                parts.append(str(v))
                continue
            zk = f"z{self.n}" if k == 1 else f"z{self.n}^{k}"
            if v == 1:
                term = zk
            elif v == -1:
                term = f"-{zk}"
            else:
                term = f"{v}*{zk}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _minimize_conductor(n: int, c: list) -> tuple[int, list]:
    if all(v == 0 for v in c[1:]):
        return 1, [c[0] if c else 0]
    changed = True
    while changed and n > 1:
        changed = False
        for p in prime_factors(n):
            m = n // p
            if m == 1:
                # demotion to Q is exactly the rational fast path above
                continue
            sol = _demotion_solver(n, m).solve(c)
            if sol is not None:
                n, c = m, sol
                changed = True
                break
    return n, [_fr_normal(v) for v in c]


def _fr_normal(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def _poly_modinv(a: list, mod: list) -> list:
    """Inverse of a modulo the monic polynomial mod, over Q."""
    # extended Euclid: r0 = mod, r1 = a
    r0, r1 = mod, list(a)
    t0, t1 = [Fraction(0)], [Fraction(1)]
    while any(r1):
        q, r = _poly_divmod_q(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
    # r0 = gcd is a nonzero constant (Phi_n irreducible)
    lead = next(v for v in reversed(r0) if v)
    assert len([v for v in r0 if v]) == 1 and r0[0] == lead, \
        "element not invertible mod Phi_n"
    return [v / lead for v in t0]


def _poly_divmod_q(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(v) for v in a]
    b = [Fraction(v) for v in b]
    while b and not b[-1]:
        b.pop()
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    while True:
        while a and not a[-1]:
            a.pop()
        if len(a) - 1 < db:
            break
        f = a[-1] / lead
        pos = len(a) - 1 - db
        q[pos] = f
        for j in range(db + 1):
            a[pos + j] -= f * b[j]
    return q, a


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


_ZERO = Cyclotomic(1, (0,), _normalized=True)
_ONE = Cyclotomic(1, (1,), _normalized=True)


def zeta(n: int, k: int = 1) -> Cyclotomic:
    """The root of unity exp(2*pi*i*k/n).

    >>> zeta(1)
    Cyc(1)
    >>> zeta(2)
    Cyc(-1)
    """
    k %= n
    g = gcd(k, n) if k else n
    n, k = n // g, k // g
    deg = euler_phi(n)
    if k < deg:
        coeffs = [0] * deg
        coeffs[k] = 1
        return Cyclotomic(n, coeffs)
    return Cyclotomic(n, _power_table(n, k + 1)[k])


def cyc(value) -> Cyclotomic:
    """Coerce an int or Fraction to a Cyclotomic."""
    return Cyclotomic.of(value)


def real_sign(x: Cyclotomic) -> int:
    """Sign (-1, 0, 1) of a real cyclotomic number, decided rigorously.

    Evaluates the element in interval arithmetic, doubling the working
    precision until the interval excludes zero; an exactly-zero stored
    form short-circuits, so the loop always terminates.
    """
    if x.is_zero():
        return 0
    if x.n == 1:
        v = Fraction(x.c[0])
        return -1 if v < 0 else 1
    if not x.is_real():
        raise ValueError(f"{x!r} is not real")
    prec = 64
    while True:
        with mpmath.workprec(prec):
            iv = mpmath.iv
            iv.prec = prec
            total = iv.mpf(0)
            two_pi = 2 * iv.pi
            for k, v in enumerate(x.c):
                if not v:
                    continue
                f = Fraction(v)
                coeff = iv.mpf(f.numerator) / iv.mpf(f.denominator)
                total += coeff * iv.cos(two_pi * k / x.n)
            if total > 0:
                return 1
            if total < 0:
                return -1
        prec *= 2
        if prec > 1 << 16:
            raise RuntimeError(f"sign of {x!r} undecided at huge precision")


if __name__ == "__main__":
    import doctest
    doctest.testmod()
