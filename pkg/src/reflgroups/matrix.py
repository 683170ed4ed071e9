"""
Exact dense matrices over Fraction / Cyclotomic scalars.

Determinants use fraction-free (Bareiss) elimination, which keeps every
intermediate value in the coefficient domain and bounds expression swell;
this matters because per-element determinants are the hot loop when
summing over groups with up to ~10^5 elements.  Kernel computations use
ordinary field elimination.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyclotomic
from .poly import LaurentPoly

__all__ = ["Matrix"]


def _exact_div(a, b):
    if isinstance(b, LaurentPoly) or isinstance(a, LaurentPoly):
        if not isinstance(a, LaurentPoly):
            a = LaurentPoly.const(a, b.var)
        return a.exact_div(b if isinstance(b, LaurentPoly)
                           else LaurentPoly.const(b, a.var))
    if isinstance(a, Cyclotomic) or isinstance(b, Cyclotomic):
        return Cyclotomic.of(a) * Cyclotomic.of(b).inverse()
    return Fraction(a) / Fraction(b)


class Matrix:
    """Immutable rows-of-tuples exact matrix."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in r) for r in self.rows)
        return f"Matrix[{body}]"

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows))
        return Matrix([[_dot(r, c) for c in cols] for r in self.rows])

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def scale(self, s) -> "Matrix":
        return Matrix([[v * s for v in r] for r in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def apply(self, vec):
        return tuple(_dot(r, vec) for r in self.rows)

    def submatrix(self, k: int) -> "Matrix":
        """Leading principal k x k block."""
        return Matrix([r[:k] for r in self.rows[:k]])

    # -- determinants -----------------------------------------------------

    def det(self):
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return 1
        a = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if not a[k][k]:
                pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
                if pivot is None:
                    return _zero_like(a[k][k])
                a[k], a[pivot] = a[pivot], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                    a[i][j] = _exact_div(num, prev) if prev != 1 else num
                a[i][k] = 0
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return -d if sign < 0 else d

    def charpoly(self, var: str = "x") -> LaurentPoly:
        """det(x*I - M), exact, by the trace (Faddeev-LeVerrier) recursion."""
        if not self.is_square():
            raise ValueError("characteristic polynomial of non-square matrix")
        return _charpoly_flv(self, var)

    def trace(self):
        t = self.rows[0][0]
        for i in range(1, self.nrows):
            t = t + self.rows[i][i]
        return t

    def det_one_minus_x(self, var: str = "x") -> LaurentPoly:
        """det(I - x*M) as a polynomial in x."""
        n = self.nrows
        cp = _charpoly_flv(self, var)  # x^n + c_{n-1} x^{n-1} + ... + c_0
        # det(I - xM) = x^n * charpoly_M(1/x) evaluated formally
        return LaurentPoly({n - e: v for e, v in cp.c.items()}, var)

    # -- elimination over a field -----------------------------------------

    def rref(self):
        """(rref rows, pivot columns) by field Gaussian elimination."""
        a = [list(r) for r in self.rows]
        nr, nc = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(nc):
            pr = next((i for i in range(r, nr) if a[i][c]), None)
            if pr is None:
                continue
            a[r], a[pr] = a[pr], a[r]
            inv = _exact_div(1, a[r][c])
            a[r] = [v * inv for v in a[r]]
            for i in range(nr):
                if i != r and a[i][c]:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        return a, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[tuple]:
        """Exact basis of {v : M v = 0}."""
        a, pivots = self.rref()
        nc = self.ncols
        free = [c for c in range(nc) if c not in pivots]
        basis = []
        for fc in free:
            v = [0] * nc
            v[fc] = 1
            for r, pc in enumerate(pivots):
                v[pc] = -a[r][fc]
            basis.append(tuple(v))
        return basis

    def left_kernel_basis(self) -> list[tuple]:
        return self.transpose().kernel_basis()

    def eigenspace_basis(self, eigenvalue) -> list[tuple]:
        """Exact basis of ker(M - eigenvalue*I); empty if not an eigenvalue."""
        if not self.is_square():
            raise ValueError("eigenspace of a non-square matrix")
        shifted = Matrix([[self.rows[i][j] - (eigenvalue if i == j else 0)
                           for j in range(self.ncols)]
                          for i in range(self.nrows)])
        return shifted.kernel_basis()


def _dot(r, c):
    total = 0
    for a, b in zip(r, c):
        if not (isinstance(a, int) and a == 0) and \
           not (isinstance(b, int) and b == 0):
            total = total + a * b
    return total


def _zero_like(v):
    return 0


def _charpoly_flv(m: Matrix, var: str) -> LaurentPoly:
    """Faddeev-LeVerrier: char poly of M as x^n + c_{n-1}x^{n-1} + ... + c_0."""
    n = m.nrows
    coeffs = {n: 1}
    aux = m
    c = None
    for k in range(1, n + 1):
        if c is not None:
            aux = m * (aux + Matrix.identity(n).scale(c))
        tr = aux.trace()
        c = _exact_div(tr, -k)
        coeffs[n - k] = c
    return LaurentPoly(coeffs, var)
