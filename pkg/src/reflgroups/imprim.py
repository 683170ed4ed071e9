"""
The imprimitive monomial groups G(de,e,n).

An element maps basis vector b_j to zeta_de^(exps[j]) * b_perm[j], so it is
stored as a permutation of {0..n-1} plus an exponent vector mod de, never
as a dense matrix; matrices are materialized on demand.  Membership in
G(de,e,n) inside G(de,1,n) is the kernel condition: the exponent sum must
vanish mod e (equivalently, the product of the nonzero entries is a d-th
root of unity).

Text format for elements: cycle notation for the permutation plus the
exponent list, e.g. "(1 2);[1,0]" (1-based positions, identity = "()").
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import NamedTuple

from .cyclotomic import Cyclotomic, zeta
from .errors import BudgetExceeded
from .matrix import Matrix

__all__ = ["ImprimParams", "MonomialElement", "ImprimitiveGroup"]

DEFAULT_ELEMENT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class ImprimParams:
    d: int
    e: int
    n: int

    def __post_init__(self):
        if self.d < 1 or self.e < 1 or self.n < 1:
            raise ValueError("d, e, n must be positive")

    @property
    def de(self) -> int:
        return self.d * self.e

    @property
    def order(self) -> int:
        return self.d ** self.n * self.e ** (self.n - 1) * factorial(self.n)

    @property
    def is_reducible(self) -> bool:
        # G(2,2,2) is reducible; so is the natural n-dimensional S_n = G(1,1,n)
        if (self.de, self.e, self.n) == (2, 2, 2):
            return True
        return self.d == 1 and self.e == 1 and self.n >= 1

    @property
    def label(self) -> str:
        return f"G({self.de},{self.e},{self.n})"


class MonomialElement(NamedTuple):
    perm: tuple      # images of 0..n-1
    exps: tuple      # exponents mod de; b_j -> zeta^exps[j] b_perm[j]


class ImprimitiveGroup:
    """G(de,e,n) with exact monomial arithmetic."""

    def __init__(self, d: int, e: int, n: int,
                 budget: int = DEFAULT_ELEMENT_BUDGET):
        self.params = ImprimParams(d, e, n)
        self.d, self.e, self.n = d, e, n
        self.de = d * e
        self.dim = n
        self.rank = n
        self.budget = budget
        self.identity = MonomialElement(tuple(range(n)), (0,) * n)
        self._elements: list | None = None
        self.name = self.params.label

    # -- group structure ----------------------------------------------------

    def mul(self, a: MonomialElement, b: MonomialElement) -> MonomialElement:
        """(a*b) acts as b then a."""
        perm = tuple(a.perm[p] for p in b.perm)
        exps = tuple((b.exps[j] + a.exps[b.perm[j]]) % self.de
                     for j in range(self.n))
        return MonomialElement(perm, exps)

    def inv(self, a: MonomialElement) -> MonomialElement:
        inv_perm = [0] * self.n
        for i, v in enumerate(a.perm):
            inv_perm[v] = i
        exps = tuple((-a.exps[inv_perm[j]]) % self.de for j in range(self.n))
        return MonomialElement(tuple(inv_perm), exps)

    def generators(self) -> list[MonomialElement]:
        """The reflection generators t1^e, t1^-1 t2 t1, t2, ..., tn.

        For e = 1 the set is {t1, ..., tn}; the order-d generator t1^e is
        dropped when d = 1 (it is the identity).
        """
        n, de = self.n, self.de
        t1 = MonomialElement(tuple(range(n)), (1,) + (0,) * (n - 1))
        swaps = []
        for i in range(n - 1):
            perm = list(range(n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            swaps.append(MonomialElement(tuple(perm), (0,) * n))
        if self.e == 1:
            gens = ([t1] if self.d > 1 else []) + swaps
            return gens
        gens = []
        if self.d > 1:
            t1e = MonomialElement(tuple(range(n)),
                                  (self.e % de,) + (0,) * (n - 1))
            gens.append(t1e)
        if n >= 2:
            t2 = swaps[0]
            conj = self.mul(self.mul(self.inv(t1), t2), t1)
            gens.append(conj)
            gens.extend(swaps)
        return gens

    def order(self) -> int:
        return self.params.order

    def contains(self, m: MonomialElement) -> bool:
        if sorted(m.perm) != list(range(self.n)):
            raise ValueError("malformed permutation")
        if len(m.exps) != self.n or any(not 0 <= v < self.de for v in m.exps):
            raise ValueError("malformed exponents")
        return sum(m.exps) % self.e == 0

    def elements(self) -> list[MonomialElement]:
        """All elements by BFS closure, sorted canonically."""
        if self._elements is None:
            if self.params.order > self.budget:
                raise BudgetExceeded(
                    f"{self.name} has order {self.params.order} > budget "
                    f"{self.budget}")
            gens = self.generators()
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for g in frontier:
                    for s in gens:
                        h = self.mul(g, s)
                        if h not in seen:
                            seen.add(h)
                            nxt.append(h)
                frontier = nxt
            assert len(seen) == self.params.order, \
                f"enumeration of {self.name} found {len(seen)} elements"
            self._elements = sorted(seen)
        return self._elements

    # -- matrices and cycle data ---------------------------------------------

    def matrix_of(self, g: MonomialElement) -> Matrix:
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for j in range(n):
            rows[g.perm[j]][j] = zeta(self.de, g.exps[j])
        return Matrix(rows)

    def apply_to_vector(self, g: MonomialElement, v: tuple) -> tuple:
        out = [0] * self.n
        for j in range(self.n):
            out[g.perm[j]] = Cyclotomic.of(v[j]) * zeta(self.de, g.exps[j])
        return tuple(out)

    def cycles(self, g: MonomialElement) -> list[tuple[int, int]]:
        """(length, exponent-sum mod de) per cycle of the permutation."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            ln, total, j = 0, 0, i
            while not seen[j]:
                seen[j] = True
                total += g.exps[j]
                j = g.perm[j]
                ln += 1
            out.append((ln, total % self.de))
        return sorted(out)

    def fixed_space_dim(self, g: MonomialElement) -> int:
        return sum(1 for _ln, t in self.cycles(g) if t == 0)

    def det_of(self, g: MonomialElement) -> Cyclotomic:
        sign = 1
        for ln, _t in self.cycles(g):
            if ln % 2 == 0:
                sign = -sign
        return zeta(self.de, sum(g.exps) % self.de) * sign

    def element_order(self, g: MonomialElement) -> int:
        from math import gcd, lcm
        o = 1
        for ln, t in self.cycles(g):
            # g^ln on the cycle multiplies by zeta^t; order = ln*de/gcd(t,de)
            o = lcm(o, ln * (self.de // gcd(t, self.de) if t else 1))
        return o

    # -- reflections and hyperplanes ------------------------------------------

    def reflections(self) -> list[MonomialElement]:
        """All reflections, constructed directly from the parameters."""
        n, de, e = self.n, self.de, self.e
        out = []
        for j in range(n):                      # diagonal reflections
            for k in range(e, de, e):
                exps = [0] * n
                exps[j] = k
                out.append(MonomialElement(tuple(range(n)), tuple(exps)))
        for i in range(n):                      # swap-type reflections
            for j in range(i + 1, n):
                for k in range(de):
                    perm = list(range(n))
                    perm[i], perm[j] = j, i
                    exps = [0] * n
                    exps[i], exps[j] = k, (-k) % de
                    out.append(MonomialElement(tuple(perm), tuple(exps)))
        return sorted(out)

    def hyperplanes(self) -> list[tuple]:
        """Canonical covectors: x_j = 0 and x_i - zeta^{-k} x_j = 0."""
        n, de = self.n, self.de
        out = []
        if self.d > 1:
            for j in range(n):
                cov = [0] * n
                cov[j] = 1
                out.append(tuple(cov))
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(de):
                    cov = [0] * n
                    cov[i] = Cyclotomic.of(1)
                    cov[j] = -zeta(de, (-k) % de)
                    out.append(tuple(cov))
        return out

    # -- text format -----------------------------------------------------------

    def format_element(self, g: MonomialElement) -> str:
        cycles = []
        seen = [False] * self.n
        for i in range(self.n):
            if seen[i] or g.perm[i] == i:
                seen[i] = True
                continue
            cyc_, j = [], i
            while not seen[j]:
                seen[j] = True
                cyc_.append(j + 1)
                j = g.perm[j]
            cycles.append("(" + " ".join(map(str, cyc_)) + ")")
        perm_str = "".join(cycles) if cycles else "()"
        return f"{perm_str};[{','.join(map(str, g.exps))}]"

    def parse_element(self, text: str) -> MonomialElement:
        perm_str, _, exp_str = text.partition(";")
        perm = list(range(self.n))
        body = perm_str.strip()
        while body:
            if not body.startswith("("):
                raise ValueError(f"bad cycle notation {perm_str!r}")
            end = body.index(")")
            entries = [int(t) - 1 for t in body[1:end].split()]
            for a, b in zip(entries, entries[1:] + entries[:1]):
                perm[a] = b
            body = body[end + 1:].strip()
        exps = [int(t) for t in exp_str.strip().strip("[]").split(",")
                if t.strip()] if exp_str.strip() else [0] * self.n
        g = MonomialElement(tuple(perm), tuple(v % self.de for v in exps))
        if not self.contains(g):
            raise ValueError(f"{text!r} is not in {self.name}")
        return g

    def __repr__(self):
        return f"ImprimitiveGroup({self.name})"
