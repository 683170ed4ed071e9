"""
Character theory of the symmetric group and the wreath products G(d,1,n).

Both the irreducible characters and the conjugacy classes of G(d,1,n) are
indexed by d-tuples of partitions of total weight n.  A class parameter
collects, in component t, the lengths of the cycles whose cycle product is
the t-th power of the primitive d-th root of unity.  Character values are
computed by the generalised Murnaghan-Nakayama recursion: strip the
largest part m from the highest-index nonempty class component and sum
over all rim-hook removals of size m from the character label, with sign
(-1)^(rows-1) and a root-of-unity weight depending on which component the
hook left.

Rim hooks are handled through beta-numbers: removing an m-hook moves one
bead down by m; the leg length is the number of beads jumped over.

Also here: class sizes from the wreath centralizer formula, induction from
Young-type product subgroups with exact class fusion, b-invariant
(j-)induction, the character count of G(de,e,n) by cyclic-shift orbits,
and the closed-form fake degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .classfun import ClassFunction
from .classes import conjugacy_classes
from .cyclotomic import Cyclotomic, cyc, zeta
from .errors import InvariantViolation
from .poly import LaurentPoly

__all__ = [
    "partitions", "d_partitions", "conjugate_partition",
    "mn_value", "class_centralizer_order", "class_size", "class_param_of",
    "WreathCharTable", "char_table",
    "induce_product_character", "decompose_into_irreducibles",
    "j_induce", "JInductionError", "mn_value_with_order", "class_rep_element",
    "rim_hook_removals",
    "cyclic_shift", "stabilizer_order", "shift_orbits", "irr_count_gdeen",
    "fake_degree_closed", "fake_degree_gdeen", "beta_set",
]

Partition = tuple
DPartition = tuple


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, descending lexicographic ((n) first).

    >>> partitions(3)
    ((3,), (2, 1), (1, 1, 1))
    """
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return tuple(out)


@lru_cache(maxsize=None)
def d_partitions(d: int, n: int) -> tuple[DPartition, ...]:
    """All d-tuples of partitions of total weight n, canonical order:
    first component weight descending, then recursively.

    >>> d_partitions(2, 2)
    (((2,), ()), ((1, 1), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1)))
    """
    if d == 1:
        return tuple((lam,) for lam in partitions(n))
    out = []
    for n0 in range(n, -1, -1):
        for lam in partitions(n0):
            for rest in d_partitions(d - 1, n - n0):
                out.append((lam,) + rest)
    return tuple(out)


def conjugate_partition(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def beta_set(lam: Partition, length: int | None = None) -> tuple[int, ...]:
    """Strictly decreasing beta-numbers (lam_i + L - i), padded to `length`."""
    L = len(lam) if length is None else length
    if L < len(lam):
        raise ValueError("beta-set length shorter than the partition")
    padded = list(lam) + [0] * (L - len(lam))
    return tuple(padded[i] + (L - 1 - i) for i in range(L))


def _partition_from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    L = len(beta)
    lam = [beta[i] - (L - 1 - i) for i in range(L)]
    return tuple(p for p in lam if p > 0)


def rim_hook_removals(lam: Partition, m: int) -> list[tuple[Partition, int]]:
    """All (partition-after-removal, leg-length) for rim hooks of size m.

    A removal moves a bead b to b - m; the leg length counts the beads
    strictly between.
    """
    if m <= 0 or sum(lam) < m:
        return []
    L = len(lam) + m
    beta = list(beta_set(lam, L))
    bset = set(beta)
    out = []
    for b in beta:
        if b >= m and (b - m) not in bset:
            leg = sum(1 for c in beta if b - m < c < b)
            nb = [c for c in beta if c != b] + [b - m]
            out.append((_partition_from_beta(nb), leg))
    return out


# ---------------------------------------------------------------------------
# The Murnaghan-Nakayama recursion for G(d,1,n)


_MN_CACHE: dict = {}


def mn_value(alpha: DPartition, gamma: DPartition, d: int | None = None) -> Cyclotomic:
    """Character value chi_alpha(gamma) of G(d,1,n), exact in Z[zeta_d].

    Removal order is deterministic: the largest part of the highest-index
    nonempty component of gamma; independence of this choice is a tested
    property.
    """
    if d is None:
        d = len(alpha)
    if len(alpha) != d or len(gamma) != d:
        raise ValueError("labels must have d components")
    if sum(map(sum, alpha)) != sum(map(sum, gamma)):
        raise ValueError("character and class labels must have equal weight")
    return _mn(alpha, gamma, d)


def _mn(alpha, gamma, d) -> Cyclotomic:
    if all(not g for g in gamma):
        return cyc(1)
    key = (alpha, gamma)
    cached = _MN_CACHE.get(key)
    if cached is not None:
        return cached
    t = max(i for i, g in enumerate(gamma) if g)
    m = gamma[t][0]
    gamma_rest = tuple(
        (g[1:] if i == t else g) for i, g in enumerate(gamma))
    total = cyc(0)
    for s in range(d):
        weight = zeta(d, (s * t) % d) if d > 1 else cyc(1)
        for mu, leg in rim_hook_removals(alpha[s], m):
            beta = tuple((mu if i == s else a) for i, a in enumerate(alpha))
            sub = _mn(beta, gamma_rest, d)
            if not sub.is_zero():
                term = sub * weight
                total = total + (-term if leg % 2 else term)
    _MN_CACHE[key] = total
    return total


def mn_value_with_order(alpha, gamma, d, removal_order) -> Cyclotomic:
    """Like mn_value, but stripping parts in a caller-chosen order.

    `removal_order` lists (component, index-within-component) pairs; used
    to test removal-order independence, so no caching.
    """
    if not removal_order:
        assert all(not g for g in gamma)
        return cyc(1)
    (t, j), rest = removal_order[0], removal_order[1:]
    m = gamma[t][j]
    gamma_rest = tuple(
        (g[:j] + g[j + 1:] if i == t else g) for i, g in enumerate(gamma))

    def reindex(order):
        return order

    total = cyc(0)
    for s in range(d):
        weight = zeta(d, (s * t) % d) if d > 1 else cyc(1)
        for mu, leg in rim_hook_removals(alpha[s], m):
            beta = tuple((mu if i == s else a) for i, a in enumerate(alpha))
            sub = mn_value_with_order(beta, gamma_rest, d, reindex(rest))
            if not sub.is_zero():
                term = sub * weight
                total = total + (-term if leg % 2 else term)
    return total


# ---------------------------------------------------------------------------
# Classes of G(d,1,n)


def class_centralizer_order(d: int, gamma: DPartition) -> int:
    """Centralizer order of a class of the wreath product."""
    z = 1
    for g in gamma:
        mult: dict = {}
        for k in g:
            mult[k] = mult.get(k, 0) + 1
        for k, a in mult.items():
            z *= (k * d) ** a * factorial(a)
    return z


def class_size(d: int, n: int, gamma: DPartition) -> int:
    order = d ** n * factorial(n)
    return order // class_centralizer_order(d, gamma)


def class_param_of(group, g) -> DPartition:
    """Cycle structure of a monomial element as a d-partition: component t
    collects lengths of cycles with cycle product zeta^t."""
    d = group.de
    comps: list[list[int]] = [[] for _ in range(d)]
    for ln, t in group.cycles(g):
        comps[t].append(ln)
    return tuple(tuple(sorted(c, reverse=True)) for c in comps)


def class_rep_element(group, gamma: DPartition):
    """A canonical element of G(d,1,n) with the given cycle structure."""
    from .imprim import MonomialElement
    n = group.n
    perm = list(range(n))
    exps = [0] * n
    pos = 0
    for t, comp in enumerate(gamma):
        for ln in comp:
            idxs = list(range(pos, pos + ln))
            for a, b in zip(idxs, idxs[1:] + idxs[:1]):
                perm[a] = b
            exps[idxs[0]] = t
            pos += ln
    g = MonomialElement(tuple(perm), tuple(exps))
    assert class_param_of(group, g) == gamma
    return g


# ---------------------------------------------------------------------------
# Full tables


class WreathCharTable:
    """Complete character table of G(d,1,n), validated on construction."""

    def __init__(self, d: int, n: int, validate: bool = True):
        self.d, self.n = d, n
        self.labels = d_partitions(d, n)
        self.order = d ** n * factorial(n)
        self.class_sizes = tuple(class_size(d, n, g) for g in self.labels)
        self.values = [[mn_value(a, g, d) for g in self.labels]
                       for a in self.labels]
        if validate:
            self._validate()

    def _validate(self):
        degrees = self.degrees()
        if any(dg <= 0 for dg in degrees):
            raise InvariantViolation("character degree not positive")
        if sum(dg * dg for dg in degrees) != self.order:
            raise InvariantViolation("sum of squared degrees != group order")
        for i, row_i in enumerate(self.values):
            for j in range(i, len(self.values)):
                acc = cyc(0)
                for sz, a, b in zip(self.class_sizes, row_i, self.values[j]):
                    acc = acc + a * b.conjugate() * sz
                expect = self.order if i == j else 0
                if acc != expect:
                    raise InvariantViolation(
                        f"row orthogonality fails at ({i},{j})")

    def index_of(self, alpha: DPartition) -> int:
        return self.labels.index(alpha)

    def value(self, alpha: DPartition, gamma: DPartition) -> Cyclotomic:
        return self.values[self.index_of(alpha)][self.index_of(gamma)]

    def row(self, alpha: DPartition) -> tuple:
        return tuple(self.values[self.index_of(alpha)])

    def degrees(self) -> tuple[int, ...]:
        identity = self.labels.index(
            tuple(((1,) * self.n,) + ((),) * (self.d - 1))
            if self.d > 1 else ((1,) * self.n,))
        return tuple(int(r[identity].rational_value())
                     for r in self.values)

    def degree_of(self, alpha: DPartition) -> int:
        idx = self.index_of(alpha)
        return self.degrees()[idx]

    def column_orthogonality_ok(self) -> bool:
        k = len(self.labels)
        for i in range(k):
            for j in range(i, k):
                acc = cyc(0)
                for row in self.values:
                    acc = acc + row[i] * row[j].conjugate()
                expect = class_centralizer_order(self.d, self.labels[i]) \
                    if i == j else 0
                if acc != expect:
                    return False
        return True

    def class_function(self, group, alpha: DPartition) -> ClassFunction:
        """The row as a ClassFunction on an enumerated G(d,1,n) group."""
        row = self.row(alpha)
        vals = []
        for c in conjugacy_classes(group):
            gamma = class_param_of(group, c.representative)
            vals.append(row[self.index_of(gamma)])
        return ClassFunction(group, vals)

    def __repr__(self):
        return f"WreathCharTable(d={self.d}, n={self.n}, size={len(self.labels)})"


def char_table(d: int, n: int, budget: int = 24) -> WreathCharTable:
    """Validated character table of G(d,1,n); d*n must fit the budget."""
    if d * n > budget:
        from .errors import BudgetExceeded
        raise BudgetExceeded(f"table size d*n = {d * n} exceeds budget {budget}")
    return WreathCharTable(d, n)


# ---------------------------------------------------------------------------
# Induction from Young-type product subgroups


def induce_product_character(d: int, parts: list[int],
                             component_rows: list[dict],
                             parent: WreathCharTable) -> dict:
    """Induce a product character of W_(n_1) x ... x W_(n_k) up to W_n.

    `component_rows[i]` maps d-partitions of parts[i] to values.  Fusion
    concatenates class parameters componentwise; the induced value on a
    class C is z_G(C) * sum over fusing tuples of prod values / prod z_H.
    Returns {parent class label: value}.
    """
    from itertools import product as iproduct
    if sum(parts) != parent.n:
        raise ValueError("subgroup sizes must sum to n")
    out = {g: cyc(0) for g in parent.labels}
    tuples = iproduct(*[d_partitions(d, m) for m in parts])
    for tup in tuples:
        fused = tuple(
            tuple(sorted((p for g in tup for p in g[t]), reverse=True))
            for t in range(d))
        val = cyc(1)
        zh = 1
        for piece, row in zip(tup, component_rows):
            val = val * row[piece]
            zh *= class_centralizer_order(d, piece)
        if val.is_zero():
            continue
        out[fused] = out[fused] + val * Fraction(
            class_centralizer_order(d, fused), zh)
    return out


def decompose_into_irreducibles(values: dict, parent: WreathCharTable) -> dict:
    """Multiplicities <values, chi_alpha> for every row of the table."""
    out = {}
    for alpha in parent.labels:
        row = parent.row(alpha)
        acc = cyc(0)
        for sz, g, chi_v in zip(parent.class_sizes, parent.labels, row):
            acc = acc + values[g] * chi_v.conjugate() * sz
        acc = acc * Fraction(1, parent.order)
        if not acc.is_zero():
            if not acc.is_rational() or acc.rational_value().denominator != 1:
                raise InvariantViolation("non-integral multiplicity")
            out[alpha] = int(acc.rational_value())
    return out


class JInductionError(ValueError):
    pass


def j_induce(d: int, parts: list[int], component_alphas: list[DPartition],
             parent: WreathCharTable) -> DPartition:
    """b-invariant-preserving induction of a product of irreducibles.

    Requires the lowest fake-degree coefficient of the product character
    to be 1; returns the unique constituent of the ordinary induction
    whose b-invariant matches, checking uniqueness and that all other
    constituents have bigger b.
    """
    b_sub = 0
    gamma_sub = 1
    for alpha in component_alphas:
        r = fake_degree_closed(alpha, d)
        b, g = r.valuation(), r.coeff(r.valuation())
        b_sub += b
        gamma_sub *= g
    if gamma_sub != 1:
        raise JInductionError(
            f"lowest fake-degree coefficient is {gamma_sub}, not 1")
    rows = [{g: mn_value(a, g, d) for g in d_partitions(d, m)}
            for a, m in zip(component_alphas, parts)]
    induced = induce_product_character(d, parts, rows, parent)
    mults = decompose_into_irreducibles(induced, parent)
    matching = []
    for alpha, mult in mults.items():
        r = fake_degree_closed(alpha, d)
        b = r.valuation()
        if b == b_sub:
            matching.append((alpha, mult, r.coeff(b)))
        elif b < b_sub:
            raise InvariantViolation(
                "induced constituent with smaller b-invariant")
    if len(matching) != 1 or matching[0][1] != 1:
        raise InvariantViolation("b-matching constituent is not unique")
    alpha, _, gamma = matching[0]
    if gamma != 1:
        raise InvariantViolation("j-induced character has gamma != 1")
    return alpha


# ---------------------------------------------------------------------------
# Characters of G(de,e,n): counts by cyclic-shift orbits


def cyclic_shift(alpha: DPartition, k: int = 1) -> DPartition:
    k %= len(alpha)
    return alpha[k:] + alpha[:k]


def stabilizer_order(alpha: DPartition, d: int, e: int) -> int:
    """Order s_e(alpha) of the stabilizer of alpha under shifts by d."""
    return sum(1 for k in range(e) if cyclic_shift(alpha, d * k) == alpha)


def shift_orbits(d: int, e: int, n: int) -> list[list[DPartition]]:
    """Orbits of de-partitions of n under the shift by d."""
    de = d * e
    seen = set()
    orbits = []
    for alpha in d_partitions(de, n):
        if alpha in seen:
            continue
        orbit = []
        cur = alpha
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            cur = cyclic_shift(cur, d)
        orbits.append(orbit)
    return orbits


def irr_count_gdeen(d: int, e: int, n: int) -> tuple[int, list]:
    """Number of irreducible characters of G(de,e,n), with orbit data.

    Each shift orbit of de-partitions contributes s_e(alpha) characters.
    Returns (count, [(orbit representative, orbit size, s_e)]).
    """
    orbits = shift_orbits(d, e, n)
    data = []
    total = 0
    for orbit in orbits:
        s = stabilizer_order(orbit[0], d, e)
        assert s * len(orbit) == e, "orbit-stabilizer mismatch"
        data.append((orbit[0], len(orbit), s))
        total += s
    return total, data


# ---------------------------------------------------------------------------
# Closed-form fake degrees


def fake_degree_closed(alpha: DPartition, d: int | None = None) -> LaurentPoly:
    """Fake degree of the character of G(d,1,n) labeled by alpha, from the
    hook-product formula over beta-numbers (no group enumeration).
    """
    if d is None:
        d = len(alpha)
    if len(alpha) != d:
        raise ValueError("label must have d components")
    n = sum(map(sum, alpha))
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for i in range(1, n + 1):
        num = num * LaurentPoly({0: -1, i * d: 1})
    shift_num = 0
    shift_den = 0
    for i, lam in enumerate(alpha):
        mi = len(lam)
        s = beta_set(lam, mi)
        # Delta(S, x^d): product over pairs of (x^(d a) - x^(d b)), a > b
        for ai in range(mi):
            for bi in range(ai + 1, mi):
                a, b = s[ai], s[bi]
                num = num * LaurentPoly({d * a: 1, d * b: -1})
        shift_num += i * sum(lam)
        # Theta(S, x^d): product over beta of prod_h (x^(d h) - 1)
        for lam_beta in s:
            for h in range(1, lam_beta + 1):
                den = den * LaurentPoly({d * h: 1, 0: -1})
        shift_den += d * comb(mi, 3)
    num = num.shift(shift_num)
    den = den.shift(shift_den)
    q, r = num.shift(-num.valuation()).divmod_poly(den.shift(-den.valuation()))
    if not r.is_zero():
        raise InvariantViolation("closed-form fake degree is not a polynomial")
    q = q.shift(num.valuation() - den.valuation())
    if not q.is_polynomial():
        raise InvariantViolation("closed-form fake degree has negative powers")
    return q


def fake_degree_gdeen(alpha: DPartition, d: int, e: int) -> LaurentPoly:
    """Fake degree of (all) characters of G(de,e,n) over the shift orbit
    of the de-partition alpha: (x^(nd)-1)/(x^(nde)-1) * sum of orbit fake
    degrees in G(de,1,n)."""
    de = d * e
    if len(alpha) != de:
        raise ValueError("label must have de components")
    n = sum(map(sum, alpha))
    orbit = []
    cur = alpha
    while cur not in orbit:
        orbit.append(cur)
        cur = cyclic_shift(cur, d)
    total = LaurentPoly.zero()
    for beta in orbit:
        total = total + fake_degree_closed(beta, de)
    total = total * LaurentPoly({0: -1, n * d: 1})
    den = LaurentPoly({0: -1, n * de: 1})
    q, r = total.divmod_poly(den)
    if not r.is_zero():
        raise InvariantViolation("fake degree of G(de,e,n) is not polynomial")
    return q


if __name__ == "__main__":
    import doctest
    doctest.testmod()
