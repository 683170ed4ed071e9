"""
Coxeter matrices and the finite real reflection groups they present.

A Coxeter matrix holds the orders m_st of the pairwise products of the
generating reflections.  From it we build the standard Cartan matrix with
exact entries -(z_2m + z_2m^-1) = -2cos(pi/m_st), the reflection
representation on the basis {alpha_s}, and the root system as the orbit
closure of the simple roots.  Group elements are stored as permutations of
the full root list, which is a faithful, hashable and fast representation;
matrices are materialized on demand from the images of the simple roots.

Finiteness is decided exactly: the leading principal minors of the Gram
matrix (-cos(pi/m_st)) are real cyclotomic numbers whose signs are
determined rigorously (interval arithmetic with doubling precision, exact
zero short-circuit).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import inf, lcm

from .cyclotomic import Cyclotomic, cyc, real_sign, zeta
from .errors import BudgetExceeded
from .matrix import Matrix

__all__ = [
    "INF", "CoxeterMatrix", "validate_coxeter_matrix", "coxeter_matrix_of_type",
    "parse_coxeter_matrix", "gram_matrix", "is_finite", "standard_cartan",
    "reflection_rep", "RootSystem", "generate_roots", "CoxeterGroup",
    "classify_finite_type", "bad_and_torsion_primes", "cayley_is_finite",
    "matsumoto_fold", "fold_over_group", "subexpression_set", "bruhat_leq",
]

INF = inf

DEFAULT_ELEMENT_BUDGET = 10 ** 6
DEFAULT_ROOT_LIMIT = 10 ** 4


# ---------------------------------------------------------------------------
# Coxeter matrices


@dataclass(frozen=True)
class CoxeterMatrix:
    entries: tuple

    @property
    def rank(self) -> int:
        return len(self.entries)

    def m(self, s: int, t: int):
        return self.entries[s][t]

    def has_infinite_entry(self) -> bool:
        return any(v == INF for row in self.entries for v in row)

    def to_text(self) -> str:
        return "\n".join(
            " ".join("inf" if v == INF else str(v) for v in row)
            for row in self.entries)

    def __str__(self):
        return self.to_text()


def validate_coxeter_matrix(rows) -> CoxeterMatrix:
    """Check symmetry, unit diagonal and off-diagonal entries in {2,3,...,inf}."""
    entries = tuple(tuple(row) for row in rows)
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise ValueError("Coxeter matrix must be square")
    for s in range(n):
        if entries[s][s] != 1:
            raise ValueError(f"diagonal entry m[{s}][{s}] must be 1")
        for t in range(s + 1, n):
            v = entries[s][t]
            if v != entries[t][s]:
                raise ValueError(f"asymmetric entries at ({s},{t})")
            if v != INF and (not isinstance(v, int) or v < 2):
                raise ValueError(f"off-diagonal entry {v!r} not in {{2,3,...}} u {{inf}}")
    return CoxeterMatrix(entries)


def parse_coxeter_matrix(text: str) -> CoxeterMatrix:
    """One line per row, whitespace-separated entries, "inf" for infinity."""
    rows = []
    for line in text.strip().splitlines():
        if not line.strip():
            continue
        rows.append([INF if tok.lower() == "inf" else int(tok)
                     for tok in line.split()])
    return validate_coxeter_matrix(rows)


_TYPE_EDGES = {
    # name -> function rank -> list of (s, t, m); vertices 0-based
    "A": lambda n: [(i, i + 1, 3) for i in range(n - 1)],
    "B": lambda n: [(0, 1, 4)] + [(i, i + 1, 3) for i in range(1, n - 1)],
    "D": lambda n: [(0, 2, 3), (1, 2, 3)] + [(i, i + 1, 3) for i in range(2, n - 1)],
    "F": lambda n: [(0, 1, 3), (1, 2, 4), (2, 3, 3)],
    "H": lambda n: [(0, 1, 5)] + [(i, i + 1, 3) for i in range(1, n - 1)],
    "E": lambda n: [(0, 2, 3), (2, 3, 3), (1, 3, 3)] +
                   [(i, i + 1, 3) for i in range(3, n - 1)],
}


def coxeter_matrix_of_type(name: str, rank: int = 0) -> CoxeterMatrix:
    """Coxeter matrix for a classified type: A..E, F4, H3, H4, I2(m), G2.

    >>> coxeter_matrix_of_type("A", 2).entries
    ((1, 3), (3, 1))
    """
    name = name.strip()
    if name.startswith("I2(") and name.endswith(")"):
        m = int(name[3:-1])
        rank = 2
        edges = [(0, 1, m)]
    elif name == "G2":
        rank, edges = 2, [(0, 1, 6)]
    else:
        if not rank:
            rank = int(name[1:])
            name = name[0]
        bounds = {"A": 1, "B": 2, "D": 4, "F": 4, "H": 3, "E": 6}
        if name not in bounds or rank < bounds[name] or \
                (name == "F" and rank != 4) or (name == "H" and rank > 4) or \
                (name == "E" and rank > 8):
            raise ValueError(f"unknown type {name}{rank}")
        edges = _TYPE_EDGES[name](rank)
    rows = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    for s, t, m in edges:
        rows[s][t] = rows[t][s] = m
    return validate_coxeter_matrix(rows)


# ---------------------------------------------------------------------------
# Gram / Cartan matrices and finiteness


@lru_cache(maxsize=None)
def _minus_two_cos(m: int) -> Cyclotomic:
    """-2cos(pi/m) = -(z_2m + z_2m^-1), exact."""
    z = zeta(2 * m)
    return -(z + z.conjugate())


def gram_matrix(M: CoxeterMatrix) -> Matrix:
    """The symmetric matrix (-cos(pi/m_st)); infinity entries give -1."""
    def entry(s, t):
        m = M.m(s, t)
        if m == INF:
            return cyc(-1)
        if m == 1:
            return cyc(1)
        if m == 2:
            return cyc(0)
        return _minus_two_cos(m) * Fraction(1, 2)
    n = M.rank
    return Matrix([[entry(s, t) for t in range(n)] for s in range(n)])


def is_finite(M: CoxeterMatrix) -> bool:
    """Positive definiteness of the cosine form, decided exactly."""
    g = gram_matrix(M)
    for k in range(1, M.rank + 1):
        minor = g.submatrix(k).det()
        if real_sign(Cyclotomic.of(minor) if not isinstance(minor, Cyclotomic)
                     else minor) <= 0:
            return False
    return True


def standard_cartan(M: CoxeterMatrix) -> Matrix:
    """Cartan matrix with c_st = -2cos(pi/m_st); rejects infinite entries."""
    if M.has_infinite_entry():
        raise ValueError("standard Cartan matrix undefined for m_st = inf")

    def entry(s, t):
        if s == t:
            return cyc(2)
        m = M.m(s, t)
        return cyc(0) if m == 2 else _minus_two_cos(m)
    n = M.rank
    return Matrix([[entry(s, t) for t in range(n)] for s in range(n)])


def reflection_rep(C: Matrix) -> list[Matrix]:
    """Generator matrices: s maps alpha_t to alpha_t - c_st alpha_s.

    In the basis {alpha_s} the matrix of s is the identity with row s
    replaced by -c_s.
    """
    n = C.nrows
    gens = []
    for s in range(n):
        rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        rows[s] = [(1 if t == s else 0) - C[s, t] for t in range(n)]
        gens.append(Matrix(rows))
    return gens


# ---------------------------------------------------------------------------
# Root systems


_SIGN_CACHE: dict = {}


def _coord_sign(v) -> int:
    if isinstance(v, int):
        return (v > 0) - (v < 0)
    if isinstance(v, Fraction):
        return (v > 0) - (v < 0)
    key = (v.n, v.c)
    s = _SIGN_CACHE.get(key)
    if s is None:
        s = real_sign(v)
        _SIGN_CACHE[key] = s
    return s


class RootSystem:
    """Finite root orbit with positive/negative split.

    Roots are indexed 0..2N-1: index i < N is the i-th positive root in a
    deterministic sorted order, index N+i is its negative.
    """

    def __init__(self, positive: list[tuple], simple: list[tuple]):
        self.pos = tuple(positive)
        self.N = len(positive)
        self.simple = tuple(simple)
        self.index = {r: i for i, r in enumerate(self.pos)}
        for i, r in enumerate(self.pos):
            self.index[tuple(-v for v in r)] = self.N + i
        self.simple_index = tuple(self.index[r] for r in simple)

    def root(self, i: int) -> tuple:
        if i < self.N:
            return self.pos[i]
        return tuple(-v for v in self.pos[i - self.N])

    def all_roots(self) -> list[tuple]:
        return [self.root(i) for i in range(2 * self.N)]

    def __len__(self):
        return 2 * self.N


def _apply_gen(cartan_row, s: int, root: tuple) -> tuple:
    """Image of a root under generator s: only coordinate s changes."""
    acc = 0
    for t, x in enumerate(root):
        if x:
            acc = acc + cartan_row[t] * x
    new = list(root)
    new[s] = new[s] - acc
    return tuple(new)


def generate_roots(C: Matrix, limit: int = DEFAULT_ROOT_LIMIT) -> RootSystem:
    """Orbit closure of the simple roots under the generators.

    Raises BudgetExceeded when more than `limit` roots appear (infinite
    group, or guard too small).
    """
    n = C.nrows
    simple = [tuple(1 if i == s else 0 for i in range(n)) for s in range(n)]
    seen = set(simple)
    frontier = list(simple)
    rows = [tuple(C.rows[s]) for s in range(n)]
    while frontier:
        nxt = []
        for r in frontier:
            for s in range(n):
                img = _apply_gen(rows[s], s, r)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
                    if len(seen) > 2 * limit:
                        raise BudgetExceeded(
                            f"root closure exceeded {2 * limit} roots")
        frontier = nxt
    positive = []
    for r in seen:
        signs = [_coord_sign(v) for v in r if _coord_sign(v) != 0]
        if all(s > 0 for s in signs):
            positive.append(r)
        elif not all(s < 0 for s in signs):
            raise BudgetExceeded("mixed-sign root: group is not finite")
    positive.sort(key=_root_sort_key)
    return RootSystem(positive, simple)


def _root_sort_key(r: tuple):
    return tuple(v.sort_key() if isinstance(v, Cyclotomic)
                 else (1, Fraction(v)) for v in r)


# ---------------------------------------------------------------------------
# The group, as permutations of roots


class CoxeterGroup:
    """A finite real reflection group from a Coxeter or Cartan matrix.

    Elements are permutations of the root list (tuples of root indices);
    `identity`, `mul`, `inv` and `word_to_element` provide the group
    structure, `matrix_of` materializes the exact matrix.
    """

    def __init__(self, source, budget: int = DEFAULT_ELEMENT_BUDGET,
                 root_limit: int = DEFAULT_ROOT_LIMIT, name: str = ""):
        if isinstance(source, CoxeterMatrix):
            self.coxeter_matrix = source
            self.cartan = standard_cartan(source)
        elif isinstance(source, Matrix):
            self.coxeter_matrix = None
            self.cartan = source
        else:
            self.coxeter_matrix = coxeter_matrix_of_type(str(source))
            name = name or str(source)
            self.cartan = standard_cartan(self.coxeter_matrix)
        self.name = name
        self.budget = budget
        self.roots = generate_roots(self.cartan, root_limit)
        self.rank = self.cartan.nrows
        self.dim = self.rank
        n2 = 2 * self.roots.N
        rows = [tuple(self.cartan.rows[s]) for s in range(self.rank)]
        self.gens = []
        for s in range(self.rank):
            perm = tuple(self.roots.index[_apply_gen(rows[s], s, self.roots.root(i))]
                         for i in range(n2))
            self.gens.append(perm)
        self.identity = tuple(range(n2))
        self._elements: list | None = None
        self._root_vectors = [self.roots.root(i) for i in range(n2)]

    # -- group structure ---------------------------------------------------

    def mul(self, a: tuple, b: tuple) -> tuple:
        return tuple(map(a.__getitem__, b))

    def inv(self, a: tuple) -> tuple:
        out = [0] * len(a)
        for i, v in enumerate(a):
            out[v] = i
        return tuple(out)

    def word_to_element(self, word) -> tuple:
        g = self.identity
        for s in word:
            g = self.mul(g, self.gens[s])
        return g

    def generators(self) -> list[tuple]:
        return list(self.gens)

    def order(self) -> int:
        return len(self.elements())

    def elements(self) -> list[tuple]:
        """All group elements, BFS closure, sorted by (length, permutation)."""
        if self._elements is None:
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for g in frontier:
                    for s in self.gens:
                        h = tuple(map(g.__getitem__, s))
                        if h not in seen:
                            if len(seen) >= self.budget:
                                raise BudgetExceeded(
                                    f"group enumeration exceeded budget "
                                    f"{self.budget}")
                            seen.add(h)
                            nxt.append(h)
                frontier = nxt
            self._elements = sorted(seen, key=lambda g: (self.length(g), g))
        return self._elements

    # -- lengths, words, order ----------------------------------------------

    def length(self, g: tuple) -> int:
        N = self.roots.N
        return sum(1 for i in range(N) if g[i] >= N)

    def is_right_descent(self, g: tuple, s: int) -> bool:
        return g[self.roots.simple_index[s]] >= self.roots.N

    def reduced_word(self, g: tuple) -> list[int]:
        """Reduced word for g; ties broken by smallest generator index.

        Built from left descents, so the word multiplies out left to right.
        """
        word = []
        g_inv = self.inv(g)
        while g_inv != self.identity:
            # s is a left descent of g iff g^-1 sends alpha_s negative
            s = next(s for s in range(self.rank)
                     if self.is_right_descent(g_inv, s))
            word.append(s)
            g_inv = self.mul(g_inv, self.gens[s])
        return word

    def element_order(self, g: tuple) -> int:
        seen_order = 1
        visited = [False] * len(g)
        for i in range(len(g)):
            if not visited[i]:
                ln, j = 0, i
                while not visited[j]:
                    visited[j] = True
                    j = g[j]
                    ln += 1
                seen_order = lcm(seen_order, ln)
        return seen_order

    def coxeter_element(self) -> tuple:
        return self.word_to_element(range(self.rank))

    # -- matrices ------------------------------------------------------------

    def matrix_of(self, g: tuple) -> Matrix:
        cols = [self._root_vectors[g[self.roots.simple_index[s]]]
                for s in range(self.rank)]
        return Matrix(list(zip(*cols)))

    def det_of(self, g: tuple) -> int:
        return -1 if self.length(g) % 2 else 1

    def fixed_space_dim(self, g: tuple) -> int:
        m = self.matrix_of(g)
        shifted = Matrix([[m[i, j] - (1 if i == j else 0)
                           for j in range(self.rank)] for i in range(self.rank)])
        return self.rank - shifted.rank()

    def reflections(self) -> list[tuple]:
        """All reflections (one per positive root)."""
        out = set(self.gens)
        frontier = list(self.gens)
        while frontier:
            nxt = []
            for r in frontier:
                for s in self.gens:
                    c = self.mul(self.mul(s, r), s)
                    if c not in out:
                        out.add(c)
                        nxt.append(c)
            frontier = nxt
        assert len(out) == self.roots.N
        return sorted(out)

    def hyperplanes(self) -> list[tuple]:
        """Canonical covectors of the reflecting hyperplanes."""
        from .reflops import hyperplane_covector
        return sorted({hyperplane_covector(self.matrix_of(r))
                       for r in self.reflections()},
                      key=_root_sort_key)

    def apply_to_vector(self, g: tuple, v: tuple) -> tuple:
        return self.matrix_of(g).apply(v)

    def __repr__(self):
        label = self.name or f"rank {self.rank}"
        return f"CoxeterGroup({label}, N={self.roots.N})"


# ---------------------------------------------------------------------------
# Matsumoto's theorem: folding over reduced words


def matsumoto_fold(group: CoxeterGroup, word, unit, star, images,
                   verify_reduced: bool = True):
    """Fold images of the letters of a reduced word through a monoid.

    The result is independent of the chosen reduced word (checked
    separately by `fold_over_group`); non-reduced input is rejected when
    verification is requested.
    """
    word = list(word)
    if verify_reduced:
        g = group.word_to_element(word)
        if group.length(g) != len(word):
            raise ValueError("word is not reduced")
    acc = unit
    for s in word:
        acc = star(acc, images[s])
    return acc


def fold_over_group(group: CoxeterGroup, unit, star, images) -> dict:
    """Fold values F(w) for every group element, verifying independence.

    Dynamic program over lengths: every reduced word of w arises as
    s * (reduced word of sw) over the left descents s of w, so agreement
    of all those candidates is exactly Matsumoto independence.
    """
    elems = group.elements()
    values = {group.identity: unit}
    for g in elems:
        if g == group.identity:
            continue
        lg = group.length(g)
        candidates = []
        for s in range(group.rank):
            h = group.mul(group.gens[s], g)
            if group.length(h) < lg:
                candidates.append(star(images[s], values[h]))
        first = candidates[0]
        if any(c != first for c in candidates[1:]):
            raise ValueError(f"fold is not reduced-word independent at {g}")
        values[g] = first
    return values


def subexpression_set(group: CoxeterGroup, w: tuple) -> frozenset:
    """All subexpression products of one (hence any) reduced word of w."""
    out = {group.identity}
    for s in group.reduced_word(w):
        out |= {group.mul(y, group.gens[s]) for y in out}
    return frozenset(out)


def bruhat_leq(group: CoxeterGroup, y: tuple, w: tuple) -> bool:
    """Bruhat-Chevalley order: y <= w iff y is a subexpression of w."""
    return y in subexpression_set(group, w)


# ---------------------------------------------------------------------------
# Classification of finite types


def graph_components(M: CoxeterMatrix) -> list[list[int]]:
    n = M.rank
    seen = [False] * n
    comps = []
    for v in range(n):
        if seen[v]:
            continue
        comp, stack = [], [v]
        seen[v] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for t in range(n):
                if not seen[t] and M.m(u, t) != 2 and u != t:
                    seen[t] = True
                    stack.append(t)
        comps.append(sorted(comp))
    return comps


def classify_finite_type(M: CoxeterMatrix) -> list[tuple[str, int]]:
    """Decompose a finite Coxeter matrix into irreducible classified types.

    Raises ValueError when the matrix is not of finite type.
    """
    if not is_finite(M):
        raise ValueError("Coxeter matrix is not of finite type")
    out = []
    for comp in graph_components(M):
        out.append(_classify_component(M, comp))
    return out


def _classify_component(M: CoxeterMatrix, comp: list[int]) -> tuple[str, int]:
    rank = len(comp)
    if rank == 1:
        return ("A", 1)
    edges = {}
    adj = {v: [] for v in comp}
    for i, u in enumerate(comp):
        for v in comp[i + 1:]:
            m = M.m(u, v)
            if m >= 3:
                edges[(u, v)] = m
                adj[u].append(v)
                adj[v].append(u)
    degrees = {v: len(adj[v]) for v in comp}
    branch = [v for v in comp if degrees[v] >= 3]
    labels = sorted(edges.values())
    if branch:
        if len(branch) != 1 or degrees[branch[0]] != 3 or any(m != 3 for m in labels):
            raise ValueError("unclassifiable branched diagram")
        b = branch[0]
        legs = []
        for start in adj[b]:
            ln, prev, cur = 1, b, start
            while True:
                nxts = [t for t in adj[cur] if t != prev]
                if not nxts:
                    break
                prev, cur = cur, nxts[0]
                ln += 1
            legs.append(ln)
        legs.sort()
        if legs[0] == 1 and legs[1] == 1:
            return ("D", rank)
        if legs == [1, 2, 2]:
            return ("E", 6)
        if legs == [1, 2, 3]:
            return ("E", 7)
        if legs == [1, 2, 4]:
            return ("E", 8)
        raise ValueError("unclassifiable branched diagram")
    # path: walk it from an endpoint
    ends = [v for v in comp if degrees[v] == 1]
    if len(ends) != 2:
        raise ValueError("diagram is not a tree")
    seq = [ends[0]]
    while len(seq) < rank:
        nxt = [t for t in adj[seq[-1]] if len(seq) < 2 or t != seq[-2]]
        seq.append(nxt[0])
    label_seq = [edges[tuple(sorted((seq[i], seq[i + 1])))]
                 for i in range(rank - 1)]
    if label_seq[0] < label_seq[-1]:
        label_seq.reverse()
    if all(m == 3 for m in label_seq):
        return ("A", rank)
    if rank == 2:
        m = label_seq[0]
        return ("B", 2) if m == 4 else (f"I2({m})", 2)
    big = [m for m in label_seq if m > 3]
    if len(big) == 1 and label_seq[0] == big[0]:
        if big[0] == 4 and all(m == 3 for m in label_seq[1:]):
            return ("B", rank)
        if big[0] == 5 and rank in (3, 4) and all(m == 3 for m in label_seq[1:]):
            return ("H", rank)
    if rank == 4 and label_seq in ([3, 4, 3],):
        return ("F", 4)
    if rank == 4 and label_seq[1] == 4 and label_seq[0] == label_seq[2] == 3:
        return ("F", 4)
    raise ValueError(f"unclassifiable path labels {label_seq}")


# ---------------------------------------------------------------------------
# Bad and torsion primes (crystallographic types)


_CRYSTAL_DOUBLE_EDGES = {
    # type -> (edge position, (c_st, c_ts)) overriding the single-bond -1s
    "B": ((0, 1), (-2, -1)),
    "C": ((0, 1), (-1, -2)),
    "F": ((1, 2), (-1, -2)),
    "G": ((0, 1), (-1, -3)),
}


def crystallographic_cartan(name: str, rank: int) -> Matrix:
    """Integer Cartan matrix for A/B/C/D/G2/F4/E6/E7/E8."""
    if name == "G":
        if rank != 2:
            raise ValueError("G has rank 2")
        edges = [(0, 1, 3)]
    elif name == "C":
        if rank < 2:
            raise ValueError("C needs rank >= 2")
        edges = [(i, i + 1, 3) for i in range(rank - 1)]
    elif name in _TYPE_EDGES and name not in ("H",):
        edges = _TYPE_EDGES[name](rank)
    else:
        raise ValueError(f"no crystallographic Cartan for type {name}")
    rows = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for s, t, _m in edges:
        rows[s][t] = rows[t][s] = -1
    if name in _CRYSTAL_DOUBLE_EDGES:
        (s, t), (cst, cts) = _CRYSTAL_DOUBLE_EDGES[name]
        rows[s][t], rows[t][s] = cst, cts
    return Matrix(rows)


def bad_and_torsion_primes(name: str, rank: int) -> tuple[set, set]:
    """Bad and torsion primes, computed from highest-(co)root coefficients.

    Bad primes divide a coefficient m_alpha of the highest root; torsion
    primes divide a coefficient of the coroot of the highest root in the
    simple-coroot basis.  The classical table is the test oracle.
    """
    if name not in ("A", "B", "C", "D", "G", "F", "E"):
        raise ValueError(f"type {name} is not crystallographic")
    C = crystallographic_cartan(name, rank)
    roots = generate_roots(C)
    # symmetrizer d_s: d_s c_st = d_t c_ts, normalized d_0 = 1
    d = [Fraction(0)] * rank
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        s = todo.pop()
        for t in range(rank):
            if t != s and C[s, t] != 0 and d[t] == 0:
                d[t] = d[s] * Fraction(C[s, t], C[t, s])
                todo.append(t)
    highest = max(roots.pos, key=lambda r: sum(r))
    norm_half = Fraction(0)   # (alpha0, alpha0)/2 with (a_s,a_t) = d_s c_st
    for s in range(rank):
        for t in range(rank):
            norm_half += Fraction(highest[s]) * highest[t] * d[s] * C[s, t]
    norm_half /= 2
    bad = set()
    torsion = set()
    for t in range(rank):
        coeff = highest[t]
        for p in _prime_divisors(coeff):
            bad.add(p)
        co = Fraction(coeff) * d[t] / norm_half
        assert co.denominator == 1, "coroot coefficient must be integral"
        for p in _prime_divisors(co.numerator):
            torsion.add(p)
    return bad, torsion


def _prime_divisors(k: int) -> list[int]:
    from .cyclotomic import prime_factors
    return prime_factors(abs(k)) if abs(k) > 1 else []


# ---------------------------------------------------------------------------
# Brute-force finiteness via Cayley closure (cross-check oracle)


def cayley_is_finite(M: CoxeterMatrix, budget: int = 300) -> bool:
    """Close the group of reflection matrices; True iff closure <= budget.

    Only used as an independent oracle for `is_finite` on small ranks;
    infinite entries use the Cartan value c_st = c_ts = -2.
    """
    n = M.rank

    def entry(s, t):
        if s == t:
            return cyc(2)
        m = M.m(s, t)
        if m == INF:
            return cyc(-2)
        return cyc(0) if m == 2 else _minus_two_cos(m)

    C = Matrix([[entry(s, t) for t in range(n)] for s in range(n)])
    gens = reflection_rep(C)
    seen = {Matrix.identity(n)}
    frontier = [Matrix.identity(n)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in seen:
                    if len(seen) >= budget:
                        return False
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return True


if __name__ == "__main__":
    import doctest
    doctest.testmod()
