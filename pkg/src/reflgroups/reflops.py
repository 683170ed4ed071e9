"""
Operations shared by the matrix and monomial reflection-group models:
hyperplane covectors, root-of-unity factorization of det(1 - gx), and
the two-way parabolic-subgroup computation.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic, cyc, zeta
from .errors import InvariantViolation
from .matrix import Matrix
from .poly import LaurentPoly

__all__ = [
    "hyperplane_covector", "unit_eigenvalues", "reflection_closure",
    "pointwise_stabilizer", "parabolic_subgroup",
]


def hyperplane_covector(m: Matrix) -> tuple:
    """Canonical linear form cutting out the fixed hyperplane of a reflection.

    The fixed space ker(m - 1) of a reflection has codimension one, so the
    row space of m - 1 is spanned by a single covector; it is normalized to
    have first nonzero coordinate 1.
    """
    n = m.nrows
    shifted = Matrix([[m[i, j] - (1 if i == j else 0) for j in range(n)]
                      for i in range(n)])
    rows, pivots = shifted.rref()
    if len(pivots) != 1:
        raise ValueError("not a reflection: fixed space has codimension != 1")
    return tuple(rows[0])


def unit_eigenvalues(m: Matrix, order: int) -> list[tuple[int, int]]:
    """Eigenvalues of a finite-order matrix, as canonical root-of-unity keys.

    Returns a list of (k, a) pairs meaning zeta_k^a with gcd(a, k) = 1,
    with multiplicity, covering all n eigenvalues.
    """
    from math import gcd
    p = m.det_one_minus_x()          # prod (1 - lambda x)
    out = []
    for j in range(order):
        g = gcd(j, order) if j else order
        k, a = order // g, j // g
        lam = zeta(k, a)
        factor = LaurentPoly({0: 1, 1: -lam})
        while True:
            q, r = p.divmod_poly(factor)
            if not r.is_zero():
                break
            p = q
            out.append((k, a))
    if not (p == 1):
        raise InvariantViolation("det(1-gx) did not split into unit factors")
    return sorted(out)


def apply_element(group, g, vec: tuple) -> tuple:
    return group.apply_to_vector(g, vec)


def pointwise_stabilizer(group, basis: list[tuple]) -> set:
    """Brute-force pointwise stabilizer of span(basis)."""
    out = set()
    for g in group.elements():
        if all(tuple(map(cyc, apply_element(group, g, v))) ==
               tuple(map(cyc, v)) for v in basis):
            out.add(g)
    return out


def reflection_closure(group, refls) -> set:
    """Subgroup generated by the given reflections, inside `group`."""
    refls = list(refls)
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for r in refls:
                h = group.mul(g, r)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def parabolic_subgroup(group, basis: list[tuple]) -> set:
    """Pointwise stabilizer of a subspace, computed two independent ways.

    Both the brute-force stabilizer and the closure of the reflections
    whose hyperplane contains the subspace are computed; a mismatch would
    contradict the parabolic-generation theorem and raises.
    """
    brute = pointwise_stabilizer(group, basis)
    refls = []
    for r in group.reflections():
        cov = hyperplane_covector(group.matrix_of(r))
        if all(_pair(cov, v).is_zero() for v in basis):
            refls.append(r)
    closed = reflection_closure(group, refls)
    if brute != closed:
        raise InvariantViolation(
            "parabolic stabilizer differs from its reflection closure")
    return brute


def _pair(cov: tuple, vec: tuple) -> Cyclotomic:
    acc = cyc(0)
    for c, v in zip(cov, vec):
        if not (isinstance(c, int) and c == 0) and \
           not (isinstance(v, int) and v == 0):
            acc = acc + Cyclotomic.of(c) * Cyclotomic.of(v)
    return acc
