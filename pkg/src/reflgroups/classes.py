"""
Conjugacy classes of finite reflection groups, and the length-function
phenomena specific to the real (Coxeter) case: descent of an element to a
minimal-length class representative by non-increasing generator
conjugation, the decomposition of any element as a product of two
involutions, and explicit conjugate-to-inverse witnesses.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvariantViolation

__all__ = [
    "ConjClass", "conjugacy_classes", "class_of", "gp_descent",
    "carter_decomposition", "conjugate_to_inverse",
]


@dataclass(frozen=True)
class ConjClass:
    representative: object
    members: tuple
    l_min: int | None

    @property
    def size(self) -> int:
        return len(self.members)


def _has_length(group) -> bool:
    return hasattr(group, "length") and hasattr(group, "reduced_word")


def conjugacy_classes(group) -> list[ConjClass]:
    """Partition of the group into conjugacy classes.

    Orbits are closed under conjugation by the generators only, which
    suffices.  Classes are sorted by (l_min, size, representative) when a
    length function exists, else by (size, representative); the cached
    result lives on the group object.
    """
    cached = getattr(group, "_conj_classes", None)
    if cached is not None:
        return cached
    elements = group.elements()
    gens = group.generators()
    gen_invs = [group.inv(s) for s in gens]
    remaining = set(elements)
    classes = []
    lengthy = _has_length(group)
    for seed in elements:
        if seed not in remaining:
            continue
        orbit = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for g in frontier:
                for s, si in zip(gens, gen_invs):
                    h = group.mul(si, group.mul(g, s))
                    if h not in orbit:
                        orbit.add(h)
                        nxt.append(h)
            frontier = nxt
        remaining -= orbit
        if lengthy:
            # canonical representative: minimal (length, lex reduced word)
            members = tuple(sorted(
                orbit, key=lambda g: (group.length(g), group.reduced_word(g))))
            l_min = group.length(members[0])
        else:
            try:
                members = tuple(sorted(orbit))
            except TypeError:
                members = tuple(sorted(orbit, key=repr))
            l_min = None
        classes.append(ConjClass(members[0], members, l_min))
    if lengthy:
        classes.sort(key=lambda c: (c.l_min, c.size, c.representative))
    else:
        try:
            classes.sort(key=lambda c: (c.size, c.representative))
        except TypeError:
            classes.sort(key=lambda c: (c.size, repr(c.representative)))
    group._conj_classes = classes
    return classes


def class_of(group, x) -> ConjClass:
    for c in conjugacy_classes(group):
        if x in c.members:
            return c
    raise ValueError("element not in group")


def gp_descent(group, x) -> list[tuple]:
    """Path of non-increasing conjugations from x to a minimal-length
    class element.

    Breadth-first search over steps y -> s y s with l(sys) <= l(y); the
    descent theorem guarantees some member of C_min is reachable, so
    failure raises.  Returns [(element, generator), ...] ending at C_min;
    an element already of minimal length gives the empty path.
    """
    l_min = class_of(group, x).l_min
    lx = group.length(x)
    if lx == l_min:
        return []
    parent = {x: None}
    queue = deque([(x, lx)])
    while queue:
        g, lg = queue.popleft()
        for s_idx, s in enumerate(group.generators()):
            h = group.mul(s, group.mul(g, s))
            lh = group.length(h)
            if lh > lg or h in parent:
                continue
            parent[h] = (g, s_idx)
            if lh == l_min:
                path = []
                cur = h
                while parent[cur] is not None:
                    prev, step = parent[cur]
                    path.append((cur, step))
                    cur = prev
                path.reverse()
                return path
            queue.append((h, lh))
    raise InvariantViolation(
        "descent to a minimal-length element failed; this contradicts the "
        "minimal-length conjugation theorem")


def _involutions(group) -> list:
    cached = getattr(group, "_involutions", None)
    if cached is None:
        cached = [g for g in group.elements()
                  if group.mul(g, g) == group.identity]
        cached.sort(key=lambda g: (group.length(g), g))
        group._involutions = cached
    return cached


def carter_decomposition(group, w) -> tuple:
    """Write w = x*y with x^2 = y^2 = identity (x searched by length)."""
    for x in _involutions(group):
        y = group.mul(x, w)
        if group.mul(y, y) == group.identity:
            return x, y
    raise InvariantViolation(
        f"no involution decomposition found for {w}; this contradicts the "
        "two-involutions theorem for real reflection groups")


def conjugate_to_inverse(group, w):
    """A witness g with g w g^-1 = w^-1."""
    w_inv = group.inv(w)
    for g in group.elements():
        if group.mul(group.mul(g, w), group.inv(g)) == w_inv:
            return g
    raise InvariantViolation(
        f"{w} is not conjugate to its inverse; this contradicts the "
        "conjugate-to-inverse theorem for real reflection groups")
