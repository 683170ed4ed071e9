"""Class functions on a finite group, indexed by its conjugacy classes."""

from __future__ import annotations

from fractions import Fraction

from .classes import conjugacy_classes
from .cyclotomic import Cyclotomic, cyc

__all__ = ["ClassFunction"]


class ClassFunction:
    """Values aligned with the canonical conjugacy-class order of a group."""

    __slots__ = ("group", "values")

    def __init__(self, group, values):
        self.group = group
        self.values = tuple(Cyclotomic.of(v) if not isinstance(v, Cyclotomic)
                            else v for v in values)
        if len(self.values) != len(conjugacy_classes(group)):
            raise ValueError("one value per conjugacy class required")

    @classmethod
    def from_callable(cls, group, f) -> "ClassFunction":
        return cls(group, [f(c.representative)
                           for c in conjugacy_classes(group)])

    def _class_index(self) -> dict:
        idx = getattr(self.group, "_class_index", None)
        if idx is None:
            idx = {}
            for i, c in enumerate(conjugacy_classes(self.group)):
                for g in c.members:
                    idx[g] = i
            self.group._class_index = idx
        return idx

    def value_on(self, g) -> Cyclotomic:
        return self.values[self._class_index()[g]]

    def degree(self) -> Cyclotomic:
        return self.value_on(self.group.identity)

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, [v.conjugate() for v in self.values])

    def inner(self, other: "ClassFunction") -> Fraction | Cyclotomic:
        """<self, other> = (1/|W|) sum |C| self(C) conj(other(C))."""
        total = cyc(0)
        for c, a, b in zip(conjugacy_classes(self.group),
                           self.values, other.values):
            total = total + a * b.conjugate() * c.size
        total = total * Fraction(1, self.group.order())
        return total.rational_value() if total.is_rational() else total

    def __add__(self, other):
        return ClassFunction(self.group,
                             [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        return ClassFunction(self.group,
                             [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            return ClassFunction(self.group, [a * b for a, b in
                                              zip(self.values, other.values)])
        return ClassFunction(self.group, [v * other for v in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and \
            self.group is other.group and self.values == other.values

    def __hash__(self):
        return hash((id(self.group), self.values))

    def __repr__(self):
        return f"ClassFunction{tuple(str(v) for v in self.values)}"
