"""Molien series, degrees, Solomon identities, fake degrees, regular
elements, exterior powers."""

from fractions import Fraction

import pytest

from reflgroups.classes import conjugacy_classes
from reflgroups.classfun import ClassFunction
from reflgroups.coxeter import CoxeterGroup
from reflgroups.cyclotomic import cyc, zeta
from reflgroups.errors import InvariantViolation
from reflgroups.imprim import ImprimitiveGroup
from reflgroups.invariants import (DegreeData, b_invariant_and_gamma,
                                   degree_data_enumerated, degree_data_imprim,
                                   degrees_from_molien, exterior_power_character,
                                   fake_degree, molien_series,
                                   palindrome_search, poincare_polynomial,
                                   regular_element_check, regular_numbers,
                                   solomon_identities)
from reflgroups.matrix import Matrix
from reflgroups.poly import LaurentPoly, RationalFunction, x_poly

x = x_poly()


class MatrixGroup:
    """Minimal enumerable matrix group for negative tests."""

    def __init__(self, gens, dim):
        self.dim = self.rank = dim
        self.gens = [Matrix(g) for g in gens]
        self.identity = Matrix.identity(dim)
        self._elements = None

    def generators(self):
        return list(self.gens)

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        out = self.identity
        cur = a
        while cur != self.identity:
            out = cur
            cur = cur * a
        return out

    def elements(self):
        if self._elements is None:
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for g in frontier:
                    for s in self.gens:
                        h = g * s
                        if h not in seen:
                            seen.add(h)
                            nxt.append(h)
                frontier = nxt
            self._elements = sorted(seen, key=lambda m: tuple(
                v.sort_key() if hasattr(v, "sort_key") else (0, Fraction(v))
                for row in m.rows for v in row))
        return self._elements

    def order(self):
        return len(self.elements())

    def matrix_of(self, g):
        return g

    def element_order(self, g):
        k, cur = 1, g
        while cur != self.identity:
            cur = cur * g
            k += 1
        return k


def test_molien_trivial_group():
    g = ImprimitiveGroup(1, 1, 1)
    assert molien_series(g) == RationalFunction.of(LaurentPoly.one(), 1 - x)


def test_molien_c2():
    g = ImprimitiveGroup(2, 1, 1)
    assert molien_series(g) == RationalFunction.of(LaurentPoly.one(),
                                                   1 - x ** 2)


def test_molien_s3_reflection_rep():
    w = CoxeterGroup("A2")
    expected = RationalFunction.of(LaurentPoly.one(),
                                   (1 - x ** 2) * (1 - x ** 3))
    assert molien_series(w) == expected


def test_degrees_from_molien_examples():
    p = RationalFunction.of(LaurentPoly.one(), (1 - x ** 2) * (1 - x ** 3))
    assert degrees_from_molien(p, 2) == [2, 3]
    g = ImprimitiveGroup(2, 1, 2)
    assert degrees_from_molien(molien_series(g), 2) == [2, 4]
    h3 = CoxeterGroup("H3")
    assert degrees_from_molien(molien_series(h3), 3) == [2, 6, 10]


def test_degrees_extraction_rejects_non_reflection_group():
    # <diag(z3, z3)> is not generated by reflections: no product form
    c3 = MatrixGroup([[[zeta(3), 0], [0, zeta(3)]]], 2)
    with pytest.raises(ValueError):
        degrees_from_molien(molien_series(c3), 2)


def test_degree_data_imprim_examples():
    dd = degree_data_imprim(3, 1, 2)
    assert dd.degrees == (3, 6) and dd.codegrees == (0, 3)
    dd = degree_data_imprim(2, 2, 2)                 # G(4,2,2)
    assert dd.degrees == (4, 4) and dd.codegrees == (0, 4)
    for e in (3, 4, 5):
        assert degree_data_imprim(1, e, 2).degrees == (2, e)
    # reducible edge cases
    assert degree_data_imprim(1, 1, 3).degrees == (1, 2, 3)
    assert degree_data_imprim(1, 2, 2).degrees == (2, 2)


def test_degree_data_enumerated_matches_closed_form():
    for d, e, n in [(2, 1, 2), (3, 1, 2), (1, 3, 3), (2, 2, 2), (1, 4, 2)]:
        g = ImprimitiveGroup(d, e, n)
        assert degree_data_enumerated(g) == degree_data_imprim(d, e, n)


def test_poincare_examples():
    assert poincare_polynomial([2, 3]) == \
        LaurentPoly({0: 1, 1: 2, 2: 2, 3: 1})
    assert poincare_polynomial([2]) == LaurentPoly({0: 1, 1: 1})
    for degrees in [(2, 3, 4), (2, 4), (2, 6, 10)]:
        p = poincare_polynomial(degrees)
        order = 1
        for d in degrees:
            order *= d
        assert p.evaluate(1) == order
        assert all(int(v) > 0 for _e, v in p.terms())


def test_solomon_examples():
    w = CoxeterGroup("A2")
    exps, coexps = solomon_identities(w)
    assert exps == (1, 2) and coexps == (1, 2)
    g = ImprimitiveGroup(2, 1, 2)
    exps, coexps = solomon_identities(g)
    assert exps == (1, 3)
    # real groups: coexponents equal exponents
    for name in ("A3", "B3"):
        e, ce = solomon_identities(CoxeterGroup(name))
        assert e == ce


def test_solomon_complex_group():
    g = ImprimitiveGroup(3, 1, 2)
    exps, coexps = solomon_identities(g)
    assert exps == (2, 5)           # degrees 3, 6
    assert coexps == (1, 4)         # codegrees 0, 3


def _chars_of(group, table_dn):
    from reflgroups.chars import char_table
    t = char_table(*table_dn)
    return [(alpha, t.class_function(group, alpha)) for alpha in t.labels]


def test_fake_degree_examples():
    w = ImprimitiveGroup(1, 1, 3)
    degrees = (1, 2, 3)
    classes = conjugacy_classes(w)
    triv = ClassFunction(w, [1] * len(classes))
    assert fake_degree(w, triv, degrees) == LaurentPoly.one()
    sign = ClassFunction.from_callable(w, w.det_of)
    assert fake_degree(w, sign, degrees) == LaurentPoly({3: 1})


def test_b_invariant_examples():
    assert b_invariant_and_gamma(LaurentPoly({1: 1, 2: 1})) == (1, 1)
    assert b_invariant_and_gamma(LaurentPoly.one()) == (0, 1)
    with pytest.raises(ValueError):
        b_invariant_and_gamma(LaurentPoly.zero())


def test_det_character_gamma_is_one():
    for d, e, n in [(1, 1, 3), (2, 1, 2), (3, 1, 2)]:
        g = ImprimitiveGroup(d, e, n)
        dd = degree_data_imprim(d, e, n)
        det = ClassFunction.from_callable(g, g.det_of)
        r = fake_degree(g, det, dd.degrees)
        assert b_invariant_and_gamma(r)[1] == 1


def test_palindrome_s3():
    w = CoxeterGroup("A2")
    degrees = (2, 3)
    classes = conjugacy_classes(w)
    triv = ClassFunction(w, [1] * len(classes))
    sign = ClassFunction.from_callable(w, w.det_of)
    refl = ClassFunction.from_callable(w, lambda g: w.matrix_of(g).trace())
    chars = [triv, sign, refl]
    fds = [fake_degree(w, c, degrees) for c in chars]
    pairing = palindrome_search(w, chars, fds)
    # every character of S3 is its own partner, with c = 0, 6, 3
    assert pairing == {0: (0, 0), 1: (1, 6), 2: (2, 3)}


def test_regular_numbers_examples():
    assert 6 in regular_numbers(degree_data_imprim(3, 1, 2))
    s4 = DegreeData((2, 3, 4), (0, 1, 2))
    regs = regular_numbers(s4)
    assert 3 in regs and 4 in regs
    for e in (3, 5):
        dd = degree_data_imprim(1, e, 2)
        regs = regular_numbers(dd)
        assert 2 in regs and e in regs


def test_regular_element_checks():
    w = CoxeterGroup("A2")
    dd = degree_data_enumerated(w)
    cox = w.word_to_element([0, 1])
    verdict = regular_element_check(w, cox, 3, dd)
    assert verdict.is_regular and verdict.eigenvalues_match
    assert regular_element_check(w, w.identity, 1, dd).is_regular

    g312 = ImprimitiveGroup(3, 1, 2)
    dd312 = degree_data_imprim(3, 1, 2)
    swap = g312.parse_element("(1 2);[0,0]")
    verdict = regular_element_check(g312, swap, 2, dd312)
    assert verdict.is_regular and verdict.eigenvalues_match

    # diag(-1, 1) in G(2,1,2): eigenspace of -1 lies inside x_2 = 0
    g212 = ImprimitiveGroup(2, 1, 2)
    diag = g212.parse_element("();[1,0]")
    verdict = regular_element_check(g212, diag, 2, degree_data_imprim(2, 1, 2))
    assert not verdict.is_regular

    # no eigenvalue at all
    verdict = regular_element_check(g212, g212.identity, 3,
                                    degree_data_imprim(2, 1, 2))
    assert not verdict.is_regular and verdict.eigenspace_dim == 0


def test_exterior_powers_s3():
    w = CoxeterGroup("A2")
    chi0, irr0 = exterior_power_character(w, 0)
    assert irr0 and chi0.degree() == 1
    chi1, irr1 = exterior_power_character(w, 1)
    assert irr1 and chi1.inner(chi1) == 1 and chi1.degree() == 2
    chi2, irr2 = exterior_power_character(w, 2)
    assert irr2
    det = ClassFunction.from_callable(w, w.det_of)
    assert chi2 == det


@pytest.mark.parametrize("maker", [
    lambda: CoxeterGroup("A2"),
    lambda: CoxeterGroup("A3"),
    lambda: ImprimitiveGroup(2, 1, 2),
    lambda: CoxeterGroup("H3"),
])
def test_exterior_powers_irreducible_distinct(maker):
    group = maker()
    chars = []
    for i in range(group.rank + 1):
        chi, irr = exterior_power_character(group, i)
        assert irr, f"Lambda^{i} not irreducible"
        chars.append(chi)
    for i in range(len(chars)):
        for j in range(i + 1, len(chars)):
            assert chars[i].values != chars[j].values


def test_orlik_solomon_conditions():
    """The four well-generation conditions agree on constructed groups;
    G(4,2,2) fails them, G(3,1,2) satisfies them."""
    def conditions(dd: DegreeData, n: int):
        d_n = dd.degrees[-1]
        c1 = all(d + ds == d_n for d, ds in
                 zip(dd.degrees, reversed(dd.codegrees)))
        c2 = dd.reflection_count + dd.hyperplane_count == n * d_n
        c3 = all(ds < d_n for ds in dd.codegrees)
        return c1, c2, c3

    dd_bad = degree_data_imprim(2, 2, 2)      # G(4,2,2)
    assert conditions(dd_bad, 2) == (False, False, False)
    assert not dd_bad.is_well_generated()
    dd_good = degree_data_imprim(3, 1, 2)
    assert conditions(dd_good, 2) == (True, True, True)
    assert dd_good.is_well_generated()
