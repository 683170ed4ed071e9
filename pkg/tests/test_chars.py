"""Wreath-product character theory: the hook-strip recursion against
explicit matrix representations, table validation, induction, counts,
closed-form fake degrees."""

import random
from fractions import Fraction

import pytest

from reflgroups.chars import (WreathCharTable, beta_set, char_table,
                              class_centralizer_order, class_param_of,
                              class_rep_element, class_size, d_partitions,
                              decompose_into_irreducibles, fake_degree_closed,
                              fake_degree_gdeen, induce_product_character,
                              irr_count_gdeen, j_induce, JInductionError,
                              mn_value, mn_value_with_order, partitions,
                              rim_hook_removals, stabilizer_order)
from reflgroups.classes import conjugacy_classes
from reflgroups.cyclotomic import cyc, zeta
from reflgroups.errors import BudgetExceeded
from reflgroups.imprim import ImprimitiveGroup
from reflgroups.invariants import poincare_polynomial, degree_data_imprim
from reflgroups.matrix import Matrix
from reflgroups.poly import LaurentPoly


# -- partitions ------------------------------------------------------------------

def test_partition_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(d_partitions(1, 3)) == 3
    assert d_partitions(2, 2) == (((2,), ()), ((1, 1), ()), ((1,), (1,)),
                                  ((), (2,)), ((), (1, 1)))
    assert len(d_partitions(3, 2)) == 9


def test_rim_hooks():
    # (2,1) has no removable border strip of size 2 but is itself a 3-hook
    assert rim_hook_removals((2, 1), 2) == []
    assert rim_hook_removals((2, 1), 3) == [((), 1)]
    assert {mu: leg for mu, leg in rim_hook_removals((3, 1), 2)} == \
        {(1, 1): 0}
    assert {mu: leg for mu, leg in rim_hook_removals((2, 2), 2)} == \
        {(1, 1): 1, (2,): 0}
    assert rim_hook_removals((2, 2), 3) == [((1,), 1)]
    assert rim_hook_removals((2, 2), 4) == []          # not a hook


def test_beta_set():
    assert beta_set((2, 1)) == (3, 1)
    assert beta_set((2, 1), 4) == (5, 3, 1, 0)


# -- explicit matrix representations of S3 and S4 (the brute-force oracle) ----------

def _standard_rep_matrix(perm, n):
    """Matrix of a permutation on basis v_i = e_i - e_(i+1), exact."""
    def e_diff(a, b):
        # e_a - e_b as a vector in the v basis
        coords = [0] * (n - 1)
        if a < b:
            for k in range(a, b):
                coords[k] = 1
        else:
            for k in range(b, a):
                coords[k] = -1
        return coords
    cols = [e_diff(perm[i], perm[i + 1]) for i in range(n - 1)]
    return Matrix(list(zip(*cols)))


def _sign(perm):
    n = len(perm)
    s = 1
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                s = -s
    return s


def _s4_two_dim(perm):
    """S4 -> S3 (mod the Klein group), then the standard rep of S3."""
    # the quotient acts on the 3 coordinate-pairings of {0,1,2,3}
    pairings = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]

    def act(p):
        def norm(pair):
            a, b = sorted((perm[pair[0]], perm[pair[1]]))
            return (a, b)
        return tuple(sorted((norm(p[0]), norm(p[1]))))
    images = [pairings.index(act(p)) for p in pairings]
    return _standard_rep_matrix(tuple(images), 3)


def _brute_force_sym_table(n):
    """Character table rows from explicit matrix irreps, as value tuples
    over the canonical class order of G(1,1,n)."""
    group = ImprimitiveGroup(1, 1, n)
    reps = [c.representative for c in conjugacy_classes(group)]
    rows = []
    rows.append(tuple(cyc(1) for _ in reps))                      # trivial
    rows.append(tuple(cyc(_sign(r.perm)) for r in reps))          # sign
    rows.append(tuple(Matrix(_standard_rep_matrix(r.perm, n).rows).trace()
                      for r in reps))                             # standard
    if n == 4:
        rows.append(tuple(
            cyc(_sign(r.perm)) * _standard_rep_matrix(r.perm, n).trace()
            for r in reps))                                       # std x sign
        rows.append(tuple(_s4_two_dim(r.perm).trace() for r in reps))
    return group, reps, [tuple(Cyc_of(v) for v in row) for row in rows]


def Cyc_of(v):
    from reflgroups.cyclotomic import Cyclotomic
    return v if isinstance(v, Cyclotomic) else cyc(v)


@pytest.mark.parametrize("n", [3, 4])
def test_sym_table_matches_matrix_reps(n):
    group, reps, brute_rows = _brute_force_sym_table(n)
    table = char_table(1, n)
    mn_rows = {alpha: tuple(table.value(alpha, class_param_of(group, r))
                            for r in reps) for alpha in table.labels}
    # every matrix-rep character appears among the recursion rows
    for row in brute_rows:
        assert row in mn_rows.values()
    # the full tables coincide for n = 3 (all three irreducibles built)
    if n == 3:
        key = lambda row: [v.sort_key() for v in row]
        assert sorted(mn_rows.values(), key=key) == sorted(brute_rows, key=key)
    # known label associations
    assert mn_rows[((n,),)] == brute_rows[0]           # trivial
    assert mn_rows[((1,) * n,)] == brute_rows[1]       # sign
    assert mn_rows[((n - 1, 1),)] == brute_rows[2]     # standard


def test_g212_table_matches_brute_force():
    group = ImprimitiveGroup(2, 1, 2)
    reps = [c.representative for c in conjugacy_classes(group)]
    # four linear characters eps1^(sum exps) * eps2^(sign), plus the
    # reflection representation itself
    brute = []
    for eps1 in (1, -1):
        for eps2 in (1, -1):
            brute.append(tuple(cyc(eps1 ** (sum(r.exps) % 2) if eps1 > 0
                                   else eps1 ** (sum(r.exps) % 2)) *
                               (eps2 if _sign(r.perm) < 0 else 1)
                               for r in reps))
    brute.append(tuple(group.matrix_of(r).trace() for r in reps))
    brute = [tuple(Cyc_of(v) for v in row) for row in brute]
    table = char_table(2, 2)
    mn_rows = [tuple(table.value(alpha, class_param_of(group, r))
                     for r in reps) for alpha in table.labels]
    key = lambda row: [v.sort_key() for v in row]
    assert sorted(mn_rows, key=key) == sorted(brute, key=key)
    assert sorted(table.degrees()) == [1, 1, 1, 1, 2]


def test_mn_examples():
    assert mn_value(((2, 1),), ((2, 1),), 1) == 0
    assert mn_value(((2, 1),), ((3,),), 1) == -1
    assert mn_value(((1,), (1,)), ((1,), (1,)), 2) == 0


def test_mn_weight_mismatch():
    with pytest.raises(ValueError):
        mn_value(((2,),), ((3,),), 1)


def _random_removal_order(gamma, rng):
    work = [list(comp) for comp in gamma]
    order = []
    while any(work):
        t = rng.choice([i for i, c in enumerate(work) if c])
        j = rng.randrange(len(work[t]))
        order.append((t, j))
        work[t].pop(j)
    return order


@pytest.mark.parametrize("d,n", [(2, 3), (3, 2)])
def test_mn_removal_order_independence(d, n):
    rng = random.Random(11)
    table = char_table(d, n)
    for alpha in table.labels:
        for gamma in table.labels:
            want = mn_value(alpha, gamma, d)
            for _ in range(3):
                order = _random_removal_order(gamma, rng)
                assert mn_value_with_order(alpha, gamma, d, order) == want


def test_table_values_lie_in_q_zeta_d():
    for d, n in [(1, 4), (2, 3), (3, 2), (4, 2)]:
        table = char_table(d, n)
        for row in table.values:
            for v in row:
                assert d % v.n == 0, (d, n, v)


def test_column_orthogonality():
    for d, n in [(1, 3), (2, 2), (3, 2), (2, 3)]:
        assert char_table(d, n).column_orthogonality_ok()


def test_burnside_sum():
    for d, n in [(1, 4), (2, 3), (3, 2)]:
        t = char_table(d, n)
        assert sum(dg * dg for dg in t.degrees()) == t.order


def test_class_sizes_against_enumeration():
    for d, n in [(2, 2), (3, 2), (2, 3)]:
        group = ImprimitiveGroup(d, 1, n)
        for c in conjugacy_classes(group):
            gamma = class_param_of(group, c.representative)
            assert class_size(d, n, gamma) == c.size
            rep = class_rep_element(group, gamma)
            assert class_param_of(group, rep) == gamma


def test_table_budget():
    with pytest.raises(BudgetExceeded):
        char_table(5, 5)


# -- induction ---------------------------------------------------------------------

def test_induction_pi_21():
    t3 = char_table(1, 3)
    rows = [{g: mn_value(((2,),), g, 1) for g in d_partitions(1, 2)},
            {g: mn_value(((1,),), g, 1) for g in d_partitions(1, 1)}]
    ind = induce_product_character(1, [2, 1], rows, t3)
    assert decompose_into_irreducibles(ind, t3) == \
        {((3,),): 1, ((2, 1),): 1}


def test_induction_regular_character():
    t3 = char_table(1, 3)
    rows = [{g: cyc(1) for g in d_partitions(1, 1)} for _ in range(3)]
    ind = induce_product_character(1, [1, 1, 1], rows, t3)
    mults = decompose_into_irreducibles(ind, t3)
    assert mults == {alpha: t3.degree_of(alpha) for alpha in t3.labels}


def test_pi_and_theta_share_one_constituent():
    t4 = char_table(1, 4)
    lam = (2, 1, 1)
    lam_conj = (3, 1)
    pi_rows = [{g: cyc(1) for g in d_partitions(1, m)} for m in lam]
    theta_rows = [{g: mn_value(((1,) * m,), g, 1)
                   for g in d_partitions(1, m)} for m in lam_conj]
    pi = decompose_into_irreducibles(
        induce_product_character(1, list(lam), pi_rows, t4), t4)
    theta = decompose_into_irreducibles(
        induce_product_character(1, list(lam_conj), theta_rows, t4), t4)
    common = {a for a in pi if a in theta}
    assert common == {(lam,)}
    assert pi[(lam,)] == theta[(lam,)] == 1


def test_j_induction_classical():
    t3 = char_table(1, 3)
    t4 = char_table(1, 4)
    assert j_induce(1, [2, 1], [((1, 1),), ((1,),)], t3) == ((2, 1),)
    assert j_induce(1, [2, 2], [((1, 1),), ((1, 1),)], t4) == ((2, 2),)
    # trivial from the trivial subgroup: b = 0 forces the trivial character
    assert j_induce(1, [1, 1, 1], [((1,),)] * 3, t3) == ((3,),)


def test_j_induction_transitive():
    t3 = char_table(1, 3)
    t4 = char_table(1, 4)
    inner = j_induce(1, [2, 1], [((1, 1),), ((1,),)], t3)
    via = j_induce(1, [3, 1], [inner, ((1,),)], t4)
    direct = j_induce(1, [2, 1, 1], [((1, 1),), ((1,),), ((1,),)], t4)
    assert via == direct


def test_j_induction_rejects_gamma(monkeypatch):
    import reflgroups.chars as chars_mod
    t3 = char_table(1, 3)
    monkeypatch.setattr(chars_mod, "fake_degree_closed",
                        lambda alpha, d=None: LaurentPoly({1: 2, 3: 1}))
    with pytest.raises(JInductionError):
        chars_mod.j_induce(1, [2, 1], [((2,),), ((1,),)], t3)


# -- G(de,e,n) counts ---------------------------------------------------------------

def test_stabilizer_example():
    assert stabilizer_order(((1,), (1,), (1,)), 1, 3) == 3


def test_irr_counts():
    count, _data = irr_count_gdeen(1, 2, 2)
    assert count == 4
    assert len(conjugacy_classes(ImprimitiveGroup(1, 2, 2))) == 4
    for d, e, n in [(1, 3, 3), (1, 4, 2), (2, 2, 2), (1, 2, 3)]:
        count, _ = irr_count_gdeen(d, e, n)
        group = ImprimitiveGroup(d, e, n)
        assert count == len(conjugacy_classes(group)), (d, e, n)


def test_irr_count_e1_is_partition_count():
    for d, n in [(2, 3), (3, 2), (4, 2)]:
        count, data = irr_count_gdeen(d, 1, n)
        assert count == len(d_partitions(d, n))
        assert all(s == 1 for _rep, _size, s in data)


# -- closed-form fake degrees --------------------------------------------------------

def test_fake_degree_closed_examples():
    assert fake_degree_closed(((2, 1),), 1) == LaurentPoly({1: 1, 2: 1})
    assert fake_degree_closed(((3,),), 1) == LaurentPoly.one()
    assert fake_degree_closed(((1, 1, 1),), 1) == LaurentPoly({3: 1})
    assert fake_degree_closed(((1,), (1,)), 2) == LaurentPoly({1: 1, 3: 1})


def test_fake_degree_beta_shift_invariance():
    """Recompute formula (i) with padded beta-sets; the result must not
    change."""
    from math import comb

    def padded_fake_degree(alpha, d, pad):
        n = sum(map(sum, alpha))
        num = LaurentPoly.one()
        den = LaurentPoly.one()
        shift_num = 0
        shift_den = 0
        for i, lam in enumerate(alpha):
            mi = len(lam) + pad
            s = beta_set(lam, mi)
            for ai in range(mi):
                for bi in range(ai + 1, mi):
                    num = num * LaurentPoly({d * s[ai]: 1, d * s[bi]: -1})
            shift_num += i * sum(lam)
            for lam_beta in s:
                for h in range(1, lam_beta + 1):
                    den = den * LaurentPoly({d * h: 1, 0: -1})
            shift_den += d * comb(mi, 3)
        for i in range(1, n + 1):
            num = num * LaurentPoly({0: -1, i * d: 1})
        num = num.shift(shift_num)
        den = den.shift(shift_den)
        q = num.exact_div(den)
        return q

    for alpha, d in [(((2, 1),), 1), (((1,), (1,)), 2), (((2,), (1,)), 2)]:
        base = fake_degree_closed(alpha, d)
        for pad in (1, 2):
            assert padded_fake_degree(alpha, d, pad) == base, (alpha, pad)


def test_fake_degree_gdeen_sum_is_poincare():
    """Sum over Irr(G(de,e,n)) of deg(chi) * R_chi equals the Poincare
    polynomial; degrees of split constituents are deg(chi_alpha)/s_e."""
    for d, e, n in [(1, 3, 3), (1, 4, 2), (2, 2, 2), (1, 2, 3)]:
        de = d * e
        table = char_table(de, n)
        dd = degree_data_imprim(d, e, n)
        total = LaurentPoly.zero()
        count, data = irr_count_gdeen(d, e, n)
        for rep, _orbit_size, s in data:
            r = fake_degree_gdeen(rep, d, e)
            full_deg = table.degree_of(rep)
            assert full_deg % s == 0
            total = total + r * (full_deg // s) * s
        assert total == poincare_polynomial(dd.degrees), (d, e, n)


def test_fake_degree_gdeen_reflection_character():
    # G(3,3,3): the reflection character label has orbit of size 3 and its
    # fake degree exponents are the coexponents 1, 4[, 4 for the pair]
    r = fake_degree_gdeen(((2,), (1,), ()), 1, 3)
    assert r.evaluate(1) == 3


def test_centralizer_formula():
    assert class_centralizer_order(1, ((1, 1, 1),)) == 6
    assert class_centralizer_order(2, ((1, 1), ())) == 8
    assert class_centralizer_order(2, ((), (2,))) == 4
