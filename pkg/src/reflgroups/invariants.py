"""
Invariant-theoretic data of a reflection group: the Molien series of the
invariant ring, degrees and exponents, codegrees and coexponents via the
fixed-space generating functions, the Poincare polynomial, fake degrees
from their defining sum, the palindromicity pairing, regular numbers and
regular elements, and exterior powers of the reflection representation.

Every computation is exact.  Molien sums are organised by "det classes"
(cycle-type buckets for monomial groups, conjugacy classes otherwise),
since det(1 - gx) is constant on them, and each determinant is kept as a
product of linear factors (1 - zeta x); summing over a common factored
denominator avoids polynomial gcds in the hot path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product as iproduct
from math import gcd, prod

from .classes import conjugacy_classes
from .classfun import ClassFunction
from .cyclotomic import Cyclotomic, cyc, zeta
from .errors import InvariantViolation
from .matrix import Matrix
from .poly import LaurentPoly, RationalFunction
from .reflops import unit_eigenvalues

__all__ = [
    "DegreeData", "molien_series", "degrees_from_molien",
    "degree_data_imprim", "degree_data_enumerated", "poincare_polynomial",
    "solomon_identities", "fake_degree", "b_invariant_and_gamma",
    "palindrome_search", "regular_numbers", "regular_element_check",
    "exterior_power_character",
]


# ---------------------------------------------------------------------------
# Degree data


@dataclass(frozen=True)
class DegreeData:
    degrees: tuple
    codegrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))
        object.__setattr__(self, "codegrees", tuple(sorted(self.codegrees)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def exponents(self) -> tuple:
        return tuple(d - 1 for d in self.degrees)

    @property
    def coexponents(self) -> tuple:
        return tuple(d + 1 for d in self.codegrees)

    @property
    def reflection_count(self) -> int:
        return sum(self.exponents)

    @property
    def hyperplane_count(self) -> int:
        return sum(self.coexponents)

    @property
    def order(self) -> int:
        return prod(self.degrees)

    def is_well_generated(self) -> bool:
        d_n = self.degrees[-1]
        return all(d + dstar == d_n for d, dstar in
                   zip(self.degrees, reversed(self.codegrees)))


def degree_data_imprim(d: int, e: int, n: int) -> DegreeData:
    """Closed-form degrees and codegrees of G(de,e,n), no enumeration."""
    de = d * e
    if n == 1:
        # G(de,e,1) is cyclic of order d
        return DegreeData((max(d, 1),), (0,))
    if e == 1:
        degrees = [d * i for i in range(1, n + 1)]
    elif d == 1:
        degrees = sorted([e * i for i in range(1, n)] + [n])
    else:
        degrees = sorted([de * i for i in range(1, n)] + [d * n])
    if d > 1 and e > 1:
        codegrees = [de * i for i in range(n)]      # not well-generated
    else:
        d_max = max(degrees)
        codegrees = [d_max - d_i for d_i in degrees]
    return DegreeData(tuple(degrees), tuple(codegrees))


def degree_data_enumerated(group) -> DegreeData:
    """Degrees via the Molien series, coexponents via the determinant
    generating function; works for any enumerable exact reflection group."""
    degrees = degrees_from_molien(molien_series(group), group.rank)
    _, coexponents = solomon_identities(group, degrees=degrees)
    return DegreeData(tuple(degrees), tuple(m - 1 for m in coexponents))


# ---------------------------------------------------------------------------
# det-class buckets


def _canonical_root(k: int, a: int) -> tuple[int, int]:
    a %= k
    g = gcd(a, k) if a else k
    return k // g, a // g


def _root_value(key: tuple[int, int]) -> Cyclotomic:
    return zeta(key[0], key[1])


def det_class_buckets(group) -> list[tuple[int, tuple, object]]:
    """(count, factors, representative) per det(1-gx)-constant bucket.

    Factors are sorted ((k, a), l) pairs standing for (1 - zeta_k^a x^l).
    Monomial groups bucket by cycle type; matrix groups by conjugacy class.
    """
    cached = getattr(group, "_det_buckets", None)
    if cached is not None:
        return cached
    buckets: dict[tuple, list] = {}
    if hasattr(group, "cycles"):
        de = group.de
        for g in group.elements():
            factors = tuple(sorted((_canonical_root(de, t), ln)
                                   for ln, t in group.cycles(g)))
            slot = buckets.setdefault(factors, [0, g])
            slot[0] += 1
    else:
        for c in conjugacy_classes(group):
            rep = c.representative
            eigs = unit_eigenvalues(group.matrix_of(rep),
                                    group.element_order(rep))
            factors = tuple(sorted((key, 1) for key in eigs))
            slot = buckets.setdefault(factors, [0, rep])
            slot[0] += c.size
    out = [(count, factors, rep)
           for factors, (count, rep) in sorted(buckets.items())]
    group._det_buckets = out
    return out


def _factor_poly(key: tuple[int, int], ln: int) -> LaurentPoly:
    """(1 - zeta_k^a x^l)"""
    return LaurentPoly({0: 1, ln: -_root_value(key)})


def _det_factors_of_element(group, g) -> tuple:
    if hasattr(group, "cycles"):
        return tuple(sorted((_canonical_root(group.de, t), ln)
                            for ln, t in group.cycles(g)))
    eigs = unit_eigenvalues(group.matrix_of(g), group.element_order(g))
    return tuple(sorted((key, 1) for key in eigs))


def _series_div(num: LaurentPoly, den: LaurentPoly, upto: int) -> list:
    """Power-series coefficients of num/den (den(0) invertible)."""
    den0 = den.constant_coeff()
    inv0 = cyc(1) / Cyclotomic.of(den0) if not \
        isinstance(den0, (int, Fraction)) else Fraction(1) / den0
    out = []
    for k in range(upto):
        acc = num.coeff(k)
        for j, v in den.c.items():
            if 0 < j <= k:
                acc = acc - v * out[k - j]
        out.append(acc * inv0)
    return out


def _greedy_degree_extraction(num: LaurentPoly, den: LaurentPoly,
                              n: int, order_bound: int) -> list[int]:
    """Read the degree multiset from the series of num/den, assuming the
    product form prod 1/(1 - x^d_i)."""
    upto = max(2 * order_bound + 1, 16)
    series = _series_div(num, den, upto)
    series = [Fraction(v) if isinstance(v, int) else v for v in series]
    degrees = []
    for _ in range(n):
        k = next((i for i in range(1, upto) if series[i] != 0), None)
        if k is None:
            raise ValueError("series terminated before all degrees were found")
        coeff = series[k]
        if (isinstance(coeff, Cyclotomic) and not coeff.is_rational()) or \
                Fraction(coeff if not isinstance(coeff, Cyclotomic)
                         else coeff.rational_value()) <= 0:
            raise ValueError("series is not of invariant-ring product form")
        degrees.append(k)
        # multiply the series by (1 - x^k)
        series = [series[i] - (series[i - k] if i >= k else 0)
                  for i in range(upto)]
    return sorted(degrees)


def _molien_atom_buckets(group) -> list[tuple[int, dict]]:
    """(element count, {atom key: multiplicity}) per det(1-gx) bucket,
    with a registry mapping atom keys to polynomials on the group object.

    Monomial groups factor each det into binomials (1 - zeta x^l), which
    stay in the small field Q(zeta_de); matrix groups keep the whole
    per-class determinant as a single atom, avoiding conductor blowup.
    """
    registry: dict = {}
    buckets: list[tuple[int, dict]] = []
    if hasattr(group, "cycles"):
        grouped: dict = {}
        for g in group.elements():
            factors = tuple(sorted((_canonical_root(group.de, t), ln)
                                   for ln, t in group.cycles(g)))
            grouped[factors] = grouped.get(factors, 0) + 1
        for factors, count in sorted(grouped.items()):
            counts: dict = {}
            for atom, ln in factors:
                key = (atom, ln)
                registry[key] = _factor_poly(atom, ln)
                counts[key] = counts.get(key, 0) + 1
            buckets.append((count, counts))
    else:
        grouped = {}
        for c in conjugacy_classes(group):
            det = group.matrix_of(c.representative).det_one_minus_x()
            key = det._key()
            if key not in registry:
                registry[key] = det
            grouped[key] = grouped.get(key, 0) + c.size
        for key, count in grouped.items():
            buckets.append((count, {key: 1}))
    group._molien_registry = registry
    return buckets


def molien_series(group) -> RationalFunction:
    """Exact Molien series (1/|W|) sum_g 1/det(1 - gx), reduced, over Q.

    Elements are grouped into det-classes; the sum runs over a common
    factored denominator, and the reduced answer is certified by an exact
    product-form identity (with a generic gcd fallback for groups whose
    invariant ring is not polynomial).
    """
    bucket_counts = _molien_atom_buckets(group)
    registry = group._molien_registry
    order = group.order() if not hasattr(group, "params") else group.params.order
    lcm_mult: dict = {}
    for _count, counts in bucket_counts:
        for key, m in counts.items():
            lcm_mult[key] = max(lcm_mult.get(key, 0), m)
    num = LaurentPoly.zero()
    for count, counts in bucket_counts:
        term = LaurentPoly.const(count)
        for key, m in lcm_mult.items():
            extra = m - counts.get(key, 0)
            if extra:
                term = term * registry[key] ** extra
        num = num + term
    den = LaurentPoly.one()
    for key, m in lcm_mult.items():
        den = den * registry[key] ** m
    # fast path: certify the product form prod 1/(1 - x^d_i); the sum of
    # degrees equals deg(den) - deg(num), so deg(den) bounds the precision
    n = group.rank
    try:
        degrees = _greedy_degree_extraction(num, den, n, den.degree())
        target_den = LaurentPoly.one()
        for d in degrees:
            target_den = target_den * LaurentPoly({0: 1, d: -1})
        if num * target_den == den * order:
            return RationalFunction.of(LaurentPoly.one(), target_den)
    except ValueError:
        pass
    # generic path: single gcd reduction, then demote coefficients to Q
    rf = RationalFunction.of(num, den * order)
    return RationalFunction.of(rf.num.map_coeffs(_to_fraction),
                               rf.den.map_coeffs(_to_fraction))


def _to_fraction(v):
    if isinstance(v, Cyclotomic):
        return v.rational_value()
    return Fraction(v)


def degrees_from_molien(p: RationalFunction, n: int) -> list[int]:
    """The unique multiset {d_i} with p = prod 1/(1 - x^d_i).

    Greedy extraction from the power series (lowest positive term first),
    certified exactly; raises ValueError when p is not of product form.
    """
    if not p.num.is_polynomial():
        raise ValueError("not a power series: numerator has negative exponents")
    degrees = _greedy_degree_extraction(p.num, p.den, n, _series_bound_from(p))
    target = LaurentPoly.one()
    for d in degrees:
        target = target * LaurentPoly({0: 1, d: -1})
    if not (p == RationalFunction.of(LaurentPoly.one(), target)):
        raise ValueError("Molien series is not a product of 1/(1 - x^d_i)")
    return degrees


def _series_bound_from(p: RationalFunction) -> int:
    return max(p.den.degree() if not p.den.is_zero() else 1, 4)


def poincare_polynomial(degrees) -> LaurentPoly:
    """prod (x^d_i - 1)/(x - 1), a polynomial with value |W| at x = 1."""
    num = LaurentPoly.one()
    for d in degrees:
        num = num * LaurentPoly({0: -1, d: 1})
    den = LaurentPoly({0: -1, 1: 1}) ** len(list(degrees))
    return num // den


# ---------------------------------------------------------------------------
# Fixed-space generating functions (Shephard-Todd / Solomon and
# Orlik-Solomon), giving exponents and coexponents independently


def solomon_identities(group, degrees=None) -> tuple[tuple, tuple]:
    """Verify sum_w x^k(w) = prod (x + m_i) and
    sum_w det(w) x^k(w) = prod (x - m_i*); return (exponents, coexponents).

    k(w) is the fixed-space dimension.  The left sides are computed by
    direct summation, the exponents independently from the Molien degrees;
    a mismatch raises.
    """
    if degrees is None:
        degrees = degrees_from_molien(molien_series(group), group.rank)
    if hasattr(group, "cycles"):
        grouped: dict = {}
        for g in group.elements():
            key = (group.fixed_space_dim(g), group.det_of(g))
            grouped[key] = grouped.get(key, 0) + 1
        items = [(count, k, det) for (k, det), count in grouped.items()]
    else:
        items = [(c.size, group.fixed_space_dim(c.representative),
                  group.det_of(c.representative))
                 for c in conjugacy_classes(group)]
    lhs_plain = LaurentPoly.zero()
    lhs_det = LaurentPoly.zero()
    for count, k, detv in items:
        lhs_plain = lhs_plain + LaurentPoly({k: count})
        lhs_det = lhs_det + LaurentPoly({k: count}) * detv
    exponents = tuple(d - 1 for d in sorted(degrees))
    rhs = LaurentPoly.one()
    for m in exponents:
        rhs = rhs * LaurentPoly({0: m, 1: 1})
    if not (lhs_plain == rhs):
        raise InvariantViolation(
            f"fixed-space generating function {lhs_plain} != prod(x + m_i) "
            f"= {rhs}")
    coexponents = _nonneg_integer_roots(lhs_det, group.rank)
    return exponents, tuple(coexponents)


def _nonneg_integer_roots(p: LaurentPoly, n: int) -> list[int]:
    """Factor a monic-degree-n polynomial as prod (x - m_i), m_i >= 0."""
    p = p.map_coeffs(lambda v: v.rational_value()
                     if isinstance(v, Cyclotomic) else Fraction(v))
    roots = []
    bound = 0
    # all roots divide the constant coefficient, or are zero
    while p.coeff(0) == 0 and len(roots) < n:
        roots.append(0)
        p = p // LaurentPoly({1: 1})
    candidates = sorted({d for d in range(1, abs(int(p.coeff(0))) + 1)
                         if int(p.coeff(0)) % d == 0}) if p.coeff(0) else []
    for m in candidates:
        factor = LaurentPoly({0: -m, 1: 1})
        while len(roots) < n:
            q, r = p.divmod_poly(factor)
            if not r.is_zero():
                break
            roots.append(m)
            p = q
    if len(roots) != n or not (p == p.leading_coeff()):
        raise InvariantViolation(
            f"determinant generating function does not split over "
            f"nonnegative integers (left {p})")
    return sorted(roots)


# ---------------------------------------------------------------------------
# Fake degrees


def fake_degree(group, chi: ClassFunction, degrees) -> LaurentPoly:
    """Graded multiplicity of the conjugate character in the coinvariant
    algebra:

        R = prod(x^d_i - 1) * (1/|W|) * sum_w chi(w) / conj(det(xw - 1)).

    Exact; the result must land in Z[x] (anything else raises).
    """
    n = group.rank
    classes = conjugacy_classes(group)
    class_factors = []
    lcm_mult: dict = {}
    for c in classes:
        factors = _det_factors_of_element(group, c.representative)
        counts: dict = {}
        for atom, ln in factors:
            # conjugate the eigenvalue: det(xw-1)^* has roots conj(lambda)
            k, a = atom
            atom_c = _canonical_root(k, (-a) % k if a else 0)
            counts[(atom_c, ln)] = counts.get((atom_c, ln), 0) + 1
        class_factors.append(counts)
        for key, m in counts.items():
            lcm_mult[key] = max(lcm_mult.get(key, 0), m)
    num = LaurentPoly.zero()
    for c, counts in zip(classes, class_factors):
        v = chi.value_on(c.representative)
        if v.is_zero():
            continue
        term = LaurentPoly.const(v * c.size)
        for (atom, ln), m in lcm_mult.items():
            extra = m - counts.get((atom, ln), 0)
            if extra:
                term = term * _factor_poly(atom, ln) ** extra
        num = num + term
    den = LaurentPoly.one()
    for (atom, ln), m in lcm_mult.items():
        den = den * _factor_poly(atom, ln) ** m
    # det(xw - 1) = (-1)^n det(1 - xw): the sign is constant over the group
    sign = (-1) ** n
    poly_part = LaurentPoly.one()
    for d in degrees:
        poly_part = poly_part * LaurentPoly({0: -1, d: 1})
    total_num = num * poly_part * sign
    q, r = total_num.divmod_poly(den)
    if not r.is_zero():
        raise InvariantViolation("fake degree sum is not a polynomial")
    order = group.order() if not hasattr(group, "params") else group.params.order
    out = {}
    for e, v in q.c.items():
        val = _to_fraction(v) / order
        if val.denominator != 1:
            raise InvariantViolation("fake degree has a non-integer coefficient")
        out[e] = int(val)
    return LaurentPoly(out)


def b_invariant_and_gamma(r: LaurentPoly) -> tuple[int, int]:
    """(order of vanishing at 0, lowest nonzero coefficient)."""
    if r.is_zero():
        raise ValueError("zero fake degree")
    b = r.valuation()
    return b, r.coeff(b)


def palindrome_search(group, chars: list[ClassFunction],
                      fakedegs: list[LaurentPoly]) -> dict[int, tuple[int, int]]:
    """For each character index i, the pair (j, c) with
    R_i(x) = x^c R_j(x^-1), c = sum over reflections of (1 - chi(r)/chi(1)).

    The exponent c must be an exact integer and the partner must exist;
    both failures raise.
    """
    out = {}
    reflections = group.reflections()
    for i, chi in enumerate(chars):
        deg = chi.degree()
        c_val = cyc(0)
        for r in reflections:
            c_val = c_val + (1 - chi.value_on(r) / deg)
        if not c_val.is_rational() or c_val.rational_value().denominator != 1:
            raise InvariantViolation(
                f"palindromicity exponent {c_val} is not an integer")
        c = int(c_val.rational_value())
        target = fakedegs[i].reverse().shift(c)
        matches = [j for j, r_j in enumerate(fakedegs) if r_j == target]
        if not matches:
            raise InvariantViolation(
                f"no palindromicity partner for character {i}")
        out[i] = (matches[0], c)
    return out


# ---------------------------------------------------------------------------
# Regular numbers and regular elements


def regular_numbers(dd: DegreeData) -> list[int]:
    """All d >= 1 dividing as many degrees as codegrees."""
    out = []
    for d in range(1, max(dd.degrees) + 1):
        n_deg = sum(1 for x in dd.degrees if x % d == 0)
        n_codeg = sum(1 for x in dd.codegrees if x % d == 0)
        if n_deg == n_codeg:
            out.append(d)
    return out


@dataclass(frozen=True)
class RegularityVerdict:
    is_regular: bool
    eigenspace_dim: int
    witness: tuple | None
    eigenvalues_match: bool | None


def regular_element_check(group, w, d: int,
                          dd: DegreeData | None = None) -> RegularityVerdict:
    """Does the zeta_d-eigenspace of w contain a vector off every
    reflecting hyperplane?  On success, also verifies that the eigenvalue
    multiset of w is {zeta_d^(m_i*)}.

    The witness search runs over small integer combinations of the
    eigenspace basis with coefficients in {0..H}, H = #hyperplanes + 1;
    since each hyperplane can only kill a proper sub-grid, the bound
    guarantees a hit whenever one exists.
    """
    z = zeta(d)
    m = group.matrix_of(w)
    basis = m.eigenspace_basis(z)
    if not basis:
        return RegularityVerdict(False, 0, None, None)
    covectors = group.hyperplanes()
    paired = []
    for cov in covectors:
        vals = [_dot_cyc(cov, b) for b in basis]
        if all(v.is_zero() for v in vals):
            # the eigenspace lies inside this hyperplane: no regular vector
            return RegularityVerdict(False, len(basis), None, None)
        paired.append(vals)
    h_bound = len(covectors) + 1
    witness = None
    k = len(basis)
    for radius in range(h_bound + 1):
        for coeffs in _box_shell(k, radius):
            if all(not _combine(vals, coeffs).is_zero() for vals in paired):
                witness = tuple(
                    sum((Cyclotomic.of(b[i]) * c for b, c in
                         zip(basis, coeffs)), start=cyc(0))
                    for i in range(len(basis[0])))
                break
        if witness is not None:
            break
    if witness is None:
        raise InvariantViolation("witness search exhausted its guaranteed box")
    eig_ok = None
    if dd is not None:
        expected = sorted(zeta(d, m_star).sort_key()
                          for m_star in dd.coexponents)
        actual = sorted(_root_value(key).sort_key() for key in
                        unit_eigenvalues(m, group.element_order(w)))
        eig_ok = expected == actual
    return RegularityVerdict(True, len(basis), witness, eig_ok)


def _box_shell(k: int, radius: int):
    """Points of {0..radius}^k with max coordinate == radius."""
    if radius == 0:
        yield (0,) * k
        return
    for pt in iproduct(range(radius + 1), repeat=k):
        if max(pt) == radius:
            yield pt


def _dot_cyc(cov, vec) -> Cyclotomic:
    acc = cyc(0)
    for c, v in zip(cov, vec):
        if not (isinstance(c, int) and c == 0) and \
           not (isinstance(v, int) and v == 0):
            acc = acc + Cyclotomic.of(c) * Cyclotomic.of(v)
    return acc


def _combine(vals, coeffs) -> Cyclotomic:
    acc = cyc(0)
    for v, c in zip(vals, coeffs):
        if c and not v.is_zero():
            acc = acc + v * c
    return acc


# ---------------------------------------------------------------------------
# Exterior powers of the reflection representation


def _class_eigenvalues(group, rep) -> list[tuple[int, int]]:
    if hasattr(group, "cycles"):
        out = []
        for ln, t in group.cycles(rep):
            m = group.de * ln
            for j in range(ln):
                out.append(_canonical_root(m, t + group.de * j))
        return out
    return unit_eigenvalues(group.matrix_of(rep), group.element_order(rep))


def exterior_power_character(group, i: int) -> tuple[ClassFunction, bool]:
    """Character of the i-th exterior power of V, and its irreducibility.

    The value at w is the i-th elementary symmetric function of the
    eigenvalues of w; irreducibility is <chi, chi> = 1.
    """
    if not 0 <= i <= group.rank:
        raise ValueError("exterior power index out of range")
    values = []
    for c in conjugacy_classes(group):
        eigs = [_root_value(key) for key in _class_eigenvalues(group,
                                                               c.representative)]
        p = reduce(lambda acc, lam: acc * LaurentPoly({0: 1, 1: lam}),
                   eigs, LaurentPoly.one())
        v = p.coeff(i)
        values.append(Cyclotomic.of(v) if not isinstance(v, Cyclotomic) else v)
    chi = ClassFunction(group, values)
    return chi, chi.inner(chi) == 1
