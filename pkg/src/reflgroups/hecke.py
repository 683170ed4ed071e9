"""
The two-parameter Iwahori-Hecke algebra of the symmetric group, its
Markov-compatible trace, and the HOMFLY-PT link invariant of braid
closures with the Jones and Alexander specializations.

Elements are stored on the standard basis {T_w : w in S_n} with
coefficients in the nested Laurent ring Z[u,u^-1][v,v^-1] (v outermost,
fixed for canonical printing).  The quadratic relation is

    T_s^2 = u T_1 + v T_s,      so      T_s^-1 = u^-1 T_s - u^-1 v T_1.

The trace is evaluated by a normal form: a basis word either lies in the
subalgebra on fewer strands (apply the scaling rule and recurse) or
splits as T_x T_top T_y with x, y on fewer strands and lengths adding up,
in which case centrality plus the Markov property reduce it one strand
down.  Braid words use letters +-1..+-(n-1); closures of Markov-equivalent
words get equal invariants, which the fuzzer exercises.

Specializations substitute through s = sqrt(t), keeping the ring an
ordinary Laurent ring; results collapse to integer powers of t whenever
all s-exponents are even.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations as iter_permutations

from .errors import InvariantViolation
from .poly import LaurentPoly

__all__ = [
    "BraidWord", "HeckeElement", "uv_const", "U", "V",
    "mul_by_generator", "braid_to_hecke", "ocneanu_trace", "homfly",
    "specialize", "markov_fuzz", "parse_braid", "format_invariant",
]


# -- the coefficient ring Z[u^-1, u][v^-1, v] --------------------------------

def _u(exp: int = 1) -> LaurentPoly:
    return LaurentPoly({exp: 1}, "u")


def uv_const(c: int) -> LaurentPoly:
    return LaurentPoly({0: LaurentPoly({0: c}, "u")}, "v") if c else \
        LaurentPoly.zero("v")


def _uv(u_exp: int, v_exp: int, c: int = 1) -> LaurentPoly:
    return LaurentPoly({v_exp: LaurentPoly({u_exp: c}, "u")}, "v")


U = _uv(1, 0)
V = _uv(0, 1)
_ONE = uv_const(1)
_U_INV = _uv(-1, 0)


# -- permutations of {0..n-1}, one-line notation ------------------------------

def _perm_identity(n: int) -> tuple:
    return tuple(range(n))


def _perm_mul_right_s(p: tuple, i: int) -> tuple:
    q = list(p)
    q[i], q[i + 1] = q[i + 1], q[i]
    return tuple(q)


def _perm_length(p: tuple) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


@dataclass(frozen=True)
class BraidWord:
    """A braid on `strands` strands; letter i > 0 is the i-th Artin
    generator, -i its inverse (1-based, |i| < strands)."""
    strands: int
    letters: tuple

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("need at least one strand")
        for a in self.letters:
            if a == 0 or abs(a) >= self.strands:
                raise ValueError(f"letter {a} out of range for "
                                 f"{self.strands} strands")

    def components(self) -> int:
        """Number of link components of the closure (cycles of the
        underlying permutation)."""
        p = _perm_identity(self.strands)
        for a in self.letters:
            p = _perm_mul_right_s(p, abs(a) - 1)
        seen = [False] * self.strands
        comps = 0
        for i in range(self.strands):
            if not seen[i]:
                comps += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = p[j]
        return comps


def parse_braid(text: str) -> BraidWord:
    """Parse "n: i j -k ..." (strand count, then signed letters)."""
    head, _, rest = text.partition(":")
    strands = int(head.strip())
    letters = tuple(int(t) for t in rest.split())
    return BraidWord(strands, letters)


class HeckeElement:
    """Finite Z[u^±1, v^±1]-combination of basis symbols T_w, w in S_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls(n, {_perm_identity(n): _ONE})

    @classmethod
    def basis(cls, n: int, w: tuple) -> "HeckeElement":
        return cls(n, {w: _ONE})

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w)
            out[w] = c if acc is None else acc + c
        return HeckeElement(self.n, out)

    def scale(self, c: LaurentPoly) -> "HeckeElement":
        return HeckeElement(self.n, {w: v * c for w, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.n == other.n and \
            self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items(),
                                          key=lambda kv: kv[0]))))

    def __repr__(self):
        if not self.terms:
            return "HeckeElement(0)"
        bits = [f"({c})*T{w}" for w, c in sorted(self.terms.items())]
        return " + ".join(bits)


def mul_by_generator(h: HeckeElement, i: int,
                     inverse: bool = False) -> HeckeElement:
    """Right multiplication by T_{s_i} or its inverse (i is 1-based).

    T_w T_s = T_{ws} when the length goes up, else u T_{ws} + v T_w;
    the inverse uses T_s^-1 = u^-1 T_s - u^-1 v T_1.
    """
    if not 1 <= i <= h.n - 1:
        raise ValueError(f"generator index {i} out of range")
    idx = i - 1
    out: dict = {}

    def add(w, c):
        acc = out.get(w)
        c = c if acc is None else acc + c
        if c:
            out[w] = c
        elif w in out:
            del out[w]

    for w, c in h.terms.items():
        ws = _perm_mul_right_s(w, idx)
        going_up = w[idx] < w[idx + 1]
        if not inverse:
            if going_up:
                add(ws, c)
            else:
                add(ws, c * U)
                add(w, c * V)
        else:
            if going_up:
                # T_w T_s^-1 = u^-1 T_{ws} - u^-1 v T_w
                add(ws, c * _U_INV)
                add(w, c * _uv(-1, 1, -1))
            else:
                add(ws, c)
    return HeckeElement(h.n, out)


def braid_to_hecke(b: BraidWord) -> HeckeElement:
    """Image of a braid word under w -> T_w, starting from T_1."""
    h = HeckeElement.one(b.strands)
    for a in b.letters:
        h = mul_by_generator(h, abs(a), inverse=a < 0)
    return h


# -- the trace ----------------------------------------------------------------

_TRACE_CACHE: dict = {}


def _scaling_factor() -> LaurentPoly:
    # tau_{n+1}(h) = v^-1 (1 - u) tau_n(h)
    return _uv(0, -1, 1) + _uv(1, -1, -1)


def _trace_basis(w: tuple) -> LaurentPoly:
    """tau_n(T_w) for a basis element, by strand-peeling recursion."""
    n = len(w)
    if n == 1:
        return LaurentPoly({0: LaurentPoly({0: 1}, "u")}, "v")
    cached = _TRACE_CACHE.get(w)
    if cached is not None:
        return cached
    top = n - 1
    if w[top] == top:
        val = _scaling_factor() * _trace_basis(w[:top])
    else:
        # w = x * s_(n-2..q): the descending run carries the top strand;
        # x fixes the last point and the lengths are additive
        q = w.index(top)
        d = _perm_identity(n)
        for i in range(n - 2, q - 1, -1):
            d = _perm_mul_right_s(d, i)
        d_inv = tuple(sorted(range(n), key=lambda k: d[k]))
        x = tuple(w[d_inv[k]] for k in range(n))
        assert x[top] == top
        assert _perm_length(x) + (n - 1 - q) == _perm_length(w), \
            "coset decomposition is not length-additive"
        # tau_n(T_x T_top T_y) = tau_(n-1)(T_y T_x), y = s_(n-3..q) run
        h = HeckeElement.basis(n - 1, _restrict(x))
        hy = h
        prefix = HeckeElement.one(n - 1)
        for i in range(n - 3, q - 1, -1):
            prefix = mul_by_generator(prefix, i + 1)
        val = _trace_element(_hecke_mul(prefix, hy))
    _TRACE_CACHE[w] = val
    return val


def _restrict(w: tuple) -> tuple:
    assert w[-1] == len(w) - 1
    return w[:-1]


def _hecke_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product a*b where b is expanded through generator words."""
    out = HeckeElement(a.n, {})
    for w, c in b.terms.items():
        piece = a.scale(c)
        for i in _word_of_perm(w):
            piece = mul_by_generator(piece, i + 1)
        out = out + piece
    return out


def _word_of_perm(w: tuple) -> list[int]:
    """A reduced word (0-based letters) for a permutation, by sorting
    descents; w equals the right-to-left product of the collected swaps."""
    n = len(w)
    out = []
    cur = list(w)
    while True:
        i = next((i for i in range(n - 1) if cur[i] > cur[i + 1]), None)
        if i is None:
            break
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
        out.append(i)
    out.reverse()
    return out


def _trace_element(h: HeckeElement) -> LaurentPoly:
    total = LaurentPoly.zero("v")
    for w, c in h.terms.items():
        total = total + c * _trace_basis(w)
    return total


def ocneanu_trace(h: HeckeElement) -> LaurentPoly:
    """The Markov trace tau_n, exact in Z[u^±1, v^±1]."""
    return _trace_element(h)


def homfly(b: BraidWord) -> LaurentPoly:
    """HOMFLY-PT invariant X_L(u, v) of the closure of the braid."""
    x = ocneanu_trace(braid_to_hecke(b))
    return x


# -- specializations -----------------------------------------------------------

def specialize(x: LaurentPoly, target: str) -> tuple[str, LaurentPoly]:
    """Specialize X(u,v): "jones" (u=t^2, v=sqrt(t)(t-1)), "alexander"
    (u=1, v=sqrt(t)-1/sqrt(t)), or "homfly_tx" (u=t^2, v=t*x).

    Half powers of t run through s with t = s^2; the result is re-expressed
    in t when every s-exponent is even (always, for Jones of a knot), and
    reported in s otherwise.  Returns (variable name, Laurent polynomial).
    """
    if target == "homfly_tx":
        t_of = LaurentPoly({2: 1}, "t")
        vx = LaurentPoly({1: LaurentPoly({1: 1}, "t")}, "x")
        out = LaurentPoly.zero("x")
        for v_exp, coeff_u in x.terms():
            term = coeff_u.substitute_var(t_of)
            out = out + vx ** v_exp * term
        return "x", out
    if target == "jones":
        u_image = LaurentPoly({4: 1}, "s")
        v_image = LaurentPoly({3: 1, 1: -1}, "s")          # s^3 - s
    elif target == "alexander":
        u_image = LaurentPoly({0: 1}, "s")
        v_image = LaurentPoly({1: 1, -1: -1}, "s")         # s - 1/s
    else:
        raise ValueError(f"unknown specialization {target!r}")
    min_v = min((e for e, _ in x.terms()), default=0)
    shift = -min_v if min_v < 0 else 0
    acc = LaurentPoly.zero("s")
    for v_exp, coeff_u in x.terms():
        term = coeff_u.substitute_var(u_image)
        acc = acc + term * v_image ** (v_exp + shift)
    if shift:
        # divide by (v_image)^shift exactly; Laurent-ness is a runtime check
        den = v_image ** shift
        q = acc.exact_div(den)
        acc = q
    if acc.is_zero() or all(e % 2 == 0 for e, _ in acc.terms()):
        return "t", LaurentPoly({e // 2: c for e, c in acc.terms()}, "t")
    return "s", acc


def format_invariant(p: LaurentPoly) -> str:
    return str(p)


# -- Markov-move fuzzing --------------------------------------------------------

def markov_fuzz(b: BraidWord, moves: int = 10, trials: int = 1,
                rng: random.Random | None = None,
                max_strands: int = 8) -> int:
    """Apply random Markov moves and check the invariant is unchanged.

    Type (I) conjugates by a generator, type (II) stabilizes (adding a
    strand and a top letter) or destabilizes when the word allows it.
    Returns the number of violations (0 unless something is broken);
    a violation also raises immediately.
    """
    rng = rng or random.Random(0)
    reference = homfly(b)
    violations = 0
    for _ in range(trials):
        cur = b
        for _step in range(moves):
            cur = _random_markov_move(cur, rng, max_strands)
            value = homfly(cur)
            if value != reference:
                violations += 1
                raise InvariantViolation(
                    f"Markov move changed the invariant: {b} vs {cur}")
    return violations


def _random_markov_move(b: BraidWord, rng: random.Random,
                        max_strands: int) -> BraidWord:
    choices = ["conj"]
    if b.strands < max_strands:
        choices.append("stab")
    if _can_destabilize(b):
        choices.append("destab")
    kind = rng.choice(choices)
    if kind == "conj" and b.strands >= 2:
        g = rng.randrange(1, b.strands)
        sign = rng.choice((1, -1))
        return BraidWord(b.strands, (-sign * g,) + b.letters + (sign * g,))
    if kind == "stab":
        sign = rng.choice((1, -1))
        return BraidWord(b.strands + 1, b.letters + (sign * b.strands,))
    if kind == "destab":
        return BraidWord(b.strands - 1, b.letters[:-1])
    return b


def _can_destabilize(b: BraidWord) -> bool:
    if b.strands < 2 or not b.letters:
        return False
    top = b.strands - 1
    return abs(b.letters[-1]) == top and \
        all(abs(a) < top for a in b.letters[:-1])
