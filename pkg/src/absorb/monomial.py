"""Monomial ideals in ``k[t1, ..., tm]`` as exponent-vector combinatorics.

A monomial is a tuple of non-negative exponents; the coefficient field never
appears.  A :class:`MonomialIdeal` stores its minimal generators, sorted by
(total degree, lex with ``t1`` largest).  Membership of a monomial is
divisibility by some generator, so witnesses found here are checkable with
:func:`member` alone.

Tuple scans over monomials can only *refute* absorbing-type properties; a
scan that finds nothing is reported as clean up to its degree bound.
"""

from __future__ import annotations

import dataclasses
import itertools

from .config import settings
from .errors import CostCapExceeded, VariableCountMismatch

__all__ = [
    "MonomialIdeal",
    "one",
    "variable",
    "degree",
    "divides",
    "mono_mul",
    "mono_gcd",
    "mono_lcm",
    "render_monomial",
    "minimalize",
    "member",
    "product",
    "colon",
    "radical",
    "intersection",
    "monomials_up_to",
    "build_example_2_1",
    "check_example_2_1",
    "Example21",
    "Example21Check",
]


def one(nvars):
    return (0,) * nvars


def variable(i, nvars):
    """``t_i`` (1-based)."""
    e = [0] * nvars
    e[i - 1] = 1
    return tuple(e)


def degree(x):
    return sum(x)


def divides(g, x):
    return all(a <= b for a, b in zip(g, x))


def mono_mul(*xs):
    return tuple(map(sum, zip(*xs)))


def mono_gcd(a, b):
    return tuple(map(min, a, b))


def mono_lcm(a, b):
    return tuple(map(max, a, b))


def _order_key(x):
    return (degree(x), tuple(-e for e in x))


def render_monomial(x):
    parts = [f"t{i + 1}" if e == 1 else f"t{i + 1}^{e}" for i, e in enumerate(x) if e]
    return "*".join(parts) if parts else "1"


@dataclasses.dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple

    def __contains__(self, x):
        return member(x, self)

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return one(self.nvars) in self.gens

    def text(self):
        return [render_monomial(g) for g in self.gens]

    def __str__(self):
        return "<" + ", ".join(self.text()) + ">" if self.gens else "(0)"


def _check_vars(nvars, xs):
    for x in xs:
        if len(x) != nvars:
            raise VariableCountMismatch(f"monomial {x} has {len(x)} exponents, expected {nvars}")


def minimalize(gens, nvars=None):
    """Drop every generator divisible by another; result sorted by (degree, lex)."""
    gens = [tuple(int(e) for e in g) for g in gens]
    if nvars is None:
        if not gens:
            raise ValueError("nvars is required for an empty generator list")
        nvars = len(gens[0])
    _check_vars(nvars, gens)
    keep = []
    for g in sorted(set(gens), key=_order_key):
        if not any(divides(h, g) for h in keep):
            keep.append(g)
    return MonomialIdeal(nvars, tuple(keep))


def member(x, J):
    _check_vars(J.nvars, [x])
    return any(divides(g, x) for g in J.gens)


def _same_vars(J, K):
    if J.nvars != K.nvars:
        raise VariableCountMismatch(f"{J.nvars} vs {K.nvars} variables")


def product(J, K):
    _same_vars(J, K)
    return minimalize([mono_mul(g, h) for g in J.gens for h in K.gens], J.nvars)


def colon(J, x):
    """``(J : x)``, generated by ``g / gcd(g, x)``."""
    _check_vars(J.nvars, [x])
    return minimalize([tuple(a - b for a, b in zip(g, mono_gcd(g, x))) for g in J.gens], J.nvars)


def radical(J):
    return minimalize([tuple(min(e, 1) for e in g) for g in J.gens], J.nvars)


def intersection(J, K):
    _same_vars(J, K)
    return minimalize([mono_lcm(g, h) for g in J.gens for h in K.gens], J.nvars)


def monomials_up_to(nvars, bound):
    """All monomials of total degree <= bound, in (degree, lex) order."""
    out = []
    for d in range(bound + 1):
        layer = [c for c in itertools.product(range(d + 1), repeat=nvars) if sum(c) == d]
        out.extend(sorted(layer, key=_order_key))
    return out


# ---------------------------------------------------------------------------
# the polynomial-ring example


@dataclasses.dataclass(frozen=True)
class Example21:
    n: int
    nvars: int
    P: MonomialIdeal
    I: MonomialIdeal
    IP: MonomialIdeal
    radical_P: MonomialIdeal


def _run(nvars, lo, hi):
    """t_lo * ... * t_hi (1-based, inclusive); empty ranges give 1."""
    e = [0] * nvars
    for i in range(lo, hi + 1):
        e[i - 1] += 1
    return tuple(e)


def build_example_2_1(n):
    """P = <t1...t_{n+1}, t1^2 t2...t_n, t1^2 t_{n+2}>, I = <t1...t_n, t1...t_{n+1}> in n+2 variables."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n + 2
    t1_squared = mono_mul(variable(1, m), variable(1, m))
    P = minimalize(
        [
            _run(m, 1, n + 1),
            mono_mul(t1_squared, _run(m, 2, n)),
            mono_mul(t1_squared, variable(n + 2, m)),
        ],
        m,
    )
    I = minimalize([_run(m, 1, n), _run(m, 1, n + 1)], m)
    IP = product(I, P)
    return Example21(n, m, P, I, IP, radical(P))


@dataclasses.dataclass
class Example21Check:
    n: int
    degree_bound: int
    example: Example21
    non_absorbing_witness: tuple | None
    i_primary_status: str
    i_primary_witness: tuple | None
    flags: list
    witnesses_revalidated: bool

    def to_dict(self):
        ex = self.example
        render = lambda w: None if w is None else [render_monomial(x) for x in w]
        return {
            "n": self.n,
            "degree_bound": self.degree_bound,
            "variables": ex.nvars,
            "P": ex.P.text(),
            "I": ex.I.text(),
            "IP": ex.IP.text(),
            "radical_P": ex.radical_P.text(),
            "not_n_absorbing_witness": render(self.non_absorbing_witness),
            "n_absorbing_I_primary": self.i_primary_status,
            "n_absorbing_I_primary_witness": render(self.i_primary_witness),
            "flags": list(self.flags),
            "witnesses_revalidated": self.witnesses_revalidated,
        }


def _omits(w):
    return [mono_mul(*(w[:i] + w[i + 1:])) for i in range(len(w))]


def _first(pred, space, arity):
    for w in itertools.product(space, repeat=arity):
        if pred(w):
            return w
    return None


def not_n_absorbing_violation(w, P):
    """Product in P while every n-fold subproduct is outside P."""
    if not member(mono_mul(*w), P):
        return False
    return all(not member(x, P) for x in _omits(w))


def n_absorbing_I_primary_violation(w, P, IP, rad):
    n = len(w) - 1
    prod = mono_mul(*w)
    if not member(prod, P) or member(prod, IP):
        return False
    if member(mono_mul(*w[:n]), P):
        return False
    return all(not member(x, rad) for x in _omits(w)[:n])


def check_example_2_1(n, degree_bound):
    """Search monomial tuples of degree <= ``degree_bound`` for the two claims made about the example.

    (a) a witness that P is not n-absorbing; (b) a witness refuting the
    n-absorbing I-primary property, or "monomial-clean" when none exists
    within the bound.  Disagreements with the claimed properties are flagged.
    """
    ex = build_example_2_1(n)
    space = monomials_up_to(ex.nvars, degree_bound)
    cost = len(space) ** (n + 1)
    if cost > settings.cost_cap and not settings.force:
        raise CostCapExceeded(f"{len(space)}^{n + 1} monomial tuples exceeds the cost cap")

    a = _first(lambda w: not_n_absorbing_violation(w, ex.P), space, n + 1)
    b = _first(lambda w: n_absorbing_I_primary_violation(w, ex.P, ex.IP, ex.radical_P), space, n + 1)

    flags = []
    if a is None:
        flags.append(
            f"claim 'P is not {n}-absorbing' not confirmed: no monomial witness with degree <= {degree_bound}"
        )
    if b is not None:
        flags.append(
            f"conflict: claim 'P is {n}-absorbing I-primary' is refuted by the monomial tuple "
            + "(" + ", ".join(render_monomial(x) for x in b) + ")"
        )
    status = "monomial-refuted" if b is not None else f"monomial-clean up to degree {degree_bound}"
    ok = (a is None or revalidate_not_absorbing(a, ex)) and (b is None or revalidate_I_primary(b, ex))
    return Example21Check(n, degree_bound, ex, a, status, b, flags, ok)


def _exponent_sum(xs, nvars):
    return tuple(sum(x[j] for x in xs) for j in range(nvars))


def revalidate_not_absorbing(w, ex):
    """Recheck a non-n-absorbing witness with membership tests only."""
    m = ex.nvars
    if not member(_exponent_sum(w, m), ex.P):
        return False
    for i in range(len(w)):
        rest = [x for k, x in enumerate(w) if k != i]
        if member(_exponent_sum(rest, m), ex.P):
            return False
    return True


def revalidate_I_primary(w, ex):
    """Recheck an n-absorbing I-primary violation with membership tests only."""
    m, n = ex.nvars, len(w) - 1
    full = _exponent_sum(w, m)
    if not member(full, ex.P) or member(full, ex.IP):
        return False
    if member(_exponent_sum(w[:n], m), ex.P):
        return False
    for i in range(n):
        rest = [x for k, x in enumerate(w) if k != i]
        if member(_exponent_sum(rest, m), ex.radical_P):
            return False
    return True
