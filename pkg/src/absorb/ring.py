"""Finite commutative rings with identity.

Three constructors are supported: ``Z/n``, finite direct products, and
``Z/p[x]/(f)`` for a monic ``f`` (not necessarily irreducible, so rings with
nilpotents are available).  Every ring fixes a canonical bijection between
its elements and ``0 .. size-1``; all arithmetic works on these indices.

Arithmetic is evaluated from the constructor on demand.  Rings no larger
than ``settings.table_cap`` build full addition/multiplication tables the
first time they are used, which makes the tuple scans in
:mod:`absorb.predicates` cheap fancy-indexing operations.
"""

from __future__ import annotations

import dataclasses
import functools
import math
from typing import Union

import numpy as np

from .config import settings
from .errors import ImproperIdeal, NonMonicPoly, NonPrimeModulus, SizeCapExceeded

__all__ = [
    "Zn",
    "Product",
    "PolyQuot",
    "RingSpec",
    "Ring",
    "QuotientRing",
    "build_ring",
    "quotient_ring",
    "is_prime_number",
    "spec_size",
    "axiom_violations",
    "render_poly",
]


# ---------------------------------------------------------------------------
# specs


@dataclasses.dataclass(frozen=True)
class Zn:
    modulus: int

    def __str__(self):
        return f"Z/{self.modulus}"


@dataclasses.dataclass(frozen=True)
class Product:
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __str__(self):
        parts = [f"({f})" if isinstance(f, Product) else str(f) for f in self.factors]
        return " x ".join(parts)


@dataclasses.dataclass(frozen=True)
class PolyQuot:
    """``Z/p[x]/(f)``; ``f`` holds coefficients in ascending degree order."""

    p: int
    f: tuple

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(int(c) % self.p for c in self.f))

    @property
    def degree(self):
        return len(self.f) - 1

    def __str__(self):
        return f"Z/{self.p}[x]/({render_poly(self.f)})"


RingSpec = Union[Zn, Product, PolyQuot]


def render_poly(coeffs, var="x"):
    """Render ascending coefficients as a descending polynomial, e.g. ``x^2+x+1``."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[k])
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            mono = var if k == 1 else f"{var}^{k}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def is_prime_number(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def spec_size(spec):
    """Validate ``spec`` and return the number of elements of its ring."""
    if isinstance(spec, Zn):
        if spec.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {spec.modulus}")
        return spec.modulus
    if isinstance(spec, Product):
        if len(spec.factors) < 2:
            raise ValueError("a product needs at least two factors")
        return math.prod(spec_size(f) for f in spec.factors)
    if isinstance(spec, PolyQuot):
        if not is_prime_number(spec.p):
            raise NonPrimeModulus(f"coefficient modulus {spec.p} is not prime")
        if len(spec.f) < 2 or spec.f[-1] != 1:
            raise NonMonicPoly(f"{render_poly(spec.f)} is not monic of degree >= 1 over Z/{spec.p}")
        return spec.p ** spec.degree
    raise TypeError(f"not a ring spec: {spec!r}")


# ---------------------------------------------------------------------------
# rings


class Ring:
    """A realized finite commutative ring.

    Subclasses implement the vectorized evaluators ``_add``, ``_mul`` and
    ``_neg`` on flat ``int64`` index arrays, plus :meth:`render`.  Rings are
    immutable and compare by identity.
    """

    zero = 0

    def __init__(self, size, label, spec=None):
        self.size = int(size)
        self.label = label
        self.spec = spec
        self.one = 0  # set by subclasses

    def __repr__(self):
        return f"<Ring {self.label} ({self.size} elements)>"

    def __len__(self):
        return self.size

    @property
    def elements(self):
        return range(self.size)

    # -- evaluators ---------------------------------------------------------

    def _add(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def render(self, a):
        raise NotImplementedError

    def _table(self, fn):
        n = self.size
        table = np.empty((n, n), dtype=np.int32)
        rows = max(1, (1 << 18) // n)
        cols = np.arange(n, dtype=np.int64)
        for lo in range(0, n, rows):
            hi = min(n, lo + rows)
            a = np.repeat(np.arange(lo, hi, dtype=np.int64), n)
            b = np.tile(cols, hi - lo)
            table[lo:hi] = fn(a, b).reshape(hi - lo, n)
        table.setflags(write=False)
        return table

    @functools.cached_property
    def add_table(self):
        return self._table(self._add)

    @functools.cached_property
    def mul_table(self):
        return self._table(self._mul)

    @functools.cached_property
    def neg_table(self):
        out = self._neg(np.arange(self.size, dtype=np.int64)).astype(np.int32)
        out.setflags(write=False)
        return out

    @property
    def tabulated(self):
        return self.size <= settings.table_cap

    def _apply(self, fn, table_name, a, b):
        if self.tabulated:
            out = getattr(self, table_name)[a, b]
        else:
            a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
            out = fn(a.ravel(), b.ravel()).reshape(a.shape)
        return int(out) if np.ndim(out) == 0 else out

    def add(self, a, b):
        """Sum of elements (ints or broadcastable index arrays)."""
        return self._apply(self._add, "add_table", a, b)

    def mul(self, a, b):
        """Product of elements (ints or broadcastable index arrays)."""
        return self._apply(self._mul, "mul_table", a, b)

    def neg(self, a):
        if self.tabulated:
            out = self.neg_table[a]
        else:
            arr = np.asarray(a, dtype=np.int64)
            out = self._neg(arr.ravel()).reshape(arr.shape)
        return int(out) if np.ndim(out) == 0 else out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def prod(self, factors):
        out = self.one
        for f in factors:
            out = self.mul(out, f)
        return out

    def pow(self, a, k):
        out = self.one
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def is_unit(self, a):
        """True iff some ``b`` has ``a*b == 1`` (decided by scanning)."""
        row = self.mul(a, np.arange(self.size))
        return bool(np.any(row == self.one))

    def units(self):
        return [a for a in self.elements if self.is_unit(a)]

    def render_tuple(self, xs):
        return [self.render(int(x)) for x in xs]


class ZnRing(Ring):
    def __init__(self, spec):
        super().__init__(spec.modulus, str(spec), spec)
        self.modulus = spec.modulus
        self.one = 1

    def _add(self, a, b):
        return (a + b) % self.modulus

    def _mul(self, a, b):
        return (a * b) % self.modulus

    def _neg(self, a):
        return (-a) % self.modulus

    def render(self, a):
        return str(int(a))


class ProductRing(Ring):
    """Direct product; index order is mixed radix with the first factor most significant."""

    def __init__(self, spec, factors):
        size = math.prod(f.size for f in factors)
        super().__init__(size, str(spec), spec)
        self.factors = tuple(factors)
        strides = []
        s = 1
        for f in reversed(self.factors):
            strides.append(s)
            s *= f.size
        self.strides = tuple(reversed(strides))
        self.one = self.compose([f.one for f in self.factors])

    def decompose(self, a):
        a = np.asarray(a, dtype=np.int64)
        return [(a // st) % f.size for f, st in zip(self.factors, self.strides)]

    def compose(self, parts):
        out = 0
        for p, st in zip(parts, self.strides):
            out = out + np.asarray(p, dtype=np.int64) * st
        return int(out) if np.ndim(out) == 0 else out

    def _componentwise(self, op, a, b):
        parts = [getattr(f, op)(x, y) for f, x, y in zip(self.factors, self.decompose(a), self.decompose(b))]
        return self.compose(parts)

    def _add(self, a, b):
        return self._componentwise("add", a, b)

    def _mul(self, a, b):
        return self._componentwise("mul", a, b)

    def _neg(self, a):
        return self.compose([f.neg(x) for f, x in zip(self.factors, self.decompose(a))])

    def render(self, a):
        parts = self.decompose(int(a))
        return "(" + ",".join(f.render(int(x)) for f, x in zip(self.factors, parts)) + ")"


class PolyQuotRing(Ring):
    """``Z/p[x]/(f)``; element index is the base-``p`` number of its coefficient vector."""

    def __init__(self, spec):
        p, d = spec.p, spec.degree
        super().__init__(p**d, str(spec), spec)
        self.p = p
        self.degree = d
        self.one = 1
        self._powers = p ** np.arange(d, dtype=np.int64)
        # reduction of x^k mod f for k < 2d-1, one coefficient row each
        f = np.array(spec.f, dtype=np.int64)
        red = np.zeros((max(2 * d - 1, 1), d), dtype=np.int64)
        v = np.zeros(d, dtype=np.int64)
        v[0] = 1
        for k in range(red.shape[0]):
            red[k] = v
            top = v[-1]
            v = np.concatenate(([0], v[:-1]))
            v = (v - top * f[:d]) % p
        idx = np.add.outer(np.arange(d), np.arange(d))
        self._reduce = red[idx]  # (d, d, d)

    def coeffs(self, a):
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._powers) % self.p

    def index(self, coeffs):
        out = (np.asarray(coeffs, dtype=np.int64) % self.p) @ self._powers
        return int(out) if np.ndim(out) == 0 else out

    def _add(self, a, b):
        return self.index(self.coeffs(a) + self.coeffs(b))

    def _neg(self, a):
        return self.index(-self.coeffs(a))

    def _mul(self, a, b):
        ca, cb = self.coeffs(a), self.coeffs(b)
        outer = ca[..., :, None] * cb[..., None, :]
        return self.index(np.einsum("...ij,ijk->...k", outer, self._reduce))

    def render(self, a):
        return render_poly(self.coeffs(int(a)).tolist())


class QuotientRing(Ring):
    """``R/J`` with cosets numbered in order of their minimal representative."""

    def __init__(self, parent, J):
        members = np.asarray(J.members, dtype=np.int64)
        cosets = parent.add(np.arange(parent.size)[:, None], members[None, :])
        rep_of = np.asarray(cosets).min(axis=1)
        reps = np.unique(rep_of)
        label = f"({parent.label})/({', '.join(parent.render(g) for g in J.generators)})"
        super().__init__(len(reps), label, None)
        self.parent = parent
        self.ideal = J
        self.reps = reps
        self.projection = np.searchsorted(reps, rep_of).astype(np.int64)
        self.projection.setflags(write=False)
        self.one = int(self.projection[parent.one])

    def project(self, a):
        out = self.projection[a]
        return int(out) if np.ndim(out) == 0 else out

    def lift(self, a):
        out = self.reps[a]
        return int(out) if np.ndim(out) == 0 else out

    def _add(self, a, b):
        return self.projection[self.parent.add(self.reps[a], self.reps[b])]

    def _mul(self, a, b):
        return self.projection[self.parent.mul(self.reps[a], self.reps[b])]

    def _neg(self, a):
        return self.projection[self.parent.neg(self.reps[a])]

    def render(self, a):
        return f"[{self.parent.render(int(self.reps[a]))}]"


def _construct(spec):
    if isinstance(spec, Zn):
        return ZnRing(spec)
    if isinstance(spec, Product):
        return ProductRing(spec, [_construct(f) for f in spec.factors])
    return PolyQuotRing(spec)


@functools.lru_cache(maxsize=128)
def _cached(spec):
    return _construct(spec)


def build_ring(spec, cache=True):
    """Realize ``spec``.

    Raises :class:`NonPrimeModulus`, :class:`NonMonicPoly` or
    :class:`SizeCapExceeded`.  Identical specs share one cached instance
    unless ``cache=False``.
    """
    size = spec_size(spec)
    if size > settings.size_cap:
        raise SizeCapExceeded(f"{spec} has {size} elements, cap is {settings.size_cap}")
    return _cached(spec) if cache else _construct(spec)


def quotient_ring(ring, J):
    """Return ``(R/J, projection)`` where ``projection[a]`` is the coset index of ``a``."""
    if J.ring is not ring:
        from .errors import RingMismatch

        raise RingMismatch("ideal belongs to a different ring")
    if not J.is_proper():
        raise ImproperIdeal("cannot form the quotient by the whole ring")
    q = QuotientRing(ring, J)
    return q, q.projection


def axiom_violations(ring):
    """Count element triples violating each commutative-ring axiom (exhaustive)."""
    n = ring.size
    e = np.arange(n)
    a, b = e[:, None], e[None, :]
    counts = {
        "add_commutative": int(np.count_nonzero(ring.add(a, b) != ring.add(b, a))),
        "mul_commutative": int(np.count_nonzero(ring.mul(a, b) != ring.mul(b, a))),
        "add_identity": int(np.count_nonzero(ring.add(e, ring.zero) != e)),
        "mul_identity": int(np.count_nonzero(ring.mul(e, ring.one) != e)),
        "add_inverse": int(np.count_nonzero(ring.add(e, ring.neg(e)) != ring.zero)),
        "mul_associative": 0,
        "distributive": 0,
        "add_associative": 0,
        "zero_ne_one": int(ring.zero == ring.one),
    }
    ab_mul = ring.mul(a, b)
    ab_add = ring.add(a, b)
    for c in range(n):
        counts["mul_associative"] += int(np.count_nonzero(ring.mul(ab_mul, c) != ring.mul(a, ring.mul(b, c))))
        counts["add_associative"] += int(np.count_nonzero(ring.add(ab_add, c) != ring.add(a, ring.add(b, c))))
        lhs = ring.mul(a, ring.add(b, c))
        rhs = ring.add(ab_mul, ring.mul(a, c))
        counts["distributive"] += int(np.count_nonzero(lhs != rhs))
    return counts
