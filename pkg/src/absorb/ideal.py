"""Ideals of a finite ring stored as explicit member bitsets.

An :class:`Ideal` keeps its members as a Python ``int`` whose bit ``i`` is
set when element ``i`` belongs to it; a boolean numpy mask is derived on
demand for the vectorized scans.  Set algebra (meet, containment, equality)
is word-parallel on the bitset.
"""

from __future__ import annotations

import functools

import numpy as np

from .config import settings
from .errors import RingMismatch, SizeCapExceeded

__all__ = [
    "Ideal",
    "ideal_from_generators",
    "ideal_from_mask",
    "zero_ideal",
    "unit_ideal",
    "principal",
    "ideal_sum",
    "ideal_product",
    "intersection",
    "power",
    "colon",
    "radical",
    "enumerate_ideals",
    "is_proper",
    "contains",
    "equals",
    "in_difference",
    "image",
    "preimage",
]


def _mask_to_bits(mask):
    packed = np.packbits(np.asarray(mask, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _bits_to_mask(bits, size):
    raw = bits.to_bytes((size + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little", count=size).astype(bool)


class Ideal:
    """An ideal of ``ring``.

    Equality is set equality; ``generators`` is descriptive metadata.  When
    no generators are supplied a small generating set is chosen greedily in
    element order.
    """

    def __init__(self, ring, bits, generators=None):
        self.ring = ring
        self.bits = int(bits)
        self._generators = None if generators is None else tuple(int(g) for g in generators)

    # -- set views ----------------------------------------------------------

    @functools.cached_property
    def mask(self):
        m = _bits_to_mask(self.bits, self.ring.size)
        m.setflags(write=False)
        return m

    @functools.cached_property
    def members(self):
        return tuple(int(i) for i in np.flatnonzero(self.mask))

    def __contains__(self, x):
        return (self.bits >> int(x)) & 1 == 1

    def __len__(self):
        return self.bits.bit_count()

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring is other.ring and self.bits == other.bits

    def __hash__(self):
        return hash((id(self.ring), self.bits))

    def __le__(self, other):
        _same_ring(self, other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other):
        return other <= self

    def __lt__(self, other):
        return self <= other and self.bits != other.bits

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __and__(self, other):
        return intersection(self, other)

    def __pow__(self, k):
        return power(self, k)

    def __repr__(self):
        gens = ", ".join(self.ring.render(g) for g in self.generators)
        return f"<Ideal ({gens}) of {self.ring.label}, {len(self)} elements>"

    @property
    def generators(self):
        if self._generators is None:
            self._generators = _greedy_generators(self)
        return self._generators

    def is_proper(self):
        return self.ring.one not in self

    def is_zero(self):
        return self.bits == 1

    def text(self):
        """Generators rendered as element literals (``["0"]`` for the zero ideal)."""
        return [self.ring.render(g) for g in self.generators] or [self.ring.render(self.ring.zero)]


def _same_ring(P, Q):
    if P.ring is not Q.ring:
        raise RingMismatch(f"ideals live in different rings ({P.ring.label} vs {Q.ring.label})")


def ideal_from_mask(ring, mask, generators=None):
    return Ideal(ring, _mask_to_bits(mask), generators)


def _from_indices(ring, idx, generators=None):
    mask = np.zeros(ring.size, dtype=bool)
    mask[np.asarray(idx, dtype=np.int64).ravel()] = True
    return ideal_from_mask(ring, mask, generators)


def zero_ideal(ring):
    return Ideal(ring, 1, ())


def unit_ideal(ring):
    return Ideal(ring, (1 << ring.size) - 1, (ring.one,))


def principal(ring, g):
    """``<g> = {r*g : r in R}``."""
    return _from_indices(ring, ring.mul(np.arange(ring.size), int(g)), (int(g),))


def _sum_bits(ring, A, B):
    # {a+b}; for ideals this is already closed, no fixpoint needed
    a = np.asarray(A.members, dtype=np.int64)
    b = np.asarray(B.members, dtype=np.int64)
    return _from_indices(ring, ring.add(a[:, None], b[None, :]))


def ideal_from_generators(ring, gens):
    """Smallest ideal containing ``gens`` (sum of the principal ideals)."""
    gens = [int(g) for g in gens]
    current = zero_ideal(ring)
    for g in gens:
        if g not in current:
            current = _sum_bits(ring, current, principal(ring, g))
    return Ideal(ring, current.bits, gens)


def _greedy_generators(P):
    gens = []
    current = zero_ideal(P.ring)
    for x in P.members:
        if x not in current:
            gens.append(x)
            current = _sum_bits(P.ring, current, principal(P.ring, x))
            if current.bits == P.bits:
                break
    return tuple(gens)


def ideal_sum(P, Q):
    _same_ring(P, Q)
    return _sum_bits(P.ring, P, Q)


def ideal_product(P, Q):
    """Ideal generated by all products ``p*q``."""
    _same_ring(P, Q)
    ring = P.ring
    a = np.asarray(P.members, dtype=np.int64)
    b = np.asarray(Q.members, dtype=np.int64)
    prods = np.unique(ring.mul(a[:, None], b[None, :]))
    # the product set is closed under multiplication by R; only additive closure remains
    return Ideal(ring, ideal_from_generators(ring, prods).bits)


def intersection(P, Q):
    _same_ring(P, Q)
    return Ideal(P.ring, P.bits & Q.bits)


def power(P, k):
    if k < 1:
        raise ValueError("power exponent must be >= 1")
    out = P
    for _ in range(k - 1):
        out = ideal_product(out, P)
    return out


def colon(P, x):
    """``(P : x) = {r : r*x in P}``."""
    ring = P.ring
    return ideal_from_mask(ring, P.mask[ring.mul(np.arange(ring.size), int(x))])


def radical(P):
    """``{r : r^k in P for some 1 <= k <= |R|}``."""
    ring = P.ring
    base = np.arange(ring.size)
    cur = base
    hit = P.mask[cur].copy()
    seen = {cur.tobytes()}
    for _ in range(ring.size - 1):
        cur = np.asarray(ring.mul(cur, base), dtype=np.int64)
        hit |= P.mask[cur]
        key = cur.tobytes()
        if key in seen:
            # the power map has entered a cycle; later powers add nothing
            break
        seen.add(key)
    return ideal_from_mask(ring, hit)


def enumerate_ideals(ring):
    """Every ideal of ``ring``, sorted by (cardinality, members).

    Computed as the closure of the principal ideals under pairwise sums.
    """
    if ring.size > settings.size_cap:
        raise SizeCapExceeded(f"{ring.label} has {ring.size} elements, cap is {settings.size_cap}")
    found = {}
    for g in ring.elements:
        P = principal(ring, g)
        found.setdefault(P.bits, P)
    frontier = list(found.values())
    while frontier:
        fresh = []
        snapshot = list(found.values())
        for A in frontier:
            for B in snapshot:
                if A.bits & ~B.bits == 0 or B.bits & ~A.bits == 0:
                    continue
                S = _sum_bits(ring, A, B)
                if S.bits not in found:
                    found[S.bits] = S
                    fresh.append(S)
        frontier = fresh
    ideals = [Ideal(ring, bits) for bits in found]
    ideals.sort(key=lambda P: (len(P), P.members))
    return ideals


def is_proper(P):
    return P.is_proper()


def contains(P, Q):
    """True iff ``Q`` is a subset of ``P``."""
    return Q <= P


def equals(P, Q):
    _same_ring(P, Q)
    return P.bits == Q.bits


def in_difference(x, P, Q):
    """True iff ``x`` lies in ``P`` but not in ``Q``."""
    _same_ring(P, Q)
    return x in P and x not in Q


def image(P, qring):
    """Image of ``P`` in the quotient ring ``qring``."""
    if qring.parent is not P.ring:
        raise RingMismatch("quotient ring is not built over this ideal's ring")
    proj = qring.projection
    gens = sorted({int(proj[g]) for g in P.generators})
    return _from_indices(qring, proj[np.asarray(P.members, dtype=np.int64)], gens)


def preimage(Q, qring):
    """Preimage in the parent ring of an ideal of ``qring``."""
    if Q.ring is not qring:
        raise RingMismatch("ideal does not belong to this quotient ring")
    return ideal_from_mask(qring.parent, Q.mask[qring.projection])
