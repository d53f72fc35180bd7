"""Decision procedures for prime-like ideal predicates.

Every checker scans element tuples ``(b1, ..., b_{k})`` in lexicographic
index order and reports the smallest violating tuple.  All of the
absorbing-type predicates share one shape::

    b1*...*b_{n+1} in D \\ E   implies   b1*...*b_n in A
                                        or  (product omitting b_i) in B
                                            for some i in the omit range

so a single vectorized scanner (:func:`_scan_absorbing`) serves them all.
The colon-ideal characterization of n-absorbing I-primary ideals is a
separate, loop-based procedure built on :mod:`absorb.ideal` only; the two
must agree on every input.

By default the omit range is ``1..n``: the last factor is never dropped on
its own.  ``symmetric=True`` widens it to ``1..n+1``.
"""

from __future__ import annotations

import concurrent.futures
import dataclasses
import functools
import itertools

import numpy as np

from .config import settings
from .errors import CostCapExceeded, ImproperIdeal, RingMismatch
from .ideal import colon, ideal_product, radical, zero_ideal

__all__ = [
    "Verdict",
    "is_prime",
    "is_weakly_prime",
    "is_primary",
    "is_weakly_primary",
    "is_n_absorbing",
    "is_n_absorbing_primary",
    "is_n_absorbing_primary_relative",
    "is_I_primary",
    "is_n_absorbing_I_primary",
    "is_n_absorbing_I_primary_colon",
    "is_weakly_n_absorbing_primary",
    "find_I_tuple",
    "PREDICATES",
    "check",
    "WEAKLY_DEFINITION_NOTE",
]

WEAKLY_DEFINITION_NOTE = (
    "weakly n-absorbing primary is taken as the n-absorbing I-primary condition with IP replaced by (0)"
)

# tuples per scan block
_BLOCK = 1 << 16
# keep product blocks for tuple spaces up to this size
_CACHE_LIMIT = 1 << 21


@dataclasses.dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate check.

    ``witness`` is the lexicographically smallest violating tuple (element
    indices) when ``holds`` is false.  ``clauses`` describes the violation:
    the membership that put the tuple in scope followed by each disjunct
    that failed.
    """

    predicate: str
    holds: bool
    witness: tuple | None = None
    clauses: tuple = ()
    notes: tuple = ()

    def __bool__(self):
        return self.holds

    def to_dict(self, ring):
        wit = None
        if self.witness is not None:
            wit = {
                "tuple": list(self.witness),
                "text": ring.render_tuple(self.witness),
                "clauses": list(self.clauses),
            }
        return {"predicate": self.predicate, "holds": self.holds, "witness": wit, "notes": list(self.notes)}


# ---------------------------------------------------------------------------
# tuple-space machinery


def _check_cost(ring, arity):
    cost = ring.size**arity
    if cost > settings.cost_cap and not settings.force:
        raise CostCapExceeded(
            f"scan of {ring.size}^{arity} = {cost} tuples exceeds the cost cap {settings.cost_cap}"
        )


def _blocks(ring, arity):
    s = ring.size
    inner = s ** (arity - 1)
    rows = max(1, _BLOCK // inner)
    return [(lo, min(s, lo + rows)) for lo in range(0, s, rows)]


def _build_products(ring, arity, lo, hi):
    s = ring.size
    axes = []
    for k in range(arity):
        shape = [1] * arity
        if k == 0:
            vals = np.arange(lo, hi)
            shape[0] = hi - lo
        else:
            vals = np.arange(s)
            shape[k] = s
        axes.append(vals.reshape(shape))
    full_shape = (hi - lo,) + (s,) * (arity - 1)
    one = np.full([1] * arity, ring.one)
    prefix = [one]
    for k in range(arity):
        prefix.append(np.asarray(ring.mul(prefix[-1], axes[k])))
    suffix = [one] * (arity + 1)
    for k in range(arity - 1, -1, -1):
        suffix[k] = np.asarray(ring.mul(axes[k], suffix[k + 1]))
    full = np.broadcast_to(prefix[arity], full_shape)
    omit = [np.broadcast_to(np.asarray(ring.mul(prefix[i], suffix[i + 1])), full_shape) for i in range(arity)]
    return full, omit


def _products(ring, arity, lo, hi):
    if ring.size**arity > _CACHE_LIMIT:
        return _build_products(ring, arity, lo, hi)
    cache = ring.__dict__.setdefault("_tuple_products", {})
    key = (arity, lo, hi)
    if key not in cache:
        cache[key] = _build_products(ring, arity, lo, hi)
    return cache[key]


def _first_true(v, lo):
    flat = np.flatnonzero(v.ravel())
    if flat.size == 0:
        return None
    idx = np.unravel_index(int(flat[0]), v.shape)
    return (int(idx[0]) + lo,) + tuple(int(i) for i in idx[1:])


def _scan_blocks(ring, arity, block_fn):
    """Run ``block_fn(lo, hi)`` over the tuple space; return the minimal witness.

    Blocks partition the leading coordinate, so the smallest witness is the
    first non-empty block result in block order regardless of scheduling.
    """
    _check_cost(ring, arity)
    blocks = _blocks(ring, arity)
    jobs = max(1, int(settings.jobs))
    if jobs == 1 or len(blocks) == 1:
        for lo, hi in blocks:
            w = block_fn(lo, hi)
            if w is not None:
                return w
        return None
    with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(block_fn, lo, hi) for lo, hi in blocks]
        if settings.fast:
            for fut in concurrent.futures.as_completed(futures):
                w = fut.result()
                if w is not None:
                    for other in futures:
                        other.cancel()
                    return w
            return None
        results = [f.result() for f in futures]
    found = [w for w in results if w is not None]
    return min(found) if found else None


def _product_label(positions):
    return "*".join(f"b{i + 1}" for i in positions)


@functools.lru_cache(maxsize=4096)
def _scan_absorbing(domain, exclude, first, target, n, omit, names, fast):
    """Smallest tuple violating the absorbing-shaped condition, with clause tags.

    ``domain``/``exclude`` select the scanned products, ``first`` (or None)
    is the ideal for ``b1*...*b_n`` and ``target`` the ideal for the
    products omitting ``b_i`` for ``i`` in ``omit`` (0-based).
    """
    del fast  # part of the cache key only
    ring = domain.ring
    arity = n + 1
    dom = domain.mask
    exc = None if exclude is None else exclude.mask
    fst = None if first is None else first.mask
    tgt = target.mask

    def block(lo, hi):
        full, omitted = _products(ring, arity, lo, hi)
        v = dom[full]
        if exc is not None:
            v = v & ~exc[full]
        if fst is not None:
            v = v & ~fst[omitted[n]]
        for i in omit:
            v = v & ~tgt[omitted[i]]
        return _first_true(v, lo)

    witness = _scan_blocks(ring, arity, block)
    if witness is None:
        return None, ()
    return witness, _clauses(ring, witness, domain, exclude, first, target, n, omit, names)


def _clauses(ring, w, domain, exclude, first, target, n, omit, names):
    d_name, e_name, f_name, t_name = names
    everything = list(range(n + 1))
    prod = ring.prod(w)
    tags = [f"{_product_label(everything)} in {d_name}" if prod in domain else f"{_product_label(everything)} not in {d_name}"]
    if exclude is not None:
        tags.append(f"{_product_label(everything)} {'in' if prod in exclude else 'not in'} {e_name}")
    if first is not None:
        x = ring.prod(w[:n])
        tags.append(f"{_product_label(range(n))} {'in' if x in first else 'not in'} {f_name}")
    for i in omit:
        keep = [j for j in everything if j != i]
        x = ring.prod(w[j] for j in keep)
        tags.append(f"{_product_label(keep)} {'in' if x in target else 'not in'} {t_name}")
    return tuple(tags)


def _require_proper(P):
    if not P.is_proper():
        raise ImproperIdeal(f"the ideal {P!r} is the whole ring")


def _same_ring(P, I):
    if P.ring is not I.ring:
        raise RingMismatch("P and I belong to different rings")


def _check_n(n):
    if n < 1:
        raise ValueError(f"absorbing index must be >= 1, got {n}")


def _omit(n, symmetric):
    return tuple(range(n + 1 if symmetric else n))


def _verdict(name, result, notes=()):
    witness, clauses = result
    return Verdict(name, witness is None, witness, clauses, tuple(notes))


# ---------------------------------------------------------------------------
# classical predicates


def is_prime(P):
    _require_proper(P)
    return _verdict("prime", _scan_absorbing(P, None, P, P, 1, (0,), ("P", None, "P", "P"), settings.fast))


def is_weakly_prime(P):
    """Prime condition restricted to nonzero products."""
    _require_proper(P)
    z = zero_ideal(P.ring)
    return _verdict(
        "weakly-prime", _scan_absorbing(P, z, P, P, 1, (0,), ("P", "(0)", "P", "P"), settings.fast)
    )


def is_primary(P):
    _require_proper(P)
    return _verdict(
        "primary", _scan_absorbing(P, None, P, radical(P), 1, (0,), ("P", None, "P", "rad(P)"), settings.fast)
    )


def is_weakly_primary(P):
    _require_proper(P)
    z = zero_ideal(P.ring)
    return _verdict(
        "weakly-primary",
        _scan_absorbing(P, z, P, radical(P), 1, (0,), ("P", "(0)", "P", "rad(P)"), settings.fast),
    )


def is_n_absorbing(P, n):
    """Some ``n`` of any ``n+1`` factors whose product lies in ``P`` multiply into ``P``."""
    _require_proper(P)
    _check_n(n)
    return _verdict(
        "n-absorbing",
        _scan_absorbing(P, None, None, P, n, tuple(range(n + 1)), ("P", None, None, "P"), settings.fast),
    )


def is_n_absorbing_primary(P, n, symmetric=False):
    """``a1...a_{n+1} in P`` forces ``a1...a_n in P`` or ``a_{n+1}`` times an (n-1)-subproduct in rad(P)."""
    _require_proper(P)
    _check_n(n)
    return _verdict(
        "n-absorbing-primary",
        _scan_absorbing(P, None, P, radical(P), n, _omit(n, symmetric), ("P", None, "P", "rad(P)"), settings.fast),
    )


def is_n_absorbing_primary_relative(P, Q, n, symmetric=False, name="n-absorbing-primary-relative", q_name="Q"):
    """n-absorbing primary condition imposed only on products in ``P`` but outside ``Q``."""
    _require_proper(P)
    _same_ring(P, Q)
    _check_n(n)
    return _verdict(
        name,
        _scan_absorbing(P, Q, P, radical(P), n, _omit(n, symmetric), ("P", q_name, "P", "rad(P)"), settings.fast),
    )


def is_I_primary(P, I):
    _require_proper(P)
    _same_ring(P, I)
    return _verdict(
        "I-primary",
        _scan_absorbing(P, ideal_product(I, P), P, radical(P), 1, (0,), ("P", "IP", "P", "rad(P)"), settings.fast),
    )


def is_n_absorbing_I_primary(P, I, n, symmetric=False):
    """``b1...b_{n+1} in P - IP`` forces ``b1...b_n in P`` or an omitted product in rad(P)."""
    return is_n_absorbing_primary_relative(
        P, ideal_product(I, P), n, symmetric, name="n-absorbing-I-primary", q_name="IP"
    )


def is_weakly_n_absorbing_primary(P, n, symmetric=False):
    """n-absorbing primary condition for nonzero products only (adopted definition)."""
    v = is_n_absorbing_primary_relative(
        P, zero_ideal(P.ring), n, symmetric, name="weakly-n-absorbing-primary", q_name="(0)"
    )
    return dataclasses.replace(v, notes=(WEAKLY_DEFINITION_NOTE,))


def find_I_tuple(P, I, n, symmetric=False):
    """Smallest ``(b1..b_{n+1})`` with product in IP and every disjunct failing, else None."""
    _require_proper(P)
    _same_ring(P, I)
    _check_n(n)
    IP = ideal_product(I, P)
    witness, _ = _scan_absorbing(
        IP, None, P, radical(P), n, _omit(n, symmetric), ("IP", None, "P", "rad(P)"), settings.fast
    )
    return witness


# ---------------------------------------------------------------------------
# colon-ideal characterization


def is_n_absorbing_I_primary_colon(P, I, n, symmetric=False):
    """Decide n-absorbing I-primary through colon ideals.

    For every ``(a1..a_n)`` whose product lies outside rad(P) the colon
    ``(P : a1...a_n)`` must sit inside the union of ``(rad P : product
    omitting a_i)`` for ``i < n``, ``(P : a1...a_{n-1})`` and
    ``(IP : a1...a_n)``.  A failing ``r`` gives the witness ``(r, a1..a_n)``.
    """
    _require_proper(P)
    _same_ring(P, I)
    _check_n(n)
    ring = P.ring
    _check_cost(ring, n + 1)
    IP = ideal_product(I, P)
    rad = radical(P)
    cache = {}

    def colon_bits(J, x):
        key = (id(J), x)
        if key not in cache:
            cache[key] = colon(J, x).bits
        return cache[key]

    for alpha in itertools.product(ring.elements, repeat=n):
        a = ring.prod(alpha)
        if a in rad:
            continue
        allowed = 0
        for i in range(n - 1):
            allowed |= colon_bits(rad, ring.prod(alpha[:i] + alpha[i + 1:]))
        head = ring.prod(alpha[: n - 1])
        allowed |= colon_bits(P, head)
        if symmetric:
            allowed |= colon_bits(rad, head)
        allowed |= colon_bits(IP, a)
        bad = colon_bits(P, a) & ~allowed
        if bad:
            r = (bad & -bad).bit_length() - 1
            clauses = (
                "r*a1*...*a_n in P",
                "a1*...*a_n not in rad(P)",
                "r not in (IP : a1*...*a_n)",
                "r not in (P : a1*...*a_{n-1})",
                "r not in (rad(P) : a1*...*a_n omitting a_i) for every i < n",
            )
            return Verdict("n-absorbing-I-primary-colon", False, (r,) + tuple(alpha), clauses)
    return Verdict("n-absorbing-I-primary-colon", True)


# ---------------------------------------------------------------------------
# uniform dispatch used by the sweep and the CLI


def _uniform(fn, uses_I=False, uses_n=False, symmetric_ok=False):
    def call(P, I=None, n=1, symmetric=False):
        args = [P]
        if uses_I:
            args.append(I)
        if uses_n:
            args.append(n)
        kwargs = {"symmetric": symmetric} if symmetric_ok else {}
        return fn(*args, **kwargs)

    call.uses_I = uses_I
    call.uses_n = uses_n
    return call


PREDICATES = {
    "prime": _uniform(is_prime),
    "weakly-prime": _uniform(is_weakly_prime),
    "primary": _uniform(is_primary),
    "weakly-primary": _uniform(is_weakly_primary),
    "n-absorbing": _uniform(is_n_absorbing, uses_n=True),
    "n-absorbing-primary": _uniform(is_n_absorbing_primary, uses_n=True, symmetric_ok=True),
    "I-primary": _uniform(is_I_primary, uses_I=True),
    "n-absorbing-I-primary": _uniform(is_n_absorbing_I_primary, uses_I=True, uses_n=True, symmetric_ok=True),
    "n-absorbing-I-primary-colon": _uniform(
        is_n_absorbing_I_primary_colon, uses_I=True, uses_n=True, symmetric_ok=True
    ),
    "weakly-n-absorbing-primary": _uniform(is_weakly_n_absorbing_primary, uses_n=True, symmetric_ok=True),
}


def check(name, P, I=None, n=1, symmetric=False):
    """Run the predicate registered under ``name`` (see :data:`PREDICATES`)."""
    if name == "I-tuple":
        w = find_I_tuple(P, I, n, symmetric)
        return Verdict("I-tuple", w is None, w, ("I-(n+1)-tuple found",) if w else ())
    try:
        fn = PREDICATES[name]
    except KeyError:
        raise ValueError(f"unknown predicate {name!r}; choose from {sorted(PREDICATES) + ['I-tuple']}") from None
    return fn(P, I, n, symmetric)
