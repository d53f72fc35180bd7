"""Text syntax for ring specs, elements, ideals and monomials.

Ring specs::

    Z/12
    Z/4 x Z/9            (direct product; parentheses nest)
    Z/2[x]/(x^2+x+1)     (polynomial in ascending or descending order)

Element literals are an integer for ``Z/n``, ``(a,b,...)`` for products and a
polynomial in ``x`` for ``Z/p[x]/(f)``.  Ideal literals are comma-separated
element literals.  Monomials are written ``t1^2*t2`` (``1`` is the empty
monomial).
"""

from __future__ import annotations

from .errors import ParseError
from .ring import PolyQuot, Product, ProductRing, PolyQuotRing, QuotientRing, Zn, ZnRing

__all__ = [
    "parse_ring_spec",
    "parse_element",
    "parse_ideal_literal",
    "parse_monomial",
    "parse_monomial_list",
    "split_top_level",
]


class _Cursor:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self):
        return self.peek() == ""

    def fail(self, expected):
        raise ParseError(self.text, self.pos, expected)

    def expect(self, token):
        self.skip()
        if not self.text.startswith(token, self.pos):
            self.fail(repr(token))
        self.pos += len(token)

    def accept(self, token):
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("an integer")
        return int(self.text[start:self.pos])


def parse_ring_spec(text):
    """Parse ring-spec text into a :data:`~absorb.ring.RingSpec`.

    >>> parse_ring_spec("Z/4 x Z/9")
    Product(factors=(Zn(modulus=4), Zn(modulus=9)))
    """
    cur = _Cursor(text)
    spec = _ring(cur)
    if not cur.at_end():
        cur.fail("end of input or ' x '")
    return spec


def _ring(cur):
    factors = [_factor(cur)]
    while cur.accept("x"):
        factors.append(_factor(cur))
    return factors[0] if len(factors) == 1 else Product(factors)


def _factor(cur):
    if cur.accept("("):
        inner = _ring(cur)
        cur.expect(")")
        return inner
    cur.expect("Z")
    cur.expect("/")
    start = cur.pos
    modulus = cur.integer()
    if modulus < 2:
        raise ParseError(cur.text, start, "a modulus >= 2")
    if not cur.accept("["):
        return Zn(modulus)
    cur.expect("x")
    cur.expect("]")
    cur.expect("/")
    cur.expect("(")
    coeffs = _poly(cur)
    cur.expect(")")
    return PolyQuot(modulus, _trim(coeffs))


def _trim(coeffs):
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly(cur, var="x"):
    """Parse a polynomial; returns ascending integer coefficients (unreduced)."""
    terms = {}
    sign = -1 if cur.accept("-") else 1
    if sign == 1:
        cur.accept("+")
    while True:
        coef, deg = _poly_term(cur, var)
        terms[deg] = terms.get(deg, 0) + sign * coef
        if cur.accept("+"):
            sign = 1
        elif cur.accept("-"):
            sign = -1
        else:
            break
    top = max(terms)
    return [terms.get(k, 0) for k in range(top + 1)]


def _poly_term(cur, var):
    coef = None
    if cur.peek().isdigit():
        coef = cur.integer()
        if not cur.accept("*") and cur.peek() != var:
            return coef, 0
    if not cur.accept(var):
        cur.fail(f"a term in {var}")
    deg = cur.integer() if cur.accept("^") else 1
    return (1 if coef is None else coef), deg


def split_top_level(text, sep=","):
    """Split on ``sep`` outside parentheses and brackets."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts if p.strip()]


def parse_element(ring, text):
    """Parse an element literal of ``ring`` and return its index."""
    cur = _Cursor(text)
    value = _element(ring, cur)
    if not cur.at_end():
        cur.fail("end of element literal")
    return value


def _element(ring, cur):
    if isinstance(ring, QuotientRing):
        bracketed = cur.accept("[")
        value = ring.project(_element(ring.parent, cur))
        if bracketed:
            cur.expect("]")
        return value
    if isinstance(ring, ZnRing):
        neg = cur.accept("-")
        v = cur.integer()
        return (-v if neg else v) % ring.modulus
    if isinstance(ring, ProductRing):
        cur.expect("(")
        parts = [_element(ring.factors[0], cur)]
        for f in ring.factors[1:]:
            cur.expect(",")
            parts.append(_element(f, cur))
        cur.expect(")")
        return ring.compose(parts)
    if isinstance(ring, PolyQuotRing):
        coeffs = _poly(cur)
        if ring.degree >= 2:
            x = ring.p
        else:
            # degree-one modulus: x is congruent to -f0
            x = (-ring.spec.f[0]) % ring.p
        value = ring.zero
        xk = ring.one
        for c in coeffs:
            value = ring.add(value, ring.mul(c % ring.p, xk))
            xk = ring.mul(xk, x)
        return value
    raise TypeError(f"no literal syntax for {ring!r}")


def parse_ideal_literal(ring, text):
    """Parse ``"4"`` or ``"x, 2"`` into a list of generator indices."""
    return [parse_element(ring, part) for part in split_top_level(text)]


def parse_monomial(text, nvars):
    """Parse ``t1^2*t3`` into an exponent tuple of length ``nvars``."""
    cur = _Cursor(text)
    exps = [0] * nvars
    if cur.accept("1"):
        if not cur.at_end():
            cur.fail("end of monomial")
        return tuple(exps)
    while True:
        cur.expect("t")
        start = cur.pos
        var = cur.integer()
        if not 1 <= var <= nvars:
            raise ParseError(text, start, f"a variable index in 1..{nvars}")
        exps[var - 1] += cur.integer() if cur.accept("^") else 1
        if not cur.accept("*"):
            break
    if not cur.at_end():
        cur.fail("'*' or end of monomial")
    return tuple(exps)


def parse_monomial_list(text, nvars):
    return [parse_monomial(part, nvars) for part in split_top_level(text)]
