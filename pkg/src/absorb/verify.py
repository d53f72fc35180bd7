"""Exhaustive verification of the structural results on absorbing I-primary ideals.

Each ``verify_*`` function enumerates instances over a battery of finite
rings, evaluates the named hypothesis clauses, and checks every conclusion on
the instances where all (non-dropped) hypotheses hold.  A failing conclusion
becomes an :class:`InstanceRecord` whose witness is spelled out as a list of
membership *claims*; :func:`revalidate` recomputes those claims from the ring
spec text and generator literals using ideal arithmetic only.

Statements whose printed form is ambiguous carry a named reading; every
report records the reading it used.
"""

from __future__ import annotations

import concurrent.futures
import dataclasses
import functools
import itertools
import time

import numpy as np

from .config import configured, settings
from .ideal import (
    colon,
    enumerate_ideals,
    ideal_from_generators,
    ideal_product,
    ideal_sum,
    image,
    intersection,
    power,
    principal,
    radical,
    unit_ideal,
    zero_ideal,
)
from .parsing import _Cursor, parse_ideal_literal, parse_ring_spec
from .predicates import (
    WEAKLY_DEFINITION_NOTE,
    find_I_tuple,
    is_n_absorbing,
    is_n_absorbing_I_primary,
    is_n_absorbing_I_primary_colon,
    is_n_absorbing_primary,
    is_n_absorbing_primary_relative,
    is_weakly_n_absorbing_primary,
)
from .ring import Ring, build_ring, quotient_ring

__all__ = [
    "DEFAULT_BATTERY",
    "InstanceRecord",
    "TheoremReport",
    "resolve_rings",
    "sweep",
    "implication_violations",
    "monotonicity_failures",
    "verify_prop_2_2",
    "verify_prop_2_4",
    "verify_thm_2_5",
    "verify_prop_2_6",
    "verify_prop_2_7",
    "verify_thm_2_9",
    "verify_prop_2_10",
    "verify_thm_2_11",
    "verify_thm_2_12",
    "counterexample_search",
    "THEOREMS",
    "HYPOTHESES",
    "revalidate",
    "evaluate_ideal_expression",
]

DEFAULT_BATTERY = (
    "Z/4",
    "Z/6",
    "Z/8",
    "Z/9",
    "Z/12",
    "Z/16",
    "Z/27",
    "Z/30",
    "Z/2[x]/(x^2)",
    "Z/3[x]/(x^2)",
    "Z/2[x]/(x^2+x+1)",
    "Z/4 x Z/9",
)

SWEEP_PREDICATES = (
    "prime",
    "weakly-prime",
    "primary",
    "weakly-primary",
    "n-absorbing",
    "n-absorbing-primary",
    "I-primary",
    "n-absorbing-I-primary",
    "n-absorbing-I-primary-colon",
    "weakly-n-absorbing-primary",
    "I-tuple",
)


# ---------------------------------------------------------------------------
# records


@dataclasses.dataclass
class InstanceRecord:
    """One conclusion failure.

    ``claims`` lists ``{"factors", "ideal", "member"}`` entries: the product
    of the factor elements must (or must not) lie in the ideal described by
    the expression, evaluated over the generator literals in ``params``.
    """

    ring: str
    params: dict
    hypotheses: dict
    conclusion: str
    conclusion_holds: bool
    witness: list | None
    witness_text: list | None
    claims: list

    def to_dict(self):
        return dataclasses.asdict(self)


@dataclasses.dataclass
class TheoremReport:
    theorem: str
    reading: dict
    rings: list
    instances: int = 0
    hypothesis_hits: int = 0
    hypothesis_misses: int = 0
    skipped: int = 0
    checks: int = 0
    failures: list = dataclasses.field(default_factory=list)
    failure_counts: dict = dataclasses.field(default_factory=dict)
    dropped: list = dataclasses.field(default_factory=list)
    notes: list = dataclasses.field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        out = dataclasses.asdict(self)
        del out["elapsed"]
        out["failures"] = [f.to_dict() for f in self.failures]
        return out


@dataclasses.dataclass
class _Outcome:
    params: dict
    hypotheses: dict = dataclasses.field(default_factory=dict)
    skipped: bool = False
    hit: bool = False
    checks: int = 0
    failures: list = dataclasses.field(default_factory=list)


# ---------------------------------------------------------------------------
# helpers


def resolve_rings(rings):
    """Accept ``"default"``, a ring, a spec text, or a list of those."""
    if rings is None or rings == "default":
        rings = DEFAULT_BATTERY
    if isinstance(rings, (str, Ring)):
        rings = [rings]
    out = []
    for r in rings:
        if isinstance(r, Ring):
            out.append(r)
        elif isinstance(r, str):
            out.extend(resolve_rings(DEFAULT_BATTERY) if r == "default" else [build_ring(parse_ring_spec(r))])
        else:
            out.append(build_ring(r))
    return out


@functools.lru_cache(maxsize=256)
def _ideals(ring):
    return tuple(enumerate_ideals(ring))


def _proper(ring):
    return tuple(P for P in _ideals(ring) if P.is_proper())


@functools.lru_cache(maxsize=1024)
def _quotient(ring, J):
    return quotient_ring(ring, J)[0]


def _gens(P):
    return P.text()


def _absorbing_claims(ring, w, n, domain, exclude, first, target, omit):
    """Claims re-deriving an absorbing-type violation from its witness tuple."""
    w = [int(x) for x in w]
    claims = [{"factors": w, "ideal": domain, "member": True}]
    if exclude is not None:
        claims.append({"factors": w, "ideal": exclude, "member": False})
    if first is not None:
        claims.append({"factors": w[:n], "ideal": first, "member": False})
    for i in omit:
        claims.append({"factors": w[:i] + w[i + 1:], "ideal": target, "member": False})
    return claims


def _omit(n, symmetric):
    return tuple(range(n + 1 if symmetric else n))


def _failure(ring, outcome, conclusion, witness, claims):
    return InstanceRecord(
        ring=ring.label,
        params=outcome.params,
        hypotheses=dict(outcome.hypotheses),
        conclusion=conclusion,
        conclusion_holds=False,
        witness=None if witness is None else [int(x) for x in witness],
        witness_text=None if witness is None else ring.render_tuple(witness),
        claims=claims,
    )


def _active(hyps, dropped):
    return all(v for k, v in hyps.items() if k not in dropped)


def _first_outside(A, B):
    """Smallest element of A not in B, else None."""
    diff = A.bits & ~B.bits
    return None if diff == 0 else (diff & -diff).bit_length() - 1


def _run(theorem, rings, reading, cases, evaluate, dropped=(), notes=()):
    """Evaluate ``cases`` (ring, payload) in order and fold them into a report."""
    start = time.perf_counter()
    report = TheoremReport(
        theorem=theorem,
        reading=dict(reading),
        rings=[r.label for r in rings],
        dropped=sorted(dropped),
        notes=list(notes),
    )
    cases = list(cases)
    jobs = max(1, int(settings.jobs))
    if jobs == 1:
        outcomes = [evaluate(ring, payload) for ring, payload in cases]
    else:
        with configured(jobs=1), concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(lambda c: evaluate(*c), cases))
    for outcome in outcomes:
        report.instances += 1
        if outcome.skipped:
            report.skipped += 1
            report.hypothesis_misses += 1
            continue
        if outcome.hit:
            report.hypothesis_hits += 1
        else:
            report.hypothesis_misses += 1
        report.checks += outcome.checks
        for rec in outcome.failures:
            report.failures.append(rec)
            report.failure_counts[rec.conclusion] = report.failure_counts.get(rec.conclusion, 0) + 1
    report.elapsed = time.perf_counter() - start
    return report


def _pairs(rings, ns):
    for ring in rings:
        for P in _proper(ring):
            for I in _ideals(ring):
                for n in ns:
                    yield ring, (P, I, n)


def _base_params(P, I, n, **extra):
    params = {"ideals": {"P": _gens(P), "I": _gens(I)}, "n": n}
    params.update(extra)
    return params


# ---------------------------------------------------------------------------
# sweep


def sweep(ring, n_max, symmetric=False):
    """Verdict of every predicate for every ideal pair (P, I) and n <= n_max.

    Rows follow the ideal enumeration order; improper P rows carry ``None``
    verdicts.
    """
    ideals = _ideals(ring)
    cases = [(P, I, n) for P in ideals for I in ideals for n in range(1, n_max + 1)]

    def row(case):
        P, I, n = case
        out = {
            "P": _gens(P),
            "I": _gens(I),
            "n": n,
            "P_proper": P.is_proper(),
            "I_is_R": not I.is_proper(),
            "IP_zero": ideal_product(I, P).is_zero(),
            "verdicts": {},
            "witnesses": {},
        }
        for name in SWEEP_PREDICATES:
            if not P.is_proper():
                out["verdicts"][name] = None
                out["witnesses"][name] = None
                continue
            v = _sweep_verdict(name, P, I, n, symmetric)
            out["verdicts"][name] = v.holds
            out["witnesses"][name] = None if v.witness is None else list(v.witness)
        return out

    jobs = max(1, int(settings.jobs))
    if jobs == 1:
        return [row(c) for c in cases]
    with configured(jobs=1), concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(row, cases))


def _sweep_verdict(name, P, I, n, symmetric):
    from .predicates import check

    return check(name, P, I, n, symmetric)


def implication_violations(rows):
    """Rows breaking the expected implications between predicates."""
    rules = [
        ("prime", "primary"),
        ("prime", "weakly-prime"),
        ("prime", "n-absorbing"),
        ("primary", "weakly-primary"),
        ("primary", "n-absorbing-primary"),
        ("n-absorbing-primary", "n-absorbing-I-primary"),
        ("I-primary", "n-absorbing-I-primary"),
    ]
    bad = []
    for row in rows:
        v = row["verdicts"]
        if not row["P_proper"]:
            continue
        for a, b in rules:
            if v[a] and not v[b]:
                bad.append((row, f"{a} => {b}"))
        if v["n-absorbing-I-primary"] != v["n-absorbing-I-primary-colon"]:
            bad.append((row, "direct == colon"))
        if row["I_is_R"] and not (v["n-absorbing-I-primary"] and v["I-primary"]):
            bad.append((row, "I = R vacuity"))
        if row["IP_zero"] and v["weakly-n-absorbing-primary"] != v["n-absorbing-I-primary"]:
            bad.append((row, "weakly == I-relative when IP = (0)"))
    return bad


def monotonicity_failures(rows):
    """(P, I, n) rows where n-absorbing I-primary holds at n but fails at n+1."""
    index = {(tuple(r["P"]), tuple(r["I"]), r["n"]): r for r in rows if r["P_proper"]}
    out = []
    for (P, I, n), r in index.items():
        nxt = index.get((P, I, n + 1))
        if nxt and r["verdicts"]["n-absorbing-I-primary"] and not nxt["verdicts"]["n-absorbing-I-primary"]:
            out.append((P, I, n))
    return out


# ---------------------------------------------------------------------------
# theorem checks


HYPOTHESES = {
    "2.2": (),
    "2.4": ("P_absorbing_I_primary", "radical_IP_eq_I_radical_P"),
    "2.5": ("Pi_absorbing_I_primary", "radical_Pi_absorbing_I_primary"),
    "2.6": ("radical_I_radical_P_in_IP", "radical_P_n_minus_1_absorbing"),
    "2.7": ("annihilator_r_in_r",),
    "2.9": (
        "J_in_P",
        "P_absorbing_I_primary",
        "J_in_IP",
        "P_mod_J_absorbing_I_primary",
        "IP_in_J",
        "JP_in_IP",
        "J_absorbing_I_primary",
        "P_mod_J_weakly_absorbing_primary",
    ),
    "2.10": ("IP_absorbing_primary", "P_absorbing_I_primary"),
    "2.11": ("P_absorbing_I_primary", "I_tuple_exists"),
    "2.12": ("P_absorbing_I_primary", "P_not_absorbing_primary"),
}


def _check_dropped(theorem, dropped):
    dropped = frozenset(dropped or ())
    unknown = dropped - set(HYPOTHESES[theorem])
    if unknown:
        raise ValueError(f"theorem {theorem} has no hypothesis {sorted(unknown)}; choose from {HYPOTHESES[theorem]}")
    return dropped


def verify_prop_2_2(rings="default", ns=(1, 2), symmetric=False):
    """Direct and colon-ideal checkers agree on every (P, I, n)."""
    rings = resolve_rings(rings)

    def evaluate(ring, case):
        P, I, n = case
        out = _Outcome(_base_params(P, I, n), hit=True, checks=1)
        d = is_n_absorbing_I_primary(P, I, n, symmetric)
        c = is_n_absorbing_I_primary_colon(P, I, n, symmetric)
        if d.holds != c.holds:
            w = d.witness if not d.holds else c.witness
            claims = _absorbing_claims(ring, w, n, "P", "I*P", "P", "rad(P)", _omit(n, symmetric))
            out.failures.append(_failure(ring, out, "direct == colon", w, claims))
        return out

    return _run("2.2", rings, {"disjuncts": _reading_name(symmetric)}, _pairs(rings, ns), evaluate)


def _reading_name(symmetric):
    return "symmetric (omit any factor)" if symmetric else "as printed (last factor retained)"


def verify_prop_2_4(rings="default", ns=(1, 2), symmetric=False, dropped=()):
    """n-absorbing I-primary P with rad(IP) = I rad(P) has n-absorbing I-primary radical."""
    rings = resolve_rings(rings)
    dropped = _check_dropped("2.4", dropped)

    def evaluate(ring, case):
        P, I, n = case
        out = _Outcome(_base_params(P, I, n))
        rP = radical(P)
        out.hypotheses = {
            "P_absorbing_I_primary": is_n_absorbing_I_primary(P, I, n, symmetric).holds,
            "radical_IP_eq_I_radical_P": radical(ideal_product(I, P)) == ideal_product(I, rP),
        }
        if not _active(out.hypotheses, dropped):
            return out
        out.hit, out.checks = True, 1
        v = is_n_absorbing_I_primary(rP, I, n, symmetric)
        if not v.holds:
            claims = _absorbing_claims(
                ring, v.witness, n, "rad(P)", "I*rad(P)", "rad(P)", "rad(rad(P))", _omit(n, symmetric)
            )
            out.failures.append(_failure(ring, out, "rad(P) n-absorbing I-primary", v.witness, claims))
        return out

    return _run("2.4", rings, {"disjuncts": _reading_name(symmetric)}, _pairs(rings, ns), evaluate, dropped)


def verify_thm_2_5(rings="default", n_lists=((1, 1),), reading="primary", symmetric=False, dropped=()):
    """Intersections and products of n_i-absorbing I-primary ideals are (sum n_i)-absorbing I-primary.

    Primary reading: each P_i and each rad(P_i) is n_i-absorbing I-primary.
    Alternate reading: only each P_i is.
    """
    rings = resolve_rings(rings)
    dropped = _check_dropped("2.5", dropped)
    if reading not in ("primary", "alternate"):
        raise ValueError("reading must be 'primary' or 'alternate'")

    def cases():
        for ring in rings:
            for ns in n_lists:
                for Ps in itertools.product(_proper(ring), repeat=len(ns)):
                    for I in _ideals(ring):
                        yield ring, (tuple(Ps), I, tuple(ns))

    def evaluate(ring, case):
        Ps, I, ns = case
        n = sum(ns)
        names = [f"P{i + 1}" for i in range(len(Ps))]
        params = {"ideals": {name: _gens(P) for name, P in zip(names, Ps)}, "n": n, "n_i": list(ns)}
        params["ideals"]["I"] = _gens(I)
        out = _Outcome(params)
        own = all(is_n_absorbing_I_primary(P, I, k, symmetric).holds for P, k in zip(Ps, ns))
        out.hypotheses = {"Pi_absorbing_I_primary": own}
        if reading == "primary":
            out.hypotheses["radical_Pi_absorbing_I_primary"] = all(
                is_n_absorbing_I_primary(radical(P), I, k, symmetric).holds for P, k in zip(Ps, ns)
            )
        if not _active(out.hypotheses, dropped):
            return out
        out.hit = True
        H_int = functools.reduce(intersection, Ps)
        H_prod = functools.reduce(ideal_product, Ps)
        for label, H, op in (("intersection", H_int, "&"), ("product", H_prod, "*")):
            out.checks += 1
            expr = "(" + op.join(names) + ")"
            v = is_n_absorbing_I_primary(H, I, n, symmetric)
            if not v.holds:
                claims = _absorbing_claims(
                    ring, v.witness, n, expr, f"I*{expr}", expr, f"rad({expr})", _omit(n, symmetric)
                )
                out.failures.append(_failure(ring, out, f"{label} n-absorbing I-primary", v.witness, claims))
        return out

    notes = [
        "hypothesis text conflates I_i, P_i and q_i; "
        + ("read as: each P_i and rad(P_i) is n_i-absorbing I-primary" if reading == "primary" else "read as: each P_i is n_i-absorbing I-primary")
    ]
    rd = {"hypothesis": reading, "disjuncts": _reading_name(symmetric)}
    return _run("2.5", rings, rd, cases(), evaluate, dropped, notes)


def verify_prop_2_6(rings="default", ns=(1, 2), symmetric=False, dropped=()):
    """rad(I rad P) in IP and rad(P) (n-1)-absorbing imply P n-absorbing I-primary (n >= 2)."""
    rings = resolve_rings(rings)
    dropped = _check_dropped("2.6", dropped)

    def evaluate(ring, case):
        P, I, n = case
        out = _Outcome(_base_params(P, I, n))
        if n < 2:
            out.skipped = True
            return out
        rP = radical(P)
        IP = ideal_product(I, P)
        out.hypotheses = {
            "radical_I_radical_P_in_IP": radical(ideal_product(I, rP)) <= IP,
            "radical_P_n_minus_1_absorbing": is_n_absorbing(rP, n - 1).holds,
        }
        if not _active(out.hypotheses, dropped):
            return out
        out.hit, out.checks = True, 1
        v = is_n_absorbing_I_primary(P, I, n, symmetric)
        if not v.holds:
            claims = _absorbing_claims(ring, v.witness, n, "P", "I*P", "P", "rad(P)", _omit(n, symmetric))
            out.failures.append(_failure(ring, out, "P n-absorbing I-primary", v.witness, claims))
        return out

    return _run("2.6", rings, {"disjuncts": _reading_name(symmetric)}, _pairs(rings, ns), evaluate, dropped)


def verify_prop_2_7(rings="default", ns=(1, 2), ms=(2, 3), reading="primary", symmetric=False, dropped=()):
    """For nonunit r with (0 : r) in <r>: relative condition B on <r> versus <r> n-absorbing primary (A).

    Primary reading: a := r and B scans products in <r> - <r^m>.
    Alternate reading: B holds when <r> is n-absorbing I-primary for some
    ideal I with I<r> contained in I^m.
    """
    rings = resolve_rings(rings)
    dropped = _check_dropped("2.7", dropped)
    if reading not in ("primary", "alternate"):
        raise ValueError("reading must be 'primary' or 'alternate'")

    def cases():
        for ring in rings:
            for r in ring.elements:
                if ring.is_unit(r):
                    continue
                for m in ms:
                    for n in ns:
                        yield ring, (r, m, n)

    def evaluate(ring, case):
        r, m, n = case
        P = principal(ring, r)
        rm = ring.pow(r, m)
        Q = principal(ring, rm)
        params = {
            "ideals": {"P": [ring.render(r)], "Q": [ring.render(rm)]},
            "n": n,
            "m": m,
            "r": ring.render(r),
        }
        out = _Outcome(params)
        out.hypotheses = {"annihilator_r_in_r": colon(zero_ideal(ring), r) <= P}
        if not _active(out.hypotheses, dropped):
            return out
        out.hit, out.checks = True, 2
        A = is_n_absorbing_primary(P, n, symmetric)
        if reading == "primary":
            B = is_n_absorbing_primary_relative(P, Q, n, symmetric).holds
            B_wit = None
        else:
            B, B_wit = False, None
            for I in _ideals(ring):
                if ideal_product(I, P) <= power(I, m) and is_n_absorbing_I_primary(P, I, n, symmetric).holds:
                    B = True
                    break
        omit = _omit(n, symmetric)
        if B and not A.holds:
            claims = _absorbing_claims(ring, A.witness, n, "P", None, "P", "rad(P)", omit)
            out.failures.append(_failure(ring, out, "B implies <r> n-absorbing primary", A.witness, claims))
        if A.holds and not B:
            if reading == "primary":
                vb = is_n_absorbing_primary_relative(P, Q, n, symmetric)
                B_wit = vb.witness
                claims = _absorbing_claims(ring, B_wit, n, "P", "Q", "P", "rad(P)", omit)
            else:
                claims = []
            out.failures.append(_failure(ring, out, "<r> n-absorbing primary implies B", B_wit, claims))
        return out

    notes = ["statement mixes <r> and <a>; read with a := r"]
    if reading == "primary":
        notes.append("I-relative difference read as <r> - <r^m>, following the proof")
    else:
        notes.append("B read as: <r> is n-absorbing I-primary for some ideal I with I<r> in I^m")
    rd = {"hypothesis": reading, "disjuncts": _reading_name(symmetric)}
    return _run("2.7", rings, rd, cases(), evaluate, dropped, notes)


def verify_thm_2_9(rings="default", ns=(1, 2), reading="primary", symmetric=False, dropped=()):
    """Transfer of n-absorbing I-primary between R and R/J (four parts).

    Primary reading ("image"): predicates on P/J are computed natively in
    the quotient ring with the image of I, so I(P/J) = (IP + J)/J.
    Alternate reading ("pullback"): the same predicates are evaluated on R
    with the excluded ideal IP + J (or J for the weakly variant).
    """
    rings = resolve_rings(rings)
    dropped = _check_dropped("2.9", dropped)
    if reading not in ("primary", "alternate"):
        raise ValueError("reading must be 'primary' or 'alternate'")
    def cases():
        for ring in rings:
            for P in _proper(ring):
                for J in _ideals(ring):
                    if not J <= P:
                        continue
                    for I in _ideals(ring):
                        for n in ns:
                            for part in (1, 2, 3, 4):
                                yield ring, (P, J, I, n, part)

    def quotient_side(ring, P, J, I, n, weakly):
        """Verdict for P/J plus its witness lifted to R."""
        if reading == "alternate":
            excl = J if weakly else ideal_sum(ideal_product(I, P), J)
            v = is_n_absorbing_primary_relative(P, excl, n, symmetric)
            return v.holds, v.witness
        q = _quotient(ring, J)
        Pq = image(P, q)
        if weakly:
            v = is_weakly_n_absorbing_primary(Pq, n, symmetric)
        else:
            v = is_n_absorbing_I_primary(Pq, image(I, q), n, symmetric)
        lifted = None if v.witness is None else tuple(q.lift(x) for x in v.witness)
        return v.holds, lifted

    def evaluate(ring, case):
        P, J, I, n, part = case
        params = {"ideals": {"P": _gens(P), "I": _gens(I), "J": _gens(J)}, "n": n, "part": part}
        out = _Outcome(params)
        if J == P:
            out.skipped = True
            return out
        IP = ideal_product(I, P)
        om = _omit(n, symmetric)
        if part == 1:
            out.hypotheses = {"J_in_P": True, "P_absorbing_I_primary": is_n_absorbing_I_primary(P, I, n, symmetric).holds}
        elif part == 2:
            out.hypotheses = {
                "J_in_IP": J <= IP,
                "P_mod_J_absorbing_I_primary": quotient_side(ring, P, J, I, n, False)[0],
            }
        elif part == 3:
            out.hypotheses = {"IP_in_J": IP <= J, "P_absorbing_I_primary": is_n_absorbing_I_primary(P, I, n, symmetric).holds}
        else:
            out.hypotheses = {
                "JP_in_IP": ideal_product(J, P) <= IP,
                "J_absorbing_I_primary": J.is_proper() and is_n_absorbing_I_primary(J, I, n, symmetric).holds,
                "P_mod_J_weakly_absorbing_primary": quotient_side(ring, P, J, I, n, True)[0],
            }
        if not _active(out.hypotheses, dropped):
            return out
        out.hit, out.checks = True, 1
        if part in (1, 3):
            holds, w = quotient_side(ring, P, J, I, n, part == 3)
            if not holds:
                excl = "J" if part == 3 else "I*P+J"
                claims = _absorbing_claims(ring, w, n, "P", excl, "P", "rad(P)", om)
                label = "P/J weakly n-absorbing primary" if part == 3 else "P/J n-absorbing I-primary"
                out.failures.append(_failure(ring, out, f"part {part}: {label}", w, claims))
        else:
            v = is_n_absorbing_I_primary(P, I, n, symmetric)
            if not v.holds:
                claims = _absorbing_claims(ring, v.witness, n, "P", "I*P", "P", "rad(P)", om)
                out.failures.append(_failure(ring, out, f"part {part}: P n-absorbing I-primary", v.witness, claims))
        return out

    notes = [
        "I(P/J) read as (IP + J)/J" + (" (image ideals in R/J)" if reading == "primary" else " (pulled back to R)"),
        WEAKLY_DEFINITION_NOTE,
        "J = P instances are skipped",
    ]
    rd = {"hypothesis": "image" if reading == "primary" else "pullback", "disjuncts": _reading_name(symmetric)}
    return _run("2.9", rings, rd, cases(), evaluate, dropped, notes)


def verify_prop_2_10(rings="default", ns=(1, 2), symmetric=False, dropped=()):
    """IP n-absorbing primary and P n-absorbing I-primary imply P n-absorbing primary."""
    rings = resolve_rings(rings)
    dropped = _check_dropped("2.10", dropped)

    def evaluate(ring, case):
        P, I, n = case
        out = _Outcome(_base_params(P, I, n))
        IP = ideal_product(I, P)
        if not IP.is_proper():
            out.skipped = True
            return out
        out.hypotheses = {
            "IP_absorbing_primary": is_n_absorbing_primary(IP, n, symmetric).holds,
            "P_absorbing_I_primary": is_n_absorbing_I_primary(P, I, n, symmetric).holds,
        }
        if not _active(out.hypotheses, dropped):
            return out
        out.hit, out.checks = True, 1
        v = is_n_absorbing_primary(P, n, symmetric)
        if not v.holds:
            claims = _absorbing_claims(ring, v.witness, n, "P", None, "P", "rad(P)", _omit(n, symmetric))
            out.failures.append(_failure(ring, out, "P n-absorbing primary", v.witness, claims))
        return out

    return _run("2.10", rings, {"disjuncts": _reading_name(symmetric)}, _pairs(rings, ns), evaluate, dropped)


def verify_thm_2_11(rings="default", ns=(1, 2), ms=None, symmetric=False, dropped=()):
    """For an I-(n+1)-tuple (a_j), every hatted product times I^m (resp. P^m) lies in IP.

    Both exponent bases are always checked; failures are tagged with the
    base they refer to.  ``ms`` restricts m (default: 1..n).
    """
    rings = resolve_rings(rings)
    dropped = _check_dropped("2.11", dropped)

    def evaluate(ring, case):
        P, I, n = case
        out = _Outcome(_base_params(P, I, n))
        tup = find_I_tuple(P, I, n, symmetric)
        out.hypotheses = {
            "P_absorbing_I_primary": is_n_absorbing_I_primary(P, I, n, symmetric).holds,
            "I_tuple_exists": tup is not None,
        }
        if not _active(out.hypotheses, dropped) or tup is None:
            return out
        out.hit = True
        out.params = dict(out.params, tuple=ring.render_tuple(tup))
        IP = ideal_product(I, P)
        tuple_claims = _absorbing_claims(ring, tup, n, "I*P", None, "P", "rad(P)", _omit(n, symmetric))
        for m in ms or range(1, n + 1):
            if not 1 <= m <= n:
                continue
            bases = {"I": power(I, m), "P": power(P, m)}
            for S in itertools.combinations(range(n + 1), m):
                kept = [tup[j] for j in range(n + 1) if j not in S]
                h = ring.prod(kept)
                hatted = "hat{" + ",".join(str(j + 1) for j in S) + "}"
                for base, B in bases.items():
                    out.checks += 1
                    prods = ring.mul(h, np.asarray(B.members))
                    bad = [x for x, y in zip(B.members, np.atleast_1d(prods)) if int(y) not in IP]
                    if bad:
                        x = bad[0]
                        rec_params = dict(out.params, m=m, subset=[j + 1 for j in S], base=base)
                        claims = tuple_claims + [
                            {"factors": [x], "ideal": f"{base}^{m}", "member": True},
                            {"factors": [int(k) for k in kept] + [x], "ideal": "I*P", "member": False},
                        ]
                        rec = _failure(ring, dataclasses.replace(out, params=rec_params), f"{base}^m reading: {hatted} {base}^{m} in IP", list(tup) + [x], claims)
                        rec.conclusion = f"{base}^m reading"
                        rec.params = rec_params
                        out.failures.append(rec)
        return out

    notes = ["conclusion printed with I^m while the proof draws x from P; both bases are checked"]
    rd = {"exponent_base": "both (I^m and P^m)", "disjuncts": _reading_name(symmetric)}
    return _run("2.11", rings, rd, _pairs(rings, ns), evaluate, dropped, notes)


def verify_thm_2_12(rings="default", ns=(1, 2), symmetric=False, dropped=()):
    """n-absorbing I-primary but not n-absorbing primary P has P^{n+1} in IP and rad P = rad IP."""
    rings = resolve_rings(rings)
    dropped = _check_dropped("2.12", dropped)

    def evaluate(ring, case):
        P, I, n = case
        out = _Outcome(_base_params(P, I, n))
        out.hypotheses = {
            "P_absorbing_I_primary": is_n_absorbing_I_primary(P, I, n, symmetric).holds,
            "P_not_absorbing_primary": not is_n_absorbing_primary(P, n, symmetric).holds,
        }
        if not _active(out.hypotheses, dropped):
            return out
        out.hit, out.checks = True, 2
        IP = ideal_product(I, P)
        x = _first_outside(power(P, n + 1), IP)
        if x is not None:
            claims = [
                {"factors": [x], "ideal": f"P^{n + 1}", "member": True},
                {"factors": [x], "ideal": "I*P", "member": False},
            ]
            out.failures.append(_failure(ring, out, "(i) P^(n+1) in IP", [x], claims))
        rP, rIP = radical(P), radical(IP)
        x = _first_outside(rP, rIP)
        if x is not None:
            claims = [
                {"factors": [x], "ideal": "rad(P)", "member": True},
                {"factors": [x], "ideal": "rad(I*P)", "member": False},
            ]
            out.failures.append(_failure(ring, out, "(ii) rad(P) = rad(IP)", [x], claims))
        y = _first_outside(rIP, rP)
        if y is not None:
            claims = [
                {"factors": [y], "ideal": "rad(I*P)", "member": True},
                {"factors": [y], "ideal": "rad(P)", "member": False},
            ]
            out.failures.append(_failure(ring, out, "(ii) rad(P) = rad(IP)", [y], claims))
        return out

    return _run("2.12", rings, {"disjuncts": _reading_name(symmetric)}, _pairs(rings, ns), evaluate, dropped)


THEOREMS = {
    "2.2": verify_prop_2_2,
    "2.4": verify_prop_2_4,
    "2.5": verify_thm_2_5,
    "2.6": verify_prop_2_6,
    "2.7": verify_prop_2_7,
    "2.9": verify_thm_2_9,
    "2.10": verify_prop_2_10,
    "2.11": verify_thm_2_11,
    "2.12": verify_thm_2_12,
}


def counterexample_search(theorem, dropped, rings="default", **kwargs):
    """Re-run a theorem check with one hypothesis clause disabled.

    Failures are findings about the necessity of the dropped clause; each
    one carries re-checkable claims.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {sorted(THEOREMS)}")
    if theorem == "2.2":
        if dropped:
            raise ValueError("2.2 has no hypotheses to drop")
        return THEOREMS[theorem](rings, **kwargs)
    drop = () if not dropped else (dropped,) if isinstance(dropped, str) else tuple(dropped)
    return THEOREMS[theorem](rings, dropped=drop, **kwargs)


# ---------------------------------------------------------------------------
# re-validation


def evaluate_ideal_expression(text, env):
    """Evaluate an ideal expression such as ``rad(I*(P1&P2))`` or ``I*P+J``.

    Grammar: ``+`` (sum) and ``&`` (intersection) bind loosest, then ``*``
    (product), then ``^k`` (power); atoms are names from ``env``,
    ``rad(...)``, ``(0)`` and parenthesized expressions.
    """
    cur = _Cursor(text)
    ring = next(iter(env.values())).ring

    def expr():
        left = term()
        while True:
            if cur.accept("+"):
                left = ideal_sum(left, term())
            elif cur.accept("&"):
                left = intersection(left, term())
            else:
                return left

    def term():
        left = factor()
        while cur.accept("*"):
            left = ideal_product(left, factor())
        return left

    def factor():
        base = atom()
        if cur.accept("^"):
            return power(base, cur.integer())
        return base

    def atom():
        if cur.accept("rad("):
            inner = expr()
            cur.expect(")")
            return radical(inner)
        if cur.accept("(0)"):
            return zero_ideal(ring)
        if cur.accept("("):
            inner = expr()
            cur.expect(")")
            return inner
        cur.skip()
        start = cur.pos
        while cur.pos < len(text) and (text[cur.pos].isalnum() or text[cur.pos] == "_"):
            cur.pos += 1
        name = text[start:cur.pos]
        if name == "R":
            return unit_ideal(ring)
        if name not in env:
            cur.pos = start
            cur.fail("an ideal name")
        return env[name]

    value = expr()
    if not cur.at_end():
        cur.fail("end of expression")
    return value


def revalidate(record):
    """Recompute every membership claim of ``record`` from its ring spec and generators.

    Uses only ring arithmetic and ideal algebra; returns True when every
    claim reproduces.
    """
    ring = build_ring(parse_ring_spec(record.ring))
    env = {
        name: ideal_from_generators(ring, parse_ideal_literal(ring, ", ".join(gens)))
        for name, gens in record.params["ideals"].items()
    }
    if not record.claims:
        return False
    for claim in record.claims:
        x = ring.one
        for f in claim["factors"]:
            x = ring.mul(x, int(f))
        J = evaluate_ideal_expression(claim["ideal"], env)
        if (x in J) != claim["member"]:
            return False
    return True
