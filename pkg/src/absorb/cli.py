"""Command-line front end.

Usage::

    absorb ring     --ring "Z/4 x Z/9"
    absorb ideals   --ring Z/12
    absorb check    --ring Z/12 --ideal 6 --I 2 --n 1 --predicate n-absorbing-I-primary --assert
    absorb sweep    --ring Z/12 --n 2 --format csv
    absorb verify   --theorem 2.12 --rings default --n 2
    absorb example21 --n 2 --deg-bound 3

Reports go to standard output (canonical JSON by default), diagnostics to
standard error.  Exit codes: 0 completed, 1 ``--assert`` failed, 2 input
error, 3 size or cost cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import verify as V
from .config import configured
from .errors import (
    AbsorbError,
    CostCapExceeded,
    SizeCapExceeded,
    UnsupportedFormatForPayload,
)
from .ideal import enumerate_ideals, ideal_from_generators, image, radical
from .monomial import check_example_2_1
from .parsing import parse_ideal_literal, parse_ring_spec
from .predicates import PREDICATES, check
from .ring import axiom_violations, build_ring, quotient_ring

__all__ = ["SCHEMA_VERSION", "REPORT_SCHEMA", "main", "run", "emit", "build_parser"]

SCHEMA_VERSION = 1

EXIT_OK, EXIT_ASSERT, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

_WITNESS = {
    "oneOf": [
        {"type": "null"},
        {
            "type": "object",
            "required": ["tuple", "text", "clauses"],
            "properties": {
                "tuple": {"type": "array", "items": {"type": "integer"}},
                "text": {"type": "array", "items": {"type": "string"}},
                "clauses": {"type": "array", "items": {"type": "string"}},
            },
        },
    ]
}

_RECORD = {
    "type": "object",
    "required": [
        "ring",
        "params",
        "hypotheses",
        "conclusion",
        "conclusion_holds",
        "witness",
        "witness_text",
        "claims",
    ],
    "properties": {
        "ring": {"type": "string"},
        "params": {"type": "object", "required": ["ideals"]},
        "hypotheses": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "conclusion": {"type": "string"},
        "conclusion_holds": {"type": "boolean"},
        "claims": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["factors", "ideal", "member"],
                "properties": {
                    "factors": {"type": "array", "items": {"type": "integer"}},
                    "ideal": {"type": "string"},
                    "member": {"type": "boolean"},
                },
            },
        },
    },
}

_THEOREM_REPORT = {
    "type": "object",
    "required": ["theorem", "reading", "rings", "instances", "hypothesis_hits", "failures", "skipped"],
    "properties": {
        "theorem": {"type": "string"},
        "instances": {"type": "integer", "minimum": 0},
        "hypothesis_hits": {"type": "integer", "minimum": 0},
        "hypothesis_misses": {"type": "integer", "minimum": 0},
        "skipped": {"type": "integer", "minimum": 0},
        "failures": {"type": "array", "items": _RECORD},
    },
}

#: JSON schema every report validates against.
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "command", "ring", "params", "reading", "holds", "witness", "report", "timing"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"enum": ["ring", "ideals", "check", "sweep", "verify", "example21"]},
        "ring": {"type": ["string", "null"]},
        "params": {"type": "object"},
        "reading": {"type": "object"},
        "holds": {"type": ["boolean", "null"]},
        "witness": _WITNESS,
        "report": {"type": "object"},
        "timing": {"type": "object", "properties": {"elapsed_seconds": {"type": "number"}}},
    },
    "allOf": [
        {
            "if": {"properties": {"command": {"const": "verify"}}},
            "then": {
                "properties": {
                    "report": {
                        "type": "object",
                        "required": ["theorems"],
                        "properties": {"theorems": {"type": "array", "items": _THEOREM_REPORT}},
                    }
                }
            },
        },
        {
            "if": {"properties": {"command": {"const": "sweep"}}},
            "then": {"properties": {"report": {"type": "object", "required": ["rows"]}}},
        },
    ],
}


# ---------------------------------------------------------------------------
# argument parsing


def _csv_ints(text):
    return tuple(int(t) for t in text.split(",") if t.strip())


def build_parser():
    parser = argparse.ArgumentParser(prog="absorb", description="Exhaustive checks of absorbing-type ideals in finite rings.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker threads (output is identical for any value)")
    common.add_argument("--fast", action="store_true", help="stop at the first violation found (witness may not be minimal)")
    common.add_argument("--force", action="store_true", help="ignore the tuple cost cap")
    common.add_argument("--symmetric-disjuncts", action="store_true", help="allow omitting the last factor too")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring", parents=[common], help="describe a ring and check its axioms")
    p.add_argument("--ring", required=True)

    p = sub.add_parser("ideals", parents=[common], help="list every ideal of a ring")
    p.add_argument("--ring", required=True)

    p = sub.add_parser("check", parents=[common], help="evaluate one predicate")
    p.add_argument("--ring", required=True)
    p.add_argument("--ideal", required=True, help="generators of P, e.g. '4' or 'x, 2'")
    p.add_argument("--I", dest="I", default=None, help="generators of I (default: the zero ideal)")
    p.add_argument("--J", dest="J", default=None, help="work in R/J, with P and I replaced by their images")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--predicate", required=True, choices=sorted(PREDICATES) + ["I-tuple"])
    p.add_argument("--assert", dest="assert_", action="store_true", help="exit 1 when the predicate fails")

    p = sub.add_parser("sweep", parents=[common], help="all predicates over all ideal pairs")
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int, default=2, help="largest n")

    p = sub.add_parser("verify", parents=[common], help="check a structural result over a ring battery")
    p.add_argument("--theorem", required=True, choices=sorted(V.THEOREMS, key=lambda t: tuple(map(int, t.split(".")))) + ["all"])
    p.add_argument("--rings", default="default", help="'default' or a comma-separated list of ring specs")
    p.add_argument("--n", type=int, default=2, help="largest n (checks n = 1..N)")
    p.add_argument("--m", type=_csv_ints, default=None, help="exponents m, comma-separated")
    p.add_argument("--k", type=int, default=2, help="number of ideals intersected/multiplied")
    p.add_argument("--reading", choices=("primary", "alternate"), default="primary")
    p.add_argument("--drop", default=None, help="hypothesis clause to disable (counterexample search)")

    p = sub.add_parser("example21", parents=[common], help="monomial scan of the polynomial-ring example")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--deg-bound", type=int, default=3)
    return parser


# ---------------------------------------------------------------------------
# commands


def _report(command, ring=None, params=None, reading=None, holds=None, witness=None, report=None):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "ring": ring,
        "params": params or {},
        "reading": reading or {},
        "holds": holds,
        "witness": witness,
        "report": report or {},
        "timing": {},
    }


def _disjuncts(args):
    return {"disjuncts": V._reading_name(args.symmetric_disjuncts)}


def _ring(text):
    return build_ring(parse_ring_spec(text))


def _cmd_ring(args):
    ring = _ring(args.ring)
    ax = axiom_violations(ring)
    payload = {
        "label": ring.label,
        "size": ring.size,
        "units": len(ring.units()),
        "axiom_violations": ax,
        "tabulated": ring.tabulated,
    }
    return _report("ring", ring.label, {}, {}, not any(ax.values()), None, payload), EXIT_OK


def _cmd_ideals(args):
    ring = _ring(args.ring)
    rows = [
        {
            "generators": P.text(),
            "size": len(P),
            "proper": P.is_proper(),
            "radical": radical(P).text(),
        }
        for P in enumerate_ideals(ring)
    ]
    return _report("ideals", ring.label, {}, {}, None, None, {"count": len(rows), "ideals": rows}), EXIT_OK


def _cmd_check(args):
    ring = _ring(args.ring)
    P = ideal_from_generators(ring, parse_ideal_literal(ring, args.ideal))
    I = ideal_from_generators(ring, parse_ideal_literal(ring, args.I if args.I is not None else "0"))
    params = {"P": P.text(), "I": I.text(), "n": args.n, "predicate": args.predicate}
    if args.J is not None:
        J = ideal_from_generators(ring, parse_ideal_literal(ring, args.J))
        params["J"] = J.text()
        ring = quotient_ring(ring, J)[0]
        P, I = image(P, ring), image(I, ring)
    v = check(args.predicate, P, I, args.n, args.symmetric_disjuncts)
    d = v.to_dict(ring)
    report = {"predicate": d["predicate"], "notes": d["notes"]}
    code = EXIT_ASSERT if args.assert_ and not v.holds else EXIT_OK
    return _report("check", ring.label, params, _disjuncts(args), v.holds, d["witness"], report), code


def _cmd_sweep(args):
    ring = _ring(args.ring)
    rows = V.sweep(ring, args.n, args.symmetric_disjuncts)
    bad = V.implication_violations(rows)
    payload = {
        "predicates": list(V.SWEEP_PREDICATES),
        "rows": rows,
        "implication_violations": [{"P": r["P"], "I": r["I"], "n": r["n"], "rule": rule} for r, rule in bad],
        "monotonicity_failures": [list(map(list, t[:2])) + [t[2]] for t in V.monotonicity_failures(rows)],
    }
    return _report("sweep", ring.label, {"n": args.n}, _disjuncts(args), not bad, None, payload), EXIT_OK


def _n_lists(k, n):
    import itertools

    lists = [c for c in itertools.product(range(1, n + 1), repeat=k) if sum(c) <= n]
    return tuple(lists) or ((1,) * k,)


def _cmd_verify(args):
    rings = V.resolve_rings(args.rings if args.rings == "default" else [r for r in args.rings.split(",") if r.strip()])
    ns = tuple(range(1, args.n + 1))
    theorems = list(V.THEOREMS) if args.theorem == "all" else [args.theorem]
    reports = []
    for th in theorems:
        kw = {"ns": ns, "symmetric": args.symmetric_disjuncts}
        if th == "2.5":
            kw = {"n_lists": _n_lists(args.k, args.n), "symmetric": args.symmetric_disjuncts}
        if th in ("2.5", "2.7", "2.9"):
            kw["reading"] = args.reading
        if th in ("2.7", "2.11") and args.m:
            kw["ms"] = args.m
        if args.drop:
            if args.theorem == "all":
                raise ValueError("--drop needs a single --theorem")
            reports.append(V.counterexample_search(th, args.drop, rings, **kw))
        else:
            reports.append(V.THEOREMS[th](rings, **kw))
    params = {"n": args.n, "theorem": args.theorem, "k": args.k, "m": list(args.m) if args.m else None, "drop": args.drop}
    reading = {"hypothesis": args.reading, **_disjuncts(args)}
    payload = {"theorems": [r.to_dict() for r in reports]}
    holds = all(r.ok for r in reports)
    return _report("verify", None, params, reading, holds, None, payload), EXIT_OK


def _cmd_example21(args):
    res = check_example_2_1(args.n, args.deg_bound)
    d = res.to_dict()
    holds = res.i_primary_witness is None
    return _report("example21", f"k[t1..t{d['variables']}]", {"n": args.n, "deg_bound": args.deg_bound}, {}, holds, None, d), EXIT_OK


_COMMANDS = {
    "ring": _cmd_ring,
    "ideals": _cmd_ideals,
    "check": _cmd_check,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "example21": _cmd_example21,
}


def run(args):
    """Execute parsed ``args``; returns ``(report, exit_code)``."""
    start = time.perf_counter()
    with configured(jobs=max(1, args.jobs), fast=args.fast, force=args.force):
        report, code = _COMMANDS[args.command](args)
    report["timing"] = {"elapsed_seconds": round(time.perf_counter() - start, 6)}
    return report, code


# ---------------------------------------------------------------------------
# output


def emit(report, fmt="json"):
    """Serialize ``report``: canonical JSON, CSV (sweep only) or text."""
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        if report["command"] != "sweep":
            raise UnsupportedFormatForPayload(f"CSV output is only available for sweep, not {report['command']}")
        return _sweep_csv(report)
    if fmt == "text":
        return _text(report)
    raise UnsupportedFormatForPayload(fmt)


def _cell(v):
    return "" if v is None else str(v).lower()


def _sweep_csv(report):
    names = report["report"]["predicates"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["P", "I", "n", "P_proper"] + names)
    for row in report["report"]["rows"]:
        w.writerow([" ".join(row["P"]), " ".join(row["I"]), row["n"], _cell(row["P_proper"])] + [_cell(row["verdicts"][k]) for k in names])
    return buf.getvalue()


def _text(report):
    cmd, body = report["command"], report["report"]
    lines = [f"{cmd}: {report['ring'] or ''}".rstrip()]
    if cmd == "check":
        lines.append(f"{report['params']['predicate']}: {'holds' if report['holds'] else 'fails'}")
        if report["witness"]:
            lines.append("witness (" + ", ".join(report["witness"]["text"]) + ")")
            lines.extend("  " + c for c in report["witness"]["clauses"])
    elif cmd == "ideals":
        for P in body["ideals"]:
            lines.append(f"  ({', '.join(P['generators'])})  size {P['size']}  rad ({', '.join(P['radical'])})")
    elif cmd == "ring":
        lines.append(f"size {body['size']}, {body['units']} units, axioms {'ok' if report['holds'] else body['axiom_violations']}")
    elif cmd == "sweep":
        lines.append(f"{len(body['rows'])} rows, {len(body['implication_violations'])} implication violations")
    elif cmd == "verify":
        for t in body["theorems"]:
            lines.append(
                f"{t['theorem']}: {t['instances']} instances, {t['hypothesis_hits']} hits, "
                f"{t['skipped']} skipped, {len(t['failures'])} failures {t['failure_counts'] or ''}".rstrip()
            )
    elif cmd == "example21":
        lines.append(f"P = <{', '.join(body['P'])}>, I = <{', '.join(body['I'])}>")
        lines.append(f"not n-absorbing witness: {body['not_n_absorbing_witness']}")
        lines.append(f"n-absorbing I-primary: {body['n_absorbing_I_primary']}")
        lines.extend("flag: " + f for f in body["flags"])
    lines.append(f"({report['timing'].get('elapsed_seconds', 0):.3f}s)")
    return "\n".join(lines) + "\n"


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = run(args)
        out = emit(report, args.format)
    except (SizeCapExceeded, CostCapExceeded) as exc:
        print(f"absorb: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (AbsorbError, ValueError) as exc:
        print(f"absorb: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
