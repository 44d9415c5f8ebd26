"""Command-line front end: constructions, splittings and verifier suites.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 unsupported
ring, 4 budget exceeded, 5 precondition violated.
"""

import argparse
import json
import sys
import time
from itertools import product

from . import enumeration as enum_mod
from .chain import new_maximal_ideal
from .errors import (
    BoundExceeded,
    PreconditionViolated,
    SpecParseError,
    UnsupportedRing,
)
from .parsing import (
    canonical_spec,
    element_to_json,
    format_poly,
    parse_element,
    parse_poly,
    parse_ring,
)
from .quotient import splitting_field
from .rings import IntegerRing, ModularRing, PolynomialRing, PrimeField, integers
from .spectrum import jacobson_escape, krull_witness
from .theorems import (
    matrix_not_surjective,
    poly_inverse,
    poly_nilpotency,
    verify_invertible_coefficients,
    verify_nilpotent_coefficients,
)
from .witness import AUDIT


def _build_parser():
    parser = argparse.ArgumentParser(prog="krullkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="JSON output (default)")
        p.add_argument("--plain", action="store_true", help="plain-text rendering")
        p.add_argument("--no-timing", action="store_true", help="omit wall time")

    p = sub.add_parser("maximal", help="run the maximal-ideal construction")
    p.add_argument("--ring", required=True)
    p.add_argument("--enum", default="canonical")
    p.add_argument("-n", "--count", type=int, required=True)
    p.add_argument("--base", default="", help="comma-separated base generators")
    common(p)

    p = sub.add_parser("split", help="splitting field of a monic polynomial")
    p.add_argument("--field", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--max-deg", type=int, default=4)
    p.add_argument("--max-char", type=int, default=7)
    common(p)

    p = sub.add_parser("prime", help="prime ideal avoiding a non-nilpotent x")
    p.add_argument("--ring", required=True)
    p.add_argument("-x", required=True)
    common(p)

    p = sub.add_parser("jacobson", help="maximal ideal witnessing Jacobson apartness")
    p.add_argument("--ring", required=True)
    p.add_argument("-x", required=True)
    p.add_argument("-y", required=True)
    common(p)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=["test-cases", "matrix", "oracle-equivalence"],
    )
    p.add_argument("--ring", default="")
    p.add_argument("--max-deg", type=int, default=3)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--polys",
        default="",
        help="file of polynomial literals, one per line ('-' for stdin)",
    )
    common(p)

    return parser


# -- command bodies ----------------------------------------------------------

def _cmd_maximal(args):
    ring = parse_ring(args.ring)
    enum = enum_mod.from_spec(ring, args.enum, lambda t: parse_element(ring, t))
    base = [
        parse_element(ring, t) for t in args.base.split(",") if t.strip()
    ]
    M = new_maximal_ideal(ring, enum, base)
    rows = []
    for i in range(args.count):
        x = enum.at(i)
        if x is None:
            rows.append({"index": i, "defined": False})
            continue
        admitted = M.contains_index(i)
        d = M.dichotomy(x)
        rows.append(
            {
                "index": i,
                "defined": True,
                "element": element_to_json(x),
                "admitted": admitted,
                "in_ideal": admitted,
                "dichotomy": d.to_json(x, element_to_json),
            }
        )
    return {
        "inputs": {
            "ring": canonical_spec(ring),
            "enum": enum.name,
            "count": args.count,
            "base": [element_to_json(b) for b in base],
        },
        "results": {
            "stages": rows,
            "generators": [element_to_json(g) for g in M.generators(args.count)],
        },
        "oracle_calls": M.oracle_calls,
    }


def _tower_json(tower):
    out = []
    for lvl in tower.levels:
        out.append(
            {
                "modulus": format_poly(
                    lvl.modulus,
                    coef_fmt=lambda c: str(element_to_json(c)),
                ),
                "degree": len(lvl.modulus) - 1,
            }
        )
    return out


def _cmd_split(args):
    field = parse_ring(args.field)
    if not isinstance(field, PrimeField):
        raise UnsupportedRing("split expects a prime field such as GF(5)")
    f = parse_poly(args.poly, field)
    tower, roots = splitting_field(
        field, f, max_degree=args.max_deg, max_char=args.max_char
    )
    return {
        "inputs": {"field": canonical_spec(field), "poly": format_poly(f)},
        "results": {
            "tower": _tower_json(tower),
            "total_degree": tower.degree,
            "top_order": tower.top.order,
            "roots": [element_to_json(r) for r in roots],
            "reconstruction_ok": True,
        },
    }


def _cmd_prime(args):
    ring = parse_ring(args.ring)
    x = parse_element(ring, args.x)
    P = krull_witness(ring, x)
    if isinstance(ring, ModularRing):
        samples = list(ring.elements())
    else:
        samples = [ring.enumerate(i) for i in range(20)]
    return {
        "inputs": {"ring": canonical_spec(ring), "x": element_to_json(x)},
        "results": {
            "ring": canonical_spec(ring),
            "inverted": element_to_json(x),
            "member_samples": [
                [element_to_json(a), P.contains(a)] for a in samples
            ],
            "avoided": element_to_json(x),
            "proper": not P.contains(ring.one),
        },
    }


def _cmd_jacobson(args):
    ring = parse_ring(args.ring)
    x = parse_element(ring, args.x)
    y = parse_element(ring, args.y)
    M = jacobson_escape(ring, x, y)
    horizon = max(M.enumeration.index_of(x) + 1, 12)
    gens = M.generators(horizon)
    d = M.dichotomy(x)
    return {
        "inputs": {
            "ring": canonical_spec(ring),
            "x": element_to_json(x),
            "y": element_to_json(y),
        },
        "results": {
            "base": [element_to_json(b) for b in M.base],
            "generators": [element_to_json(g) for g in gens],
            "principal_generator": element_to_json(M.principal_generator()),
            "x_avoided": not M.contains(x),
            "dichotomy": d.to_json(x, element_to_json),
        },
        "oracle_calls": M.oracle_calls,
    }


# -- verify suites -----------------------------------------------------------

def _suite_test_cases(args):
    ring = parse_ring(args.ring or "Z/4")
    if not isinstance(ring, ModularRing):
        raise UnsupportedRing("test-cases suite runs over Z/n")
    n = ring.n
    cases = 0
    failures = []

    def check_nilpotent(f):
        nonlocal cases
        cases += 1
        try:
            exps, _ = verify_nilpotent_coefficients(ring, f)
        except (PreconditionViolated, AssertionError) as e:
            failures.append({"poly": list(f), "error": str(e)})
            return
        for d, k in enumerate(exps):
            c = f[d] if d < len(f) else 0
            if pow(c, k, n) != 0 or (k > 1 and pow(c, k - 1, n) == 0):
                failures.append({"poly": list(f), "bad_exponent": [d, k]})

    def check_invertible(f):
        nonlocal cases
        cases += 1
        try:
            exps, inverse = verify_invertible_coefficients(ring, f)
        except (PreconditionViolated, AssertionError) as e:
            failures.append({"poly": list(f), "error": str(e)})
            return
        for d, k in exps.items():
            if pow(f[d], k, n) != 0:
                failures.append({"poly": list(f), "bad_exponent": [d, k]})

    if args.polys:
        stream = sys.stdin if args.polys == "-" else open(args.polys)
        with stream:
            for line in stream:
                line = line.strip()
                if not line:
                    continue
                f = parse_poly(line, ModularRing(n) if n > 1 else ring)
                f = tuple(c % n for c in f)
                if poly_nilpotency(ring, f) is not None:
                    check_nilpotent(f)
                elif poly_inverse(ring, f) is not None:
                    check_invertible(f)
                else:
                    failures.append({"poly": list(f), "error": "neither case applies"})
    else:
        nil = sorted(x for x in range(n) if ring.is_nilpotent(x) is not None)
        units = sorted(x for x in range(n) if ring.is_unit(x) is not None)
        for coeffs in product(nil, repeat=args.max_deg + 1):
            check_nilpotent(tuple(coeffs))
        inv_deg = min(args.max_deg, 2)
        for c0 in units:
            for rest in product(nil, repeat=inv_deg):
                check_invertible((c0,) + rest)
    return cases, failures


def _suite_matrix(args):
    ring = parse_ring(args.ring or "Z/4")
    if not isinstance(ring, ModularRing):
        raise UnsupportedRing("matrix suite runs over Z/n")
    n = ring.n
    cases = 0
    failures = []
    for rows_n, cols_m in ((2, 1), (3, 2)):
        for entries in product(range(n), repeat=rows_n * cols_m):
            cases += 1
            rows = [
                list(entries[r * cols_m : (r + 1) * cols_m]) for r in range(rows_n)
            ]
            try:
                matrix_not_surjective(ring, rows)
            except AssertionError as e:
                failures.append({"matrix": rows, "error": str(e)})
    return cases, failures


def _suite_oracle_equivalence(args):
    if args.ring:
        rings = [parse_ring(args.ring)]
    else:
        rings = [integers(), ModularRing(12), PolynomialRing(PrimeField(3))]
    cases = 0
    failures = []
    for ring in rings:
        M = new_maximal_ideal(ring)
        for i in range(args.max_n + 1):
            if M.enumeration.at(i) is None:
                continue
            cases += 1
            fast = M.contains_index(i)
            slow = M.contains_index_via_sequences(i)
            indicator = bool(M.indicator(i + 1, i))
            if not fast == slow == indicator:
                failures.append(
                    {
                        "ring": canonical_spec(ring),
                        "index": i,
                        "verdicts": [fast, slow, indicator],
                    }
                )
    return cases, failures


def _cmd_verify(args):
    suite = {
        "test-cases": _suite_test_cases,
        "matrix": _suite_matrix,
        "oracle-equivalence": _suite_oracle_equivalence,
    }[args.suite]
    cases, failures = suite(args)
    return {
        "inputs": {
            "suite": args.suite,
            "ring": args.ring or None,
            "max_deg": args.max_deg,
            "seed": args.seed,
        },
        "results": {
            "cases": cases,
            "failures": failures,
            "passed": not failures,
        },
    }


def _render_plain(report, out):
    def walk(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}{k}." if prefix else f"{k}.", v) if isinstance(
                    v, (dict, list)
                ) else out.write(f"{prefix}{k} = {v}\n")
        elif isinstance(value, list):
            for i, v in enumerate(value):
                if isinstance(v, (dict, list)):
                    walk(f"{prefix}{i}.", v)
                else:
                    out.write(f"{prefix}{i} = {v}\n")

    walk("", report)


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    AUDIT.reset()
    start = time.perf_counter()
    try:
        if args.command == "maximal":
            body = _cmd_maximal(args)
        elif args.command == "split":
            body = _cmd_split(args)
        elif args.command == "prime":
            body = _cmd_prime(args)
        elif args.command == "jacobson":
            body = _cmd_jacobson(args)
        else:
            body = _cmd_verify(args)
    except SpecParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except UnsupportedRing as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except BoundExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except PreconditionViolated as e:
        print(f"error: {e}", file=sys.stderr)
        return 5
    report = {"command": args.command}
    report.update(body)
    report["witnesses"] = {"created": AUDIT.created, "verified": AUDIT.verified}
    if not args.no_timing:
        report["wall_time_ms"] = round((time.perf_counter() - start) * 1000, 3)
    if args.plain and not args.json:
        _render_plain(report, sys.stdout)
    else:
        sys.stdout.write(json.dumps(report) + "\n")
    if args.command == "verify" and not report["results"]["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
