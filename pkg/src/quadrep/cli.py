"""Command-line front end.

    python -m quadrep reproduce ex3.4
    python -m quadrep points --family Sec5Case4 --params '{"b": "1", "p0": "2", "q0": "0", "v": "-16"}' \\
        --base '["1", "4"]' --generator '["-3/4", "-1/8"]' --curve '["-1", "-4", "-2"]' --count 5 --json
    python -m quadrep identities --only I7 --trials 20
    python -m quadrep localsolve --coeffs '["18", "0", "0", "0", "-54"]' --prime 2
    python -m quadrep search-integer-points --range 100000
    python -m quadrep cz --count 4

Exit status: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction

from .constructions import build
from .elliptic import WCurve, WPoint
from .exact_arith import DomainError, UniPoly, q_from_str, q_to_str

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def to_plain(obj):
    """JSON-ready structure; rationals become "num/den" strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return q_to_str(obj)
    if hasattr(obj, "to_json"):
        return to_plain(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_plain(v) for v in items]
    if dataclasses.is_dataclass(obj):
        return to_plain(dataclasses.asdict(obj))
    return str(obj)


def _dump(obj) -> str:
    return json.dumps(to_plain(obj), sort_keys=True)


def _loads(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON for {what}: {exc}") from None


def _rational(v, what: str) -> Fraction:
    try:
        if isinstance(v, str):
            return q_from_str(v)
        if isinstance(v, int) and not isinstance(v, bool):
            return Fraction(v)
    except (ValueError, ZeroDivisionError):
        pass
    raise UsageError(f"{what}: expected a rational written as \"num/den\", got {v!r}")


def _pair(text: str, what: str) -> tuple:
    v = _loads(text, what)
    if isinstance(v, dict):
        v = [v.get("x"), v.get("y")]
    if not isinstance(v, list) or len(v) not in (2, 3):
        raise UsageError(f"{what}: expected a list of two (or three) rationals")
    return tuple(_rational(x, what) for x in v)


# ------------------------------------------------------------------ commands

def _fmt(x) -> str:
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return q_to_str(x)
    if isinstance(x, tuple):
        return "(" + ", ".join(_fmt(v) for v in x) + ")"
    return str(x)


def _poly_str(g: UniPoly) -> str:
    terms = []
    for k, c in enumerate(g.coeffs):
        if c:
            terms.append(q_to_str(c) + ("" if k == 0 else "*U" if k == 1 else f"*U^{k}"))
    return " + ".join(terms) or "0"


def _print_table(rows, headers):
    cols = [[h] + [_fmt(r[i]) for r in rows] for i, h in enumerate(headers)]
    widths = [max(len(c) for c in col) for col in cols]
    for k in range(len(rows) + 1):
        print("  ".join(cols[i][k].rjust(widths[i]) for i in range(len(headers))))


def cmd_reproduce(args) -> int:
    from .fixtures import FIXTURES, run_fixture
    if args.id not in FIXTURES:
        raise UsageError(f"unknown fixture {args.id!r}; choose from {', '.join(FIXTURES)}")
    kw = {}
    if args.count is not None:
        kw["count"] = args.count
    if args.range is not None:
        kw["range"] = args.range
    res = run_fixture(args.id, **kw)
    if args.json:
        print(_dump({"id": res.id, "title": res.title, "ok": res.ok,
                     "checks": [{"name": n, "ok": ok} for n, ok in res.checks],
                     "notes": res.notes, "data": res.data, "points": res.points}))
    else:
        print(f"[{res.id}] {res.title}")
        for name, ok in res.checks:
            print(f"  {'PASS' if ok else 'FAIL'}  {name}")
        for note in res.notes:
            print(f"  note: {note}")
        if res.points:
            print()
            _print_table([(P.p, P.q, P.coord) for P in res.points],
                         ("p", "q", res.points[0].projection))
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_points(args) -> int:
    from .pointgen import aux_model, generate
    params = _loads(args.params, "--params")
    if not isinstance(params, dict):
        raise UsageError("--params must be a JSON object")
    params = {k: _rational(v, f"--params.{k}") for k, v in params.items()}
    con = build(args.family, params)
    base = _pair(args.base, "--base") if args.base else None
    am = aux_model(con, base)
    curve = None
    if args.curve:
        c = _pair(args.curve, "--curve")
        if len(c) != 3:
            raise UsageError("--curve expects [a2, a4, a6]")
        curve = WCurve(*c)
    if args.generator:
        g = _pair(args.generator, "--generator")
        gen = WPoint(g[0], g[1])
    else:
        gen = None
    try:
        stream = generate(con, gen, args.count, curve=curve, am=am)
    except DomainError as exc:
        # bad parameters surface earlier; here the generator failed certification
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    for P in stream.emitted:
        if args.json:
            print(_dump(P))
        else:
            print(" ".join(_fmt(x) for x in (P.p, P.q, P.coord)))
    ok = len(stream.distinct_projections) >= args.count and all(P.verified for P in stream.emitted)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_identities(args) -> int:
    from .identities import CATALOG, verify_all
    only = None
    if args.only:
        only = [s.strip() for s in args.only.split(",") if s.strip()]
        known = {r.id for r in CATALOG}
        bad = [s for s in only if s not in known]
        if bad:
            raise UsageError(f"unknown identity ids: {bad}")
    reports = verify_all(args.trials, args.seed, only)
    if args.json:
        print(_dump([r.to_json() for r in reports]))
    else:
        for r in reports:
            extra = f" delta {q_to_str(r.delta)}" if r.delta is not None else ""
            print(f"{r.id:>4}  {r.status:<16} {r.passed}/{r.trials}{extra}")
            for ce in r.counterexamples[:3]:
                print(f"      counterexample {ce['tuple']}")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


LOCAL_FIXTURES = {
    "rem3.1": ([18, 0, 0, 0, -54], [2]),
    "ex3.5": (None, [17]),
    "ex2.5": ([18, 0, 0, 0, -2], [2, 3, 5, 7]),
}


def cmd_localsolve(args) -> int:
    from .localsolve import bad_primes, locally_solvable, really_solvable
    if args.fixture:
        if args.fixture not in LOCAL_FIXTURES:
            raise UsageError(f"unknown fixture {args.fixture!r}")
        coeffs, primes = LOCAL_FIXTURES[args.fixture]
        if coeffs is None:
            g = UniPoly([10001, -4046, 71009]) * UniPoly([-239735, 28322, 2388313]) * 102
        else:
            g = UniPoly(coeffs)
    elif args.coeffs:
        raw = _loads(args.coeffs, "--coeffs")
        if not isinstance(raw, list) or not raw:
            raise UsageError("--coeffs must be a nonempty JSON array, constant term first")
        g = UniPoly([_rational(c, "--coeffs") for c in raw])
        primes = None
    else:
        raise UsageError("give --coeffs or --fixture")
    if g.is_zero():
        raise UsageError("zero polynomial")
    if args.prime is not None:
        primes = [args.prime]
    elif primes is None:
        primes = bad_primes(g)
    verdicts = [locally_solvable(g, p, args.depth) for p in primes]
    if args.prime is None:
        verdicts.append(really_solvable(g))
    if args.json:
        print(_dump([v.to_json() for v in verdicts]))
    else:
        print(f"w^2 = {_poly_str(g)}")
        for v in verdicts:
            state = "solvable" if v.solvable else "unsolvable"
            print(f"  {str(v.place):>6}: {state}" + (f"  witness {v.witness}" if v.witness else ""))
    return EXIT_OK


def cmd_search(args) -> int:
    from .pointgen import search_integer_points_u, square_classes_of_2u
    pts = search_integer_points_u(args.range)
    classes = square_classes_of_2u(pts)
    if args.json:
        print(_dump({"points": pts, "squarefree_part_of_2u": classes}))
    else:
        _print_table([(u, v, classes.get(u, "-")) for u, v in pts], ("u", "v", "sqfree(2u)"))
    return EXIT_OK


def cmd_cz(args) -> int:
    from .fixtures import cz
    res = cz(count=args.count)
    if args.json:
        print(_dump({"ok": res.ok, "checks": [{"name": n, "ok": ok} for n, ok in res.checks],
                     "data": res.data}))
    else:
        for name, ok in res.checks:
            print(f"{'PASS' if ok else 'FAIL'}  {name}")
        rows = [(r["k"], r.get("X"), r.get("Y"), r.get("bits"), r.get("representation") or "not found")
                for r in res.data["rows"]]
        _print_table(rows, ("k", "X", "Y", "bits", "Y/15 = P^2 - 5Q^2"))
        print(f"sextic degree {res.data['sextic_degree']}, discriminant {q_to_str(res.data['sextic_discriminant'])}")
    return EXIT_OK if res.ok else EXIT_FAIL


def parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quadrep", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, *extra):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--seed", type=int, default=0)
        for e in extra:
            e(p)
        return p

    p = common(sub.add_parser("reproduce", help="run a worked example end to end"))
    p.add_argument("id")
    p.add_argument("--count", type=int)
    p.add_argument("--range", type=int)
    p.set_defaults(func=cmd_reproduce)

    p = common(sub.add_parser("points", help="stream verified points on a built surface"))
    p.add_argument("--family", required=True)
    p.add_argument("--params", required=True)
    p.add_argument("--generator")
    p.add_argument("--curve", help="[a2, a4, a6] of the curve carrying the generator")
    p.add_argument("--base", help="point (u, w) on the reduced auxiliary curve")
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(func=cmd_points)

    p = common(sub.add_parser("identities", help="random-specialization checks of the identity catalog"))
    p.add_argument("--only")
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_identities)

    p = common(sub.add_parser("localsolve", help="local solvability of w^2 = g(U)"))
    p.add_argument("--coeffs")
    p.add_argument("--fixture", choices=sorted(LOCAL_FIXTURES))
    p.add_argument("--prime", type=int)
    p.add_argument("--depth", type=int)
    p.set_defaults(func=cmd_localsolve)

    p = common(sub.add_parser("search-integer-points", help="integer points on v^2 = u(u+2)(u+6)"))
    p.add_argument("--range", type=int, default=10 ** 5)
    p.set_defaults(func=cmd_search)

    p = common(sub.add_parser("cz", help="multiples on Y^2 = (X^2+1)(X^2+11) and the genus-2 check"))
    p.add_argument("--count", type=int, default=4)
    p.set_defaults(func=cmd_cz)
    return ap


def run(argv=None) -> int:
    ap = parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    for knob in ("count", "trials", "range"):
        v = getattr(args, knob, None)
        if v is not None and v < 1:
            print(f"error: --{knob} must be at least 1", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL if args.command in ("reproduce", "identities") else EXIT_USAGE


def main() -> None:
    sys.exit(run())
