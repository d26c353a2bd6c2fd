"""Command-line front end: ``glrep <group> <verb> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import matrices, orbits, reps, suites, zelevinsky
from .infchar import inf_char
from .partitions import ParseError, SizeMismatch, as_partition, dominates, parse_partition_arg

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fmt_parts(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def _emit(args, human, data=None) -> None:
    if args.json:
        print(json.dumps(human if data is None else data))
    else:
        print(human)


def _partition(text: str):
    return parse_partition_arg(text)


def _rep(text: str) -> reps.UnitaryRep:
    return reps.parse_rep(text)


# ---------------------------------------------------------------- orbit


def cmd_orbit(args) -> int:
    if args.verb != "dim" and args.mu is None:
        raise UsageError(f"orbit {args.verb} needs two partitions")
    if args.verb == "dim":
        lam = _partition(args.lam)
        _emit(args, orbits.dimension(lam), {"orbit": orbits.NilpotentOrbit.of(lam).to_json(), "dimension": orbits.dimension(lam)})
    elif args.verb == "dominates":
        ok = dominates(_partition(args.lam), _partition(args.mu))
        _emit(args, str(ok).lower(), ok)
    else:
        o = orbits.induce(orbits.NilpotentOrbit.of(_partition(args.lam)), orbits.NilpotentOrbit.of(_partition(args.mu)))
        _emit(args, fmt_parts(o.partition), o.to_json())
    return EXIT_OK


# ---------------------------------------------------------------- rep


def cmd_rep(args) -> int:
    pi = _rep(args.rep)
    verb = args.verb
    if verb in ("ap", "dc"):
        p = reps.associated_partition(pi) if verb == "ap" else reps.depth_composition(pi)
        _emit(args, fmt_parts(p), list(p))
    elif verb in ("rank", "gk", "howe"):
        fn = {"rank": reps.rank, "gk": reps.gk_dimension, "howe": reps.howe_rank}[verb]
        value = fn(pi)
        _emit(args, value, value)
    elif verb == "adduce":
        a = reps.adduce(pi)
        lines = [f"{reps.format_rep(a.rep)}  (depth {a.depth})"]
        lines += [f"alternate: {reps.format_rep(r)}" for r in a.alternates]
        _emit(
            args,
            "\n".join(lines),
            {"rep": a.rep.to_json(), "depth": a.depth, "alternates": [r.to_json() for r in a.alternates]},
        )
    elif verb == "infchar":
        xi = inf_char(pi)
        _emit(args, "\n".join(str(z) for z in xi), xi.to_json())
    elif verb == "whittaker":
        if args.alpha is None:
            raise UsageError("rep whittaker needs a composition")
        v = reps.whittaker_nonvanishing(pi, _partition(args.alpha))
        _emit(args, str(v), str(v))
    return EXIT_OK


# ---------------------------------------------------------------- padic


def cmd_padic(args) -> int:
    x = zelevinsky.parse_poly(args.expr)
    verb = args.verb
    if verb == "eval":
        if args.graded is not None:
            x = zelevinsky.graded_derivative(x, args.graded)
        elif args.derivative:
            x = zelevinsky.total_derivative(x)
        _emit(args, zelevinsky.format_poly(x), x.to_json())
    elif verb == "dword":
        if args.alpha is None:
            raise UsageError("padic dword needs a composition")
        w = zelevinsky.derivative_word(x, _partition(args.alpha))
        _emit(args, w, w)
    elif verb == "dc":
        dc = zelevinsky.depth_composition_padic(x)
        _emit(args, fmt_parts(dc), list(dc))
    else:
        wf = zelevinsky.wf_partition(x)
        _emit(args, fmt_parts(wf), list(wf))
    return EXIT_OK


# ---------------------------------------------------------------- matrix


def _read_matrix(path: str) -> matrices.RationalMatrix:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    try:
        return matrices.RationalMatrix.from_json(json.loads(text))
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: invalid JSON at position {e.pos}") from None


def cmd_matrix(args) -> int:
    if args.verb == "jordan":
        j = matrices.jordan_matrix(_partition(args.target))
        _emit(args, "\n".join(" ".join(str(v) for v in row) for row in j.tolist()), j.to_json())
        return EXIT_OK
    if args.verb == "partition":
        lam = matrices.partition_of_nilpotent(_read_matrix(args.target))
        _emit(args, fmt_parts(lam), list(lam))
        return EXIT_OK
    lam = as_partition(_partition(args.target))
    seed = suites.default_seed() if args.seed is None else args.seed
    report = matrices.verify_projection_injectivity(lam, trials=args.trials, seed=seed)
    human = (
        f"partition {fmt_parts(lam)}  seed {seed}  trials {report.trials}  "
        f"U-hits {report.u_hits}  pairs {report.pairs}  violations {report.violations}  "
        f"trace failures {report.trace_failures}"
    )
    _emit(args, human, report.to_json())
    if not report.ok:
        print(f"first counterexample: {json.dumps(report.counterexamples[0])}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------- catalog / verify


def cmd_catalog(args) -> int:
    for pi in reps.catalog(args.max_n, min_n=args.min_n):
        ap = reps.associated_partition(pi)
        if args.json:
            print(json.dumps({"rep": pi.to_json(), "n": pi.n, "ap": list(ap)}))
        else:
            print(f"{pi.n}\t{reps.format_rep(pi)}\t{fmt_parts(ap)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "all":
        results = suites.run_all(args.max_n, args.seed)
    elif args.suite in suites.SUITES:
        results = iter([suites.run_suite(args.suite, args.max_n, args.seed)])
    else:
        raise UsageError(f"unknown suite {args.suite!r}; choose from: all, {', '.join(suites.SUITES)}")
    ok = True
    for r in results:
        ok &= r.passed
        print(json.dumps(r.to_json(), default=str) if args.json else r.line(), flush=True)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    p = argparse.ArgumentParser(prog="glrep", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="group", required=True)

    o = sub.add_parser("orbit", help="nilpotent orbits", parents=[common])
    o.add_argument("verb", choices=["dim", "dominates", "induce"])
    o.add_argument("lam")
    o.add_argument("mu", nargs="?")
    o.set_defaults(func=cmd_orbit)

    r = sub.add_parser("rep", help="unitary representations of GL(n, R)", parents=[common])
    r.add_argument("verb", choices=["ap", "dc", "rank", "gk", "howe", "adduce", "infchar", "whittaker"])
    r.add_argument("rep", help='e.g. "chi(3) x speh(4,2)"')
    r.add_argument("alpha", nargs="?", help="composition for whittaker")
    r.set_defaults(func=cmd_rep)

    z = sub.add_parser("padic", help="segment polynomials and derivatives", parents=[common])
    z.add_argument("verb", choices=["eval", "dword", "dc", "wf"])
    z.add_argument("expr", help='e.g. "seg(a,1,0,2)^2"')
    z.add_argument("alpha", nargs="?", help="composition for dword")
    z.add_argument("--derivative", action="store_true", help="eval: print the total derivative")
    z.add_argument("--graded", type=int, metavar="K", help="eval: print the K-th graded derivative")
    z.set_defaults(func=cmd_padic)

    m = sub.add_parser("matrix", help="exact matrix oracles", parents=[common])
    m.add_argument("verb", choices=["jordan", "partition", "verify-geo"])
    m.add_argument("target", help="composition, partition, or a JSON matrix file ('-' for stdin)")
    m.add_argument("--trials", type=int, default=200)
    m.add_argument("--seed", type=int)
    m.set_defaults(func=cmd_matrix)

    c = sub.add_parser("catalog", help="list the unitary catalog", parents=[common])
    c.add_argument("--max-n", type=int, required=True)
    c.add_argument("--min-n", type=int, default=1)
    c.set_defaults(func=cmd_catalog)

    v = sub.add_parser("verify", help="run a verification suite", parents=[common])
    v.add_argument("suite", help=f"all, {', '.join(suites.SUITES)}")
    v.add_argument("--max-n", type=int, help="sweep size; with 'all' it caps each suite's default size")
    v.add_argument("--seed", type=int)
    v.set_defaults(func=cmd_verify)
    return p


def _report_parse_error(e) -> None:
    print(f"error: {e}", file=sys.stderr)
    text, pos = getattr(e, "text", None), getattr(e, "position", None)
    if text is not None and pos is not None:
        print(f"  {text}\n  {' ' * pos}^", file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if not hasattr(args, "json"):
        args.json = False
    try:
        return args.func(args)
    except (ParseError, reps.RepParseError, zelevinsky.PolyParseError) as e:
        _report_parse_error(e)
    except (UsageError, SizeMismatch, ValueError, matrices.NotNilpotent, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
    except BrokenPipeError:
        return EXIT_OK
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
