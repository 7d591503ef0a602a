"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource error (enumeration caps, 64-bit overflow).
"""
from __future__ import annotations

import argparse
import random
import sys
import time

from . import solver, verifier
from .bitcore import BitString, MirkinInstance
from .errors import (ArithmeticOverflow, InstanceTooLarge, MirkinError,
                     ParseError)
from .formats import format_instance, parse_instance
from .gadget import build
from .reduction import parse_dimacs, reduce_3sat_to_nae, reduce_nae_to_mirkin

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def _emit(lines) -> None:
    _write("-", "".join(f"{line}\n" for line in lines))


def _config_line(args: argparse.Namespace) -> str:
    skip = {"func"}
    items = " ".join(f"{k}={v}" for k, v in sorted(vars(args).items())
                     if k not in skip)
    return f"c config {items}"


def cmd_solve(args) -> int:
    inst = parse_instance(_read(args.input))
    if args.k is not None:
        inst = inst.with_budget(args.k)
    result = solver.solve(inst, args.backend, max_n=args.max_n,
                          max_types=args.max_types, threads=args.threads)
    _emit(result.lines())
    return EXIT_OK


def cmd_gadget(args) -> int:
    _emit(str(s) for s in build(args.ell))
    return EXIT_OK


def cmd_reduce(args) -> int:
    text = _read(args.inp)
    if args.direction == "sat2nae":
        if args.cert:
            raise UsageError("--cert only applies to nae2mirkin")
        _write(args.out, reduce_3sat_to_nae(parse_dimacs(text, "cnf")).to_dimacs())
        return EXIT_OK
    psi = parse_dimacs(text, "nae")
    inst, cert = reduce_nae_to_mirkin(psi, threads=args.threads)
    comments = (f"source {cert.digest}",
                f"n_padded {cert.n_padded} L {cert.L} B00 {cert.B00}")
    _write(args.out, format_instance(inst, comments))
    if args.cert:
        _write(args.cert, cert.to_text())
    return EXIT_OK


def cmd_export_lp(args) -> int:
    inst = parse_instance(_read(args.input))
    model = solver.build_ilp(inst, args.k)
    _write(args.out, solver.export_lp(model))
    return EXIT_OK


def cmd_verify(args) -> int:
    seed = args.seed
    if args.suite == "all":
        reports = verifier.verify_all(seed, args.ell, args.trials)
    elif args.suite == "gadget":
        reports = [verifier.verify_gadget(args.max_ell)]
    elif args.suite == "claims":
        reports = [verifier.verify_claims(args.ell, args.trials, seed)]
    elif args.suite == "backends":
        reports = [verifier.verify_backends(args.instances, 14, 6, seed),
                   verifier.verify_type_constant(200, 12, 5, seed),
                   verifier.verify_linearization(args.instances, 14, 6, seed)]
    else:
        reports = [verifier.verify_reductions(seed)]
    for r in reports:
        _emit(r.lines())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(p) for p in text.split(".."))
    except ValueError:
        raise UsageError(f"--n-range expects A..B, got {text!r}")
    if not 1 <= lo <= hi:
        raise UsageError(f"--n-range needs 1 <= A <= B, got {text!r}")
    return lo, hi


def cmd_bench(args) -> int:
    lo, hi = _parse_range(args.n_range)
    rng = random.Random(args.seed)
    # compile outside the timed region
    solver.solve(MirkinInstance.from_strings(["01", "11"]), args.backend)
    _emit(["# n\tbackend\tcandidates\tnanoseconds"])
    for n in range(lo, hi + 1):
        inst = MirkinInstance(tuple(
            (BitString(n, rng.getrandbits(n)), rng.randint(1, 3))
            for _ in range(args.m)))
        start = time.perf_counter_ns()
        result = solver.solve(inst, args.backend, max_n=args.max_n,
                              max_types=args.max_types, threads=args.threads)
        elapsed = time.perf_counter_ns() - start
        _emit([f"{n}\t{args.backend}\t{result.candidates}\t{elapsed}"])
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads; results do not depend on it")
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-n", type=int, default=solver.MAX_BRUTE_N)
    caps.add_argument("--max-types", type=int, default=solver.MAX_TYPES)

    parser = argparse.ArgumentParser(
        prog="mirkin", description="Exact Mirkin distance minimization toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common, caps], help="solve an instance")
    p.add_argument("--backend", choices=sorted(solver.SOLVERS), default="brute")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gadget", parents=[common], help="print build(ell)")
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("reduce", parents=[common], help="run a reduction")
    p.add_argument("direction", choices=["sat2nae", "nae2mirkin"])
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--cert")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", parents=[common], help="run property suites")
    p.add_argument("--suite", choices=[*verifier.SUITES, "all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ell", type=int, default=2)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-ell", type=int, default=6)
    p.add_argument("--instances", type=int, default=500)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common, caps], help="time a backend")
    p.add_argument("--backend", choices=sorted(solver.SOLVERS), default="brute")
    p.add_argument("--n-range", required=True)
    p.add_argument("--m", type=int, default=10, help="strings per instance")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("export-lp", parents=[common], help="write the ILP")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_export_lp)
    return parser


def _fail(code: int, kind: str, exc: BaseException) -> int:
    message = " ".join(str(exc).split())
    print(f"error {kind}: {message}", file=sys.stderr)
    return code


def run(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    print(_config_line(args), file=sys.stderr)
    try:
        return args.func(args)
    except (InstanceTooLarge, ArithmeticOverflow, MemoryError) as exc:
        return _fail(EXIT_RESOURCE, "resource", exc)
    except ParseError as exc:
        return _fail(EXIT_USAGE, "parse", exc)
    except (UsageError, MirkinError, UnicodeDecodeError) as exc:
        return _fail(EXIT_USAGE, "usage", exc)
    except OSError as exc:
        return _fail(EXIT_USAGE, "io", exc)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
