"""Command-line entry point: ``skewham verify | sample | discriminant | monad | diamond``."""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path

from .commutator import phi
from .diamond import is_diamond
from .fields import parse_field
from .mc import SampleConfig, mc_codim_estimate
from .monad import build_resolution, discriminant, random_pencil, rank_h0f
from .report import Report, emit_report
from .suites import SUITES, UsageError, run_suite
from .symplectic import Partition, normal_form_skewham, random_skew
from .textio import read_pencil, write_pencil, write_resolution


def _default_seed() -> int:
    return int(os.environ.get("SKEWHAM_SEED", "0"))


def _print(rep: Report):
    sys.stdout.write(emit_report(rep, "text").decode())


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    field = parse_field(args.field) if args.field else None
    reports = [
        run_suite(name, n=args.n, r=args.r, field=field, seed=args.seed, workers=args.workers)
        for name in names
    ]
    for rep in reports:
        _print(rep)
    if args.json:
        blob = b"\n".join(emit_report(rep, "json") for rep in reports) + b"\n"
        Path(args.json).write_bytes(blob)
    return 0 if all(rep.passed for rep in reports) else 1


def cmd_sample(args) -> int:
    cfg = SampleConfig(args.n, args.r, args.p, args.samples, args.seed)
    est = mc_codim_estimate(cfg, workers=args.workers)
    rep = Report("sample", {"n": cfg.n, "r": cfg.r, "p": cfg.p, "samples": cfg.samples}, seed=cfg.seed)
    rep.add("estimate", est.hits > 0, hits=est.hits, fraction=est.fraction,
            log_ratio=f"{est.log_ratio:.4f}", codim=est.codim)
    _print(rep)
    return 0 if rep.passed else 1


def cmd_discriminant(args) -> int:
    f = read_pencil(Path(args.input).read_text())
    D = discriminant(f)
    print(f"degree {D.degree}")
    print(D)
    return 0


def cmd_monad(args) -> int:
    for i in range(1000):
        f = random_pencil(args.n, args.seed * 1000 + i)
        if rank_h0f(f) == 3 * args.n:
            break
    else:
        print("no instance with rank H0(f) = 3n found", file=sys.stderr)
        return 1
    res = build_resolution(f, seed=args.seed)
    text = "# pencil\n" + "".join("# " + line + "\n" for line in write_pencil(f).splitlines())
    text += write_resolution(res)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_diamond(args) -> int:
    d = Partition.parse(args.partition)
    n = args.n if args.n is not None else d.n
    d.check(n)
    rng = random.Random(f"cli-diamond:{args.seed}")
    _, B = normal_form_skewham(d, rng.sample(range(-50, 51), len(d.parts)))
    rep = Report("diamond", {"n": n, "partition": str(d)}, seed=args.seed)
    fails = sum(not is_diamond(phi(random_skew(n, rng), B), d) for _ in range(args.samples))
    rep.add("phi(A, B_d) is diamond", fails == 0, samples=args.samples, failures=fails)
    _print(rep)
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewham", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run one verification suite or all of them")
    v.add_argument("--suite", required=True, help=f"one of: all, {', '.join(SUITES)}")
    v.add_argument("--n", type=int)
    v.add_argument("--r", type=int)
    v.add_argument("--field", help="q or fp:<p>")
    v.add_argument("--json", help="also write canonical JSON reports here")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sample", help="Monte-Carlo codimension estimate over F_p")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--p", type=int, default=101)
    s.add_argument("--samples", type=int, default=100_000)
    s.set_defaults(func=cmd_sample)

    d = sub.add_parser("discriminant", help="Pfaffian discriminant of a pencil file")
    d.add_argument("--input", required=True)
    d.set_defaults(func=cmd_discriminant)

    m = sub.add_parser("monad", help="build and verify an r = n resolution")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--out")
    m.set_defaults(func=cmd_monad)

    g = sub.add_parser("diamond", help="check the diamond property for a partition")
    g.add_argument("--partition", required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--samples", type=int, default=200)
    g.set_defaults(func=cmd_diamond)

    for p in (v, s, d, m, g):
        p.add_argument("--seed", type=int, default=_default_seed())
    for p in (v, s):
        p.add_argument("--workers", type=int, default=1)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "verify" and args.suite != "all" and args.suite not in SUITES:
        ap.error(f"unknown suite {args.suite!r}")
    try:
        return args.func(args)
    except UsageError as exc:
        ap.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
