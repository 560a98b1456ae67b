"""Batch verification harness and exact table emitter.

``verify`` runs the selected check suites over a range of degrees and prints a
machine-readable report; the exit status is 0 only when every check passes.
``table`` writes exact-valued reference tables.  Options may also be supplied
through SL4CUBE_-prefixed environment variables; explicit flags win.
"""

import argparse
import csv
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import specialfn, suites
from .exact import binomial
from .report import Report

ENV_PREFIX = "SL4CUBE_"

USAGE_ERROR = 2
VERIFY_FAILURE = 1


@dataclass
class SuiteConfig:
    n_min: int = 0
    n_max: int = 5
    suites: tuple = ("all",)
    oracle_n_max: int = 3
    basepoint: int = 0
    output: str = "text"
    seed: int = 0
    jobs: int = 1

    def selected(self):
        chosen = set(self.suites)
        if "all" in chosen:
            return list(suites.SUITES)
        return [s for s in suites.SUITES if s in chosen]

    def validate(self):
        if self.n_min < 0 or self.n_min > self.n_max:
            raise ValueError("need 0 <= n-min <= n-max")
        if self.oracle_n_max > self.n_max:
            raise ValueError("oracle-n-max must not exceed n-max")
        if self.output not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.output!r}")
        unknown = set(self.suites) - set(suites.SUITES) - {"all"}
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}")
        if not 0 <= self.basepoint:
            raise ValueError("basepoint must be a vertex index")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def as_dict(self):
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "suites": list(self.suites),
            "oracle_n_max": self.oracle_n_max,
            "basepoint": self.basepoint,
            "output": self.output,
            "seed": self.seed,
            "jobs": self.jobs,
        }


def _job_rng(seed, suite, n):
    # string seeding hashes through sha512, so this is stable across processes
    return random.Random(f"{seed}:{suite}:{n}")


def _run_job(job):
    suite, n, cfg_tuple = job
    seed, oracle_n_max, basepoint = cfg_tuple
    rng = _job_rng(seed, suite, n)
    base = basepoint % (1 << n) if n else 0
    if suite == "sl4":
        return suites.suite_sl4(rng).checks
    if suite == "poly":
        return suites.suite_poly(n, rng).checks
    if suite == "special":
        return suites.suite_special(n, rng, oracle_n_max).checks
    if suite == "cube":
        return suites.suite_cube(n, base, rng).checks
    if suite == "tensor":
        return suites.suite_tensor(n, base, oracle_n_max, rng).checks
    if suite == "correspond":
        return suites.suite_correspond(n, base, oracle_n_max, rng).checks
    raise ValueError(f"unknown suite {suite!r}")


def run(cfg: SuiteConfig):
    """Execute the configured suites; returns (report, exit_status)."""
    cfg.validate()
    jobs = []
    for suite in cfg.selected():
        if suite == "sl4":
            jobs.append((suite, None, (cfg.seed, cfg.oracle_n_max, cfg.basepoint)))
        else:
            for n in range(cfg.n_min, cfg.n_max + 1):
                jobs.append((suite, n, (cfg.seed, cfg.oracle_n_max, cfg.basepoint)))
    report = Report()
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            for checks in pool.map(_run_job, jobs):
                report.checks.extend(checks)
    else:
        for job in jobs:
            report.checks.extend(_run_job(job))
    return report, (0 if report.passed else VERIFY_FAILURE)


def render_report(report: Report, cfg: SuiteConfig, stream):
    if cfg.output == "json":
        payload = {"config": cfg.as_dict(), "checks": [c.as_dict() for c in report.checks]}
        json.dump(payload, stream, indent=2)
        stream.write("\n")
    elif cfg.output == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["id", "anchor", "n", "status", "witness"])
        for c in report.checks:
            writer.writerow([c.id, c.anchor, "" if c.n is None else c.n, c.status, c.witness or ""])
    else:
        for c in report.checks:
            n = "-" if c.n is None else c.n
            line = f"{c.status.upper():7s} n={n:<3} {c.id}: {c.anchor}"
            if c.witness:
                line += f"  [{c.witness}]"
            stream.write(line + "\n")
        failed = len(report.failures)
        stream.write(f"# {len(report.checks)} checks, {failed} failed\n")


def _frac_str(x):
    f = Fraction(x)
    return str(f)


def table_rows(kind, N):
    """Rows (as string tuples) for the requested exact reference table."""
    if kind == "dims":
        header = ("N", "dim")
        rows = [(str(n), str(binomial(n + 3, 3))) for n in range(N + 1)]
    elif kind == "transition":
        header = ("N", "s", "t", "u", "S", "T", "U", "P_value_num", "P_value_den")
        rows = []
        for lam in specialfn.tails(N):
            for mu in specialfn.tails(N):
                val = Fraction(specialfn.calP_sum(N, lam, mu))
                rows.append(
                    tuple(str(v) for v in (N, *lam, *mu, val.numerator, val.denominator))
                )
    elif kind == "krawtchouk":
        header = ("N", "n", "power", "coeff_num", "coeff_den")
        fam = specialfn.krawtchouk(N)
        rows = []
        for n, poly in enumerate(fam.coeffs):
            for k, coef in enumerate(poly):
                f = Fraction(coef)
                rows.append(tuple(str(v) for v in (N, n, k, f.numerator, f.denominator)))
    elif kind == "wedderburn":
        header = ("l", "eigenvalue", "dim")
        rows = [
            (str(l), _frac_str(Fraction((N - 2 * l) * (N - 2 * l + 2), 2)), str((N - 2 * l + 1) ** 2))
            for l in range(N // 2 + 1)
        ]
    else:
        raise ValueError(f"unknown table kind {kind!r}")
    return header, rows


def emit_table(kind, N, path, fmt="csv"):
    header, rows = table_rows(kind, N)
    if fmt == "json":
        payload = {"kind": kind, "n": N, "columns": list(header), "rows": [list(r) for r in rows]}
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [",".join(header)] + [",".join(r) for r in rows]
        text = "\n".join(lines) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _env_default(name, cast, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError:
        raise SystemExit(USAGE_ERROR)


def build_parser():
    parser = argparse.ArgumentParser(prog="sl4cube", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites over a degree range")
    v.add_argument("--n-min", type=int, default=_env_default("N_MIN", int, 0))
    v.add_argument("--n-max", type=int, default=_env_default("N_MAX", int, 5))
    v.add_argument(
        "--suite",
        action="append",
        default=None,
        choices=list(suites.SUITES) + ["all"],
        help="suite to run (repeatable; default all)",
    )
    v.add_argument(
        "--oracle-n-max",
        type=int,
        default=_env_default("ORACLE_N_MAX", int, None),
        help="cap for brute-force tensor oracles (default min(3, n-max))",
    )
    v.add_argument("--basepoint", type=int, default=_env_default("BASEPOINT", int, 0))
    v.add_argument("--output", choices=("json", "csv", "text"), default=_env_default("OUTPUT", str, "text"))
    v.add_argument("--seed", type=int, default=_env_default("SEED", int, 0))
    v.add_argument("--jobs", type=int, default=_env_default("JOBS", int, 1))

    t = sub.add_parser("table", help="emit an exact reference table")
    t.add_argument("--kind", required=True, choices=("transition", "krawtchouk", "dims", "wedderburn"))
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--out", default="-", help="output path, or - for stdout")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        suite_list = tuple(args.suite) if args.suite else tuple(
            os.environ.get(ENV_PREFIX + "SUITE", "all").split(",")
        )
        oracle = args.oracle_n_max
        if oracle is None:
            oracle = min(3, args.n_max)
        cfg = SuiteConfig(
            n_min=args.n_min,
            n_max=args.n_max,
            suites=suite_list,
            oracle_n_max=oracle,
            basepoint=args.basepoint,
            output=args.output,
            seed=args.seed,
            jobs=args.jobs,
        )
        try:
            cfg.validate()
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return USAGE_ERROR
        report, status = run(cfg)
        render_report(report, cfg, sys.stdout)
        return status
    if args.command == "table":
        if args.n < 0:
            print("error: n must be >= 0", file=sys.stderr)
            return USAGE_ERROR
        try:
            emit_table(args.kind, args.n, args.out, args.format)
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return 1
        return 0
    return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
