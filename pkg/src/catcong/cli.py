"""Command-line entry point: ``catcong verify | search | table``."""

import argparse
import csv
import fnmatch
import io
import json
import os
import sys
from dataclasses import dataclass, field

from catcong import congruences, search
from catcong.arith import is_prime, prime_powers

JOBS_ENV = "CATCONG_JOBS"
DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)
CSV_HEADER = ["check_id", "p", "a", "d", "m", "n", "modulus", "lhs", "rhs", "pass", "note"]


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    checks: list = field(default_factory=lambda: ["*"])
    p_set: list = None
    pa_cap: int = 400
    m_max: int = 4
    n_max: int = 6
    bound: int = 10_000
    predicate: str = "both"
    checkpoint: str = None
    jobs: int = 1
    format: str = "text"
    output: str = None
    s_max: int = 6

    def validate(self):
        if self.command not in ("verify", "search", "table"):
            raise ConfigError(f"unknown command {self.command!r}")
        if self.pa_cap < 2:
            raise ConfigError("--pa-cap must be at least 2")
        if self.jobs < 1:
            raise ConfigError("--jobs must be at least 1")
        if self.m_max < 0 or self.n_max < 0 or self.s_max < 0:
            raise ConfigError("ranges must be nonnegative")
        if self.p_set is not None:
            bad = [p for p in self.p_set if not is_prime(p)]
            if bad:
                raise ConfigError(f"not prime: {bad}")
        if self.command == "verify":
            self.selected_checks()
        if self.command == "search":
            if self.predicate not in search.PREDICATES:
                raise ConfigError(f"unknown predicate {self.predicate!r}")
            if self.format == "csv":
                raise ConfigError("search output supports json and text only")

    def selected_checks(self):
        out = []
        for pattern in self.checks:
            matched = fnmatch.filter(congruences.CHECK_IDS, pattern)
            if not matched:
                raise ConfigError(f"no check id matches {pattern!r}")
            out.extend(m for m in matched if m not in out)
        return [c for c in congruences.CHECK_IDS if c in out]

    def echo(self):
        base = {"command": self.command}
        if self.command == "verify":
            base.update(
                checks=self.checks,
                p_set=self.p_set if self.p_set is not None else list(DEFAULT_PRIMES),
                pa_cap=self.pa_cap,
                m_max=self.m_max,
                n_max=self.n_max,
                jobs=self.jobs,
                format=self.format,
            )
        elif self.command == "search":
            base.update(bound=self.bound, predicate=self.predicate, jobs=self.jobs, format=self.format)
        else:
            base.update(s_max=self.s_max)
        return base

    def grid(self):
        primes = self.p_set if self.p_set is not None else DEFAULT_PRIMES
        grid = congruences.Grid(
            pps=prime_powers(primes, self.pa_cap),
            m_max=self.m_max,
            catalan_n_max=self.n_max,
        )
        if self.p_set is not None:
            grid.aux_primes = sorted(p for p in set(self.p_set) if p > 3)
        return grid


def parse_primes(text):
    """'2,3,5' or '2-13' or a mix of both."""
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if "-" in token:
            lo, hi = (int(x) for x in token.split("-", 1))
            out.extend(p for p in range(lo, hi + 1) if is_prime(p))
        else:
            out.append(int(token))
    return out


def build_parser():
    parser = argparse.ArgumentParser(
        prog="catcong",
        description="Verify central binomial and Catalan congruences modulo prime powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    default_jobs = int(os.environ.get(JOBS_ENV, "1"))

    v = sub.add_parser("verify", help="run congruence checks over a parameter grid")
    v.add_argument("--checks", nargs="+", action="extend", help="check id globs, e.g. 'thm1.1/*'")
    v.add_argument("--p", action="append", help="primes: '5', '2,3,5' or '2-13'; repeatable")
    v.add_argument("--pa-cap", type=int, default=400, help="use every a with p**a <= cap")
    v.add_argument("--m-max", type=int, default=4)
    v.add_argument("--n-max", type=int, default=6, help="largest n for the Catalan block sums")
    v.add_argument("--jobs", type=int, default=default_jobs)
    v.add_argument("--format", choices=("json", "csv", "text"), default="text")
    v.add_argument("--output", "-o")

    s = sub.add_parser("search", help="search composite moduli for hits")
    s.add_argument("--bound", type=int, default=10_000)
    s.add_argument("--predicate", choices=search.PREDICATES, default="both")
    s.add_argument("--jobs", type=int, default=default_jobs)
    s.add_argument("--checkpoint", help="checkpoint file for resumable runs")
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.add_argument("--output", "-o")

    t = sub.add_parser("table", help="print exact values of the signed harmonic sum")
    t.add_argument("--s-max", type=int, default=6)
    return parser


def config_from_args(args):
    cfg = RunConfig(command=args.command)
    if args.command == "verify":
        cfg.checks = args.checks or ["*"]
        cfg.p_set = parse_primes(",".join(args.p)) if args.p else None
        cfg.pa_cap = args.pa_cap
        cfg.m_max = args.m_max
        cfg.n_max = args.n_max
    elif args.command == "search":
        cfg.bound = args.bound
        cfg.predicate = args.predicate
        cfg.checkpoint = args.checkpoint
    else:
        cfg.s_max = args.s_max
    if args.command != "table":
        cfg.jobs = args.jobs
        cfg.format = args.format
        cfg.output = args.output
    return cfg


def render_reports(cfg, reports):
    passed = sum(r.passed for r in reports)
    failed = len(reports) - passed
    if cfg.format == "json":
        doc = {
            "run": cfg.echo(),
            "reports": [r.to_dict() for r in reports],
            "summary": {"pass_count": passed, "fail_count": failed},
        }
        return json.dumps(doc, indent=2) + "\n"
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in reports:
            row = r.to_dict()
            params = row["params"]
            writer.writerow(
                [row["check_id"]]
                + [params.get(k, "") for k in ("p", "a", "d", "m", "n")]
                + [row["modulus"], row["lhs"], row["rhs"], str(row["pass"]).lower(), row["note"]]
            )
        return buf.getvalue()
    lines = [
        f"FAIL {r.check_id} {json.dumps(r.params)} mod {r.modulus}: lhs={r.lhs} rhs={r.rhs}"
        + (f" ({r.note})" if r.note else "")
        for r in reports
        if not r.passed
    ]
    lines.append(f"pass: {passed} fail: {failed}")
    return "\n".join(lines) + "\n"


def render_search(cfg, summary):
    if cfg.format == "json":
        return json.dumps({"run": cfg.echo(), "summary": summary.to_dict()}, indent=2) + "\n"
    lines = [f"hit {h.predicate} n={h.n} lhs={h.lhs} rhs={h.rhs}" for h in summary.hits]
    lines += [
        f"bound: {summary.bound}",
        f"predicate: {summary.predicate}",
        f"tested: {summary.tested_count}",
        f"hits: {len(summary.hits)}",
        f"elapsed: {summary.elapsed:.1f}s",
    ]
    return "\n".join(lines) + "\n"


def render_table(s_max):
    return "".join(f"S_{d} = {congruences.signed_harmonic_exact(d)}\n" for d in range(s_max + 1))


def _emit(cfg, text):
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(cfg):
    """Execute a validated config; returns the process exit code."""
    try:
        cfg.validate()
    except ConfigError as exc:
        print(f"catcong: error: {exc}", file=sys.stderr)
        return 2
    if cfg.command == "table":
        _emit(cfg, render_table(cfg.s_max))
        return 0
    if cfg.command == "verify":
        tasks = congruences.build_tasks(cfg.grid(), cfg.selected_checks())
        reports = congruences.run_tasks(tasks, cfg.jobs)
        _emit(cfg, render_reports(cfg, reports))
        return 0 if all(r.passed for r in reports) else 1
    try:
        summary = search.search(cfg.bound, cfg.predicate, cfg.jobs, cfg.checkpoint)
    except (OSError, ValueError) as exc:
        print(f"catcong: error: {exc}", file=sys.stderr)
        return 2
    _emit(cfg, render_search(cfg, summary))
    return 0 if not summary.hits else 1


def main(argv=None):
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
