"""Command-line front end: parameter sweeps, property checks, oracle cross-validation.

Subcommands:
    sweep   write a CSV of tangle records over an (N, k, a) grid
    check   verify the monogamy / ordering / monotonicity properties on a grid
    oracle  cross-validate the closed forms against the brute-force oracle

Exit codes: 0 = all checks pass, 1 = property violation, 2 = usage/config error.
Diagnostics go to stderr; stdout (or --out) carries the report or CSV only.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from multiprocessing import Pool

import numpy as np

from . import marginals, measures, oracle
from .dicke import DickeParams
from .errors import CapExceededError, DicketangleError, InvalidParamsError
from .oracle import Spinor

_COLUMNS = "N,k,a,c1_sq,c2_sq,tau,n2,xi"

# spot-check sizes for the monogamy/ordering properties beyond the dense grid
_SPOT_N = (50, 100)
_SPOT_K_MAX = 5

_ORACLE_N_MAX = 12


@dataclass(frozen=True)
class SweepConfig:
    """Validated sweep parameters; k_values None means all k per N."""

    n_values: tuple[int, ...]
    k_values: tuple[int, ...] | None
    a_min: float = 0.0
    a_max: float = 1.0
    a_steps: int = 101
    output_path: str = "-"
    precision: int = 12
    jobs: int = 1

    def __post_init__(self):
        if not self.n_values:
            raise InvalidParamsError("need at least one N value")
        if not all(isinstance(n, int) and n >= 2 for n in self.n_values):
            raise InvalidParamsError(f"N values must be integers >= 2, got {self.n_values}")
        if self.k_values is not None and not self.k_values:
            raise InvalidParamsError("explicit k list must be nonempty")
        if not 0.0 <= self.a_min <= self.a_max <= 1.0:
            raise InvalidParamsError(
                f"need 0 <= a_min <= a_max <= 1, got [{self.a_min}, {self.a_max}]"
            )
        if self.a_steps < 2:
            raise InvalidParamsError(f"a_steps must be >= 2, got {self.a_steps}")
        if self.precision < 1:
            raise InvalidParamsError(f"precision must be >= 1, got {self.precision}")
        if self.jobs < 1:
            raise InvalidParamsError(f"jobs must be >= 1, got {self.jobs}")


def _a_grid(a_min: float, a_max: float, a_steps: int) -> list[float]:
    # endpoints inclusive by construction
    return [a_min + i * (a_max - a_min) / (a_steps - 1) for i in range(a_steps)]


def _fmt(x: float, precision: int) -> str:
    # x + 0.0 canonicalizes -0.0 so equal values always render identically
    return format(x + 0.0, f".{precision}g")


def _row_values(point):
    """Compute one sweep row; returns (ok, payload) so failures stay per-row."""
    n, k, a = point
    try:
        rec = measures.tangle_record(DickeParams(n, k, a))
    except DicketangleError as exc:
        return False, f"(N={n}, k={k}, a={a:g}): {exc}"
    return True, (rec.c1_sq, rec.c2_sq, rec.tau, rec.n2, rec.xi)


def run_sweep(cfg: SweepConfig, out=None, err=None) -> int:
    err = err if err is not None else sys.stderr
    grid = []
    for n in sorted(set(cfg.n_values)):
        ks = range(1, n // 2 + 1) if cfg.k_values is None else sorted(set(cfg.k_values))
        for k in ks:
            if not 1 <= k <= n // 2:
                print(f"warning: skipping invalid pair N={n}, k={k}", file=err)
                continue
            for a in _a_grid(cfg.a_min, cfg.a_max, cfg.a_steps):
                grid.append((n, k, a))
    if not grid:
        print("error: sweep grid is empty after filtering", file=err)
        return 2

    if cfg.jobs > 1:
        with Pool(cfg.jobs) as pool:
            results = pool.map(_row_values, grid, chunksize=max(1, len(grid) // (4 * cfg.jobs)))
    else:
        results = [_row_values(point) for point in grid]

    lines = [_COLUMNS]
    failures = 0
    for (n, k, a), (ok, payload) in zip(grid, results):
        if not ok:
            failures += 1
            print(f"warning: skipping row {payload}", file=err)
            continue
        fields = [str(n), str(k)] + [_fmt(x, cfg.precision) for x in (a, *payload)]
        lines.append(",".join(fields))
    if failures == len(grid):
        print("error: every sweep row failed", file=err)
        return 2

    text = "\n".join(lines) + "\n"
    if cfg.output_path == "-":
        stream = out if out is not None else sys.stdout
        stream.write(text)
    else:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return 0


class _PropertyReport:
    """Collects worst offenders per named property and prints PASS/FAIL lines."""

    def __init__(self):
        self.worst = {}

    def observe(self, name: str, margin: float, where: str):
        """Record `margin` (negative = violation); keep the worst case per property."""
        cur = self.worst.get(name)
        if cur is None or margin < cur[0]:
            self.worst[name] = (margin, where)

    def render(self, stream) -> int:
        bad = 0
        for name in sorted(self.worst):
            margin, where = self.worst[name]
            if margin < 0.0:
                bad += 1
                print(f"FAIL {name}: violated by {-margin:.3e} at {where}", file=stream)
            else:
                print(f"PASS {name}: margin {margin:.3e} (tightest at {where})", file=stream)
        return 0 if bad == 0 else 1


def _check_pairs(n_max: int):
    pairs = [(n, k) for n in range(3, n_max + 1) for k in range(1, n // 2 + 1)]
    for n in _SPOT_N:
        if n > n_max:
            pairs.extend((n, k) for k in range(1, min(_SPOT_K_MAX, n // 2) + 1))
    return pairs


def run_check(n_max: int, a_steps: int, tol: float, out=None, err=None) -> int:
    """Verify the measures-module properties over a dense grid plus spot checks."""
    out = out if out is not None else sys.stdout
    if n_max < 3:
        raise InvalidParamsError(f"check needs n_max >= 3, got {n_max}")
    if a_steps < 2:
        raise InvalidParamsError(f"a_steps must be >= 2, got {a_steps}")
    grid = _a_grid(0.0, 1.0, a_steps)
    pairs = _check_pairs(n_max)
    records = {
        (n, k): [measures.tangle_record(DickeParams(n, k, a)) for a in grid] for n, k in pairs
    }
    report = _PropertyReport()

    for (n, k), recs in records.items():
        for a, rec in zip(grid, recs):
            where = f"(N={n}, k={k}, a={a:.6g})"
            report.observe("monogamy-tau", rec.tau + tol, where)
            report.observe("monogamy-xi", rec.xi + tol, where)
            report.observe("ordering-xi-ge-tau", rec.xi - rec.tau + tol, where)
            if k == 1:
                report.observe("w-class-saturation", tol - abs(rec.tau), where)
            if a == 1.0:
                report.observe("vanishing-at-a-1", tol - abs(rec.tau), where)
        taus = [rec.tau for rec in recs]
        if k >= 2:
            for i in range(len(taus) - 1):
                report.observe(
                    "a-monotonicity",
                    taus[i] - taus[i + 1] + tol,
                    f"(N={n}, k={k}, a={grid[i]:.6g}->{grid[i + 1]:.6g})",
                )
        for i, a in enumerate(grid):
            report.observe(
                "endpoint-max-at-a-0", taus[0] - taus[i] + tol, f"(N={n}, k={k}, a={a:.6g})"
            )

    by_n = sorted({n for n, _ in records})
    for n in by_n:
        ks = sorted(k for m, k in records if m == n)
        for k1, k2 in zip(ks, ks[1:]):
            for i, a in enumerate(grid):
                if a >= 1.0:
                    continue
                report.observe(
                    "k-ordering",
                    records[(n, k2)][i].tau - records[(n, k1)][i].tau + tol,
                    f"(N={n}, k={k1}->{k2}, a={a:.6g})",
                )
    by_k = sorted({k for _, k in records})
    for k in by_k:
        ns = sorted(n for n, m in records if m == k)
        for n1, n2 in zip(ns, ns[1:]):
            if n1 == 2 * k:
                # tau genuinely rises when leaving the half-filled point
                # (e.g. tau(4,2,0) = 2/3 < tau(5,2,0) ~ 0.7028), so the
                # decay-with-N property starts at N = 2k + 1
                continue
            for i, a in enumerate(grid):
                report.observe(
                    "n-decay",
                    records[(n1, k)][i].tau - records[(n2, k)][i].tau + tol,
                    f"(N={n1}->{n2}, k={k}, a={a:.6g})",
                )

    return report.render(out)


def _trace_second_qubit(rho4: "list[list[float]]") -> list:
    return [
        [rho4[2 * x][2 * y] + rho4[2 * x + 1][2 * y + 1] for y in range(2)] for x in range(2)
    ]


def run_oracle(n_max: int, a_steps: int, tol: float, out=None, err=None) -> int:
    """Cross-validate analytic states, marginals, and measures against the oracle."""
    out = out if out is not None else sys.stdout
    if n_max < 2:
        raise InvalidParamsError(f"oracle needs n_max >= 2, got {n_max}")
    if n_max > _ORACLE_N_MAX:
        raise CapExceededError(f"oracle command is capped at n_max <= {_ORACLE_N_MAX}, got {n_max}")
    if a_steps < 2:
        raise InvalidParamsError(f"a_steps must be >= 2, got {a_steps}")
    grid = _a_grid(0.0, 1.0, a_steps)
    eps1 = Spinor(1.0, 0.0)
    worst = (-1.0, "")
    failed = False
    for n in range(2, n_max + 1):
        for k in range(1, n // 2 + 1):
            devs = {"state": 0.0, "marginal": 0.0, "pair-choice": 0.0, "rho1": 0.0, "measures": 0.0}
            for a in grid:
                params = DickeParams(n, k, a)
                psi = oracle.expand_state(params)
                sym = oracle.symmetrize_two_spinors(n, k, eps1, Spinor(a, params.b))
                devs["state"] = max(
                    devs["state"], float(np.max(np.abs(psi.amplitudes - sym.amplitudes)))
                )

                brute = oracle.partial_trace_to_two(psi)
                marg = marginals.two_qubit_marginal(params)
                analytic = marginals.marginal_matrix(marg)
                devs["marginal"] = max(
                    devs["marginal"],
                    max(abs(x - y) for x, y in zip(brute.entries, analytic.entries)),
                )

                for i in range(n):
                    for j in range(i + 1, n):
                        other = oracle.partial_trace_to_two(psi, (i, j))
                        devs["pair-choice"] = max(
                            devs["pair-choice"],
                            max(abs(x - y) for x, y in zip(other.entries, brute.entries)),
                        )

                rho1_brute = oracle.partial_trace_to_one(psi)
                rho1_analytic = marginals.single_qubit_marginal(marg).rho
                devs["rho1"] = max(
                    devs["rho1"],
                    max(abs(x - y) for x, y in zip(rho1_brute.entries, rho1_analytic.entries)),
                )
                contracted = _trace_second_qubit(brute.rows())
                devs["rho1"] = max(
                    devs["rho1"],
                    max(
                        abs(contracted[x][y] - rho1_brute.entry(x, y))
                        for x in range(2)
                        for y in range(2)
                    ),
                )

                brute_marg = marginals.TwoQubitMarginal(
                    params,
                    A=brute.entry(0, 0),
                    B=brute.entry(0, 1),
                    C=brute.entry(0, 3),
                    D=brute.entry(1, 1),
                    E=brute.entry(1, 3),
                    F=brute.entry(3, 3),
                )
                devs["measures"] = max(
                    devs["measures"],
                    abs(
                        measures.concurrence_two_qubit(brute)
                        - measures.concurrence_two_qubit(analytic)
                    ),
                    abs(
                        measures.negativity_two_qubit(brute_marg)
                        - measures.negativity_two_qubit(marg)
                    ),
                    abs(
                        measures.one_vs_rest(marginals.SingleQubitMarginal(params, rho1_brute))
                        - measures.one_vs_rest(marginals.single_qubit_marginal(marg))
                    ),
                )
            print(
                f"N={n} k={k}: " + " ".join(f"{name}={dev:.3e}" for name, dev in devs.items()),
                file=out,
            )
            for name, dev in devs.items():
                if dev > worst[0]:
                    worst = (dev, f"{name} at N={n}, k={k}")
                if dev > tol:
                    failed = True
    print(f"max deviation: {worst[0]:.3e} ({worst[1]})", file=out)
    if failed:
        print(f"FAIL: max deviation exceeds tol={tol:g}", file=out)
        return 1
    print(f"PASS: all deviations below tol={tol:g}", file=out)
    return 0


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def _k_list(text: str):
    if text.strip().lower() == "all":
        return None
    return _int_list(text)


def _jobs(text: str) -> int:
    if text.strip().lower() == "auto":
        return os.cpu_count() or 1
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'auto', got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("jobs must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dicketangle",
        description="Tangles and monogamy checks for one-parameter Dicke-class states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="write tangle records over an (N, k, a) grid as CSV")
    sweep.add_argument("--n", type=_int_list, default=(10, 100), metavar="LIST",
                       help="comma-separated N values (default 10,100)")
    sweep.add_argument("--k", type=_k_list, default=None, metavar="LIST|all",
                       help="comma-separated k values, or 'all' for 1..N//2 (default all)")
    sweep.add_argument("--a-min", type=float, default=0.0)
    sweep.add_argument("--a-max", type=float, default=1.0)
    sweep.add_argument("--a-steps", type=int, default=101)
    sweep.add_argument("--out", default="-", help="output path, '-' for stdout (default)")
    sweep.add_argument("--precision", type=int, default=12,
                       help="significant digits in the CSV (default 12)")
    sweep.add_argument("--jobs", type=_jobs, default=1, metavar="INT|auto",
                       help="worker processes for the sweep (default 1)")

    check = sub.add_parser("check", help="verify monogamy/ordering/monotonicity properties")
    check.add_argument("--n-max", type=int, default=12,
                       help="dense grid covers N = 3..n_max (default 12)")
    check.add_argument("--a-steps", type=int, default=11)
    check.add_argument("--tol", type=float, default=1e-9)

    orc = sub.add_parser("oracle", help="cross-validate closed forms against the dense oracle")
    orc.add_argument("--n-max", type=int, default=12, help="grid covers N = 2..n_max (default 12)")
    orc.add_argument("--a-steps", type=int, default=11)
    orc.add_argument("--tol", type=float, default=1e-10)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "sweep":
            cfg = SweepConfig(
                n_values=args.n,
                k_values=args.k,
                a_min=args.a_min,
                a_max=args.a_max,
                a_steps=args.a_steps,
                output_path=args.out,
                precision=args.precision,
                jobs=args.jobs,
            )
            return run_sweep(cfg)
        if args.command == "check":
            return run_check(args.n_max, args.a_steps, args.tol)
        return run_oracle(args.n_max, args.a_steps, args.tol)
    except DicketangleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
