"""Command-line front end.

    alphadtm solve-bvp   --config dirichlet.json [--compare-oracle] [--samples 101] [--out r.csv]
    alphadtm solve-eig   --config robin.json [--emit-poly] [--compare-oracle] [--out e.csv]
    alphadtm sweep-alpha --config dirichlet.json --from 0 --to 1 --steps 11
    alphadtm sweep-order --config dirichlet.json --from 4 --to 16 --steps 13

Exit codes: 0 success, 1 usage error, 2 solver error, 3 config error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Optional, Sequence, TextIO

from .bvp import BoundaryCondition, LinearOde2, error_report, sample_grid, solve_bvp
from .eig import DEFAULT_TOL, EigProblem, characteristic_det, characteristic_entries, solve_eig
from .errors import ConfigError, DtmError
from .exact import ExactCharFn, dirichlet_solution, exact_eigenvalues
from .transform import AlphaParam, Interval, as_rational, evaluate

EXIT_OK, EXIT_USAGE, EXIT_SOLVER, EXIT_CONFIG = 0, 1, 2, 3

BVP_KEYS = {"kind", "a", "b", "alpha", "order", "p", "q", "forcing", "bc1", "bc2", "oracle"}
BVP_REQUIRED = {"kind", "a", "b", "alpha", "order", "bc1", "bc2"}
EIG_KEYS = {"kind", "a", "b", "alpha", "order", "A11", "A12", "A21", "A22",
            "lambda_lo", "lambda_hi", "num_roots", "tol", "oracle"}
EIG_REQUIRED = {"kind", "a", "b", "alpha", "order", "A11", "A12", "A21", "A22",
                "lambda_lo", "lambda_hi"}
BC_KEYS = {"endpoint", "c1", "c2", "rhs"}

BVP_COMPARE_HEADER = ("x", "approx", "exact", "abs_err")
BVP_PLAIN_HEADER = ("x", "approx")
EIG_HEADER = ("index", "lambda_hat", "lambda_exact", "rel_err", "residual")


@dataclass(frozen=True)
class ProblemConfig:
    kind: str
    interval: Interval
    alpha: AlphaParam
    order: int
    ode: Optional[LinearOde2] = None
    bc1: Optional[BoundaryCondition] = None
    bc2: Optional[BoundaryCondition] = None
    boundary: Optional[tuple[Fraction, Fraction, Fraction, Fraction]] = None
    lambda_lo: float = 0.0
    lambda_hi: float = 0.0
    num_roots: Optional[int] = None
    tol: float = DEFAULT_TOL
    oracle: bool = False

    def eig_problem(self, alpha=None, order=None) -> EigProblem:
        return EigProblem(*self.boundary, alpha=alpha if alpha is not None else self.alpha,
                          order=order if order is not None else self.order, interval=self.interval)

    def solve_bvp(self, alpha=None, order=None):
        return solve_bvp(self.ode, self.bc1, self.bc2,
                         alpha if alpha is not None else self.alpha, self.interval,
                         order if order is not None else self.order)


def _rational(doc: dict, key: str, default=None) -> Fraction:
    if key not in doc:
        if default is None:
            raise ConfigError(key, "missing")
        return Fraction(default)
    try:
        return as_rational(doc[key])
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(key, f"not a rational number ({exc})") from None


def _integer(doc: dict, key: str) -> int:
    value = doc.get(key)
    if isinstance(value, bool) or not isinstance(value, (int, Decimal, str)):
        raise ConfigError(key, f"expected an integer, got {value!r}")
    try:
        f = as_rational(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ConfigError(key, f"expected an integer, got {value!r}") from None
    if f.denominator != 1:
        raise ConfigError(key, f"expected an integer, got {value!r}")
    return int(f)


def _check_keys(doc: dict, allowed: set, required: set, where: str = "") -> None:
    for key in doc:
        if key not in allowed:
            raise ConfigError(where + key, "unknown key")
    for key in sorted(required):
        if key not in doc:
            raise ConfigError(where + key, "missing")


def _boundary_condition(doc, key: str) -> BoundaryCondition:
    if not isinstance(doc, dict):
        raise ConfigError(key, "expected an object")
    _check_keys(doc, BC_KEYS, {"endpoint", "c1"}, where=key + ".")
    try:
        return BoundaryCondition(
            doc["endpoint"],
            _rational(doc, "c1"),
            _rational(doc, "c2", 0),
            _rational(doc, "rhs", 0),
        )
    except ConfigError as exc:
        raise ConfigError(f"{key}.{exc.key}", exc.message) from None
    except ValueError as exc:
        raise ConfigError(key, str(exc)) from None


def parse_config(text: str) -> ProblemConfig:
    """Parse and validate a JSON problem config.  Raises :class:`ConfigError`."""
    try:
        doc = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise ConfigError("<document>", f"malformed JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise ConfigError("<document>", "top level must be an object")
    kind = doc.get("kind")
    if kind not in ("bvp", "eig"):
        raise ConfigError("kind", f"must be 'bvp' or 'eig', got {kind!r}")
    if kind == "bvp":
        _check_keys(doc, BVP_KEYS, BVP_REQUIRED)
    else:
        _check_keys(doc, EIG_KEYS, EIG_REQUIRED)

    try:
        interval = Interval(_rational(doc, "a"), _rational(doc, "b"))
    except ValueError as exc:
        raise ConfigError("b", str(exc)) from None
    alpha_value = _rational(doc, "alpha")
    try:
        alpha = AlphaParam(alpha_value)
    except ValueError as exc:
        raise ConfigError("alpha", f"out of range: {exc}") from None
    order = _integer(doc, "order")
    if order < 1:
        raise ConfigError("order", f"out of range: must be at least 1, got {order}")
    oracle = doc.get("oracle", False)
    if not isinstance(oracle, bool):
        raise ConfigError("oracle", "expected true or false")

    if kind == "bvp":
        forcing = doc.get("forcing", [])
        if not isinstance(forcing, list):
            raise ConfigError("forcing", "expected a list of coefficients")
        try:
            forcing = [as_rational(c) for c in forcing]
        except (TypeError, ValueError, ZeroDivisionError):
            raise ConfigError("forcing", "coefficients must be rational") from None
        if len(forcing) > order + 1:
            raise ConfigError("forcing", f"degree exceeds order {order}")
        ode = LinearOde2(_rational(doc, "p", 0), _rational(doc, "q", 0), tuple(forcing))
        return ProblemConfig(
            "bvp", interval, alpha, order, ode=ode,
            bc1=_boundary_condition(doc["bc1"], "bc1"),
            bc2=_boundary_condition(doc["bc2"], "bc2"),
            oracle=oracle,
        )

    boundary = tuple(_rational(doc, k) for k in ("A11", "A12", "A21", "A22"))
    if boundary[0] == 0 and boundary[1] == 0:
        raise ConfigError("A11", "left boundary row (A11, A12) is zero")
    if boundary[2] == 0 and boundary[3] == 0:
        raise ConfigError("A21", "right boundary row (A21, A22) is zero")
    lo, hi = float(_rational(doc, "lambda_lo")), float(_rational(doc, "lambda_hi"))
    if not lo < hi:
        raise ConfigError("lambda_hi", "must exceed lambda_lo")
    num_roots = doc.get("num_roots")
    if num_roots is not None:
        num_roots = _integer(doc, "num_roots")
        if num_roots < 1:
            raise ConfigError("num_roots", "must be positive")
    tol = float(_rational(doc, "tol", 0)) if "tol" in doc else DEFAULT_TOL
    if not tol > 0:
        raise ConfigError("tol", "must be positive")
    return ProblemConfig(
        "eig", interval, alpha, order, boundary=boundary,
        lambda_lo=lo, lambda_hi=hi, num_roots=num_roots, tol=tol, oracle=oracle,
    )


def fmt(x, exact: bool = False) -> str:
    """17 significant digits, or ``num/den`` for rationals when ``exact``."""
    if exact and isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    return format(float(x), ".17g")


def write_csv(out: TextIO, header: Sequence[str], rows: Sequence[Sequence[str]]) -> None:
    lines = [",".join(header)] + [",".join(r) for r in rows]
    out.write("\n".join(lines) + "\n")


def bvp_oracle(cfg: ProblemConfig) -> Callable[[float], float]:
    """Closed form for y'' + mu^2 y = 0 on [0, 1] with y(0) = 0 and y(1) given."""
    ode = cfg.ode
    bcs = {bc.endpoint: bc for bc in (cfg.bc1, cfg.bc2)}
    ok = (
        cfg.interval == Interval(0, 1)
        and ode.p == 0 and not any(ode.forcing) and ode.q > 0
        and set(bcs) == {"left", "right"}
        and bcs["left"].c2 == 0 and bcs["left"].rhs == 0
        and bcs["right"].c2 == 0
    )
    if not ok:
        raise ConfigError(
            "oracle",
            "exact solution only available for y'' + q y = 0 (q > 0) on [0, 1] "
            "with y(0) = 0 and a Dirichlet value at x = 1",
        )
    mu = math.sqrt(ode.q)
    amp = float(bcs["right"].rhs / bcs["right"].c1)
    return lambda x: amp * dirichlet_solution(mu, x)


def eig_oracle(cfg: ProblemConfig) -> list[float]:
    if cfg.interval != Interval(0, 1):
        raise ConfigError("oracle", "exact spectrum only available on [0, 1]")
    mu_hi = math.sqrt(max(cfg.lambda_hi, 1.0)) * 1.25 + 1.0
    report = exact_eigenvalues(ExactCharFn(*(float(c) for c in cfg.boundary)), 1e-6, mu_hi, 20_000)
    return [r.lam for r in report.roots]


def _nearest_rel_err(lam: float, spectrum: Sequence[float]) -> tuple[float, float]:
    if lam <= 0 or not spectrum:
        return math.nan, math.nan
    ref = min(spectrum, key=lambda s: abs(s - lam))
    return ref, abs(lam - ref) / abs(ref)


def bvp_rows(cfg: ProblemConfig, samples: int, compare: bool, exact: bool):
    sol = cfg.solve_bvp()
    if compare:
        rep = error_report(sol, bvp_oracle(cfg), samples)
        xs = sample_grid(cfg.interval, samples)
        rows = [
            (fmt(xq, exact), fmt(sol(xq), exact), fmt(e), fmt(err))
            for xq, e, err in zip(xs, rep.exact, rep.abs_err)
        ]
        return BVP_COMPARE_HEADER, rows
    rows = [(fmt(xq, exact), fmt(evaluate(sol.series, xq), exact)) for xq in sample_grid(cfg.interval, samples)]
    return BVP_PLAIN_HEADER, rows


def eig_rows(cfg: ProblemConfig, compare: bool):
    pairs = solve_eig(cfg.eig_problem(), (cfg.lambda_lo, cfg.lambda_hi), cfg.num_roots, cfg.tol)
    spectrum = eig_oracle(cfg) if compare else []
    rows = []
    for i, pair in enumerate(pairs, start=1):
        ref, rel = _nearest_rel_err(pair.lambda_hat, spectrum) if compare else (math.nan, math.nan)
        rows.append((str(i), fmt(pair.lambda_hat), fmt(ref), fmt(rel), fmt(pair.root.residual)))
    return EIG_HEADER, rows


def sweep_error(cfg: ProblemConfig, alpha, order: int, samples: int) -> float:
    """Sup-norm error (bvp) or worst relative eigenvalue error (eig)."""
    if cfg.kind == "bvp":
        sol = cfg.solve_bvp(alpha=alpha, order=order)
        return error_report(sol, bvp_oracle(cfg), samples).sup_norm
    spectrum = eig_oracle(cfg)
    pairs = solve_eig(cfg.eig_problem(alpha, order), (cfg.lambda_lo, cfg.lambda_hi), cfg.num_roots, cfg.tol)
    errs = [_nearest_rel_err(p.lambda_hat, spectrum)[1] for p in pairs if p.lambda_hat > 0]
    return max(errs) if errs else math.nan


def sweep_points(lo: Fraction, hi: Fraction, steps: int) -> list[Fraction]:
    if steps < 1:
        raise ConfigError("--steps", "must be positive")
    if steps == 1:
        return [lo]
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alphadtm", description="alpha-parameterized differential transform solvers")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--config", required=True, help="path to a JSON problem config")
        p.add_argument("--out", help="CSV destination (default: standard output)")
        p.add_argument("--samples", type=int, default=101)
        p.add_argument("--exact-rationals", action="store_true",
                       help="render rational cells as num/den")

    p = sub.add_parser("solve-bvp", help="solve a two-point boundary-value problem")
    common(p)
    p.add_argument("--compare-oracle", action="store_true")

    p = sub.add_parser("solve-eig", help="approximate Sturm-Liouville eigenvalues")
    common(p)
    p.add_argument("--compare-oracle", action="store_true")
    p.add_argument("--emit-poly", action="store_true",
                   help="print the exact characteristic polynomial")

    for name in ("sweep-alpha", "sweep-order"):
        p = sub.add_parser(name, help=f"error as a function of {name.split('-')[1]}")
        common(p)
        p.add_argument("--from", dest="start", required=True)
        p.add_argument("--to", dest="stop", required=True)
        p.add_argument("--steps", type=int, required=True)
    return parser


def _read_config(path: str) -> ProblemConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError("--config", f"cannot read {path} ({exc.strerror})") from None
    return parse_config(text)


def _flag_rational(name: str, text: str) -> Fraction:
    try:
        return as_rational(text)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ConfigError(name, f"not a rational number: {text!r}") from None


def _dispatch(args, stdout: TextIO) -> None:
    cfg = _read_config(args.config)
    if args.samples < 2:
        raise ConfigError("--samples", "must be at least 2")
    compare = getattr(args, "compare_oracle", False) or cfg.oracle
    exact = args.exact_rationals

    if args.command == "solve-bvp":
        if cfg.kind != "bvp":
            raise ConfigError("kind", "solve-bvp needs a bvp config")
        header, rows = bvp_rows(cfg, args.samples, compare, exact)
    elif args.command == "solve-eig":
        if cfg.kind != "eig":
            raise ConfigError("kind", "solve-eig needs an eig config")
        if args.emit_poly:
            det = characteristic_det(characteristic_entries(cfg.eig_problem()))
            stdout.write(det.format() + "\n")
            if args.out is None:
                return
        header, rows = eig_rows(cfg, compare)
    elif args.command == "sweep-alpha":
        alphas = sweep_points(_flag_rational("--from", args.start), _flag_rational("--to", args.stop), args.steps)
        for a in alphas:
            if not 0 <= a <= 1:
                raise ConfigError("--from/--to", f"alpha {a} outside [0, 1]")
        header = ("alpha", "sup_norm_error")
        rows = [(fmt(a, exact), fmt(sweep_error(cfg, a, cfg.order, args.samples))) for a in alphas]
    else:
        pts = sweep_points(_flag_rational("--from", args.start), _flag_rational("--to", args.stop), args.steps)
        orders = sorted({round(p) for p in pts})
        if orders[0] < 1:
            raise ConfigError("--from", "orders must be at least 1")
        header = ("order", "sup_norm_error")
        rows = [(str(n), fmt(sweep_error(cfg, cfg.alpha, n, args.samples))) for n in orders]

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            write_csv(fh, header, rows)
    else:
        write_csv(stdout, header, rows)


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        _dispatch(args, stdout)
    except ConfigError as exc:
        stderr.write(f"config error: {exc}\n")
        return EXIT_CONFIG
    except DtmError as exc:
        stderr.write(f"solver error: {exc}\n")
        return EXIT_SOLVER
    return EXIT_OK


def main() -> None:
    sys.exit(run())
