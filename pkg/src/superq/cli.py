"""Command-line interface: state construction, verification suites, tables.

Data goes to standard output with frozen JSON/CSV schemas; diagnostics go to
standard error.  Exit codes: 0 emission or verification succeeded, 1
verification or I/O failure, 2 invalid arguments (including parameter values
the truncated space cannot support).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass

from .entanglement import (
    collapse_probabilities,
    concurrence_gram,
    concurrence_n_state,
    concurrence_superqubit,
    entanglement_entropy_bits,
    entropy_from_z,
)
from .errors import (
    InvalidDimensionError,
    NormalizationError,
    NumericalConsistencyError,
    SingularParameterError,
    TruncationError,
    UnsupportedLevelError,
)
from .fock import DEFAULT_DIM
from .moebius import ExtendedComplex, concurrence_circle, zeta_to_bloch
from .serialize import csv_text, dumps
from .superstate import (
    CoherentParams,
    SuperQubitParams,
    n_superparticle_state,
    pole_probabilities,
    super_coherent_state,
    super_qubit_state,
)
from .uncertainty import (
    GOLDEN_RATIO,
    fibonacci_record,
    quadrature_stats_closed,
    quadrature_stats_numeric,
    variance_quadratures_closed,
)
from .verify import DEFAULT_SEED, DEFAULT_TOL, SUITE_NAMES, run_verify

__all__ = ["main", "RunConfig"]

DIM_ENV_VAR = "SUPERQ_DIM"

SWEEP_HEADER = [
    "theta",
    "phi",
    "zeta_re",
    "zeta_im",
    "concurrence_closed",
    "concurrence_gram",
    "entropy_bits",
    "p0",
    "p1",
    "var_x",
    "var_p",
]

FIBONACCI_HEADER = [
    "n",
    "fib_n",
    "zeta_sq_num",
    "zeta_sq_den",
    "dispersion_num",
    "dispersion_den",
    "dispersion_numeric",
    "golden_gap",
]

_JSON_COMMANDS = {"state", "coherent", "concurrence", "entropy", "uncertainty", "verify"}
_CSV_COMMANDS = {"sweep", "fibonacci"}


class UsageError(ValueError):
    """Invalid flag combination or parameter value (exit code 2)."""


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: command plus every parameter binding it uses."""

    command: str
    dim: int
    tol: float = DEFAULT_TOL
    output: str = "json"
    seed: int = DEFAULT_SEED
    theta: float | None = None
    phi: float = 0.0
    alpha: complex = 0j
    zeta: ExtendedComplex | None = None
    zeta_echo: tuple[float, float] | str = "inf"
    n: int | None = None
    n_max: int = 20
    grid: tuple[int, int] = (25, 25)
    suite: str = "all"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superq",
        description=(
            "Construct super-qubit/super-coherent states on a truncated "
            "fermion-boson space and verify their closed-form properties "
            "against dense matrix oracles."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_dim(p):
        p.add_argument(
            "--dim",
            type=int,
            default=None,
            help=f"Fock truncation size (default {DEFAULT_DIM}, or ${DIM_ENV_VAR})",
        )

    def add_output(p, default):
        p.add_argument(
            "--output",
            choices=("json", "csv"),
            default=default,
            help=f"output format (this command supports only {default})",
        )

    def add_zeta(p):
        p.add_argument("--zeta-re", type=float, default=None, help="Re zeta")
        p.add_argument("--zeta-im", type=float, default=None, help="Im zeta")
        p.add_argument(
            "--zeta-inf",
            action="store_true",
            help="place zeta at the pole of the extended complex plane",
        )

    def add_angles(p):
        p.add_argument("--theta", type=float, default=None, help="polar angle in [0, pi]")
        p.add_argument("--phi", type=float, default=0.0, help="azimuth, reduced mod 2*pi")

    def add_alpha(p):
        p.add_argument("--alpha-re", type=float, default=0.0, help="Re alpha")
        p.add_argument("--alpha-im", type=float, default=0.0, help="Im alpha")

    p_state = sub.add_parser("state", help="emit a super-qubit or n super-particle state")
    add_zeta(p_state)
    add_angles(p_state)
    p_state.add_argument("--n", type=int, default=None, help="emit |n, zeta> instead")
    add_dim(p_state)
    add_output(p_state, "json")

    p_coherent = sub.add_parser("coherent", help="emit a super-coherent state")
    add_zeta(p_coherent)
    add_angles(p_coherent)
    add_alpha(p_coherent)
    add_dim(p_coherent)
    add_output(p_coherent, "json")

    p_conc = sub.add_parser("concurrence", help="closed-form vs Gram concurrence")
    add_zeta(p_conc)
    add_angles(p_conc)
    p_conc.add_argument("--n", type=int, default=None, help="use |n, zeta> instead")
    add_dim(p_conc)
    add_output(p_conc, "json")

    p_entropy = sub.add_parser(
        "entropy", help="one-super-particle sphere geometry: entropy and probabilities"
    )
    add_zeta(p_entropy)
    add_dim(p_entropy)
    add_output(p_entropy, "json")

    p_unc = sub.add_parser("uncertainty", help="quadrature moments, closed vs matrix")
    add_zeta(p_unc)
    add_angles(p_unc)
    add_alpha(p_unc)
    add_dim(p_unc)
    add_output(p_unc, "json")

    p_fib = sub.add_parser("fibonacci", help="Fibonacci dispersion ladder as CSV")
    p_fib.add_argument("--n-max", type=int, default=20, help="last ladder index (>= 3)")
    add_dim(p_fib)
    add_output(p_fib, "csv")

    p_sweep = sub.add_parser("sweep", help="CSV sweep over the (theta, phi) grid")
    add_zeta(p_sweep)
    p_sweep.add_argument(
        "--grid", type=str, default="25,25", help="theta,phi point counts (default 25,25)"
    )
    add_dim(p_sweep)
    add_output(p_sweep, "csv")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "--suite",
        default="all",
        help=f"one of all, {', '.join(SUITE_NAMES)} (default all)",
    )
    add_dim(p_verify)
    p_verify.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_TOL,
        help=(
            "tolerance for closed-vs-oracle numeric comparisons "
            "(structural identities keep pinned tolerances)"
        ),
    )
    p_verify.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help="seed for random-state checks"
    )
    p_verify.add_argument("--n-max", type=int, default=20, help="Fibonacci ladder depth")
    add_output(p_verify, "json")

    return parser


def _resolve_dim(args) -> int:
    if args.dim is not None:
        dim = args.dim
    else:
        raw = os.environ.get(DIM_ENV_VAR)
        if raw is None:
            dim = DEFAULT_DIM
        else:
            try:
                dim = int(raw)
            except ValueError:
                raise UsageError(f"{DIM_ENV_VAR} must be an integer, got {raw!r}")
    if dim < 2:
        raise UsageError(f"--dim must be >= 2, got {dim}")
    return dim


def _resolve_zeta(args) -> tuple[ExtendedComplex, tuple[float, float] | str]:
    has_finite = args.zeta_re is not None or args.zeta_im is not None
    if args.zeta_inf and has_finite:
        raise UsageError("supply either --zeta-re/--zeta-im or --zeta-inf, not both")
    if args.zeta_inf:
        return ExtendedComplex.infinity(), "inf"
    if not has_finite:
        raise UsageError("zeta is required: supply --zeta-re/--zeta-im or --zeta-inf")
    re = args.zeta_re if args.zeta_re is not None else 0.0
    im = args.zeta_im if args.zeta_im is not None else 0.0
    return ExtendedComplex.from_value(complex(re, im)), (re, im)


def _parse_grid(raw: str) -> tuple[int, int]:
    parts = raw.split(",")
    if len(parts) != 2:
        raise UsageError(f"--grid expects T,P, got {raw!r}")
    try:
        t_count, p_count = int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"--grid expects two integers, got {raw!r}")
    if t_count < 1 or p_count < 1:
        raise UsageError(f"--grid counts must be positive, got {raw!r}")
    return t_count, p_count


def _config_from_args(args) -> RunConfig:
    command = args.command
    expected_output = "json" if command in _JSON_COMMANDS else "csv"
    if args.output != expected_output:
        raise UsageError(f"command {command!r} emits {expected_output}, not {args.output}")

    dim = _resolve_dim(args)

    if command == "verify":
        if args.tol <= 0:
            raise UsageError(f"--tol must be positive, got {args.tol}")
        if args.n_max < 3:
            raise UsageError(f"--n-max must be >= 3, got {args.n_max}")
        return RunConfig(
            command=command,
            dim=dim,
            tol=args.tol,
            output=args.output,
            seed=args.seed,
            n_max=args.n_max,
            suite=args.suite,
        )

    if command == "fibonacci":
        if args.n_max < 3:
            raise UsageError(f"--n-max must be >= 3, got {args.n_max}")
        return RunConfig(command=command, dim=dim, output=args.output, n_max=args.n_max)

    zeta, zeta_echo = _resolve_zeta(args)

    if command == "sweep":
        return RunConfig(
            command=command,
            dim=dim,
            output=args.output,
            zeta=zeta,
            zeta_echo=zeta_echo,
            grid=_parse_grid(args.grid),
        )

    if command == "entropy":
        return RunConfig(
            command=command, dim=dim, output=args.output, zeta=zeta, zeta_echo=zeta_echo
        )

    n = getattr(args, "n", None)
    theta = args.theta
    if n is not None:
        if theta is not None:
            raise UsageError("supply either --theta or --n, not both")
        if n < 0:
            raise UsageError(f"--n must be nonnegative, got {n}")
    elif theta is None:
        raise UsageError(f"command {command!r} requires --theta (or --n where supported)")

    alpha = complex(getattr(args, "alpha_re", 0.0), getattr(args, "alpha_im", 0.0))
    return RunConfig(
        command=command,
        dim=dim,
        output=args.output,
        theta=theta,
        phi=args.phi,
        alpha=alpha,
        zeta=zeta,
        zeta_echo=zeta_echo,
        n=n,
    )


def _zeta_payload(config: RunConfig):
    if config.zeta_echo == "inf":
        return "inf"
    return [config.zeta_echo[0], config.zeta_echo[1]]


def _complex_pairs(coeffs) -> list[list[float]]:
    return [[c.real, c.imag] for c in coeffs]


def _emit_state(config: RunConfig) -> str:
    if config.n is not None:
        state = n_superparticle_state(config.n, config.zeta, config.dim)
        closed = concurrence_n_state(config.zeta)
        # fermion-sector weights = pole-collapse probabilities on the zeta sphere
        p0 = state.psi0.norm_sq()
        p1 = state.psi1.norm_sq()
        params = {
            "n": config.n,
            "zeta": _zeta_payload(config),
            "alpha": [config.alpha.real, config.alpha.imag],
        }
    else:
        base = SuperQubitParams(config.theta, config.phi, config.zeta)
        if config.command == "coherent":
            state = super_coherent_state(CoherentParams(config.alpha, base), config.dim)
        else:
            state = super_qubit_state(base, config.dim)
        closed = concurrence_superqubit(base.theta, config.zeta)
        p0, p1 = pole_probabilities(state, config.zeta, config.alpha)
        params = {
            "theta": base.theta,
            "phi": base.phi,
            "zeta": _zeta_payload(config),
            "alpha": [config.alpha.real, config.alpha.imag],
        }
    payload = {
        "dim": config.dim,
        "params": params,
        "psi0": _complex_pairs(state.psi0.coeffs),
        "psi1": _complex_pairs(state.psi1.coeffs),
        "norm": state.norm(),
        "concurrence_closed": closed,
        "concurrence_gram": concurrence_gram(state),
        "entropy_bits": entanglement_entropy_bits(state),
        "p0": p0,
        "p1": p1,
    }
    return dumps(payload)


def _emit_concurrence(config: RunConfig) -> str:
    if config.n is not None:
        state = n_superparticle_state(config.n, config.zeta, config.dim)
        closed = concurrence_n_state(config.zeta)
        params = {"n": config.n, "zeta": _zeta_payload(config)}
    else:
        base = SuperQubitParams(config.theta, config.phi, config.zeta)
        state = super_qubit_state(base, config.dim)
        closed = concurrence_superqubit(base.theta, config.zeta)
        params = {"theta": base.theta, "phi": base.phi, "zeta": _zeta_payload(config)}
    gram = concurrence_gram(state)
    payload = {
        "dim": config.dim,
        "params": params,
        "concurrence_closed": closed,
        "concurrence_gram": gram,
        "abs_difference": abs(closed - gram),
    }
    return dumps(payload)


def _emit_entropy(config: RunConfig) -> str:
    point = zeta_to_bloch(config.zeta)
    closed, z = concurrence_circle(point.theta)
    state = n_superparticle_state(1, config.zeta, config.dim)
    p0, p1 = collapse_probabilities(z)
    payload = {
        "dim": config.dim,
        "params": {"zeta": _zeta_payload(config)},
        "theta1": point.theta,
        "z": z,
        "concurrence_closed": closed,
        "concurrence_gram": concurrence_gram(state),
        "entropy_bits_closed": entropy_from_z(z),
        "entropy_bits_spectral": entanglement_entropy_bits(state),
        "p0": p0,
        "p1": p1,
    }
    return dumps(payload)


def _emit_uncertainty(config: RunConfig) -> str:
    base = SuperQubitParams(config.theta, config.phi, config.zeta)
    params = CoherentParams(config.alpha, base)
    closed = quadrature_stats_closed(params)
    numeric = quadrature_stats_numeric(params, config.dim)
    gap = max(
        abs(closed.mean_x - numeric.mean_x),
        abs(closed.mean_p - numeric.mean_p),
        abs(closed.var_x - numeric.var_x),
        abs(closed.var_p - numeric.var_p),
    )
    def stats_payload(stats):
        return {
            "mean_x": stats.mean_x,
            "mean_p": stats.mean_p,
            "var_x": stats.var_x,
            "var_p": stats.var_p,
            "product": stats.product,
        }
    payload = {
        "dim": config.dim,
        "params": {
            "theta": base.theta,
            "phi": base.phi,
            "zeta": _zeta_payload(config),
            "alpha": [config.alpha.real, config.alpha.imag],
        },
        "closed": stats_payload(closed),
        "numeric": stats_payload(numeric),
        "max_abs_difference": gap,
    }
    return dumps(payload)


def _emit_sweep(config: RunConfig) -> str:
    t_count, p_count = config.grid
    thetas = [math.pi * i / max(t_count - 1, 1) for i in range(t_count)]
    phis = [2.0 * math.pi * j / p_count for j in range(p_count)]
    if config.zeta_echo == "inf":
        zeta_re, zeta_im = math.inf, 0.0
    else:
        zeta_re, zeta_im = config.zeta_echo
    rows = []
    for theta in thetas:
        for phi in phis:
            base = SuperQubitParams(theta, phi, config.zeta)
            state = super_qubit_state(base, config.dim)
            p0, p1 = pole_probabilities(state, config.zeta)
            var_x, var_p = variance_quadratures_closed(CoherentParams(0.0, base))
            rows.append(
                [
                    theta,
                    phi,
                    zeta_re,
                    zeta_im,
                    concurrence_superqubit(base.theta, config.zeta),
                    concurrence_gram(state),
                    entanglement_entropy_bits(state),
                    p0,
                    p1,
                    var_x,
                    var_p,
                ]
            )
    return csv_text(SWEEP_HEADER, rows)


def _emit_fibonacci(config: RunConfig) -> str:
    rows = []
    for n in range(3, config.n_max + 1):
        record = fibonacci_record(n, config.dim)
        rows.append(
            [
                record.n,
                record.fib_n,
                record.zeta_sq.numerator,
                record.zeta_sq.denominator,
                record.dispersion_closed.numerator,
                record.dispersion_closed.denominator,
                record.dispersion_numeric,
                abs(float(record.dispersion_closed) - 1.0 / GOLDEN_RATIO),
            ]
        )
    return csv_text(FIBONACCI_HEADER, rows)


def _run_verify(config: RunConfig) -> int:
    report = run_verify(
        suite=config.suite,
        dim=config.dim,
        tol=config.tol,
        seed=config.seed,
        n_max=config.n_max,
    )
    print(dumps(report.to_payload()))
    if not report.all_passed:
        failed = [check.name for check in report.checks if not check.passed]
        print(f"superq: {len(failed)} check(s) failed: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        if config.command == "verify":
            return _run_verify(config)
        emitters = {
            "state": _emit_state,
            "coherent": _emit_state,
            "concurrence": _emit_concurrence,
            "entropy": _emit_entropy,
            "uncertainty": _emit_uncertainty,
            "sweep": _emit_sweep,
            "fibonacci": _emit_fibonacci,
        }
        print(emitters[config.command](config))
        return 0
    except (
        UsageError,
        TruncationError,
        SingularParameterError,
        InvalidDimensionError,
        UnsupportedLevelError,
        NormalizationError,
        ValueError,
    ) as exc:
        print(f"superq: error: {exc}", file=sys.stderr)
        return 2
    except NumericalConsistencyError as exc:
        print(f"superq: numerical consistency failure: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"superq: I/O failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
