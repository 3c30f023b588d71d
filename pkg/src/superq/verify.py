"""Deterministic verification suites pairing closed forms with matrix oracles.

Each suite walks a fixed parameter grid (and a seeded random-state pool where
randomness helps) and reduces every family of residuals to named checks.
Structural identities carry pinned tolerances; closed-vs-oracle numeric
comparisons use the configurable ``tol``.  Boolean conditions report residual
0.0 on success and 1.0 on failure against tolerance 0.

The same configuration (including the seed) always produces the same checks
in the same order.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .entanglement import (
    collapse_probabilities,
    concurrence_gram,
    concurrence_n_state,
    concurrence_superqubit,
    displacement_invariance_check,
    entanglement_entropy_bits,
    entropy_from_z,
    reduced_boson_density,
)
from .errors import InvalidDimensionError
from .fock import DEFAULT_DIM, FockVector, displacement_operator
from .moebius import ExtendedComplex, zeta_to_bloch
from .superstate import (
    CoherentParams,
    SuperQubitParams,
    SuperVector,
    commutator_suite,
    flip_operator,
    flip_state,
    guarded_max_abs,
    guarded_norm,
    n_superparticle_state,
    pole_probabilities,
    super_annihilation,
    super_annihilation_transposed,
    super_creation_gate,
    super_number_operator,
    super_qubit_state,
)
from .uncertainty import (
    GOLDEN_RATIO,
    fibonacci_number,
    fibonacci_record,
    quadrature_operators,
    quadrature_stats_closed,
    quadrature_stats_numeric,
    variance_quadratures_closed,
)

__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_TOL",
    "SUITE_NAMES",
    "Check",
    "VerificationReport",
    "run_verify",
]

DEFAULT_SEED = 12345
DEFAULT_TOL = 1e-8

# 5 x 5 x 5 reference grid: angles cover both poles, moduli span [0.25, 4].
_THETAS = tuple(np.linspace(0.0, math.pi, 5))
_PHIS = tuple(np.linspace(0.0, 2.0 * math.pi, 5, endpoint=False))
_ZETA_MODULI = (0.25, 0.5, 1.0, 2.0, 4.0)
_ZETA_PHASES = (0.0, 1.2, 2.5, 3.7, 5.0)

# Coherent amplitudes for eigenrelation checks, all with |alpha| <= 2.
_EIGEN_ALPHAS = (1.2 - 0.3j, -0.7 + 1.8j, 1.9 + 0.6j)

_BOOL_PASS = 0.0
_BOOL_FAIL = 1.0


@dataclass(frozen=True)
class Check:
    """One named residual against its tolerance."""

    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one suite run, reproducible for a fixed configuration."""

    suite: str
    dim: int
    tol: float
    seed: int
    n_max: int
    checks: tuple[Check, ...]
    wall_time_ms: float

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def passed(self) -> int:
        return sum(1 for check in self.checks if check.passed)

    @property
    def max_residual(self) -> float:
        return max((check.residual for check in self.checks), default=0.0)

    @property
    def all_passed(self) -> bool:
        return self.passed == self.total

    def to_payload(self) -> dict:
        """JSON-ready mapping; wall_time_ms is the only non-reproducible field."""
        return {
            "suite": self.suite,
            "dim": self.dim,
            "tol": self.tol,
            "seed": self.seed,
            "n_max": self.n_max,
            "checks": [
                {
                    "name": check.name,
                    "residual": check.residual,
                    "tolerance": check.tolerance,
                    "pass": check.passed,
                }
                for check in self.checks
            ],
            "summary": {
                "total": self.total,
                "passed": self.passed,
                "max_residual": self.max_residual,
                "wall_time_ms": self.wall_time_ms,
            },
        }


def _zeta_grid() -> list[ExtendedComplex]:
    return [
        ExtendedComplex.from_value(mod * cmath.exp(1j * phase))
        for mod, phase in zip(_ZETA_MODULI, _ZETA_PHASES)
    ]


def _angle_grid(stride: int = 1) -> list[tuple[float, float]]:
    return [(theta, phi) for theta in _THETAS[::stride] for phi in _PHIS[::stride]]


def _random_super_vector(rng: np.random.Generator, dim: int) -> SuperVector:
    raw = rng.standard_normal(2 * dim) + 1j * rng.standard_normal(2 * dim)
    raw /= np.linalg.norm(raw)
    return SuperVector(FockVector(raw[:dim]), FockVector(raw[dim:]))


def _displace_blocks(d: np.ndarray, state: SuperVector) -> SuperVector:
    return SuperVector(
        FockVector(d @ state.psi0.coeffs), FockVector(d @ state.psi1.coeffs)
    )


def _suite_algebra(dim: int, tol: float) -> list[Check]:
    zetas = _zeta_grid() + [ExtendedComplex.infinity()]
    flip = flip_operator(dim)
    lowering = raising = ladder = 0.0
    transpose = 0.0
    gate = 0.0
    for zeta in zetas:
        residuals = commutator_suite(zeta, dim)
        lowering = max(lowering, residuals.number_lowering)
        raising = max(raising, residuals.number_raising)
        ladder = max(ladder, residuals.ladder)
        conjugated = (flip @ super_annihilation(zeta, dim) @ flip).full()
        transpose = max(
            transpose,
            float(
                np.abs(conjugated - super_annihilation_transposed(zeta, dim).full()).max()
            ),
        )
        raised = super_creation_gate(zeta, dim).apply(n_superparticle_state(0, zeta, dim))
        gate = max(gate, (raised - n_superparticle_state(1, zeta, dim)).norm())

    involution = float(np.abs((flip @ flip).full() - np.eye(2 * dim)).max())

    boson_eye = np.eye(dim)
    tensor_split = float(
        np.abs(
            super_number_operator(dim).full()
            - np.kron(np.diag([0.0, 1.0]), boson_eye)
            - np.kron(np.eye(2), np.diag(np.arange(dim)))
        ).max()
    )
    fermion_number = np.kron(np.diag([0.0, 1.0]), boson_eye)
    flipped_number = flip.full() @ fermion_number @ flip.full()
    number_conjugation = float(
        np.abs(flipped_number - np.kron(np.diag([1.0, 0.0]), boson_eye)).max()
    )

    alpha = 0.9 + 0.4j
    d = displacement_operator(alpha, dim)
    commute = 0.0
    for zeta in _zeta_grid():
        state = super_qubit_state(SuperQubitParams(1.3, 0.7, zeta), dim)
        commute = max(
            commute,
            (
                flip_state(_displace_blocks(d, state))
                - _displace_blocks(d, flip_state(state))
            ).norm(),
        )

    x_op, p_op = quadrature_operators(dim)
    hermiticity = max(
        float(np.abs(x_op.full() - x_op.full().conj().T).max()),
        float(np.abs(p_op.full() - p_op.full().conj().T).max()),
    )
    canonical = guarded_max_abs(
        (x_op @ p_op - p_op @ x_op).full() - 1j * np.eye(2 * dim), dim
    )

    return [
        Check("commutator_number_lowering", lowering, 1e-10),
        Check("commutator_number_raising", raising, 1e-10),
        Check("commutator_ladder", ladder, 1e-10),
        Check("flip_involution", involution, 0.0),
        Check("flip_transposes_annihilation", transpose, 0.0),
        Check("super_number_tensor_split", tensor_split, 0.0),
        Check("flip_conjugates_fermion_number", number_conjugation, 0.0),
        Check("creation_gate_raises_vacuum", gate, 1e-12),
        Check("flip_commutes_with_displacement", commute, 1e-12),
        Check("quadrature_hermiticity", hermiticity, 1e-14),
        Check("quadrature_canonical_commutator", canonical, 1e-12),
    ]


def _suite_eigen(dim: int, tol: float) -> list[Check]:
    references = {}
    reference_residual = 0.0
    for zeta in _zeta_grid():
        a_op = super_annihilation(zeta, dim)
        for theta, phi in _angle_grid():
            state = super_qubit_state(SuperQubitParams(theta, phi, zeta), dim)
            references[(theta, phi, zeta)] = state
            reference_residual = max(reference_residual, a_op.apply(state).norm())

    coherent_residual = 0.0
    flipped_residual = 0.0
    for alpha in _EIGEN_ALPHAS:
        d = displacement_operator(alpha, dim)
        for zeta in _zeta_grid():
            a_op = super_annihilation(zeta, dim)
            at_op = super_annihilation_transposed(zeta, dim)
            for theta, phi in _angle_grid():
                coherent = _displace_blocks(d, references[(theta, phi, zeta)])
                residual = a_op.apply(coherent) - alpha * coherent
                coherent_residual = max(
                    coherent_residual, guarded_norm(residual) / coherent.norm()
                )
                flipped = flip_state(coherent)
                residual = at_op.apply(flipped) - alpha * flipped
                flipped_residual = max(
                    flipped_residual, guarded_norm(residual) / flipped.norm()
                )

    return [
        Check("reference_annihilation", reference_residual, 1e-10),
        Check("coherent_eigenrelation", coherent_residual, tol),
        Check("flipped_coherent_eigenrelation", flipped_residual, tol),
    ]


def _suite_entangle(dim: int, tol: float, rng: np.random.Generator) -> list[Check]:
    zetas = _zeta_grid()

    closed_vs_gram = 0.0
    n_spread = 0.0
    geometric = 0.0
    for zeta in zetas:
        values = []
        for n in (1, 2, 5):
            state = n_superparticle_state(n, zeta, dim)
            gram = concurrence_gram(state)
            values.append(gram)
            closed_vs_gram = max(closed_vs_gram, abs(gram - concurrence_n_state(zeta)))
        n_spread = max(n_spread, max(values) - min(values))
        closed = concurrence_n_state(zeta)
        point = zeta_to_bloch(zeta)
        # z compared in the homogeneous form v^2 - |u|^2; the equivalent
        # sqrt(1 - C^2) is ill-conditioned where C is close to 1
        height = zeta.v.real**2 - abs(zeta.u) ** 2
        geometric = max(
            geometric,
            abs(closed - math.sin(point.theta)),
            abs(height - math.cos(point.theta)),
        )

    superqubit_gap = 0.0
    probability_gap = 0.0
    for zeta in zetas:
        for theta, phi in _angle_grid():
            state = super_qubit_state(SuperQubitParams(theta, phi, zeta), dim)
            superqubit_gap = max(
                superqubit_gap,
                abs(concurrence_gram(state) - concurrence_superqubit(theta, zeta)),
            )
            p0, p1 = pole_probabilities(state, zeta)
            probability_gap = max(
                probability_gap,
                abs(p0 - math.cos(0.5 * theta) ** 2),
                abs(p1 - math.sin(0.5 * theta) ** 2),
            )

    alpha_invariance = 0.0
    flip_invariance = 0.0
    for zeta in zetas:
        for theta, phi in _angle_grid(stride=2):
            params = CoherentParams(1.5, SuperQubitParams(theta, phi, zeta))
            alpha_invariance = max(
                alpha_invariance, displacement_invariance_check(params, dim)
            )
            state = super_qubit_state(params.base, dim)
            flip_invariance = max(
                flip_invariance,
                abs(concurrence_gram(flip_state(state)) - concurrence_gram(state)),
            )

    gram_purity = 0.0
    rank_bound = 0.0
    spectral_gap = 0.0
    for _ in range(12):
        state = _random_super_vector(rng, dim)
        c_gram = concurrence_gram(state)
        rho = reduced_boson_density(state)
        gram_purity = max(gram_purity, abs(c_gram**2 - 2.0 * (1.0 - rho.purity())))
        eigenvalues = np.sort(rho.eigenvalues())[::-1]
        if dim > 2:
            rank_bound = max(rank_bound, float(abs(eigenvalues[2])))
        spectral = float(
            -sum(lam * math.log2(lam) for lam in eigenvalues if lam > 1e-16)
        )
        spectral_gap = max(
            spectral_gap,
            abs(spectral - entropy_from_z(math.sqrt(max(0.0, 1.0 - c_gram**2)))),
        )
    for zeta in zetas:
        state = n_superparticle_state(1, zeta, dim)
        c_gram = concurrence_gram(state)
        spectral_gap = max(
            spectral_gap,
            abs(
                entanglement_entropy_bits(state)
                - entropy_from_z(math.sqrt(max(0.0, 1.0 - c_gram**2)))
            ),
        )

    pole_entropy = max(
        abs(entropy_from_z(0.0) - 1.0),
        abs(entropy_from_z(1.0)),
        abs(entropy_from_z(-1.0)),
        abs(sum(collapse_probabilities(0.37)) - 1.0),
    )

    return [
        Check("n_state_concurrence_closed_vs_gram", closed_vs_gram, 1e-10),
        Check("n_state_concurrence_n_independence", n_spread, 1e-12),
        Check("superqubit_concurrence_closed_vs_gram", superqubit_gap, 1e-10),
        Check("alpha_invariance_of_concurrence", alpha_invariance, tol),
        Check("flip_invariance_of_concurrence", flip_invariance, 1e-12),
        Check("gram_purity_identity", gram_purity, 1e-10),
        Check("density_rank_bound", rank_bound, 1e-10),
        Check("spectral_entropy_matches_closed_form", spectral_gap, 1e-9),
        Check("entropy_pole_values", pole_entropy, 0.0),
        Check("geometric_concurrence_identity", geometric, 1e-12),
        Check("pole_probability_identity", probability_gap, 1e-12),
    ]


def _suite_uncertainty(dim: int, tol: float) -> list[Check]:
    zetas = _zeta_grid()

    mean_gap = 0.0
    var_gap = 0.0
    alpha_independence = 0.0
    for zeta in zetas:
        for theta, phi in _angle_grid(stride=2):
            base = SuperQubitParams(theta, phi, zeta)
            numeric_at_zero = quadrature_stats_numeric(CoherentParams(0.0, base), dim)
            for alpha in (0.0, 1.1 - 0.6j):
                params = CoherentParams(alpha, base)
                closed = quadrature_stats_closed(params)
                numeric = quadrature_stats_numeric(params, dim)
                mean_gap = max(
                    mean_gap,
                    abs(closed.mean_x - numeric.mean_x),
                    abs(closed.mean_p - numeric.mean_p),
                )
                var_gap = max(
                    var_gap,
                    abs(closed.var_x - numeric.var_x),
                    abs(closed.var_p - numeric.var_p),
                )
                alpha_independence = max(
                    alpha_independence,
                    abs(numeric.var_x - numeric_at_zero.var_x),
                    abs(numeric.var_p - numeric_at_zero.var_p),
                )

    symmetric_closed = 0.0
    symmetric_numeric = 0.0
    variance_floor = 0.0
    for zeta in zetas:
        for theta in _THETAS:
            params = CoherentParams(0.0, SuperQubitParams(theta, 0.25 * math.pi, zeta))
            var_x, var_p = variance_quadratures_closed(params)
            symmetric_closed = max(symmetric_closed, abs(var_x - var_p))
            variance_floor = max(variance_floor, 0.5 - min(var_x, var_p))
            numeric = quadrature_stats_numeric(params, dim)
            symmetric_numeric = max(symmetric_numeric, abs(numeric.var_x - numeric.var_p))

    fib_point = CoherentParams(
        0.0,
        SuperQubitParams(0.5 * math.pi, 0.25 * math.pi, ExtendedComplex.from_value(1.0)),
    )
    closed_58 = variance_quadratures_closed(fib_point)
    five_eighths_closed = max(abs(closed_58[0] - 0.625), abs(closed_58[1] - 0.625))
    numeric_58 = quadrature_stats_numeric(fib_point, dim)
    five_eighths_numeric = max(
        abs(numeric_58.var_x - 0.625), abs(numeric_58.var_p - 0.625)
    )

    golden_zeta = ExtendedComplex.from_value(math.sqrt(GOLDEN_RATIO - 0.5))
    golden_params = CoherentParams(
        0.0, SuperQubitParams(0.5 * math.pi, 0.25 * math.pi, golden_zeta)
    )
    golden_var = variance_quadratures_closed(golden_params)
    golden_gap = max(
        abs(golden_var[0] - 1.0 / GOLDEN_RATIO), abs(golden_var[1] - 1.0 / GOLDEN_RATIO)
    )

    return [
        Check("mean_quadratures_closed_vs_matrix", mean_gap, tol),
        Check("variance_quadratures_closed_vs_matrix", var_gap, tol),
        Check("variance_alpha_independence", alpha_independence, tol),
        Check("symmetric_point_variance_equality_closed", symmetric_closed, 1e-12),
        Check("symmetric_point_variance_equality_numeric", symmetric_numeric, tol),
        Check("five_eighths_point_closed", five_eighths_closed, 1e-15),
        Check("five_eighths_point_numeric", five_eighths_numeric, tol),
        Check("variance_floor_on_symmetric_family", variance_floor, 1e-10),
        Check("golden_point_variance", golden_gap, 1e-14),
    ]


def _suite_fibonacci(dim: int, tol: float, n_max: int) -> list[Check]:
    if n_max < 3:
        raise ValueError(f"n_max must be >= 3, got {n_max}")
    checks = []
    previous_gap = None
    previous_sign = None
    alternation_ok = True
    monotone_ok = True
    for n in range(3, n_max + 1):
        record = fibonacci_record(n, dim)
        f_nm2 = fibonacci_number(n - 2)
        f_nm1 = fibonacci_number(n - 1)
        f_np1 = fibonacci_number(n + 1)
        exact_ok = (
            record.zeta_sq == Fraction(f_nm1, f_nm2) - Fraction(1, 2)
            and record.dispersion_closed == Fraction(record.fib_n, f_np1)
            and (1 + Fraction(1, 2) / (1 + record.zeta_sq)) / 2
            == record.dispersion_closed
            and 2 * f_nm1 + f_nm2 == f_np1
            and f_np1 + f_nm2 == 2 * record.fib_n
        )
        numeric_gap = abs(record.dispersion_numeric - float(record.dispersion_closed))
        residual = numeric_gap if exact_ok else _BOOL_FAIL
        checks.append(Check(f"fibonacci_record[n={n}]", residual, tol))

        sign = 1 if float(record.zeta_sq) > GOLDEN_RATIO - 0.5 else -1
        if previous_sign is not None and sign == previous_sign:
            alternation_ok = False
        previous_sign = sign
        gap = abs(float(record.dispersion_closed) - 1.0 / GOLDEN_RATIO)
        if previous_gap is not None and gap >= previous_gap:
            monotone_ok = False
        previous_gap = gap

    checks.append(
        Check(
            "fibonacci_circle_sign_alternation",
            _BOOL_PASS if alternation_ok else _BOOL_FAIL,
            0.0,
        )
    )
    checks.append(
        Check(
            "fibonacci_dispersion_monotone_convergence",
            _BOOL_PASS if monotone_ok else _BOOL_FAIL,
            0.0,
        )
    )
    if n_max >= 20:
        record20 = fibonacci_record(20, dim)
        checks.append(
            Check(
                "golden_gap_at_n20",
                abs(float(record20.dispersion_closed) - 1.0 / GOLDEN_RATIO),
                1e-7,
            )
        )
    return checks


SUITE_NAMES = ("algebra", "eigen", "entangle", "uncertainty", "fibonacci")


def run_verify(
    suite: str = "all",
    dim: int = DEFAULT_DIM,
    tol: float = DEFAULT_TOL,
    seed: int = DEFAULT_SEED,
    n_max: int = 20,
) -> VerificationReport:
    """Run one named suite (or ``all``) and collect its checks.

    Raises ValueError for an unknown suite name; numeric infeasibility such
    as a displacement guard violation propagates as TruncationError.
    """
    if suite != "all" and suite not in SUITE_NAMES:
        raise ValueError(
            f"unknown suite {suite!r}; choose from {('all',) + SUITE_NAMES}"
        )
    if dim < 2:
        raise InvalidDimensionError(f"dim must be >= 2, got {dim}")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")

    started = time.perf_counter()
    selected = SUITE_NAMES if suite == "all" else (suite,)
    checks: list[Check] = []
    for name in selected:
        if name == "algebra":
            checks.extend(_suite_algebra(dim, tol))
        elif name == "eigen":
            checks.extend(_suite_eigen(dim, tol))
        elif name == "entangle":
            checks.extend(_suite_entangle(dim, tol, np.random.default_rng(seed)))
        elif name == "uncertainty":
            checks.extend(_suite_uncertainty(dim, tol))
        elif name == "fibonacci":
            checks.extend(_suite_fibonacci(dim, tol, n_max))
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return VerificationReport(
        suite=suite,
        dim=dim,
        tol=tol,
        seed=seed,
        n_max=n_max,
        checks=tuple(checks),
        wall_time_ms=elapsed_ms,
    )
