"""Quadrature statistics of super-coherent states and the Fibonacci ladder.

Closed-form means and dispersions are paired with a dense matrix-expectation
oracle.  The Fibonacci records are exact integer/rational arithmetic,
converted to floating point only where they meet the numeric oracle; their
dispersions converge to the inverse Golden Ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .fock import DEFAULT_DIM, boson_annihilator
from .moebius import BlochPoint, ExtendedComplex, bloch_cartesian
from .superstate import (
    BlockOperator,
    CoherentParams,
    SuperQubitParams,
    super_coherent_state,
)

__all__ = [
    "GOLDEN_RATIO",
    "QuadratureStats",
    "FibonacciRecord",
    "quadrature_operators",
    "mean_quadratures_closed",
    "variance_quadratures_closed",
    "quadrature_stats_closed",
    "quadrature_stats_numeric",
    "fibonacci_number",
    "fibonacci_record",
    "golden_limit",
]

GOLDEN_RATIO = 0.5 * (1.0 + math.sqrt(5.0))

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class QuadratureStats:
    """First and second moments of the X and P quadratures (hbar = 1).

    ``product`` is the uncertainty product Delta X * Delta P, which equals the
    common variance whenever the two variances coincide.
    """

    mean_x: float
    mean_p: float
    var_x: float
    var_p: float
    product: float


@dataclass(frozen=True)
class FibonacciRecord:
    """Row of the Fibonacci dispersion ladder.

    zeta_sq and dispersion_closed are exact rationals; dispersion_numeric is
    the matrix-oracle variance of the state on the circle |zeta|^2 = zeta_sq
    at the symmetric point theta = pi/2, phi = pi/4.
    """

    n: int
    fib_n: int
    zeta_sq: Fraction
    dispersion_closed: Fraction
    dispersion_numeric: float


def quadrature_operators(dim: int) -> tuple[BlockOperator, BlockOperator]:
    """X = (a + a^dag)/sqrt2 and P = i (a^dag - a)/sqrt2 on both fermion blocks."""
    a = boson_annihilator(dim)
    ad = a.conj().T
    x = (a + ad) / _SQRT2
    p = 1j * (ad - a) / _SQRT2
    return BlockOperator.boson_diagonal(x), BlockOperator.boson_diagonal(p)


def mean_quadratures_closed(params: CoherentParams) -> tuple[float, float]:
    """Closed-form quadrature means of a super-coherent state.

    The displacement contributes the classical point (sqrt2 Re alpha,
    sqrt2 Im alpha); the reference state adds the Bloch-vector projection
    with weight 1 / (sqrt2 sqrt(1 + |zeta|^2)), which vanishes at
    zeta = infinity.
    """
    cart = bloch_cartesian(BlochPoint(params.base.theta, params.base.phi))
    weight = params.base.zeta.v.real / _SQRT2  # 1/(sqrt2 sqrt(1+|zeta|^2))
    mean_x = _SQRT2 * params.alpha.real + cart.x * weight
    mean_p = _SQRT2 * params.alpha.imag + cart.y * weight
    return mean_x, mean_p


def variance_quadratures_closed(params: CoherentParams) -> tuple[float, float]:
    """Closed-form quadrature variances; independent of alpha.

    var X = (1 + (1 - z - x^2)/(1 + |zeta|^2)) / 2 and the same for P with
    y in place of x, where (x, y, z) is the Cartesian Bloch vector of
    (theta, phi).
    """
    cart = bloch_cartesian(BlochPoint(params.base.theta, params.base.phi))
    weight = params.base.zeta.v.real ** 2  # 1/(1+|zeta|^2)
    var_x = 0.5 * (1.0 + (1.0 - cart.z - cart.x**2) * weight)
    var_p = 0.5 * (1.0 + (1.0 - cart.z - cart.y**2) * weight)
    return var_x, var_p


def quadrature_stats_closed(params: CoherentParams) -> QuadratureStats:
    """Closed-form moments packed with the uncertainty product."""
    mean_x, mean_p = mean_quadratures_closed(params)
    var_x, var_p = variance_quadratures_closed(params)
    return QuadratureStats(mean_x, mean_p, var_x, var_p, math.sqrt(var_x * var_p))


def quadrature_stats_numeric(params: CoherentParams, dim: int = DEFAULT_DIM) -> QuadratureStats:
    """Matrix-expectation oracle for the closed quadrature formulas.

    Builds the state and the dense quadrature matrices, then evaluates
    <X>, <X^2> - <X>^2 (and the same for P) directly; <X^2> is computed as
    ||X psi||^2 since X is Hermitian.
    """
    state = super_coherent_state(params, dim)
    x_op, p_op = quadrature_operators(dim)
    x_state = x_op.apply(state)
    p_state = p_op.apply(state)
    mean_x = state.inner(x_state).real
    mean_p = state.inner(p_state).real
    var_x = x_state.norm_sq() - mean_x**2
    var_p = p_state.norm_sq() - mean_p**2
    return QuadratureStats(mean_x, mean_p, var_x, var_p, math.sqrt(var_x * var_p))


def fibonacci_number(n: int) -> int:
    """Fibonacci number with F_1 = F_2 = 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    prev, curr = 1, 1
    for _ in range(n - 2):
        prev, curr = curr, prev + curr
    return curr


def fibonacci_record(n: int, dim: int = DEFAULT_DIM) -> FibonacciRecord:
    """Exact Fibonacci circle row plus the matrix-oracle dispersion of its state.

    The circle radius is |zeta_n|^2 = F_{n-1}/F_{n-2} - 1/2 and the closed
    dispersion on it is F_n / F_{n+1}; the identity between the two is exact
    in rational arithmetic.  The oracle state uses the real positive root
    zeta_n = sqrt(|zeta_n|^2) (only the modulus enters) at alpha = 0.
    """
    if n < 3:
        raise ValueError(f"the ladder starts at n = 3, got {n}")
    f_nm2 = fibonacci_number(n - 2)
    f_nm1 = fibonacci_number(n - 1)
    f_n = f_nm1 + f_nm2
    f_np1 = f_n + f_nm1
    zeta_sq = Fraction(f_nm1, f_nm2) - Fraction(1, 2)
    dispersion = Fraction(f_n, f_np1)
    zeta = ExtendedComplex.from_value(math.sqrt(zeta_sq))
    params = CoherentParams(0.0, SuperQubitParams(0.5 * math.pi, 0.25 * math.pi, zeta))
    numeric = quadrature_stats_numeric(params, dim).var_x
    return FibonacciRecord(
        n=n,
        fib_n=f_n,
        zeta_sq=zeta_sq,
        dispersion_closed=dispersion,
        dispersion_numeric=numeric,
    )


def golden_limit() -> tuple[float, float]:
    """Limit of the Fibonacci ladder: (|zeta_inf|^2, dispersion).

    |zeta_inf|^2 = golden ratio - 1/2 and the limiting dispersion (and
    uncertainty product) is the inverse golden ratio.
    """
    return GOLDEN_RATIO - 0.5, 1.0 / GOLDEN_RATIO
