"""Fermion-boson entanglement measures with paired closed-form/matrix routes.

Every closed formula here has an independent matrix-level counterpart: the
Gram-determinant concurrence checks the closed concurrences, the reduced
density matrix checks the Gram route, and the spectral entropy checks the
closed entropy.  Reports carry both routes side by side; a discrepancy is a
verification failure, never silently resolved in favor of either side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NormalizationError, NumericalConsistencyError
from .moebius import ExtendedComplex
from .superstate import (
    CoherentParams,
    SuperVector,
    super_coherent_state,
    super_qubit_state,
)

__all__ = [
    "NORMALIZATION_TOL",
    "GRAM_NEGATIVE_TOL",
    "DensityMatrix",
    "EntanglementReport",
    "gram_matrix",
    "reduced_boson_density",
    "concurrence_gram",
    "concurrence_n_state",
    "concurrence_superqubit",
    "entropy_from_z",
    "collapse_probabilities",
    "entanglement_entropy_bits",
    "entanglement_report",
    "displacement_invariance_check",
]

NORMALIZATION_TOL = 1e-12
GRAM_NEGATIVE_TOL = 1e-12


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace reduced state of the boson factor."""

    mat: np.ndarray

    def __post_init__(self):
        mat = np.array(self.mat, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("density matrix must be square")
        if np.abs(mat - mat.conj().T).max() > 1e-12:
            raise NumericalConsistencyError("density matrix is not Hermitian")
        if abs(np.trace(mat).real - 1.0) > 1e-12 or abs(np.trace(mat).imag) > 1e-12:
            raise NumericalConsistencyError("density matrix trace differs from 1")
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def purity(self) -> float:
        """Tr rho^2, via the Frobenius norm (rho is Hermitian)."""
        return float(np.vdot(self.mat, self.mat).real)

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.mat)


@dataclass(frozen=True)
class EntanglementReport:
    """Closed-form and oracle entanglement figures for one state, side by side."""

    concurrence_gram: float
    concurrence_closed: float
    purity: float
    entropy_bits: float
    p0: float
    p1: float


def _require_normalized(state: SuperVector) -> None:
    if not state.is_normalized(NORMALIZATION_TOL):
        raise NormalizationError(
            f"state norm^2 = {state.norm_sq()} is not 1 within {NORMALIZATION_TOL}"
        )


def gram_matrix(state: SuperVector) -> np.ndarray:
    """2x2 Gram matrix of the two fermion blocks in the boson Fock space."""
    g00 = state.psi0.norm_sq()
    g11 = state.psi1.norm_sq()
    g01 = state.psi0.inner(state.psi1)
    return np.array([[g00, g01], [g01.conjugate(), g11]], dtype=np.complex128)


def reduced_boson_density(state: SuperVector) -> DensityMatrix:
    """Partial trace over the fermion: |psi0><psi0| + |psi1><psi1|."""
    _require_normalized(state)
    c0 = state.psi0.coeffs
    c1 = state.psi1.coeffs
    return DensityMatrix(np.outer(c0, c0.conj()) + np.outer(c1, c1.conj()))


def concurrence_gram(state: SuperVector) -> float:
    """Concurrence 2 sqrt(det G) from the Gram determinant of the blocks.

    Tiny negative determinants (>= -1e-12) from near-dependent blocks are
    clamped to zero; anything more negative indicates corrupted input.
    """
    _require_normalized(state)
    g00 = state.psi0.norm_sq()
    g11 = state.psi1.norm_sq()
    g01 = state.psi0.inner(state.psi1)
    det = g00 * g11 - abs(g01) ** 2
    if det < -GRAM_NEGATIVE_TOL:
        raise NumericalConsistencyError(
            f"Gram determinant {det} is negative beyond tolerance"
        )
    return min(1.0, 2.0 * math.sqrt(max(det, 0.0)))


def concurrence_n_state(zeta: ExtendedComplex) -> float:
    """Closed concurrence 2|zeta| / (1 + |zeta|^2) of any n super-particle state.

    Evaluated homogeneously as 2 |u| v, which vanishes at both poles and does
    not depend on n.
    """
    return 2.0 * abs(zeta.u) * zeta.v.real


def concurrence_superqubit(theta: float, zeta: ExtendedComplex) -> float:
    """Closed concurrence sin^2(theta/2) * 2|zeta| / (1 + |zeta|^2)."""
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    return math.sin(0.5 * theta) ** 2 * concurrence_n_state(zeta)


def entropy_from_z(z: float) -> float:
    """Von Neumann entropy in bits as a function of the vertical coordinate z.

    E(z) = -1/2 log2((1 - z^2)/4) - z/2 log2((1 + z)/(1 - z)), which equals
    the binary entropy of p = (1 + z)/2.  The indeterminate endpoints
    z = +/-1 return their analytic limit 0.
    """
    z = float(z)
    if not -1.0 <= z <= 1.0:
        raise ValueError(f"z must lie in [-1, 1], got {z}")
    if z == 1.0 or z == -1.0:
        return 0.0
    return -0.5 * math.log2((1.0 - z * z) / 4.0) - 0.5 * z * math.log2(
        (1.0 + z) / (1.0 - z)
    )


def collapse_probabilities(z: float) -> tuple[float, float]:
    """Pole-collapse probabilities ((1 + z)/2, (1 - z)/2) at height z."""
    z = float(z)
    if not -1.0 <= z <= 1.0:
        raise ValueError(f"z must lie in [-1, 1], got {z}")
    return 0.5 * (1.0 + z), 0.5 * (1.0 - z)


def entanglement_entropy_bits(state: SuperVector) -> float:
    """Spectral entanglement entropy of the reduced boson state, in bits.

    The reduced density matrix has rank <= 2 and its nonzero spectrum equals
    the spectrum of the 2x2 Gram matrix, so only that spectrum is computed.
    """
    _require_normalized(state)
    eigenvalues = np.linalg.eigvalsh(gram_matrix(state))
    # + 0.0 turns the empty/pure-state result -0.0 into plain 0.0
    return float(-sum(lam * math.log2(lam) for lam in eigenvalues if lam > 0.0) + 0.0)


def entanglement_report(
    state: SuperVector, concurrence_closed: float, p0: float, p1: float
) -> EntanglementReport:
    """Assemble the oracle-side figures for a state next to the closed forms.

    Validates the internal identities that do not depend on which closed
    formula the caller supplied: probabilities sum to one, and the squared
    Gram concurrence equals twice the linear entropy 1 - Tr rho^2.
    """
    c_gram = concurrence_gram(state)
    eigenvalues = np.linalg.eigvalsh(gram_matrix(state))
    purity = float(np.sum(eigenvalues**2))
    entropy = float(-sum(lam * math.log2(lam) for lam in eigenvalues if lam > 0.0) + 0.0)
    if abs(p0 + p1 - 1.0) > 1e-12:
        raise NumericalConsistencyError(f"p0 + p1 = {p0 + p1} differs from 1")
    if abs(c_gram**2 - 2.0 * (1.0 - purity)) > 1e-10:
        raise NumericalConsistencyError(
            "squared concurrence does not match twice the linear entropy"
        )
    return EntanglementReport(
        concurrence_gram=c_gram,
        concurrence_closed=float(concurrence_closed),
        purity=purity,
        entropy_bits=entropy,
        p0=float(p0),
        p1=float(p1),
    )


def displacement_invariance_check(params: CoherentParams, dim: int) -> float:
    """Absolute concurrence drift between a reference state and its displacement."""
    reference = super_qubit_state(params.base, dim)
    displaced = super_coherent_state(params, dim)
    return abs(concurrence_gram(displaced) - concurrence_gram(reference))
