"""Riemann-sphere geometry for the one-super-particle label.

The label zeta lives on the extended complex plane.  Points are stored as a
homogeneous pair (u, v) with zeta = u/v, so the point at infinity is the
ordinary value (1, 0) and every formula below evaluates at both poles
without special cases.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "ExtendedComplex",
    "BlochPoint",
    "CartesianBloch",
    "zeta_to_bloch",
    "bloch_to_zeta",
    "bloch_cartesian",
    "concurrence_circle",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ExtendedComplex:
    """Homogeneous point (u, v) of the extended complex plane, zeta = u/v.

    Stored in canonical form: |u|^2 + |v|^2 = 1 with v real and >= 0, and
    u real and > 0 when v = 0 (the point at infinity).  The imaginary part
    of the stored v is exactly zero.
    """

    u: complex
    v: complex

    def __post_init__(self):
        u = complex(self.u)
        v = complex(self.v)
        if not (cmath.isfinite(u) and cmath.isfinite(v)):
            raise ValueError("homogeneous coordinates must be finite")
        scale = math.hypot(abs(u), abs(v))
        if scale == 0.0:
            raise ValueError("homogeneous coordinates must not both be zero")
        u /= scale
        v /= scale
        anchor = v if v != 0 else u
        phase = anchor.conjugate() / abs(anchor)
        object.__setattr__(self, "u", u * phase)
        object.__setattr__(self, "v", v * phase)

    @classmethod
    def from_value(cls, zeta: complex) -> "ExtendedComplex":
        zeta = complex(zeta)
        if cmath.isnan(zeta):
            raise ValueError("zeta must not be NaN")
        if cmath.isinf(zeta):
            return cls.infinity()
        return cls(zeta, 1.0)

    @classmethod
    def infinity(cls) -> "ExtendedComplex":
        return cls(1.0, 0.0)

    @property
    def is_infinite(self) -> bool:
        return self.v == 0

    @property
    def value(self) -> complex:
        """The finite value u/v; raises at the pole."""
        if self.is_infinite:
            raise ValueError("the point at infinity has no finite value")
        return self.u / self.v

    @property
    def mod_sq(self) -> float:
        """|zeta|^2, math.inf at the pole."""
        if self.is_infinite:
            return math.inf
        return (abs(self.u) / self.v.real) ** 2


@dataclass(frozen=True)
class BlochPoint:
    """Polar angles on a unit sphere; phi is canonically 0 at the poles."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        theta = float(self.theta)
        if not 0.0 <= theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {theta}")
        phi = float(self.phi) % _TWO_PI
        if theta == 0.0 or theta == math.pi:
            phi = 0.0
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)


@dataclass(frozen=True)
class CartesianBloch:
    """Unit vector on the sphere."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        r_sq = self.x * self.x + self.y * self.y + self.z * self.z
        if abs(r_sq - 1.0) > 1e-12:
            raise ValueError(f"(x, y, z) must be a unit vector, |r|^2 = {r_sq}")


def zeta_to_bloch(zeta: ExtendedComplex) -> BlochPoint:
    """Inverse stereographic projection of zeta = tan(theta/2) e^{i phi}."""
    theta = 2.0 * math.atan2(abs(zeta.u), zeta.v.real)
    if zeta.u == 0 or zeta.is_infinite:
        return BlochPoint(theta, 0.0)
    return BlochPoint(theta, cmath.phase(zeta.u) % _TWO_PI)


def bloch_to_zeta(point: BlochPoint) -> ExtendedComplex:
    """Stereographic projection of a sphere point onto the extended plane."""
    if point.theta == math.pi:
        # cos(pi/2) rounds to 6.1e-17, not 0; the south pole is exactly the pole
        return ExtendedComplex.infinity()
    half = 0.5 * point.theta
    return ExtendedComplex(cmath.rect(math.sin(half), point.phi), math.cos(half))


def bloch_cartesian(point: BlochPoint) -> CartesianBloch:
    """Cartesian coordinates (sin t cos p, sin t sin p, cos t)."""
    sin_theta = math.sin(point.theta)
    return CartesianBloch(
        sin_theta * math.cos(point.phi),
        sin_theta * math.sin(point.phi),
        math.cos(point.theta),
    )


def concurrence_circle(theta1: float) -> tuple[float, float]:
    """Concurrence and vertical coordinate of a one-super-particle point.

    The concurrence is the distance of the sphere point from the vertical
    axis, sin(theta1); the circle of equally entangled states sits at
    height z = cos(theta1).
    """
    if not 0.0 <= theta1 <= math.pi:
        raise ValueError(f"theta1 must lie in [0, pi], got {theta1}")
    return math.sin(theta1), math.cos(theta1)
