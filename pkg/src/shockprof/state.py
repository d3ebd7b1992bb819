"""Fluid states of the pure radiation fluid and their ideal flux.

A state is parametrized by temperature ``theta > 0`` and spatial velocity
``v`` (geometric units, so the light speed is 1 and ``u = sqrt(1 + v^2)`` is
the time component of the 4-velocity).  The pair

    psi = (psi0, psi1) = (u / theta, v / theta)

is the primary unknown of the first-order formulation; the admissible region
is ``psi0 > |psi1|``.  The equation of state is fixed to p = theta^4 / 3.

All functions here are pure and the state object is immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import InvalidInputError
from .mat2 import Mat2

if TYPE_CHECKING:  # pragma: no cover
    from .hugoniot import FluxTarget


@dataclass(frozen=True)
class FluidState:
    theta: float
    v: float

    @property
    def u(self) -> float:
        return math.sqrt(1.0 + self.v * self.v)

    @property
    def psi0(self) -> float:
        return self.u / self.theta

    @property
    def psi1(self) -> float:
        return self.v / self.theta

    @property
    def psi(self) -> tuple[float, float]:
        """Contravariant pair (psi0, psi1)."""
        return (self.psi0, self.psi1)

    @property
    def psi_cov(self) -> tuple[float, float]:
        """Covariant pair (-psi0, psi1); the metric is diag(-1, 1)."""
        return (-self.psi0, self.psi1)


def state_from_theta_v(theta: float, v: float) -> FluidState:
    """Build a state from temperature and velocity, validating the inputs."""
    theta = float(theta)
    v = float(v)
    if not math.isfinite(theta) or theta <= 0.0:
        raise InvalidInputError(f"temperature must be finite and positive, got {theta}")
    if not math.isfinite(v):
        raise InvalidInputError(f"velocity must be finite, got {v}")
    return FluidState(theta=theta, v=v)


def state_from_psi(psi0: float, psi1: float) -> FluidState:
    """Build a state from the pair (psi0, psi1); requires psi0 > |psi1|."""
    psi0 = float(psi0)
    psi1 = float(psi1)
    if not (math.isfinite(psi0) and math.isfinite(psi1)):
        raise InvalidInputError("psi components must be finite")
    s = psi0 * psi0 - psi1 * psi1
    if psi0 <= 0.0 or s <= 0.0:
        raise InvalidInputError(f"({psi0}, {psi1}) lies outside the state space psi0 > |psi1|")
    theta = 1.0 / math.sqrt(s)
    return FluidState(theta=theta, v=theta * psi1)


def flux(s: FluidState) -> tuple[float, float]:
    """The two stream-direction components (T01, T11) of the ideal stress.

    T01 = (4/3) theta^4 u v,  T11 = theta^4 ((4/3) v^2 + 1/3).
    """
    t4 = s.theta ** 4
    v = s.v
    t01 = (4.0 / 3.0) * t4 * s.u * v
    t11 = t4 * ((4.0 / 3.0) * v * v + 1.0 / 3.0)
    return (t01, t11)


def flux_jacobian(s: FluidState) -> Mat2:
    """Scaled Jacobian A of the flux with respect to (psi0, psi1).

    The exact Jacobian of ``profile_rhs`` equals ``flux_jacobian_scale(s) * A``;
    the positive scale is dropped because only signs and directions matter for
    rest-point classification.  det A = 2 v^2 - 1 identically.
    """
    v = s.v
    u = s.u
    off = -u * (6.0 * v * v + 1.0)
    return Mat2(v * (6.0 * u * u - 1.0), off, off, v * (6.0 * v * v + 3.0))


def flux_jacobian_scale(s: FluidState) -> float:
    """Positive factor relating ``flux_jacobian`` to the true Jacobian of ``profile_rhs``."""
    return (4.0 / 3.0) * s.theta ** 5


def profile_rhs(s: FluidState, q: "FluxTarget") -> tuple[float, float]:
    """Right-hand side F = (q0 - T01, T11 - q1) of the profile equation B psi' = F.

    The first component is sign-flipped relative to the raw flux mismatch so
    that F pairs with matrices acting on the contravariant (psi0, psi1); with
    this convention the Jacobian of F is ``flux_jacobian_scale(s) *
    flux_jacobian(s)``.  F vanishes exactly at the shock end states.
    """
    t01, t11 = flux(s)
    return (q.q0 - t01, t11 - q.q1)
