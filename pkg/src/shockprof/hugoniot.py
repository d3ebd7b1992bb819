"""Shock end states: solving T^{alpha 1}(psi) = q^alpha.

For a standing shock the two components of the ideal flux are prescribed
constants ``q = (q0, q1)``.  The solution structure is governed entirely by
the amplitude parameter ``q_tilde = (q1/q0)^2``: two states (a genuine shock)
exist exactly for ``3/4 < q_tilde < 1``.  The closed-form parametrization
used by :func:`shock_states` is

    v_pm^2 = ((2 q_tilde - 1) -/+ sqrt(q_tilde (4 q_tilde - 3))) / (4 (1 - q_tilde))

together with ``theta = ((1/q1)((4/3) v^2 + 1/3))^(-1/4)``.

An independent brute-force route (grid scan of the level-curve crossing plus
plain bisection) is provided alongside and is used by the test suite to
validate the closed form; the two must never be collapsed into one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateClassificationError, InvalidInputError, NoShockError
from .state import FluidState, flux, flux_jacobian, state_from_theta_v

Q_TILDE_MIN = 0.75
Q_TILDE_MAX = 1.0
ENDPOINT_TOL = 1e-12

# |4 q_tilde - 3| below this is treated as the tangency (double-root) case.
_TANGENCY_TOL = 4e-12


@dataclass(frozen=True)
class FluxTarget:
    """Prescribed flux components (q0, q1) of a standing shock."""

    q0: float
    q1: float

    @property
    def q_tilde(self) -> float:
        if self.q0 == 0.0:
            raise InvalidInputError("q_tilde undefined for q0 = 0")
        r = self.q1 / self.q0
        return r * r

    @classmethod
    def normalized(cls, q_tilde: float) -> "FluxTarget":
        """The canonical right-moving target q = (q_tilde^(-1/2), 1)."""
        _require_admissible(q_tilde)
        return cls(q0=q_tilde ** -0.5, q1=1.0)


@dataclass(frozen=True)
class ShockPair:
    """Upstream/downstream states of one ideal shock, with their target."""

    minus: FluidState
    plus: FluidState
    target: FluxTarget

    @property
    def amplitude(self) -> float:
        return self.minus.v - self.plus.v

    def validate(self, tol: float = 1e-10) -> None:
        """Check the structural invariants; raises on violation.

        Not called automatically so that deliberately non-shock pairs can be
        assembled (e.g. to probe the Lax sign count).
        """
        if not (self.minus.v > self.plus.v > 0.0):
            raise InvalidInputError("states do not satisfy v_minus > v_plus > 0")
        for st in (self.minus, self.plus):
            t01, t11 = flux(st)
            res = math.hypot(t01 - self.target.q0, t11 - self.target.q1)
            if res > tol * max(1.0, abs(self.target.q0), abs(self.target.q1)):
                raise InvalidInputError(f"flux residual {res:.3e} exceeds {tol:.1e}")
        if not (flux_jacobian(self.minus).det > 0.0 > flux_jacobian(self.plus).det):
            raise InvalidInputError("pair is not a 1-shock (det A signs wrong)")


@dataclass(frozen=True)
class LaxReport:
    upstream_char_signs: tuple[int, int]
    downstream_char_signs: tuple[int, int]
    is_1_shock: bool


def _require_admissible(q_tilde: float) -> None:
    if not math.isfinite(q_tilde):
        raise NoShockError(f"q_tilde must be finite, got {q_tilde}")
    if q_tilde <= Q_TILDE_MIN + ENDPOINT_TOL or q_tilde >= Q_TILDE_MAX - ENDPOINT_TOL:
        raise NoShockError(
            f"q_tilde = {q_tilde!r} outside the admissible open interval (3/4, 1): "
            "3/4 is the zero-amplitude limit, 1 the infinite-amplitude limit"
        )


def shock_velocities_squared(q_tilde: float) -> tuple[float, float]:
    """Closed-form (v_minus^2, v_plus^2) for an admissible amplitude.

    The upstream root takes the + branch (no cancellation); the downstream
    root is recovered from the product of roots 1/(16 (1 - q_tilde) v_minus^2),
    which stays accurate as q_tilde -> 1.
    """
    _require_admissible(q_tilde)
    root = math.sqrt(q_tilde * (4.0 * q_tilde - 3.0))
    one_minus = 1.0 - q_tilde
    vm2 = ((2.0 * q_tilde - 1.0) + root) / (4.0 * one_minus)
    vp2 = 1.0 / (16.0 * one_minus * vm2)
    return vm2, vp2


def theta_on_t11_level(v: float, q1: float) -> float:
    """Temperature making T11 = q1 at velocity v (defined for q1 > 0)."""
    if q1 <= 0.0:
        raise InvalidInputError("T11 level sets are empty for q1 <= 0")
    return ((1.0 / q1) * ((4.0 / 3.0) * v * v + 1.0 / 3.0)) ** -0.25


def theta_on_t01_level(v: float, q0: float) -> float:
    """Temperature making |T01| = |q0| at velocity v != 0."""
    if q0 == 0.0 or v == 0.0:
        raise InvalidInputError("T01 level curve needs q0 != 0 and v != 0")
    v2 = v * v
    return ((16.0 / 9.0) * (1.0 + v2) * v2 / (q0 * q0)) ** -0.125


def quartic_residual(v: float, q_tilde: float) -> float:
    """Residual of 16(1-qt) v^4 + 8(1-2qt) v^2 + 1, zero at the shock velocities."""
    v2 = v * v
    return 16.0 * (1.0 - q_tilde) * v2 * v2 + 8.0 * (1.0 - 2.0 * q_tilde) * v2 + 1.0


def shock_states(q_tilde: float) -> ShockPair:
    """Both end states of the normalized shock with amplitude parameter q_tilde."""
    vm2, vp2 = shock_velocities_squared(q_tilde)
    target = FluxTarget.normalized(q_tilde)
    minus = state_from_theta_v(theta_on_t11_level(math.sqrt(vm2), 1.0), math.sqrt(vm2))
    plus = state_from_theta_v(theta_on_t11_level(math.sqrt(vp2), 1.0), math.sqrt(vp2))
    return ShockPair(minus=minus, plus=plus, target=target)


def _positive_v2_roots(q_tilde: float) -> list[float]:
    """Positive roots v^2 of the reduced quartic, handling all q_tilde > 0."""
    t = 4.0 * q_tilde - 3.0
    if t < -_TANGENCY_TOL:
        return []
    if abs(t) <= _TANGENCY_TOL:
        # tangency: double root
        return [(2.0 * q_tilde - 1.0) / (4.0 * (1.0 - q_tilde))]
    one_minus = 1.0 - q_tilde
    if one_minus == 0.0:
        # leading coefficient vanishes: single root of the linear remainder
        return [1.0 / (8.0 * (2.0 * q_tilde - 1.0))]
    root = math.sqrt(q_tilde * t)
    if one_minus > 0.0:
        vm2 = ((2.0 * q_tilde - 1.0) + root) / (4.0 * one_minus)
        vp2 = 1.0 / (16.0 * one_minus * vm2)
        return [vp2, vm2]
    # q_tilde > 1: roots of opposite sign; only the positive one is physical
    qq = (root + (2.0 * q_tilde - 1.0)) / 2.0  # = (-b + sqrt(disc)) / 2 up to the 8x scaling
    return [qq / 2.0 / (4.0 * (q_tilde - 1.0)) * 0.0 + 1.0 / (16.0 * (q_tilde - 1.0) * qq) * qq * qq * 0.0
            ] if False else [_positive_root_supersonic(q_tilde, root)]


def _positive_root_supersonic(q_tilde: float, root: float) -> float:
    # 16(1-qt) x^2 + 8(1-2qt) x + 1 with 1-qt < 0: product of roots negative.
    # Stable form: x_pos = 1 / (2 qq) with qq = (-b + sqrt(disc))/2, written in
    # the un-rescaled coefficients a = 16(1-qt), b = 8(1-2qt), c = 1.
    b = 8.0 * (1.0 - 2.0 * q_tilde)
    disc_sqrt = 16.0 * root  # sqrt(b^2 - 4ac) = 16 sqrt(qt(4qt-3))
    qq = (-b + disc_sqrt) / 2.0
    return 1.0 / qq


def solve_T_eq_q(q0: float, q1: float) -> list[FluidState]:
    """All states with flux components equal to (q0, q1), sorted by velocity.

    Returns 0, 1, or 2 states.  The solution count is controlled by
    r = (q0/q1)^2: empty for q1 <= 0, a single static state for q0 = 0, two
    states for 1 < r < 4/3, and one otherwise (for q1 > 0).
    """
    q0 = float(q0)
    q1 = float(q1)
    if not (math.isfinite(q0) and math.isfinite(q1)):
        raise InvalidInputError("flux components must be finite")
    if q1 <= 0.0:
        return []
    if q0 == 0.0:
        return [state_from_theta_v((3.0 * q1) ** 0.25, 0.0)]
    q_tilde = (q1 / q0) ** 2
    sign = 1.0 if q0 > 0.0 else -1.0
    states = []
    for v2 in _positive_v2_roots(q_tilde):
        v = math.sqrt(v2)
        states.append(state_from_theta_v(theta_on_t11_level(v, q1), sign * v))
    states.sort(key=lambda s: s.v)
    return states


def lax_classify(pair: ShockPair, tol: float = 1e-10) -> LaxReport:
    """Characteristic-sign count of a shock pair.

    The flux Jacobian is symmetric, so both characteristic speeds are real;
    a 1-shock has both positive upstream and a sign split downstream.
    """
    def signs(st: FluidState) -> tuple[int, int]:
        a = flux_jacobian(st)
        lo, hi = a.eigenvalues()
        scale = max(1.0, a.max_abs())
        out = []
        for lam in (lo.real, hi.real):
            if abs(lam) < tol * scale:
                raise DegenerateClassificationError(
                    f"characteristic speed {lam:.3e} within {tol:.1e} of zero (v^2 = 1/2 degeneracy)"
                )
            out.append(1 if lam > 0.0 else -1)
        return (out[0], out[1])

    up = signs(pair.minus)
    down = signs(pair.plus)
    return LaxReport(
        upstream_char_signs=up,
        downstream_char_signs=down,
        is_1_shock=(up == (1, 1) and down == (-1, 1)),
    )


# ---------------------------------------------------------------------------
# Brute-force route: level-curve scan plus bisection.  Kept deliberately
# independent of the closed form above.
# ---------------------------------------------------------------------------

def _level_gap(v: np.ndarray, q0: float, q1: float) -> np.ndarray:
    """theta difference between the |T01| = |q0| and T11 = q1 level curves (v > 0)."""
    v2 = v * v
    th0 = ((16.0 / 9.0) * (1.0 + v2) * v2 / (q0 * q0)) ** -0.125
    th1 = ((1.0 / q1) * ((4.0 / 3.0) * v2 + 1.0 / 3.0)) ** -0.25
    return th0 - th1


def scan_positive_v_roots(q0: float, q1: float, v_max: float = 50.0,
                          n_scan: int = 20_000, tol: float = 1e-12) -> list[float]:
    """Positive velocities where the two flux level curves intersect.

    Log-spaced scan over (0, v_max] followed by bisection of every sign
    change.  Requires q0 != 0 and q1 > 0.
    """
    if q1 <= 0.0 or q0 == 0.0:
        raise InvalidInputError("scan needs q0 != 0 and q1 > 0")
    grid = np.geomspace(1e-4, v_max, n_scan)
    gap = _level_gap(grid, q0, q1)
    roots = []
    for i in np.nonzero(np.sign(gap[:-1]) * np.sign(gap[1:]) < 0)[0]:
        lo, hi = float(grid[i]), float(grid[i + 1])
        flo = float(gap[i])
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            fm = float(_level_gap(np.array([mid]), q0, q1)[0])
            if fm == 0.0:
                lo = hi = mid
                break
            if (flo < 0.0) == (fm < 0.0):
                lo, flo = mid, fm
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))
    return roots


def count_solutions_scan(q0: float, q1: float, v_max: float = 50.0,
                         n_scan: int = 20_000) -> int:
    """Number of solutions of T = (q0, q1) found by the brute-force scan."""
    if q1 <= 0.0:
        return 0
    if q0 == 0.0:
        return 1
    return len(scan_positive_v_roots(abs(q0), q1, v_max=v_max, n_scan=n_scan))


def shock_velocities_bisection(q_tilde: float) -> tuple[float, float]:
    """(v_minus, v_plus) for the normalized target, by scan + bisection only."""
    _require_admissible(q_tilde)
    roots = scan_positive_v_roots(q_tilde ** -0.5, 1.0)
    if len(roots) != 2:
        raise InvalidInputError(
            f"scan found {len(roots)} intersections for q_tilde = {q_tilde!r}, expected 2"
        )
    return max(roots), min(roots)


def two_solution_boundary(r_lo: float, r_hi: float, tol: float = 1e-6,
                          v_max: float = 1e6, n_scan: int = 60_000) -> float:
    """Bisect the boundary of the two-solution region in r = (q0/q1)^2.

    ``r_lo`` and ``r_hi`` must bracket a transition of the brute-force count
    (== 2 versus != 2) for the normalized family q1 = 1.
    """
    def two(r: float) -> bool:
        return count_solutions_scan(math.sqrt(r), 1.0, v_max=v_max, n_scan=n_scan) == 2

    lo, hi = float(r_lo), float(r_hi)
    t_lo = two(lo)
    if t_lo == two(hi):
        raise InvalidInputError("endpoints do not bracket a count transition")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if two(mid) == t_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
