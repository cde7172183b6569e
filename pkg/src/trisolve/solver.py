"""SAS triangle solvers.

The production path runs the tangent half-angle pipeline built on the Law
of Sines: from sides a, b and included angle omega it forms

    nu = cot(omega/2) * (a - b) / (a + b),   t = arctan(nu) in (-90, 90),

then theta = 90 + t - omega/2, phi = 90 - (t + omega/2), and finally the
third side from the sine ratios. A classic Law-of-Cosines solver is kept
alongside as an independent cross-check.
"""

import math
from dataclasses import dataclass

from .errors import DomainError
from .ratio import componendo
from .trig import DegAngle, arctan_deg, cos_deg, sin_deg, tan_deg

# Consistency window for externally supplied angles (degrees).
ANGLE_SUM_TOL_DEG = 1e-9
# How far the Law-of-Cosines arccos argument may stray past [-1, 1] before
# the problem is declared degenerate instead of clamped.
ACOS_CLAMP_TOL = 1e-12


@dataclass(frozen=True)
class SasProblem:
    """Two sides and the included angle: a, b and omega (degrees).

    a is opposite theta, b opposite phi; omega is opposite the unknown c.
    """

    a: float
    b: float
    omega_deg: DegAngle

    def __post_init__(self) -> None:
        for name in ("a", "b"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise DomainError(f"side {name} must be positive and finite, got {v!r}")
        w = self.omega_deg
        if not math.isfinite(w) or not 0.0 < w < 180.0:
            raise DomainError("omega must lie strictly between 0 and 180 degrees")


@dataclass(frozen=True)
class HalfAngleState:
    """The pipeline's intermediate pair: nu and t = arctan(nu) in degrees."""

    nu: float
    t_deg: DegAngle

    def __post_init__(self) -> None:
        if not -90.0 < self.t_deg < 90.0:
            raise DomainError(f"t must lie in (-90, 90), got {self.t_deg}")
        if self.nu != 0.0 and math.copysign(1.0, self.t_deg) != math.copysign(1.0, self.nu):
            raise DomainError("t and nu must share a sign")


@dataclass(frozen=True)
class TriangleSolution:
    """A fully solved triangle: sides, angles (degrees), method, residual.

    residual is the largest pairwise relative disagreement among the three
    sine ratios a/sin(theta), b/sin(phi), c/sin(omega).
    """

    a: float
    b: float
    c: float
    theta_deg: DegAngle
    phi_deg: DegAngle
    omega_deg: DegAngle
    method: str
    residual: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise DomainError(f"side {name} must be positive and finite, got {v!r}")
        for name in ("theta_deg", "phi_deg", "omega_deg"):
            v = getattr(self, name)
            if not math.isfinite(v) or not 0.0 < v < 180.0:
                raise DomainError(f"angle {name} must lie strictly in (0, 180), got {v!r}")


def _sine_ratio_residual(a, b, c, theta, phi, omega):
    ratios = (a / sin_deg(theta), b / sin_deg(phi), c / sin_deg(omega))
    lo, hi = min(ratios), max(ratios)
    return hi / lo - 1.0


def nu_from(problem: SasProblem) -> float:
    """nu = cot(omega/2) * (a - b) / (a + b).

    The isoceles case is short-circuited to exactly 0 so that an extreme
    tan(omega/2) cannot turn an exact zero into noise.
    """
    if problem.a == problem.b:
        return 0.0
    return componendo(problem.a, problem.b) / tan_deg(problem.omega_deg / 2.0)


def t_from_nu(nu: float) -> DegAngle:
    """The unique t in (-90, 90) with tan t = nu."""
    return arctan_deg(nu)


def half_angle_state(problem: SasProblem) -> HalfAngleState:
    nu = nu_from(problem)
    return HalfAngleState(nu=nu, t_deg=t_from_nu(nu))


def angles_from_t(t: DegAngle, omega: DegAngle) -> tuple[DegAngle, DegAngle]:
    """theta = 90 + t - omega/2 and phi = 90 - (t + omega/2)."""
    if not -90.0 < t < 90.0:
        raise DomainError(f"t must lie in (-90, 90), got {t}")
    if not 0.0 < omega < 180.0:
        raise DomainError("omega must lie strictly between 0 and 180 degrees")
    half_omega = omega / 2.0
    theta = 90.0 + t - half_omega
    phi = 90.0 - (t + half_omega)
    if not (0.0 < theta < 180.0 and 0.0 < phi < 180.0):
        raise DomainError(
            f"(t={t}, omega={omega}) does not correspond to a triangle: "
            f"theta={theta}, phi={phi}"
        )
    return theta, phi


def third_side(problem: SasProblem, theta: DegAngle, phi: DegAngle) -> float:
    """c from the sine ratios, dividing by the larger of sin(theta), sin(phi)."""
    if abs(theta + phi + problem.omega_deg - 180.0) > ANGLE_SUM_TOL_DEG:
        raise DomainError("theta and phi are inconsistent with the problem's omega")
    sin_theta = sin_deg(theta)
    sin_phi = sin_deg(phi)
    sin_omega = sin_deg(problem.omega_deg)
    if sin_theta >= sin_phi:
        return problem.a * sin_omega / sin_theta
    return problem.b * sin_omega / sin_phi


def solve_sas_sines(problem: SasProblem) -> TriangleSolution:
    """Solve an SAS triangle through the tangent half-angle pipeline."""
    state = half_angle_state(problem)
    theta, phi = angles_from_t(state.t_deg, problem.omega_deg)
    c = third_side(problem, theta, phi)
    return TriangleSolution(
        a=problem.a,
        b=problem.b,
        c=c,
        theta_deg=theta,
        phi_deg=phi,
        omega_deg=problem.omega_deg,
        method="sines",
        residual=_sine_ratio_residual(problem.a, problem.b, c, theta, phi, problem.omega_deg),
    )


def _acos_deg_clamped(x: float, context: str) -> DegAngle:
    if x > 1.0:
        if x > 1.0 + ACOS_CLAMP_TOL:
            raise DomainError(f"{context}: arccos argument {x} outside [-1, 1]")
        x = 1.0
    elif x < -1.0:
        if x < -1.0 - ACOS_CLAMP_TOL:
            raise DomainError(f"{context}: arccos argument {x} outside [-1, 1]")
        x = -1.0
    return math.degrees(math.acos(x))


def solve_sas_cosines(problem: SasProblem) -> TriangleSolution:
    """The textbook route: c from the Law of Cosines, then both angles by
    arccos (not arcsin, which cannot distinguish obtuse angles)."""
    a, b, w = problem.a, problem.b, problem.omega_deg
    c_sq = a * a + b * b - 2.0 * a * b * cos_deg(w)
    if not c_sq > 0.0:
        raise DomainError("degenerate triangle: computed c^2 is not positive")
    c = math.sqrt(c_sq)
    theta = _acos_deg_clamped((b * b + c * c - a * a) / (2.0 * b * c), "theta")
    phi = _acos_deg_clamped((a * a + c * c - b * b) / (2.0 * a * c), "phi")
    if not (0.0 < theta < 180.0 and 0.0 < phi < 180.0):
        raise DomainError("degenerate triangle: an angle collapsed to 0 or 180 in working precision")
    return TriangleSolution(
        a=a,
        b=b,
        c=c,
        theta_deg=theta,
        phi_deg=phi,
        omega_deg=w,
        method="cosines",
        residual=_sine_ratio_residual(a, b, c, theta, phi, w),
    )


def t45_omega(a: float, b: float) -> DegAngle:
    """The included angle for which the pipeline's t comes out as 45.

    Solving tan(omega/2) = (a - b)/(a + b) for omega gives
    tan(omega) = (a^2 - b^2) / (2ab), which requires a > b > 0 and lands
    omega in (0, 90).
    """
    if not (math.isfinite(a) and math.isfinite(b) and a > b > 0.0):
        raise DomainError(f"t = 45 requires a > b > 0, got a={a!r}, b={b!r}")
    return arctan_deg((a * a - b * b) / (2.0 * a * b))
