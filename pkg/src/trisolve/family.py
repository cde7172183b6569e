"""The one-parameter triangle family a/b = r > 1 with a 60-degree included angle.

Closed forms for this family:

    sin(theta) = r*sqrt(3) / (2*sqrt(r^2 - r + 1))
    sin(phi)   =   sqrt(3) / (2*sqrt(r^2 - r + 1))
    c          = b * sqrt(r^2 - r + 1)

with theta + phi = 120. The angles themselves are recovered through the
half-angle pipeline because theta passes 90 at r = 2 and arcsin cannot
tell an obtuse angle from its supplement.
"""

import math
from dataclasses import dataclass

from .errors import DomainError
from .solver import angles_from_t, t_from_nu
from .trig import DegAngle

OMEGA_DEG = 60.0
_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class FamilySample:
    r: float
    sin_theta: float
    sin_phi: float
    theta_deg: DegAngle
    phi_deg: DegAngle
    c_over_b: float


def trinomial_f(r: float) -> float:
    """f(r) = 3(r-1)^2 + (r+1)^2, the discriminant-like trinomial of the
    family; equals 4r^2 - 4r + 4 with minimum 3 at r = 1/2."""
    if not math.isfinite(r):
        raise DomainError(f"r must be finite, got {r!r}")
    return 3.0 * (r - 1.0) ** 2 + (r + 1.0) ** 2


def family_point(r: float, b: float = 1.0) -> FamilySample:
    """One member of the family: sides (r*b, b) enclosing 60 degrees."""
    if not (math.isfinite(r) and r > 1.0):
        raise DomainError(f"family requires r > 1, got {r!r}")
    if not (math.isfinite(b) and b > 0.0):
        raise DomainError(f"b must be positive, got {b!r}")
    root = math.sqrt(r * r - r + 1.0)
    nu = _SQRT3 * (r - 1.0) / (r + 1.0)
    theta, phi = angles_from_t(t_from_nu(nu), OMEGA_DEG)
    return FamilySample(
        r=r,
        sin_theta=r * _SQRT3 / (2.0 * root),
        sin_phi=_SQRT3 / (2.0 * root),
        theta_deg=theta,
        phi_deg=phi,
        c_over_b=root,
    )


def family_sweep(r_min: float, r_max: float, n: int, b: float = 1.0) -> list[FamilySample]:
    """n family samples at geometrically spaced r in [r_min, r_max]."""
    if not 1.0 < r_min < r_max:
        raise DomainError(f"need 1 < r_min < r_max, got [{r_min}, {r_max}]")
    if n < 2:
        raise DomainError(f"need at least 2 samples, got {n}")
    step = (r_max / r_min) ** (1.0 / (n - 1))
    samples = []
    for i in range(n):
        r = r_max if i == n - 1 else r_min * step**i
        samples.append(family_point(r, b))
    return samples
