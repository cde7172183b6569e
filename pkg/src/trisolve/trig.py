"""Degree-mode trigonometric primitives.

All public angle interfaces work in degrees; the conversion to radians
happens after the argument has been reduced in degrees, so values computed
here stay relatively accurate even near the poles and zeros where a naive
``tan(radians(x))`` loses digits.
"""

import math

from .errors import DomainError

# An argument this close (in degrees) to a tan/cot pole is rejected rather
# than evaluated to a huge finite value.
POLE_TOL_DEG = 1e-12

DegAngle = float


def _check_finite(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def sin_deg(alpha: DegAngle) -> float:
    """sin of an angle given in degrees, accurate near multiples of 180."""
    alpha = _check_finite(alpha, "alpha")
    r = math.remainder(alpha, 360.0)
    if abs(r) > 90.0:
        # reflect into [-90, 90]; the subtraction is exact (Sterbenz)
        r = math.copysign(180.0, r) - r
    return math.sin(math.radians(r))


def cos_deg(alpha: DegAngle) -> float:
    """cos of an angle given in degrees, accurate near odd multiples of 90."""
    alpha = _check_finite(alpha, "alpha")
    r = abs(math.remainder(alpha, 360.0))
    if r >= 45.0:
        return math.sin(math.radians(90.0 - r))
    return math.cos(math.radians(r))


def tan_deg(alpha: DegAngle) -> float:
    """tan of an angle given in degrees.

    Raises DomainError when alpha is within POLE_TOL_DEG of 90 + 180k.
    """
    alpha = _check_finite(alpha, "alpha")
    r = math.remainder(alpha, 180.0)
    if abs(abs(r) - 90.0) <= POLE_TOL_DEG:
        raise DomainError(f"tan is undefined at {alpha} degrees (pole)")
    if abs(r) <= 45.0:
        return math.tan(math.radians(r))
    # tan r = 1 / tan(+-90 - r); the degree subtraction is exact
    return 1.0 / math.tan(math.radians(math.copysign(90.0, r) - r))


def cot_deg(alpha: DegAngle) -> float:
    """cot of an angle given in degrees; undefined at multiples of 180."""
    alpha = _check_finite(alpha, "alpha")
    if abs(math.remainder(alpha, 180.0)) <= POLE_TOL_DEG:
        raise DomainError(f"cot is undefined at {alpha} degrees (pole)")
    return cos_deg(alpha) / sin_deg(alpha)


def arctan_deg(nu: float) -> DegAngle:
    """The unique t in (-90, 90) with tan_deg(t) == nu."""
    nu = _check_finite(nu, "nu")
    return math.degrees(math.atan(nu))


def angle_from_half_tangent(h: float) -> DegAngle:
    """Recover omega in (0, 180) from h = tan(omega / 2).

    Evaluated as 2 * arctan(h), which is well defined for every h > 0
    (the double-angle route through tan(omega) has a pole at h = 1).
    """
    h = _check_finite(h, "h")
    if h <= 0.0:
        raise DomainError(f"half-angle tangent must be positive, got {h}")
    return 2.0 * arctan_deg(h)


def sum_to_product_residual(alpha: DegAngle, beta: DegAngle) -> tuple[float, float]:
    """Residuals of the two sum-to-product conversions for sin.

    Returns (|sin a + sin b - 2 sin((a+b)/2) cos((a-b)/2)|,
             |sin a - sin b - 2 sin((a-b)/2) cos((a+b)/2)|).
    """
    alpha = _check_finite(alpha, "alpha")
    beta = _check_finite(beta, "beta")
    half_sum = (alpha + beta) / 2.0
    half_diff = (alpha - beta) / 2.0
    r_plus = sin_deg(alpha) + sin_deg(beta) - 2.0 * sin_deg(half_sum) * cos_deg(half_diff)
    r_minus = sin_deg(alpha) - sin_deg(beta) - 2.0 * sin_deg(half_diff) * cos_deg(half_sum)
    return abs(r_plus), abs(r_minus)


def cofunction_residual(alpha: DegAngle) -> tuple[float, float]:
    """Residuals of tan(90 - a) - cot a and cot(90 - a) - tan a.

    Requires alpha away from both families of poles (180k and 90 + 180k).
    """
    alpha = _check_finite(alpha, "alpha")
    r = math.remainder(alpha, 180.0)
    if abs(r) <= POLE_TOL_DEG or abs(abs(r) - 90.0) <= POLE_TOL_DEG:
        raise DomainError(f"cofunction check undefined at {alpha} degrees")
    return (
        abs(tan_deg(90.0 - alpha) - cot_deg(alpha)),
        abs(cot_deg(90.0 - alpha) - tan_deg(alpha)),
    )


def addition_formula_residual(alpha: DegAngle, beta: DegAngle) -> tuple[float, float]:
    """Residuals of the cos and sin angle-addition formulas."""
    alpha = _check_finite(alpha, "alpha")
    beta = _check_finite(beta, "beta")
    sa, ca = sin_deg(alpha), cos_deg(alpha)
    sb, cb = sin_deg(beta), cos_deg(beta)
    r_cos = cos_deg(alpha + beta) - (ca * cb - sa * sb)
    r_sin = sin_deg(alpha + beta) - (sa * cb + ca * sb)
    return abs(r_cos), abs(r_sin)
