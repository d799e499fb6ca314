"""Period integrals and amplitude bounds for the double-well variants.

Flipping the sign of the quartic coupling or of the curvature turns the
hardening oscillator into one of two bistable shapes, reduced here to

    inverted double well:  x'' + x - b x**3 = 0     (hump at |x| = 1/sqrt(b))
    double well:           x'' - x + b x**3 = 0     (barrier at x = 0)

with b > 0 and conserved level C = p**2/2 +- x**2/2 -+ b x**4/4.  This module
evaluates the transit-time integrals on those level sets, the closed form the
inverted well admits at the special energy 2*sqrt(b*E) = 1, and the amplitude
bounds that follow, including the published variants it corrects:

* the published turning-point roots for the double-well radicand read
  (-1 +- sqrt(1+4bE))/b, which do not annihilate the radicand; the actual
  roots are (1 +- sqrt(1+4bE))/b.  Both are reported, only the corrected
  ones are used.
* the closed-form special-energy transit time carries a leading minus sign
  in its published form; the magnitude is returned here.

Endpoint singularities of the integrands are removed by explicit square-root
substitutions (k = u**2 at the origin, k = k_plus - v**2 at the turning
point), after which fixed Gauss-Legendre panels integrate analytic functions
and converge to machine precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import (
    AmplitudeBeyondTurningPoint,
    ArgumentOutOfRange,
    DomainError,
    NegativeTruncatedB,
)
from .model import PhysicalParams, Regime, classical_b, quantum_b_first_order

__all__ = [
    "BOUND_CONSTANT",
    "WellKind",
    "WellSpec",
    "TurningPoints",
    "BoundReport",
    "separatrix_period_divergence",
    "inverted_special_period",
    "special_period_quadrature",
    "inverted_amplitude_bound",
    "amplitude_bound_physical",
    "dw_radicand",
    "dw_turning_points",
    "published_turning_points",
    "dw_period",
    "dw_amplitude_bound",
]

# (e-1)/(e+1): the tanh^-1 argument at which the special-energy transit-time
# logarithm reaches 1; printed in the source derivation as 0.46211715726
BOUND_CONSTANT = (math.e - 1.0) / (math.e + 1.0)


class WellKind(Enum):
    INVERTED_DOUBLE_WELL = "inverted-double-well"
    DOUBLE_WELL = "double-well"


@dataclass(frozen=True)
class WellSpec:
    """Reduced double-well problem: coupling b > 0, energy level E >= 0."""

    b: float
    well: WellKind
    E: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.b) and self.b > 0):
            raise DomainError(f"b must be positive and finite, got {self.b}")
        if not (math.isfinite(self.E) and self.E >= 0):
            raise DomainError(f"E must be nonnegative and finite, got {self.E}")


@dataclass(frozen=True)
class TurningPoints:
    """Roots of the double-well radicand in the k = x**2 variable."""

    k_plus: float
    k_minus: float
    radicand_residual: float


@dataclass(frozen=True)
class BoundReport:
    """An amplitude bound together with the formula that produced it."""

    regime: Regime | None
    A_max: float
    formula_id: str
    inputs: dict = field(default_factory=dict)
    published_A_max: float | None = None


@lru_cache(maxsize=None)
def _gauss_nodes(n: int = 64):
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return tuple(nodes.tolist()), tuple(weights.tolist())


def _integrate(f, a: float, b: float, panels: int = 6, n: int = 64) -> float:
    """Composite Gauss-Legendre quadrature of a smooth integrand."""
    if b <= a:
        return 0.0
    nodes, weights = _gauss_nodes(n)
    width = (b - a) / panels
    parts = []
    for i in range(panels):
        lo = a + i * width
        mid = lo + 0.5 * width
        half = 0.5 * width
        parts.extend(half * w * f(mid + half * t) for t, w in zip(nodes, weights))
    return math.fsum(parts)


# ---------------------------------------------------------------------------
# zero-energy divergence probe
# ---------------------------------------------------------------------------

def separatrix_period_divergence(
    spec: WellSpec, cutoff: float, amplitude: float
) -> float:
    """Zero-energy transit integral with the lower limit held at ``cutoff``.

    On the C = 0 level set the transit-time integrand behaves like 1/x near
    the origin, so the integral grows like -log(cutoff): halving the cutoff
    adds a constant increment approaching log(2).  That logarithmic blow-up
    is the signature of the infinite round-trip time along the separatrix,
    and this probe exists to exhibit it numerically.

    For the double well the integrand 1/(x sqrt(1 - b x**2 / 2)) is real on
    (0, sqrt(2/b)].  For the inverted well the published form
    1/(x sqrt(b x**2 / 2 - 1)) is real only outside the hump radius
    sqrt(2/b); below it there is no real zero-energy motion, yet the
    published computation extends the lower limit to zero regardless.  The
    magnitude of the radicand is integrated there, which both keeps the
    result real and reproduces the logarithmic growth.

    Raises
    ------
    DomainError
        If the energy of ``spec`` is not zero, the cutoff is not in (0, amplitude],
        or the amplitude lies outside the real domain of the well's
        integrand (inverted: A >= sqrt(2/b); double: A <= sqrt(2/b)).
    """
    if spec.E != 0.0:
        raise DomainError("the divergence probe is defined on the E = 0 level set")
    if not (math.isfinite(cutoff) and cutoff > 0.0):
        raise DomainError(f"cutoff must be positive, got {cutoff}")
    if not (math.isfinite(amplitude) and amplitude > 0.0):
        raise DomainError(f"amplitude must be positive, got {amplitude}")
    if cutoff > amplitude:
        raise DomainError(f"cutoff {cutoff} exceeds amplitude {amplitude}")
    if cutoff == amplitude:
        return 0.0

    b = spec.b
    x_break = math.sqrt(2.0 / b)
    if spec.well is WellKind.DOUBLE_WELL:
        if amplitude > x_break * (1.0 + 1e-12):
            raise DomainError(
                f"amplitude {amplitude} outside the real domain (0, "
                f"{x_break:g}] of the double-well integrand"
            )
        amplitude = min(amplitude, x_break)
    else:
        if amplitude < x_break * (1.0 - 1e-12):
            raise DomainError(
                f"amplitude {amplitude} below the inverted-well domain edge "
                f"{x_break:g}"
            )
        amplitude = max(amplitude, x_break)

    # work in u = log(x); the 1/x factor becomes du and the only structure
    # left is the square-root break at u_c = log(sqrt(2/b))
    u_a = math.log(cutoff)
    u_b = math.log(amplitude)
    u_c = 0.5 * math.log(2.0 / b)

    def radicand_mag(u):
        return abs(1.0 - 0.5 * b * math.exp(2.0 * u))

    def left_piece(w):  # u = u_c - w**2, smooth: -> sqrt(2) as w -> 0
        return 2.0 * w / math.sqrt(radicand_mag(u_c - w * w))

    def right_piece(w):  # u = u_c + w**2
        return 2.0 * w / math.sqrt(radicand_mag(u_c + w * w))

    total = 0.0
    if u_a < u_c:
        w_hi = math.sqrt(u_c - u_a)
        w_lo = math.sqrt(u_c - min(u_b, u_c))
        total += _integrate(left_piece, w_lo, w_hi, panels=8)
    if u_b > u_c:
        w_hi = math.sqrt(u_b - u_c)
        w_lo = math.sqrt(max(u_a, u_c) - u_c)
        total += _integrate(right_piece, w_lo, w_hi, panels=8)
    return total


# ---------------------------------------------------------------------------
# inverted double well: special-energy closed form and bounds
# ---------------------------------------------------------------------------

def inverted_special_period(b: float, amplitude: float) -> float:
    """Transit-time magnitude at the special energy 2 sqrt(bE) = 1.

    With E pinned to 1/(4b) the level-set radicand becomes a perfect square
    and the transit integral evaluates in closed form; doubling it gives

        |T| = 2 sqrt(2) * atanh(sqrt(b) * A).

    (The published expression carries a leading minus sign from the
    orientation of the antiderivative; the magnitude is returned.)

    Raises
    ------
    ArgumentOutOfRange
        If sqrt(b) * A >= 1, outside the atanh domain: the closed form only
        exists for amplitudes below 1/sqrt(b).
    """
    if not (math.isfinite(b) and b > 0):
        raise DomainError(f"b must be positive and finite, got {b}")
    if not (math.isfinite(amplitude) and amplitude >= 0):
        raise DomainError(f"amplitude must be nonnegative, got {amplitude}")
    arg = math.sqrt(b) * amplitude
    if arg >= 1.0:
        raise ArgumentOutOfRange(
            f"sqrt(b)*A = {arg:g} >= 1; the closed form requires A < 1/sqrt(b)"
        )
    return 2.0 * math.sqrt(2.0) * math.atanh(arg)


def special_period_quadrature(b: float, amplitude: float) -> float:
    """Direct quadrature twin of :func:`inverted_special_period`.

    Integrates the level-set form 1/sqrt(b x**4/2 - x**2 + 2E) with
    E = 1/(4b), where the radicand is the perfect square
    (sqrt(b/2) x**2 - sqrt(2E))**2 and stays positive for A < 1/sqrt(b).
    Used as the independent cross-check of the closed form.
    """
    if not (math.isfinite(b) and b > 0):
        raise DomainError(f"b must be positive and finite, got {b}")
    arg = math.sqrt(b) * amplitude
    if arg >= 1.0:
        raise ArgumentOutOfRange(
            f"sqrt(b)*A = {arg:g} >= 1; the integrand becomes singular"
        )
    energy2 = 0.5 / b  # 2E at the special energy

    def integrand(x):
        x2 = x * x
        return 1.0 / math.sqrt(0.5 * b * x2 * x2 - x2 + energy2)

    return 2.0 * _integrate(integrand, 0.0, amplitude, panels=4)


def inverted_amplitude_bound(b: float) -> BoundReport:
    """Amplitude bound A < k/sqrt(b) with k = (e-1)/(e+1).

    Requiring the special-energy transit time to stay positive bounds the
    atanh argument by the point where its logarithm reaches one, i.e.
    sqrt(b) A < (e-1)/(e+1).  The constant is computed at full precision,
    not from its printed 11-digit decimal.
    """
    if not (math.isfinite(b) and b > 0):
        raise DomainError(f"b must be positive and finite, got {b}")
    return BoundReport(
        regime=None,
        A_max=BOUND_CONSTANT / math.sqrt(b),
        formula_id="inverted-well-log-bound",
        inputs={"b": b},
    )


def amplitude_bound_physical(params: PhysicalParams) -> BoundReport:
    """Inverted-well amplitude bound in physical parameters.

    Classical: A_max = k / sqrt(b) at b = 4 lam/(m w**2), identical to the
    closed form (k w / 2) sqrt(m / lam).  Quantum: the same bound at the
    O(hbar)-truncated b.

    Raises
    ------
    DomainError
        If lam <= 0 (the inverted well needs a positive quartic strength
        for its reduced coupling).
    NegativeTruncatedB
        If the truncated quantum b is not positive, i.e. lam is too large
        for the first-order-in-hbar truncation to make sense.
    """
    if params.lam <= 0:
        raise DomainError(
            f"the inverted-well bound requires lam > 0, got {params.lam}"
        )
    if params.regime is Regime.CLASSICAL:
        b = classical_b(params)
        base = inverted_amplitude_bound(b)
        return BoundReport(
            regime=Regime.CLASSICAL,
            A_max=base.A_max,
            formula_id="classical-inverted-well-bound",
            inputs={"m": params.m, "omega": params.omega, "lambda": params.lam},
        )
    b = quantum_b_first_order(params)
    if b <= 0:
        raise NegativeTruncatedB(
            f"truncated quantum b = {b:g} <= 0 at lam={params.lam:g}; the "
            "first-order truncation has broken down"
        )
    return BoundReport(
        regime=Regime.QUANTUM,
        A_max=BOUND_CONSTANT / math.sqrt(b),
        formula_id="quantum-truncated-inverted-well-bound",
        inputs={
            "m": params.m,
            "omega": params.omega,
            "lambda": params.lam,
            "hbar": params.hbar,
        },
    )


# ---------------------------------------------------------------------------
# double well: finite-energy period, turning points, bound
# ---------------------------------------------------------------------------

def dw_radicand(b: float, E: float, k: float) -> float:
    """Radicand 4k**2 - 2bk**3 + 8Ek of the transit integral in k = x**2."""
    return 4.0 * k * k - 2.0 * b * k**3 + 8.0 * E * k


def dw_turning_points(b: float, E: float) -> TurningPoints:
    """Roots of the quadratic factor of the radicand: (1 +- sqrt(1+4bE))/b.

    k_plus is the squared turning point of the above-barrier motion at
    energy E; the residual of the radicand there, normalized by its largest
    term, certifies the root.  (The published roots have the opposite sign
    on the leading 1 and do not zero the radicand; see
    :func:`published_turning_points`.)
    """
    if not (math.isfinite(b) and b > 0):
        raise DomainError(f"b must be positive and finite, got {b}")
    if not (math.isfinite(E) and E > 0):
        raise DomainError(f"E must be positive and finite, got {E}")
    s = math.sqrt(1.0 + 4.0 * b * E)
    k_plus = (1.0 + s) / b
    k_minus = (1.0 - s) / b
    scale = max(
        4.0 * k_plus * k_plus, 2.0 * b * k_plus**3, 8.0 * E * k_plus
    )
    residual = abs(dw_radicand(b, E, k_plus)) / scale
    return TurningPoints(k_plus=k_plus, k_minus=k_minus, radicand_residual=residual)


def published_turning_points(b: float, E: float) -> tuple:
    """The turning-point roots exactly as published: (-1 +- sqrt(1+4bE))/b.

    Kept for documentation of the discrepancy; substituting them into the
    radicand gives a manifestly nonzero value.
    """
    s = math.sqrt(1.0 + 4.0 * b * E)
    return ((-1.0 + s) / b, (-1.0 - s) / b)


def dw_period(b: float, E: float, amplitude: float) -> float:
    """Round-trip time of the double-well motion at energy E > 0, up to
    displacement ``amplitude``.

    The transit integral int_0^{A**2} dk / sqrt(4k**2 - 2bk**3 + 8Ek) is the
    time for x to sweep from the barrier top at 0 out to A.  When A is the
    turning point sqrt(k_plus) that sweep is a quarter of the full symmetric
    round trip, so the integral is scaled by four; the result then agrees
    with the period measured on an integrated trajectory started from rest
    at the turning point.

    Both integrable endpoint singularities are removed by square-root
    substitutions: k = u**2 at the origin and k = k_plus - v**2 at the
    turning-point end.

    Raises
    ------
    AmplitudeBeyondTurningPoint
        If A**2 > k_plus: the radicand turns negative inside the interval
        and no real motion reaches such displacements at this energy.
    """
    if not (math.isfinite(amplitude) and amplitude > 0):
        raise DomainError(f"amplitude must be positive, got {amplitude}")
    tp = dw_turning_points(b, E)
    k_top = amplitude * amplitude
    if k_top > tp.k_plus:
        if k_top > tp.k_plus * (1.0 + 1e-12):
            raise AmplitudeBeyondTurningPoint(
                f"A**2 = {k_top:g} exceeds the turning point k_plus = "
                f"{tp.k_plus:g} at E = {E:g}"
            )
        k_top = tp.k_plus
    k_mid = 0.5 * k_top
    k_plus, k_minus = tp.k_plus, tp.k_minus

    def lower(u):  # k = u**2 removes the 1/sqrt(k) endpoint at the origin
        u2 = u * u
        return 2.0 / math.sqrt(4.0 * u2 - 2.0 * b * u2 * u2 + 8.0 * E)

    def upper(v):  # k = k_plus - v**2 removes the turning-point root
        k = k_plus - v * v
        return 2.0 / math.sqrt(2.0 * b * k * (k_plus - k_minus - v * v))

    quarter = _integrate(lower, 0.0, math.sqrt(k_mid), panels=6)
    quarter += _integrate(
        upper, math.sqrt(k_plus - k_top), math.sqrt(k_plus - k_mid), panels=6
    )
    return 4.0 * quarter


def dw_amplitude_bound(b: float, E: float) -> BoundReport:
    """Largest admissible amplitude sqrt(k_plus) of the energy-E motion.

    Reports the corrected value; the published variant
    sqrt((-1 + sqrt(1+4bE))/b), built from the uncorrected root, rides along
    for documentation.
    """
    tp = dw_turning_points(b, E)
    published_root = published_turning_points(b, E)[0]
    return BoundReport(
        regime=None,
        A_max=math.sqrt(tp.k_plus),
        formula_id="double-well-turning-point-bound",
        inputs={"b": b, "E": E},
        published_A_max=math.sqrt(published_root),
    )
