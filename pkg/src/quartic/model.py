"""Reduced-equation coefficient maps and closed-form frequency results.

The quartic oscillator H = p**2/2m + (1/2) m w**2 x**2 + lam x**4 obeys, both
in classical mechanics and for the coherent-state expectation values of the
quantum problem, an equation of motion of the common cubic form

    x'' + eps1 * x + eps2 * x**3 = 0.

Only the coefficients differ between the two regimes:

    classical:  eps1 = w**2,                 eps2 = 4 lam / m
    quantum:    eps1 = w**2/hbar + 12 lam/(m**2 w),   eps2 = 4 lam/(m hbar)

After rescaling time by sqrt(eps1) the single knob left is b = eps2/eps1,
the expansion parameter of the Lindstedt engine.  The quantum b, truncated
at first order in hbar, is

    b = 4 lam/(m w**2) - 48 lam**2 hbar/(m**3 w**5),

which is what gives the quantum frequency its characteristic softening and,
at special couplings, exact amplitude independence (isochronicity).

All quantities are dimensionless natural-unit numbers; hbar is a free
positive parameter and no unit checking is attempted.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

from .errors import (
    DomainError,
    NonPositiveLinearCoefficient,
    PerturbationRangeWarning,
    UnsupportedOrder,
)

__all__ = [
    "Regime",
    "Truncation",
    "PotentialShape",
    "PhysicalParams",
    "ReducedCoeffs",
    "IsochronicityReport",
    "reduce_classical",
    "reduce_quantum",
    "classical_b",
    "quantum_b_first_order",
    "quantum_b_squared_first_order",
    "frequency_classical",
    "frequency_quantum",
    "isochronicity_first_order_quantum",
    "isochronicity_second_order_classical",
    "isochronicity_second_order_quantum",
    "second_order_condition_residual",
    "published_feasibility_margin",
]


class Regime(Enum):
    CLASSICAL = "classical"
    QUANTUM = "quantum"


class Truncation(Enum):
    EXACT = "exact"
    FIRST_ORDER_HBAR = "first-order-hbar"


class PotentialShape(Enum):
    SINGLE_WELL = "single-well"
    INVERTED_DOUBLE_WELL = "inverted-double-well"
    DOUBLE_WELL = "double-well"


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class PhysicalParams:
    """Physical inputs of the oscillator in natural units.

    Attributes
    ----------
    m : float
        Mass, > 0.
    omega : float
        Linear angular frequency, > 0.
    lam : float
        Quartic coupling; its sign selects the potential branch.
    hbar : float
        Quantum scale, > 0; ignored by the classical maps.
    regime : Regime
        Which coefficient map the parameters are meant for.
    """

    m: float
    omega: float
    lam: float
    hbar: float = 1.0
    regime: Regime = Regime.CLASSICAL

    def __post_init__(self):
        for name in ("m", "omega", "lam", "hbar"):
            object.__setattr__(self, name, _require_finite(name, getattr(self, name)))
        if self.m <= 0:
            raise DomainError(f"mass must be positive, got {self.m}")
        if self.omega <= 0:
            raise DomainError(f"omega must be positive, got {self.omega}")
        if self.hbar <= 0:
            raise DomainError(f"hbar must be positive, got {self.hbar}")


@dataclass(frozen=True)
class ReducedCoeffs:
    """Coefficients of the reduced equation x'' + eps1 x + eps2 x**3 = 0."""

    eps1: float
    eps2: float
    b: float
    shape: PotentialShape
    truncation: Truncation


@dataclass(frozen=True)
class IsochronicityReport:
    """Roots of the second-order amplitude-independence condition."""

    lambda_roots: tuple
    discriminant: float
    feasible: bool
    order: int
    regime: Regime


def _shape_of(eps1: float, eps2: float) -> PotentialShape:
    if eps1 > 0 and eps2 >= 0:
        return PotentialShape.SINGLE_WELL
    if eps1 > 0 and eps2 < 0:
        return PotentialShape.INVERTED_DOUBLE_WELL
    if eps1 < 0 and eps2 > 0:
        return PotentialShape.DOUBLE_WELL
    raise DomainError(
        f"coefficients eps1={eps1}, eps2={eps2} give a potential with no "
        "bounded oscillation region"
    )


def _warn_if_large(b: float) -> None:
    if abs(b) >= 1.0:
        warnings.warn(
            f"|b| = {abs(b):g} >= 1: b is no longer a smallness parameter and "
            "the perturbative results are unreliable",
            PerturbationRangeWarning,
            stacklevel=3,
        )


def classical_b(params: PhysicalParams) -> float:
    """Classical expansion parameter b = 4 lam / (m w**2)."""
    return 4.0 * params.lam / (params.m * params.omega**2)


def quantum_b_first_order(params: PhysicalParams) -> float:
    """Quantum b truncated at first order in hbar."""
    m, w, lam, hbar = params.m, params.omega, params.lam, params.hbar
    return 4.0 * lam / (m * w**2) - 48.0 * lam**2 * hbar / (m**3 * w**5)


def quantum_b_squared_first_order(params: PhysicalParams) -> float:
    """Quantum b**2 truncated at first order in hbar (not the square of
    :func:`quantum_b_first_order`, which would carry an hbar**2 term)."""
    m, w, lam, hbar = params.m, params.omega, params.lam, params.hbar
    return 16.0 * lam**2 / (m**2 * w**4) - 384.0 * lam**3 * hbar / (m**4 * w**7)


def reduce_classical(params: PhysicalParams) -> ReducedCoeffs:
    """Classical coefficient map eps1 = w**2, eps2 = 4 lam / m."""
    if params.regime is not Regime.CLASSICAL:
        raise DomainError("reduce_classical expects regime=Regime.CLASSICAL")
    eps1 = params.omega**2
    eps2 = 4.0 * params.lam / params.m
    b = eps2 / eps1
    _warn_if_large(b)
    return ReducedCoeffs(
        eps1=eps1, eps2=eps2, b=b, shape=_shape_of(eps1, eps2),
        truncation=Truncation.EXACT,
    )


def reduce_quantum(
    params: PhysicalParams, truncation: Truncation = Truncation.EXACT
) -> ReducedCoeffs:
    """Quantum coefficient map from the coherent-state equation of motion.

    The linear coefficient is eps1 = w**2/hbar + 12 lam/(m**2 w) and the
    cubic one eps2 = 4 lam/(m hbar).  With ``Truncation.EXACT`` the ratio
    b = eps2/eps1 is returned as-is; with ``Truncation.FIRST_ORDER_HBAR`` it
    is replaced by its O(hbar) truncation, the form the closed-form frequency
    results are written in.

    Raises
    ------
    NonPositiveLinearCoefficient
        If eps1 <= 0, i.e. lam is so negative the oscillatory analysis
        around the origin breaks down.
    """
    if params.regime is not Regime.QUANTUM:
        raise DomainError("reduce_quantum expects regime=Regime.QUANTUM")
    m, w, lam, hbar = params.m, params.omega, params.lam, params.hbar
    eps1 = w**2 / hbar + 12.0 * lam / (m**2 * w)
    eps2 = 4.0 * lam / (m * hbar)
    if eps1 <= 0:
        raise NonPositiveLinearCoefficient(
            f"linear coefficient {eps1:g} <= 0 at lam={lam:g}; the "
            "oscillatory reduction does not apply"
        )
    if truncation is Truncation.EXACT:
        b = eps2 / eps1
    else:
        b = quantum_b_first_order(params)
    _warn_if_large(b)
    return ReducedCoeffs(
        eps1=eps1, eps2=eps2, b=b, shape=_shape_of(eps1, eps2),
        truncation=truncation,
    )


def _check_amplitude_order(amplitude: float, order: int) -> None:
    if amplitude <= 0 or not math.isfinite(amplitude):
        raise DomainError(f"amplitude must be positive and finite, got {amplitude}")
    if order not in (1, 2):
        raise UnsupportedOrder(
            f"order {order} has no closed form here; use lindstedt.expand"
        )


def frequency_classical(params: PhysicalParams, amplitude: float, order: int) -> float:
    """Classical dimensionless frequency to first or second order.

        order 1:  1 + 3 A**2 lam / (2 m w**2)
        order 2:  ... - 21 A**4 lam**2 / (16 m**2 w**4)

    These are the Lindstedt series coefficients evaluated at the classical b;
    the frequency is measured in units of the rescaled time, so lam = 0 gives
    exactly 1.
    """
    _check_amplitude_order(amplitude, order)
    m, w, lam = params.m, params.omega, params.lam
    a2 = amplitude * amplitude
    omega = 1.0 + 3.0 * a2 * lam / (2.0 * m * w**2)
    if order == 2:
        omega -= 21.0 * a2 * a2 * lam**2 / (16.0 * m**2 * w**4)
    return omega


def frequency_quantum(params: PhysicalParams, amplitude: float, order: int) -> float:
    """Quantum dimensionless frequency to first or second order in b.

    Relative to the classical result each order picks up one O(hbar)
    correction with the opposite sign:

        order 1:  1 + 3 A**2 lam/(2 m w**2) - 18 lam**2 A**2 hbar/(m**3 w**5)
        order 2:  ... - 21 A**4 lam**2/(16 m**2 w**4)
                      + 63 A**4 lam**3 hbar/(2 m**4 w**7)

    Equivalent to evaluating the Lindstedt series at the truncated quantum b
    and dropping everything beyond first order in hbar.
    """
    _check_amplitude_order(amplitude, order)
    if params.regime is not Regime.QUANTUM:
        raise DomainError("frequency_quantum expects regime=Regime.QUANTUM")
    m, w, lam, hbar = params.m, params.omega, params.lam, params.hbar
    eps1 = w**2 / hbar + 12.0 * lam / (m**2 * w)
    if eps1 <= 0:
        raise NonPositiveLinearCoefficient(
            f"linear coefficient {eps1:g} <= 0 at lam={lam:g}"
        )
    a2 = amplitude * amplitude
    omega = (
        1.0
        + 3.0 * a2 * lam / (2.0 * m * w**2)
        - 18.0 * lam**2 * a2 * hbar / (m**3 * w**5)
    )
    if order == 2:
        omega -= 21.0 * a2 * a2 * lam**2 / (16.0 * m**2 * w**4)
        omega += 63.0 * a2 * a2 * lam**3 * hbar / (2.0 * m**4 * w**7)
    return omega


def isochronicity_first_order_quantum(params: PhysicalParams) -> float:
    """Coupling lam* = m**2 w**3 / (12 hbar) at which the first-order quantum
    frequency equals 1 for every amplitude (classical hardening and quantum
    softening cancel identically)."""
    if params.regime is not Regime.QUANTUM:
        raise DomainError("expects regime=Regime.QUANTUM")
    return params.m**2 * params.omega**3 / (12.0 * params.hbar)


def isochronicity_second_order_classical(
    params: PhysicalParams, amplitude: float
) -> float:
    """Coupling lam = 8 m w**2 / (7 A**2) at which the second-order classical
    frequency equals 1: both amplitude terms evaluate to 12/7 and cancel."""
    if amplitude <= 0 or not math.isfinite(amplitude):
        raise DomainError(f"amplitude must be positive and finite, got {amplitude}")
    return 8.0 * params.m * params.omega**2 / (7.0 * amplitude**2)


def _second_order_coefficients(params: PhysicalParams, amplitude: float):
    """Quadratic a*lam**2 + b*lam + c = 0, the condition with lam factored out."""
    m, w, hbar = params.m, params.omega, params.hbar
    a2 = amplitude * amplitude
    a4 = a2 * a2
    qa = 63.0 * a4 * hbar / (2.0 * m**4 * w**7)
    qb = -(18.0 * a2 * hbar / (m**3 * w**5) + 21.0 * a4 / (16.0 * m**2 * w**4))
    qc = 3.0 * a2 / (2.0 * m * w**2)
    return qa, qb, qc


def isochronicity_second_order_quantum(
    params: PhysicalParams, amplitude: float
) -> IsochronicityReport:
    """Solve the second-order quantum amplitude-independence condition.

    The condition is a cubic in lam whose trivial root lam = 0 is divided
    out, leaving a quadratic.  Feasibility is decided by the standard
    discriminant b**2 - 4ac of that quadratic.  (The published inequality
    for this condition omits the square on its first group; the corrected
    discriminant is used here, the literal form is available through
    :func:`published_feasibility_margin`.)

    Returns a report rather than raising when no real root exists: the
    ``feasible`` flag is False and the root tuple empty.
    """
    if amplitude <= 0 or not math.isfinite(amplitude):
        raise DomainError(f"amplitude must be positive and finite, got {amplitude}")
    if params.regime is not Regime.QUANTUM:
        raise DomainError("expects regime=Regime.QUANTUM")
    qa, qb, qc = _second_order_coefficients(params, amplitude)
    disc = qb * qb - 4.0 * qa * qc
    if disc < 0.0:
        return IsochronicityReport(
            lambda_roots=(), discriminant=disc, feasible=False, order=2,
            regime=Regime.QUANTUM,
        )
    # qb < 0 always, so this ordering avoids catastrophic cancellation
    q = -(qb - math.sqrt(disc)) / 2.0
    roots = tuple(sorted((qc / q, q / qa)))
    return IsochronicityReport(
        lambda_roots=roots, discriminant=disc, feasible=True, order=2,
        regime=Regime.QUANTUM,
    )


def second_order_condition_residual(
    params: PhysicalParams, amplitude: float, lam: float
) -> float:
    """Relative residual of the second-order condition at a candidate lam.

    The condition is the vanishing of the amplitude-dependent part of the
    order-2 quantum frequency; the residual is normalized by the largest of
    its four terms so a true root reports ~1e-16 regardless of scale.
    """
    m, w, hbar = params.m, params.omega, params.hbar
    a2 = amplitude * amplitude
    a4 = a2 * a2
    t1 = 3.0 * a2 * lam / (2.0 * m * w**2)
    t2 = -18.0 * lam**2 * a2 * hbar / (m**3 * w**5)
    t3 = -21.0 * a4 * lam**2 / (16.0 * m**2 * w**4)
    t4 = 63.0 * a4 * lam**3 * hbar / (2.0 * m**4 * w**7)
    scale = max(abs(t1), abs(t2), abs(t3), abs(t4), 1e-300)
    return abs(t1 + t2 + t3 + t4) / scale


def published_feasibility_margin(params: PhysicalParams, amplitude: float) -> float:
    """Literal published feasibility expression (first group not squared).

    Diagnostic only: it differs from the true discriminant and never drives
    any decision in this package.
    """
    m, w, hbar = params.m, params.omega, params.hbar
    a2 = amplitude * amplitude
    a4 = a2 * a2
    return (
        18.0 * a2 * hbar / (m**3 * w**5)
        + 21.0 * a4 / (16.0 * m**2 * w**4)
        - 189.0 * a4 * a2 * hbar / (m**5 * w**9)
    )
