"""Poincare-Lindstedt expansion of the rescaled cubic oscillator.

The equation under study, after pulling the unknown frequency into the time
variable T = Omega * tau, is

    Omega**2 * x''(T) + x(T) + b * x(T)**3 = 0,      x(0) = A, x'(0) = 0.

Both the trajectory and the frequency are expanded in powers of b,

    x = x_0 + b x_1 + b**2 x_2 + ...,   Omega = 1 + O_1 b + O_2 b**2 + ...,

and each O_k is fixed so that the resonant cos(T) forcing at order k
cancels.  Plain expansion in b alone would instead pick up secularly growing
T*sin(T) terms and be useless beyond a few periods.

The order-k right-hand side is assembled by symbolic collection of the full
equation: the Omega**2 x'' convolution and the three-fold product expansion
of x**3 both contribute cross terms, and nothing is transcribed by hand.
All arithmetic is exact; the classic leading corrections come out as the
certified rationals O_1 = (3/8) A**2 and O_2 = -(21/256) A**4.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import OrderCapExceeded, PerturbationRangeWarning
from .trigpoly import AmpPoly, TrigSeries, solve_particular

__all__ = [
    "DEFAULT_ORDER_CAP",
    "PerturbationSolution",
    "expand",
    "omega_value",
    "omega_value_exact",
    "trajectory_value",
    "residual_value",
]

DEFAULT_ORDER_CAP = 8

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class PerturbationSolution:
    """Frequency and displacement corrections of one expansion run.

    ``omega_corrections[k-1]`` is O_k (a polynomial in A) and
    ``displacement_corrections[k]`` is x_k(T), with x_0 = A cos(T).
    Every x_k with k >= 1 vanishes at T = 0 so the full series keeps
    x(0) = A at any b.
    """

    order: int
    omega_corrections: tuple
    displacement_corrections: tuple

    def omega_correction(self, k: int) -> AmpPoly:
        """O_k for 1 <= k <= order."""
        return self.omega_corrections[k - 1]

    def displacement(self, k: int) -> TrigSeries:
        """x_k for 0 <= k <= order."""
        return self.displacement_corrections[k]


def expand(order: int, order_cap: int = DEFAULT_ORDER_CAP) -> PerturbationSolution:
    """Run the expansion through the given order.

    Parameters
    ----------
    order : int
        Number of corrections to compute (>= 1).
    order_cap : int
        Safety cap on the order; rational coefficient growth is modest but
        the harmonic count rises as 2k+1.

    Raises
    ------
    OrderCapExceeded
        If ``order`` is not in [1, order_cap].
    """
    if not 1 <= order <= order_cap:
        raise OrderCapExceeded(
            f"order {order} outside [1, {order_cap}]; raise order_cap to go higher"
        )

    x0 = TrigSeries.cosine(1, AmpPoly.term(1, 1))  # A cos(T)
    displacements = [x0]
    omegas: list[AmpPoly] = []
    # omega_sq[j] = coefficient of b**j in Omega**2; omega_sq[0] = 1
    omega_sq = [AmpPoly.term(1)]

    for k in range(1, order + 1):
        # cubic convolution: coefficient of b**(k-1) in (sum_j b**j x_j)**3
        cube = TrigSeries.zero()
        for m in range(k):
            square_m = TrigSeries.zero()
            for i in range(m + 1):
                square_m = square_m + displacements[i] * displacements[m - i]
            cube = cube + square_m * displacements[k - 1 - m]

        # Omega**2 x'' at order k, except the unknown 2*O_k piece
        cross = AmpPoly.zero()
        for i in range(1, k):
            cross = cross + omegas[i - 1] * omegas[k - i - 1]
        rhs = -(cross * x0.second_derivative()) - cube
        for j in range(1, k):
            rhs = rhs - omega_sq[j] * displacements[k - j].second_derivative()

        # The unknown contributes -2*O_k*x0'' = +2*O_k*A*cos(T); kill cos(T).
        secular = rhs.coefficient(1)
        omega_k = (secular * Fraction(-1, 2)).shift_down(1)
        omegas.append(omega_k)
        omega_sq.append(omega_k * 2 + cross)

        particular = solve_particular(rhs.without_harmonic(1))
        homogeneous = TrigSeries.cosine(1, -particular.value_at_origin())
        displacements.append(particular + homogeneous)

    return PerturbationSolution(
        order=order,
        omega_corrections=tuple(omegas),
        displacement_corrections=tuple(displacements),
    )


def _check_range(b: float, amplitude: float) -> None:
    if abs(b) * amplitude * amplitude > 1.0:
        warnings.warn(
            f"b*A^2 = {b * amplitude * amplitude:g} exceeds 1; the series is "
            "outside its trustworthy range",
            PerturbationRangeWarning,
            stacklevel=3,
        )


def omega_value(sol: PerturbationSolution, b: float, amplitude: float) -> float:
    """Numeric frequency 1 + sum_k O_k(A) b**k."""
    _check_range(b, amplitude)
    total = 1.0
    bk = 1.0
    for poly in sol.omega_corrections:
        bk *= b
        total += poly.evaluate(amplitude) * bk
    return total


def omega_value_exact(
    sol: PerturbationSolution, b: Fraction, amplitude: Fraction
) -> Fraction:
    """Same series evaluated in exact rational arithmetic."""
    b = Fraction(b)
    amplitude = Fraction(amplitude)
    total = Fraction(1)
    bk = Fraction(1)
    for poly in sol.omega_corrections:
        bk *= b
        total += poly.evaluate_exact(amplitude) * bk
    return total


def trajectory_value(
    sol: PerturbationSolution, b: float, amplitude: float, tau: float
) -> float:
    """Displacement at unscaled time tau: sum_k b**k x_k(A, Omega*tau)."""
    _check_range(b, amplitude)
    phase = omega_value(sol, b, amplitude) * tau
    total = 0.0
    bk = 1.0
    for series in sol.displacement_corrections:
        total += bk * series.evaluate(amplitude, phase)
        bk *= b
    return total


def residual_value(
    sol: PerturbationSolution, b: float, amplitude: float, tau: float
) -> float:
    """Defect x'' + x + b x**3 of the truncated series at time tau.

    Derivatives are taken in tau, so the Omega**2 factor from the chain rule
    multiplies the T-derivatives.  For an order-N solution the defect is
    O(b**(N+1)) uniformly in tau.
    """
    omega = omega_value(sol, b, amplitude)
    phase = omega * tau
    value = 0.0
    second = 0.0
    bk = 1.0
    for series in sol.displacement_corrections:
        value += bk * series.evaluate(amplitude, phase)
        second += bk * series.second_derivative().evaluate(amplitude, phase)
        bk *= b
    return omega * omega * second + value + b * value**3
