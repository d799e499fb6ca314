"""Separatrix transit times, amplitude bounds, and the published-root errata.

Flipping signs turns the oscillator into an inverted double well (humps at
|x| = 1/sqrt(b)) or a double well (barrier at the origin).  On the zero-
energy level the transit time diverges logarithmically; at the inverted
well's special energy 2 sqrt(bE) = 1 it has an atanh closed form, which
caps the amplitude at k/sqrt(b) with k = (e-1)/(e+1); for the double well
at energy E the turning point of the radicand caps it at sqrt(k_plus).
"""

import math

import _path  # noqa: F401

from quartic import (
    BOUND_CONSTANT,
    WellKind,
    WellSpec,
    dw_amplitude_bound,
    dw_period,
    dw_radicand,
    dw_turning_points,
    integrate,
    inverted_special_period,
    measure_period,
    published_turning_points,
    separatrix_period_divergence,
    special_period_quadrature,
)

print(__doc__)

print(f"bound constant k = (e-1)/(e+1) = {BOUND_CONSTANT:.11f}")
closed = inverted_special_period(1.0, BOUND_CONSTANT)
print(f"special-energy transit at A = k, b = 1: {closed:.15f} "
      f"(= sqrt(2), since atanh(k) = 1/2)")
quad = special_period_quadrature(1.0, 0.3)
print(f"closed form vs quadrature at A = 0.3: "
      f"{inverted_special_period(1.0, 0.3):.15f} vs {quad:.15f}")
print()

print("double well at b = 1, E = 2:")
tp = dw_turning_points(1.0, 2.0)
print(f"  corrected turning points: k_plus = {tp.k_plus}, k_minus = {tp.k_minus}"
      f" (radicand residual {tp.radicand_residual:.1e})")
pub = published_turning_points(1.0, 2.0)
print(f"  published roots {pub}: radicand at {pub[0]:g} is "
      f"{dw_radicand(1.0, 2.0, pub[0]):g}, demonstrably nonzero (erratum)")
bound = dw_amplitude_bound(1.0, 2.0)
print(f"  amplitude bound: corrected {bound.A_max}, published "
      f"{bound.published_A_max:.6f}")

period = dw_period(1.0, 2.0, 2.0)
traj = integrate(-1.0, 1.0, 2.0, 1e-3, int(4 * period / 1e-3))
measured = measure_period(traj).period
print(f"  quadrature period {period:.12f} vs simulated {measured:.12f} "
      f"(relative difference {abs(period - measured) / measured:.1e})")
print()

print("zero-energy divergence: halving the cutoff adds ~log(2) each time")
spec = WellSpec(b=1.0, well=WellKind.DOUBLE_WELL, E=0.0)
previous = None
for i in range(6):
    cutoff = 0.5 / 2**i
    value = separatrix_period_divergence(spec, cutoff, 1.0)
    note = f" (increment {value - previous:.6f})" if previous is not None else ""
    print(f"  cutoff = {cutoff:9.6f}: integral = {value:9.6f}{note}")
    previous = value
print(f"  log(2) = {math.log(2):.6f}")
