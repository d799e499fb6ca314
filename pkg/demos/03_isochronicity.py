"""Couplings at which the frequency stops depending on the amplitude.

Three separate mechanisms produce an amplitude-independent (isochronous)
frequency:

1. quantum, first order: at lam = m^2 w^3 / (12 hbar) the hardening and the
   quantum softening cancel for every amplitude;
2. classical, second order: at lam = 8 m w^2 / (7 A^2) the two amplitude
   terms both equal 12/7 and cancel (amplitude-specific);
3. quantum, second order: a quadratic condition in lam whose two roots are
   certified by direct substitution.
"""

import _path  # noqa: F401

from quartic import (
    PhysicalParams,
    Regime,
    frequency_classical,
    frequency_quantum,
    isochronicity_first_order_quantum,
    isochronicity_second_order_classical,
    isochronicity_second_order_quantum,
    second_order_condition_residual,
)

print(__doc__)

pq = PhysicalParams(m=1, omega=1, lam=0.0, regime=Regime.QUANTUM)
lam_star = isochronicity_first_order_quantum(pq)
print(f"1. quantum first order: lam* = {lam_star:.10f} (= 1/12 here)")
for amplitude in (0.5, 1.0, 2.0, 5.0):
    omega = frequency_quantum(
        PhysicalParams(m=1, omega=1, lam=lam_star, regime=Regime.QUANTUM),
        amplitude, 1,
    )
    print(f"   A = {amplitude:4.1f}: Omega = {omega:.16f}")
print()

pc = PhysicalParams(m=1, omega=1, lam=0.0)
lam2 = isochronicity_second_order_classical(pc, 1.0)
omega2 = frequency_classical(PhysicalParams(m=1, omega=1, lam=lam2), 1.0, 2)
print(f"2. classical second order at A = 1: lam = {lam2:.10f} (= 8/7)")
print(f"   Omega(order 2) = {omega2:.16f} (12/7 - 12/7 cancellation)")
print()

report = isochronicity_second_order_quantum(pq, 1.0)
print(f"3. quantum second order at A = 1: discriminant = {report.discriminant:.6f}")
for root in report.lambda_roots:
    residual = second_order_condition_residual(pq, 1.0, root)
    print(f"   lam = {root:.9f}  condition residual = {residual:.3e}")
infeasible = isochronicity_second_order_quantum(
    PhysicalParams(m=1, omega=1, lam=0.0, hbar=0.3, regime=Regime.QUANTUM), 1.0
)
print(f"   at hbar = 0.3 the discriminant is {infeasible.discriminant:.4f} < 0: "
      f"feasible = {infeasible.feasible}, no real coupling exists")
