"""Numerical ground truth: fixed-step integration, period measurement, and
the exact elliptic-integral frequency of the hardening cubic oscillator.

Everything here integrates the reduced equation

    x'' + s1 * x + s3 * x**3 = 0,     x(0) = A, p(0) = p0 (default 0),

with p = x'.  Fixed steps are used on purpose: runs are bit-reproducible and
the convergence order of the methods can be measured cleanly, which the test
suite does.  RK4 is the workhorse; leapfrog (kick-drift-kick) is provided as
the symplectic cross-check with its characteristic bounded O(dt**2) energy
error.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, InsufficientCycles, UnboundedMotion

__all__ = [
    "Method",
    "Trajectory",
    "PeriodEstimate",
    "ESCAPE_THRESHOLD",
    "integrate",
    "measure_period",
    "conserved_drift",
    "ellipk",
    "exact_duffing_omega",
]


class Method(Enum):
    RK4 = "rk4"
    LEAPFROG = "leapfrog"


# far above the scale 1/sqrt(|s3|) of any bounded orbit
ESCAPE_THRESHOLD = 1e8


@dataclass(frozen=True)
class Trajectory:
    """Uniformly sampled solution of x'' + s1 x + s3 x**3 = 0."""

    tau: np.ndarray
    x: np.ndarray
    p: np.ndarray
    dt: float
    method: Method
    s1: float
    s3: float

    def conserved(self) -> np.ndarray:
        """C(tau) = p**2/2 + s1 x**2/2 + s3 x**4/4 along the samples."""
        x = self.x
        return 0.5 * self.p**2 + 0.5 * self.s1 * x**2 + 0.25 * self.s3 * x**4

    def __len__(self) -> int:
        return len(self.tau)


@dataclass(frozen=True)
class PeriodEstimate:
    period: float
    omega: float
    cycles_used: int
    uncertainty: float


def integrate(
    s1: float,
    s3: float,
    amplitude: float,
    dt: float,
    n_steps: int,
    method: Method = Method.RK4,
    initial_momentum: float = 0.0,
) -> Trajectory:
    """Integrate with fixed step dt for n_steps steps.

    Parameters
    ----------
    s1, s3 : float
        Linear and cubic coefficients of the reduced equation.
    amplitude : float
        Initial displacement x(0).
    dt : float
        Step size; negative values integrate backward in time.
    n_steps : int
        Number of steps; the trajectory holds n_steps + 1 samples.
    method : Method
        RK4 or kick-drift-kick leapfrog.
    initial_momentum : float
        p(0); zero for a release from rest at the turning point.

    Raises
    ------
    UnboundedMotion
        As soon as |x| exceeds ESCAPE_THRESHOLD (or stops being finite),
        which is the expected outcome for initial data outside the bounded
        region of the double-well variants.
    """
    if dt == 0.0 or not math.isfinite(dt):
        raise DomainError(f"dt must be nonzero and finite, got {dt}")
    if n_steps < 0:
        raise DomainError(f"n_steps must be nonnegative, got {n_steps}")

    x = float(amplitude)
    p = float(initial_momentum)
    xs = array("d", [x])
    ps = array("d", [p])
    append_x = xs.append
    append_p = ps.append
    h = float(dt)
    h2 = 0.5 * h
    h6 = h / 6.0
    lim = ESCAPE_THRESHOLD

    if method is Method.RK4:
        for i in range(n_steps):
            k1p = -(s1 * x + s3 * x * x * x)
            xa = x + h2 * p
            pa = p + h2 * k1p
            k2p = -(s1 * xa + s3 * xa * xa * xa)
            xb = x + h2 * pa
            pb = p + h2 * k2p
            k3p = -(s1 * xb + s3 * xb * xb * xb)
            xc = x + h * pb
            pc = p + h * k3p
            k4p = -(s1 * xc + s3 * xc * xc * xc)
            x = x + h6 * (p + 2.0 * (pa + pb) + pc)
            p = p + h6 * (k1p + 2.0 * (k2p + k3p) + k4p)
            if not (-lim < x < lim):
                raise UnboundedMotion(
                    f"|x| exceeded {lim:g} at step {i + 1} (tau = {(i + 1) * h:g})"
                )
            append_x(x)
            append_p(p)
    elif method is Method.LEAPFROG:
        for i in range(n_steps):
            p = p + h2 * (-(s1 * x + s3 * x * x * x))
            x = x + h * p
            p = p + h2 * (-(s1 * x + s3 * x * x * x))
            if not (-lim < x < lim):
                raise UnboundedMotion(
                    f"|x| exceeded {lim:g} at step {i + 1} (tau = {(i + 1) * h:g})"
                )
            append_x(x)
            append_p(p)
    else:
        raise DomainError(f"unknown method {method!r}")

    n = len(xs)
    tau = np.arange(n, dtype=float) * h
    return Trajectory(
        tau=tau,
        x=np.frombuffer(xs, dtype=float).copy(),
        p=np.frombuffer(ps, dtype=float).copy(),
        dt=h,
        method=method,
        s1=float(s1),
        s3=float(s3),
    )


def _hermite_root(p0, p1, m0, m1):
    """Root in [0, 1] of the cubic Hermite through (0, p0), (1, p1) with end
    slopes m0, m1, given p0 > 0 >= p1.  Guarded Newton with a bisection
    bracket; the bracket guarantees convergence, Newton the speed."""
    lo, hi = 0.0, 1.0
    s = p0 / (p0 - p1)

    def value(t):
        t2 = t * t
        t3 = t2 * t
        return (
            (2.0 * t3 - 3.0 * t2 + 1.0) * p0
            + (t3 - 2.0 * t2 + t) * m0
            + (-2.0 * t3 + 3.0 * t2) * p1
            + (t3 - t2) * m1
        )

    def slope(t):
        t2 = t * t
        return (
            (6.0 * t2 - 6.0 * t) * p0
            + (3.0 * t2 - 4.0 * t + 1.0) * m0
            + (6.0 * t - 6.0 * t2) * p1
            + (3.0 * t2 - 2.0 * t) * m1
        )

    for _ in range(60):
        v = value(s)
        if v > 0.0:
            lo = s
        else:
            hi = s
        d = slope(s)
        s_next = s - v / d if d != 0.0 else 0.5 * (lo + hi)
        if not lo < s_next < hi:
            s_next = 0.5 * (lo + hi)
        if abs(s_next - s) <= 1e-16:
            return s_next
        s = s_next
    return s


def measure_period(traj: Trajectory) -> PeriodEstimate:
    """Period from successive downward zero crossings of p (displacement
    maxima), each crossing refined by cubic Hermite interpolation.

    The Hermite end slopes come from the equation of motion itself,
    p' = -(s1 x + s3 x**3), evaluated at the stored samples, so the crossing
    location is locally fourth-order accurate, consistent with RK4.

    Raises
    ------
    InsufficientCycles
        With fewer than three detected maxima (two full cycles between them)
        there is no spread to average over.
    """
    x, p = traj.x, traj.p
    idx = np.nonzero((p[:-1] > 0.0) & (p[1:] <= 0.0))[0]
    if len(idx) < 3:
        raise InsufficientCycles(
            f"found {len(idx)} displacement maxima, need at least 3"
        )
    s1, s3, h = traj.s1, traj.s3, traj.dt
    crossings = []
    for i in idx:
        x0, x1 = x[i], x[i + 1]
        m0 = -(s1 * x0 + s3 * x0**3) * h
        m1 = -(s1 * x1 + s3 * x1**3) * h
        s = _hermite_root(p[i], p[i + 1], m0, m1)
        crossings.append(traj.tau[i] + s * h)
    gaps = [b - a for a, b in zip(crossings, crossings[1:])]
    n = len(gaps)
    period = math.fsum(gaps) / n
    var = math.fsum((g - period) ** 2 for g in gaps) / (n - 1)
    uncertainty = math.sqrt(var) if var > 0.0 else 0.0
    return PeriodEstimate(
        period=period,
        omega=2.0 * math.pi / period,
        cycles_used=n,
        uncertainty=uncertainty,
    )


def conserved_drift(traj: Trajectory) -> float:
    """Max |C(tau) - C(0)| over the stored samples."""
    c = traj.conserved()
    return float(np.max(np.abs(c - c[0]))) if len(c) else 0.0


def ellipk(m: float) -> float:
    """Complete elliptic integral K(m), parameter convention m = k**2,
    by the arithmetic-geometric mean: K = pi / (2 * AGM(1, sqrt(1-m)))."""
    if not 0.0 <= m < 1.0:
        raise DomainError(f"parameter m must be in [0, 1), got {m}")
    a, g = 1.0, math.sqrt(1.0 - m)
    # quadratic convergence; the tolerance sits safely above one ulp so the
    # iteration cannot ping-pong on the last bit
    for _ in range(64):
        if abs(a - g) <= 1e-14 * a:
            break
        a, g = 0.5 * (a + g), math.sqrt(a * g)
    return math.pi / (2.0 * a)


def exact_duffing_omega(b: float, amplitude: float) -> float:
    """Exact frequency of x'' + x + b x**3 = 0 released from rest at A.

    From the energy integral the quarter period is K(m)/sqrt(1 + b A**2)
    with m = b A**2 / (2 (1 + b A**2)), hence

        Omega = (pi / 2) * sqrt(1 + b A**2) / K(m).

    Valid for b >= 0 (hardening spring); this is the oracle the series and
    the integrator are both checked against.
    """
    if b < 0.0:
        raise DomainError(f"closed-form frequency requires b >= 0, got {b}")
    e = b * amplitude * amplitude
    m = e / (2.0 * (1.0 + e))
    return 0.5 * math.pi * math.sqrt(1.0 + e) / ellipk(m)
