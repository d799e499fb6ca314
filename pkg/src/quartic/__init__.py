"""Quartic-oscillator frequency analysis.

Reduced classical/quantum models of the oscillator with Hamiltonian
p**2/2m + (1/2) m w**2 x**2 + lam x**4, an exact-rational Poincare-Lindstedt
expansion engine, isochronicity solvers, fixed-step numerical oracles, and
separatrix period/bound calculations for the double-well variants.
"""

from .dynamics import (
    ESCAPE_THRESHOLD,
    Method,
    PeriodEstimate,
    Trajectory,
    conserved_drift,
    ellipk,
    exact_duffing_omega,
    integrate,
    measure_period,
)
from .errors import (
    AmplitudeBeyondTurningPoint,
    ArgumentOutOfRange,
    DomainError,
    InsufficientCycles,
    NegativeTruncatedB,
    NonPositiveLinearCoefficient,
    OrderCapExceeded,
    PerturbationRangeWarning,
    QuarticError,
    ResidualSecularity,
    UnboundedMotion,
    UnsupportedOrder,
)
from .lindstedt import (
    DEFAULT_ORDER_CAP,
    PerturbationSolution,
    expand,
    omega_value,
    omega_value_exact,
    residual_value,
    trajectory_value,
)
from .model import (
    IsochronicityReport,
    PhysicalParams,
    PotentialShape,
    ReducedCoeffs,
    Regime,
    Truncation,
    classical_b,
    frequency_classical,
    frequency_quantum,
    isochronicity_first_order_quantum,
    isochronicity_second_order_classical,
    isochronicity_second_order_quantum,
    published_feasibility_margin,
    quantum_b_first_order,
    quantum_b_squared_first_order,
    reduce_classical,
    reduce_quantum,
    second_order_condition_residual,
)
from .separatrix import (
    BOUND_CONSTANT,
    BoundReport,
    TurningPoints,
    WellKind,
    WellSpec,
    amplitude_bound_physical,
    dw_amplitude_bound,
    dw_period,
    dw_radicand,
    dw_turning_points,
    inverted_amplitude_bound,
    inverted_special_period,
    published_turning_points,
    separatrix_period_divergence,
    special_period_quadrature,
)
from .trigpoly import AmpPoly, TrigSeries, solve_particular

__version__ = "0.1.0"
