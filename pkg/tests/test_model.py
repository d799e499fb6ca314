"""Coefficient maps, closed-form frequencies, and isochronicity solvers."""

import math
from fractions import Fraction

import pytest

from quartic.errors import (
    DomainError,
    NonPositiveLinearCoefficient,
    PerturbationRangeWarning,
    UnsupportedOrder,
)
from quartic.lindstedt import expand, omega_value_exact
from quartic.model import (
    PhysicalParams,
    PotentialShape,
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

F = Fraction


def classical(m=1.0, omega=1.0, lam=0.0, hbar=1.0):
    return PhysicalParams(m=m, omega=omega, lam=lam, hbar=hbar)


def quantum(m=1.0, omega=1.0, lam=0.0, hbar=1.0):
    return PhysicalParams(m=m, omega=omega, lam=lam, hbar=hbar,
                          regime=Regime.QUANTUM)


class TestParams:
    @pytest.mark.parametrize("kwargs", [
        dict(m=0.0), dict(m=-1.0), dict(omega=0.0), dict(hbar=0.0),
        dict(lam=math.inf), dict(m=math.nan),
    ])
    def test_invalid_rejected(self, kwargs):
        base = dict(m=1.0, omega=1.0, lam=0.0, hbar=1.0)
        base.update(kwargs)
        with pytest.raises(DomainError):
            PhysicalParams(**base)


class TestReduceClassical:
    def test_basic_map(self):
        rc = reduce_classical(classical(lam=0.025))
        assert rc.eps1 == 1.0
        assert rc.eps2 == pytest.approx(0.1, rel=1e-15)
        assert rc.b == pytest.approx(0.1, rel=1e-15)
        assert rc.shape is PotentialShape.SINGLE_WELL
        assert rc.truncation is Truncation.EXACT

    def test_zero_coupling(self):
        assert reduce_classical(classical(omega=2.0)).b == 0.0

    def test_mass_scaling(self):
        rc = reduce_classical(classical(m=2.0, lam=0.05))
        assert rc.eps2 == pytest.approx(0.1, rel=1e-15)
        assert rc.b == pytest.approx(0.1, rel=1e-15)

    def test_negative_coupling_shape(self):
        rc = reduce_classical(classical(lam=-0.1))
        assert rc.shape is PotentialShape.INVERTED_DOUBLE_WELL
        assert rc.b < 0

    def test_regime_enforced(self):
        with pytest.raises(DomainError):
            reduce_classical(quantum(lam=0.1))

    def test_large_b_warns_not_fails(self):
        with pytest.warns(PerturbationRangeWarning):
            rc = reduce_classical(classical(lam=0.5))
        assert rc.b == pytest.approx(2.0, rel=1e-15)


class TestReduceQuantum:
    def test_exact_ratio(self):
        rq = reduce_quantum(quantum(lam=0.025))
        assert rq.eps1 == pytest.approx(1.3, rel=1e-15)
        assert rq.eps2 == pytest.approx(0.1, rel=1e-15)
        assert rq.b == pytest.approx(0.1 / 1.3, rel=1e-14)
        assert rq.b == pytest.approx(rq.eps2 / rq.eps1, rel=0)

    def test_truncated_b(self):
        rq = reduce_quantum(quantum(lam=0.025), Truncation.FIRST_ORDER_HBAR)
        # 0.1 - 48 * 0.025^2 = 0.07
        assert rq.b == pytest.approx(0.07, rel=1e-14)

    def test_zero_coupling_both_truncations(self):
        for trunc in Truncation:
            assert reduce_quantum(quantum(), trunc).b == 0.0

    def test_deep_inverted_rejected(self):
        # eps1 = 1/hbar + 12 lam <= 0 once lam <= -1/12 at m = w = hbar = 1
        with pytest.raises(NonPositiveLinearCoefficient):
            reduce_quantum(quantum(lam=-0.1))

    def test_truncation_gap_shrinks_quadratically_in_hbar(self):
        # |b_exact - b_truncated| = O(hbar^2): halving hbar quarters the gap
        def gap(hbar):
            p = quantum(lam=0.025, hbar=hbar)
            exact = reduce_quantum(p).b
            return abs(exact - quantum_b_first_order(p))

        ratios = [gap(h) / gap(h / 2) for h in (0.2, 0.1, 0.05)]
        for ratio in ratios:
            assert ratio == pytest.approx(4.0, abs=0.5)


class TestFrequencyClassical:
    def test_order1_example(self):
        assert frequency_classical(classical(lam=0.025), 1.0, 1) == pytest.approx(
            1.0375, rel=1e-15
        )

    def test_order2_example(self):
        # 1.0375 - 21 * 0.025^2 / 16 = 1.0366796875
        assert frequency_classical(classical(lam=0.025), 1.0, 2) == pytest.approx(
            1.0366796875, rel=1e-14
        )

    def test_harmonic_limit(self):
        for amplitude in (0.3, 1.0, 4.0):
            assert frequency_classical(classical(), amplitude, 2) == 1.0

    def test_unsupported_order(self):
        with pytest.raises(UnsupportedOrder):
            frequency_classical(classical(lam=0.01), 1.0, 3)

    def test_bad_amplitude(self):
        with pytest.raises(DomainError):
            frequency_classical(classical(), -1.0, 1)

    @pytest.mark.parametrize(
        "m, w, lam, amplitude",
        [
            (F(2), F(3, 2), F(1, 40), F(5, 4)),
            (F(1), F(1), F(1, 10), F(1)),
            (F(7, 3), F(5, 8), F(-1, 50), F(3, 7)),
        ],
    )
    def test_equals_series_in_rational_arithmetic(self, m, w, lam, amplitude):
        # the closed forms are the Lindstedt series at b = 4 lam/(m w^2),
        # verified exactly with Fraction parameters
        b = 4 * lam / (m * w**2)
        order1 = 1 + 3 * amplitude**2 * lam / (2 * m * w**2)
        order2 = order1 - 21 * amplitude**4 * lam**2 / (16 * m**2 * w**4)
        assert omega_value_exact(expand(1), b, amplitude) == order1
        assert omega_value_exact(expand(2), b, amplitude) == order2

    def test_matches_series_in_floats(self):
        sol = expand(2)
        from quartic.lindstedt import omega_value

        params = classical(m=1.3, omega=0.9, lam=0.02)
        closed = frequency_classical(params, 0.8, 2)
        series = omega_value(sol, classical_b(params), 0.8)
        assert closed == pytest.approx(series, abs=1e-15)


class TestFrequencyQuantum:
    def test_order1_example(self):
        assert frequency_quantum(quantum(lam=0.025), 1.0, 1) == pytest.approx(
            1.02625, rel=1e-15
        )

    def test_order2_matches_truncated_series(self):
        # order-2 closed form == series at truncated b, with the separately
        # truncated b^2 for the quadratic term
        p = quantum(m=1.2, omega=1.1, lam=0.02, hbar=0.7)
        amplitude = 0.9
        a2 = amplitude**2
        expected = (
            1.0
            + 0.375 * a2 * quantum_b_first_order(p)
            - 21.0 / 256.0 * a2 * a2 * quantum_b_squared_first_order(p)
        )
        assert frequency_quantum(p, amplitude, 2) == pytest.approx(
            expected, abs=1e-15
        )

    def test_harmonic_limit(self):
        assert frequency_quantum(quantum(), 2.0, 2) == 1.0

    def test_deep_inverted_rejected(self):
        with pytest.raises(NonPositiveLinearCoefficient):
            frequency_quantum(quantum(lam=-0.2), 1.0, 1)

    def test_softening_below_classical(self):
        # strict inequality on the open interval (0, m^2 w^3 / 12 hbar)
        lam_star = 1.0 / 12.0
        for i in range(1, 51):
            lam = lam_star * i / 51.0
            fc = frequency_classical(classical(lam=lam), 1.0, 1)
            fq = frequency_quantum(quantum(lam=lam), 1.0, 1)
            assert fq < fc

    def test_softening_magnitude(self):
        # gap is exactly 18 lam^2 A^2 hbar / (m^3 w^5) at first order
        lam, amplitude = 0.03, 1.4
        fc = frequency_classical(classical(lam=lam), amplitude, 1)
        fq = frequency_quantum(quantum(lam=lam), amplitude, 1)
        assert fc - fq == pytest.approx(18 * lam**2 * amplitude**2, rel=1e-10)


class TestIsochronicity:
    def test_first_order_value(self):
        assert isochronicity_first_order_quantum(quantum()) == pytest.approx(
            1.0 / 12.0, rel=1e-15
        )
        assert isochronicity_first_order_quantum(
            quantum(m=2.0)
        ) == pytest.approx(1.0 / 3.0, rel=1e-15)

    def test_first_order_flattens_frequency(self):
        lam_star = isochronicity_first_order_quantum(quantum())
        for amplitude in (0.5, 1.0, 2.0, 3.0, 5.0):
            omega = frequency_quantum(quantum(lam=lam_star), amplitude, 1)
            assert abs(omega - 1.0) <= 1e-14

    def test_second_order_classical_value(self):
        assert isochronicity_second_order_classical(classical(), 1.0) == (
            pytest.approx(8.0 / 7.0, rel=1e-15)
        )

    def test_second_order_classical_cancellation(self):
        for amplitude in (0.5, 1.0, 2.0):
            lam = isochronicity_second_order_classical(classical(), amplitude)
            omega = frequency_classical(classical(lam=lam), amplitude, 2)
            assert abs(omega - 1.0) <= 1e-14

    def test_second_order_classical_large_amplitude_limit(self):
        assert isochronicity_second_order_classical(classical(), 1e6) < 1e-11

    def test_second_order_quantum_roots(self):
        report = isochronicity_second_order_quantum(quantum(), 1.0)
        assert report.feasible
        assert report.order == 2
        assert report.regime is Regime.QUANTUM
        # oracle: quadratic formula on 31.5 x^2 - 19.3125 x + 1.5 = 0
        disc = 19.3125**2 - 4 * 31.5 * 1.5
        lo = (19.3125 - math.sqrt(disc)) / 63.0
        hi = (19.3125 + math.sqrt(disc)) / 63.0
        assert report.discriminant == pytest.approx(disc, rel=1e-15)
        assert report.lambda_roots[0] == pytest.approx(lo, rel=1e-13)
        assert report.lambda_roots[1] == pytest.approx(hi, rel=1e-13)

    def test_second_order_quantum_residuals(self):
        p = quantum()
        report = isochronicity_second_order_quantum(p, 1.0)
        for root in report.lambda_roots:
            assert second_order_condition_residual(p, 1.0, root) < 1e-12

    def test_residuals_on_parameter_grid(self):
        for m in (0.7, 1.0, 1.8):
            for hbar in (0.4, 1.0):
                p = quantum(m=m, hbar=hbar)
                report = isochronicity_second_order_quantum(p, 1.2)
                assert report.feasible == (report.discriminant >= 0)
                for root in report.lambda_roots:
                    assert second_order_condition_residual(p, 1.2, root) < 1e-10

    def test_zero_lambda_satisfies_condition(self):
        assert second_order_condition_residual(quantum(), 1.0, 0.0) == 0.0

    def test_infeasible_region_reports_not_raises(self):
        # at hbar = 0.3, A = 1: (18*0.3 + 21/16)^2 < 189*0.3
        report = isochronicity_second_order_quantum(quantum(hbar=0.3), 1.0)
        assert not report.feasible
        assert report.lambda_roots == ()
        assert report.discriminant < 0

    def test_published_margin_differs_from_discriminant(self):
        # the uncorrected feasibility expression is not the discriminant;
        # diagnostic only
        p = quantum()
        report = isochronicity_second_order_quantum(p, 1.0)
        margin = published_feasibility_margin(p, 1.0)
        assert margin != pytest.approx(report.discriminant, rel=1e-3)
