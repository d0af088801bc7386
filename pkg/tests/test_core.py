"""Units, constants, and the piecewise linear calibration curve."""

import math

import numpy as np
import pytest

from flowhand.core import (
    PhysConstants,
    PiecewiseLinearCurve,
    kpa_to_pa,
    lpm_to_m3s,
    m2_to_mm2,
    m3s_to_lpm,
    m_to_mm,
    mm2_to_m2,
    mm_to_m,
    pa_to_kpa,
)


def test_flow_conversion_anchor():
    assert lpm_to_m3s(60.0) == pytest.approx(1e-3)
    assert lpm_to_m3s(118.0) == pytest.approx(118.0 / 60000.0)


def test_conversions_round_trip():
    rng = np.random.default_rng(7)
    for x in rng.uniform(0.0, 1e3, 50):
        assert m3s_to_lpm(lpm_to_m3s(x)) == pytest.approx(x, rel=1e-12)
        assert m2_to_mm2(mm2_to_m2(x)) == pytest.approx(x, rel=1e-12)
        assert m_to_mm(mm_to_m(x)) == pytest.approx(x, rel=1e-12)
        assert pa_to_kpa(kpa_to_pa(x)) == pytest.approx(x, rel=1e-12)


def test_negative_magnitudes_rejected():
    for fn in (lpm_to_m3s, m3s_to_lpm, mm2_to_m2, m2_to_mm2, mm_to_m, m_to_mm):
        with pytest.raises(ValueError):
            fn(-1.0)


def test_gauge_pressure_may_be_negative():
    # suction is a negative gauge pressure; the converter must allow it
    assert kpa_to_pa(-4.2) == pytest.approx(-4200.0)
    assert pa_to_kpa(-425.7) == pytest.approx(-0.4257)


def test_constants_defaults():
    c = PhysConstants()
    assert c.rho_air == 1.2
    assert c.rho_lubricant == 789.0
    assert c.g == 9.81
    assert c.p_atm == 101325.0


def test_constants_validated():
    with pytest.raises(ValueError):
        PhysConstants(rho_air=0.0)
    with pytest.raises(ValueError):
        PhysConstants(rho_lubricant=-1.0)
    with pytest.raises(ValueError):
        PhysConstants(g=math.nan)


def test_curve_hits_knots_exactly():
    curve = PiecewiseLinearCurve(((1.7, 0.98), (2.0, 0.99), (10.5, 1.34)))
    assert curve(1.7) == 0.98
    assert curve(2.0) == 0.99
    assert curve(10.5) == 1.34


def test_curve_interpolates_between_knots():
    curve = PiecewiseLinearCurve(((0.0, 0.0), (10.0, 20.0)))
    assert curve(2.5) == pytest.approx(5.0)
    assert curve(7.5) == pytest.approx(15.0)


def test_curve_clamps_below_first_knot():
    curve = PiecewiseLinearCurve(((1.7, 0.98), (2.0, 0.99)))
    assert curve(0.0) == 0.98
    assert curve(1.0) == 0.98


def test_curve_extrapolates_last_segment():
    curve = PiecewiseLinearCurve(((0.0, 0.0), (50.0, 32.3)))
    assert curve(100.0) == pytest.approx(64.6)


def test_single_knot_curve_is_constant():
    curve = PiecewiseLinearCurve(((5.0, 3.0),))
    assert curve(0.0) == 3.0
    assert curve(5.0) == 3.0
    assert curve(50.0) == 3.0


def test_curve_rejects_bad_knots():
    with pytest.raises(ValueError):
        PiecewiseLinearCurve(())
    with pytest.raises(ValueError):
        PiecewiseLinearCurve(((2.0, 1.0), (1.0, 2.0)))  # x not increasing
    with pytest.raises(ValueError):
        PiecewiseLinearCurve(((1.0, 1.0), (1.0, 2.0)))  # duplicate x
    with pytest.raises(ValueError):
        PiecewiseLinearCurve(((0.0, math.nan),))


def test_curve_monotone_input_monotone_output():
    rng = np.random.default_rng(11)
    xs = np.sort(rng.uniform(0.0, 20.0, 8))
    xs = np.unique(xs)
    ys = np.sort(rng.uniform(0.0, 5.0, xs.size))
    curve = PiecewiseLinearCurve(tuple(zip(xs.tolist(), ys.tolist())))
    samples = [curve(x) for x in np.linspace(-5.0, 30.0, 200)]
    assert all(b >= a for a, b in zip(samples, samples[1:]))
