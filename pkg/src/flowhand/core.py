"""Shared units, physical constants, and calibration-curve support.

Canonical units are SI throughout the package: volumetric flow in m^3/s,
pressure in Pa (gauge unless noted absolute), force in N, area in m^2,
length in m, density in kg/m^3.  Flow shows up as L/min only at I/O
boundaries (config files, CSV columns, calibration-curve axes), because
airflow controllers and flow meters are specified that way.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass, field

LPM_PER_M3S = 60000.0


def lpm_to_m3s(q_lpm: float) -> float:
    """L/min -> m^3/s.  Flow rates are non-negative."""
    if q_lpm < 0:
        raise ValueError(f"flow must be >= 0, got {q_lpm} L/min")
    return q_lpm / LPM_PER_M3S


def m3s_to_lpm(q_m3s: float) -> float:
    """m^3/s -> L/min.  Flow rates are non-negative."""
    if q_m3s < 0:
        raise ValueError(f"flow must be >= 0, got {q_m3s} m^3/s")
    return q_m3s * LPM_PER_M3S


def mm2_to_m2(a_mm2: float) -> float:
    """mm^2 -> m^2."""
    if a_mm2 < 0:
        raise ValueError(f"area must be >= 0, got {a_mm2} mm^2")
    return a_mm2 * 1e-6


def m2_to_mm2(a_m2: float) -> float:
    """m^2 -> mm^2."""
    if a_m2 < 0:
        raise ValueError(f"area must be >= 0, got {a_m2} m^2")
    return a_m2 * 1e6


def mm_to_m(x_mm: float) -> float:
    """mm -> m."""
    if x_mm < 0:
        raise ValueError(f"length must be >= 0, got {x_mm} mm")
    return x_mm * 1e-3


def m_to_mm(x_m: float) -> float:
    """m -> mm."""
    if x_m < 0:
        raise ValueError(f"length must be >= 0, got {x_m} m")
    return x_m * 1e3


def kpa_to_pa(p_kpa: float) -> float:
    """kPa -> Pa.  Gauge pressures may be negative, so no sign check."""
    return p_kpa * 1e3


def pa_to_kpa(p_pa: float) -> float:
    """Pa -> kPa."""
    return p_pa * 1e-3


@dataclass(frozen=True)
class PhysConstants:
    """Ambient constants shared by every model in the package.

    rho_air is the default working-fluid density for a dry lab at room
    temperature; the lubricant density is anhydrous ethanol.  All values
    are overridable through the config file.
    """

    rho_air: float = 1.2          # kg/m^3
    rho_lubricant: float = 789.0  # kg/m^3, anhydrous ethanol
    g: float = 9.81               # m/s^2
    p_atm: float = 101325.0       # Pa absolute

    def __post_init__(self) -> None:
        for name in ("rho_air", "rho_lubricant", "g", "p_atm"):
            value = getattr(self, name)
            if not (value > 0) or not math.isfinite(value):
                raise ValueError(f"{name} must be strictly positive, got {value}")


@dataclass(frozen=True)
class PiecewiseLinearCurve:
    """Piecewise-linear curve through (x, y) knots, x strictly increasing.

    Evaluation at a knot returns its y exactly.  Between knots the value
    is linearly interpolated.  Below the first knot the first y is held
    (clamped, so calibration curves stay positive near zero); above the
    last knot the final segment's slope is extended.  A single-knot
    curve is constant everywhere.
    """

    knots: tuple[tuple[float, float], ...]
    _xs: tuple[float, ...] = field(init=False, repr=False, compare=False)
    _ys: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        knots = tuple((float(x), float(y)) for x, y in self.knots)
        if not knots:
            raise ValueError("curve needs at least one knot")
        xs = tuple(x for x, _ in knots)
        ys = tuple(y for _, y in knots)
        for v in (*xs, *ys):
            if not math.isfinite(v):
                raise ValueError(f"curve knots must be finite, got {v}")
        for a, b in zip(xs, xs[1:]):
            if not a < b:
                raise ValueError(f"knot x values must be strictly increasing ({a} !< {b})")
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "_xs", xs)
        object.__setattr__(self, "_ys", ys)

    def __call__(self, x: float) -> float:
        xs, ys = self._xs, self._ys
        if len(xs) == 1 or x <= xs[0]:
            return ys[0]
        i = bisect_left(xs, x)
        if i < len(xs) and xs[i] == x:
            return ys[i]
        if i == len(xs):  # extend the last segment
            i -= 1
        x0, x1 = xs[i - 1], xs[i]
        y0, y1 = ys[i - 1], ys[i]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
