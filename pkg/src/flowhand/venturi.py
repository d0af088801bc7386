"""Venturi lubricant-injection circuit: suction, column rise, sizing.

The injection line drives air through a constriction (orifice).  By
Bernoulli, the static pressure at the orifice drops below the inlet
pressure by

    dp = rho_air * q2^2 * (1/s_out^2 - 1/s_in^2) / 2,

so with s_out < s_in the orifice runs at negative gauge pressure for any
q2 > 0.  That suction pulls lubricant up a supply tube from the tank; the
column settles at the hydrostatic balance height

    h_l = -p_out_gauge / (rho_lub * g)    (clamped at 0),

and injection starts once h_l exceeds the tube's crest height h_t.  The
hand approaches its targets pointing down, so h_t is a fixed geometric
height.

Two inlet-pressure models are available.  The default treats the wide
section as vented, p_in = 0 gauge.  The full source-balance model adds
the Bernoulli terms from the air source and the exhaust outlet and
needs s_src, s_e and p_src to be configured.

All inputs are SI (flows m^3/s, areas m^2, pressures Pa gauge unless
noted absolute).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import PhysConstants, lpm_to_m3s
from .fcs import FcsConfig, steady_outputs


class InfeasibleDesignError(ValueError):
    """A sizing or design target cannot be met by any admissible geometry."""


@dataclass(frozen=True)
class VenturiConfig:
    """Geometry of the injection circuit.

    s_in     wide-section cross-section upstream of the orifice [m^2]
    s_out    orifice cross-section [m^2]; must be below s_in for suction
    s_t      lubricant supply tube cross-section [m^2] (geometric record;
             it cancels out of the hydrostatic balance)
    h_t      crest height of the supply tube above the tank surface [m]
    discharge_coeff  multiplies s_out into an effective orifice area;
             1.0 means the ideal lossless orifice
    use_simplified_inlet  True: p_in = 0 gauge.  False: full source
             balance, which requires s_src, s_e and p_src (absolute).
    """

    s_in: float
    s_out: float
    s_t: float
    h_t: float = 0.055
    discharge_coeff: float = 1.0
    use_simplified_inlet: bool = True
    s_src: float | None = None
    s_e: float | None = None
    p_src: float | None = None

    def __post_init__(self) -> None:
        if not self.s_in > 0:
            raise ValueError(f"s_in must be > 0, got {self.s_in}")
        if not 0.0 < self.s_out < self.s_in:
            raise ValueError(
                f"need 0 < s_out < s_in for suction, got s_out={self.s_out}, s_in={self.s_in}"
            )
        if not self.s_t > 0:
            raise ValueError(f"s_t must be > 0, got {self.s_t}")
        if not self.h_t > 0:
            raise ValueError(f"h_t must be > 0, got {self.h_t}")
        if not 0.0 < self.discharge_coeff <= 1.0:
            raise ValueError(f"discharge_coeff must be in (0, 1], got {self.discharge_coeff}")
        if not self.use_simplified_inlet:
            missing = [n for n in ("s_src", "s_e", "p_src") if getattr(self, n) is None]
            if missing:
                raise ValueError(f"full inlet model needs {', '.join(missing)}")


@dataclass(frozen=True)
class OrificeFlow:
    """Flow state across the orifice at one operating point.  SI units."""

    q2: float
    v_in: float
    v_out: float
    p_in: float    # gauge
    p_out: float   # gauge
    delta_p: float


def orifice_pressure_drop(q2: float, s_in: float, s_out: float, rho_air: float) -> float:
    """Bernoulli pressure drop across the constriction [Pa].

    dp = rho * q2^2 * (1/s_out^2 - 1/s_in^2) / 2, which is >= 0 for
    s_out <= s_in and zero without flow or without constriction.
    """
    if q2 < 0:
        raise ValueError(f"q2 must be >= 0, got {q2}")
    if not 0.0 < s_out <= s_in:
        raise ValueError(f"need 0 < s_out <= s_in, got s_out={s_out}, s_in={s_in}")
    return rho_air * q2 * q2 * (1.0 / s_out**2 - 1.0 / s_in**2) / 2.0


def inlet_pressure(q_src: float, q2: float, cfg: VenturiConfig, consts: PhysConstants) -> float:
    """Gauge pressure at the wide section before the orifice [Pa].

    Simplified model: 0.  Full model balances the source against the
    exhaust and injection outlets:

        p_in = p_src - p_atm
               + rho/2 * (q_src^2/s_src^2 - (q_src-q2)^2/s_e^2 - q2^2/s_in^2)
    """
    if q2 < 0 or q_src < 0:
        raise ValueError("flows must be >= 0")
    if q2 > q_src:
        raise ValueError(f"q2 ({q2}) cannot exceed q_src ({q_src})")
    if cfg.use_simplified_inlet:
        return 0.0
    rho = consts.rho_air
    return (
        cfg.p_src
        - consts.p_atm
        + rho
        / 2.0
        * (
            q_src**2 / cfg.s_src**2
            - (q_src - q2) ** 2 / cfg.s_e**2
            - q2**2 / cfg.s_in**2
        )
    )


def lubricant_rise(p_in: float, delta_p: float, rho_lub: float, g: float) -> float:
    """Hydrostatic column height pulled up by the orifice suction [m].

    p_out_gauge = p_in - delta_p; the column rises until
    rho_lub * g * h_l balances the suction, and cannot go below zero
    under positive orifice pressure.
    """
    if rho_lub <= 0 or g <= 0:
        raise ValueError("rho_lub and g must be > 0")
    p_out_gauge = p_in - delta_p
    return max(0.0, -p_out_gauge / (rho_lub * g))


def injection_active(h_l: float, h_t: float) -> bool:
    """Lubricant reaches the orifice iff the column tops the tube crest."""
    if not h_t > 0:
        raise ValueError(f"h_t must be > 0, got {h_t}")
    return h_l > h_t


def effective_orifice_area(cfg: VenturiConfig) -> float:
    """Orifice area after the discharge-coefficient correction [m^2]."""
    return cfg.discharge_coeff * cfg.s_out


def orifice_flow(q2: float, q_src: float, cfg: VenturiConfig, consts: PhysConstants) -> OrificeFlow:
    """Full flow state across the orifice for one operating point."""
    s_out = effective_orifice_area(cfg)
    delta_p = orifice_pressure_drop(q2, cfg.s_in, s_out, consts.rho_air)
    p_in = inlet_pressure(q_src, q2, cfg, consts)
    return OrificeFlow(
        q2=q2,
        v_in=q2 / cfg.s_in,
        v_out=q2 / s_out,
        p_in=p_in,
        p_out=p_in - delta_p,
        delta_p=delta_p,
    )


def lubricant_column(q_src: float, q2: float, cfg: VenturiConfig, consts: PhysConstants) -> float:
    """Column height for an injection-line flow q2 at source flow q_src [m]."""
    flow = orifice_flow(q2, q_src, cfg, consts)
    return lubricant_rise(flow.p_in, flow.delta_p, consts.rho_lubricant, consts.g)


def q2_activation_threshold(
    cfg: VenturiConfig,
    consts: PhysConstants,
    q2_max: float = lpm_to_m3s(100.0),
    resolution: float = lpm_to_m3s(0.01),
) -> float | None:
    """Smallest injection-line flow that starts the injection [m^3/s].

    Bisection on the monotone active/inactive boundary, to within
    `resolution`; None if still inactive at q2_max.  The source flow is
    taken equal to q2 (worst case for the full inlet model; irrelevant
    for the simplified one).
    """

    def active(q2: float) -> bool:
        h_l = lubricant_column(q2, q2, cfg, consts)
        return injection_active(h_l, cfg.h_t)

    return bisect_onset(active, 0.0, q2_max, resolution)


def activation_threshold(
    cfg: VenturiConfig,
    fcs: FcsConfig,
    consts: PhysConstants,
    q_src_max: float = lpm_to_m3s(200.0),
    resolution: float = lpm_to_m3s(0.01),
) -> float | None:
    """Smallest source flow at which the composed system injects [m^3/s].

    Composes the switch routing (q_src -> q2) with the orifice suction
    and the column balance, then bisects the active/inactive boundary to
    within `resolution`.  Returns None ("never activates") if the system
    is still inactive at the scan ceiling q_src_max.  Assumes activation
    is monotone in q_src for the given configs, which holds whenever q2
    is non-decreasing in q_src and the inlet model is the simplified one.
    """

    def active(q_src: float) -> bool:
        out = steady_outputs(q_src, fcs, consts)
        h_l = lubricant_column(q_src, out.q2, cfg, consts)
        return injection_active(h_l, cfg.h_t)

    return bisect_onset(active, 0.0, q_src_max, resolution)


def bisect_onset(active, lo: float, hi: float, resolution: float) -> float | None:
    """First point of a monotone False -> True predicate, within resolution."""
    if active(lo):
        return lo
    if not active(hi):
        return None
    while hi - lo > resolution:
        mid = 0.5 * (lo + hi)
        if active(mid):
            hi = mid
        else:
            lo = mid
    return hi


def size_orifice(
    target_q2: float,
    cfg: VenturiConfig,
    consts: PhysConstants,
    q_src: float | None = None,
    tol: float = 1e-9,
) -> float:
    """Orifice area that puts the injection onset exactly at target_q2 [m^2].

    Shrinking the orifice raises the suction at a given flow, so the
    required area solves dp(target_q2) = rho_lub * g * h_t + p_in by
    bisection on s_out within (0, s_in), to an area tolerance `tol`.
    With the full inlet model, p_in is evaluated at the supplied q_src
    (required in that case).

    Raises InfeasibleDesignError when no s_out < s_in can reach the
    balance, i.e. when the needed suction is not positive.
    """
    if not target_q2 > 0:
        raise ValueError(f"target_q2 must be > 0, got {target_q2}")
    if cfg.use_simplified_inlet:
        p_in = 0.0
    else:
        if q_src is None:
            raise ValueError("full inlet model: pass the source flow at the activation point")
        p_in = inlet_pressure(q_src, target_q2, cfg, consts)

    suction_needed = consts.rho_lubricant * consts.g * cfg.h_t + p_in
    if suction_needed <= 0:
        raise InfeasibleDesignError(
            "no orifice can set this onset: the required suction is not positive "
            f"(needed s_out >= s_in; balance pressure {suction_needed:.6g} Pa)"
        )

    cd = cfg.discharge_coeff

    def excess(s_out: float) -> float:
        return (
            orifice_pressure_drop(target_q2, cfg.s_in, cd * s_out, consts.rho_air)
            - suction_needed
        )

    hi = cfg.s_in / cd          # no constriction: zero suction, excess < 0
    lo = hi * 1e-6
    while excess(lo) < 0:       # widen downward until the suction overshoots
        lo *= 0.5
        if lo < 1e-18:
            raise InfeasibleDesignError("orifice sizing failed to bracket the balance")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if excess(mid) >= 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
