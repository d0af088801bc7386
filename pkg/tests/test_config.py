"""JSON config ingestion: unit folding, validation paths, round-trips."""

import json
import math

import pytest

from flowhand.config import (
    ConfigError,
    apply_override,
    load_system,
    read_json,
    system_to_dict,
)
from flowhand.core import lpm_to_m3s
from flowhand.fcs import classify_state
from flowhand.system import default_system
from flowhand.venturi import size_orifice


def states(system, *flows_lpm):
    return "".join(
        classify_state(lpm_to_m3s(q), system.fcs, system.consts).name for q in flows_lpm
    )


def test_none_and_empty_yield_reference_system():
    ref = default_system()
    for source in (None, {}):
        system = load_system(source)
        assert system.fcs == ref.fcs
        assert system.venturi == ref.venturi
        assert system.finger.finger_length == ref.finger.finger_length
        assert system.hand == ref.hand


def test_bench_units_folded_to_si():
    system = load_system({
        "fcs": {"s3_mm2": 11.546402640264026},
        "venturi": {"h_t_mm": 10.0, "s_in_mm2": 25.0},
        "finger": {"finger_length_mm": 100.0, "p_max_kpa": 40.0,
                   "tipforce_gain_n_per_kpa": 0.02},
        "hand": {"max_opening_mm": 80.0},
    })
    assert system.fcs.s3 == pytest.approx(1.1546402640264026e-5, rel=1e-12)
    assert system.venturi.h_t == pytest.approx(0.010, rel=1e-12)
    assert system.venturi.s_in == pytest.approx(2.5e-5, rel=1e-12)
    assert system.finger.finger_length == pytest.approx(0.100, rel=1e-12)
    assert system.finger.p_max == pytest.approx(40000.0, rel=1e-12)
    assert system.finger.tipforce_gain == pytest.approx(2e-5, rel=1e-12)
    assert system.hand.max_opening == pytest.approx(0.080, rel=1e-12)


def test_pressure_map_knots_in_kpa():
    system = load_system({
        "finger": {"pressure_map_knots": [[0.0, 0.0], [40.0, 20.0]]},
    })
    assert system.finger.pressure_map(20.0) == pytest.approx(10000.0, rel=1e-12)


def test_lubricant_density_reaches_constants_and_sizing():
    system = load_system({"venturi": {"rho_lub": 1000.0}})
    assert system.consts.rho_lubricant == 1000.0
    expect = size_orifice(lpm_to_m3s(44.0), system.venturi, system.consts)
    assert system.venturi.s_out == pytest.approx(expect, abs=2e-9)
    # heavier lubricant needs stronger suction, so a narrower orifice
    assert system.venturi.s_out < default_system().venturi.s_out


def test_h_t_override_keeps_hardware_orifice():
    # the orifice is sized hardware; moving the test tube is a bench change
    system = load_system({"venturi": {"h_t_mm": 10.0}})
    assert system.venturi.s_out == default_system().venturi.s_out


def test_unknown_section_rejected():
    with pytest.raises(ConfigError, match="unknown config section 'fcz'"):
        load_system({"fcz": {}})


def test_unknown_key_carries_dotted_path():
    with pytest.raises(ConfigError, match="fcs.alfa"):
        load_system({"fcs": {"alfa": 0.9}})
    with pytest.raises(ConfigError, match="venturi.h_t"):
        load_system({"venturi": {"h_t": 0.055}})


def test_f_rot_and_q_ab_are_exclusive():
    with pytest.raises(ConfigError, match="not both"):
        load_system({"fcs": {"f_rot_N": 1.8e-3, "q_ab_lpm": 8.1}})


def test_q_ab_recalibrates_lever_onset():
    system = load_system({"fcs": {"q_ab_lpm": 12.0}})
    assert states(system, 11.9, 12.1) == "AB"
    assert system.fcs.f_rot != default_system().fcs.f_rot


def test_f_rot_taken_verbatim():
    system = load_system({"fcs": {"f_rot_N": 5e-3}})
    assert system.fcs.f_rot == 5e-3


def test_boolean_keys_guarded():
    system = load_system({"venturi": {"use_simplified_inlet": False,
                                      "s_src_mm2": 20.0, "s_e_mm2": 20.0,
                                      "p_src_kpa_abs": 101.325}})
    assert system.venturi.use_simplified_inlet is False
    with pytest.raises(ConfigError, match="true/false"):
        load_system({"venturi": {"use_simplified_inlet": 1}})


def test_numbers_reject_bool_and_strings():
    with pytest.raises(ConfigError, match="fcs.alpha"):
        load_system({"fcs": {"alpha": True}})
    with pytest.raises(ConfigError, match="fcs.epsilon"):
        load_system({"fcs": {"epsilon": "2.6"}})
    with pytest.raises(ConfigError, match="hand.n_fingers"):
        load_system({"hand": {"n_fingers": 2.5}})


def test_invalid_value_wrapped_with_section():
    with pytest.raises(ConfigError, match="fcs"):
        load_system({"fcs": {"alpha": 1.5}})
    with pytest.raises(ConfigError, match="hand"):
        load_system({"hand": {"mu_low": 5.0}})


def test_bad_knots_reported_with_index():
    with pytest.raises(ConfigError, match=r"f_block_knots\[1\]"):
        load_system({"fcs": {"f_block_knots": [[1.7, 0.98], [2.0]]}})
    with pytest.raises(ConfigError, match="f_block_knots"):
        load_system({"fcs": {"f_block_knots": [[2.0, 0.99], [1.7, 0.98]]}})


def test_read_json_from_file(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"venturi": {"h_t_mm": 30.0}}))
    system = load_system(path)
    assert system.venturi.h_t == pytest.approx(0.030, rel=1e-12)
    assert load_system(str(path)).venturi.h_t == pytest.approx(0.030, rel=1e-12)


def test_read_json_failure_modes(tmp_path):
    with pytest.raises(ConfigError, match="cannot read"):
        read_json(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(ConfigError, match="not valid JSON"):
        read_json(bad)
    arr = tmp_path / "arr.json"
    arr.write_text("[1, 2]")
    with pytest.raises(ConfigError, match="JSON object"):
        read_json(arr)


def test_round_trip_through_dict():
    ref = default_system()
    again = load_system(system_to_dict(ref))
    assert again.fcs.alpha == pytest.approx(ref.fcs.alpha, rel=1e-12)
    assert again.fcs.s3 == pytest.approx(ref.fcs.s3, rel=1e-12)
    assert again.fcs.f_rot == pytest.approx(ref.fcs.f_rot, rel=1e-12)
    assert again.fcs.gamma == pytest.approx(ref.fcs.gamma, rel=1e-12)
    assert again.venturi.s_out == pytest.approx(ref.venturi.s_out, rel=1e-12)
    assert again.venturi.h_t == pytest.approx(ref.venturi.h_t, rel=1e-12)
    assert again.finger.curvature_gain == pytest.approx(ref.finger.curvature_gain, rel=1e-12)
    assert again.finger.tipforce_gain == pytest.approx(ref.finger.tipforce_gain, rel=1e-12)
    assert again.hand.max_opening == pytest.approx(ref.hand.max_opening, rel=1e-12)
    assert states(again, 8.0, 8.2, 117.9, 118.1) == states(ref, 8.0, 8.2, 117.9, 118.1)


def test_dict_uses_bench_units():
    raw = system_to_dict(default_system())
    assert raw["fcs"]["s3_mm2"] == pytest.approx(11.779663299663298, rel=1e-12)
    assert raw["venturi"]["h_t_mm"] == pytest.approx(55.0, rel=1e-12)
    assert raw["finger"]["p_max_kpa"] == pytest.approx(35.0, rel=1e-12)
    assert raw["hand"]["max_opening_mm"] == pytest.approx(73.0, rel=1e-12)
    assert json.dumps(raw)    # emitted form must be JSON-serializable


def test_apply_override_single_key():
    system = apply_override(default_system(), "venturi.h_t_mm", 10.0)
    assert system.venturi.h_t == pytest.approx(0.010, rel=1e-12)
    # everything else untouched
    assert system.fcs.alpha == pytest.approx(default_system().fcs.alpha, rel=1e-12)


def test_apply_override_lever_onset_switches_form():
    system = apply_override(default_system(), "fcs.q_ab_lpm", 20.0)
    assert states(system, 19.9, 20.1) == "AB"
    back = apply_override(system, "fcs.f_rot_N", 1.794187678164984e-3)
    assert states(back, 8.0, 8.2) == "AB"


def test_apply_override_unknown_path():
    for path in ("fcs", "fcs.alpha.extra", "nope.key", "fcs.alfa"):
        with pytest.raises(ConfigError, match="unknown config path"):
            apply_override(default_system(), path, 1.0)


def test_full_inlet_needs_feed_parameters():
    # switching the inlet model on without the feed geometry must fail loudly
    with pytest.raises(ConfigError):
        load_system({"venturi": {"use_simplified_inlet": False}})


def test_curvature_gain_round_trip_value():
    raw = system_to_dict(default_system())
    assert raw["finger"]["curvature_gain"] == pytest.approx(
        math.pi / (0.08 * 32.3), rel=1e-12)
