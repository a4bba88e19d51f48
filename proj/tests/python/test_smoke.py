import math
import os

import pytest

import rigsim

CONFIG_DIR = os.environ.get("RIGSIM_CONFIG_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "configs"))


def test_paper_check_all_pass():
    checks = rigsim.paper_check()
    assert len(checks) == 12
    assert all(c["pass"] for c in checks), [c for c in checks if not c["pass"]]


def test_closed_form_statics():
    r = rigsim.fixed_fixed_udl(19.62, 0.662, 2e11, 2.15e-3)
    assert r["reaction_n"] == pytest.approx(6.494, rel=1e-3)
    assert r["end_moment_nm"] == pytest.approx(0.7165, rel=1e-3)
    assert r["deflection_m"] == pytest.approx(2.28e-11, rel=1e-3)


def test_statics_default_is_safe():
    r = rigsim.statics()
    assert r["safe"] is True
    assert r["udl_n_per_m"] == pytest.approx(2 * 9.81 / (2 * 0.662))


def test_modal_pairs():
    f = rigsim.modal()["frequency_hz"]
    assert len(f) == 5
    assert f[0] == f[1] and f[2] == f[3]
    assert f[0] == pytest.approx(144.6, rel=2e-3)


def test_harmonic_strain_identity():
    h = rigsim.harmonic({"fem": {"elements": 16, "f_grid": {"start": 10, "stop": 200, "step": 10}}})
    assert len(h["frequency_hz"]) == 20
    for s, e in zip(h["stress_pa"], h["strain"]):
        assert e == pytest.approx(s / 2e11, rel=1e-9)


def test_move_reaches_target():
    r = rigsim.move({"move": {"target": [0.1, 0.2, 0.05]}})
    assert r["final_pose"] == pytest.approx((0.1, 0.2, 0.05), abs=1.25e-6)
    assert r["trace"][0][1] == "x"


def test_grasp_tracks_fuzzy_setpoint():
    g = rigsim.grasp()
    assert abs(g["error_n"][-1]) < 1e-3 * g["desired_n"][-1]


def test_required_force():
    assert rigsim.required_grasp_force(1.0, 0.5, 2, 0.0, 2.0) == pytest.approx(19.62)


def test_fuzzy_centre():
    assert rigsim.fuzzy_desired_force(0.3, 0.15, 0.05) == pytest.approx(25.0, abs=1e-9)


def test_pick_place_outcomes():
    ok = rigsim.pick_place()
    assert ok["outcome"] == "success"
    assert ok["report"]["positioning_efficiency"] == 1.0
    missed = rigsim.pick_place({"scenario": {"conveyor_speed": 0.2}})
    assert missed["outcome"] == "missed_pick"


def test_shipped_config_file():
    path = os.path.join(CONFIG_DIR, "default.json")
    assert rigsim.effective_config(path) == rigsim.default_config()
    assert math.isclose(rigsim.test_matrix(path)["required_force_n"], 0.5 * (9.81 + 0.2) * 2 / (0.6 * 2))


def test_errors_map_to_python_exceptions():
    with pytest.raises(rigsim.ConfigError):
        rigsim.statics({"beam": {"bogus": 1}})
    with pytest.raises(ValueError):
        rigsim.modal({"fem": {"elements": 1}})
    with pytest.raises(rigsim.NumericalError):
        rigsim.modal({"fem": {"elements": 2, "n_modes": 9}})
