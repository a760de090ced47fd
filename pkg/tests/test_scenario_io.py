"""Scenario JSON round-trips and strict schema rejection."""

import json
import math

import pytest

from bilorentz import (
    Scenario,
    ScenarioFormatError,
    build_fig2_scenario,
    build_fig3_scenario,
    build_fig4_scenario,
    compose,
    load_scenario,
    make_lambda,
    save_scenario,
    scenario_from_dict,
    scenario_to_dict,
)


@pytest.mark.parametrize("builder", [build_fig2_scenario, build_fig3_scenario,
                                     build_fig4_scenario])
def test_roundtrip_builtin_scenarios(builder):
    s = builder()
    assert scenario_from_dict(scenario_to_dict(s)) == s


def test_roundtrip_through_file(tmp_path):
    s = build_fig4_scenario()
    path = tmp_path / "scenario.json"
    save_scenario(s, path)
    assert load_scenario(path) == s


def test_roundtrip_survives_json_text():
    s = build_fig2_scenario()
    text = json.dumps(scenario_to_dict(s))
    assert scenario_from_dict(json.loads(text)) == s


def test_infinity_velocity_roundtrip():
    data = scenario_to_dict(build_fig3_scenario())
    data["transform"] = {"branch": "lambda", "tau": 1, "k": -1, "vel": "infinity"}
    s = scenario_from_dict(data)
    assert math.isinf(s.transform.vel)
    assert scenario_to_dict(s)["transform"]["vel"] == "infinity"


def test_infinity_requires_lambda_branch_and_negative_k():
    base = scenario_to_dict(build_fig3_scenario())
    bad_transforms = (
        {"branch": "l", "tau": -1, "k": -1, "vel": "infinity"},
        {"branch": "lambda", "tau": 1, "k": 1, "vel": "infinity"},
    )
    for bad in bad_transforms:
        data = dict(base)
        data["transform"] = bad
        with pytest.raises(ScenarioFormatError):
            scenario_from_dict(data)


def test_unknown_top_level_key_rejected():
    data = scenario_to_dict(build_fig3_scenario())
    data["extra"] = 1
    with pytest.raises(ScenarioFormatError):
        scenario_from_dict(data)


def test_unknown_nested_key_rejected():
    data = scenario_to_dict(build_fig3_scenario())
    data["worldlines"][0]["speed"] = 2
    with pytest.raises(ScenarioFormatError):
        scenario_from_dict(data)


def test_missing_key_rejected():
    data = scenario_to_dict(build_fig3_scenario())
    del data["window"]
    with pytest.raises(ScenarioFormatError):
        scenario_from_dict(data)


def test_bad_kind_rejected():
    data = scenario_to_dict(build_fig3_scenario())
    data["worldlines"][0]["kind"] = "tachyon"
    with pytest.raises(ScenarioFormatError):
        scenario_from_dict(data)


def test_bad_vector_rejected():
    data = scenario_to_dict(build_fig3_scenario())
    data["worldlines"][0]["anchor"] = [1, 2, 3]
    with pytest.raises(ScenarioFormatError):
        scenario_from_dict(data)


def test_boolean_is_not_a_number():
    data = scenario_to_dict(build_fig3_scenario())
    data["transform"]["k"] = True
    with pytest.raises(ScenarioFormatError):
        scenario_from_dict(data)


def test_bad_tau_rejected():
    data = scenario_to_dict(build_fig3_scenario())
    data["transform"]["tau"] = 2
    with pytest.raises(ScenarioFormatError):
        scenario_from_dict(data)


def test_out_of_domain_velocity_is_a_format_error():
    data = scenario_to_dict(build_fig3_scenario())
    data["transform"] = {"branch": "lambda", "tau": 1, "k": 1, "vel": 2}
    with pytest.raises(ScenarioFormatError):
        scenario_from_dict(data)


def test_invalid_window_is_a_format_error():
    data = scenario_to_dict(build_fig3_scenario())
    data["window"] = {"min": [3, 3], "max": [-3, -3]}
    with pytest.raises(ScenarioFormatError):
        scenario_from_dict(data)


def test_derived_transform_not_serializable():
    s = build_fig3_scenario()
    derived = compose(make_lambda(1, 1.0, 0.1), make_lambda(1, 1.0, 0.1))
    broken = Scenario(name=s.name, transform=derived,
                      worldlines=s.worldlines, window=s.window)
    with pytest.raises(ScenarioFormatError):
        scenario_to_dict(broken)
