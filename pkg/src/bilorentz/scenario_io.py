"""Strict JSON serialization for scenarios.

Schema (all keys required unless noted):

    {
      "name": "demo",
      "transform": {"branch": "lambda"|"l", "tau": 1|-1, "k": number,
                    "vel": number | "infinity"},
      "worldlines": [{"anchor": [n, n], "direction": [n, n],
                      "kind": "particle"|"lightray", "label": "text"}, ...],
      "window": {"min": [n, n], "max": [n, n]},
      "events": [{"at": [n, n], "label": "text"}, ...]   // optional
    }

Unknown keys are rejected everywhere.  "infinity" is only a valid velocity
for the "lambda" branch with k < 0.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .core import (
    BranchKind,
    Transform,
    TwoVector,
    make_l,
    make_lambda,
    make_lambda_infinite_limit,
)
from .worldlines import Scenario, Window, Worldline, WorldlineKind


class ScenarioFormatError(ValueError):
    """The JSON document does not match the scenario schema."""


def _require_keys(obj: dict, required: set[str], optional: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise ScenarioFormatError(f"{where} must be an object, got {type(obj).__name__}")
    keys = set(obj)
    unknown = keys - required - optional
    if unknown:
        raise ScenarioFormatError(f"unknown keys in {where}: {sorted(unknown)}")
    missing = required - keys
    if missing:
        raise ScenarioFormatError(f"missing keys in {where}: {sorted(missing)}")


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioFormatError(f"{where} must be a number, got {value!r}")
    return float(value)


def _vector(value, where: str) -> TwoVector:
    if not (isinstance(value, list) and len(value) == 2):
        raise ScenarioFormatError(f"{where} must be a 2-element array, got {value!r}")
    return TwoVector(_number(value[0], where), _number(value[1], where))


def _text(value, where: str) -> str:
    if not isinstance(value, str):
        raise ScenarioFormatError(f"{where} must be a string, got {value!r}")
    return value


def _transform_from_dict(obj: dict) -> Transform:
    _require_keys(obj, {"branch", "tau", "k", "vel"}, set(), "transform")
    branch = _text(obj["branch"], "transform.branch")
    if branch not in ("lambda", "l"):
        raise ScenarioFormatError(f'transform.branch must be "lambda" or "l", got {branch!r}')
    tau = obj["tau"]
    if isinstance(tau, bool) or tau not in (1, -1):
        raise ScenarioFormatError(f"transform.tau must be 1 or -1, got {tau!r}")
    k = _number(obj["k"], "transform.k")
    vel = obj["vel"]
    if vel == "infinity":
        if branch != "lambda" or not k < 0.0:
            raise ScenarioFormatError(
                '"infinity" velocity is only valid for branch "lambda" with k < 0')
        return make_lambda_infinite_limit(tau, k)
    v = _number(vel, "transform.vel")
    if branch == "lambda":
        return make_lambda(tau, k, v)
    return make_l(tau, k, v)


def _transform_to_dict(t: Transform) -> dict:
    if t.branch is BranchKind.DERIVED:
        raise ScenarioFormatError("derived transforms are not serializable")
    vel = "infinity" if math.isinf(t.vel) else t.vel
    return {"branch": t.branch.value, "tau": t.tau, "k": t.k, "vel": vel}


def _worldline_from_dict(obj: dict, index: int) -> Worldline:
    where = f"worldlines[{index}]"
    _require_keys(obj, {"anchor", "direction", "kind", "label"}, set(), where)
    kind = _text(obj["kind"], f"{where}.kind")
    if kind not in ("particle", "lightray"):
        raise ScenarioFormatError(f'{where}.kind must be "particle" or "lightray", got {kind!r}')
    return Worldline(anchor=_vector(obj["anchor"], f"{where}.anchor"),
                     direction=_vector(obj["direction"], f"{where}.direction"),
                     label=_text(obj["label"], f"{where}.label"),
                     kind=WorldlineKind(kind))


def scenario_from_dict(data: dict) -> Scenario:
    """Build a Scenario from a parsed JSON object, validating strictly."""
    try:
        return _scenario_from_dict(data)
    except ScenarioFormatError:
        raise
    except ValueError as exc:
        raise ScenarioFormatError(str(exc)) from exc


def _scenario_from_dict(data: dict) -> Scenario:
    _require_keys(data, {"name", "transform", "worldlines", "window"}, {"events"}, "scenario")
    name = _text(data["name"], "name")
    transform = _transform_from_dict(data["transform"])
    if not isinstance(data["worldlines"], list):
        raise ScenarioFormatError("worldlines must be an array")
    worldlines = tuple(_worldline_from_dict(o, i)
                       for i, o in enumerate(data["worldlines"]))
    _require_keys(data["window"], {"min", "max"}, set(), "window")
    window = Window(_vector(data["window"]["min"], "window.min"),
                    _vector(data["window"]["max"], "window.max"))
    raw_events = data.get("events", [])
    if not isinstance(raw_events, list):
        raise ScenarioFormatError("events must be an array")
    events = []
    for i, obj in enumerate(raw_events):
        _require_keys(obj, {"at", "label"}, set(), f"events[{i}]")
        events.append((_vector(obj["at"], f"events[{i}].at"),
                       _text(obj["label"], f"events[{i}].label")))
    return Scenario(name=name, transform=transform, worldlines=worldlines,
                    window=window, events=tuple(events))


def scenario_to_dict(s: Scenario) -> dict:
    out = {
        "name": s.name,
        "transform": _transform_to_dict(s.transform),
        "worldlines": [
            {"anchor": [wl.anchor.c1, wl.anchor.c2],
             "direction": [wl.direction.c1, wl.direction.c2],
             "kind": wl.kind.value,
             "label": wl.label}
            for wl in s.worldlines
        ],
        "window": {"min": [s.window.lo.c1, s.window.lo.c2],
                   "max": [s.window.hi.c1, s.window.hi.c2]},
    }
    if s.events:
        out["events"] = [{"at": [at.c1, at.c2], "label": label}
                         for at, label in s.events]
    return out


def load_scenario(path: str | Path) -> Scenario:
    with open(path, encoding="utf-8") as f:
        data = json.load(f)
    return scenario_from_dict(data)


def save_scenario(s: Scenario, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(scenario_to_dict(s), f, indent=2, sort_keys=True)
        f.write("\n")
