"""Gantry test rig analysis and simulation.

Every run accepts an optional configuration: a dict, a path to a JSON file,
or None for the built-in defaults. Keys mirror the JSON config files.
"""

import json
import os

from . import _core
from ._core import ConfigError, NumericalError, ScenarioError, fixed_fixed_udl, fuzzy_desired_force, required_grasp_force

__all__ = [
    "ConfigError",
    "NumericalError",
    "ScenarioError",
    "default_config",
    "effective_config",
    "statics",
    "modal",
    "harmonic",
    "move",
    "grasp",
    "test_matrix",
    "pick_place",
    "paper_check",
    "required_grasp_force",
    "fuzzy_desired_force",
    "fixed_fixed_udl",
]


def _text(config):
    if config is None:
        return ""
    if isinstance(config, (str, os.PathLike)):
        return "@" + os.fspath(config)
    return json.dumps(config)


def default_config():
    return json.loads(_core.default_config_json())


def effective_config(config=None):
    return json.loads(_core.effective_config_json(_text(config)))


def statics(config=None):
    return _core.statics(_text(config))


def modal(config=None):
    return _core.modal(_text(config))


def harmonic(config=None):
    return _core.harmonic(_text(config))


def move(config=None):
    return _core.move(_text(config))


def grasp(config=None):
    return _core.grasp(_text(config))


def test_matrix(config=None):
    return _core.test_matrix(_text(config))


def pick_place(config=None):
    return _core.pick_place(_text(config))


def paper_check(config=None):
    return _core.paper_check(_text(config))
