"""Tolerance configuration: defaults, file values and environment overrides."""

import inspect
import json

import pytest

import cli
from config_manager import DEFAULT_PARAMETERS, ToleranceConfigManager


def test_defaults_without_file(tmp_path):
    manager = ToleranceConfigManager(str(tmp_path / "missing.json"))
    assert manager.get_parameters() == DEFAULT_PARAMETERS
    assert manager.get("fiducial_tol") == 1e-10
    assert manager.get("shots") == 100000


def test_file_values_override_defaults(tmp_path):
    path = tmp_path / "tol.json"
    path.write_text(json.dumps({"parameters": {"mmd_tol": 1e-6, "stake": 2.5, "bogus": 1}}))
    manager = ToleranceConfigManager(str(path))
    assert manager.get("mmd_tol") == 1e-6
    assert manager.get("stake") == 2.5
    assert manager.get("density_tol") == DEFAULT_PARAMETERS["density_tol"]
    with pytest.raises(KeyError):
        manager.get("bogus")


def test_environment_overrides_file(tmp_path, monkeypatch):
    path = tmp_path / "tol.json"
    path.write_text(json.dumps({"parameters": {"membership_tol": 1e-6}}))
    monkeypatch.setenv("BORN_TOOLKIT_MEMBERSHIP_TOL", "1e-9")
    monkeypatch.setenv("BORN_TOOLKIT_FIDUCIAL_RESTARTS", "4")
    manager = ToleranceConfigManager(str(path))
    assert manager.get("membership_tol") == 1e-9
    assert manager.get("fiducial_restarts") == 4
    assert isinstance(manager.get("fiducial_restarts"), int)


def test_malformed_file_falls_back_to_defaults(tmp_path):
    path = tmp_path / "tol.json"
    path.write_text("{not json")
    assert ToleranceConfigManager(str(path)).get("stake") == 1.0


def test_force_reload_picks_up_changes(tmp_path):
    path = tmp_path / "tol.json"
    path.write_text(json.dumps({"parameters": {"shots": 10}}))
    manager = ToleranceConfigManager(str(path))
    assert manager.get("shots") == 10
    path.write_text(json.dumps({"parameters": {"shots": 20}}))
    assert manager.get("shots") == 10
    assert manager.get_parameters(force_reload=True)["shots"] == 20


@pytest.mark.parametrize("key", sorted(DEFAULT_PARAMETERS))
def test_every_parameter_is_read_by_the_cli(key):
    assert f'"{key}"' in inspect.getsource(cli)
