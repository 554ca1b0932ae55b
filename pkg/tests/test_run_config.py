import pytest

from config.run_config import ConfigPresets, RunConfig


def test_defaults_are_valid():
    assert RunConfig().validate() == []


@pytest.mark.parametrize("changes, fragment", [
    ({"q": 4}, "q must be prime"),
    ({"n": 0}, "n must be a positive integer"),
    ({"format": "xml"}, "Format must be one of"),
    ({"suite": "everything"}, "Suite must be one of"),
    ({"command": "draw"}, "Unknown command"),
    ({"max_group_order": 0}, "max_group_order must be positive"),
    ({"jobs": 0}, "jobs must be at least 1"),
])
def test_validation_issues(changes, fragment):
    issues = RunConfig(**changes).validate()
    assert any(fragment in issue for issue in issues)


def test_save_and_load(tmp_path):
    config = RunConfig(n=4, q=3, command="verify", suite="model", jobs=2)
    path = tmp_path / "run.json"
    config.save_to_file(str(path))
    assert RunConfig.load_from_file(str(path)) == config


def test_from_dict_ignores_unknown_keys():
    config = RunConfig.from_dict({"n": 5, "colour": "blue"})
    assert config.n == 5
    assert not hasattr(config, "colour")


def test_jobs_default_from_environment(monkeypatch):
    monkeypatch.setenv("TDORBIT_JOBS", "3")
    assert RunConfig().jobs == 3
    monkeypatch.setenv("TDORBIT_JOBS", "many")
    assert RunConfig().jobs == 1


def test_presets():
    quick = ConfigPresets.by_name("quick")
    assert quick.max_group_order < ConfigPresets.desk().max_group_order
    assert ConfigPresets.by_name("acceptance").max_oracle_operations == 5_000_000
    with pytest.raises(KeyError):
        ConfigPresets.by_name("huge")


def test_str():
    assert str(RunConfig(n=2, q=5)) == "RunConfig(command=counts, n=2, q=5, format=table)"
