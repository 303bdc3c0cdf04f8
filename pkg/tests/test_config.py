import json
import logging

from config import DEFAULT_CONFIG, get_config, save_config, setup_logging


def test_defaults_when_the_file_is_missing(tmp_path, monkeypatch):
    monkeypatch.setenv("FOXDIV_CONFIG", str(tmp_path / "absent.json"))
    assert get_config() == DEFAULT_CONFIG


def test_file_values_override_defaults(tmp_path, monkeypatch):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"max_rules": 40, "unknown": 1}))
    monkeypatch.setenv("FOXDIV_CONFIG", str(path))
    config = get_config()
    assert config["max_rules"] == 40
    assert config["max_degree"] == DEFAULT_CONFIG["max_degree"]
    assert "unknown" not in config


def test_malformed_file_falls_back_to_defaults(tmp_path, monkeypatch):
    path = tmp_path / "config.json"
    path.write_text("{not json")
    monkeypatch.setenv("FOXDIV_CONFIG", str(path))
    assert get_config() == DEFAULT_CONFIG


def test_save_then_load(tmp_path, monkeypatch):
    path = tmp_path / "config.json"
    monkeypatch.setenv("FOXDIV_CONFIG", str(path))
    save_config(dict(DEFAULT_CONFIG, workers=3))
    assert get_config()["workers"] == 3


def test_logging_levels(monkeypatch):
    root = logging.getLogger()
    saved = (root.level, list(root.handlers))
    monkeypatch.setenv("FOXDIV_LOG", "off")
    setup_logging(dict(DEFAULT_CONFIG))
    assert logging.root.manager.disable == logging.CRITICAL
    monkeypatch.setenv("FOXDIV_LOG", "debug")
    setup_logging(dict(DEFAULT_CONFIG))
    assert logging.root.manager.disable == logging.NOTSET
    assert logging.getLogger().level == logging.DEBUG
    logging.disable(logging.NOTSET)
    root.handlers[:] = saved[1]
    root.setLevel(saved[0])


def test_unknown_log_level_warns_and_stays_off(monkeypatch, capsys):
    monkeypatch.setenv("FOXDIV_LOG", "verbose")
    setup_logging(dict(DEFAULT_CONFIG))
    assert logging.root.manager.disable == logging.CRITICAL
    out, err = capsys.readouterr()
    assert out == ""
    assert "unknown FOXDIV_LOG value 'verbose'" in err
    logging.disable(logging.NOTSET)
