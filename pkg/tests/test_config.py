from __future__ import annotations

import logging
from logging.handlers import RotatingFileHandler

import pytest

from lukas_qt.config import DEFAULT_CONFIG_PATH, AppConfig, SuiteConfig, load_suite_config
from lukas_qt.errors import ConfigError
from lukas_qt.utils import LOGGER_NAME, init_logging


def test_packaged_defaults():
    cfg = load_suite_config()
    assert cfg == SuiteConfig()
    assert (cfg.max_steps, cfg.series_order, cfg.series_degree) == (12, 5, 3)
    assert DEFAULT_CONFIG_PATH.name == "config.yaml"


def test_overrides_skip_none():
    cfg = load_suite_config(overrides={"max_steps": 4, "series_order": None})
    assert cfg.max_steps == 4
    assert cfg.series_order == 5


def test_yaml_file_with_and_without_section(tmp_path):
    sectioned = tmp_path / "a.yaml"
    sectioned.write_text("suite:\n  max_steps: 3\n  catalan_max: 2\n", encoding="utf-8")
    assert load_suite_config(sectioned).max_steps == 3

    flat = tmp_path / "b.yaml"
    flat.write_text("max_steps: 5\n", encoding="utf-8")
    assert load_suite_config(flat).max_steps == 5

    empty = tmp_path / "c.yaml"
    empty.write_text("", encoding="utf-8")
    assert load_suite_config(empty) == SuiteConfig()


@pytest.mark.parametrize(
    "text",
    [
        "suite:\n  max_steps: 0\n",
        "suite:\n  unknown_knob: 1\n",
        "suite:\n  max_steps: many\n",
        "suite: [1, 2]\n",
        "- 1\n- 2\n",
        "suite: {max_steps: 1\n",
    ],
)
def test_bad_yaml_raises_config_error(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigError):
        load_suite_config(path)


def test_validation_error_names_the_field():
    with pytest.raises(ConfigError, match="max_steps"):
        load_suite_config(overrides={"max_steps": -1})


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_suite_config(tmp_path / "nope.yaml")


def test_suite_config_is_frozen():
    cfg = SuiteConfig()
    with pytest.raises(Exception):
        cfg.max_steps = 3


def test_app_config_from_env(monkeypatch):
    monkeypatch.setenv("LUKAS_QT_LOG_LEVEL", "DEBUG")
    monkeypatch.delenv("LUKAS_QT_LOG_FILE", raising=False)
    app = AppConfig.from_env()
    assert app.log_level == "DEBUG"
    assert app.log_file == ""


def test_init_logging_replaces_handlers(tmp_path):
    log_file = tmp_path / "logs" / "run.log"
    logger = init_logging("debug", str(log_file))
    assert logger.name == LOGGER_NAME
    assert logger.level == logging.DEBUG
    assert not logger.propagate
    assert any(isinstance(h, RotatingFileHandler) for h in logger.handlers)

    logger = init_logging("WARNING")
    assert len(logger.handlers) == 1
    assert logger.level == logging.WARNING

    logging.getLogger(f"{LOGGER_NAME}.series").warning("hello")
    assert log_file.exists()
