import json
import logging

import pytest
from pydantic import ValidationError

from ribbon_morph.config.config import AppConfig, get_config, parse_samples
from ribbon_morph.internal.logger.logger import JSONCustomFormatter, Logger, TextCustomFormatter, formatter_for


class TestSettings:
    def test_defaults(self, monkeypatch):
        for key in ("RIBBON_TOLERANCE", "RIBBON_LOG_LEVEL", "RIBBON_COARSE_SAMPLES"):
            monkeypatch.delenv(key, raising=False)
        cfg = AppConfig()

        assert cfg.logging.level == "INFO"
        assert cfg.solver.tolerance == 1e-9
        assert cfg.solver.phi_scan_points == 2000
        assert cfg.solver.coarse_samples == (120, 12)

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("RIBBON_TOLERANCE", "1e-6")
        monkeypatch.setenv("RIBBON_LOG_LEVEL", "debug")
        monkeypatch.setenv("RIBBON_COARSE_SAMPLES", "60x6")
        cfg = AppConfig()

        assert cfg.solver.tolerance == 1e-6
        assert cfg.logging.level == "DEBUG"
        assert cfg.solver.coarse_samples == (60, 6)
        assert cfg.model_dump()["solver"]["coarse_samples"] == "60x6"

    @pytest.mark.parametrize("key,value", [
        ("RIBBON_LOG_LEVEL", "LOUD"),
        ("RIBBON_LOG_FORMAT", "xml"),
        ("RIBBON_TOLERANCE", "0"),
        ("RIBBON_PHI_SCAN_POINTS", "4"),
    ])
    def test_rejects_bad_values(self, monkeypatch, key, value):
        monkeypatch.setenv(key, value)
        with pytest.raises(ValidationError):
            AppConfig()

    def test_env_file(self, tmp_path, monkeypatch):
        # registered so the value loaded from the file is undone afterwards
        monkeypatch.setenv("RIBBON_SEED", "1")
        env = tmp_path / ".env"
        env.write_text("RIBBON_SEED=7\n")
        get_config.cache_clear()
        try:
            assert get_config(str(env)).solver.seed == 7
        finally:
            get_config.cache_clear()

    @pytest.mark.parametrize("text,expected", [("120x12", (120, 12)), (" 8 X 3 ", (8, 3))])
    def test_parse_samples(self, text, expected):
        assert parse_samples(text) == expected

    def test_parse_samples_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_samples("120-12")


class TestLogger:
    def _record(self, **data) -> logging.LogRecord:
        record = logging.LogRecord("ribbon_morph.test", logging.INFO, __file__, 1, "sweep started", None, None)
        record.data = data
        return record

    def test_json_line(self):
        line = json.loads(JSONCustomFormatter().format(self._record(points=21)))

        assert line["level"] == "INFO"
        assert line["logger"] == "ribbon_morph.test"
        assert line["message"] == "sweep started"
        assert line["points"] == 21

    def test_text_line(self):
        text = TextCustomFormatter().format(self._record(points=21))
        assert text.endswith("| INFO     | sweep started | points=21")

    def test_structured_fields_reach_handler(self):
        stream = logging.StreamHandler(stream=None)
        records = []
        stream.emit = records.append
        logger = Logger(level=logging.DEBUG, handler=stream)

        logger.info("mesh written", vertices=10)

        assert logger.level == logging.DEBUG
        assert records[0].data == {"vertices": 10}

    def test_record_without_fields(self):
        record = logging.LogRecord("ribbon_morph.test", logging.WARNING, __file__, 1, "plain", None, None)

        assert TextCustomFormatter().format(record).endswith("| WARNING  | plain")
        assert json.loads(JSONCustomFormatter().format(record))["message"] == "plain"

    @pytest.mark.parametrize("fmt,kind", [("json", JSONCustomFormatter), ("text", TextCustomFormatter)])
    def test_formatter_for(self, fmt, kind):
        assert isinstance(formatter_for(fmt), kind)
