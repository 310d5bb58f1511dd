from __future__ import annotations

import pytest

from cyclichom.core.config import Settings
from cyclichom.core.config_loader import RunConfig, load_run_config, resolve_run_config
from cyclichom.core.enums import OutputFormat
from cyclichom.core.errors import InputFormatError
from cyclichom.linalg.field import FieldSpec


def test_defaults_follow_settings():
    cfg = resolve_run_config(base=Settings())
    assert cfg.field == FieldSpec.rationals()
    assert cfg.cap == 20_000
    assert cfg.output_format == OutputFormat.TEXT


def test_environment_overrides_defaults(monkeypatch):
    monkeypatch.setenv("CYCLICHOM_CAP", "500")
    monkeypatch.setenv("CYCLICHOM_FIELD", "fp:7")
    cfg = resolve_run_config(base=Settings())
    assert cfg.cap == 500
    assert cfg.field == FieldSpec.prime(7)


def test_run_file_then_flags(tmp_path):
    run_file = tmp_path / "run.yaml"
    run_file.write_text("cap: 1000\nwindow: 2\nbogus: 1\n")
    assert load_run_config(run_file, Settings())["cap"] == 1000
    cfg = resolve_run_config(run_file, {"cap": 50, "window": None}, base=Settings())
    assert cfg.cap == 50
    assert cfg.window == 2


def test_missing_run_file_falls_back(tmp_path):
    assert load_run_config(tmp_path / "absent.yaml", Settings())["n_max"] == 4


@pytest.mark.parametrize("content", ["cap: [1,\n", "- 1\n- 2\n"])
def test_bad_run_file(tmp_path, content):
    run_file = tmp_path / "run.yaml"
    run_file.write_text(content)
    with pytest.raises(InputFormatError):
        load_run_config(run_file, Settings())


def test_invalid_values_are_input_errors():
    with pytest.raises(InputFormatError) as info:
        resolve_run_config(overrides={"cap": 0}, base=Settings())
    assert "cap" in info.value.locations


def test_field_strings_are_parsed():
    assert RunConfig(field="fp:5").field == FieldSpec.prime(5)
