import pytest

from golaysc.errors import ConfigError
from golaysc.utils.config import CONFIG_FILE_NAME, Settings, read_config, settings


def test_reads_yaml_file(tmp_path):
    path = tmp_path / CONFIG_FILE_NAME
    path.write_text("GOLAYSC_LIST_SIZE: 8\nGOLAYSC_LOG_LEVEL: debug\n")
    values = read_config(str(path))
    assert values["GOLAYSC_LIST_SIZE"] == 8
    typed = settings(values)
    assert typed.list_size == 8
    assert typed.log_level == "DEBUG"
    assert typed.max_paths == Settings().max_paths


def test_environment_wins_over_file(tmp_path, monkeypatch):
    path = tmp_path / CONFIG_FILE_NAME
    path.write_text("GOLAYSC_WORKERS: 2\n")
    monkeypatch.setenv("GOLAYSC_WORKERS", "6")
    assert settings(read_config(str(path))).workers == 6


def test_missing_file_is_not_an_error(tmp_path):
    values = read_config(str(tmp_path / "absent.yaml"))
    assert isinstance(values, dict)


def test_damaged_file_warns(tmp_path):
    path = tmp_path / CONFIG_FILE_NAME
    path.write_text("GOLAYSC_WORKERS: [1, 2\n")
    with pytest.warns(UserWarning):
        read_config(str(path))


def test_non_mapping_file_warns(tmp_path):
    path = tmp_path / CONFIG_FILE_NAME
    path.write_text("- 1\n- 2\n")
    with pytest.warns(UserWarning):
        read_config(str(path))


def test_defaults():
    assert settings({}) == Settings()
    assert Settings().list_size == 16
    assert Settings().min_errors == 200


@pytest.mark.parametrize(
    "values",
    [
        {"GOLAYSC_LIST_SIZE": "many"},
        {"GOLAYSC_MAX_PATHS": 0},
        {"GOLAYSC_BATCH_SIZE": -5},
        {"GOLAYSC_LOG_LEVEL": "LOUD"},
    ],
)
def test_invalid_values(values):
    with pytest.raises(ConfigError):
        settings(values)
