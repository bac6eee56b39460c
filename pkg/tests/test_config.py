"""
Tests for settings loading.
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from canonical_basis.core.config import DEFAULT_CONFIG_NAME, Settings, load_settings
from canonical_basis.core.errors import ConfigError


class TestSettings:
    """Tests for the Settings model."""

    def test_defaults(self):
        """Test default oracle points and seeds."""
        settings = Settings()
        assert settings.oracle_fractions() == [Fraction(97, 13), Fraction(211, 17)]
        assert settings.workers == 1
        assert settings.max_height is None
        assert settings.verify_max_height == 6
        assert settings.extension_seeds == [1, 2, 3]

    @pytest.mark.parametrize(
        "points",
        [["3/2"], ["3/2", "3/2"], ["0", "5"], ["1/0", "2"], ["abc", "2"], ["1", "2", "3"]],
    )
    def test_invalid_oracle_points(self, points):
        """Test the oracle needs two distinct nonzero rationals."""
        with pytest.raises(ValidationError):
            Settings(oracle_points=points)

    def test_workers_positive(self):
        """Test workers must be at least one."""
        with pytest.raises(ValidationError):
            Settings(workers=0)


class TestLoadSettings:
    """Tests for load_settings."""

    def test_missing_default_file(self, tmp_path, monkeypatch):
        """Test defaults apply when no config file exists."""
        monkeypatch.chdir(tmp_path)
        assert load_settings() == Settings()

    def test_default_file_is_read(self, tmp_path, monkeypatch):
        """Test the working-directory config is picked up."""
        monkeypatch.chdir(tmp_path)
        (tmp_path / DEFAULT_CONFIG_NAME).write_text("workers: 4\nverify_max_height: 3\n")
        settings = load_settings()
        assert settings.workers == 4
        assert settings.verify_max_height == 3

    def test_explicit_file(self, tmp_path):
        """Test an explicit path with oracle points and module files."""
        path = tmp_path / "run.yaml"
        path.write_text(
            "oracle_points: ['5/3', '-7/2']\nmodule_files: [a.json]\nextension_seeds: [9]\n"
        )
        settings = load_settings(str(path))
        assert settings.oracle_fractions() == [Fraction(5, 3), Fraction(-7, 2)]
        assert settings.module_files == ["a.json"]
        assert settings.extension_seeds == [9]

    def test_empty_file(self, tmp_path):
        """Test an empty file gives defaults."""
        path = tmp_path / "empty.yaml"
        path.write_text("")
        assert load_settings(str(path)) == Settings()

    def test_explicit_missing_file(self, tmp_path):
        """Test a missing explicit path raises ConfigError."""
        with pytest.raises(ConfigError):
            load_settings(str(tmp_path / "nope.yaml"))

    @pytest.mark.parametrize(
        "content",
        ["workers: [1, 2\n", "- just\n- a list\n", "workers: 0\n", "oracle_points: ['1', '1']\n"],
    )
    def test_invalid_files(self, tmp_path, content):
        """Test unparsable or invalid files raise ConfigError."""
        path = tmp_path / "bad.yaml"
        path.write_text(content)
        with pytest.raises(ConfigError):
            load_settings(str(path))
