"""
Run configuration read from ``.canonical-basis.yaml``.
"""

from fractions import Fraction
from pathlib import Path
from typing import List, Optional

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from canonical_basis.core.errors import ConfigError

DEFAULT_CONFIG_NAME = ".canonical-basis.yaml"


class Settings(BaseModel):
    """Tunable knobs for block computation and the verification suites."""

    oracle_points: List[str] = Field(
        default_factory=lambda: ["97/13", "211/17"],
        description="Rational points at which q is evaluated by the rank oracle",
    )
    workers: int = Field(1, ge=1, description="Worker threads for independent weight blocks")
    max_height: Optional[int] = Field(None, ge=0, description="Default height cap for basis")
    verify_max_height: int = Field(6, ge=0, description="Height cap for verify suites")
    extension_seeds: List[int] = Field(
        default_factory=lambda: [1, 2, 3],
        description="Seeds for random linear extensions in the order-independence suite",
    )
    module_files: List[str] = Field(default_factory=list)

    @field_validator("oracle_points")
    @classmethod
    def validate_points(cls, v: List[str]) -> List[str]:
        """Two distinct nonzero rationals."""
        if len(v) != 2:
            raise ValueError("oracle_points must hold exactly two rationals")
        parsed = []
        for text in v:
            try:
                value = Fraction(text)
            except (ValueError, ZeroDivisionError) as e:
                raise ValueError(f"invalid rational {text!r}") from e
            if value == 0:
                raise ValueError("oracle points must be nonzero")
            parsed.append(value)
        if parsed[0] == parsed[1]:
            raise ValueError("oracle points must differ")
        return v

    def oracle_fractions(self) -> List[Fraction]:
        return [Fraction(text) for text in self.oracle_points]


def load_settings(path: Optional[str] = None) -> Settings:
    """
    Load settings from a YAML file.

    Args:
        path: Explicit config file (default: ``.canonical-basis.yaml`` in the
            working directory, ignored when absent)

    Returns:
        Settings, falling back to defaults when no file exists

    Raises:
        ConfigError: if the file exists but is not a valid configuration
    """
    if path is None:
        config_path = Path(DEFAULT_CONFIG_NAME)
        if not config_path.exists():
            return Settings()
    else:
        config_path = Path(path)
        if not config_path.exists():
            raise ConfigError(f"config file not found: {path}")

    try:
        data = yaml.safe_load(config_path.read_text()) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"cannot parse {config_path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"{config_path} must contain a mapping")
    try:
        return Settings(**data)
    except ValidationError as e:
        raise ConfigError(f"invalid configuration in {config_path}: {e}") from e
