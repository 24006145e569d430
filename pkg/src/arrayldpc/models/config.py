"""Configuration model loaded from TOML."""

import sys
from pathlib import Path
from typing import Any, Optional, Union

import tomli_w
from platformdirs import user_config_dir
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from arrayldpc.core.interfaces import ConfigurationError
from arrayldpc.models.template import InferenceConfig

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

DEFAULT_CONFIG_NAME = "arrayldpc.toml"


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class CodeSettings(_Section):
    max_expand_columns: int = Field(default=10_000, ge=1, description="Memory guard for dense expansion")


class DistanceSettings(_Section):
    enumeration_limit_bits: int = Field(default=26, ge=1, le=60)
    hard_limit_bits: int = Field(default=60, ge=1)
    stopping_cap: int = Field(default=12, ge=1)
    heuristic_budget: int = Field(default=100_000, ge=1)
    heuristic_seed: int = 2012
    weight3_window: int = Field(default=24, ge=3)
    threads: int = Field(default=1, ge=1)


class CycleSettings(_Section):
    max_cycles_per_edge: int = Field(default=1_000_000, ge=1)


class InferenceSettings(_Section):
    multiplier_bound: Optional[int] = Field(default=None, ge=1)
    relaxed: bool = False
    max_backtracks: int = Field(default=100_000, ge=1)


class VerifySettings(_Section):
    sweep_max: int = Field(default=1000, ge=3)
    workers: int = Field(default=1, ge=1)


class TableSettings(_Section):
    qmin: int = Field(default=7, ge=3)
    lower_bound_cap: Optional[int] = Field(default=None, ge=1)


class LoggingSettings(_Section):
    level: str = Field(default="WARNING", pattern="^(DEBUG|INFO|WARNING|ERROR)$")
    file: Optional[str] = None
    max_size_mb: int = Field(default=10, ge=1)
    backup_count: int = Field(default=3, ge=0)


class ArrayLDPCConfig(_Section):
    """Top-level configuration, one field per TOML section."""

    code: CodeSettings = Field(default_factory=CodeSettings)
    distance: DistanceSettings = Field(default_factory=DistanceSettings)
    cycles: CycleSettings = Field(default_factory=CycleSettings)
    inference: InferenceSettings = Field(default_factory=InferenceSettings)
    verify: VerifySettings = Field(default_factory=VerifySettings)
    table: TableSettings = Field(default_factory=TableSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "ArrayLDPCConfig":
        """Load configuration from a TOML file.

        Raises:
            ConfigurationError: If the file cannot be read or does not match the schema
        """
        path = Path(path)
        try:
            with path.open("rb") as fh:
                data = tomllib.load(fh)
        except (OSError, tomllib.TOMLDecodeError) as e:
            raise ConfigurationError(f"cannot read {path}: {e}") from e
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            raise ConfigurationError(f"invalid configuration in {path}: {e}") from e

    def to_file(self, path: Union[str, Path]) -> None:
        """Write the configuration as TOML (unset optional values are omitted)."""
        data = self.model_dump(exclude_none=True)
        Path(path).write_text(tomli_w.dumps(data), encoding="utf-8")

    @staticmethod
    def default_paths() -> list[Path]:
        return [
            Path(DEFAULT_CONFIG_NAME),
            Path(user_config_dir("arrayldpc")) / "config.toml",
        ]

    @classmethod
    def load_default(cls, explicit: Optional[Path] = None) -> tuple["ArrayLDPCConfig", Optional[Path]]:
        """Load the explicit file, else the first default path that exists, else defaults."""
        if explicit is not None:
            return cls.from_file(explicit), explicit
        for candidate in cls.default_paths():
            if candidate.exists():
                return cls.from_file(candidate), candidate
        return cls(), None

    def inference_config(self, **overrides: Any) -> InferenceConfig:
        values: dict[str, Any] = {
            "multiplier_bound": self.inference.multiplier_bound,
            "relaxed": self.inference.relaxed,
            "max_backtracks": self.inference.max_backtracks,
            "max_cycles_per_edge": self.cycles.max_cycles_per_edge,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return InferenceConfig(**values)
