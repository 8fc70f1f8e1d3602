"""
Configuration for lukas_qt.

Two layers, kept lean:
- SuiteConfig: validated, immutable bounds for the verification suite, loaded
  from YAML (the packaged `config.yaml` by default) and overridable per run.
- AppConfig: process settings read from the environment (or a .env file when
  the CLI loads one through python-dotenv).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .errors import ConfigError

DEFAULT_CONFIG_PATH = Path(__file__).with_name("config.yaml")


class SuiteConfig(BaseModel):
    """
    Bounds for one verification run. Defaults keep the full suite at desk
    scale (a few seconds to a minute on a laptop).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    # === Exhaustive corpus ===
    max_steps: int = Field(
        default=12,
        ge=1,
        description="Every path with at most this many steps (and every tree with as many nodes) is checked.",
    )
    brute_force_max_steps: int = Field(
        default=8,
        ge=1,
        description="Profiles realised by at most this many steps are cross-checked against a brute-force filter.",
    )

    # === Counting ===
    catalan_max: int = Field(
        default=8,
        ge=0,
        description="|L_{1^n}| is compared with the Catalan recurrence for n up to this bound.",
    )

    # === Profile polynomials ===
    profile_max_length: int = Field(
        default=4,
        ge=0,
        description="Longest prefix K in the last-degree independence check C~_{K.(a)} = C~_{K.(b)}.",
    )
    profile_max_entry: int = Field(
        default=3,
        ge=0,
        description="Largest profile entry (and largest a, b) in the profile polynomial checks.",
    )

    # === Lodestars ===
    lodestar_probe_degree: int = Field(
        default=3,
        ge=1,
        description="Right-lodestar child counts 1..N tried by the degree irrelevance check.",
    )

    # === Generating series ===
    series_order: int = Field(
        default=5,
        ge=0,
        description="Truncation order N (largest multiset size) of the generating series.",
    )
    series_degree: int = Field(
        default=3,
        ge=0,
        description="Largest marked degree K_max of the generating series.",
    )


def load_suite_config(
    path: Optional[Path] = None, overrides: Optional[Mapping[str, Any]] = None
) -> SuiteConfig:
    """Read a YAML suite config, apply non-None overrides, validate."""
    source = path or DEFAULT_CONFIG_PATH
    try:
        with open(source, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f"cannot read suite config {source}: {e}") from e

    if not isinstance(raw, dict):
        raise ConfigError(f"suite config {source} must be a mapping")

    section = raw.get("suite", raw)
    if not isinstance(section, dict):
        raise ConfigError(f"section 'suite' of {source} must be a mapping")
    merged = dict(section)
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return SuiteConfig(**merged)
    except ValidationError as e:
        fields = ", ".join(".".join(str(p) for p in err["loc"]) for err in e.errors())
        raise ConfigError(f"invalid suite config ({fields}): {e}") from e


@dataclass(frozen=True)
class AppConfig:
    """Process-level settings (safe defaults), read when the CLI starts."""

    log_level: str = "INFO"
    log_file: str = ""  # empty: console logging only

    @classmethod
    def from_env(cls) -> "AppConfig":
        return cls(
            log_level=os.getenv("LUKAS_QT_LOG_LEVEL", "INFO"),
            log_file=os.getenv("LUKAS_QT_LOG_FILE", ""),
        )
