"""Configuration for matlc runs."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional


def _bool_from_env(key: str, default: bool = False) -> bool:
    val = os.getenv(key)
    if val is None:
        return default
    return val.strip().lower() in ("true", "1", "yes", "on")


@dataclass
class MatlcConfig:
    """Runtime config for enumeration caps, check execution and output."""
    enumeration_cap: int = field(default_factory=lambda: int(os.getenv("MATLC_ENUMERATION_CAP", "24")))
    validation_cap: int = field(default_factory=lambda: int(os.getenv("MATLC_VALIDATION_CAP", "12")))
    chromatic_switch_edges: int = field(
        default_factory=lambda: int(os.getenv("MATLC_CHROMATIC_SWITCH_EDGES", "20"))
    )

    workers: int = field(default_factory=lambda: int(os.getenv("MATLC_WORKERS", "1")))
    fixture_timeout_s: float = field(
        default_factory=lambda: float(os.getenv("MATLC_FIXTURE_TIMEOUT_S", "0"))
    )

    report_dir: str = field(default_factory=lambda: os.getenv("MATLC_REPORT_DIR", "reports"))
    log_level: str = field(default_factory=lambda: os.getenv("MATLC_LOG_LEVEL", "WARNING"))

    # Conjecture checks (non-Q-representable fixtures) only fail a check run when set.
    strict_representability: bool = field(
        default_factory=lambda: _bool_from_env("MATLC_STRICT_REPRESENTABILITY", False)
    )

    def report_path(self, name: str) -> Path:
        """Place a bare file name under ``report_dir``; paths with a directory are kept as given."""
        path = Path(name)
        if path.is_absolute() or path.parent != Path("."):
            return path
        return Path(self.report_dir) / path

    @classmethod
    def from_file(cls, path: str) -> "MatlcConfig":
        """Load config from a JSON file."""
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(**data)


_active: Optional[MatlcConfig] = None


def get_config() -> MatlcConfig:
    """Return the process-wide active config, creating it from the environment on first use."""
    global _active
    if _active is None:
        _active = MatlcConfig()
    return _active


def set_config(cfg: MatlcConfig) -> None:
    """Replace the process-wide active config."""
    global _active
    _active = cfg


def resolve_cap(cap: Optional[int]) -> int:
    """Return ``cap`` or the active enumeration cap."""
    return get_config().enumeration_cap if cap is None else cap
