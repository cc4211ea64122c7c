"""Pipeline configuration: defaults, TOML config files, and flag overrides.

Every tunable numeric default lives in the component dataclasses referenced
here (PitchConfig, WindowSpec, MapConfig); this module only assembles them.
Config files are TOML with optional [pitch], [window], and [map] tables and
a top-level font_family key. Command-line flags override file values.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

try:
    import tomllib
except ImportError:
    import tomli as tomllib

from .errors import SchemaError
from .normalize import WindowSpec
from .prosody import PitchConfig
from .typomap import MapConfig

DEFAULT_FONT_FAMILY = "Recursive"

_SECTIONS = {
    "pitch": (PitchConfig, ("f_min_hz", "f_max_hz", "frame_sec", "hop_sec", "voicing_threshold", "octave_cost")),
    "window": (WindowSpec, ("look_back", "look_ahead")),
    "map": (MapConfig, ("weight_min", "weight_max", "baseline_max_em", "spacing_max_em", "spacing_pivot")),
}


@dataclass(frozen=True)
class PipelineConfig:
    pitch: PitchConfig = PitchConfig()
    window: WindowSpec = WindowSpec()
    map: MapConfig = MapConfig()
    font_family: str = DEFAULT_FONT_FAMILY


def _build_section(name, table):
    cls, allowed = _SECTIONS[name]
    for key in table:
        if key not in allowed:
            raise SchemaError(f"unknown key '{key}'", name)
    try:
        return cls(**table)
    except (TypeError, ValueError) as exc:
        raise SchemaError(str(exc), name) from exc


def parse_config(text: str) -> PipelineConfig:
    """Parse a TOML config document into a PipelineConfig."""
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise SchemaError(f"not valid TOML: {exc}") from exc
    sections = {}
    for key, value in data.items():
        if key in _SECTIONS:
            if not isinstance(value, dict):
                raise SchemaError("expected a table", key)
            sections[key] = _build_section(key, value)
        elif key == "font_family":
            if not isinstance(value, str):
                raise SchemaError("font_family must be a string", key)
            sections["font_family"] = value
        else:
            raise SchemaError(f"unknown key '{key}'")
    return PipelineConfig(**sections)


def load_config(path) -> PipelineConfig:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_config(handle.read())


def apply_overrides(cfg: PipelineConfig, overrides: dict) -> PipelineConfig:
    """Return a config with non-None override values applied.

    Keys use dotted paths into the component configs, e.g. "pitch.f_max_hz".
    """
    patches: dict[str, dict] = {}
    top = {}
    for dotted, value in overrides.items():
        if value is None:
            continue
        section, _, field = dotted.partition(".")
        if field:
            patches.setdefault(section, {})[field] = value
        else:
            top[section] = value
    for section, fields in patches.items():
        base = getattr(cfg, section)
        if (
            section == "pitch"
            and "frame_sec" not in fields
            and base.frame_sec == 3.0 / base.f_min_hz
        ):
            fields = {**fields, "frame_sec": None}  # keep tracking f_min_hz
        try:
            component = dataclasses.replace(base, **fields)
        except (TypeError, ValueError) as exc:
            raise SchemaError(str(exc), section) from exc
        cfg = dataclasses.replace(cfg, **{section: component})
    if top:
        cfg = dataclasses.replace(cfg, **top)
    return cfg
