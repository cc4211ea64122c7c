"""Mapping of normalized prosody onto typographic parameter values.

Loudness drives the variable-font weight axis, pitch drives baseline shift
(positive is visually upward), and tempo drives letter-spacing through a
half-rectified ramp that only ever widens, never squeezes, letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyInput, OutOfRange
from .normalize import NormalizedProsody


@dataclass(frozen=True)
class MapConfig:
    weight_min: float = 300.0
    weight_max: float = 800.0
    baseline_max_em: float = 0.25
    spacing_max_em: float = 0.40
    spacing_pivot: float = 0.5

    def __post_init__(self):
        if not self.weight_min < self.weight_max:
            raise ValueError("weight_min must be below weight_max")
        if self.baseline_max_em <= 0:
            raise ValueError("baseline_max_em must be positive")
        if self.spacing_max_em <= 0:
            raise ValueError("spacing_max_em must be positive")
        if not 0 < self.spacing_pivot < 1:
            raise ValueError("spacing_pivot must lie strictly inside (0, 1)")


@dataclass(frozen=True)
class TypoStyle:
    font_weight: float
    baseline_shift_em: float
    letter_spacing_em: float


def _check_unit(v: float, name: str):
    if not 0.0 <= v <= 1.0:
        raise OutOfRange(f"{name} must lie in [0, 1], got {v}")


def map_loudness_to_weight(v: float, cfg: MapConfig = MapConfig()) -> float:
    """Linear map of [0, 1] onto [weight_min, weight_max]."""
    _check_unit(v, "loudness")
    return cfg.weight_min + v * (cfg.weight_max - cfg.weight_min)


def map_pitch_to_baseline(v: float, cfg: MapConfig = MapConfig()) -> float:
    """Linear map of [0, 1] onto [-baseline_max_em, +baseline_max_em].

    Neutral pitch (0.5) sits exactly on the baseline; high pitch rises.
    """
    _check_unit(v, "pitch")
    return (v - 0.5) * 2.0 * cfg.baseline_max_em


def map_tempo_to_spacing(v: float, cfg: MapConfig = MapConfig()) -> float:
    """Half-rectified ramp: values at or below the pivot add no spacing."""
    _check_unit(v, "tempo")
    return max(0.0, (v - cfg.spacing_pivot) / (1.0 - cfg.spacing_pivot)) * cfg.spacing_max_em


def style_utterance(
    norm: Sequence[NormalizedProsody], cfg: MapConfig = MapConfig()
) -> list[TypoStyle]:
    """Apply the three maps element-wise; axes never interact."""
    if len(norm) == 0:
        raise EmptyInput("cannot style an empty utterance")
    return [
        TypoStyle(
            font_weight=map_loudness_to_weight(n.loudness, cfg),
            baseline_shift_em=map_pitch_to_baseline(n.pitch, cfg),
            letter_spacing_em=map_tempo_to_spacing(n.tempo, cfg),
        )
        for n in norm
    ]
