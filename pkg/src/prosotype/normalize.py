"""Dual min-max normalization of raw features into relative [0, 1] values.

Each feature series is normalized twice: once against the whole utterance
and once against an asymmetric sliding window of neighboring syllables; the
final value is the arithmetic mean of the two. A degenerate range (all
values equal) maps to the neutral value 0.5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import EmptyInput, LengthMismatch
from .prosody import ProsodyVector

NEUTRAL = 0.5


@dataclass(frozen=True)
class WindowSpec:
    """Sliding window bounds in syllables: [i - look_back, i + look_ahead]."""

    look_back: int = 10
    look_ahead: int = 5

    def __post_init__(self):
        if self.look_back < 0 or self.look_ahead < 0:
            raise ValueError("window bounds must be >= 0")
        if self.look_back + self.look_ahead < 1:
            raise ValueError("window must reach at least one neighbor")


@dataclass(frozen=True)
class NormalizedProsody:
    loudness: float
    pitch: float
    tempo: float
    pitch_was_voiced: bool


def _check_finite(values: Sequence[float]):
    if len(values) == 0:
        raise EmptyInput("cannot normalize an empty series")
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"series contains non-finite value {v}")


def _rescale(value: float, lo: float, hi: float) -> float:
    if hi == lo:
        return NEUTRAL
    return (value - lo) / (hi - lo)


def global_normalize(values: Sequence[float]) -> list[float]:
    """Min-max normalization against the whole series."""
    _check_finite(values)
    lo, hi = min(values), max(values)
    return [_rescale(v, lo, hi) for v in values]


def local_normalize(values: Sequence[float], window: WindowSpec = WindowSpec()) -> list[float]:
    """Min-max normalization against each index's clamped window."""
    _check_finite(values)
    n = len(values)
    out = []
    for i in range(n):
        neighborhood = values[max(0, i - window.look_back) : min(n - 1, i + window.look_ahead) + 1]
        out.append(_rescale(values[i], min(neighborhood), max(neighborhood)))
    return out


def combine(globals_: Sequence[float], locals_: Sequence[float]) -> list[float]:
    """Element-wise arithmetic mean of the two normalizations."""
    if len(globals_) != len(locals_):
        raise LengthMismatch(
            f"series lengths differ: {len(globals_)} vs {len(locals_)}"
        )
    return [(g + l) / 2 for g, l in zip(globals_, locals_)]


def _normalize_series(values: Sequence[float], window: WindowSpec) -> list[float]:
    return combine(global_normalize(values), local_normalize(values, window))


def _normalize_pitch(
    pitches: Sequence[Optional[float]], window: WindowSpec
) -> list[float]:
    """Like _normalize_series but unvoiced entries neither contribute to any
    min/max nor receive one; they get the neutral value directly."""
    voiced = [p for p in pitches if p is not None]
    if not voiced:
        return [NEUTRAL] * len(pitches)
    for v in voiced:
        if not math.isfinite(v):
            raise ValueError(f"series contains non-finite value {v}")
    glo, ghi = min(voiced), max(voiced)
    n = len(pitches)
    out = []
    for i, p in enumerate(pitches):
        if p is None:
            out.append(NEUTRAL)
            continue
        neighborhood = [
            q
            for q in pitches[max(0, i - window.look_back) : min(n - 1, i + window.look_ahead) + 1]
            if q is not None
        ]
        local = _rescale(p, min(neighborhood), max(neighborhood))
        out.append((_rescale(p, glo, ghi) + local) / 2)
    return out


def normalize_utterance(
    features: Sequence[ProsodyVector], window: WindowSpec = WindowSpec()
) -> list[NormalizedProsody]:
    """Normalize the magnitude, pitch, and duration series independently."""
    if len(features) == 0:
        raise EmptyInput("cannot normalize an empty utterance")
    loudness = _normalize_series([f.magnitude_rms for f in features], window)
    tempo = _normalize_series([f.duration_sec for f in features], window)
    pitch = _normalize_pitch([f.pitch_hz for f in features], window)
    return [
        NormalizedProsody(
            loudness=loudness[i],
            pitch=pitch[i],
            tempo=tempo[i],
            pitch_was_voiced=features[i].pitch_hz is not None,
        )
        for i in range(len(features))
    ]
