"""Per-syllable prosodic feature extraction: magnitude, pitch, duration.

Pitch is estimated per syllable by short-time normalized autocorrelation:
each frame contributes one candidate peak, frames whose peak clears the
voicing threshold are voiced, and the syllable pitch is the median over
voiced frames. Unvoiced syllables are represented by ``None``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .audio import AudioBuffer
from .errors import EmptySegment, ProsotypeError
from .transcript import Utterance


@dataclass(frozen=True)
class PitchConfig:
    """Search and voicing parameters for pitch analysis.

    `frame_sec` defaults to three periods of `f_min_hz` so the longest
    candidate lag fits the frame three times. `octave_cost` biases candidate
    selection toward shorter lags by that much peak height per octave, which
    keeps harmonically rich voices from collapsing to subharmonics; voicing
    decisions always use the raw peak height.
    """

    f_min_hz: float = 50.0
    f_max_hz: float = 350.0
    frame_sec: Optional[float] = None
    hop_sec: float = 0.010
    voicing_threshold: float = 0.45
    octave_cost: float = 0.01

    def __post_init__(self):
        if not 0 < self.f_min_hz < self.f_max_hz:
            raise ValueError(
                f"need 0 < f_min_hz < f_max_hz, got {self.f_min_hz}, {self.f_max_hz}"
            )
        if self.frame_sec is None:
            object.__setattr__(self, "frame_sec", 3.0 / self.f_min_hz)
        if self.frame_sec < 2.0 / self.f_min_hz:
            raise ValueError("frame_sec must cover at least two periods of f_min_hz")
        if self.hop_sec <= 0:
            raise ValueError("hop_sec must be positive")
        if not 0 < self.voicing_threshold < 1:
            raise ValueError("voicing_threshold must lie in (0, 1)")
        if self.octave_cost < 0:
            raise ValueError("octave_cost must be >= 0")


@dataclass(frozen=True)
class ProsodyVector:
    """Raw per-syllable features; pitch_hz is None when unvoiced."""

    magnitude_rms: float
    pitch_hz: Optional[float]
    duration_sec: float


def rms(segment: AudioBuffer) -> float:
    """Root mean square of all samples in the segment."""
    if len(segment) == 0:
        raise EmptySegment("cannot take RMS of an empty segment")
    samples = segment.samples
    return float(np.sqrt(np.mean(samples * samples)))


def _frame_segment(samples: np.ndarray, frame_len: int, hop: int) -> np.ndarray:
    """Frames at hop offsets from 0; the tail is zero-padded, never dropped."""
    n = len(samples)
    offsets = range(0, max(n, 1), hop)
    frames = np.zeros((len(offsets), frame_len))
    for i, off in enumerate(offsets):
        chunk = samples[off : off + frame_len]
        # remove the mean of the real samples only; padding stays zero
        frames[i, : len(chunk)] = chunk - chunk.mean() if len(chunk) else 0.0
    return frames


def _window_acf(window: np.ndarray, max_lag: int) -> np.ndarray:
    nfft = 1 << int(2 * len(window)).bit_length()
    spec = np.fft.rfft(window, nfft)
    acf = np.fft.irfft(spec.real**2 + spec.imag**2, nfft)[: max_lag + 1]
    return acf / acf[0]


def estimate_pitch(segment: AudioBuffer, cfg: PitchConfig = PitchConfig()) -> Optional[float]:
    """Median fundamental frequency over voiced frames, or None if unvoiced.

    Frames the segment with a Hanning taper, divides each frame's normalized
    autocorrelation by the window's to undo the taper bias, searches lags
    between 1/f_max_hz and 1/f_min_hz, and refines the winning peak by
    parabolic interpolation. A frame is voiced iff its peak height reaches
    the voicing threshold. Segments shorter than one frame are evaluated as
    a single zero-padded frame.
    """
    if len(segment) == 0:
        raise EmptySegment("cannot estimate pitch of an empty segment")
    rate = segment.sample_rate
    if cfg.f_max_hz >= rate / 2:
        raise ValueError(
            f"f_max_hz {cfg.f_max_hz} must be below the Nyquist rate {rate / 2}"
        )

    frame_len = int(round(cfg.frame_sec * rate))
    hop = max(1, int(round(cfg.hop_sec * rate)))
    lag_lo = max(2, int(math.floor(rate / cfg.f_max_hz)))
    lag_hi = min(frame_len - 2, int(math.ceil(rate / cfg.f_min_hz)))
    if lag_hi < lag_lo:
        raise ValueError("pitch search range is empty at this sample rate")

    window = np.hanning(frame_len)
    frames = _frame_segment(segment.samples, frame_len, hop) * window
    frames = np.ascontiguousarray(frames, dtype=np.float64)
    window_acf = np.ascontiguousarray(_window_acf(window, lag_hi + 1))

    lags, values = _kernels.best_peaks(
        frames, lag_lo, lag_hi, window_acf, cfg.octave_cost, rate / cfg.f_min_hz
    )
    voiced = ~np.isnan(values) & (values >= cfg.voicing_threshold)
    if not voiced.any():
        return None
    f0 = np.clip(rate / lags[voiced], cfg.f_min_hz, cfg.f_max_hz)
    return float(np.median(f0))


def extract_utterance(
    buffer: AudioBuffer, utterance: Utterance, cfg: PitchConfig = PitchConfig()
) -> list[ProsodyVector]:
    """One ProsodyVector per syllable, in utterance order.

    Magnitude is the RMS over the vowel span when the alignment provides
    one, else over the whole syllable; pitch always uses the whole syllable.
    """
    vectors = []
    for index, syllable in enumerate(utterance.syllables()):
        try:
            segment = buffer.slice(syllable.span)
            magnitude_region = (
                buffer.slice(syllable.vowel_span) if syllable.vowel_span else segment
            )
            magnitude = rms(magnitude_region)
            pitch = estimate_pitch(segment, cfg)
        except ProsotypeError as exc:
            raise type(exc)(f"syllable {index} ('{syllable.text}'): {exc}") from exc
        vectors.append(
            ProsodyVector(
                magnitude_rms=magnitude,
                pitch_hz=pitch,
                duration_sec=syllable.span.duration_sec,
            )
        )
    return vectors
