"""WAV decoding and time-span slicing of mono sample buffers."""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass

import numpy as np

from .errors import MalformedContainer, SpanOutOfRange, UnsupportedEncoding

MIN_SAMPLE_RATE = 8000

# Span boundaries snap to the sample grid within this many seconds, so that
# t = k/rate always lands on index k despite float rounding in t*rate.
_TICK_EPS_SEC = 1e-9


@dataclass(frozen=True)
class TimeSpan:
    """Half-open time interval in seconds, 0 <= start < end."""

    start_sec: float
    end_sec: float

    def __post_init__(self):
        if not (math.isfinite(self.start_sec) and math.isfinite(self.end_sec)):
            raise ValueError("time span bounds must be finite")
        if self.start_sec < 0:
            raise ValueError(f"time span start must be >= 0, got {self.start_sec}")
        if not self.start_sec < self.end_sec:
            raise ValueError(
                f"time span must satisfy start < end, got [{self.start_sec}, {self.end_sec}]"
            )

    @property
    def duration_sec(self) -> float:
        return self.end_sec - self.start_sec


@dataclass(frozen=True, eq=False)
class AudioBuffer:
    """Immutable mono sample stream; samples are float64 in [-1, 1]."""

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1:
            raise ValueError("samples must be one-dimensional")
        if self.sample_rate <= 0:
            raise ValueError(f"sample rate must be positive, got {self.sample_rate}")
        samples = samples.copy() if samples is self.samples else samples
        samples.flags.writeable = False
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def duration_sec(self) -> float:
        return len(self.samples) / self.sample_rate

    def _tick(self, t_sec: float) -> int:
        return int(math.floor((t_sec + _TICK_EPS_SEC) * self.sample_rate))

    def slice(self, span: TimeSpan) -> "AudioBuffer":
        """Samples in [floor(start*rate), floor(end*rate)) at the same rate."""
        if span.end_sec > self.duration_sec + 0.5 / self.sample_rate:
            raise SpanOutOfRange(
                f"span [{span.start_sec}, {span.end_sec}] exceeds buffer duration "
                f"{self.duration_sec:.6f}"
            )
        lo = self._tick(span.start_sec)
        hi = min(self._tick(span.end_sec), len(self.samples))
        return AudioBuffer(self.samples[lo:hi], self.sample_rate)


def _parse_fmt(payload: bytes) -> tuple[int, int, int, int, int]:
    if len(payload) < 16:
        raise MalformedContainer("fmt chunk shorter than 16 bytes")
    audio_format, channels, rate, _byte_rate, block_align, bits = struct.unpack(
        "<HHIIHH", payload[:16]
    )
    return audio_format, channels, rate, block_align, bits


def decode_wav(data: bytes) -> AudioBuffer:
    """Decode a RIFF/WAVE byte stream into a mono AudioBuffer.

    Supports PCM 16-bit integer and IEEE 32-bit float encodings with one or
    two channels. Stereo is mixed down by per-frame arithmetic mean, 16-bit
    integers are scaled by 1/32768, and float samples are clipped to [-1, 1].
    Chunks other than fmt/data are skipped.
    """
    if len(data) < 12 or data[0:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise MalformedContainer("missing RIFF/WAVE header")

    fmt = None
    frames = None
    offset = 12
    while offset + 8 <= len(data):
        chunk_id = data[offset : offset + 4]
        (size,) = struct.unpack("<I", data[offset + 4 : offset + 8])
        body = data[offset + 8 : offset + 8 + size]
        if len(body) < size:
            raise MalformedContainer(f"truncated {chunk_id!r} chunk")
        if chunk_id == b"fmt ":
            fmt = _parse_fmt(body)
        elif chunk_id == b"data":
            frames = body
        offset += 8 + size + (size & 1)  # chunks are word-aligned

    if fmt is None:
        raise MalformedContainer("no fmt chunk")
    if frames is None:
        raise MalformedContainer("no data chunk")

    audio_format, channels, rate, block_align, bits = fmt
    if channels not in (1, 2):
        raise UnsupportedEncoding(f"{channels} channels not supported")
    if rate < MIN_SAMPLE_RATE:
        raise UnsupportedEncoding(f"sample rate {rate} below minimum {MIN_SAMPLE_RATE}")
    if audio_format == 1 and bits == 16:
        dtype = np.dtype("<i2")
    elif audio_format == 3 and bits == 32:
        dtype = np.dtype("<f4")
    else:
        raise UnsupportedEncoding(
            f"format tag {audio_format} with {bits} bits per sample not supported"
        )
    if block_align != channels * bits // 8:
        raise MalformedContainer("block alignment inconsistent with format")
    if len(frames) % block_align != 0:
        raise MalformedContainer("data chunk does not hold a whole number of frames")

    raw = np.frombuffer(frames, dtype=dtype).astype(np.float64)
    if dtype.kind == "i":
        raw /= 32768.0
    else:
        raw = np.clip(raw, -1.0, 1.0)
    if channels == 2:
        raw = raw.reshape(-1, 2).mean(axis=1)
    return AudioBuffer(raw, int(rate))
