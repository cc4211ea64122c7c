"""Benchmark the compiled lag-search kernel against the pure-numpy fallback.

Run from the repository root:

    PYTHONPATH=src:tests python3 benchmarks/bench_kernels.py

Synthesizes a long harmonic passage, frames it exactly as pitch analysis
does, and times `best_peaks` for each available backend.
"""

from __future__ import annotations

import pathlib
import sys
import time

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "tests"))

import synth  # noqa: E402
from prosotype._kernels import get_backend  # noqa: E402
from prosotype.prosody import PitchConfig, _frame_segment, _window_acf  # noqa: E402

RATE = 16000
SECONDS = 60.0
REPEATS = 3


def build_frames():
    rng = np.random.default_rng(515)
    chunks = []
    remaining = SECONDS
    while remaining > 0:
        dur = min(float(rng.uniform(0.15, 0.45)), remaining)
        chunks.append(synth.harmonic_tone(float(rng.uniform(70, 320)), dur, RATE, rng=rng))
        remaining -= dur
    signal = np.concatenate(chunks)

    cfg = PitchConfig()
    frame_len = int(round(cfg.frame_sec * RATE))
    hop = int(round(cfg.hop_sec * RATE))
    window = np.hanning(frame_len)
    frames = np.ascontiguousarray(_frame_segment(signal, frame_len, hop) * window)
    lag_lo = max(2, int(np.floor(RATE / cfg.f_max_hz)))
    lag_hi = min(frame_len - 2, int(np.ceil(RATE / cfg.f_min_hz)))
    wacf = np.ascontiguousarray(_window_acf(window, lag_hi + 1))
    return frames, lag_lo, lag_hi, wacf, cfg


def bench(kernel, frames, lag_lo, lag_hi, wacf, cfg):
    best = np.inf
    for _ in range(REPEATS):
        start = time.perf_counter()
        kernel.best_peaks(frames, lag_lo, lag_hi, wacf, cfg.octave_cost, RATE / cfg.f_min_hz)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    frames, lag_lo, lag_hi, wacf, cfg = build_frames()
    n = len(frames)
    print(f"{n} frames of {frames.shape[1]} samples, lags {lag_lo}..{lag_hi}")

    results = {}
    for name in ("pure", "compiled"):
        try:
            kernel = get_backend(name)
        except ImportError:
            print(f"{name:>9}: not built")
            continue
        elapsed = bench(kernel, frames, lag_lo, lag_hi, wacf, cfg)
        results[name] = elapsed
        print(f"{name:>9}: {elapsed * 1e3:8.1f} ms total  {elapsed / n * 1e6:7.1f} us/frame")

    if len(results) == 2:
        ratio = results["pure"] / results["compiled"]
        faster, slower = ("compiled", "pure") if ratio > 1 else ("pure", "compiled")
        print(f"{faster} kernel is {max(ratio, 1 / ratio):.2f}x faster than {slower}")


if __name__ == "__main__":
    main()
