"""Pure-Python (numpy) fallback for the lag-search kernel.

Autocorrelations are computed with FFTs over the whole frame batch; peak
picking and parabolic refinement are vectorized. Semantics match the
compiled kernel to floating-point noise.
"""

from __future__ import annotations

import numpy as np


def best_peaks(frames, lag_lo, lag_hi, window_acf, octave_cost, lag_ref):
    """Best autocorrelation peak per frame.

    Parameters
    ----------
    frames: (n_frames, frame_len) float64
        Windowed, mean-removed analysis frames.
    lag_lo, lag_hi: int
        Inclusive integer lag search bounds, 2 <= lag_lo <= lag_hi <= frame_len - 2.
    window_acf: float64, length >= lag_hi + 2
        Normalized autocorrelation of the taper window (value 1 at lag 0).
    octave_cost: float
        Per-octave preference for shorter lags during candidate selection.
    lag_ref: float
        Lag (in samples) at which the octave preference is zero.

    Returns
    -------
    (lags, values): float64 arrays of length n_frames
        Interpolated peak lag in samples and raw peak height; NaN where the
        frame has no candidate peak.
    """
    frames = np.asarray(frames, dtype=np.float64)
    n_frames, frame_len = frames.shape
    nfft = 1 << int(frame_len + lag_hi + 2).bit_length()
    spec = np.fft.rfft(frames, nfft, axis=1)
    acf = np.fft.irfft(spec.real**2 + spec.imag**2, nfft, axis=1)[:, : lag_hi + 2]

    power = acf[:, 0]
    alive = power > 0.0
    norm = acf / np.where(alive, power, 1.0)[:, None] / np.asarray(window_acf)[: lag_hi + 2]

    mid = norm[:, lag_lo : lag_hi + 1]
    left = norm[:, lag_lo - 1 : lag_hi]
    right = norm[:, lag_lo + 1 : lag_hi + 2]
    is_peak = (mid > left) & (mid > right) & alive[:, None]

    # At a strict local maximum the curvature denominator is negative and
    # the refined offset lies inside (-0.5, 0.5).
    denom = left - 2.0 * mid + right
    safe = np.where(denom < 0.0, denom, -1.0)
    delta = np.where(is_peak, 0.5 * (left - right) / safe, 0.0)
    delta = np.clip(delta, -0.5, 0.5)
    taus = np.arange(lag_lo, lag_hi + 1, dtype=np.float64)[None, :] + delta
    values = mid - 0.25 * (left - right) * delta
    scores = np.where(is_peak, values - octave_cost * np.log2(taus / lag_ref), -np.inf)

    best = np.argmax(scores, axis=1)  # first index on ties: smallest lag
    rows = np.arange(n_frames)
    found = is_peak.any(axis=1)
    out_lag = np.where(found, taus[rows, best], np.nan)
    out_val = np.where(found, values[rows, best], np.nan)
    return out_lag, out_val
