# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled lag-search kernel: per-frame normalized autocorrelation peaks.

Direct time-domain correlation restricted to the searched lag range; this is
the hot inner loop of pitch analysis. Semantics match the pure fallback.
"""

import numpy as np

from libc.math cimport NAN, log2


def best_peaks(double[:, ::1] frames, int lag_lo, int lag_hi,
               double[::1] window_acf, double octave_cost, double lag_ref):
    """Best autocorrelation peak per frame; see the pure fallback's docstring."""
    cdef Py_ssize_t n_frames = frames.shape[0]
    cdef Py_ssize_t frame_len = frames.shape[1]
    cdef Py_ssize_t i, j, tau
    cdef double power, acc, a, b, c, denom, delta, tau_ref, value, score
    cdef double best_score, best_lag, best_val

    out_lag_arr = np.empty(n_frames, dtype=np.float64)
    out_val_arr = np.empty(n_frames, dtype=np.float64)
    norm_arr = np.empty(lag_hi + 2, dtype=np.float64)
    cdef double[::1] out_lag = out_lag_arr
    cdef double[::1] out_val = out_val_arr
    cdef double[::1] norm = norm_arr

    for i in range(n_frames):
        power = 0.0
        for j in range(frame_len):
            power += frames[i, j] * frames[i, j]
        if power <= 0.0:
            out_lag[i] = NAN
            out_val[i] = NAN
            continue

        for tau in range(lag_lo - 1, lag_hi + 2):
            acc = 0.0
            for j in range(frame_len - tau):
                acc += frames[i, j] * frames[i, j + tau]
            norm[tau] = (acc / power) / window_acf[tau]

        best_score = -1e308
        best_lag = NAN
        best_val = NAN
        for tau in range(lag_lo, lag_hi + 1):
            a = norm[tau - 1]
            b = norm[tau]
            c = norm[tau + 1]
            if b > a and b > c:
                denom = a - 2.0 * b + c
                if denom < 0.0:
                    delta = 0.5 * (a - c) / denom
                    if delta > 0.5:
                        delta = 0.5
                    elif delta < -0.5:
                        delta = -0.5
                else:
                    delta = 0.0
                tau_ref = tau + delta
                value = b - 0.25 * (a - c) * delta
                score = value - octave_cost * log2(tau_ref / lag_ref)
                if score > best_score:
                    best_score = score
                    best_lag = tau_ref
                    best_val = value
        out_lag[i] = best_lag
        out_val[i] = best_val

    return out_lag_arr, out_val_arr
