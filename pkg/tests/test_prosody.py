import math

import numpy as np
import pytest

import synth
from prosotype import AudioBuffer, PitchConfig, TimeSpan, estimate_pitch, rms
from prosotype.errors import EmptySegment, SpanOutOfRange
from prosotype.prosody import extract_utterance
from prosotype.transcript import parse_transcript


def rms_oracle(samples):
    """The defining formula, evaluated by a scalar loop."""
    total = 0.0
    for s in samples:
        total += float(s) * float(s)
    return math.sqrt(total / len(samples))


def buf(samples, rate=16000):
    return AudioBuffer(np.asarray(samples, dtype=np.float64), rate)


# --- rms ---------------------------------------------------------------------


def test_rms_constant_signal():
    assert rms(buf(np.full(480, 0.5))) == 0.5


def test_rms_full_scale_sine():
    # 10 whole periods of a unit sine
    signal = synth.sine(100.0, 0.1, 16000)
    assert rms(buf(signal)) == pytest.approx(1 / math.sqrt(2), abs=1e-3)


def test_rms_matches_scalar_oracle():
    rng = np.random.default_rng(7)
    samples = rng.uniform(-1, 1, 10)
    got = rms(buf(samples))
    want = rms_oracle(samples)
    assert got == pytest.approx(want, rel=1e-12)


def test_rms_empty_segment():
    with pytest.raises(EmptySegment):
        rms(buf(np.array([])))


def test_rms_scale_equivariance():
    rng = np.random.default_rng(11)
    for _ in range(20):
        samples = rng.uniform(-1, 1, int(rng.integers(2, 500)))
        c = float(rng.uniform(-3, 3))
        if c == 0:
            continue
        base = rms(buf(samples))
        scaled = rms(buf(c * samples))
        assert scaled == pytest.approx(abs(c) * base, rel=1e-9)


# --- pitch -------------------------------------------------------------------


def test_pitch_pure_sine_220():
    signal = synth.sine(220.0, 0.2, 44100)
    assert estimate_pitch(buf(signal, 44100)) == pytest.approx(220.0, abs=2.0)


def test_pitch_amplitude_invariant():
    signal = synth.sine(173.0, 0.2, 44100)
    lo = estimate_pitch(buf(0.05 * signal, 44100))
    hi = estimate_pitch(buf(0.5 * signal, 44100))
    assert abs(lo - hi) < 0.1


def test_white_noise_is_unvoiced():
    rng = np.random.default_rng(3)
    signal = rng.standard_normal(int(0.2 * 44100))
    assert estimate_pitch(buf(signal, 44100)) is None


def test_white_noise_unvoiced_rate():
    # voicing threshold must reject essentially every noise realization
    unvoiced = 0
    for seed in range(100):
        rng = np.random.default_rng(seed)
        signal = rng.standard_normal(int(0.2 * 16000))
        if estimate_pitch(buf(signal)) is None:
            unvoiced += 1
    assert unvoiced >= 99


def square_wave_oracle(signal, rate, f_min=50.0, f_max=350.0):
    """Exhaustive biased-autocorrelation argmax over the full lag range."""
    lag_lo = int(math.floor(rate / f_max))
    lag_hi = int(math.ceil(rate / f_min))
    x = signal - signal.mean()
    best_lag, best = None, -np.inf
    for lag in range(lag_lo, lag_hi + 1):
        value = float(np.dot(x[:-lag], x[lag:]))
        if value > best:
            best, best_lag = value, lag
    return rate / best_lag


def test_square_wave_no_octave_error():
    rate = 44100
    for phase in (0.0, 0.4, 0.9, 1.7, 2.5):
        t = np.arange(int(0.2 * rate)) / rate
        signal = np.sign(np.sin(2 * np.pi * 100.0 * t + phase))
        got = estimate_pitch(buf(signal, rate))
        want = square_wave_oracle(signal, rate)
        assert want == pytest.approx(100.0, abs=2.0)
        assert got == pytest.approx(100.0, abs=2.0)
        assert got == pytest.approx(want, abs=2.0)


@pytest.mark.parametrize("f0", [75.0, 140.0, 220.0, 310.0])
def test_pitch_harmonic_tones(f0):
    rng = np.random.default_rng(int(f0))
    signal = synth.harmonic_tone(f0, 0.3, 16000, rng=rng)
    assert estimate_pitch(buf(signal)) == pytest.approx(f0, rel=0.02)


def test_pitch_short_segment_zero_padded():
    # 40 ms is shorter than the 60 ms default frame
    signal = synth.sine(150.0, 0.04, 16000)
    assert estimate_pitch(buf(signal)) == pytest.approx(150.0, abs=3.0)


def test_pitch_constant_signal_unvoiced():
    assert estimate_pitch(buf(np.full(4000, 0.5))) is None


def test_pitch_empty_segment():
    with pytest.raises(EmptySegment):
        estimate_pitch(buf(np.array([])))


def test_pitch_result_within_bounds():
    rng = np.random.default_rng(5)
    for _ in range(10):
        f0 = float(rng.uniform(60, 330))
        signal = synth.harmonic_tone(f0, 0.25, 16000, rng=rng)
        got = estimate_pitch(buf(signal))
        if got is not None:
            assert 50.0 <= got <= 350.0


def test_pitch_widened_ceiling_finds_400():
    signal = synth.sine(400.0, 0.3, 16000)
    default = estimate_pitch(buf(signal))
    widened = estimate_pitch(buf(signal), PitchConfig(f_max_hz=500.0))
    assert widened == pytest.approx(400.0, rel=0.02)
    assert default is None or abs(default - 400.0) / 400.0 > 0.02


def test_pitch_config_validation():
    with pytest.raises(ValueError):
        PitchConfig(f_min_hz=400.0, f_max_hz=300.0)
    with pytest.raises(ValueError):
        PitchConfig(frame_sec=0.01)
    with pytest.raises(ValueError):
        PitchConfig(voicing_threshold=1.5)
    with pytest.raises(ValueError):
        PitchConfig(hop_sec=0.0)
    with pytest.raises(ValueError):
        estimate_pitch(buf(np.zeros(100), 8000), PitchConfig(f_max_hz=4000.0))


def test_default_frame_tracks_f_min():
    assert PitchConfig().frame_sec == pytest.approx(0.06)
    assert PitchConfig(f_min_hz=40.0).frame_sec == pytest.approx(0.075)


# --- extract_utterance ---------------------------------------------------------


def one_syllable_utterance(start, end, vowel=None, text="la"):
    node = {"text": text, "start": start, "end": end}
    if vowel:
        node["vowelStart"], node["vowelEnd"] = vowel
    import json

    t = parse_transcript(json.dumps({"utterances": [{"words": [{"text": text, "syllables": [node]}]}]}))
    return t.utterances[0]


def test_extract_constant_signal():
    audio = buf(np.full(8000, 0.5))
    utterance = one_syllable_utterance(0.0, 0.5, vowel=(0.0, 0.5))
    [vec] = extract_utterance(audio, utterance)
    assert vec.magnitude_rms == pytest.approx(0.5, rel=1e-12)
    assert vec.pitch_hz is None
    assert vec.duration_sec == 0.5


def test_vowel_only_magnitude():
    rate = 16000
    # energy only in the first half; vowel span covers the silent second half
    signal = np.zeros(rate)
    signal[: rate // 2] = synth.sine(180.0, 0.5, rate, amp=0.8)
    audio = buf(signal, rate)
    utterance = one_syllable_utterance(0.0, 1.0, vowel=(0.5, 1.0))
    [vec] = extract_utterance(audio, utterance)
    full_rms = rms(audio)
    assert vec.magnitude_rms == pytest.approx(0.0, abs=1e-9)
    assert full_rms > 0.1
    # the oracle: direct RMS over each region
    assert vec.magnitude_rms == pytest.approx(rms_oracle(signal[rate // 2 :]) if np.any(signal[rate // 2 :]) else 0.0, abs=1e-12)


def test_missing_vowel_span_falls_back_to_full_span():
    rate = 16000
    signal = synth.sine(140.0, 0.5, rate, amp=0.6)
    audio = buf(signal, rate)
    with_vowel = one_syllable_utterance(0.0, 0.5, vowel=(0.0, 0.5))
    without_vowel = one_syllable_utterance(0.0, 0.5)
    [a] = extract_utterance(audio, with_vowel)
    [b] = extract_utterance(audio, without_vowel)
    assert a.magnitude_rms == b.magnitude_rms


def test_durations_are_span_lengths():
    import json

    rate = 16000
    audio = buf(np.zeros(rate * 2), rate)
    words = [
        {"text": "a", "syllables": [{"text": "a", "start": 0.0, "end": 0.2}]},
        {"text": "b", "syllables": [{"text": "b", "start": 0.2, "end": 0.5}]},
        {"text": "c", "syllables": [{"text": "c", "start": 0.5, "end": 1.0}]},
    ]
    t = parse_transcript(json.dumps({"utterances": [{"words": words}]}))
    vectors = extract_utterance(audio, t.utterances[0])
    durations = [v.duration_sec for v in vectors]
    assert durations == pytest.approx([0.2, 0.3, 0.5], abs=1e-12)


def test_extract_error_names_syllable():
    audio = buf(np.zeros(1600))  # 0.1 s
    utterance = one_syllable_utterance(0.0, 0.5)
    with pytest.raises(SpanOutOfRange) as err:
        extract_utterance(audio, utterance)
    assert "syllable 0" in str(err.value)
