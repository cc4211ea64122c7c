"""Regenerate the committed test fixtures.

Run from the repository root:

    PYTHONPATH=src:tests python3 tests/make_fixtures.py

Writes the fixture corpus (wav + alignment pairs) and the golden outputs
produced from it. Goldens are committed; regenerating them is a deliberate
act that should only follow a verified behavior change.
"""

from __future__ import annotations

import json
import pathlib

import numpy as np

import synth
from prosotype import PipelineConfig, decode_wav, emit_static_markup, modulate, parse_transcript, serialize_doc

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
RATE = 16000

# One stanza of three lines. Per word: (word_text, [(syllable_text, dur_sec,
# f0_hz_or_None_for_noise, amplitude, has_vowel_span)]).
STANZA = [
    [
        ("moonlight", [("moon", 0.30, 142.0, 0.62, True), ("light", 0.22, 168.0, 0.48, True)]),
        ("hums", [("hums", 0.38, 121.0, 0.80, True)]),
        ("over", [("o", 0.18, 196.0, 0.40, True), ("ver", 0.20, 178.0, 0.33, True)]),
        ("the", [("the", 0.14, 150.0, 0.22, False)]),
        ("harbor", [("har", 0.26, 132.0, 0.55, True), ("bor", 0.32, 112.0, 0.36, True)]),
    ],
    [
        ("gulls", [("gulls", 0.34, 208.0, 0.70, True)]),
        ("answer", [("an", 0.24, 232.0, 0.58, True), ("swer", 0.28, 180.0, 0.42, True)]),
        ("twice", [("twice", 0.42, 158.0, 0.66, True)]),
    ],
    [
        ("then", [("then", 0.20, 126.0, 0.30, True)]),
        ("the", [("the", 0.13, 138.0, 0.24, True)]),
        ("tide", [("tide", 0.36, 104.0, 0.74, True)]),
        ("speaks", [("speaks", 0.30, None, 0.45, True)]),
        ("slowly", [("slow", 0.40, 119.0, 0.52, True), ("ly", 0.24, 161.0, 0.28, True)]),
    ],
]

WORD_GAP = 0.08
UTTERANCE_GAP = 0.40
LEAD_IN = 0.10


def _ms(t: float) -> float:
    return round(t, 3)


def build_stanza():
    rng = np.random.default_rng(20260808)
    cursor = LEAD_IN
    utterances = []
    pieces = []
    for line in STANZA:
        words = []
        for word_text, syllables in line:
            syl_objs = []
            for text, dur, f0, amp, has_vowel in syllables:
                start, end = _ms(cursor), _ms(cursor + dur)
                n = int(round((end - start) * RATE))
                if f0 is None:
                    tone = rng.standard_normal(n) * amp * 0.3
                else:
                    tone = synth.harmonic_tone(f0, end - start, RATE, rng=rng, amp=amp)
                pieces.append((start, synth.fade_edges(tone[:n], RATE)))
                syl = {"text": text, "start": start, "end": end}
                if has_vowel:
                    syl["vowelStart"] = _ms(start + 0.2 * dur)
                    syl["vowelEnd"] = _ms(start + 0.8 * dur)
                syl_objs.append(syl)
                cursor = end
            words.append({"text": word_text, "syllables": syl_objs})
            cursor += WORD_GAP
        utterances.append({"words": words})
        cursor += UTTERANCE_GAP
    total = int(round((cursor + 0.1) * RATE))
    signal = np.zeros(total)
    for start, piece in pieces:
        i = int(round(start * RATE))
        signal[i : i + len(piece)] += piece
    return signal, {"utterances": utterances}


def build_tone400():
    signal = np.zeros(int(0.6 * RATE))
    tone = synth.fade_edges(synth.sine(400.0, 0.5, RATE, amp=0.7), RATE)
    signal[int(0.05 * RATE) : int(0.05 * RATE) + len(tone)] = tone
    align = {
        "utterances": [
            {
                "words": [
                    {
                        "text": "aa",
                        "syllables": [
                            {
                                "text": "aa",
                                "start": 0.05,
                                "end": 0.55,
                                "vowelStart": 0.15,
                                "vowelEnd": 0.45,
                            }
                        ],
                    }
                ]
            }
        ]
    }
    return signal, align


def main():
    FIXTURES.mkdir(exist_ok=True)
    (FIXTURES / "golden").mkdir(exist_ok=True)

    for name, (signal, align) in {
        "poem": build_stanza(),
        "tone400": build_tone400(),
    }.items():
        (FIXTURES / f"{name}.wav").write_bytes(synth.wav_bytes(signal, RATE))
        (FIXTURES / f"{name}.align.json").write_text(
            json.dumps(align, indent=2) + "\n", encoding="utf-8"
        )

    buffer = decode_wav((FIXTURES / "poem.wav").read_bytes())
    transcript = parse_transcript((FIXTURES / "poem.align.json").read_text("utf-8"))
    doc = modulate(buffer, transcript, PipelineConfig())
    (FIXTURES / "golden" / "poem.smt.json").write_bytes(serialize_doc(doc))
    (FIXTURES / "golden" / "poem.html").write_text(
        emit_static_markup(doc), encoding="utf-8", newline=""
    )
    print(f"fixtures written to {FIXTURES}")


if __name__ == "__main__":
    main()
