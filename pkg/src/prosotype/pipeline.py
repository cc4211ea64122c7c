"""End-to-end composition: audio + alignment -> features -> styled document."""

from __future__ import annotations

from .audio import AudioBuffer
from .config import PipelineConfig
from .emit import (
    FORMAT_VERSION,
    DocSyllable,
    DocUtterance,
    DocWord,
    ModulatedCaptionDoc,
)
from .normalize import normalize_utterance
from .prosody import PitchConfig, ProsodyVector, extract_utterance
from .transcript import TimedTranscript
from .typomap import style_utterance


def extract_features(
    buffer: AudioBuffer, transcript: TimedTranscript, cfg: PitchConfig = PitchConfig()
) -> list[list[ProsodyVector]]:
    """Raw per-syllable features, one list per utterance."""
    return [extract_utterance(buffer, u, cfg) for u in transcript.utterances]


def feature_rows(buffer: AudioBuffer, transcript: TimedTranscript, cfg: PitchConfig) -> list[dict]:
    """Flat per-syllable table for the extract command."""
    rows = []
    for u_index, utterance in enumerate(transcript.utterances):
        features = extract_utterance(buffer, utterance, cfg)
        flat = 0
        for w_index, word in enumerate(utterance.words):
            for s_index, syllable in enumerate(word.syllables):
                vec = features[flat]
                flat += 1
                rows.append(
                    {
                        "utterance": u_index,
                        "word": w_index,
                        "syllable": s_index,
                        "text": syllable.text,
                        "start": round(syllable.span.start_sec, 6),
                        "end": round(syllable.span.end_sec, 6),
                        "magnitudeRms": round(vec.magnitude_rms, 6),
                        "pitchHz": None if vec.pitch_hz is None else round(vec.pitch_hz, 6),
                        "durationSec": round(vec.duration_sec, 6),
                    }
                )
    return rows


def modulate(
    buffer: AudioBuffer, transcript: TimedTranscript, cfg: PipelineConfig = PipelineConfig()
) -> ModulatedCaptionDoc:
    """Run extraction, normalization, and mapping; assemble the caption doc."""
    doc_utterances = []
    for utterance in transcript.utterances:
        features = extract_utterance(buffer, utterance, cfg.pitch)
        norm = normalize_utterance(features, cfg.window)
        styles = style_utterance(norm, cfg.map)
        doc_words = []
        flat = 0
        for word in utterance.words:
            doc_syllables = []
            for syllable in word.syllables:
                doc_syllables.append(
                    DocSyllable(
                        text=syllable.text,
                        start=syllable.span.start_sec,
                        end=syllable.span.end_sec,
                        style=styles[flat],
                        raw=features[flat],
                        norm=norm[flat],
                    )
                )
                flat += 1
            doc_words.append(DocWord(word.text, tuple(doc_syllables)))
        doc_utterances.append(DocUtterance(tuple(doc_words)))
    return ModulatedCaptionDoc(
        version=FORMAT_VERSION,
        font_family=cfg.font_family,
        config=cfg.map,
        utterances=tuple(doc_utterances),
    )
