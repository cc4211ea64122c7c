"""Serialization of the modulated caption document and static markup.

The interchange format (.smt.json) is canonical JSON: UTF-8, a fixed key
order, and numbers printed with at most six decimal places, so equal
documents always serialize to identical bytes. Document dataclasses quantize
their numeric fields to that precision on construction, which makes
parse(serialize(doc)) == doc hold for every constructible document.
"""

from __future__ import annotations

import html
import json
import math
from dataclasses import dataclass
from typing import Optional

from .errors import SchemaError, ValidationError
from .normalize import NormalizedProsody
from .prosody import ProsodyVector
from .transcript import Syllable, TimedTranscript, Utterance, Word
from .typomap import MapConfig, TypoStyle

FORMAT_VERSION = "1.0"

_DECIMALS = 6


def _q(value: float) -> float:
    if not math.isfinite(value):
        raise ValueError(f"document numbers must be finite, got {value}")
    return round(float(value), _DECIMALS)


# --- canonical JSON ---------------------------------------------------------


def format_number(value: float) -> str:
    """Fixed-notation decimal with at most six places and no trailing zeros."""
    text = format(value, f".{_DECIMALS}f").rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _dump(node) -> str:
    if node is None:
        return "null"
    if node is True:
        return "true"
    if node is False:
        return "false"
    if isinstance(node, str):
        return json.dumps(node, ensure_ascii=False)
    if isinstance(node, int):
        return str(node)
    if isinstance(node, float):
        return format_number(node)
    if isinstance(node, (list, tuple)):
        return "[" + ",".join(_dump(item) for item in node) + "]"
    if isinstance(node, dict):
        return "{" + ",".join(f"{json.dumps(k)}:{_dump(v)}" for k, v in node.items()) + "}"
    raise TypeError(f"cannot serialize {type(node).__name__}")


def _canonical_bytes(tree) -> bytes:
    return (_dump(tree) + "\n").encode("utf-8")


# --- document model ---------------------------------------------------------


@dataclass(frozen=True)
class DocSyllable:
    """One styled syllable with its timing and feature provenance."""

    text: str
    start: float
    end: float
    style: TypoStyle
    raw: ProsodyVector
    norm: NormalizedProsody

    def __post_init__(self):
        object.__setattr__(self, "start", _q(self.start))
        object.__setattr__(self, "end", _q(self.end))
        object.__setattr__(
            self,
            "style",
            TypoStyle(
                font_weight=_q(self.style.font_weight),
                baseline_shift_em=_q(self.style.baseline_shift_em),
                letter_spacing_em=_q(self.style.letter_spacing_em),
            ),
        )
        object.__setattr__(
            self,
            "raw",
            ProsodyVector(
                magnitude_rms=_q(self.raw.magnitude_rms),
                pitch_hz=None if self.raw.pitch_hz is None else _q(self.raw.pitch_hz),
                duration_sec=_q(self.raw.duration_sec),
            ),
        )
        object.__setattr__(
            self,
            "norm",
            NormalizedProsody(
                loudness=_q(self.norm.loudness),
                pitch=_q(self.norm.pitch),
                tempo=_q(self.norm.tempo),
                pitch_was_voiced=bool(self.norm.pitch_was_voiced),
            ),
        )


@dataclass(frozen=True)
class DocWord:
    text: str
    syllables: tuple[DocSyllable, ...]


@dataclass(frozen=True)
class DocUtterance:
    words: tuple[DocWord, ...]


@dataclass(frozen=True)
class ModulatedCaptionDoc:
    version: str
    font_family: str
    config: MapConfig
    utterances: tuple[DocUtterance, ...]

    def __post_init__(self):
        cfg = self.config
        object.__setattr__(
            self,
            "config",
            MapConfig(
                weight_min=_q(cfg.weight_min),
                weight_max=_q(cfg.weight_max),
                baseline_max_em=_q(cfg.baseline_max_em),
                spacing_max_em=_q(cfg.spacing_max_em),
                spacing_pivot=_q(cfg.spacing_pivot),
            ),
        )

    def plain_text(self) -> str:
        return "\n".join(
            " ".join(word.text for word in utterance.words)
            for utterance in self.utterances
        )


# --- interchange serialization ----------------------------------------------


def _syllable_tree(s: DocSyllable) -> dict:
    return {
        "text": s.text,
        "start": s.start,
        "end": s.end,
        "style": {
            "fontWeight": s.style.font_weight,
            "baselineShiftEm": s.style.baseline_shift_em,
            "letterSpacingEm": s.style.letter_spacing_em,
        },
        "raw": {
            "magnitudeRms": s.raw.magnitude_rms,
            "pitchHz": s.raw.pitch_hz,
            "durationSec": s.raw.duration_sec,
        },
        "norm": {
            "loudness": s.norm.loudness,
            "pitch": s.norm.pitch,
            "tempo": s.norm.tempo,
            "pitchWasVoiced": s.norm.pitch_was_voiced,
        },
    }


def serialize_doc(doc: ModulatedCaptionDoc) -> bytes:
    """Canonical .smt.json bytes; equal documents yield identical bytes."""
    tree = {
        "version": doc.version,
        "fontFamily": doc.font_family,
        "config": {
            "weightMin": doc.config.weight_min,
            "weightMax": doc.config.weight_max,
            "baselineMaxEm": doc.config.baseline_max_em,
            "spacingMaxEm": doc.config.spacing_max_em,
            "spacingPivot": doc.config.spacing_pivot,
        },
        "utterances": [
            {
                "words": [
                    {
                        "text": w.text,
                        "syllables": [_syllable_tree(s) for s in w.syllables],
                    }
                    for w in u.words
                ]
            }
            for u in doc.utterances
        ],
    }
    return _canonical_bytes(tree)


def _need(obj, key, kind, path):
    if not isinstance(obj, dict):
        raise SchemaError("expected an object", path)
    if key not in obj:
        raise SchemaError(f"missing field '{key}'", path)
    value = obj[key]
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaError(f"field '{key}' must be a number", path)
        value = float(value)
        if not math.isfinite(value):
            raise ValidationError(f"field '{key}' must be finite", path)
        return value
    if kind is bool:
        if not isinstance(value, bool):
            raise SchemaError(f"field '{key}' must be a boolean", path)
        return value
    if not isinstance(value, kind):
        raise SchemaError(f"field '{key}' must be {kind.__name__}", path)
    return value


def _parse_style(obj, cfg: MapConfig, path) -> TypoStyle:
    weight = _need(obj, "fontWeight", float, path)
    baseline = _need(obj, "baselineShiftEm", float, path)
    spacing = _need(obj, "letterSpacingEm", float, path)
    if not cfg.weight_min <= weight <= cfg.weight_max:
        raise ValidationError(
            f"fontWeight {weight} outside [{cfg.weight_min}, {cfg.weight_max}]", path
        )
    if abs(baseline) > cfg.baseline_max_em:
        raise ValidationError(
            f"baselineShiftEm {baseline} exceeds maximum {cfg.baseline_max_em}", path
        )
    if spacing < 0 or spacing > cfg.spacing_max_em:
        raise ValidationError(
            f"letterSpacingEm {spacing} outside [0, {cfg.spacing_max_em}]", path
        )
    return TypoStyle(weight, baseline, spacing)


def _parse_raw(obj, path) -> ProsodyVector:
    magnitude = _need(obj, "magnitudeRms", float, path)
    duration = _need(obj, "durationSec", float, path)
    if "pitchHz" not in obj:
        raise SchemaError("missing field 'pitchHz'", path)
    pitch = obj["pitchHz"]
    if pitch is not None:
        pitch = _need(obj, "pitchHz", float, path)
        if pitch <= 0:
            raise ValidationError(f"pitchHz must be positive, got {pitch}", path)
    if magnitude < 0:
        raise ValidationError(f"magnitudeRms must be >= 0, got {magnitude}", path)
    if duration <= 0:
        raise ValidationError(f"durationSec must be positive, got {duration}", path)
    return ProsodyVector(magnitude, pitch, duration)


def _parse_norm(obj, path) -> NormalizedProsody:
    values = {}
    for key in ("loudness", "pitch", "tempo"):
        v = _need(obj, key, float, path)
        if not 0.0 <= v <= 1.0:
            raise ValidationError(f"{key} {v} outside [0, 1]", path)
        values[key] = v
    return NormalizedProsody(
        loudness=values["loudness"],
        pitch=values["pitch"],
        tempo=values["tempo"],
        pitch_was_voiced=_need(obj, "pitchWasVoiced", bool, path),
    )


def _parse_doc_syllable(obj, cfg, path) -> DocSyllable:
    text = _need(obj, "text", str, path)
    if not text:
        raise ValidationError("syllable text must not be empty", path)
    start = _need(obj, "start", float, path)
    end = _need(obj, "end", float, path)
    if start < 0 or not start < end:
        raise ValidationError(f"invalid timing [{start}, {end}]", path)
    return DocSyllable(
        text=text,
        start=start,
        end=end,
        style=_parse_style(_need(obj, "style", dict, path), cfg, f"{path}.style"),
        raw=_parse_raw(_need(obj, "raw", dict, path), f"{path}.raw"),
        norm=_parse_norm(_need(obj, "norm", dict, path), f"{path}.norm"),
    )


def _parse_doc_word(obj, cfg, path) -> DocWord:
    text = _need(obj, "text", str, path)
    raw = _need(obj, "syllables", list, path)
    if not raw:
        raise ValidationError("word must contain at least one syllable", path)
    syllables = [
        _parse_doc_syllable(s, cfg, f"{path}.syllables[{i}]") for i, s in enumerate(raw)
    ]
    for i in range(1, len(syllables)):
        if syllables[i].start < syllables[i - 1].end:
            raise ValidationError(
                "syllable timing must not run backwards within a word",
                f"{path}.syllables[{i}]",
            )
    if "".join(s.text for s in syllables) != text:
        raise ValidationError("syllable texts do not join to the word text", path)
    return DocWord(text, tuple(syllables))


def parse_doc(data: bytes) -> ModulatedCaptionDoc:
    """Parse and validate .smt.json bytes."""
    try:
        root = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    version = _need(root, "version", str, "$")
    font_family = _need(root, "fontFamily", str, "$")
    cfg_obj = _need(root, "config", dict, "$")
    try:
        cfg = MapConfig(
            weight_min=_need(cfg_obj, "weightMin", float, "config"),
            weight_max=_need(cfg_obj, "weightMax", float, "config"),
            baseline_max_em=_need(cfg_obj, "baselineMaxEm", float, "config"),
            spacing_max_em=_need(cfg_obj, "spacingMaxEm", float, "config"),
            spacing_pivot=_need(cfg_obj, "spacingPivot", float, "config"),
        )
    except ValueError as exc:
        raise ValidationError(str(exc), "config") from exc
    utterances = []
    for i, u in enumerate(_need(root, "utterances", list, "$")):
        path = f"utterances[{i}]"
        words = _need(u, "words", list, path)
        if not words:
            raise ValidationError("utterance must contain at least one word", path)
        utterances.append(
            DocUtterance(
                tuple(
                    _parse_doc_word(w, cfg, f"{path}.words[{j}]")
                    for j, w in enumerate(words)
                )
            )
        )
    return ModulatedCaptionDoc(version, font_family, cfg, tuple(utterances))


# --- static markup ----------------------------------------------------------


def _style_attr(style: TypoStyle) -> str:
    # Screen y grows downward, so the CSS offset is the negated shift.
    offset = -style.baseline_shift_em
    return (
        f"font-variation-settings:'wght' {format_number(style.font_weight)};"
        f"top:{format_number(offset)}em;"
        f"letter-spacing:{format_number(style.letter_spacing_em)}em"
    )


def _word_markup(word: DocWord) -> str:
    spans = []
    for i, syllable in enumerate(word.syllables):
        text = html.escape(syllable.text)
        if i == len(word.syllables) - 1:
            # The word-final glyph never carries trailing letter-spacing,
            # so widened syllables cannot blur the gap between words.
            head = html.escape(syllable.text[:-1])
            last = html.escape(syllable.text[-1])
            text = f"{head}<span class=\"wf\" style=\"letter-spacing:0em\">{last}</span>"
        spans.append(f"<span class=\"syl\" style=\"{_style_attr(syllable.style)}\">{text}</span>")
    return f"<span class=\"w\">{''.join(spans)}</span>"


def emit_static_markup(doc: ModulatedCaptionDoc) -> str:
    """Standalone HTML with every syllable's style applied inline."""
    family = doc.font_family.replace('"', "'")
    lines = [
        "<!DOCTYPE html>",
        "<html>",
        "<head>",
        '<meta charset="utf-8">',
        "<title>modulated captions</title>",
        "<style>",
        "body { margin: 3em; background: #ffffff; color: #111111; }",
        f'.u {{ font-family: "{family}", sans-serif; font-size: 2em; line-height: 2.4; margin: 0.5em 0; }}',
        ".syl { position: relative; }",
        "</style>",
        "</head>",
        "<body>",
    ]
    for utterance in doc.utterances:
        words = " ".join(_word_markup(w) for w in utterance.words)
        lines.append(f'<p class="u">{words}</p>')
    lines += ["</body>", "</html>", ""]
    return "\n".join(lines)


# --- transcript serialization -------------------------------------------------


def serialize_transcript(transcript: TimedTranscript) -> bytes:
    """Canonical .align.json bytes; inverse of transcript.parse_transcript."""

    def syllable_tree(s: Syllable) -> dict:
        tree = {"text": s.text, "start": s.span.start_sec, "end": s.span.end_sec}
        if s.vowel_span is not None:
            tree["vowelStart"] = s.vowel_span.start_sec
            tree["vowelEnd"] = s.vowel_span.end_sec
        return tree

    tree = {
        "utterances": [
            {
                "words": [
                    {
                        "text": w.text,
                        "syllables": [syllable_tree(s) for s in w.syllables],
                    }
                    for w in u.words
                ]
            }
            for u in transcript.utterances
        ]
    }
    return _canonical_bytes(tree)
