"""Parsing and validation of syllable-timed transcriptions (.align.json)."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

from .audio import TimeSpan
from .errors import SchemaError, ValidationError

# Adjacent spans count as contiguous when their boundaries agree to within
# this many seconds; files written at microsecond precision always do.
_CONTIGUITY_EPS = 1e-9


@dataclass(frozen=True)
class Syllable:
    text: str
    span: TimeSpan
    vowel_span: Optional[TimeSpan] = None


@dataclass(frozen=True)
class Word:
    text: str
    syllables: tuple[Syllable, ...]


@dataclass(frozen=True)
class Utterance:
    words: tuple[Word, ...]

    @property
    def span(self) -> TimeSpan:
        return TimeSpan(
            self.words[0].syllables[0].span.start_sec,
            self.words[-1].syllables[-1].span.end_sec,
        )

    def syllables(self):
        for word in self.words:
            yield from word.syllables


@dataclass(frozen=True)
class TimedTranscript:
    utterances: tuple[Utterance, ...]


def syllable_counts(transcript: TimedTranscript) -> list[int]:
    """Number of syllables per utterance, in order."""
    return [sum(len(w.syllables) for w in u.words) for u in transcript.utterances]


def plain_text(transcript: TimedTranscript) -> str:
    """Words joined by single spaces, utterances joined by newlines."""
    return "\n".join(
        " ".join(word.text for word in utterance.words)
        for utterance in transcript.utterances
    )


def _require(obj, key, kind, path):
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
    if not isinstance(value, kind):
        raise SchemaError(f"field '{key}' must be {kind.__name__}", path)
    return value


def _parse_span(obj, start_key, end_key, path) -> TimeSpan:
    start = _require(obj, start_key, float, path)
    end = _require(obj, end_key, float, path)
    if start < 0:
        raise ValidationError(f"'{start_key}' must be >= 0", path)
    if not start < end:
        raise ValidationError(
            f"inverted span: {start_key}={start} is not before {end_key}={end}", path
        )
    return TimeSpan(start, end)


def _parse_syllable(obj, path) -> Syllable:
    text = _require(obj, "text", str, path)
    if len(text) < 1:
        raise ValidationError("syllable text must not be empty", path)
    span = _parse_span(obj, "start", "end", path)
    has_vs = "vowelStart" in obj
    has_ve = "vowelEnd" in obj
    if has_vs != has_ve:
        raise SchemaError("vowelStart and vowelEnd must be given together", path)
    vowel = None
    if has_vs:
        vowel = _parse_span(obj, "vowelStart", "vowelEnd", path)
        if vowel.start_sec < span.start_sec - _CONTIGUITY_EPS or (
            vowel.end_sec > span.end_sec + _CONTIGUITY_EPS
        ):
            raise ValidationError("vowel span must lie within the syllable span", path)
    return Syllable(text, span, vowel)


def _parse_word(obj, path) -> Word:
    text = _require(obj, "text", str, path)
    if not text or any(ch.isspace() for ch in text):
        raise ValidationError("word text must be non-empty with no whitespace", path)
    raw = _require(obj, "syllables", list, path)
    if not raw:
        raise ValidationError("word must contain at least one syllable", path)
    syllables = [
        _parse_syllable(s, f"{path}.syllables[{i}]") for i, s in enumerate(raw)
    ]
    for i in range(1, len(syllables)):
        prev, cur = syllables[i - 1], syllables[i]
        if abs(cur.span.start_sec - prev.span.end_sec) > _CONTIGUITY_EPS:
            raise ValidationError(
                "syllables within a word must be contiguous "
                f"(previous ends at {prev.span.end_sec}, next starts at {cur.span.start_sec})",
                f"{path}.syllables[{i}]",
            )
    joined = "".join(s.text for s in syllables)
    if joined != text:
        raise ValidationError(
            f"syllable texts join to '{joined}', expected word text '{text}'", path
        )
    return Word(text, tuple(syllables))


def _parse_utterance(obj, path) -> Utterance:
    raw = _require(obj, "words", list, path)
    if not raw:
        raise ValidationError("utterance must contain at least one word", path)
    words = [_parse_word(w, f"{path}.words[{i}]") for i, w in enumerate(raw)]
    for i in range(1, len(words)):
        prev_end = words[i - 1].syllables[-1].span.end_sec
        cur_start = words[i].syllables[0].span.start_sec
        if cur_start < prev_end - _CONTIGUITY_EPS:
            raise ValidationError(
                f"word starts at {cur_start}, before previous word ends at {prev_end}",
                f"{path}.words[{i}]",
            )
    return Utterance(tuple(words))


def parse_transcript(text: str) -> TimedTranscript:
    """Parse and fully validate an .align.json document.

    Raises SchemaError for structural problems and ValidationError for
    invariant violations; both carry the path of the offending node.
    """
    try:
        root = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    raw = _require(root, "utterances", list, "$")
    utterances = [
        _parse_utterance(u, f"utterances[{i}]") for i, u in enumerate(raw)
    ]
    for i in range(1, len(utterances)):
        prev_end = utterances[i - 1].span.end_sec
        cur_start = utterances[i].span.start_sec
        if cur_start < prev_end - _CONTIGUITY_EPS:
            raise ValidationError(
                f"utterance starts at {cur_start}, before previous one ends at {prev_end}",
                f"utterances[{i}]",
            )
    return TimedTranscript(tuple(utterances))
