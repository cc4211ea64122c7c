"""prosotype: per-syllable typography derived from speech prosody.

The pipeline decodes audio, slices it by a syllable-timed alignment,
extracts loudness/pitch/duration per syllable, normalizes them against the
utterance and a local window, maps them onto font weight, baseline shift,
and letter-spacing, and serializes the result as a caption interchange
document (.smt.json) or static HTML.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .audio import AudioBuffer, TimeSpan, decode_wav
from .config import PipelineConfig, load_config, parse_config
from .emit import (
    FORMAT_VERSION,
    DocSyllable,
    DocUtterance,
    DocWord,
    ModulatedCaptionDoc,
    emit_static_markup,
    parse_doc,
    serialize_doc,
    serialize_transcript,
)
from .errors import (
    EmptyInput,
    EmptySegment,
    LengthMismatch,
    MalformedContainer,
    OutOfRange,
    ProsotypeError,
    SchemaError,
    SpanOutOfRange,
    UnsupportedEncoding,
    ValidationError,
)
from .normalize import (
    NormalizedProsody,
    WindowSpec,
    combine,
    global_normalize,
    local_normalize,
    normalize_utterance,
)
from .pipeline import extract_features, modulate
from .prosody import PitchConfig, ProsodyVector, estimate_pitch, extract_utterance, rms
from .transcript import (
    Syllable,
    TimedTranscript,
    Utterance,
    Word,
    parse_transcript,
    plain_text,
    syllable_counts,
)
from .typomap import (
    MapConfig,
    TypoStyle,
    map_loudness_to_weight,
    map_pitch_to_baseline,
    map_tempo_to_spacing,
    style_utterance,
)

__version__ = "0.1.0"

__all__ = [
    "AudioBuffer",
    "TimeSpan",
    "decode_wav",
    "TimedTranscript",
    "Utterance",
    "Word",
    "Syllable",
    "parse_transcript",
    "plain_text",
    "syllable_counts",
    "PitchConfig",
    "ProsodyVector",
    "rms",
    "estimate_pitch",
    "extract_utterance",
    "WindowSpec",
    "NormalizedProsody",
    "global_normalize",
    "local_normalize",
    "combine",
    "normalize_utterance",
    "MapConfig",
    "TypoStyle",
    "map_loudness_to_weight",
    "map_pitch_to_baseline",
    "map_tempo_to_spacing",
    "style_utterance",
    "FORMAT_VERSION",
    "ModulatedCaptionDoc",
    "DocUtterance",
    "DocWord",
    "DocSyllable",
    "serialize_doc",
    "parse_doc",
    "emit_static_markup",
    "serialize_transcript",
    "PipelineConfig",
    "parse_config",
    "load_config",
    "extract_features",
    "modulate",
    "KERNEL_BACKEND",
    "ProsotypeError",
    "MalformedContainer",
    "UnsupportedEncoding",
    "SpanOutOfRange",
    "EmptySegment",
    "EmptyInput",
    "LengthMismatch",
    "OutOfRange",
    "SchemaError",
    "ValidationError",
    "__version__",
]
