"""Exception hierarchy shared across the pipeline."""


class ProsotypeError(Exception):
    """Base class for every error raised by this package."""


class MalformedContainer(ProsotypeError):
    """The byte stream is not a well-formed RIFF/WAVE container."""


class UnsupportedEncoding(ProsotypeError):
    """The container is valid but uses an encoding outside the supported set."""


class SpanOutOfRange(ProsotypeError):
    """A time span reaches outside the audio it is applied to."""


class EmptySegment(ProsotypeError):
    """An analysis operation received a zero-length segment."""


class EmptyInput(ProsotypeError):
    """A normalization operation received an empty series."""


class LengthMismatch(ProsotypeError):
    """Two series that must be index-aligned have different lengths."""


class OutOfRange(ProsotypeError):
    """A normalized input value lies outside [0, 1]."""


class SchemaError(ProsotypeError):
    """Input document does not match the expected structure.

    `path` locates the offending node, e.g. ``utterances[0].words[2]``.
    """

    def __init__(self, message, path=None):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class ValidationError(ProsotypeError):
    """Input document is structurally sound but violates an invariant.

    `path` locates the offending node, e.g. ``utterances[0].words[2].syllables[1]``.
    """

    def __init__(self, message, path=None):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
