"""Exception types shared across the toolkit.

The CLI catches ``FramemapError`` and converts it to a nonzero exit; library
callers can catch narrower types where they care about the distinction.
"""


class FramemapError(Exception):
    """Base class for all toolkit errors."""


class FormatError(FramemapError):
    """A text input (FIV1, FTC1, PFC1, EMB1, SEB1, ...) is malformed.

    Carries a 1-based line number when one is known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class IntegrityError(FramemapError):
    """Input parsed but violates a cross-record invariant (e.g. dangling relation)."""


class UnknownFrameError(FramemapError):
    """A frame name was looked up that the inventory does not contain."""


class UnknownTokenError(FramemapError):
    """A token was looked up that the embedding vocabulary does not contain."""


class EmptyVocabularyError(FramemapError):
    """No tokens survived vocabulary construction."""


class ConfigError(FramemapError):
    """A configuration value is out of its legal range."""


class UndefinedSimilarityError(FramemapError):
    """Cosine (or a cosine-derived metric) was requested for a zero vector."""


class NoCandidateError(FramemapError):
    """Generation produced an empty candidate list."""


class NoMappingError(FramemapError):
    """No observed mapping exists for the requested target frame."""


class ExhaustedPoolError(FramemapError):
    """Every inventory frame is already an observed source for the target."""


class DegenerateInputError(FramemapError):
    """Statistical input is degenerate (zero variance, too few points, ...)."""
