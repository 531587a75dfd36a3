"""One-directional bridge: neural (or rule-based stand-in) models -> framemap files.

The adapter only ever *writes* the toolkit's formats (SEB1 sentence
embeddings, FTC1 frame-tagged corpora, FIV1 inventories); the main package
never calls back into it, which keeps the two test suites independent.
"""

__version__ = "0.1.0"

from .encoders import HashingEncoder, load_encoder
from .tagger import LexiconTagger
