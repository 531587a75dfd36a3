"""Frame-to-frame mappings and metaphoric verb substitution.

A mapping from a target frame to a source frame is the offset between their
embeddings, oriented so that adding it to a target-domain verb lands in the
source domain: m = E_source - E_target.  Generation shifts the focus verb's
vector by m, takes the nearest word token, re-inflects it to the morphology
of the replaced verb, and splices it back into the sentence.

Rare/unseen source selection implements the two mapping-exploration regimes:
a source at the median observed frequency for the target, or one never
observed as a source for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .corpus import MappingFrequencyTable, TaggedSentence, frame_token
from .embeddings import EmbeddingSpace, nearest
from .errors import ExhaustedPoolError, NoCandidateError, NoMappingError
from .inflect import inflect
from .inventory import FrameInventory, normalize_frame_name

# Optional hook for context-aware candidate reordering; receives the ranked
# (lemma, score) list and the sentence, returns a reordered list.  No
# implementation ships with the toolkit: default generation is context-free.
Reranker = Callable[[list[tuple[str, float]], TaggedSentence], list[tuple[str, float]]]


@dataclass
class ConceptualMapping:
    target_frame: str
    source_frame: str
    offset: np.ndarray


@dataclass
class GenerationRequest:
    sentence: TaggedSentence
    target_frame: str
    source_frame: str
    candidates_k: int = 10
    exclude_input: bool = False


@dataclass
class GenerationResult:
    candidates: list[tuple[str, float]]
    chosen_surface: str
    output_tokens: list[str] = field(default_factory=list)


def compute_mapping(space: EmbeddingSpace, target_frame: str, source_frame: str) -> ConceptualMapping:
    """Offset vector from the target frame's embedding to the source frame's."""
    target = normalize_frame_name(target_frame)
    source = normalize_frame_name(source_frame)
    offset = space.vector(frame_token(source)) - space.vector(frame_token(target))
    return ConceptualMapping(target_frame=target, source_frame=source, offset=offset)


def map_verb(
    space: EmbeddingSpace,
    mapping: ConceptualMapping,
    verb_lemma: str,
    k: int = 10,
    exclusions: frozenset[str] | set[str] = frozenset(),
) -> list[tuple[str, float]]:
    """Shift the verb by the mapping offset and rank nearby word tokens."""
    query = space.vector(verb_lemma) + mapping.offset
    return nearest(space, query, k, exclusions=exclusions, include_frames=False)


def generate(request: GenerationRequest, space: EmbeddingSpace,
             reranker: Reranker | None = None) -> GenerationResult:
    """Full substitution pipeline: mapping, candidate ranking, inflection, splice."""
    sentence = request.sentence
    mapping = compute_mapping(space, request.target_frame, request.source_frame)
    exclusions = {sentence.focus_lemma} if request.exclude_input else set()
    candidates = map_verb(
        space, mapping, sentence.focus_lemma, k=request.candidates_k, exclusions=exclusions
    )
    if reranker is not None:
        candidates = reranker(candidates, sentence)
    if not candidates:
        raise NoCandidateError(
            f"no candidate for {sentence.focus_lemma!r} under "
            f"{mapping.target_frame}->{mapping.source_frame}"
        )
    surface = inflect(candidates[0][0], sentence.focus_morph)
    tokens = list(sentence.tokens)
    tokens[sentence.focus_index] = surface
    return GenerationResult(candidates=candidates, chosen_surface=surface, output_tokens=tokens)


def select_rare_mapping(
    table: MappingFrequencyTable,
    target_frame: str,
    rng: np.random.Generator,
) -> str:
    """A source frame at the median observed frequency for the target.

    Even count of observed sources uses the lower median.  Uniform choice
    among the sources tied at the median count.
    """
    target = normalize_frame_name(target_frame)
    sources = table.sources_for(target)
    if not sources:
        raise NoMappingError(f"no observed mapping for target {target!r}")
    counts = sorted(sources.values())
    median = counts[(len(counts) - 1) // 2]
    pool = sorted(s for s, c in sources.items() if c == median)
    return pool[int(rng.integers(len(pool)))]


def select_unseen_mapping(
    table: MappingFrequencyTable,
    inv: FrameInventory,
    target_frame: str,
    rng: np.random.Generator,
) -> str:
    """A source frame never observed as a source for the target (nor the target itself)."""
    target = normalize_frame_name(target_frame)
    observed = set(table.sources_for(target))
    pool = sorted(set(inv.frames) - observed - {target})
    if not pool:
        raise ExhaustedPoolError(f"every frame already maps from target {target!r}")
    return pool[int(rng.integers(len(pool)))]
