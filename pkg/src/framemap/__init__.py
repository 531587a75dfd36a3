"""Metaphoric verb substitution driven by frame-to-frame conceptual mappings.

The toolkit trains a joint word/frame embedding space over frame-substituted
context windows, derives mapping vectors between frames, generates and ranks
metaphoric verb candidates, and evaluates outputs with intrinsic (lex/str)
and extrinsic (dis/rel, exact match) metrics plus the usual agreement and
significance statistics.
"""

__version__ = "0.1.0"

from .corpus import (
    LiteralMetaphoricPair,
    MappingFrequencyTable,
    TaggedSentence,
    TrainingWindow,
    build_mapping_table,
    emit_control_record,
    extract_window,
    frame_token,
    is_frame_token,
    parse_control_record,
    parse_ftc,
    parse_pfc,
    substitute_frame_label,
    symbol_overlap_filter,
)
from .embeddings import (
    EmbeddingSpace,
    TrainerConfig,
    Vocabulary,
    build_vocab,
    cosine,
    load_embeddings,
    nearest,
    save_embeddings,
    sgns_step,
    train,
)
from .evaluation import (
    AnnotationMatrix,
    EvalReport,
    EvalTriple,
    SentenceEmbedding,
    aggregate_report,
    dis_metric,
    exact_match,
    krippendorff_alpha,
    paired_t_test,
    rel_metric,
)
from .frame_metrics import MetricConfig, MetricReport, evaluate_space, lex_similarity, str_similarity
from .inflect import inflect
from .inventory import (
    Frame,
    FrameInventory,
    FrameRelation,
    lexical_units_of,
    load_inventory,
    neighbors,
    save_inventory,
)
from .mapper import (
    ConceptualMapping,
    GenerationRequest,
    GenerationResult,
    compute_mapping,
    generate,
    map_verb,
    select_rare_mapping,
    select_unseen_mapping,
)
