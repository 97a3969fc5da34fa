"""Malayalam text to sign-language animation.

A deterministic four-stage pipeline: rule-based POS tagging, gloss
optimization (dropping words sign language omits), suffix stemming to
citation forms, and keyframe animation over a fixed upper-body skeleton.
Tagging and stemming share one suffix-rule table; words without a sign are
fingerspelled code point by code point.
"""

from .animation import (
    Clip,
    SignMarker,
    Timeline,
    TimelineConfig,
    blend_pose,
    build_timeline,
    parse_timeline,
    sample,
    serialize_timeline,
    slerp,
)
from .errors import (
    DomainError,
    DuplicateRuleId,
    EmptySuffix,
    InvariantViolation,
    LexiconError,
    Mal2SignError,
    MalformedDocument,
    ResourceError,
    SkeletonMismatch,
    Violation,
)
from .lexicon import (
    Lexicon,
    SignEntry,
    fingerspell,
    load_lexicon,
    lookup,
    serialize_lexicon,
    validate_entry,
)
from .morphology import (
    ExceptionEntry,
    PosTag,
    Root,
    RuleTable,
    SuffixRule,
    TaggedToken,
    analyze,
    load_rules,
    stem,
)
from .optimizer import DropPolicy, optimize
from .pipeline import (
    GlossedSign,
    PipelineResources,
    TranslationResult,
    TranslationWarning,
    load_resources,
    serialize_translation,
    translate,
)
from .pose import (
    FACIAL_KEYS,
    HANDSHAPES,
    JOINTS,
    Keyframe,
    Pose,
    SKELETON,
    Skeleton,
    axis_angle,
    rest_pose,
)
from .script import (
    GraphemeCluster,
    NormalizedText,
    Token,
    normalize_text,
    segment_clusters,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "Clip",
    "DomainError",
    "DropPolicy",
    "DuplicateRuleId",
    "EmptySuffix",
    "ExceptionEntry",
    "FACIAL_KEYS",
    "GlossedSign",
    "GraphemeCluster",
    "HANDSHAPES",
    "InvariantViolation",
    "JOINTS",
    "Keyframe",
    "Lexicon",
    "LexiconError",
    "Mal2SignError",
    "MalformedDocument",
    "NormalizedText",
    "PipelineResources",
    "Pose",
    "PosTag",
    "ResourceError",
    "Root",
    "RuleTable",
    "SKELETON",
    "SignEntry",
    "SignMarker",
    "Skeleton",
    "SkeletonMismatch",
    "SuffixRule",
    "TaggedToken",
    "Timeline",
    "TimelineConfig",
    "Token",
    "TranslationResult",
    "TranslationWarning",
    "Violation",
    "analyze",
    "axis_angle",
    "blend_pose",
    "build_timeline",
    "fingerspell",
    "load_lexicon",
    "load_resources",
    "load_rules",
    "lookup",
    "normalize_text",
    "optimize",
    "parse_timeline",
    "rest_pose",
    "sample",
    "segment_clusters",
    "serialize_lexicon",
    "serialize_timeline",
    "serialize_translation",
    "slerp",
    "stem",
    "tokenize",
    "translate",
    "validate_entry",
]
