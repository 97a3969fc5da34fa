"""End-to-end orchestration: text in, gloss sequence and timeline out.

The stage order is fixed: normalize and tokenize, tag, drop, stem, then
resolve each root to a sign clip (falling back to fingerspelling) and lay the
clips out on a timeline. Tagging runs before dropping and dropping before
stemming, so drop decisions see the tags of unstemmed surface forms.

translate() is total over Unicode input and a pure function of its
arguments; anything that can fail (reading and validating resources) happens
in load_resources() beforehand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources as importlib_resources
from pathlib import Path

from .animation import Timeline, TimelineConfig, build_timeline, timeline_to_doc
from .errors import (
    LexiconError,
    Mal2SignError,
    MalformedDocument,
    ResourceError,
    SkeletonMismatch,
)
from .jsonutil import dumps_canonical
from .lexicon import Lexicon, SignEntry, fingerspell, load_lexicon, lookup
from .morphology import PosTag, Root, RuleTable, TaggedToken, analyze, load_rules, stem
from .optimizer import DropPolicy, optimize
from .pose import SKELETON, Skeleton
from .script import NormalizedText, Token, normalize_text, tokenize

TRANSLATION_FORMAT = "mal2sign-translation/1"
CONFIG_FORMAT = "mal2sign-config/1"

SOURCE_LEXICON = "LEXICON"
SOURCE_FINGERSPELL = "FINGERSPELL"


@dataclass(frozen=True)
class PipelineResources:
    rules: RuleTable
    drop_policy: DropPolicy
    lexicon: Lexicon
    skeleton: Skeleton
    timeline_config: TimelineConfig


@dataclass(frozen=True)
class GlossedSign:
    """One gloss in the output sequence, traceable to the token it came from."""

    gloss: str
    source: str  # SOURCE_LEXICON or SOURCE_FINGERSPELL
    token_index: int  # index into TranslationResult.tokens


@dataclass(frozen=True)
class TranslationWarning:
    code: str  # "dropped-characters", "oov", "missing-sign"
    message: str


@dataclass(frozen=True)
class TranslationResult:
    text: str
    normalized: NormalizedText
    tokens: tuple[Token, ...]
    tagged: tuple[TaggedToken, ...]  # parallel with tokens
    retained: tuple[int, ...]  # indices into tokens, post-optimizer
    roots: tuple[Root, ...]  # parallel with retained
    glosses: tuple[GlossedSign, ...]
    timeline: Timeline
    warnings: tuple[TranslationWarning, ...]

    @property
    def retained_tokens(self) -> tuple[Token, ...]:
        return tuple(self.tokens[i] for i in self.retained)


def translate(text: str, res: PipelineResources) -> TranslationResult:
    """Run the full pipeline on raw text. Total: never raises on str input."""
    warnings: list[TranslationWarning] = []
    nt = normalize_text(text)
    if nt.dropped:
        removed = ", ".join(f"U+{ord(c):04X} at {i}" for i, c in nt.dropped)
        warnings.append(
            TranslationWarning("dropped-characters", f"removed unsupported characters: {removed}")
        )
    tokens = tuple(tokenize(nt))

    tagged = tuple(analyze(token, res.rules) for token in tokens)
    kept = optimize(list(tagged), res.drop_policy)
    retained: list[int] = []
    k = 0
    for i, tt in enumerate(tagged):
        if k < len(kept) and kept[k] is tt:
            retained.append(i)
            k += 1
    roots = tuple(stem(tagged[i], res.rules) for i in retained)

    glosses: list[GlossedSign] = []
    signs: list[SignEntry] = []
    for index, root in zip(retained, roots):
        entry = lookup(root.text, res.lexicon)
        if entry is not None:
            glosses.append(GlossedSign(entry.gloss, SOURCE_LEXICON, index))
            signs.append(entry)
            continue
        warnings.append(
            TranslationWarning(
                "oov",
                f"no sign for root {root.text!r} (token {tokens[index].text!r}); fingerspelling",
            )
        )
        for gloss in fingerspell(root.text, res.lexicon):
            fs_entry = res.lexicon.entries.get(gloss)
            if fs_entry is None:
                warnings.append(
                    TranslationWarning("missing-sign", f"gloss {gloss} has no clip; skipped")
                )
                continue
            glosses.append(GlossedSign(gloss, SOURCE_FINGERSPELL, index))
            signs.append(fs_entry)

    timeline = build_timeline(signs, res.timeline_config)
    return TranslationResult(
        text=text,
        normalized=nt,
        tokens=tokens,
        tagged=tagged,
        retained=tuple(retained),
        roots=roots,
        glosses=tuple(glosses),
        timeline=timeline,
        warnings=tuple(warnings),
    )


def translation_to_doc(result: TranslationResult) -> dict:
    return {
        "format": TRANSLATION_FORMAT,
        "text": result.text,
        "normalized": result.normalized.content,
        "tokens": [{"text": t.text, "start": t.start, "end": t.end} for t in result.tokens],
        "tagged": [
            {
                "text": tt.token.text,
                "tag": tt.tag.value,
                "features": list(tt.features),
                "matched": tt.matched,
            }
            for tt in result.tagged
        ],
        "retained": list(result.retained),
        "roots": [root.text for root in result.roots],
        "glosses": [
            {"gloss": g.gloss, "source": g.source, "token": g.token_index}
            for g in result.glosses
        ],
        "warnings": [{"code": w.code, "message": w.message} for w in result.warnings],
        "timeline": timeline_to_doc(result.timeline),
    }


def serialize_translation(result: TranslationResult) -> str:
    """Canonical translation document; equal results give identical bytes."""
    return dumps_canonical(translation_to_doc(result))


_DATA = importlib_resources.files(__package__) / "data"


def _read(source, problems: list[str], what: str) -> str | None:
    """Read a bundled traversable or a filesystem path, logging failures."""
    try:
        return source.read_text(encoding="utf-8")
    except FileNotFoundError:
        problems.append(f"{what}: file not found: {source}")
    except OSError as e:
        problems.append(f"{what}: {e}")
    return None


def _parse_drop_policy(doc, problems: list[str]) -> DropPolicy:
    if not isinstance(doc, dict):
        problems.append("config: drop_policy must be an object")
        return DropPolicy()
    tags: set[PosTag] = set()
    raw_tags = doc.get("drop_tags", [])
    if not isinstance(raw_tags, list):
        problems.append("config: drop_policy.drop_tags must be a list")
        raw_tags = []
    for value in raw_tags:
        try:
            tags.add(PosTag(value))
        except ValueError:
            problems.append(f"config: unknown tag in drop_tags: {value!r}")
    raw_words = doc.get("drop_words", [])
    if not isinstance(raw_words, list) or not all(isinstance(w, str) for w in raw_words):
        problems.append("config: drop_policy.drop_words must be a list of strings")
        raw_words = []
    return DropPolicy(drop_tags=frozenset(tags), drop_words=frozenset(raw_words))


def _parse_timeline_config(doc, problems: list[str]) -> TimelineConfig:
    if not isinstance(doc, dict):
        problems.append("config: timeline must be an object")
        return TimelineConfig()
    try:
        return TimelineConfig(
            default_sign_duration=doc.get("default_sign_duration"),
            transition=doc.get("transition", 0.3),
            frame_rate=doc.get("frame_rate", 30.0),
        )
    except (Mal2SignError, TypeError) as e:
        problems.append(f"config: timeline: {e}")
        return TimelineConfig()


def load_resources(
    config_path: str | Path | None = None,
    rules_path: str | Path | None = None,
    lexicon_path: str | Path | None = None,
    skeleton: Skeleton = SKELETON,
) -> PipelineResources:
    """Load and validate the full resource set, reporting all problems at once.

    Without arguments the bundled demo resources are used. A config document
    names the rule table and lexicon by path relative to itself; rules_path
    and lexicon_path override those entries. Raises ResourceError with every
    collected problem, or SkeletonMismatch when the lexicon's skeleton id is
    the one and only problem.
    """
    problems: list[str] = []

    if config_path is None:
        config_source = _DATA / "config.json"
        resolve = lambda rel: _DATA / rel  # noqa: E731
    else:
        config_source = Path(config_path)
        base = config_source.parent
        resolve = lambda rel: base / rel  # noqa: E731

    config_text = _read(config_source, problems, "config")
    doc = {}
    if config_text is not None:
        try:
            doc = json.loads(config_text)
            if not isinstance(doc, dict):
                problems.append("config: top level must be an object")
                doc = {}
        except json.JSONDecodeError as e:
            problems.append(f"config: not valid JSON: {e}")

    drop_policy = _parse_drop_policy(doc.get("drop_policy", {}), problems)
    timeline_config = _parse_timeline_config(doc.get("timeline", {}), problems)

    rules = RuleTable(rules=())
    rules_source = Path(rules_path) if rules_path is not None else None
    if rules_source is None:
        rel = doc.get("rules")
        if isinstance(rel, str):
            rules_source = resolve(rel)
        elif config_text is not None:
            problems.append("config: missing or mistyped field 'rules'")
    if rules_source is not None:
        text = _read(rules_source, problems, "rules")
        if text is not None:
            try:
                rules = load_rules(text)
            except Mal2SignError as e:
                problems.append(f"rules: {e}")

    lexicon = Lexicon(skeleton_id=skeleton.id, entries={})
    mismatch: SkeletonMismatch | None = None
    lexicon_source = Path(lexicon_path) if lexicon_path is not None else None
    if lexicon_source is None:
        rel = doc.get("lexicon")
        if isinstance(rel, str):
            lexicon_source = resolve(rel)
        elif config_text is not None:
            problems.append("config: missing or mistyped field 'lexicon'")
    if lexicon_source is not None:
        text = _read(lexicon_source, problems, "lexicon")
        if text is not None:
            try:
                lexicon = load_lexicon(text, skeleton)
            except LexiconError as e:
                if all(v.code == "skeleton-mismatch" for v in e.violations):
                    found = json.loads(text).get("skeleton", "")
                    mismatch = SkeletonMismatch(skeleton.id, found)
                else:
                    problems.extend(f"lexicon: {v}" for v in e.violations)
            except MalformedDocument as e:
                problems.append(f"lexicon: {e}")

    if mismatch is not None:
        if not problems:
            raise mismatch
        problems.append(f"lexicon: {mismatch}")
    if problems:
        raise ResourceError(problems)
    return PipelineResources(
        rules=rules,
        drop_policy=drop_policy,
        lexicon=lexicon,
        skeleton=skeleton,
        timeline_config=timeline_config,
    )
