"""Rule-based morphological analysis: POS tagging and stemming.

One suffix-rule table drives both stages. Tagging (analyze) picks the rule
whose suffix is the longest proper suffix of the word; stemming (stem) later
applies that same rule's strip-and-replace to recover the citation form.
Whole-word exceptions take precedence over rules and carry their own tag,
features, and root, which is how irregular forms (വന്നു -> വരുക) and
function words are handled.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .errors import DuplicateRuleId, EmptySuffix, MalformedDocument
from .script import Token


class PosTag(str, Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    PRONOUN = "PRONOUN"
    ADJECTIVE = "ADJECTIVE"
    DETERMINER = "DETERMINER"
    COPULA = "COPULA"
    PARTICLE = "PARTICLE"
    NUMBER = "NUMBER"
    UNKNOWN = "UNKNOWN"


# TaggedToken.matched value for exception hits; ids in the rule file may not collide with it.
EXCEPTION_MATCH = "exception"


@dataclass(frozen=True)
class SuffixRule:
    id: str
    suffix: str
    replacement: str
    tag: PosTag
    features: tuple[str, ...] = ()


@dataclass(frozen=True)
class ExceptionEntry:
    tag: PosTag
    features: tuple[str, ...]
    root: str


@dataclass(frozen=True)
class RuleTable:
    rules: tuple[SuffixRule, ...]
    exceptions: dict[str, ExceptionEntry] = field(default_factory=dict)
    default_tag: PosTag = PosTag.UNKNOWN
    # suffix text -> winning rule for that suffix (smallest id); grouped by
    # suffix length so analyze probes one slice per candidate length.
    _by_suffix: dict[str, SuffixRule] = field(default_factory=dict, repr=False, compare=False)
    _by_id: dict[str, SuffixRule] = field(default_factory=dict, repr=False, compare=False)
    _lengths: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        by_suffix: dict[str, SuffixRule] = {}
        for rule in self.rules:
            best = by_suffix.get(rule.suffix)
            if best is None or rule.id < best.id:
                by_suffix[rule.suffix] = rule
        object.__setattr__(self, "_by_suffix", by_suffix)
        object.__setattr__(self, "_by_id", {r.id: r for r in self.rules})
        lengths = tuple(sorted({len(s) for s in by_suffix}, reverse=True))
        object.__setattr__(self, "_lengths", lengths)

    def rule_by_id(self, rule_id: str) -> SuffixRule:
        return self._by_id[rule_id]

    def match(self, word: str) -> SuffixRule | None:
        """Longest matching proper suffix; same-length ties go to the smallest rule id."""
        for length in self._lengths:
            if length >= len(word):
                continue
            rule = self._by_suffix.get(word[-length:])
            if rule is not None:
                return rule
        return None


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    tag: PosTag
    features: tuple[str, ...] = ()
    matched: str | None = None  # rule id, EXCEPTION_MATCH, or None


@dataclass(frozen=True)
class Root:
    text: str


def analyze(token: Token, rules: RuleTable) -> TaggedToken:
    """Tag one token: exception lookup first, then longest-suffix rule, else default."""
    exc = rules.exceptions.get(token.text)
    if exc is not None:
        return TaggedToken(token, exc.tag, exc.features, EXCEPTION_MATCH)
    rule = rules.match(token.text)
    if rule is not None:
        return TaggedToken(token, rule.tag, rule.features, rule.id)
    return TaggedToken(token, rules.default_tag, (), None)


def stem(tt: TaggedToken, rules: RuleTable) -> Root:
    """Reduce a tagged token to its root using the rule recorded by analyze."""
    if tt.matched == EXCEPTION_MATCH:
        return Root(rules.exceptions[tt.token.text].root)
    if tt.matched is not None:
        rule = rules.rule_by_id(tt.matched)
        return Root(tt.token.text[: -len(rule.suffix)] + rule.replacement)
    return Root(tt.token.text)


def _require(doc: dict, key: str, kind: type, where: str):
    value = doc.get(key)
    if not isinstance(value, kind):
        raise MalformedDocument(where, f"missing or mistyped field {key!r}")
    return value


def _parse_tag(value, where: str) -> PosTag:
    try:
        return PosTag(value)
    except ValueError:
        raise MalformedDocument(where, f"unknown tag {value!r}") from None


def _parse_features(value, where: str) -> tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(f, str) for f in value):
        raise MalformedDocument(where, "features must be a list of strings")
    return tuple(value)


def load_rules(document: str) -> RuleTable:
    """Parse and validate a rule-table document (see docs/formats.md)."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as e:
        raise MalformedDocument("rule table", f"not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise MalformedDocument("rule table", "top level must be an object")

    rules: list[SuffixRule] = []
    seen: set[str] = set()
    for i, entry in enumerate(_require(doc, "rules", list, "rule table")):
        where = f"rules[{i}]"
        if not isinstance(entry, dict):
            raise MalformedDocument(where, "rule must be an object")
        rule_id = _require(entry, "id", str, where)
        if rule_id in seen or rule_id == EXCEPTION_MATCH:
            raise DuplicateRuleId(rule_id)
        seen.add(rule_id)
        suffix = _require(entry, "suffix", str, where)
        if suffix == "":
            raise EmptySuffix(rule_id)
        rules.append(
            SuffixRule(
                id=rule_id,
                suffix=suffix,
                replacement=_require(entry, "replacement", str, where),
                tag=_parse_tag(entry.get("tag"), where),
                features=_parse_features(entry.get("features", []), where),
            )
        )

    exceptions: dict[str, ExceptionEntry] = {}
    raw_exceptions = doc.get("exceptions", {})
    if not isinstance(raw_exceptions, dict):
        raise MalformedDocument("exceptions", "must be an object keyed by word")
    for word, entry in raw_exceptions.items():
        where = f"exceptions[{word!r}]"
        if not isinstance(entry, dict):
            raise MalformedDocument(where, "exception must be an object")
        root = _require(entry, "root", str, where)
        if root == "":
            raise MalformedDocument(where, "exception root must be non-empty")
        exceptions[word] = ExceptionEntry(
            tag=_parse_tag(entry.get("tag"), where),
            features=_parse_features(entry.get("features", []), where),
            root=root,
        )

    default_tag = _parse_tag(doc.get("default_tag", "UNKNOWN"), "rule table")
    return RuleTable(rules=tuple(rules), exceptions=exceptions, default_tag=default_tag)
