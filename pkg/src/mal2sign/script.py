"""Malayalam input hygiene: normalization, grapheme clustering, tokenization.

Everything downstream (suffix matching, lexicon keys, fingerspelling) assumes
text in canonical composed form (NFC), so normalization happens once, up
front, and the later stages may compare code point sequences byte-for-byte.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field

MALAYALAM_BLOCK = range(0x0D00, 0x0D80)
VIRAMA = "്"

# Consonants that a virama can pull into a conjunct cluster (KA..TTTA).
_CONSONANTS = frozenset(chr(cp) for cp in range(0x0D15, 0x0D3B))

_SENTENCE_PUNCT = frozenset(".,?!")


@dataclass(frozen=True)
class NormalizedText:
    """NFC text with collapsed whitespace plus a record of what was removed.

    `dropped` holds (offset, character) pairs for characters outside the
    accepted repertoire; offsets index the NFC form of the raw input, before
    any removal.
    """

    content: str
    dropped: tuple[tuple[int, str], ...] = field(default=())


@dataclass(frozen=True)
class GraphemeCluster:
    """One written unit of a token; offsets are relative to the token text."""

    text: str
    start: int
    end: int


@dataclass(frozen=True)
class Token:
    """A whitespace-free word; offsets index NormalizedText.content."""

    text: str
    start: int
    end: int


def _accepted(ch: str) -> bool:
    if ord(ch) in MALAYALAM_BLOCK:
        return True
    if "a" <= ch <= "z" or "A" <= ch <= "Z" or "0" <= ch <= "9":
        return True
    return ch in _SENTENCE_PUNCT


def normalize_text(raw: str) -> NormalizedText:
    """Normalize arbitrary text for the pipeline. Total: never raises.

    Applies NFC, maps every whitespace run to a single space, strips the
    ends, and removes characters outside {Malayalam block, ASCII letters and
    digits, space, . , ? !}, recording each removal. The result is NFC-stable
    (removals can expose new compositions, so NFC is applied again at the end).
    """
    nfc = unicodedata.normalize("NFC", raw)
    kept: list[str] = []
    dropped: list[tuple[int, str]] = []
    for i, ch in enumerate(nfc):
        if ch.isspace():
            kept.append(" ")
        elif _accepted(ch):
            kept.append(ch)
        else:
            dropped.append((i, ch))
    collapsed: list[str] = []
    for ch in kept:
        if ch == " " and collapsed and collapsed[-1] == " ":
            continue
        collapsed.append(ch)
    content = unicodedata.normalize("NFC", "".join(collapsed).strip())
    return NormalizedText(content=content, dropped=tuple(dropped))


def _is_mark(ch: str) -> bool:
    return unicodedata.category(ch) in ("Mn", "Mc")


def segment_clusters(text: str) -> list[GraphemeCluster]:
    """Split text into grapheme clusters under the conjunct-aware rule set.

    A cluster is a base character plus its trailing combining marks. A virama
    joins its cluster and additionally pulls the immediately following
    consonant (with that consonant's own marks) into the same cluster, so a
    conjunct like "ക്ക" stays one unit. A defective sequence (text starting
    with a combining mark) yields a cluster starting at that mark.
    """
    clusters: list[GraphemeCluster] = []
    start: int | None = None
    pending_conjunct = False  # previous char was a virama
    for i, ch in enumerate(text):
        if start is None:
            start, pending_conjunct = i, ch == VIRAMA
            continue
        if _is_mark(ch):
            pending_conjunct = ch == VIRAMA
            continue
        if pending_conjunct and ch in _CONSONANTS:
            pending_conjunct = False
            continue
        clusters.append(GraphemeCluster(text[start:i], start, i))
        start, pending_conjunct = i, False
    if start is not None:
        clusters.append(GraphemeCluster(text[start:], start, len(text)))
    return clusters


def tokenize(nt: NormalizedText) -> list[Token]:
    """Split normalized text on spaces and trim edge punctuation.

    Sentence punctuation is stripped from both ends of each candidate word
    and discarded; a candidate that is nothing but punctuation produces no
    token. Offsets of the surviving tokens index nt.content, so the stripped
    characters remain recoverable from the gaps between token spans.
    """
    tokens: list[Token] = []
    content = nt.content
    i = 0
    n = len(content)
    while i < n:
        if content[i] == " ":
            i += 1
            continue
        j = i
        while j < n and content[j] != " ":
            j += 1
        lo, hi = i, j
        while lo < hi and content[lo] in _SENTENCE_PUNCT:
            lo += 1
        while hi > lo and content[hi - 1] in _SENTENCE_PUNCT:
            hi -= 1
        if lo < hi:
            tokens.append(Token(content[lo:hi], lo, hi))
        i = j
    return tokens
