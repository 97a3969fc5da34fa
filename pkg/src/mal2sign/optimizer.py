"""Drop words that sign language omits, keeping the rest in original order."""

from __future__ import annotations

from dataclasses import dataclass

from .morphology import PosTag, TaggedToken


@dataclass(frozen=True)
class DropPolicy:
    drop_tags: frozenset[PosTag] = frozenset()
    drop_words: frozenset[str] = frozenset()


def optimize(tagged: list[TaggedToken], policy: DropPolicy) -> list[TaggedToken]:
    """Return the order-preserving subsequence of tokens the policy keeps.

    Never reorders or rewrites: Malayalam and the target sign order are both
    SOV, so dropping is the only transformation this stage performs.
    """
    return [
        tt
        for tt in tagged
        if tt.tag not in policy.drop_tags and tt.token.text not in policy.drop_words
    ]
