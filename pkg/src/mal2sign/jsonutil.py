"""Canonical JSON emission: fixed key order, lossless floats, UTF-8 text.

Dictionaries are emitted in insertion order, so every serializer in this
package builds its documents with an explicit, fixed field order. Floats use
Python's shortest round-trip repr, which keeps parse(serialize(x)) exact and
makes equal values produce identical bytes.
"""

from __future__ import annotations

import json


def dumps_canonical(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, allow_nan=False, separators=(",", ":")) + "\n"


def dumps_pretty(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, allow_nan=False, indent=2) + "\n"
