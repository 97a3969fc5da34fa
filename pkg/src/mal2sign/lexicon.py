"""Root-to-sign lookup and the fingerspelling fallback.

A lexicon maps citation-form roots to keyframed sign clips over the fixed
skeleton, and single Malayalam code points to fingerspelling clips (gloss ids
FS_<hex>). Loading validates every entry and reports all problems together
rather than stopping at the first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import LexiconError, MalformedDocument, Violation
from .jsonutil import dumps_canonical
from .pose import FACIAL_KEYS, HANDSHAPES, Keyframe, Pose, Skeleton, SKELETON, is_unit
from .script import MALAYALAM_BLOCK, VIRAMA, Token

LEXICON_FORMAT = "mal2sign-lexicon/1"
UNKNOWN_FINGERSPELL_GLOSS = "FS_UNKNOWN"


@dataclass(frozen=True)
class SignEntry:
    gloss: str
    roots: tuple[str, ...]
    keyframes: tuple[Keyframe, ...]
    duration: float
    skeleton_id: str


@dataclass(frozen=True)
class Lexicon:
    skeleton_id: str
    entries: dict[str, SignEntry]
    root_index: dict[str, str] = field(default_factory=dict)
    fingerspell_entries: dict[str, str] = field(default_factory=dict)


def validate_entry(entry: SignEntry, skeleton: Skeleton = SKELETON) -> list[Violation]:
    """Every violation in one pass; an empty list means the entry is valid."""
    violations: list[Violation] = []
    gloss = entry.gloss

    def bad(code: str, message: str, keyframe: int | None = None):
        violations.append(Violation(code, gloss, message, keyframe))

    if entry.skeleton_id != skeleton.id:
        bad("skeleton-mismatch", f"entry skeleton {entry.skeleton_id!r} != {skeleton.id!r}")
    if len(entry.keyframes) < 2:
        bad("too-few-keyframes", f"{len(entry.keyframes)} keyframe(s); at least 2 required")
    joints = set(skeleton.joints)
    prev_time = None
    for i, kf in enumerate(entry.keyframes):
        if i == 0 and kf.time != 0.0:
            bad("first-time-nonzero", f"first keyframe at {kf.time}, expected 0.0", i)
        if prev_time is not None and kf.time <= prev_time:
            bad("non-increasing-time", f"time {kf.time} after {prev_time}", i)
        prev_time = kf.time
        pose = kf.pose
        for j in pose.rotations:
            if j not in joints:
                bad("unknown-joint", f"joint {j!r} not in skeleton", i)
        for j in joints:
            if j not in pose.rotations:
                bad("missing-joint", f"no rotation for joint {j!r}", i)
                continue
            if not is_unit(pose.rotations[j]):
                bad("norm", f"joint {j!r} quaternion is not unit length", i)
        for hand in (pose.handshape_l, pose.handshape_r):
            if hand not in HANDSHAPES:
                bad("unknown-handshape", f"handshape {hand!r}", i)
        for key, value in pose.facial.items():
            if key not in FACIAL_KEYS:
                bad("unknown-facial-key", f"facial key {key!r}", i)
            elif not 0.0 <= value <= 1.0:
                bad("facial-range", f"{key}={value} outside [0, 1]", i)
    if entry.keyframes and entry.duration != entry.keyframes[-1].time:
        bad("duration-mismatch", f"duration {entry.duration} != last keyframe time")
    return violations


def pose_to_doc(pose: Pose) -> dict:
    return {
        "rotations": {j: list(q) for j, q in pose.rotations.items()},
        "handshape_l": pose.handshape_l,
        "handshape_r": pose.handshape_r,
        "facial": {k: pose.facial.get(k, 0.0) for k in FACIAL_KEYS},
    }


def pose_from_doc(doc, where: str) -> Pose:
    """Structural parse of a pose document; semantic checks live in validate_entry."""
    if not isinstance(doc, dict):
        raise MalformedDocument(where, "pose must be an object")
    raw = doc.get("rotations")
    if not isinstance(raw, dict):
        raise MalformedDocument(where, "missing or mistyped field 'rotations'")
    rotations: dict[str, tuple[float, float, float, float]] = {}
    for joint, q in raw.items():
        if (
            not isinstance(q, list)
            or len(q) != 4
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in q)
        ):
            raise MalformedDocument(where, f"rotation for {joint!r} must be [w, x, y, z]")
        rotations[joint] = (float(q[0]), float(q[1]), float(q[2]), float(q[3]))
    facial_doc = doc.get("facial", {})
    if not isinstance(facial_doc, dict):
        raise MalformedDocument(where, "facial must be an object")
    facial: dict[str, float] = {}
    for key in FACIAL_KEYS:
        value = facial_doc.get(key, 0.0)
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise MalformedDocument(where, f"facial weight {key!r} must be a number")
        facial[key] = float(value)
    for key in facial_doc:
        if key not in FACIAL_KEYS:
            facial[key] = facial_doc[key]  # kept so validate_entry can report it
    hand_l = doc.get("handshape_l", "neutral")
    hand_r = doc.get("handshape_r", "neutral")
    if not isinstance(hand_l, str) or not isinstance(hand_r, str):
        raise MalformedDocument(where, "handshapes must be strings")
    return Pose(rotations=rotations, handshape_l=hand_l, handshape_r=hand_r, facial=facial)


def _keyframe_from_doc(doc, where: str) -> Keyframe:
    if not isinstance(doc, dict):
        raise MalformedDocument(where, "keyframe must be an object")
    time = doc.get("time")
    if not isinstance(time, (int, float)) or isinstance(time, bool):
        raise MalformedDocument(where, "missing or mistyped field 'time'")
    return Keyframe(time=float(time), pose=pose_from_doc(doc, where))


def load_lexicon(document: str, skeleton: Skeleton = SKELETON) -> Lexicon:
    """Parse, validate, and index a lexicon document (see docs/formats.md).

    Raises MalformedDocument only when the document as a whole is unusable;
    per-entry problems are collected and raised together as LexiconError.
    """
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as e:
        raise MalformedDocument("lexicon", f"not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise MalformedDocument("lexicon", "top level must be an object")
    if doc.get("format") != LEXICON_FORMAT:
        raise MalformedDocument("lexicon", f"format must be {LEXICON_FORMAT!r}")
    skeleton_id = doc.get("skeleton")
    if not isinstance(skeleton_id, str):
        raise MalformedDocument("lexicon", "missing or mistyped field 'skeleton'")
    raw_entries = doc.get("entries")
    if not isinstance(raw_entries, list):
        raise MalformedDocument("lexicon", "missing or mistyped field 'entries'")

    violations: list[Violation] = []
    if skeleton_id != skeleton.id:
        violations.append(
            Violation("skeleton-mismatch", "lexicon", f"{skeleton_id!r} != {skeleton.id!r}")
        )

    entries: dict[str, SignEntry] = {}
    root_index: dict[str, str] = {}
    for i, raw in enumerate(raw_entries):
        where = f"entries[{i}]"
        try:
            if not isinstance(raw, dict):
                raise MalformedDocument(where, "entry must be an object")
            gloss = raw.get("gloss")
            if not isinstance(gloss, str) or not gloss:
                raise MalformedDocument(where, "missing or mistyped field 'gloss'")
            roots = raw.get("roots", [])
            if not isinstance(roots, list) or not all(isinstance(r, str) for r in roots):
                raise MalformedDocument(where, "roots must be a list of strings")
            raw_kfs = raw.get("keyframes")
            if not isinstance(raw_kfs, list):
                raise MalformedDocument(where, "missing or mistyped field 'keyframes'")
            keyframes = tuple(
                _keyframe_from_doc(kf, f"{where}.keyframes[{k}]") for k, kf in enumerate(raw_kfs)
            )
        except MalformedDocument as e:
            violations.append(Violation("malformed", e.location, e.detail))
            continue
        entry = SignEntry(
            gloss=gloss,
            roots=tuple(roots),
            keyframes=keyframes,
            duration=keyframes[-1].time if keyframes else 0.0,
            skeleton_id=skeleton_id,
        )
        violations.extend(validate_entry(entry, skeleton))
        if gloss in entries:
            violations.append(Violation("duplicate-gloss", gloss, "gloss defined twice"))
            continue
        entries[gloss] = entry
        for root in entry.roots:
            if root in root_index:
                violations.append(
                    Violation(
                        "duplicate-root",
                        gloss,
                        f"root {root!r} already claimed by {root_index[root]}",
                    )
                )
            else:
                root_index[root] = gloss

    fingerspell: dict[str, str] = {}
    raw_fs = doc.get("fingerspelling", {})
    if not isinstance(raw_fs, dict):
        violations.append(Violation("malformed", "fingerspelling", "must be an object"))
        raw_fs = {}
    for char, gloss in raw_fs.items():
        if len(char) != 1 or ord(char) not in MALAYALAM_BLOCK:
            violations.append(
                Violation("bad-fingerspell-key", "fingerspelling", f"{char!r} is not one Malayalam code point")
            )
        elif not isinstance(gloss, str) or gloss not in entries:
            violations.append(
                Violation("missing-fingerspell-entry", "fingerspelling", f"{char!r} -> {gloss!r} has no entry")
            )
        else:
            fingerspell[char] = gloss

    if violations:
        raise LexiconError(violations)
    return Lexicon(
        skeleton_id=skeleton_id,
        entries=entries,
        root_index=root_index,
        fingerspell_entries=fingerspell,
    )


def serialize_lexicon(lex: Lexicon) -> str:
    """Canonical document for a lexicon; load_lexicon inverts it exactly."""
    return dumps_canonical(
        {
            "format": LEXICON_FORMAT,
            "skeleton": lex.skeleton_id,
            "entries": [
                {
                    "gloss": e.gloss,
                    "roots": list(e.roots),
                    "keyframes": [{"time": kf.time, **pose_to_doc(kf.pose)} for kf in e.keyframes],
                }
                for e in lex.entries.values()
            ],
            "fingerspelling": dict(lex.fingerspell_entries),
        }
    )


def lookup(root, lex: Lexicon) -> SignEntry | None:
    """Exact root match; None tells the caller to fingerspell."""
    text = getattr(root, "text", root)
    gloss = lex.root_index.get(text)
    return lex.entries[gloss] if gloss is not None else None


def fingerspell(token: Token | str, lex: Lexicon) -> list[str]:
    """One gloss per Malayalam code point, skipping viramas.

    Code points outside the Malayalam block contribute nothing; Malayalam
    code points without an alphabet entry map to FS_UNKNOWN.
    """
    text = token.text if isinstance(token, Token) else token
    glosses: list[str] = []
    for ch in text:
        if ord(ch) not in MALAYALAM_BLOCK or ch == VIRAMA:
            continue
        glosses.append(lex.fingerspell_entries.get(ch, UNKNOWN_FINGERSPELL_GLOSS))
    return glosses
