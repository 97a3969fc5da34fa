"""Keyframe timeline engine: quaternion blending, clip layout, sampling.

Sign clips are laid out back to back with a fixed transition gap between
them; sampling is continuous-time, blending between bracketing keyframes
inside a clip and between neighbouring clips across a gap. Rotations blend by
shortest-arc slerp, facial weights linearly, and handshapes switch discretely
at the halfway point (interpolating categorical ids is meaningless).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .errors import DomainError, InvariantViolation, MalformedDocument, SkeletonMismatch
from .jsonutil import dumps_canonical
from .lexicon import SignEntry, pose_from_doc, pose_to_doc
from .pose import (
    FACIAL_KEYS,
    HANDSHAPES,
    QUAT_NORM_TOL,
    Keyframe,
    Pose,
    Quat,
    SKELETON,
    Skeleton,
    is_unit,
    rest_pose,
)

TIMELINE_FORMAT = "mal2sign-timeline/1"

# Below this arc angle (radians) slerp's sin-ratio weights lose precision;
# fall back to normalized linear interpolation.
_SLERP_MIN_ANGLE = 1e-5


@dataclass(frozen=True)
class TimelineConfig:
    default_sign_duration: float | None = None  # None: keep each clip's native duration
    transition: float = 0.3
    frame_rate: float = 30.0  # metadata only; sampling is continuous-time

    def __post_init__(self):
        if self.transition < 0:
            raise DomainError(f"transition must be >= 0, got {self.transition}")
        if self.frame_rate <= 0:
            raise DomainError(f"frame_rate must be > 0, got {self.frame_rate}")
        if self.default_sign_duration is not None and self.default_sign_duration <= 0:
            raise DomainError(
                f"default_sign_duration must be > 0, got {self.default_sign_duration}"
            )


@dataclass(frozen=True)
class SignMarker:
    gloss: str
    start: float
    end: float


@dataclass(frozen=True)
class Clip:
    marker: SignMarker
    keyframes: tuple[Keyframe, ...]  # times already on the global axis


@dataclass(frozen=True)
class Timeline:
    skeleton_id: str
    config: TimelineConfig
    clips: tuple[Clip, ...]
    duration: float


def slerp(a: Quat, b: Quat, t: float) -> Quat:
    """Shortest-arc spherical interpolation between unit quaternions.

    Endpoints are returned exactly; interior results are renormalized. The
    sign of the result follows the input hemisphere (no canonicalization), so
    slerp(q, q, t) == q for every t.
    """
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"t must be in [0, 1], got {t}")
    if not is_unit(a):
        raise DomainError(f"first quaternion is not unit length: {a}")
    if not is_unit(b):
        raise DomainError(f"second quaternion is not unit length: {b}")
    if t == 0.0:
        return a
    if t == 1.0:
        return b
    dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
    if dot < 0.0:
        b = (-b[0], -b[1], -b[2], -b[3])
        dot = -dot
    angle = math.acos(min(dot, 1.0))
    if angle < _SLERP_MIN_ANGLE:
        w = (
            a[0] + t * (b[0] - a[0]),
            a[1] + t * (b[1] - a[1]),
            a[2] + t * (b[2] - a[2]),
            a[3] + t * (b[3] - a[3]),
        )
    else:
        sin_angle = math.sin(angle)
        ka = math.sin((1.0 - t) * angle) / sin_angle
        kb = math.sin(t * angle) / sin_angle
        w = (
            ka * a[0] + kb * b[0],
            ka * a[1] + kb * b[1],
            ka * a[2] + kb * b[2],
            ka * a[3] + kb * b[3],
        )
    n = math.sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3])
    return (w[0] / n, w[1] / n, w[2] / n, w[3] / n)


def blend_pose(a: Pose, b: Pose, t: float) -> Pose:
    """Blend two poses: slerp rotations, lerp facial, switch hands at t = 0.5."""
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"t must be in [0, 1], got {t}")
    rotations = {j: slerp(qa, b.rotations[j], t) for j, qa in a.rotations.items()}
    facial = {
        k: (1.0 - t) * a.facial.get(k, 0.0) + t * b.facial.get(k, 0.0)
        for k in sorted(a.facial.keys() | b.facial.keys())
    }
    source = a if t < 0.5 else b
    return Pose(
        rotations=rotations,
        handshape_l=source.handshape_l,
        handshape_r=source.handshape_r,
        facial=facial,
    )


def build_timeline(signs: list[SignEntry], cfg: TimelineConfig = TimelineConfig()) -> Timeline:
    """Lay clips end to end with cfg.transition seconds between them.

    Clip i starts at sum of earlier clip durations plus i transitions; with
    cfg.default_sign_duration set, every clip is first time-scaled to that
    length. Raises SkeletonMismatch when entries disagree on skeleton id.
    """
    skeleton_id = SKELETON.id
    for entry in signs:
        if entry.skeleton_id != signs[0].skeleton_id:
            raise SkeletonMismatch(signs[0].skeleton_id, entry.skeleton_id)
    if signs:
        skeleton_id = signs[0].skeleton_id

    clips: list[Clip] = []
    cursor = 0.0
    for i, entry in enumerate(signs):
        if i > 0:
            cursor += cfg.transition
        scale = 1.0
        if cfg.default_sign_duration is not None and entry.duration > 0:
            scale = cfg.default_sign_duration / entry.duration
        keyframes = tuple(
            Keyframe(time=cursor + kf.time * scale, pose=kf.pose) for kf in entry.keyframes
        )
        end = keyframes[-1].time if keyframes else cursor
        clips.append(Clip(SignMarker(entry.gloss, cursor, end), keyframes))
        cursor = end
    return Timeline(
        skeleton_id=skeleton_id,
        config=cfg,
        clips=tuple(clips),
        duration=cursor if clips else 0.0,
    )


def _sample_clip(clip: Clip, t: float) -> Pose:
    kfs = clip.keyframes
    if t <= kfs[0].time:
        return kfs[0].pose
    if t >= kfs[-1].time:
        return kfs[-1].pose
    for k0, k1 in zip(kfs, kfs[1:]):
        if t <= k1.time:
            if t == k0.time:
                return k0.pose
            if t == k1.time:
                return k1.pose
            return blend_pose(k0.pose, k1.pose, (t - k0.time) / (k1.time - k0.time))
    return kfs[-1].pose


def sample(tl: Timeline, t: float) -> Pose:
    """Pose at global time t; clamps outside [0, duration]. Total.

    Inside a transition gap the last pose of the earlier clip blends linearly
    into the first pose of the later clip.
    """
    if not tl.clips:
        return rest_pose()
    if t <= tl.clips[0].marker.start:
        return tl.clips[0].keyframes[0].pose
    if t >= tl.duration:
        return tl.clips[-1].keyframes[-1].pose
    for i, clip in enumerate(tl.clips):
        if t <= clip.marker.end:
            return _sample_clip(clip, t)
        if i + 1 < len(tl.clips) and t < tl.clips[i + 1].marker.start:
            gap_start = clip.marker.end
            gap = tl.clips[i + 1].marker.start - gap_start
            return blend_pose(
                clip.keyframes[-1].pose,
                tl.clips[i + 1].keyframes[0].pose,
                (t - gap_start) / gap,
            )
    return tl.clips[-1].keyframes[-1].pose


def timeline_to_doc(tl: Timeline) -> dict:
    cfg = tl.config
    return {
        "format": TIMELINE_FORMAT,
        "skeleton": tl.skeleton_id,
        "config": {
            "default_sign_duration": cfg.default_sign_duration,
            "transition": cfg.transition,
            "frame_rate": cfg.frame_rate,
        },
        "duration": tl.duration,
        "clips": [
            {
                "gloss": c.marker.gloss,
                "start": c.marker.start,
                "end": c.marker.end,
                "keyframes": [
                    {"time": kf.time, **pose_to_doc(kf.pose)} for kf in c.keyframes
                ],
            }
            for c in tl.clips
        ],
    }


def serialize_timeline(tl: Timeline) -> str:
    """Canonical timeline document; parse_timeline inverts it exactly."""
    return dumps_canonical(timeline_to_doc(tl))


def _number(doc: dict, key: str, where: str, allow_none: bool = False) -> float | None:
    value = doc.get(key)
    if value is None and allow_none:
        return None
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise MalformedDocument(where, f"missing or mistyped field {key!r}")
    return float(value)


def parse_timeline(document: str, skeleton: Skeleton = SKELETON) -> Timeline:
    """Parse a timeline document and re-check every structural invariant."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as e:
        raise MalformedDocument("timeline", f"not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise MalformedDocument("timeline", "top level must be an object")
    if doc.get("format") != TIMELINE_FORMAT:
        raise MalformedDocument("timeline", f"format must be {TIMELINE_FORMAT!r}")
    skeleton_id = doc.get("skeleton")
    if not isinstance(skeleton_id, str):
        raise MalformedDocument("timeline", "missing or mistyped field 'skeleton'")
    cfg_doc = doc.get("config")
    if not isinstance(cfg_doc, dict):
        raise MalformedDocument("timeline", "missing or mistyped field 'config'")
    try:
        cfg = TimelineConfig(
            default_sign_duration=_number(cfg_doc, "default_sign_duration", "config", allow_none=True),
            transition=_number(cfg_doc, "transition", "config"),
            frame_rate=_number(cfg_doc, "frame_rate", "config"),
        )
    except DomainError as e:
        raise InvariantViolation(str(e)) from None
    duration = _number(doc, "duration", "timeline")
    raw_clips = doc.get("clips")
    if not isinstance(raw_clips, list):
        raise MalformedDocument("timeline", "missing or mistyped field 'clips'")

    clips: list[Clip] = []
    for i, raw in enumerate(raw_clips):
        where = f"clips[{i}]"
        if not isinstance(raw, dict):
            raise MalformedDocument(where, "clip must be an object")
        gloss = raw.get("gloss")
        if not isinstance(gloss, str):
            raise MalformedDocument(where, "missing or mistyped field 'gloss'")
        start = _number(raw, "start", where)
        end = _number(raw, "end", where)
        raw_kfs = raw.get("keyframes")
        if not isinstance(raw_kfs, list):
            raise MalformedDocument(where, "missing or mistyped field 'keyframes'")
        keyframes: list[Keyframe] = []
        for k, kf_doc in enumerate(raw_kfs):
            kf_where = f"{where}.keyframes[{k}]"
            if not isinstance(kf_doc, dict):
                raise MalformedDocument(kf_where, "keyframe must be an object")
            time = _number(kf_doc, "time", kf_where)
            keyframes.append(Keyframe(time=time, pose=pose_from_doc(kf_doc, kf_where)))
        clips.append(Clip(SignMarker(gloss, start, end), tuple(keyframes)))

    tl = Timeline(skeleton_id=skeleton_id, config=cfg, clips=tuple(clips), duration=duration)
    _check_invariants(tl, skeleton)
    return tl


def _check_invariants(tl: Timeline, skeleton: Skeleton):
    joints = set(skeleton.joints)
    prev_end = None
    for i, clip in enumerate(tl.clips):
        where = f"clips[{i}] ({clip.marker.gloss})"
        if clip.marker.start >= clip.marker.end:
            raise InvariantViolation(f"{where}: marker start {clip.marker.start} >= end {clip.marker.end}")
        if prev_end is not None and clip.marker.start < prev_end:
            raise InvariantViolation(f"{where}: marker overlaps previous clip ending at {prev_end}")
        if prev_end is not None and abs(clip.marker.start - (prev_end + tl.config.transition)) > 1e-9:
            raise InvariantViolation(
                f"{where}: clip starts {clip.marker.start - prev_end} after the previous one, "
                f"expected the configured transition {tl.config.transition}"
            )
        prev_end = clip.marker.end
        if not clip.keyframes:
            raise InvariantViolation(f"{where}: clip has no keyframes")
        if clip.keyframes[0].time != clip.marker.start or clip.keyframes[-1].time != clip.marker.end:
            raise InvariantViolation(f"{where}: keyframes do not span the marker")
        prev_time = None
        for k, kf in enumerate(clip.keyframes):
            if prev_time is not None and kf.time <= prev_time:
                raise InvariantViolation(f"{where}: keyframe {k} time {kf.time} not increasing")
            prev_time = kf.time
            if set(kf.pose.rotations) != joints:
                raise InvariantViolation(f"{where}: keyframe {k} joints do not match the skeleton")
            for joint, q in kf.pose.rotations.items():
                if not is_unit(q, QUAT_NORM_TOL):
                    raise InvariantViolation(f"{where}: keyframe {k} joint {joint!r} quaternion not unit")
            for hand in (kf.pose.handshape_l, kf.pose.handshape_r):
                if hand not in HANDSHAPES:
                    raise InvariantViolation(f"{where}: keyframe {k} handshape {hand!r} unknown")
            if set(kf.pose.facial) != set(FACIAL_KEYS):
                raise InvariantViolation(f"{where}: keyframe {k} facial keys do not match the model")
            for key, value in kf.pose.facial.items():
                if not isinstance(value, float) or not 0.0 <= value <= 1.0:
                    raise InvariantViolation(f"{where}: keyframe {k} facial {key}={value} out of range")
    expected = tl.clips[-1].marker.end if tl.clips else 0.0
    if abs(tl.duration - expected) > 1e-9:
        raise InvariantViolation(f"duration {tl.duration} != last clip end {expected}")
