"""The fixed skeleton and the pose model signs are authored against.

A pose has three channels: per-joint unit quaternions (continuous), one
discrete handshape id per hand, and three scalar facial weights running in
parallel with the manual channels. The upper-body skeleton is fixed at 11
joints; its id doubles as the serialization format version for sign data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

QUAT_NORM_TOL = 1e-6

JOINTS = (
    "root",
    "spine",
    "chest",
    "neck",
    "head",
    "shoulder.L",
    "elbow.L",
    "wrist.L",
    "shoulder.R",
    "elbow.R",
    "wrist.R",
)

HANDSHAPES = ("flat", "fist", "point", "spread", "pinch", "neutral")

FACIAL_KEYS = ("brow_raise", "mouth_open", "smile")

Quat = tuple[float, float, float, float]  # (w, x, y, z)

IDENTITY_QUAT: Quat = (1.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True)
class Skeleton:
    id: str
    joints: tuple[str, ...] = JOINTS


SKELETON = Skeleton(id="mal2sign-skeleton/1")


def quat_norm(q: Quat) -> float:
    return math.sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3])


def is_unit(q: Quat, tol: float = QUAT_NORM_TOL) -> bool:
    return abs(quat_norm(q) - 1.0) <= tol


def axis_angle(x: float, y: float, z: float, degrees: float) -> Quat:
    """Unit quaternion for a rotation of `degrees` about axis (x, y, z)."""
    n = math.sqrt(x * x + y * y + z * z)
    if n == 0.0:
        return IDENTITY_QUAT
    half = math.radians(degrees) / 2.0
    s = math.sin(half) / n
    return (math.cos(half), x * s, y * s, z * s)


@dataclass(frozen=True)
class Pose:
    """Joint rotations plus handshape and facial channels for one instant."""

    rotations: dict[str, Quat]
    handshape_l: str = "neutral"
    handshape_r: str = "neutral"
    facial: dict[str, float] = field(default_factory=lambda: dict.fromkeys(FACIAL_KEYS, 0.0))


@dataclass(frozen=True)
class Keyframe:
    time: float
    pose: Pose


def rest_pose(skeleton: Skeleton = SKELETON) -> Pose:
    """All-identity rotations, neutral hands, zero facial weights."""
    return Pose(rotations={j: IDENTITY_QUAT for j in skeleton.joints})
