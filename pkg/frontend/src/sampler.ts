/** Client-side pose evaluation over the serialized timeline document.
 *
 * This re-implements the sampling contract of the animation engine so the
 * viewer can scrub without a server round-trip per frame: clamping at the
 * ends, exact poses at keyframe times, piecewise slerp/lerp inside a clip,
 * and a linear blend across the transition gap between clips. Parity with
 * the engine is pinned by a generated fixture (1e-5 per component).
 */

import type { ClipDoc, PoseData, Quat, TimelineDoc } from "./types";

export const JOINTS = [
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
] as const;

export const IDENTITY: Quat = [1, 0, 0, 0];

// Below this angle slerp's sin() denominators lose precision; fall back to
// normalized lerp, same threshold as the engine.
const MIN_ANGLE = 1e-5;

export function slerp(a: Quat, b: Quat, t: number): Quat {
  if (t === 0) return a;
  if (t === 1) return b;
  let bw = b[0];
  let bx = b[1];
  let by = b[2];
  let bz = b[3];
  let dot = a[0] * bw + a[1] * bx + a[2] * by + a[3] * bz;
  if (dot < 0) {
    bw = -bw;
    bx = -bx;
    by = -by;
    bz = -bz;
    dot = -dot;
  }
  const angle = Math.acos(Math.min(dot, 1));
  let w: number, x: number, y: number, z: number;
  if (angle < MIN_ANGLE) {
    w = a[0] + t * (bw - a[0]);
    x = a[1] + t * (bx - a[1]);
    y = a[2] + t * (by - a[2]);
    z = a[3] + t * (bz - a[3]);
  } else {
    const sin = Math.sin(angle);
    const ka = Math.sin((1 - t) * angle) / sin;
    const kb = Math.sin(t * angle) / sin;
    w = ka * a[0] + kb * bw;
    x = ka * a[1] + kb * bx;
    y = ka * a[2] + kb * by;
    z = ka * a[3] + kb * bz;
  }
  const n = Math.sqrt(w * w + x * x + y * y + z * z);
  return [w / n, x / n, y / n, z / n];
}

export function blendPose(a: PoseData, b: PoseData, t: number): PoseData {
  const rotations: Record<string, Quat> = {};
  for (const joint of Object.keys(a.rotations)) {
    const qa = a.rotations[joint]!;
    const qb = b.rotations[joint];
    rotations[joint] = qb === undefined ? qa : slerp(qa, qb, t);
  }
  const facial: Record<string, number> = {};
  const keys = new Set([...Object.keys(a.facial), ...Object.keys(b.facial)]);
  for (const key of [...keys].sort()) {
    facial[key] = (1 - t) * (a.facial[key] ?? 0) + t * (b.facial[key] ?? 0);
  }
  const hands = t < 0.5 ? a : b;
  return {
    rotations,
    handshape_l: hands.handshape_l,
    handshape_r: hands.handshape_r,
    facial,
  };
}

export function restPose(): PoseData {
  const rotations: Record<string, Quat> = {};
  for (const joint of JOINTS) rotations[joint] = IDENTITY;
  return {
    rotations,
    handshape_l: "neutral",
    handshape_r: "neutral",
    facial: { brow_raise: 0, mouth_open: 0, smile: 0 },
  };
}

function poseOf(kf: PoseData): PoseData {
  return {
    rotations: kf.rotations,
    handshape_l: kf.handshape_l,
    handshape_r: kf.handshape_r,
    facial: kf.facial,
  };
}

function sampleClip(clip: ClipDoc, t: number): PoseData {
  const kfs = clip.keyframes;
  const first = kfs[0]!;
  const last = kfs[kfs.length - 1]!;
  if (t <= first.time) return poseOf(first);
  if (t >= last.time) return poseOf(last);
  for (let i = 0; i + 1 < kfs.length; i++) {
    const k0 = kfs[i]!;
    const k1 = kfs[i + 1]!;
    if (t <= k1.time) {
      if (t === k0.time) return poseOf(k0);
      if (t === k1.time) return poseOf(k1);
      return blendPose(poseOf(k0), poseOf(k1), (t - k0.time) / (k1.time - k0.time));
    }
  }
  return poseOf(last);
}

/** Pose at global time t; clamps outside [0, duration]. Total. */
export function sample(tl: TimelineDoc, t: number): PoseData {
  const clips = tl.clips;
  if (clips.length === 0) return restPose();
  const firstClip = clips[0]!;
  const lastClip = clips[clips.length - 1]!;
  if (t <= firstClip.start) return poseOf(firstClip.keyframes[0]!);
  if (t >= tl.duration) return poseOf(lastClip.keyframes[lastClip.keyframes.length - 1]!);
  for (let i = 0; i < clips.length; i++) {
    const clip = clips[i]!;
    if (t <= clip.end) return sampleClip(clip, t);
    const next = clips[i + 1];
    if (next !== undefined && t < next.start) {
      const gapStart = clip.end;
      const gap = next.start - gapStart;
      return blendPose(
        poseOf(clip.keyframes[clip.keyframes.length - 1]!),
        poseOf(next.keyframes[0]!),
        (t - gapStart) / gap,
      );
    }
  }
  return poseOf(lastClip.keyframes[lastClip.keyframes.length - 1]!);
}

/** Gloss of the clip whose span contains t, for the subtitle. */
export function glossAt(tl: TimelineDoc, t: number): string | null {
  for (const clip of tl.clips) {
    if (t >= clip.start && t <= clip.end) return clip.gloss;
  }
  return null;
}
