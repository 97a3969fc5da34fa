/** Stick-figure forward kinematics for the 11-joint upper-body skeleton.
 *
 * The timeline document carries rotations only; the rest offsets here are a
 * viewer choice (metres-ish, y up) sized to read well as a 2D figure. World
 * position of a joint = parent position + parent world rotation applied to
 * the joint's rest offset; drawing projects orthographically onto x/y.
 */

import type { PoseData, Quat } from "./types";
import { IDENTITY, JOINTS } from "./sampler";

type Vec3 = [number, number, number];

export const PARENT: Record<string, string | null> = {
  root: null,
  spine: "root",
  chest: "spine",
  neck: "chest",
  head: "neck",
  "shoulder.L": "chest",
  "elbow.L": "shoulder.L",
  "wrist.L": "elbow.L",
  "shoulder.R": "chest",
  "elbow.R": "shoulder.R",
  "wrist.R": "elbow.R",
};

const OFFSET: Record<string, Vec3> = {
  root: [0, 0, 0],
  spine: [0, 0.22, 0],
  chest: [0, 0.24, 0],
  neck: [0, 0.16, 0],
  head: [0, 0.14, 0],
  "shoulder.L": [0.2, 0.12, 0],
  "elbow.L": [0.26, 0, 0],
  "wrist.L": [0.24, 0, 0],
  "shoulder.R": [-0.2, 0.12, 0],
  "elbow.R": [-0.26, 0, 0],
  "wrist.R": [-0.24, 0, 0],
};

function mul(a: Quat, b: Quat): Quat {
  return [
    a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
    a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
    a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
    a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
  ];
}

function rotate(q: Quat, v: Vec3): Vec3 {
  const [, qx, qy, qz] = q;
  const w = q[0];
  const tx = 2 * (qy * v[2] - qz * v[1]);
  const ty = 2 * (qz * v[0] - qx * v[2]);
  const tz = 2 * (qx * v[1] - qy * v[0]);
  return [
    v[0] + w * tx + qy * tz - qz * ty,
    v[1] + w * ty + qz * tx - qx * tz,
    v[2] + w * tz + qx * ty - qy * tx,
  ];
}

/** World positions of every joint for a pose, in skeleton units. */
export function worldPositions(pose: PoseData): Record<string, Vec3> {
  const worldRot: Record<string, Quat> = {};
  const worldPos: Record<string, Vec3> = {};
  for (const joint of JOINTS) {
    const parent = PARENT[joint];
    const local = pose.rotations[joint] ?? IDENTITY;
    if (parent === null || parent === undefined) {
      worldRot[joint] = local;
      worldPos[joint] = OFFSET[joint]!;
    } else {
      const pr = worldRot[parent]!;
      worldRot[joint] = mul(pr, local);
      const off = rotate(pr, OFFSET[joint]!);
      const pp = worldPos[parent]!;
      worldPos[joint] = [pp[0] + off[0], pp[1] + off[1], pp[2] + off[2]];
    }
  }
  return worldPos;
}

/** Bone segments to draw, as [from, to] joint name pairs. */
export const BONES: [string, string][] = JOINTS.filter((j) => PARENT[j] !== null).map(
  (j) => [PARENT[j]!, j],
);
