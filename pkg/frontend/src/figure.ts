/** Canvas stick-figure rendering of a sampled pose. */

import type { PoseData } from "./types";
import { BONES, worldPositions } from "./skeleton";

export function drawFigure(
  ctx: CanvasRenderingContext2D,
  pose: PoseData,
  width: number,
  height: number,
): void {
  ctx.clearRect(0, 0, width, height);
  const positions = worldPositions(pose);

  // Orthographic projection: skeleton x/y to canvas, y flipped, root near
  // the lower third so raised arms stay inside the frame.
  const scale = height * 0.72;
  const px = (p: [number, number, number]) => width / 2 + p[0] * scale;
  const py = (p: [number, number, number]) => height * 0.82 - p[1] * scale;

  ctx.lineWidth = 6;
  ctx.lineCap = "round";
  ctx.strokeStyle = "#2b6cb0";
  for (const [from, to] of BONES) {
    const a = positions[from]!;
    const b = positions[to]!;
    ctx.beginPath();
    ctx.moveTo(px(a), py(a));
    ctx.lineTo(px(b), py(b));
    ctx.stroke();
  }

  const head = positions["head"]!;
  ctx.beginPath();
  ctx.arc(px(head), py(head) - 10, 16, 0, Math.PI * 2);
  ctx.fillStyle = "#2b6cb0";
  ctx.fill();

  // Hands: a dot per wrist, labeled with the discrete handshape id.
  ctx.font = "12px sans-serif";
  ctx.fillStyle = "#c05621";
  for (const [joint, label] of [
    ["wrist.L", pose.handshape_l],
    ["wrist.R", pose.handshape_r],
  ] as const) {
    const p = positions[joint]!;
    ctx.beginPath();
    ctx.arc(px(p), py(p), 7, 0, Math.PI * 2);
    ctx.fill();
    ctx.fillText(label, px(p) + 10, py(p) + 4);
  }
}
