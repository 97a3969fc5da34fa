"""Sample a serialized timeline on an even time grid with the engine.

Usage: sample_grid.py TIMELINE_JSON N > grid.json

Emits {"times": [...], "poses": [...]} where poses[i] is the engine's
sample() output at times[i]. The viewer's sampler must match these within
1e-5 per component.
"""

import json
import sys

from mal2sign.animation import parse_timeline, sample


def main() -> None:
    path, n = sys.argv[1], int(sys.argv[2])
    with open(path, encoding="utf-8") as f:
        tl = parse_timeline(f.read())
    times = [tl.duration * i / (n - 1) for i in range(n)]
    poses = []
    for t in times:
        pose = sample(tl, t)
        poses.append(
            {
                "rotations": {j: list(q) for j, q in pose.rotations.items()},
                "handshape_l": pose.handshape_l,
                "handshape_r": pose.handshape_r,
                "facial": dict(pose.facial),
            }
        )
    json.dump({"times": times, "poses": poses}, sys.stdout, ensure_ascii=False)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
