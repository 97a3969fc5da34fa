#!/usr/bin/env python3
"""Regenerate the bundled demo lexicon (src/mal2sign/data/lexicon.json).

The poses are synthetic placeholders: every sign is a distinct, valid
keyframe clip over the fixed skeleton, not a faithful ISL rendition. Word
signs are authored below as peak-pose tables; the fingerspelling alphabet is
derived procedurally from each letter's position so all ~90 clips differ.
"""

import json
import math
import sys
import unicodedata
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
sys.path.insert(0, str(SRC))

from mal2sign.pose import FACIAL_KEYS, HANDSHAPES, JOINTS, SKELETON  # noqa: E402

OUT = SRC / "mal2sign" / "data" / "lexicon.json"

X, Y, Z = (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)


def q7(value: float) -> float:
    return float(f"{value:.7g}")


def quat(axis, degrees):
    half = math.radians(degrees) / 2.0
    s = math.sin(half)
    return [q7(math.cos(half)), q7(axis[0] * s), q7(axis[1] * s), q7(axis[2] * s)]


IDENT = [1.0, 0.0, 0.0, 0.0]


def pose(rot=None, hand_l="neutral", hand_r="neutral", facial=None):
    rotations = {j: IDENT for j in JOINTS}
    rotations.update(rot or {})
    f = dict.fromkeys(FACIAL_KEYS, 0.0)
    f.update(facial or {})
    return {
        "rotations": rotations,
        "handshape_l": hand_l,
        "handshape_r": hand_r,
        "facial": f,
    }


def keyframes(duration, peak, pattern="return", mirror=None):
    """stance -> peak -> back, or hold at peak, or a two-beat repeat."""
    stance = pose()
    if pattern == "hold":
        return [{"time": 0.0, **stance}, {"time": duration, **peak}]
    if pattern == "repeat":
        other = mirror or stance
        return [
            {"time": 0.0, **stance},
            {"time": q7(duration * 0.25), **peak},
            {"time": q7(duration * 0.5), **other},
            {"time": q7(duration * 0.75), **peak},
            {"time": duration, **stance},
        ]
    return [
        {"time": 0.0, **stance},
        {"time": q7(duration * 0.5), **peak},
        {"time": duration, **stance},
    ]


# gloss: (roots, duration, pattern, peak pose)
WORD_SIGNS = {
    "I": (["ഞാൻ"], 1.0, "hold",
          pose({"elbow.R": quat(Z, -70), "wrist.R": quat(Y, 30)}, hand_r="point")),
    "YOU": (["നീ"], 1.0, "hold",
            pose({"shoulder.R": quat(X, -45), "elbow.R": quat(Z, -20)}, hand_r="point")),
    "HE": (["അവൻ"], 1.0, "hold",
           pose({"shoulder.R": quat(X, -45), "wrist.R": quat(Z, 40)}, hand_r="point")),
    "SHE": (["അവൾ"], 1.0, "hold",
            pose({"shoulder.R": quat(X, -45), "wrist.R": quat(Z, -40)}, hand_r="point",
                 facial={"smile": 0.2})),
    "IT": (["അത്"], 0.8, "hold",
           pose({"shoulder.R": quat(X, -30), "elbow.R": quat(Y, 15)}, hand_r="point")),
    "WE": (["നമ്മൾ"], 1.2, "return",
           pose({"elbow.R": quat(Z, -60), "elbow.L": quat(Z, 60)}, hand_l="point", hand_r="point")),
    "THEY": (["അവർ"], 1.2, "return",
             pose({"shoulder.R": quat(X, -50), "shoulder.L": quat(X, 20)}, hand_r="point")),
    "WHAT": (["എന്ത്"], 1.0, "return",
             pose({"elbow.L": quat(X, -40), "elbow.R": quat(X, -40),
                   "wrist.L": quat(Y, -60), "wrist.R": quat(Y, 60)},
                  hand_l="spread", hand_r="spread", facial={"brow_raise": 0.8})),
    "CHILD": (["കുട്ടി"], 1.0, "return",
              pose({"shoulder.R": quat(X, -20), "elbow.R": quat(X, -30)}, hand_r="flat",
                   facial={"smile": 0.3})),
    "MOTHER": (["അമ്മ"], 1.1, "return",
               pose({"elbow.R": quat(Z, -80), "wrist.R": quat(X, -25)}, hand_r="spread",
                    facial={"smile": 0.4})),
    "FATHER": (["അച്ഛൻ"], 1.1, "return",
               pose({"elbow.R": quat(Z, -85), "wrist.R": quat(X, 25)}, hand_r="spread")),
    "HOUSE": (["വീട്", "വീട്ട"], 1.2, "return",
              pose({"shoulder.L": quat(Z, 35), "shoulder.R": quat(Z, -35),
                    "elbow.L": quat(X, -50), "elbow.R": quat(X, -50)},
                   hand_l="flat", hand_r="flat")),
    "BOOK": (["പുസ്തകം"], 1.0, "return",
             pose({"elbow.L": quat(Y, 40), "elbow.R": quat(Y, -40),
                   "wrist.L": quat(Y, 50), "wrist.R": quat(Y, -50)},
                  hand_l="flat", hand_r="flat")),
    "WATER": (["വെള്ളം"], 0.9, "return",
              pose({"elbow.R": quat(Z, -75), "wrist.R": quat(X, -40)}, hand_r="pinch",
                   facial={"mouth_open": 0.3})),
    "TREE": (["മരം"], 1.3, "return",
             pose({"shoulder.R": quat(Z, -80), "elbow.R": quat(X, -15),
                   "wrist.R": quat(Y, 45)}, hand_r="spread")),
    "SCHOOL": (["സ്കൂൾ", "സ്കൂള", "സ്കൂള്"], 1.1, "return",
               pose({"elbow.L": quat(X, -45), "elbow.R": quat(X, -45),
                     "wrist.R": quat(X, -30)}, hand_l="flat", hand_r="flat")),
    "MILK": (["പാൽ"], 0.9, "repeat",
             pose({"elbow.R": quat(Z, -65)}, hand_r="fist")),
    "FLOWER": (["പൂവ്"], 1.0, "return",
               pose({"elbow.R": quat(Z, -78), "wrist.R": quat(Z, 30)}, hand_r="pinch",
                    facial={"smile": 0.3})),
    "YESTERDAY": (["ഇന്നലെ"], 1.0, "hold",
                  pose({"wrist.R": quat(Y, 80), "elbow.R": quat(Z, -40)}, hand_r="point",
                       facial={"brow_raise": 0.2})),
    "TODAY": (["ഇന്ന്"], 0.8, "return",
              pose({"elbow.L": quat(X, -35), "elbow.R": quat(X, -35)},
                   hand_l="flat", hand_r="flat")),
    "RUN": (["ഓടുക"], 1.0, "repeat",
            pose({"elbow.L": quat(X, -70), "elbow.R": quat(X, -20)},
                 hand_l="fist", hand_r="fist"),
            pose({"elbow.L": quat(X, -20), "elbow.R": quat(X, -70)},
                 hand_l="fist", hand_r="fist")),
    "GO": (["പോകുക"], 0.9, "return",
           pose({"shoulder.R": quat(X, -35), "elbow.R": quat(X, -20),
                 "wrist.R": quat(X, -20)}, hand_r="point")),
    "COME": (["വരുക"], 0.9, "return",
             pose({"shoulder.R": quat(X, -35), "elbow.R": quat(X, -60),
                   "wrist.R": quat(X, 35)}, hand_r="flat")),
    "PLAY": (["കളിക്കുക"], 1.2, "repeat",
             pose({"wrist.L": quat(Z, 45), "wrist.R": quat(Z, -45),
                   "elbow.L": quat(Z, 30), "elbow.R": quat(Z, -30)},
                  hand_l="spread", hand_r="spread", facial={"smile": 0.5}),
             pose({"wrist.L": quat(Z, -45), "wrist.R": quat(Z, 45),
                   "elbow.L": quat(Z, 15), "elbow.R": quat(Z, -15)},
                  hand_l="spread", hand_r="spread", facial={"smile": 0.5})),
    "DRINK": (["കുടിക്കുക"], 1.0, "return",
              pose({"elbow.R": quat(Z, -95), "wrist.R": quat(X, -50)}, hand_r="pinch",
                   facial={"mouth_open": 0.5})),
    "READ": (["വായിക്കുക"], 1.1, "return",
             pose({"elbow.L": quat(Y, 35), "elbow.R": quat(Y, -35), "neck": quat(X, 15)},
                  hand_l="flat", hand_r="flat")),
    "SEE": (["കാണുക"], 0.9, "return",
            pose({"elbow.R": quat(Z, -85), "wrist.R": quat(Y, -20), "head": quat(X, -10)},
                 hand_r="point")),
    "STUDY": (["പഠിക്കുക"], 1.2, "repeat",
              pose({"elbow.L": quat(Y, 30), "elbow.R": quat(X, -55)},
                   hand_l="flat", hand_r="spread")),
    "GIVE": (["കൊടുക്കുക"], 1.0, "return",
             pose({"shoulder.R": quat(X, -40), "elbow.R": quat(X, -30),
                   "wrist.R": quat(X, 45)}, hand_r="flat")),
    "GOOD": (["നല്ല"], 0.8, "return",
             pose({"elbow.R": quat(Z, -70), "wrist.R": quat(X, 30)}, hand_r="fist",
                  facial={"smile": 0.8})),
    "BIG": (["വലിയ"], 1.0, "return",
            pose({"shoulder.L": quat(Z, 55), "shoulder.R": quat(Z, -55)},
                 hand_l="spread", hand_r="spread",
                 facial={"mouth_open": 0.5, "brow_raise": 0.3})),
    "SMALL": (["ചെറിയ"], 0.8, "return",
              pose({"elbow.L": quat(Z, 30), "elbow.R": quat(Z, -30)},
                   hand_l="pinch", hand_r="pinch", facial={"smile": 0.2})),
    "ONE": (["ഒന്ന്"], 0.7, "hold",
            pose({"elbow.R": quat(Z, -60)}, hand_r="point")),
    "TWO": (["രണ്ട്"], 0.7, "hold",
            pose({"elbow.R": quat(Z, -60), "wrist.R": quat(Y, 25)}, hand_r="spread")),
}

FS_DURATION = 0.4


def alphabet():
    """Assigned code points the demo alphabet covers, ordered by code point."""
    cps = [0x0D01, 0x0D02, 0x0D03]
    cps += [cp for cp in range(0x0D05, 0x0D15) if unicodedata.name(chr(cp), None)]
    cps += list(range(0x0D15, 0x0D3B))                       # consonants
    cps += list(range(0x0D3E, 0x0D45)) + list(range(0x0D46, 0x0D49))
    cps += list(range(0x0D4A, 0x0D4D)) + [0x0D57]            # dependent vowel signs
    cps += [0x0D60, 0x0D61, 0x0D62, 0x0D63]                  # vocalics
    cps += list(range(0x0D66, 0x0D70))                       # digits
    cps += list(range(0x0D7A, 0x0D80))                       # chillus
    return cps


def fingerspell_entry(gloss, index):
    """A short two-keyframe clip whose wrist/elbow pose encodes the letter."""
    twist = -150 + (index % 21) * 15
    lift = -80 + (index // 21) * 12
    peak = pose(
        {
            "shoulder.R": quat(X, -30),
            "elbow.R": quat(Z, lift),
            "wrist.R": quat(Y, twist),
        },
        hand_r=HANDSHAPES[index % len(HANDSHAPES)],
    )
    return {"gloss": gloss, "roots": [], "keyframes": keyframes(FS_DURATION, peak, "hold")}


def main():
    entries = []
    for gloss, spec in WORD_SIGNS.items():
        roots, duration, pattern, peak = spec[0], spec[1], spec[2], spec[3]
        mirror = spec[4] if len(spec) > 4 else None
        entries.append(
            {
                "gloss": gloss,
                "roots": roots,
                "keyframes": keyframes(duration, peak, pattern, mirror),
            }
        )

    fingerspelling = {}
    for index, cp in enumerate(alphabet()):
        gloss = f"FS_{cp:04X}"
        entries.append(fingerspell_entry(gloss, index))
        fingerspelling[chr(cp)] = gloss
    entries.append(
        {
            "gloss": "FS_UNKNOWN",
            "roots": [],
            "keyframes": keyframes(
                FS_DURATION,
                pose({"head": quat(Z, 20), "shoulder.R": quat(X, -15)}, hand_r="spread",
                     facial={"brow_raise": 0.6}),
                "hold",
            ),
        }
    )

    doc = {
        "format": "mal2sign-lexicon/1",
        "skeleton": SKELETON.id,
        "entries": entries,
        "fingerspelling": fingerspelling,
    }
    OUT.write_text(json.dumps(doc, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {OUT} ({len(entries)} entries, {len(fingerspelling)} fingerspell keys)")


if __name__ == "__main__":
    main()
