#!/usr/bin/env python3
"""Regenerate the on-disk fixture library under fixtures/.

Curve files are written with deterministic serialization so reruns are
byte-identical; provider documents for the worked examples are included.
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from neroncalc.curves import serialize_curve
from neroncalc.kodaira import ALL_FIXTURES, fixture_curve

OUT = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def file_name(name: str) -> str:
    return name.replace("*", "star") + ".json"


PROVIDERS = {
    "provider_II.json": {
        "p": 1,
        "base": "II.json",
        "curves": {"2": "IV.json", "3": "I0star.json", "6": "I0.json"},
        "jumps": [{"j": "1/6", "m": 1}],
    },
    "provider_I0star.json": {
        "p": 1,
        "base": "I0star.json",
        "curves": {"2": "I0.json"},
        "jumps": [{"j": "1/2", "m": 1}],
    },
    "provider_I2.json": {
        "p": 1,
        "base": "I2.json",
        "curves": {},
        "jumps": [{"j": "0", "m": 1}],
    },
}


def main() -> int:
    os.makedirs(OUT, exist_ok=True)
    for name in ALL_FIXTURES:
        path = os.path.join(OUT, file_name(name))
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(serialize_curve(fixture_curve(name)) + "\n")
        print("wrote", os.path.relpath(path))
    for name, doc in PROVIDERS.items():
        path = os.path.join(OUT, name)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, ensure_ascii=False, indent=1)
            fh.write("\n")
        print("wrote", os.path.relpath(path))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
