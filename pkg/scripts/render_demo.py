#!/usr/bin/env python3
"""Render the rank-10 demonstration torsion pair to SVG.

Builds the finite half with wings on the cuts {2, 3, 6, 8} (a clique on the
span 3..6, a bare triangle on 6..8, and a fan of triangles on the wrap span
8..12), prints its wing decomposition, and writes the quiver picture.

    python scripts/render_demo.py --out demo.svg
"""

from __future__ import annotations

import argparse

from clustertubes.arcs import PeriodicDiagram
from clustertubes.render import render_torsion_pair
from clustertubes.torsion import TorsionPair, decompose

DEMO_ARCS = [(8, 12), (8, 11), (9, 11), (3, 6), (3, 5), (4, 6), (6, 8)]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="demo.svg")
    args = parser.parse_args()

    half = PeriodicDiagram.from_arcs(10, DEMO_ARCS)
    pair = TorsionPair(10, half, "left")
    print(pair.to_json())
    print(decompose(half).to_json())
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_torsion_pair(pair))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
