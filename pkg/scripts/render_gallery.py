#!/usr/bin/env python3
"""Write a small gallery of SVG renderings: a few boundary words with their
bar and segment, plus every balanced word for one Parikh vector."""

import argparse
from pathlib import Path

from balwords.balance import enumerate_balanced
from balwords.christoffel import lower_christoffel
from balwords.render import RenderSpec, render_svg


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("gallery"), help="output directory")
    parser.add_argument("--cell-size", type=int, default=24)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for a, b in [(7, 4), (5, 3), (8, 5), (4, 2)]:
        word = lower_christoffel(a, b)
        spec = RenderSpec(word, show_bar=True, show_segment=True, format="svg", cell_size=args.cell_size)
        path = args.out / f"boundary_{a}_{b}.svg"
        path.write_text(render_svg(spec) + "\n", encoding="ascii")
        print(f"wrote {path}")

    for i, word in enumerate(enumerate_balanced(5, 3)):
        spec = RenderSpec(word, show_bar=True, show_segment=True, format="svg", cell_size=args.cell_size)
        path = args.out / f"balanced_5_3_{i:02d}_{word}.svg"
        path.write_text(render_svg(spec) + "\n", encoding="ascii")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
