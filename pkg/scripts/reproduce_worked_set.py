"""Print the reductions, auxiliary bases, obstructions and scheme equations
for the ideal (x2^2, x2*x1, x1^3) and its marked set in data/marked_j3.txt.

    python3 scripts/reproduce_worked_set.py --ring ZZ/5
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from markedschemes import (
    Reducer,
    StableIdeal,
    auxiliary_basis,
    is_marked_basis,
    marked_scheme_equations,
    obstructions,
    parse_marked_set,
)
from markedschemes.polys import format_polynomial, parse_polynomial
from markedschemes.rings import parse_ring

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class Config:
    ideal: str = "x2^2,x2*x1,x1^3"
    nvars: int = 3
    marked: Path = ROOT / "data" / "marked_j3.txt"
    ring: str = "ZZ"
    degrees: tuple[int, ...] = (3, 4)
    probes: tuple[str, ...] = ("x2^2*x1", "x2^3")


def run(cfg: Config) -> None:
    J = StableIdeal.parse(cfg.ideal, cfg.nvars)
    ring = parse_ring(cfg.ring)
    F = parse_marked_set(cfg.marked.read_text(), J, ring)
    red = Reducer(F)
    print(f"J = ({J}) over {ring}")
    for text in cfg.probes:
        rem = red.reduce(parse_polynomial(text, cfg.nvars, ring))
        print(f"  {text} -> {format_polynomial(rem, ring)}")
    for s in cfg.degrees:
        print(f"auxiliary basis, s={s}")
        for head, f in auxiliary_basis(F, s, red).polys.items():
            print(f"  {format_polynomial(f.poly(), ring)}")
        gens = obstructions(F, s, red).generators
        print(f"  obstructions: {[format_polynomial(g, ring) for g in gens] or 0}")
    print(f"marked basis: {is_marked_basis(F, red).basis}")
    start = time.perf_counter()
    eqs = marked_scheme_equations(J)
    print(f"scheme equations ({time.perf_counter() - start:.3f}s):")
    print(eqs.to_text())


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--ring", default=Config.ring)
    parser.add_argument("--marked", type=Path, default=Config.marked)
    args = parser.parse_args()
    run(Config(ring=args.ring, marked=args.marked))


if __name__ == "__main__":
    main()
