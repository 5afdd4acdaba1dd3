#!/usr/bin/env python3
"""Census of extra classes (classes outside the classical parameterization)
across the symplectic and special orthogonal groups at p=2.

Example:
    python scripts/extra_class_census.py --max-dim 24
"""

from __future__ import annotations

import argparse
import sys

from unipotent_atlas.balacarter import is_extra_class, label
from unipotent_atlas.classes import Char, Family, GroupSpec, enumerate_classes
from unipotent_atlas.oracle import count_extra_classes


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-dim", type=int, default=20)
    parser.add_argument("--list-classes", action="store_true",
                        help="print each extra class with its label")
    args = parser.parse_args(argv)

    print(f"{'group':<12} {'classes':>8} {'extra':>6}")
    for dim in range(2, args.max_dim + 1):
        specs = [GroupSpec(Family.SO, dim, Char.TWO)]
        if dim % 2 == 0:
            specs.append(GroupSpec(Family.SP, dim, Char.TWO))
        for G in specs:
            classes = enumerate_classes(G)
            extra = count_extra_classes(G)
            print(f"{G.describe():<12} {len(classes):>8} {extra:>6}")
            if args.list_classes and extra:
                for C in classes:
                    if C.split_tag != "II" and is_extra_class(C):
                        print(f"    {str(C.lam):<16} eps {str(C.eps):<20} {label(C)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
