"""Ky Fan parity over many random nice colorings of subdivided cross-polytope spheres.

Colorings come from random carrier choices in the barycentric subdivision
and from seeded backtracking search with a given number of colors.

    python scripts/kyfan_recolorings.py --n 2 --trials 50 --colors 4
"""

import argparse
import random
from collections import Counter

from kyfan.complex import kyfan_parity, validate
from kyfan.generators import search_nice_coloring, subdivided_cross_polytope


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--trials", type=int, default=40)
    p.add_argument("--colors", type=int, default=None, help="search with this many colors (default n+2)")
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    colors = args.colors or args.n + 2
    totals, parities = Counter(), Counter()
    for t in range(args.trials):
        seed = args.seed + t
        lc = subdivided_cross_polytope(args.n, random.Random(seed))
        if t % 2:
            lc.coloring = search_nice_coloring(lc.complex, lc.involution, colors, seed=seed)
        assert validate(lc.complex, lc.involution, lc.coloring).ok
        res = kyfan_parity(lc, args.n)
        totals[res.total] += 1
        parities[res.parity] += 1
    print(f"n = {args.n}, {args.trials} colorings, search colors = {colors}")
    print("sum of alpha -> colorings:", dict(sorted(totals.items())))
    print("parity -> colorings:", dict(parities))


if __name__ == "__main__":
    main()
