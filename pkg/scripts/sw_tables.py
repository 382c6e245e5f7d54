"""Print W tables and powers of t for the tangent sphere bundles of RP^m and CP^m.

    python scripts/sw_tables.py rp:4 rp:8 cp:2
"""

import argparse

from kyfan.cli import sw_report
from kyfan.ring import height_of_t, parse_space


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("spaces", nargs="*", default=["rp:2", "rp:4", "rp:8", "cp:2", "cp:3"])
    p.add_argument("--summary", action="store_true", help="only the height of t per space")
    args = p.parse_args()
    for label in args.spaces:
        sp = parse_space(label)
        if args.summary:
            print(f"{label:>6}  n={sp.n:<3} k={sp.k:<3} height of t = {height_of_t(sp.w, sp.n, sp.k)}")
        else:
            print(sw_report(sp).render())


if __name__ == "__main__":
    main()
