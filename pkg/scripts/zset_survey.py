"""Build Z_i on every fixture and tabulate cells, purity and effective pairs.

    python scripts/zset_survey.py [--xseed 3]
"""

import argparse

from kyfan.flag import build_flag, random_points
from kyfan.generators import parse_kind
from kyfan.zset import build_z_complex, dimension_lemma_violations, effective_counts, pseudomanifold_check

FIXTURES = ["trivial:circle3,1", "trivial:circle4,2", "klein:3", "hopf", "crosspoly:3"]


def survey(kind, xseed):
    lc = parse_kind(kind)
    n, k, N = lc.meta.n, lc.meta.k, lc.coloring.N
    rows = []
    for i in range(k + 1):
        j = n + i - 1
        if n + i >= N:
            rows.append((i, "empty (codimension)", "-", "-", 0))
            continue
        x = random_points(N, xseed) if xseed is not None else None
        flag = build_flag(N, max(j, 0), x, verify=False)
        z = build_z_complex(lc, flag, i)
        pm = pseudomanifold_check(z, k - i)
        bad = dimension_lemma_violations(lc, z)
        cnt = effective_counts(lc, i, None if lc.height is None else lc.height >= n + i)
        rows.append((i, str(z.by_dim()), "pure" if pm.pure else "impure", len(bad), cnt.pairs))
    return lc, rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--xseed", type=int, default=None)
    p.add_argument("kinds", nargs="*", default=FIXTURES)
    args = p.parse_args()
    for kind in args.kinds:
        lc, rows = survey(kind, args.xseed)
        print(f"{kind}: n={lc.meta.n} k={lc.meta.k} N={lc.coloring.N} f={lc.complex.f_vector()} height={lc.height}")
        for i, cells, purity, bad, pairs in rows:
            print(f"   i={i}  cells {cells:<28} {purity:<6} lemma violations {bad}  effective pairs {pairs}")


if __name__ == "__main__":
    main()
