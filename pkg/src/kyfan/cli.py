"""Command line front end.

Exit codes: 0 when every verdict passes, 1 when some verdict fails, 2 on
input errors (unreadable or malformed files, bad arguments).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import catalog
from .complex import InputError, LabeledComplex, alt_histogram, kyfan_parity, max_alt, validate
from .exact import fmt_fraction
from .fileformat import FormatError, dump, dumps, load
from .flag import build_flag, exhaustive_cap, random_points, verify_condition3
from .generators import parse_kind
from .report import FAIL, INFO, OUT_OF_SCOPE, Report
from .ring import (SpaceClasses, check_tables_agree, height_of_t, invert_total_class, parse_space,
                   space_from_mapping, t_powers, w_conner, w_table_recurrence)
from .zset import (build_z_complex, dimension_lemma_violations, effective_counts, empty_z_complex,
                   pseudomanifold_check)


def _validation_checks(rep: Report, lc: LabeledComplex) -> bool:
    v = validate(lc.complex, lc.involution, lc.coloring)
    groups: dict[str, list] = {}
    for x in v.violations:
        groups.setdefault(x.axiom, []).append(f"{' '.join(map(str, x.witness))}" + (f" ({x.detail})" if x.detail else ""))
    for axiom in ("facet-maximal", "facet-nonempty", "facet-repeated-vertex", "vertex-in-facet",
                  "involution-defined", "involution-order-two", "involution-free", "involution-simplicial",
                  "label-defined", "label-range", "antipodality", "antipodal-edge"):
        rep.check(axiom, axiom not in groups, witnesses=groups.get(axiom, ()))
    return v.ok


def validate_report(lc: LabeledComplex) -> Report:
    rep = Report("validate")
    rep.section("complex", [f"f-vector = {lc.complex.f_vector()}", f"n = {lc.meta.n}, k = {lc.meta.k}, N = {lc.coloring.N}",
                            f"status = {lc.status}"] + ([f"note = {lc.note}"] if lc.note else []))
    _validation_checks(rep, lc)
    return rep


def alt_stats_report(lc: LabeledComplex, paired: bool = False) -> Report:
    rep = Report("alt-stats" + (" (antipodal pairs)" if paired else ""))
    ok = _validation_checks(Report("tmp"), lc)
    if not ok:
        sub = Report("validate")
        _validation_checks(sub, lc)
        rep.checks.extend(c for c in sub.checks if c.verdict == FAIL)
        return rep
    hist = alt_histogram(lc, paired=paired)
    dims = sorted({d for d, _ in hist})
    lines = []
    for d in dims:
        row = {a: c for (dd, a), c in hist.items() if dd == d}
        lines.append(f"dim {d}: " + ", ".join(f"Alt {a}: {c}" for a, c in sorted(row.items())) + f"  (total {sum(row.values())})")
    rep.section("histogram", lines)
    rep.section("totals", [f"simplices = {sum(hist.values())}", f"max Alt = {max_alt(lc)}"])
    rep.check("nice coloring", True)
    return rep


def kyfan_report(lc: LabeledComplex, n: Optional[int] = None) -> Report:
    if n is None:
        n = lc.complex.dim
    rep = Report(f"kyfan-check (n = {n})")
    if not _validation_checks(Report("tmp"), lc):
        rep.add("nice coloring", FAIL, witnesses=["input fails validation; run validate"])
        return rep
    res = kyfan_parity(lc, n)
    if res.diagnostic:
        rep.add("dimension obstruction", FAIL, res.diagnostic, witnesses=[f"n+1 = {n + 1}, N = {lc.coloring.N}"])
        return rep
    rep.section("alpha per pattern", [f"alpha{pat} = {c}" for pat, c in res.alpha.items()] or ["(no fully alternating n-simplex)"])
    rep.check("odd number of alternating pairs", res.parity == 1,
              counts={"sum of alpha": res.total, "parity": res.parity},
              witnesses=[] if res.parity == 1 else [f"sum of alpha = {res.total}"])
    return rep


def zset_report(lc: LabeledComplex, i: int, xseed: Optional[int] = None, t_height: Optional[int] = None) -> Report:
    n, k, N = lc.meta.n, lc.meta.k, lc.coloring.N
    rep = Report(f"zset (i = {i}, level j = {n + i - 1})")
    if not _validation_checks(Report("tmp"), lc):
        rep.add("nice coloring", FAIL, witnesses=["input fails validation; run validate"])
        return rep
    height = t_height if t_height is not None else lc.height
    hypothesis = True if i == 0 else (None if height is None else height >= n + i)
    j = n + i - 1
    notes = []
    if i > k:
        notes.append(f"i = {i} > k = {k}: Z_i is empty for dimension reasons")
    if n + i >= N:
        notes.append(f"n + i = {n + i} >= N = {N}: the plane has codimension >= N, so Z_i is empty")
        z = empty_z_complex(lc, i)
    else:
        x = random_points(N, xseed) if xseed is not None else None
        flag = build_flag(N, max(j, 0), x, verify=False)
        rep.section("flag", [f"N = {N}", "x = (" + ", ".join(fmt_fraction(q) for q in flag.x) + ")"])
        if j >= 0 and N <= exhaustive_cap():
            c3 = verify_condition3(flag, j)
            rep.check(f"plane meets a face iff Alt >= {j + 1} ({c3.faces_checked} faces)", c3.ok,
                      witnesses=[f"{f} Alt={a} meets={m}" for f, a, m in c3.counterexamples])
        elif j >= 0:
            rep.add("plane/face genericity", INFO, f"N = {N} above exhaustive cap; assumed")
        z = build_z_complex(lc, flag, i)
    if notes:
        rep.section("notes", notes)
    census = sum(1 for s in lc.complex.simplices if lc.alt(s) >= n + i)
    rep.section("cells", [f"dim {d}: {c}" for d, c in z.by_dim().items()] or ["(empty)"])
    bad = dimension_lemma_violations(lc, z)
    rep.check("cells <-> i-effective simplices, dim = dim(sigma) - n - i", not bad,
              witnesses=[f"{' '.join(s)}: {why}" for s, why in bad],
              counts={"cells": len(z.cells), f"simplices with Alt >= {n + i}": census})
    if not z.empty:
        expected = k - i
        pm = pseudomanifold_check(z, expected)
        rep.check(f"pure of dimension {expected}", pm.pure,
                  witnesses=[f"{' '.join(c)} has dim {d}" for c, d in pm.impure])
        if i == 0:
            rep.check("pseudomanifold (each ridge in exactly two top cells)", not pm.bad_ridges,
                      witnesses=[f"{' '.join(c)} in {m} top cells" for c, m in pm.bad_ridges])
    if hypothesis:
        rep.check("Z_i nonempty", not z.empty, witnesses=[] if not z.empty else [f"t^{n + i} != 0 but no cells"])
    cnt = effective_counts(lc, i, hypothesis)
    verdict = cnt.verdict
    detail = f"{cnt.pairs} pairs of {cnt.dim}-simplices with Alt >= {n + i}; bound k+1-i = {cnt.bound}"
    if hypothesis is None:
        detail += " (height of t unknown; pass --t-height)"
    elif not hypothesis:
        detail += f" (t^{n + i} = 0, bound not asserted)"
    rep.add("effective simplex count", verdict, detail,
            witnesses=[] if verdict != FAIL else [f"only {cnt.pairs} pairs"],
            counts={"pairs": cnt.pairs, "bound": cnt.bound})
    if k == 0 and i == 0:
        odd = z.by_dim().keys() <= {0} and (len(z.cells) // 2) % 2 == 1
        rep.check("Z_0 is an odd number of point pairs", odd,
                  witnesses=[] if odd else [f"cells by dim {z.by_dim()}"])
    if i == 0:
        rep.add("Z_0 -> B injective in cohomology", OUT_OF_SCOPE)
        rep.add("pushforward H_*(Z_0) -> H_*(B) surjective", OUT_OF_SCOPE)
    else:
        rep.add("Z_i represents a nontrivial homology class", OUT_OF_SCOPE)
    return rep


def sw_report(space: SpaceClasses, powers: Optional[int] = None) -> Report:
    n, k, w = space.n, space.k, space.w
    M = powers if powers is not None else n + k + 1
    rep = Report(f"sw {space.label}")
    wbar = invert_total_class(w)
    j_max = max(M - n - 1, k - 1, 0)
    table = w_table_recurrence(w, n, j_max)
    rep.section("base", [f"H*(B) = {space.ring}", f"n = {n}, k = {k}", f"w = {w}", f"wbar = {wbar}"])
    rows = []
    for (i, j), val in sorted(table.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        rows.append(f"W[{i},{j}] = {val}")
    rep.section("W table (recurrence; Conner agrees unless flagged)", rows)
    bad = check_tables_agree(w, n, j_max)
    rep.check("recurrence == Conner formula", not bad,
              witnesses=[f"W[{i},{j}]: {table[(i, j)]} vs {w_conner(w, i, j, wbar)}" for i, j in bad])
    prod = w.total() * wbar.total()
    rep.check("w * wbar = 1", prod == space.ring.one(), witnesses=[f"product = {prod}"])
    exprs = t_powers(w, n, M)
    rep.section("powers of t", [f"t^{m} = {e}" for m, e in enumerate(exprs)])
    h = height_of_t(w, n, k)
    i = h - n
    implied = [f"height of t = {h}", f"every nice coloring has a simplex with Alt >= {h}"]
    if i <= k:
        implied.append(f"at least k+1-i = {k + 1 - i} pairs of {h}-simplices with Alt >= {h} (i = {i})")
    rep.section("implications", implied)

    pub = catalog.published(space.label)
    for m, coeffs in sorted(pub.identities.items()):
        want = catalog.expression(space, coeffs)
        got = exprs[m] if m < len(exprs) else t_powers(w, n, m)[m]
        rep.check(f"published t^{m} = {want}", got == want, witnesses=[f"computed t^{m} = {got}"])
    for m in pub.nonzero_powers:
        got = t_powers(w, n, m)[m]
        rep.check(f"published t^{m} != 0", bool(got), witnesses=[f"computed t^{m} = 0"])
    for (i2, j2), text in pub.w_entries.items():
        val = w_conner(w, i2, j2, wbar)
        rep.check(f"published W[{i2},{j2}] = {text}", val == space.ring.parse(text), witnesses=[f"computed {val}"])
    if pub.count_claims:
        rep.section("published claims (unverified)", pub.count_claims)
    return rep


def _emit(rep: Report, as_json: bool) -> int:
    sys.stdout.write(rep.to_json() + "\n" if as_json else rep.render())
    return rep.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kyfan", description="Ky Fan labelings of triangulated sphere bundles")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("validate", help="check the nice-coloring axioms")
    s.add_argument("path")

    s = sub.add_parser("alt-stats", help="alternating-number census")
    s.add_argument("path")
    s.add_argument("--paired", action="store_true", help="count antipodal pairs once")

    s = sub.add_parser("kyfan-check", help="parity of fully alternating n-simplices")
    s.add_argument("path")
    s.add_argument("--n", type=int, default=None, help="sphere dimension (default: dim of the complex)")

    s = sub.add_parser("zset", help="build Z_i and check dimension, purity and count bounds")
    s.add_argument("path")
    s.add_argument("--i", type=int, default=0)
    s.add_argument("--xseed", type=int, default=None, help="seed for random evaluation points (default x_i = i)")
    s.add_argument("--t-height", type=int, default=None, help="largest m with t^m != 0 (overrides the file)")

    s = sub.add_parser("sw", help="Stiefel-Whitney tables and powers of t")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--space", help="rp:m or cp:m")
    g.add_argument("--file", help="JSON ring description")
    s.add_argument("--powers", type=int, default=None, help="reduce t^m for m up to this")

    s = sub.add_parser("generate", help="write a fixture file")
    s.add_argument("--kind", required=True, help="crosspoly:n | trivial:BASE,n | klein:m | hopf | subdivided:n")
    s.add_argument("-o", "--output", default=None)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        if args.cmd == "validate":
            return _emit(validate_report(load(args.path)), args.json)
        if args.cmd == "alt-stats":
            return _emit(alt_stats_report(load(args.path), args.paired), args.json)
        if args.cmd == "kyfan-check":
            return _emit(kyfan_report(load(args.path), args.n), args.json)
        if args.cmd == "zset":
            return _emit(zset_report(load(args.path), args.i, args.xseed, args.t_height), args.json)
        if args.cmd == "sw":
            space = parse_space(args.space) if args.space else space_from_mapping(json.loads(Path(args.file).read_text()))
            return _emit(sw_report(space, args.powers), args.json)
        if args.cmd == "generate":
            lc = parse_kind(args.kind)
            if args.output:
                dump(lc, args.output)
            else:
                sys.stdout.write(dumps(lc))
            return 0
    except (FormatError, InputError, ValueError, KeyError, OSError, json.JSONDecodeError) as e:
        print(f"kyfan: error: {e}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
