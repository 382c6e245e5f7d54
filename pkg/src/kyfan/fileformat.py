"""Text format for labeled complexes.

::

    # comment
    [meta]
    n = 1
    k = 1
    N = 2            # optional, defaults to max |label|
    height = 1       # optional, largest m with t^m != 0
    status = nice    # or candidate
    note = free text
    [vertices]
    a
    b
    [involution]
    a b
    [labels]
    a 1
    b -1
    [facets]
    a c e

Sections may appear in any order.  :func:`dumps` writes the canonical form
(everything sorted), so ``dumps(loads(dumps(x))) == dumps(x)``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from .complex import BundleMeta, Coloring, Involution, LabeledComplex, SimplicialComplex

SECTIONS = ("meta", "vertices", "involution", "labels", "facets")
META_KEYS = ("n", "k", "N", "height", "status", "note")


class FormatError(ValueError):
    def __init__(self, line: Optional[int], msg: str):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line else msg)


def loads(text: str) -> LabeledComplex:
    section = None
    seen: dict[str, int] = {}
    meta: dict[str, str] = {}
    vertices: list[str] = []
    pairing: dict[str, str] = {}
    labels: dict[str, int] = {}
    facets: list[tuple[str, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            if not line.endswith("]") or line[1:-1].strip() not in SECTIONS:
                raise FormatError(lineno, f"unknown section header {line!r}")
            section = line[1:-1].strip()
            if section in seen:
                raise FormatError(lineno, f"section [{section}] repeated (first at line {seen[section]})")
            seen[section] = lineno
            continue
        if section is None:
            raise FormatError(lineno, "content before the first section header")
        if section == "meta":
            if "=" not in line:
                raise FormatError(lineno, "expected key = value")
            key, val = (s.strip() for s in line.split("=", 1))
            if key not in META_KEYS:
                raise FormatError(lineno, f"unknown meta key {key!r}")
            meta[key] = val
        elif section == "vertices":
            if len(line.split()) != 1:
                raise FormatError(lineno, "one vertex identifier per line")
            if line in vertices:
                raise FormatError(lineno, f"vertex {line!r} declared twice")
            vertices.append(line)
        elif section == "involution":
            toks = line.split()
            if len(toks) != 2:
                raise FormatError(lineno, "expected two vertex identifiers")
            a, b = toks
            for x, y in ((a, b), (b, a)):
                if pairing.get(x, y) != y:
                    raise FormatError(lineno, f"vertex {x!r} paired twice")
                pairing[x] = y
        elif section == "labels":
            toks = line.split()
            if len(toks) != 2:
                raise FormatError(lineno, "expected: vertex label")
            try:
                lab = int(toks[1])
            except ValueError:
                raise FormatError(lineno, f"label {toks[1]!r} is not an integer") from None
            if toks[0] in labels:
                raise FormatError(lineno, f"vertex {toks[0]!r} labeled twice")
            labels[toks[0]] = lab
        else:
            facets.append(tuple(line.split()))
    for s in SECTIONS:
        if s not in seen:
            raise FormatError(None, f"missing section [{s}] (truncated file?)")
    try:
        n, k = int(meta["n"]), int(meta["k"])
        N = int(meta["N"]) if "N" in meta else max((abs(x) for x in labels.values()), default=0)
        height = int(meta["height"]) if "height" in meta else None
    except KeyError as e:
        raise FormatError(seen["meta"], f"meta is missing {e.args[0]!r}") from None
    except ValueError as e:
        raise FormatError(seen["meta"], f"bad integer in meta: {e}") from None
    if n < 0 or k < 0:
        raise FormatError(seen["meta"], "n and k must be nonnegative")
    if not facets:
        raise FormatError(seen["facets"], "no facets")
    declared = set(vertices)
    for f in facets:
        for v in f:
            if v not in declared:
                raise FormatError(seen["facets"], f"facet {' '.join(f)} uses undeclared vertex {v!r}")
    lc = LabeledComplex(SimplicialComplex(facets, vertices=vertices), Involution(pairing),
                        Coloring(labels, N), BundleMeta(n, k), status=meta.get("status", "nice"),
                        note=meta.get("note", ""), height=height)
    return lc


def dumps(lc: LabeledComplex) -> str:
    out = ["# labeled complex", "[meta]", f"n = {lc.meta.n}", f"k = {lc.meta.k}", f"N = {lc.coloring.N}"]
    if lc.height is not None:
        out.append(f"height = {lc.height}")
    out.append(f"status = {lc.status}")
    if lc.note:
        out.append(f"note = {lc.note}")
    out.append("[vertices]")
    out.extend(str(v) for v in sorted(lc.complex.vertices))
    out.append("[involution]")
    out.extend(f"{a} {b}" for a, b in sorted(lc.involution.pairing.items()) if a < b)
    out.append("[labels]")
    out.extend(f"{v} {lc.coloring.labels[v]}" for v in sorted(lc.coloring.labels))
    out.append("[facets]")
    out.extend(" ".join(f) for f in sorted(lc.complex.facets))
    return "\n".join(out) + "\n"


def load(path) -> LabeledComplex:
    return loads(Path(path).read_text())


def dump(lc: LabeledComplex, path) -> None:
    p = Path(path)
    tmp = p.with_name(p.name + ".tmp")
    tmp.write_text(dumps(lc))
    tmp.replace(p)
