"""Simplicial complexes with a free involution and an antipodal vertex coloring.

Simplices are sorted tuples of vertex identifiers.  The complex stores its
facets and enumerates the full face set lazily.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Mapping, Optional, Sequence

Vertex = Hashable
Simplex = tuple


class InputError(ValueError):
    """Malformed input: unknown vertex identifiers and the like."""


def simplex(vs: Iterable[Vertex]) -> Simplex:
    return tuple(sorted(set(vs)))


class SimplicialComplex:
    def __init__(self, facets: Iterable[Iterable[Vertex]], vertices: Optional[Iterable[Vertex]] = None):
        self.raw_facets = [tuple(f) for f in facets]
        fs = {simplex(f) for f in self.raw_facets}
        self.facets: frozenset[Simplex] = frozenset(fs)
        in_facets = {v for f in fs for v in f}
        self.vertices: tuple[Vertex, ...] = tuple(sorted(set(vertices) | in_facets if vertices is not None else in_facets))

    @cached_property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def simplices(self) -> frozenset[Simplex]:
        out = set()
        for f in self.facets:
            for r in range(1, len(f) + 1):
                out.update(combinations(f, r))
        return frozenset(out)

    @cached_property
    def by_dim(self) -> dict[int, list[Simplex]]:
        out: dict[int, list[Simplex]] = defaultdict(list)
        for s in self.simplices:
            out[len(s) - 1].append(s)
        return {d: sorted(v) for d, v in sorted(out.items())}

    @cached_property
    def edges(self) -> list[Simplex]:
        return self.by_dim.get(1, [])

    @cached_property
    def neighbours(self) -> dict[Vertex, set[Vertex]]:
        nb: dict[Vertex, set[Vertex]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return nb

    @cached_property
    def cofacets(self) -> dict[Simplex, list[Simplex]]:
        """Simplex -> simplices of one dimension higher that contain it."""
        out: dict[Simplex, list[Simplex]] = defaultdict(list)
        for s in self.simplices:
            if len(s) > 1:
                for t in combinations(s, len(s) - 1):
                    out[t].append(s)
        return out

    def __contains__(self, s) -> bool:
        return simplex(s) in self.simplices

    def f_vector(self) -> list[int]:
        return [len(self.by_dim.get(d, [])) for d in range(self.dim + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.f_vector()))

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, f={self.f_vector()})"


@dataclass(frozen=True)
class Involution:
    pairing: Mapping[Vertex, Vertex]

    def __call__(self, v: Vertex) -> Vertex:
        return self.pairing[v]

    def image(self, s: Iterable[Vertex]) -> Simplex:
        return simplex(self.pairing[v] for v in s)


@dataclass(frozen=True)
class Coloring:
    labels: Mapping[Vertex, int]
    N: int

    def __post_init__(self):
        if self.N is None:
            object.__setattr__(self, "N", max((abs(x) for x in self.labels.values()), default=0))

    def __getitem__(self, v: Vertex) -> int:
        return self.labels[v]

    def of(self, s: Iterable[Vertex]) -> list[int]:
        return [self.labels[v] for v in s]


@dataclass(frozen=True)
class BundleMeta:
    n: int
    k: int


@dataclass
class LabeledComplex:
    complex: SimplicialComplex
    involution: Involution
    coloring: Coloring
    meta: BundleMeta
    status: str = "nice"  # or "candidate": coloring not known to satisfy the axioms
    note: str = ""
    height: Optional[int] = None  # largest m with t^m != 0 in H*(E/Z2), when known

    def alt(self, s: Iterable[Vertex]) -> int:
        return alt_number(self.coloring.of(s))


# --- validation --------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    detail: str = ""

    def __str__(self):
        return f"{self.axiom}: {self.witness}" + (f" ({self.detail})" if self.detail else "")


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def add(self, axiom: str, witness, detail: str = ""):
        self.violations.append(Violation(axiom, tuple(witness) if isinstance(witness, (list, tuple)) else (witness,), detail))


def validate(cx: SimplicialComplex, inv: Involution, col: Optional[Coloring]) -> ValidationReport:
    """Check facet structure, involution and (if given) the coloring axioms.

    Raises :class:`InputError` when facets, pairing or labels mention vertices
    that are not declared.
    """
    known = set(cx.vertices)
    rep = ValidationReport()
    unknown = [v for v in inv.pairing if v not in known] + [v for v in inv.pairing.values() if v not in known]
    if col is not None:
        unknown += [v for v in col.labels if v not in known]
    if unknown:
        raise InputError(f"unknown vertex identifiers: {sorted(set(map(str, unknown)))}")

    # facets
    for f in cx.raw_facets:
        if not f:
            rep.add("facet-nonempty", (), "empty facet")
        elif len(set(f)) != len(f):
            rep.add("facet-repeated-vertex", f)
    for f in cx.facets:
        for g in cx.facets:
            if f != g and set(f) < set(g):
                rep.add("facet-maximal", f, f"contained in {g}")
                break
    used = {v for f in cx.facets for v in f}
    for v in cx.vertices:
        if v not in used:
            rep.add("vertex-in-facet", (v,), "vertex lies in no facet")

    # involution
    for v in cx.vertices:
        if v not in inv.pairing:
            rep.add("involution-defined", (v,), "vertex has no partner")
            continue
        w = inv.pairing[v]
        if w == v:
            rep.add("involution-free", (v,), "fixed vertex")
        elif inv.pairing.get(w) != v:
            rep.add("involution-order-two", (v, w), f"inv(inv({v})) = {inv.pairing.get(w)}")
    if "involution-defined" not in rep.axioms():
        for f in sorted(cx.facets):
            if inv.image(f) not in cx.simplices:
                rep.add("involution-simplicial", f, f"image {inv.image(f)} is not a simplex")
        for e in cx.edges:
            if inv.image(e) == e:
                rep.add("involution-free", e, "invariant simplex")

    if col is None:
        return rep
    for v in cx.vertices:
        if v not in col.labels:
            rep.add("label-defined", (v,))
            continue
        lab = col.labels[v]
        if lab == 0 or abs(lab) > col.N:
            rep.add("label-range", (v,), f"label {lab} outside +-1..+-{col.N}")
        w = inv.pairing.get(v)
        if w is not None and w in col.labels and col.labels[w] != -lab:
            rep.add("antipodality", (v,), f"label {lab}, partner {w} has {col.labels[w]}")
    for a, b in cx.edges:
        if a in col.labels and b in col.labels and col.labels[a] == -col.labels[b]:
            rep.add("antipodal-edge", (a, b), f"labels {col.labels[a]}, {col.labels[b]}")
    return rep


# --- alternating numbers -----------------------------------------------------

def alt_number(labels: Iterable[int]) -> int:
    """Sign changes of the labels ordered by absolute value.

    >>> alt_number([-1, 2, 2, 3, -4]), alt_number([-1, 2, -3, 4])
    (2, 3)
    """
    seq = sorted(set(labels), key=lambda x: (abs(x), x))
    return sum(1 for a, b in zip(seq, seq[1:]) if (a > 0) != (b > 0))


def lambda_image(s: Iterable[Vertex], col: Coloring) -> frozenset[int]:
    return frozenset(col.of(s))


def sign_vector(face: Iterable[int], N: int) -> tuple[int, ...]:
    """Signed index set -> vector in {-1, 0, 1}^N."""
    out = [0] * N
    for lab in face:
        out[abs(lab) - 1] = 1 if lab > 0 else -1
    return tuple(out)


def pair_representatives(inv: Involution, simplices: Iterable[Simplex]) -> list[Simplex]:
    """One simplex per involution orbit (the lexicographically smaller one)."""
    return [s for s in simplices if s <= inv.image(s)]


def alt_histogram(lc: LabeledComplex, paired: bool = False) -> dict[tuple[int, int], int]:
    """``(dimension, Alt) -> count`` over all nonempty simplices."""
    sims: Iterable[Simplex] = lc.complex.simplices
    if paired:
        sims = pair_representatives(lc.involution, sims)
    return dict(sorted(Counter((len(s) - 1, lc.alt(s)) for s in sims).items()))


# --- Ky Fan ------------------------------------------------------------------

@dataclass
class KyFanResult:
    parity: int
    alpha: dict[tuple[int, ...], int]
    diagnostic: str = ""

    @property
    def total(self) -> int:
        return sum(self.alpha.values())


def is_alternating_pattern(labels: Sequence[int]) -> bool:
    """``k_1 < ... < k_m`` in absolute value with signs ``+, -, +, ...``."""
    seq = sorted(labels, key=abs)
    if len({abs(x) for x in seq}) != len(seq):
        return False
    return all((x > 0) == (p % 2 == 0) for p, x in enumerate(seq))


def kyfan_parity(lc: LabeledComplex, n: int) -> KyFanResult:
    """Count n-simplices bijectively colored by ``k_1, -k_2, k_3, ...``.

    Patterns must start with a positive label, so exactly one member of each
    antipodal pair of fully alternating simplices is counted.
    """
    N = lc.coloring.N
    if n + 1 > N:
        return KyFanResult(0, {}, f"n+1 = {n + 1} > N = {N}: no fully alternating n-simplex can exist")
    alpha: Counter = Counter()
    for s in lc.complex.by_dim.get(n, []):
        labs = lc.coloring.of(s)
        if len(set(labs)) == n + 1 and is_alternating_pattern(labs):
            alpha[tuple(sorted(labs, key=abs))] += 1
    alpha_d = dict(sorted(alpha.items(), key=lambda kv: [abs(x) for x in kv[0]]))
    return KyFanResult(sum(alpha_d.values()) % 2, alpha_d)


def iter_simplices_with_alt(lc: LabeledComplex, at_least: int, dim: Optional[int] = None) -> Iterator[Simplex]:
    pool = lc.complex.by_dim.get(dim, []) if dim is not None else sorted(lc.complex.simplices)
    for s in pool:
        if lc.alt(s) >= at_least:
            yield s


def max_alt(lc: LabeledComplex) -> int:
    return max((lc.alt(f) for f in lc.complex.facets), default=0)
