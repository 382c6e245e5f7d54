"""Fixture complexes with free involutions and nice colorings.

Cell complexes are given as ``{cell name: frozenset of original vertices}``
with the face order being inclusion of vertex sets; that is enough for the
product-of-simplices cells used here.  Barycentric subdivision turns such a
complex into a simplicial one whose vertices are the cells.
"""

from __future__ import annotations

import random
import re
from itertools import combinations, product
from pathlib import Path
from typing import Callable, Iterable, Mapping, Optional

from .complex import (BundleMeta, Coloring, Involution, LabeledComplex, SimplicialComplex,
                      validate)

CellComplex = Mapping[str, frozenset]


def vid(label: int) -> str:
    return f"{label:+d}"


def cross_polytope_sphere(n: int) -> LabeledComplex:
    """Boundary of the (n+1)-dimensional cross-polytope, tautologically colored."""
    if n < 0:
        raise ValueError("n must be >= 0")
    N = n + 1
    facets = [tuple(vid(s * (i + 1)) for i, s in enumerate(signs)) for signs in product((1, -1), repeat=N)]
    labels = {vid(s * i): s * i for i in range(1, N + 1) for s in (1, -1)}
    pairing = {v: vid(-lab) for v, lab in labels.items()}
    return LabeledComplex(SimplicialComplex(facets), Involution(pairing), Coloring(labels, N), BundleMeta(n, 0),
                          height=n)


def cross_polytope_cells(N: int) -> dict[str, frozenset]:
    """Every face of the boundary of the N-dimensional cross-polytope as a cell."""
    out = {}
    for face in faces_of_boundary(N):
        vs = frozenset(vid(x) for x in face)
        out[cell_name(vs)] = vs
    return out


def faces_of_boundary(N: int) -> list[tuple[int, ...]]:
    out = []
    for r in range(1, N + 1):
        for idx in combinations(range(1, N + 1), r):
            for signs in product((1, -1), repeat=r):
                out.append(tuple(s * i for s, i in zip(signs, idx)))
    return out


def cell_name(vs: Iterable[str]) -> str:
    return "|".join(sorted(vs))


def _dims_and_covers(cells: CellComplex):
    names = sorted(cells, key=lambda c: (len(cells[c]), c))
    below = {c: [d for d in names if cells[d] < cells[c]] for c in names}
    dim: dict[str, int] = {}
    for c in names:  # vertex sets grow along the order, so faces come first
        dim[c] = 1 + max((dim[d] for d in below[c]), default=-1)
    covers = {c: [d for d in below[c] if dim[d] == dim[c] - 1] for c in names}
    return dim, covers, below


def _maximal_chains(cells: CellComplex) -> list[tuple[str, ...]]:
    dim, covers, below = _dims_and_covers(cells)
    has_coface = {d for c in cells for d in below[c]}
    top = [c for c in cells if c not in has_coface]
    chains = []

    def walk(c, acc):
        if not covers[c]:
            chains.append(tuple(acc + [c]))
            return
        for d in covers[c]:
            walk(d, acc + [c])

    for c in sorted(top):
        walk(c, [])
    return chains


def smallest_abs(colors: Iterable[int]) -> int:
    return min(colors, key=lambda x: (abs(x), -x))


def barycentric_equivariant(cells: CellComplex, pairing: Mapping[str, str],
                            carrier_colors: Mapping[str, Iterable[int]],
                            choose: Callable[[list[int]], int] = smallest_abs,
                            meta: Optional[BundleMeta] = None, N: Optional[int] = None) -> LabeledComplex:
    """Order complex of the face poset, colored from each cell's carrier colors.

    One color is chosen per involution orbit of cells and negated on the
    partner cell.  The coloring is not assumed to be nice; callers validate.
    """
    by_set = {vs: c for c, vs in cells.items()}
    cell_pair = {}
    for c, vs in cells.items():
        img = frozenset(pairing[v] for v in vs)
        if img not in by_set:
            raise ValueError(f"image of cell {c} is not a cell")
        if by_set[img] == c:
            raise ValueError(f"cell {c} is invariant under the involution")
        cell_pair[c] = by_set[img]
    labels = {}
    for c in sorted(cells):
        if c in labels:
            continue
        options = sorted(set(carrier_colors[c]))
        if not options:
            raise ValueError(f"cell {c} has no available colors")
        lab = choose(options)
        labels[c] = lab
        labels[cell_pair[c]] = -lab
    facets = _maximal_chains(cells)
    if N is None:
        N = max(abs(x) for x in labels.values())
    return LabeledComplex(SimplicialComplex(facets, vertices=cells), Involution(cell_pair),
                          Coloring(labels, N), meta or BundleMeta(0, 0))


def random_choice(rng: random.Random) -> Callable[[list[int]], int]:
    return lambda options: rng.choice(options)


def subdivided_cross_polytope(n: int, rng: Optional[random.Random] = None) -> LabeledComplex:
    """Barycentric subdivision of the boundary of the (n+1)-cross-polytope.

    With ``rng`` each barycenter gets a random color of its carrier face.
    """
    N = n + 1
    cells = cross_polytope_cells(N)
    pairing = {vid(s * i): vid(-s * i) for i in range(1, N + 1) for s in (1, -1)}
    colors = {c: [int(v) for v in vs] for c, vs in cells.items()}
    choose = random_choice(rng) if rng is not None else smallest_abs
    lc = barycentric_equivariant(cells, pairing, colors, choose, BundleMeta(n, 0), N)
    lc.height = n
    return lc


# --- bases and products -------------------------------------------------------

def builtin_base(name: str) -> SimplicialComplex:
    """``point``, ``circleM`` (an M-gon) or ``sphereD`` (boundary of a (D+1)-simplex)."""
    if name == "point":
        return SimplicialComplex([("p",)])
    m = re.fullmatch(r"circle(\d+)", name)
    if m:
        M = int(m.group(1))
        if M < 3:
            raise ValueError("a triangulated circle needs at least 3 vertices")
        return SimplicialComplex([(f"b{s}", f"b{(s + 1) % M}") for s in range(M)])
    m = re.fullmatch(r"sphere(\d+)", name)
    if m:
        D = int(m.group(1))
        vs = [f"b{s}" for s in range(D + 2)]
        return SimplicialComplex(list(combinations(vs, D + 1)))
    raise ValueError(f"unknown base {name!r}")


def load_base(spec: str) -> SimplicialComplex:
    """A builtin base name or a path to a file with one facet per line."""
    p = Path(spec)
    if p.exists():
        facets = [tuple(line.split()) for line in p.read_text().splitlines()
                  if line.strip() and not line.lstrip().startswith("#")]
        return SimplicialComplex(facets)
    return builtin_base(spec)


def trivial_bundle(base: SimplicialComplex, n: int) -> LabeledComplex:
    """``base x S^n`` with ``S^n`` the cross-polytope boundary, subdivided.

    Cells are products of a base simplex and a fiber face; original vertex
    ``b:l`` carries the fiber label ``l``.  Only colors ``+-1..+-(n+1)`` occur.
    """
    N = n + 1
    cells = {}
    for beta in sorted(base.simplices):
        for phi in faces_of_boundary(N):
            vs = frozenset(f"{b}:{vid(x)}" for b in beta for x in phi)
            cells[cell_name(vs)] = vs
    pairing = {}
    for b in base.vertices:
        for i in range(1, N + 1):
            for s in (1, -1):
                pairing[f"{b}:{vid(s * i)}"] = f"{b}:{vid(-s * i)}"
    colors = {c: [int(v.rsplit(":", 1)[1]) for v in vs] for c, vs in cells.items()}
    lc = barycentric_equivariant(cells, pairing, colors, smallest_abs, BundleMeta(n, base.dim), N)
    lc.height = n  # trivial bundle: all w_i vanish, so t^{n+1} = 0
    return lc


def prism_multiplicity(a: int, b: int) -> int:
    """Facets in the barycentric subdivision of a product of an a- and a b-simplex."""
    from math import factorial

    return (a + 1) * (b + 1) * factorial(a + b)


# --- twisted circle bundle ----------------------------------------------------

def klein_flip(label: int) -> int:
    return label if abs(label) == 1 else -label


def klein_cells(m: int) -> tuple[dict[str, frozenset], dict[str, str]]:
    """Mapping torus of the square over an m-gon, glued by ``+-2 -> -+2``."""
    if m < 3:
        raise ValueError("need at least 3 base segments")
    fiber = [1, -1, 2, -2]
    fedges = [(f, g) for f, g in combinations(fiber, 2) if abs(f) != abs(g)]

    def v(s, f):
        return f"b{s}:{vid(f)}"

    def nxt(s, f):
        return (s + 1, f) if s < m - 1 else (0, klein_flip(f))

    sets = []
    for s in range(m):
        for f in fiber:
            sets.append({v(s, f)})
            sets.append({v(s, f), v(*nxt(s, f))})
        for f, g in fedges:
            sets.append({v(s, f), v(s, g)})
            sets.append({v(s, f), v(s, g), v(*nxt(s, f)), v(*nxt(s, g))})
    cells = {cell_name(vs): frozenset(vs) for vs in sets}
    pairing = {v(s, f): v(s, -f) for s in range(m) for f in fiber}
    return cells, pairing


def klein_bundle(m: int = 3, colors: int = 3, seed: int = 0) -> LabeledComplex:
    """Nontrivial circle bundle over a circle (total space a Klein bottle).

    The deterministic barycentric coloring clashes along the glued segment,
    so a nice coloring with ``colors`` colors is searched for; if none is
    found the heuristic coloring is returned with status ``candidate``.
    """
    cells, pairing = klein_cells(m)
    carrier = {c: [int(x.rsplit(":", 1)[1]) for x in vs] for c, vs in cells.items()}
    lc = barycentric_equivariant(cells, pairing, carrier, smallest_abs, BundleMeta(1, 1), 2)
    lc.height = 2  # w_1 != 0 gives t^2 = w_1 t != 0
    if validate(lc.complex, lc.involution, lc.coloring).ok:
        return lc
    found = search_nice_coloring(lc.complex, lc.involution, colors, seed=seed)
    if found is not None:
        lc.coloring = found
        lc.note = f"twisted fixture; coloring found by search with {colors} colors (seed {seed})"
        return lc
    lc.status = "candidate"
    lc.note = "twisted fixture; heuristic coloring violates the axioms"
    return lc


def hopf_s3() -> LabeledComplex:
    """Total space of the Hopf bundle: the 3-sphere as the boundary of the 4-cross-polytope."""
    lc = cross_polytope_sphere(3)
    lc.meta = BundleMeta(1, 2)
    lc.height = 3  # t^3 = w_2 t != 0; the quotient is RP^3
    lc.note = "Hopf bundle over S^2; total space S^3"
    return lc


# --- coloring search ----------------------------------------------------------

class SearchExhausted(Exception):
    pass


def search_nice_coloring(cx: SimplicialComplex, inv: Involution, N: int, seed: Optional[int] = None,
                         max_nodes: int = 500_000) -> Optional[Coloring]:
    """Backtracking over involution orbits with forward checking.

    Returns ``None`` when no nice coloring with labels in ``+-1..+-N`` exists.
    Raises :class:`SearchExhausted` if the node budget runs out first.
    """
    rng = random.Random(seed) if seed is not None else None
    reps = sorted(v for v in cx.vertices if v <= inv(v))
    rep_of = {}
    for r in reps:
        rep_of[r] = (r, 1)
        rep_of[inv(r)] = (r, -1)
    nb = cx.neighbours
    # constraint graph on orbits: (r, sign_r) adjacent to (q, sign_q) forbids
    # sign_r * L_r == -(sign_q * L_q)
    links: dict = {r: [] for r in reps}
    for a, b in cx.edges:
        ra, sa = rep_of[a]
        rb, sb = rep_of[b]
        if ra == rb:
            return None  # an edge joins antipodes: impossible for any labeling
        links[ra].append((sa, rb, sb))
        links[rb].append((sb, ra, sa))
    domains = {r: {x for i in range(1, N + 1) for x in (i, -i)} for r in reps}
    assign: dict = {}
    nodes = 0

    def order(options):
        opts = sorted(options, key=lambda x: (abs(x), -x))
        if rng is not None:
            rng.shuffle(opts)
        return opts

    def solve() -> bool:
        nonlocal nodes
        if len(assign) == len(reps):
            return True
        nodes += 1
        if nodes > max_nodes:
            raise SearchExhausted
        r = min((q for q in reps if q not in assign), key=lambda q: (len(domains[q]), q))
        for lab in order(domains[r]):
            removed = []
            ok = True
            for sa, q, sq in links[r]:
                if q in assign:
                    continue
                bad = -(sa * lab) * sq  # q-label that would clash
                if bad in domains[q]:
                    domains[q].discard(bad)
                    removed.append((q, bad))
                    if not domains[q]:
                        ok = False
                        break
            if ok:
                assign[r] = lab
                if solve():
                    return True
                del assign[r]
            for q, bad in removed:
                domains[q].add(bad)
        return False

    if not solve():
        return None
    labels = {}
    for r, lab in assign.items():
        labels[r] = lab
        labels[inv(r)] = -lab
    return Coloring(labels, N)


def parse_kind(kind: str) -> LabeledComplex:
    """``crosspoly:n``, ``trivial:BASE,n``, ``klein:m``, ``hopf``, ``subdivided:n``."""
    if kind == "hopf":
        return hopf_s3()
    m = re.fullmatch(r"crosspoly:(\d+)", kind)
    if m:
        return cross_polytope_sphere(int(m.group(1)))
    m = re.fullmatch(r"subdivided:(\d+)", kind)
    if m:
        return subdivided_cross_polytope(int(m.group(1)))
    m = re.fullmatch(r"klein:(\d+)", kind)
    if m:
        return klein_bundle(int(m.group(1)))
    m = re.fullmatch(r"trivial:([^,]+),(\d+)", kind)
    if m:
        return trivial_bundle(load_base(m.group(1)), int(m.group(2)))
    raise ValueError(f"unknown fixture kind {kind!r}")
