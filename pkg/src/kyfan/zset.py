"""Zero sets ``Z_i = Lambda^{-1}(e_{n+i-1})`` as cell complexes.

For a carrier simplex ``sigma`` the piece ``Z_i(sigma)`` is the polytope of
barycentric coordinates ``b >= 0, sum b = 1`` with
``M_j . sum_v b_v sgn(l_v) unit_{|l_v|} = 0`` (``j = n+i-1``).  Its affine
dimension is ``|T| - 1 - rank(L_T)`` where ``T`` is the set of coordinates that
can be positive; the carrier indexes a cell of ``Z_i`` when ``T`` is all of
``sigma`` (the open simplex meets the preimage).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .complex import Coloring, LabeledComplex, Simplex, alt_number, pair_representatives
from .exact import cone_point, rank
from .flag import GenericFlag


@dataclass(frozen=True)
class ZCell:
    carrier: Simplex
    level: int
    dim: int
    support: tuple           # vertices that are positive somewhere on the piece
    point: tuple[Fraction, ...]  # barycentric coordinates, ordered like carrier

    @property
    def interior(self) -> bool:
        return len(self.support) == len(self.carrier)


def is_effective(s, col: Coloring, n: int, i: int) -> bool:
    return alt_number(col.of(s)) >= n + i


def signed_columns(s: Simplex, col: Coloring, flag: GenericFlag, j: int) -> list[list[Fraction]]:
    """Rows ``p = 0..j`` of the map ``b -> M_j Lambda(b)`` restricted to ``s``."""
    rows = []
    for p in range(j + 1):
        row = []
        for v in s:
            lab = col[v]
            row.append((1 if lab > 0 else -1) * flag.x[abs(lab) - 1] ** p)
        rows.append(row)
    return rows


def zcell_of(s: Simplex, col: Coloring, flag: GenericFlag, n: int, i: int) -> Optional[ZCell]:
    """The closed piece ``Z_i(s)``; ``None`` when it is empty."""
    j = n + i - 1
    if j > flag.j_max:
        raise ValueError(f"flag built up to level {flag.j_max}, need {j}")
    L = signed_columns(s, col, flag, j)
    m = len(s)
    witnesses = {}
    for idx in range(m):
        pt = cone_point(L, m, positive=[idx], nonneg=[t for t in range(m) if t != idx])
        if pt is not None:
            witnesses[idx] = pt
    if not witnesses:
        return None
    T = sorted(witnesses)
    acc = [sum((witnesses[t][c] for t in T), Fraction(0)) for c in range(m)]
    total = sum(acc)
    point = tuple(a / total for a in acc)
    sub = [[row[t] for t in T] for row in L]
    d = len(T) - 1 - (rank(sub) if sub else 0)
    return ZCell(tuple(s), i, d, tuple(s[t] for t in T), point)


@dataclass
class ZComplex:
    level: int
    n: int
    k: int
    cells: dict[Simplex, ZCell]
    closed_only: dict[Simplex, ZCell] = field(default_factory=dict)

    def by_dim(self) -> dict[int, int]:
        return dict(sorted(Counter(c.dim for c in self.cells.values()).items()))

    @property
    def empty(self) -> bool:
        return not self.cells

    def top_dim(self) -> int:
        return max((c.dim for c in self.cells.values()), default=-1)

    def proper_faces(self, carrier: Simplex) -> list[Simplex]:
        out = []
        for r in range(1, len(carrier)):
            out.extend(t for t in combinations(carrier, r) if t in self.cells)
        return out

    def maximal_cells(self) -> list[Simplex]:
        covered = set()
        for c in self.cells:
            covered.update(self.proper_faces(c))
        return sorted(c for c in self.cells if c not in covered)

    def incidence(self) -> list[tuple[Simplex, Simplex]]:
        """Covering pairs ``(face, coface)`` of cells, i.e. codimension one."""
        return sorted((t, c) for c in self.cells for t in self.proper_faces(c) if len(t) == len(c) - 1)


def build_z_complex(lc: LabeledComplex, flag: GenericFlag, i: int) -> ZComplex:
    """Cells are the carriers whose open simplex meets the preimage.

    Membership is decided by the linear system alone; Alt is not consulted,
    so the bijection with ``i``-effective simplices is something to check.
    """
    n = lc.meta.n
    cells, closed = {}, {}
    for s in sorted(lc.complex.simplices):
        cell = zcell_of(s, lc.coloring, flag, n, i)
        if cell is None:
            continue
        if cell.interior:
            cells[s] = cell
        else:
            closed[s] = cell
    return ZComplex(i, n, lc.meta.k, cells, closed)


def empty_z_complex(lc: LabeledComplex, i: int) -> ZComplex:
    return ZComplex(i, lc.meta.n, lc.meta.k, {})


@dataclass
class PseudomanifoldReport:
    expected_dim: int
    impure: list[tuple[Simplex, int]]
    bad_ridges: list[tuple[Simplex, int]]

    @property
    def pure(self) -> bool:
        return not self.impure

    @property
    def ok(self) -> bool:
        return not self.impure and not self.bad_ridges


def pseudomanifold_check(z: ZComplex, expected_dim: int) -> PseudomanifoldReport:
    """Purity plus: every cell of dim ``d-1`` lies in exactly two ``d``-cells."""
    impure = [(c, z.cells[c].dim) for c in z.maximal_cells() if z.cells[c].dim != expected_dim]
    cofaces: Counter = Counter()
    for c, cell in z.cells.items():
        if cell.dim == expected_dim:
            for t in combinations(c, len(c) - 1):
                if t in z.cells and z.cells[t].dim == expected_dim - 1:
                    cofaces[t] += 1
    bad = [(t, cofaces[t]) for t, cell in sorted(z.cells.items())
           if cell.dim == expected_dim - 1 and cofaces[t] != 2]
    return PseudomanifoldReport(expected_dim, impure, bad)


def dimension_lemma_violations(lc: LabeledComplex, z: ZComplex) -> list[tuple[Simplex, str]]:
    """Disagreements between the cell set, the Alt census and the dimension formula."""
    n, i = lc.meta.n, z.level
    bad = []
    for s in sorted(lc.complex.simplices):
        eff = lc.alt(s) >= n + i
        cell = z.cells.get(s)
        if eff and cell is None:
            bad.append((s, "effective but no cell"))
        elif not eff and cell is not None:
            bad.append((s, "cell on a non-effective carrier"))
        elif cell is not None and cell.dim != len(s) - 1 - n - i:
            bad.append((s, f"cell dim {cell.dim} != {len(s) - 1 - n - i}"))
        if not eff and s in z.closed_only:
            bad.append((s, "closed piece on a carrier with no effective face"))
    return bad


@dataclass
class EffectiveCount:
    level: int
    dim: int
    pairs: int
    bound: int
    hypothesis: Optional[bool]
    witnesses: list[Simplex]

    @property
    def verdict(self) -> str:
        if not self.hypothesis:
            return "not asserted"
        return "pass" if self.pairs >= self.bound else "fail"


def effective_counts(lc: LabeledComplex, i: int, hypothesis: Optional[bool] = None) -> EffectiveCount:
    """Antipodal pairs of ``(n+i)``-simplices with ``Alt >= n+i``.

    ``hypothesis`` says whether ``t^{n+i} != 0``; the lower bound ``k+1-i`` is
    only asserted when it is true.
    """
    n, k = lc.meta.n, lc.meta.k
    d = n + i
    eff = [s for s in lc.complex.by_dim.get(d, []) if lc.alt(s) >= d]
    reps = pair_representatives(lc.involution, eff)
    return EffectiveCount(i, d, len(reps), k + 1 - i, hypothesis, reps)
