"""Nested generic planes ``e_j = Ker(M_j)`` in R^N and their cross-polytope faces.

``M_j`` is the Vandermonde-type matrix with rows ``(x_1^p, ..., x_N^p)`` for
``p = 0..j``.  Faces of the cross-polytope are sign vectors; the relative
interior of a face meets ``e_j`` iff some kernel vector has exactly that sign
vector, which is decided by exact Fourier-Motzkin elimination.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .complex import alt_number
from .exact import cone_point, det, rank

SignVector = tuple[int, ...]

DEFAULT_EXHAUSTIVE_MAX_N = 6


def exhaustive_cap() -> int:
    """Largest N for which 3^N face enumerations are run (env ``KYFAN_EXHAUSTIVE_MAX_N``)."""
    return int(os.environ.get("KYFAN_EXHAUSTIVE_MAX_N", DEFAULT_EXHAUSTIVE_MAX_N))


@dataclass(frozen=True)
class GenericFlag:
    N: int
    x: tuple[Fraction, ...]
    j_max: int
    condition3: dict = field(default_factory=dict, compare=False)

    def matrix(self, j: int) -> list[list[Fraction]]:
        if not 0 <= j <= self.j_max:
            raise ValueError(f"level {j} outside 0..{self.j_max}")
        return vandermonde(self.x, j)

    def column(self, j: int, idx: int) -> tuple[Fraction, ...]:
        return tuple(self.x[idx] ** p for p in range(j + 1))


def vandermonde(x: Sequence[Fraction], j: int) -> list[list[Fraction]]:
    return [[xi ** p for xi in x] for p in range(j + 1)]


def build_flag(N: int, j_max: int, x: Optional[Iterable] = None, verify: Optional[bool] = None) -> GenericFlag:
    """Flag with exact rational evaluation points (default ``x_i = i``).

    When ``verify`` is left as ``None`` the equivalence ``meets <=> Alt >= j+1``
    is checked exhaustively for every level if ``N`` is within the cap.
    """
    xs = tuple(Fraction(v) for v in (x if x is not None else range(1, N + 1)))
    if len(xs) != N:
        raise ValueError(f"need {N} evaluation points, got {len(xs)}")
    if any(v <= 0 for v in xs) or any(a >= b for a, b in zip(xs, xs[1:])):
        raise ValueError("evaluation points must be positive and strictly increasing")
    if not 0 <= j_max <= N - 2:
        raise ValueError(f"j_max = {j_max} must lie in 0..N-2 = {N - 2}")
    flag = GenericFlag(N, xs, j_max)
    if verify is None:
        verify = N <= exhaustive_cap()
    if verify:
        for j in range(j_max + 1):
            flag.condition3[j] = verify_condition3(flag, j)
    return flag


def random_points(N: int, seed: int) -> tuple[Fraction, ...]:
    """Strictly increasing positive rationals drawn from a seeded RNG."""
    import random

    rng = random.Random(seed)
    pts, cur = [], Fraction(0)
    for _ in range(N):
        cur += Fraction(rng.randint(1, 9), rng.randint(1, 5))
        pts.append(cur)
    return tuple(pts)


def cramer_dependency(columns: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """``mu_i = (-1)^i det(A_i)`` (1-based ``i``), ``A_i`` = columns without ``a_i``.

    ``sum_i mu_i a_i = 0`` for any ``d+1`` columns of height ``d``.
    """
    cols = [tuple(Fraction(v) for v in c) for c in columns]
    d = len(cols) - 1
    if any(len(c) != d for c in cols):
        raise ValueError(f"need d+1 columns of height d, got {len(cols)} columns")
    mu = []
    for i in range(d + 1):
        rest = cols[:i] + cols[i + 1:]
        a_i = [[rest[c][r] for c in range(d)] for r in range(d)] if d else []
        mu.append((-1) ** (i + 1) * (det(a_i) if d else Fraction(1)))
    return tuple(mu)


def sign(q) -> int:
    return (q > 0) - (q < 0)


def sign_alt(face: SignVector) -> int:
    """Sign changes along the support, ordered by index."""
    return alt_number((i + 1) * s for i, s in enumerate(face) if s)


def face_meets_plane(face: SignVector, flag: GenericFlag, j: int) -> bool:
    """Does ``Ker(M_j)`` contain a vector with sign vector exactly ``face``?"""
    return kernel_point(face, flag, j) is not None


def kernel_point(face: SignVector, flag: GenericFlag, j: int) -> Optional[tuple[Fraction, ...]]:
    support = [i for i, s in enumerate(face) if s]
    if len(support) < j + 2:
        return None
    # substitute mu_i = eta_i * y_i with y_i >= 1
    eq = [[face[i] * flag.x[i] ** p for i in support] for p in range(j + 1)]
    y = cone_point(eq, len(support), positive=range(len(support)))
    if y is None:
        return None
    mu = [Fraction(0)] * flag.N
    for pos, i in enumerate(support):
        mu[i] = face[i] * y[pos]
    return tuple(mu)


def closed_face_meets_plane(face: SignVector, flag: GenericFlag, j: int) -> bool:
    return any(face_meets_plane(sub, flag, j) for sub in subfaces(face))


def subfaces(face: SignVector) -> Iterable[SignVector]:
    support = [i for i, s in enumerate(face) if s]
    for r in range(1, len(support) + 1):
        for keep in combinations(support, r):
            yield tuple(face[i] if i in keep else 0 for i in range(len(face)))


def all_faces(N: int) -> Iterable[SignVector]:
    for v in product((-1, 0, 1), repeat=N):
        if any(v):
            yield v


@dataclass
class Condition3Result:
    N: int
    j: int
    faces_checked: int
    counterexamples: list[tuple[SignVector, int, bool]]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_condition3(flag: GenericFlag, j: int) -> Condition3Result:
    """Exhaustively compare ``face_meets_plane`` with ``Alt(face) >= j+1``."""
    if flag.N > exhaustive_cap():
        raise ValueError(f"N = {flag.N} exceeds exhaustive cap {exhaustive_cap()}")
    return _verify_condition3(flag.x, j)


@lru_cache(maxsize=None)
def _verify_condition3(x: tuple[Fraction, ...], j: int) -> Condition3Result:
    flag = GenericFlag(len(x), x, max(j, 0))
    bad, count = [], 0
    for face in all_faces(len(x)):
        count += 1
        meets = face_meets_plane(face, flag, j)
        a = sign_alt(face)
        if meets != (a >= j + 1):
            bad.append((face, a, meets))
    return Condition3Result(len(x), j, count, bad)


def circuits(flag: GenericFlag, j: int) -> dict[tuple[int, ...], tuple[Fraction, ...]]:
    """Minimal-support dependencies of the columns of ``M_j``, via Cramer."""
    out = {}
    for idx in combinations(range(flag.N), j + 2):
        mu = cramer_dependency([flag.column(j, i) for i in idx])
        out[idx] = mu
    return out


def kernel_rank(flag: GenericFlag, j: int) -> int:
    return rank(flag.matrix(j))
