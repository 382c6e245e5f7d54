"""Exact rational linear algebra over :class:`fractions.Fraction`.

Small dense routines (row reduction, rank, determinant, kernel basis) and a
Fourier-Motzkin solver for systems ``A y >= b``.  Everything here is exact; no
floating point is ever introduced, so sign decisions are reliable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vector = tuple[Fraction, ...]
Matrix = list[list[Fraction]]


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Iterable[Iterable]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = as_matrix(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Iterable[Iterable]) -> int:
    return len(rref(rows)[1])


def det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant of a square matrix by fraction-exact elimination."""
    m = as_matrix(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        lead = m[c][c]
        result *= lead
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / lead
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * result


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of ``{x : rows @ x = 0}``, one vector per free column."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols)]
    r, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row_idx, p in enumerate(pivots):
            v[p] = -r[row_idx][f]
        basis.append(tuple(v))
    return basis


def mat_vec(rows: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in rows)


# --- Fourier-Motzkin -------------------------------------------------------

Inequality = tuple[Vector, Fraction]  # coeffs . y >= rhs


def _normalize(coeffs: Sequence[Fraction], rhs: Fraction) -> Optional[Inequality]:
    scale = max((abs(a) for a in coeffs), default=Fraction(0))
    if scale == 0:
        return None
    return tuple(a / scale for a in coeffs), rhs / scale


class _Infeasible(Exception):
    pass


def _clean(system: Iterable[Inequality]) -> list[Inequality]:
    seen: dict[Vector, Fraction] = {}
    for coeffs, rhs in system:
        norm = _normalize(coeffs, rhs)
        if norm is None:
            if rhs > 0:
                raise _Infeasible
            continue
        c, b = norm
        # same direction: keep the tightest right-hand side
        if c not in seen or b > seen[c]:
            seen[c] = b
    return sorted(seen.items())


def _eliminate(system: list[Inequality], k: int) -> list[Inequality]:
    pos, neg, rest = [], [], []
    for coeffs, rhs in system:
        a = coeffs[k]
        if a > 0:
            pos.append((coeffs, rhs))
        elif a < 0:
            neg.append((coeffs, rhs))
        else:
            rest.append((coeffs, rhs))
    out = list(rest)
    for cp, bp in pos:
        for cn, bn in neg:
            fp, fn = 1 / cp[k], 1 / -cn[k]
            coeffs = tuple(fp * x + fn * y for x, y in zip(cp, cn))
            out.append((coeffs, fp * bp + fn * bn))
    return _clean(out)


def _pick(lo: Optional[Fraction], hi: Optional[Fraction]) -> Fraction:
    if lo is not None and hi is not None and lo > hi:
        raise AssertionError("back substitution left an empty interval")
    if (lo is None or lo <= 0) and (hi is None or hi >= 0):
        return Fraction(0)
    if lo is not None and lo > 0:
        c = Fraction(-(-lo.numerator // lo.denominator))
        return c if hi is None or c <= hi else (lo + hi) / 2
    c = Fraction(hi.numerator // hi.denominator)
    return c if lo is None or c >= lo else (lo + hi) / 2


def fm_solve(coeffs: Sequence[Sequence], rhs: Sequence, nvars: Optional[int] = None) -> Optional[Vector]:
    """Find a rational ``y`` with ``coeffs @ y >= rhs``, or ``None``.

    Variables are eliminated in index order; the intermediate systems are kept
    so that a point can be recovered by back substitution.
    """
    if nvars is None:
        nvars = len(coeffs[0]) if coeffs else 0
    try:
        system = _clean((tuple(Fraction(a) for a in row), Fraction(b)) for row, b in zip(coeffs, rhs))
        stages = [system]
        for k in range(nvars):
            system = _eliminate(system, k)
            stages.append(system)
    except _Infeasible:
        return None
    if system:  # only constant rows survive; _clean already rejected bad ones
        raise AssertionError("variables left after full elimination")

    y = [Fraction(0)] * nvars
    for k in reversed(range(nvars)):
        lo = hi = None
        for c, b in stages[k]:
            a = c[k]
            if a == 0:
                continue
            bound = (b - sum((c[l] * y[l] for l in range(k + 1, nvars)), Fraction(0))) / a
            if a > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        y[k] = _pick(lo, hi)
    return tuple(y)


def fm_feasible(coeffs: Sequence[Sequence], rhs: Sequence, nvars: Optional[int] = None) -> bool:
    return fm_solve(coeffs, rhs, nvars) is not None


def cone_point(equalities: Sequence[Sequence], ncols: int, positive: Iterable[int], nonneg: Iterable[int] = ()) -> Optional[Vector]:
    """Point ``x`` with ``equalities @ x = 0``, ``x_i >= 1`` on ``positive`` and
    ``x_i >= 0`` on ``nonneg``; ``None`` if no such point exists.

    The equalities are removed by parameterising their kernel, so the
    Fourier-Motzkin stage only sees the inequalities.
    """
    basis = nullspace(equalities, ncols)
    if not basis:
        return None
    d = len(basis)
    rows, rhs = [], []
    for idx, bound in [(i, 1) for i in positive] + [(i, 0) for i in nonneg]:
        rows.append([basis[t][idx] for t in range(d)])
        rhs.append(bound)
    y = fm_solve(rows, rhs, d)
    if y is None:
        return None
    return tuple(sum((y[t] * basis[t][i] for t in range(d)), Fraction(0)) for i in range(ncols))


def fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
