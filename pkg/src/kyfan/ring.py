"""Truncated graded polynomial rings over Z/2 and Stiefel-Whitney bookkeeping.

A :class:`GradedRing` is ``Z2[g_1, ..., g_m] / (g_1^{d_1}, ..., g_m^{d_m})``.
Elements are frozensets of exponent vectors (every coefficient is 1), so
addition is symmetric difference and zero is the empty set.

On top of that sit the pieces needed to work in ``H*(E/Z2)`` viewed as a free
``H*(B)``-module on ``1, t, ..., t^n``:

* :func:`invert_total_class` -- dual class ``wbar = 1/w``,
* :func:`w_table_recurrence` and :func:`w_conner` -- the two independent
  routes to the coefficients ``W_{i,j}`` of ``t^{n+j+1}``,
* :func:`reduce_t_power`, :func:`multiply_by_t`, :func:`height_of_t`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GradedRing:
    """Generators are ``(name, degree, truncation)``; ``g^truncation = 0``."""

    generators: tuple[tuple[str, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(tuple(g) for g in self.generators))
        for name, deg, trunc in self.generators:
            if deg < 1 or trunc < 1:
                raise ValueError(f"generator {name!r}: degree and truncation must be >= 1")
        names = [g[0] for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g[0] for g in self.generators)

    @property
    def top_degree(self) -> int:
        return sum(deg * (trunc - 1) for _, deg, trunc in self.generators)

    def degree(self, mono: Monomial) -> int:
        return sum(e * g[1] for e, g in zip(mono, self.generators))

    def valid(self, mono: Monomial) -> bool:
        return all(0 <= e < g[2] for e, g in zip(mono, self.generators))

    def element(self, monos: Iterable[Monomial]) -> "RingElement":
        terms: set[Monomial] = set()
        for m in monos:
            m = tuple(m)
            if len(m) != len(self.generators):
                raise ValueError(f"exponent vector {m} has wrong length")
            if self.valid(m):
                terms ^= {m}
        return RingElement(self, frozenset(terms))

    def zero(self) -> "RingElement":
        return RingElement(self, frozenset())

    def one(self) -> "RingElement":
        return self.element([(0,) * len(self.generators)])

    def gen(self, name: str, power: int = 1) -> "RingElement":
        idx = self.names.index(name)
        mono = tuple(power if i == idx else 0 for i in range(len(self.generators)))
        return self.element([mono])

    def monomials_of_degree(self, d: int) -> list[Monomial]:
        out: list[Monomial] = [()]
        for _, deg, trunc in self.generators:
            out = [m + (e,) for m in out for e in range(trunc)]
        return [m for m in out if self.degree(m) == d]

    def parse(self, text: str) -> "RingElement":
        """Parse ``"1 + a^2 + w1*w2^3"`` (or ``w1w2^3``); ``"0"`` is zero."""
        text = text.strip()
        if text in ("", "0"):
            return self.zero()
        total = self.zero()
        for term in text.split("+"):
            term = term.strip()
            mono = [0] * len(self.generators)
            if term != "1":
                # factors may be joined by '*' or juxtaposed ("w1w2^2")
                names = "|".join(re.escape(x) for x in sorted(self.names, key=len, reverse=True))
                factor_re = re.compile(rf"\s*({names})\s*(?:\^\s*(\d+))?\s*\*?")
                pos, body = 0, term.replace(" ", "")
                while pos < len(body):
                    m = factor_re.match(body, pos)
                    if not m or m.end() == pos:
                        raise ValueError(f"cannot parse term {term!r}")
                    mono[self.names.index(m.group(1))] += int(m.group(2) or 1)
                    pos = m.end()
            total = total + RingElement(self, frozenset({tuple(mono)} if self.valid(tuple(mono)) else ()))
        return total

    def __str__(self):
        parts = []
        for name, deg, trunc in self.generators:
            parts.append(f"Z2[{name}]/({name}^{trunc})" + (f" deg {name}={deg}" if deg != 1 else ""))
        return " (x) ".join(parts) if parts else "Z2"


def truncated_ring(name: str = "a", top: int = 4, degree: int = 1) -> GradedRing:
    """``Z2[name]/(name^{top+1})`` with the given generator degree."""
    return GradedRing(((name, degree, top + 1),))


@dataclass(frozen=True)
class RingElement:
    ring: GradedRing
    terms: frozenset = field(default_factory=frozenset)

    def _check(self, other: "RingElement"):
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc: set[Monomial] = set()
        for m1 in self.terms:
            for m2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                if self.ring.valid(m):
                    acc ^= {m}
        return RingElement(self.ring, frozenset(acc))

    def __pow__(self, e: int):
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {self.ring.degree(m) for m in self.terms}

    def is_homogeneous(self, d: int) -> bool:
        return all(self.ring.degree(m) == d for m in self.terms)

    def component(self, d: int) -> "RingElement":
        return RingElement(self.ring, frozenset(m for m in self.terms if self.ring.degree(m) == d))

    def _sorted_terms(self):
        return sorted(self.terms, key=lambda m: (self.ring.degree(m), tuple(-e for e in m)))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(format_monomial(self.ring, m) for m in self._sorted_terms())

    def __repr__(self):
        return f"RingElement({self})"


def format_monomial(ring: GradedRing, mono: Monomial) -> str:
    parts = []
    for (name, _, _), e in zip(ring.generators, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts) if parts else "1"


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


@dataclass(frozen=True)
class TotalClass:
    """``w = 1 + w_1 + w_2 + ...`` of a rank-``rank`` bundle.

    ``components[d]`` is the homogeneous degree-``d`` part; missing degrees
    are zero and degrees above ``rank`` are forced to zero.
    """

    ring: GradedRing
    components: Mapping[int, RingElement]
    rank: int

    def __post_init__(self):
        comps = {}
        for d, x in self.components.items():
            if x.ring != self.ring:
                raise RingMismatch("component from a different ring")
            if not x.is_homogeneous(d):
                raise ValueError(f"component {d} is not homogeneous of degree {d}: {x}")
            if d > self.rank or d > self.ring.top_degree:
                if x:
                    raise ValueError(f"nonzero component in degree {d} above rank {self.rank}")
                continue
            if x:
                comps[d] = x
        if comps.get(0) != self.ring.one():
            raise ValueError("degree-0 component must be the unit")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_element(cls, x: RingElement, rank: int) -> "TotalClass":
        comps = {d: x.component(d) for d in x.degrees()}
        return cls(x.ring, comps, rank)

    def __getitem__(self, d: int) -> RingElement:
        if d < 0:
            return self.ring.zero()
        return self.components.get(d, self.ring.zero())

    def total(self) -> RingElement:
        out = self.ring.zero()
        for x in self.components.values():
            out = out + x
        return out

    def __str__(self):
        return str(self.total())


def invert_total_class(w: TotalClass) -> TotalClass:
    """Dual class, degree by degree: ``wbar_d = sum_{e=1}^{d} w_e wbar_{d-e}``.

    The rank of the result is nominal (``top_degree``), since the dual class of
    a rank-r bundle may be nonzero in any degree.
    """
    ring = w.ring
    bar = [ring.one()]
    for d in range(1, ring.top_degree + 1):
        acc = ring.zero()
        for e in range(1, d + 1):
            acc = acc + w[e] * bar[d - e]
        bar.append(acc)
    return TotalClass(ring, dict(enumerate(bar)), ring.top_degree)


def w_table_recurrence(w: TotalClass, n: int, j_max: int) -> dict[tuple[int, int], RingElement]:
    """``W_{i,j}`` for ``1 <= i <= n+1``, ``0 <= j <= j_max``.

    ``W_{i,0} = w_i`` and ``W_{i,j+1} = W_{i+1,j} + W_{1,j} w_i`` with
    ``W_{n+2,j} = 0``.
    """
    if w.rank != n + 1:
        raise ValueError(f"total class has rank {w.rank}, expected n+1 = {n + 1}")
    zero = w.ring.zero()
    table = {(i, 0): w[i] for i in range(1, n + 2)}
    for j in range(j_max):
        for i in range(1, n + 2):
            nxt = table[(i + 1, j)] if i + 1 <= n + 1 else zero
            table[(i, j + 1)] = nxt + table[(1, j)] * w[i]
    return table


def w_conner(w: TotalClass, i: int, j: int, wbar: TotalClass | None = None) -> RingElement:
    """Truncated convolution ``W_{i,j} = sum_{k=0}^{j} wbar_k w_{i+j-k}``."""
    if not 1 <= i <= w.rank or j < 0:
        raise ValueError(f"(i, j) = ({i}, {j}) out of range for rank {w.rank}")
    if wbar is None:
        wbar = invert_total_class(w)
    acc = w.ring.zero()
    for k in range(j + 1):
        acc = acc + wbar[k] * w[i + j - k]
    return acc


@dataclass(frozen=True)
class TPowerExpression:
    """``coeffs[0] + coeffs[1] t + ... + coeffs[n] t^n`` over the base ring."""

    n: int
    coeffs: tuple[RingElement, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise ValueError("need exactly n+1 coefficients")

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other: "TPowerExpression") -> "TPowerExpression":
        return TPowerExpression(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __str__(self):
        parts = []
        for p in range(self.n, -1, -1):
            c = self.coeffs[p]
            if not c:
                continue
            tp = "" if p == 0 else ("t" if p == 1 else f"t^{p}")
            cs = str(c)
            if len(c.terms) > 1 and tp:
                cs = f"({cs})"
            if cs == "1" and tp:
                cs = ""
            parts.append(cs + tp)
        return " + ".join(parts) if parts else "0"


def t_basis(ring: GradedRing, n: int, p: int) -> TPowerExpression:
    return TPowerExpression(n, tuple(ring.one() if q == p else ring.zero() for q in range(n + 1)))


def multiply_by_t(w: TotalClass, expr: TPowerExpression) -> TPowerExpression:
    """Shift by one power of t and rewrite ``t^{n+1} = sum_i w_i t^{n+1-i}``."""
    n = expr.n
    top = expr.coeffs[n]
    shifted = [w.ring.zero()] + list(expr.coeffs[:n])
    for i in range(1, n + 2):
        shifted[n + 1 - i] = shifted[n + 1 - i] + top * w[i]
    return TPowerExpression(n, tuple(shifted))


def reduce_t_power(w: TotalClass, n: int, m: int,
                   table: Mapping[tuple[int, int], RingElement] | None = None) -> TPowerExpression:
    """``t^m`` in the basis ``1, t, ..., t^n``, read off the ``W_{i,j}`` table."""
    if m < 0:
        raise ValueError("negative power")
    ring = w.ring
    if m <= n:
        return t_basis(ring, n, m)
    j = m - n - 1
    if table is None or (1, j) not in table:
        table = w_table_recurrence(w, n, j)
    coeffs = [ring.zero()] * (n + 1)
    for i in range(1, n + 2):
        coeffs[n - i + 1] = table[(i, j)]
    return TPowerExpression(n, tuple(coeffs))


def height_of_t(w: TotalClass, n: int, k: int) -> int:
    """Largest ``m <= n + k`` with ``t^m != 0``."""
    table = w_table_recurrence(w, n, max(k - 1, 0))
    best = n
    for m in range(n + 1, n + k + 1):
        if reduce_t_power(w, n, m, table):
            best = m
        else:
            break  # t^m = 0 kills every higher power
    return best


def binom_mod2(n: int, r: int) -> int:
    """Lucas: ``C(n, r)`` is odd iff the bits of r are a subset of those of n."""
    return int(0 <= r <= n and (n & r) == r)


@dataclass(frozen=True)
class SpaceClasses:
    ring: GradedRing
    w: TotalClass
    n: int
    k: int
    label: str


def tangent_total_class(kind: str, m: int) -> SpaceClasses:
    """Tangent bundle of ``RP^m`` (``kind='rp'``) or ``CP^m`` (``kind='cp'``).

    Both have ``w = (1 + g)^{m+1}`` with ``g`` the generator (degree 1 for rp,
    degree 2 for cp).  The sphere bundle has fiber dimension ``rank - 1``.
    """
    if m < 1:
        raise ValueError("dimension parameter must be >= 1")
    if kind == "rp":
        ring, name, rank, k = truncated_ring("a", m, 1), "a", m, m
    elif kind == "cp":
        ring, name, rank, k = truncated_ring("c", m, 2), "c", 2 * m, 2 * m
    else:
        raise ValueError(f"unknown space kind {kind!r}")
    deg = ring.generators[0][1]
    comps = {deg * p: ring.gen(name, p) for p in range(m + 1) if binom_mod2(m + 1, p)}
    return SpaceClasses(ring, TotalClass(ring, comps, rank), rank - 1, k, f"{kind}:{m}")


def parse_space(spec: str) -> SpaceClasses:
    m = re.fullmatch(r"\s*(rp|cp)\s*:\s*(\d+)\s*", spec)
    if not m:
        raise ValueError(f"bad space {spec!r}; expected rp:m or cp:m")
    return tangent_total_class(m.group(1), int(m.group(2)))


def space_from_mapping(data: Mapping) -> SpaceClasses:
    """Custom base ring and classes, e.g. from a JSON document::

        {"generators": [["w1", 1, 5], ["w2", 2, 3]],
         "n": 1, "w": {"1": "w1", "2": "w2"}, "k": 4}

    ``k`` defaults to the top degree of the ring.
    """
    ring = GradedRing(tuple((str(g[0]), int(g[1]), int(g[2])) for g in data["generators"]))
    n = int(data["n"])
    comps = {0: ring.one()}
    for d, text in data.get("w", {}).items():
        comps[int(d)] = ring.parse(str(text))
    w = TotalClass(ring, comps, n + 1)
    return SpaceClasses(ring, w, n, int(data.get("k", ring.top_degree)), data.get("label", "custom"))


def random_total_class(rng, top: int, rank: int) -> TotalClass:
    """Random ``1 + sum eps_d a^d`` over ``Z2[a]/(a^{top+1})``."""
    ring = truncated_ring("a", top)
    comps = {0: ring.one()}
    for d in range(1, min(rank, top) + 1):
        if rng.random() < 0.5:
            comps[d] = ring.gen("a", d)
    return TotalClass(ring, comps, rank)


def t_powers(w: TotalClass, n: int, upto: int) -> list[TPowerExpression]:
    table = w_table_recurrence(w, n, max(upto - n - 1, 0))
    return [reduce_t_power(w, n, m, table) for m in range(upto + 1)]


def check_tables_agree(w: TotalClass, n: int, j_max: int) -> list[tuple[int, int]]:
    """Pairs ``(i, j)`` where recurrence and Conner disagree (expected: none)."""
    wbar = invert_total_class(w)
    table = w_table_recurrence(w, n, j_max)
    return [ij for ij, val in sorted(table.items()) if val != w_conner(w, ij[0], ij[1], wbar)]


def total_product(x: TotalClass, y: TotalClass) -> RingElement:
    return x.total() * y.total()


__all__: Sequence[str] = [
    "GradedRing", "RingElement", "TotalClass", "TPowerExpression", "SpaceClasses",
    "RingMismatch", "truncated_ring", "ring_add", "ring_mul", "invert_total_class",
    "w_table_recurrence", "w_conner", "multiply_by_t", "reduce_t_power", "height_of_t",
    "tangent_total_class", "parse_space", "space_from_mapping", "binom_mod2",
    "random_total_class", "t_powers", "check_tables_agree", "t_basis", "total_product",
]
