"""Published reference values for the tangent sphere bundles of RP^m and CP^m.

Identities are stored as ``{power: {t-exponent: coefficient}}`` in the ring
of :func:`kyfan.ring.tangent_total_class`; ``w_2`` and ``w_4`` of CP^2 are
``c`` and ``c^2``.  Count claims are kept as text; nothing here verifies them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ring import SpaceClasses, TPowerExpression


@dataclass
class PublishedValues:
    identities: dict[int, dict[int, str]] = field(default_factory=dict)
    nonzero_powers: list[int] = field(default_factory=list)
    w_entries: dict[tuple[int, int], str] = field(default_factory=dict)
    count_claims: list[str] = field(default_factory=list)


def published(label: str) -> PublishedValues:
    kind, _, m = label.partition(":")
    if not m.isdigit():
        return PublishedValues()
    m = int(m)
    if label == "rp:4":
        return PublishedValues(
            identities={4: {3: "a", 0: "a^4"}, 5: {3: "a^2", 1: "a^4"}, 6: {3: "a^3", 2: "a^4"}, 7: {}},
            nonzero_powers=[6],
            w_entries={(2, 2): "a^4"},
            count_claims=["at least 3 simplices with Alt = 6",
                          "at least 3 pairs of simplices with Alt >= 6"],
        )
    if label == "cp:2":
        return PublishedValues(
            identities={4: {2: "c", 0: "c^2"}, 7: {3: "c^2", 2: "c^2"}},
            nonzero_powers=[7],
            count_claims=["at least 3 simplices with Alt >= 7"],
        )
    if kind == "rp" and m >= 2 and m & (m - 1) == 0:
        return PublishedValues(
            nonzero_powers=[2 * m - 2],
            w_entries={(2, m - 2): f"a^{m}"},
            count_claims=[f"at least 3 pairs of simplices with Alt >= {2 * m - 2}"],
        )
    return PublishedValues()


def expression(space: SpaceClasses, coeffs: dict[int, str]) -> TPowerExpression:
    ring = space.ring
    return TPowerExpression(space.n, tuple(ring.parse(coeffs.get(p, "0")) for p in range(space.n + 1)))
