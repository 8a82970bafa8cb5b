"""
The weak preorder u <= v (some w has uw = v), R- and J-triviality.

Reachability sets are kept as int bitmasks: bit y of `up[x]` is set when
x <= y. Bitmask rows keep the O(n^2) relation cheap even at a few hundred
elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .monoid import Monoid

__all__ = [
    "OrderRelation", "RTrivialVerdict", "AbsorptionVerdict",
    "weak_preorder", "is_r_trivial", "is_j_trivial", "check_left_absorption",
    "iter_bits",
]


def iter_bits(mask: int):
    """Yield the set bit positions of `mask`, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class OrderRelation:
    """The weak preorder of a monoid.

    `chain_length` is the number of elements in a longest strictly
    increasing chain; it is None when the preorder is not a partial order
    (all stabilization bounds downstream assume R-triviality).
    """

    size: int
    up: list[int]                      # bitmask upsets, reflexive
    is_partial_order: bool
    witness: tuple[int, int] | None    # x != y with x <= y <= x, if any
    chain_length: int | None

    def leq(self, x: int, y: int) -> bool:
        return (self.up[x] >> y) & 1 == 1

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)


class RTrivialVerdict(NamedTuple):
    ok: bool
    witness: tuple[int, int] | None

    def __bool__(self) -> bool:
        return self.ok


class AbsorptionVerdict(NamedTuple):
    ok: bool
    violation: tuple[int, int, int] | None

    def __bool__(self) -> bool:
        return self.ok


def weak_preorder(m: Monoid) -> OrderRelation:
    """Compute u <= v as reachability in the right Cayley graph."""
    n = m.size
    k = len(m.generators)
    up = [0] * n
    for x in range(n):
        seen = 1 << x
        frontier = [x]
        while frontier:
            nxt = []
            for u in frontier:
                for gi in range(k):
                    v = m.gen_step(u, gi)
                    if not (seen >> v) & 1:
                        seen |= 1 << v
                        nxt.append(v)
            frontier = nxt
        up[x] = seen

    witness = None
    for x in range(n):
        for y in iter_bits(up[x]):
            if y != x and (up[y] >> x) & 1:
                witness = (min(x, y), max(x, y))
                break
        if witness:
            break

    chain = None
    if witness is None:
        # strict order is a DAG; height by decreasing upset size is a
        # valid reverse-topological sweep (x < y forces up[y] subset up[x])
        height = [1] * n
        for x in sorted(range(n), key=lambda t: up[t].bit_count()):
            best = 0
            for y in iter_bits(up[x]):
                if y != x and height[y] > best:
                    best = height[y]
            height[x] = best + 1
        chain = max(height)

    return OrderRelation(
        size=n, up=up, is_partial_order=witness is None,
        witness=witness, chain_length=chain,
    )


def is_r_trivial(m: Monoid, order: OrderRelation | None = None) -> RTrivialVerdict:
    """True iff the weak preorder is antisymmetric."""
    order = order if order is not None else weak_preorder(m)
    return RTrivialVerdict(order.is_partial_order, order.witness)


def principal_two_sided_ideals(m: Monoid) -> list[frozenset[int]]:
    """SxS for every x, via closure under one-sided generator steps."""
    n = m.size
    gen_rows = [m.row(g) for g in m.generators]  # left steps x -> g*x
    k = len(m.generators)
    out = []
    for x in range(n):
        seen = 1 << x
        frontier = [x]
        while frontier:
            nxt = []
            for u in frontier:
                for gi in range(k):
                    for v in (m.gen_step(u, gi), gen_rows[gi][u]):
                        if not (seen >> v) & 1:
                            seen |= 1 << v
                            nxt.append(v)
            frontier = nxt
        out.append(frozenset(iter_bits(seen)))
    return out


def is_j_trivial(m: Monoid) -> bool:
    """True iff all principal two-sided ideals SxS are distinct."""
    ideals = principal_two_sided_ideals(m)
    return len(set(ideals)) == m.size


def check_left_absorption(m: Monoid,
                          order: OrderRelation | None = None) -> AbsorptionVerdict:
    """Check that xyz = x forces xy = x, for all triples.

    xyz = x for some z is exactly xy <= x in the weak preorder, so the scan
    is O(n^2) over pairs instead of O(n^3) over triples; a violating z is
    recovered only when a counterexample exists. For an R-trivial monoid a
    violation is impossible, so one here means corrupted input upstream.
    """
    order = order if order is not None else weak_preorder(m)
    n = m.size
    for x in range(n):
        rx = m.row(x)
        for y in range(n):
            w = rx[y]
            if w != x and (order.up[w] >> x) & 1:
                z = m.row(w).index(x)
                return AbsorptionVerdict(False, (x, y, z))
    return AbsorptionVerdict(True, None)
