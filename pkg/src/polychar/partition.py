"""Partition-function tables.

All tables map simple-root-basis integer vectors to integers and are
truncated at a height bound (height = sum of root coordinates).  They are
built by iterative multiplication of one root factor at a time, so the
work is shared across all arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootsystem import RootSystemData, RootVector, root_height


@dataclass(frozen=True)
class PartitionTable:
    """Coefficients of prod_{a in U} (1 - e^a)^{-1}, truncated by height."""
    root_subset: tuple[RootVector, ...]
    height_bound: int
    values: dict = field(hash=False)

    def __call__(self, gamma) -> int:
        return self.values.get(tuple(gamma), 0)


@dataclass(frozen=True)
class FTable:
    """Coefficients of the finite product prod_{g in R+\\S} (1 - e^g)."""
    height_bound: int
    values: dict = field(hash=False)

    def __call__(self, beta) -> int:
        return self.values.get(tuple(beta), 0)


def _multiply_geometric(table: dict, gamma, height_bound: int) -> dict:
    """Multiply a truncated series by 1 + e^gamma + e^{2 gamma} + ..."""
    import heapq

    if root_height(gamma) == 0:
        raise ValueError("zero-height factor in geometric series")
    out = dict(table)
    # in-place recurrence new(k) = old(k) + new(k - gamma); a key is final
    # once every lower-height key has been processed
    heap = [(root_height(k), k) for k in out]
    heapq.heapify(heap)
    queued = set(out)
    while heap:
        _, key = heapq.heappop(heap)
        shifted = tuple(a + b for a, b in zip(key, gamma))
        if root_height(shifted) <= height_bound:
            out[shifted] = out.get(shifted, 0) + out[key]
            if shifted not in queued:
                queued.add(shifted)
                heapq.heappush(heap, (root_height(shifted), shifted))
    return out


def kostant_table(rs: RootSystemData, U, height_bound: int) -> PartitionTable:
    """K_U(gamma): number of ways to write gamma as an N0-combination of U."""
    roots = tuple(tuple(g) for g in U)
    pos = set(rs.positive_roots)
    for g in roots:
        if g not in pos:
            raise ValueError(f"{g} is not a positive root of {rs.algebra}")
    zero = tuple([0] * rs.rank)
    table = {zero: 1}
    for g in roots:
        table = _multiply_geometric(table, g, height_bound)
    return PartitionTable(root_subset=roots, height_bound=height_bound, values=table)


def f_table(rs: RootSystemData, height_bound: int | None = None) -> FTable:
    """Coefficients F(beta) of prod_{g in R+\\S} (1 - e^g).

    The product is finite; with no explicit bound the complete table is
    returned.
    """
    extra = [g for g in rs.positive_roots if root_height(g) > 1]
    full = sum(root_height(g) for g in extra)
    bound = full if height_bound is None else min(height_bound, full)
    zero = tuple([0] * rs.rank)
    table = {zero: 1}
    for g in extra:
        out = dict(table)
        for key, coeff in table.items():
            shifted = tuple(a + b for a, b in zip(key, g))
            if root_height(shifted) <= bound:
                out[shifted] = out.get(shifted, 0) - coeff
        table = {k: v for k, v in out.items() if v != 0}
    return FTable(height_bound=bound, values=table)
