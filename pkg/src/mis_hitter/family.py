"""The family of all maximum independent sets and its transversal parameters.

``h(G)`` is the transversal number of this family; alongside it we compute the
fractional transversal number (exactly, with a certificate) and the
VC-dimension.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable

from .graph import Graph, mask_of, vertices_of
from .invariants import DEFAULT_FAMILY_CAP, max_independent_sets
from .lp import solve_covering_lp


@dataclass(frozen=True)
class MaxISFamily:
    ground_n: int
    alpha: int
    sets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_sets(cls, ground_n: int, sets: Iterable[Iterable[int]]) -> MaxISFamily:
        """Normalise an arbitrary equal-size set family (sorted, deduplicated)."""
        uniq = sorted({tuple(sorted(s)) for s in sets})
        if not uniq:
            raise ValueError("family must be nonempty")
        sizes = {len(s) for s in uniq}
        if len(sizes) != 1:
            raise ValueError("members of a maximum independent set family share one size")
        return cls(ground_n, sizes.pop(), tuple(uniq))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(s) for s in self.sets)

    def __len__(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class RationalWeights:
    weights: tuple[Fraction, ...]
    total: Fraction
    dual: tuple[Fraction, ...]


@dataclass(frozen=True)
class Transversal:
    vertices: tuple[int, ...]
    size: int


def enumerate_max_independent_sets(g: Graph, cap: int = DEFAULT_FAMILY_CAP) -> MaxISFamily:
    a, found = max_independent_sets(g.adj, g.vertex_mask, collect=True, cap=cap)
    return MaxISFamily(g.n, a, tuple(sorted(vertices_of(m) for m in found)))


def fractional_transversal(fam: MaxISFamily) -> RationalWeights:
    weights, dual, total = solve_covering_lp(fam.masks, fam.ground_n)
    return RationalWeights(tuple(weights), total, tuple(dual))


def is_transversal(fam: MaxISFamily, vertices: Iterable[int]) -> bool:
    t = mask_of(vertices)
    return all(m & t for m in fam.masks)


def _packing_bound(live: list[int]) -> int:
    """Size of a greedy family of pairwise disjoint members."""
    used = 0
    count = 0
    for m in sorted(live, key=int.bit_count):
        if not m & used:
            used |= m
            count += 1
    return count


def hitting_number(fam: MaxISFamily) -> Transversal:
    """Minimum transversal by iterative deepening from the LP bound.

    Each node branches on the unhit member with the fewest still-allowed
    vertices (lowest index on ties); vertices already tried at a node are
    excluded from its later branches.  Nodes are cut by a disjoint-member
    packing bound and, failing that, by the ceiling of the residual LP.
    """
    if not fam.sets:
        raise ValueError("family must be nonempty")
    masks = fam.masks
    n = fam.ground_n
    k = max(1, math.ceil(fractional_transversal(fam).total))

    def search(unhit: list[int], budget: int, excluded: int, chosen: int):
        if not unhit:
            return chosen
        if budget == 0:
            return None
        live = [m & ~excluded for m in unhit]
        if any(m == 0 for m in live):
            return None
        if budget < len(live):
            if _packing_bound(live) > budget:
                return None
            if budget > 1 and math.ceil(solve_covering_lp(live, n)[2]) > budget:
                return None
        pick = min(range(len(live)), key=lambda i: (live[i].bit_count(), i))
        for v in vertices_of(live[pick]):
            vb = 1 << v
            res = search([m for m in unhit if not m & vb], budget - 1, excluded, chosen | vb)
            if res is not None:
                return res
            excluded |= vb
        return None

    while True:
        res = search(list(masks), k, 0, 0)
        if res is not None:
            verts = vertices_of(res)
            return Transversal(verts, len(verts))
        k += 1


def is_shattered(fam: MaxISFamily, s: Iterable[int]) -> tuple[bool, dict[tuple[int, ...], int]]:
    """Whether every subset of ``s`` is a trace ``F & s``.

    The map sends each realised trace (as a sorted tuple) to the lowest index
    of a member realising it.
    """
    sm = mask_of(s)
    realizers: dict[int, int] = {}
    for idx, m in enumerate(fam.masks):
        realizers.setdefault(m & sm, idx)
    shattered = len(realizers) == 1 << sm.bit_count()
    ordered = sorted((vertices_of(tr), idx) for tr, idx in realizers.items())
    ordered.sort(key=lambda kv: len(kv[0]))
    return shattered, dict(ordered)


def vc_dimension(fam: MaxISFamily) -> tuple[int, tuple[int, ...]]:
    """VC-dimension and the lexicographically first shattered set attaining it.

    Shattered sets are closed under subsets and each lies inside some member,
    so the search grows them level by level from members' vertices only.
    """
    masks = fam.masks
    union = 0
    for m in masks:
        union |= m
    level = [0]
    best = 0
    size = 0
    while level and 1 << (size + 1) <= len(masks):
        nxt = []
        for s in level:
            top = s.bit_length()
            for v in vertices_of(union >> top << top):
                c = s | 1 << v
                if not any(c & m == c for m in masks):
                    continue
                if len({m & c for m in masks}) == 1 << (size + 1):
                    nxt.append(c)
        if not nxt:
            break
        level = nxt
        size += 1
        best = level[0]
    return size, vertices_of(best)
