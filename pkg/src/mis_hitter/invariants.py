"""Exact independence, clique, chromatic and induced-matching numbers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .graph import Graph, complement, vertices_of

DEFAULT_FAMILY_CAP = 10**6
CHI_MAX_N = 20
CHI_NODE_BUDGET = 2_000_000


class FamilyCapExceeded(RuntimeError):
    """More maximum independent sets than the configured cap."""


class ChromaticBudgetExceeded(RuntimeError):
    """Exact colouring refused: graph too large or search budget spent."""


@dataclass(frozen=True)
class InvariantValue:
    value: int
    witness: Any


# ---------------------------------------------------------------------------
# maximum independent sets

def _clique_cover_size(adj, p: int) -> int:
    """Number of cliques in a greedy clique cover of ``p``; bounds alpha(G[p])."""
    count = 0
    while p:
        low = p & -p
        p ^= low
        q = p & adj[low.bit_length() - 1]
        while q:
            u = q & -q
            p ^= u
            q &= adj[u.bit_length() - 1]
        count += 1
    return count


def max_independent_sets(adj, cand: int, collect: bool = True, cap: int = DEFAULT_FAMILY_CAP):
    """Branch and bound over the vertex mask ``cand``.

    Returns ``(alpha, masks)``.  With ``collect`` every maximum independent set
    inside ``cand`` is returned exactly once (unsorted); otherwise one of them.
    Works for any adjacency list of int masks, not only 64-vertex graphs.
    """
    best = 0
    found: list[int] = []

    def rec(r: int, size: int, p: int) -> None:
        nonlocal best, found
        if not p:
            if size > best:
                best, found = size, [r]
            elif size == best and collect:
                found.append(r)
                if len(found) > cap:
                    raise FamilyCapExceeded(f"more than {cap} maximum independent sets")
            return
        pc = p.bit_count()
        # ties with best are still interesting when collecting
        slack = 0 if collect else 1
        if size + pc < best + slack:
            return
        if pc > 3 and size + _clique_cover_size(adj, p) < best + slack:
            return
        v, vd = -1, -1
        m = p
        while m:
            low = m & -m
            u = low.bit_length() - 1
            d = (adj[u] & p).bit_count()
            if d > vd:
                v, vd = u, d
            m ^= low
        if vd == 0:
            rec(r | p, size + pc, 0)
            return
        vb = 1 << v
        rec(r | vb, size + 1, p & ~adj[v] & ~vb)
        rec(r, size, p & ~vb)

    rec(0, 0, cand)
    return best, found


def alpha(g: Graph) -> InvariantValue:
    """Independence number with one maximum independent set as witness."""
    a, found = max_independent_sets(g.adj, g.vertex_mask, collect=False)
    return InvariantValue(a, vertices_of(found[0]))


def omega(g: Graph) -> InvariantValue:
    """Clique number, computed as the independence number of the complement."""
    return alpha(complement(g))


# ---------------------------------------------------------------------------
# colouring

def is_proper_coloring(g: Graph, colors) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges())


def _dsatur_greedy(g: Graph, order_hint=()) -> list[int]:
    n = g.n
    colors = [-1] * n
    classes: list[int] = []
    for c, v in enumerate(order_hint):
        colors[v] = c
        classes.append(1 << v)
    for _ in range(n - len(order_hint)):
        v = _pick_dsatur(g, colors, classes)
        for c, cls in enumerate(classes):
            if not g.adj[v] & cls:
                break
        else:
            c = len(classes)
            classes.append(0)
        colors[v] = c
        classes[c] |= 1 << v
    return colors


def _pick_dsatur(g: Graph, colors, classes) -> int:
    best, key = -1, None
    for v in range(g.n):
        if colors[v] >= 0:
            continue
        sat = sum(1 for cls in classes if g.adj[v] & cls)
        k = (sat, g.degree(v))
        if key is None or k > key:
            best, key = v, k
    return best


def chromatic_number(g: Graph, max_n: int = CHI_MAX_N, node_budget: int = CHI_NODE_BUDGET) -> InvariantValue:
    """Exact chromatic number by DSATUR branch and bound.

    A maximum clique is pre-coloured (it is also the lower bound).  Raises
    ``ChromaticBudgetExceeded`` rather than returning an upper bound.
    """
    if g.n > max_n:
        raise ChromaticBudgetExceeded(f"n={g.n} exceeds exact colouring limit {max_n}")
    clique = omega(g).witness
    lower = len(clique)
    best_colors = _dsatur_greedy(g, clique)
    best = max(best_colors) + 1
    if best == lower:
        return InvariantValue(best, tuple(best_colors))

    colors = [-1] * g.n
    classes: list[int] = []
    for c, v in enumerate(clique):
        colors[v] = c
        classes.append(1 << v)
    nodes = 0

    def rec(uncolored: int) -> bool:
        nonlocal best, best_colors, nodes
        nodes += 1
        if nodes > node_budget:
            raise ChromaticBudgetExceeded(f"colouring search exceeded {node_budget} nodes")
        if len(classes) >= best:
            return False
        if uncolored == 0:
            best, best_colors = len(classes), list(colors)
            return best == lower
        v = _pick_dsatur(g, colors, classes)
        for c in range(len(classes)):
            if not g.adj[v] & classes[c]:
                colors[v] = c
                classes[c] |= 1 << v
                done = rec(uncolored - 1)
                classes[c] &= ~(1 << v)
                colors[v] = -1
                if done:
                    return True
        if len(classes) + 1 < best:
            colors[v] = len(classes)
            classes.append(1 << v)
            done = rec(uncolored - 1)
            classes.pop()
            colors[v] = -1
            if done:
                return True
        return False

    rec(g.n - lower)
    return InvariantValue(best, tuple(best_colors))


# ---------------------------------------------------------------------------
# induced matchings

def is_induced_matching(g: Graph, edges) -> bool:
    ends = [v for e in edges for v in e]
    if len(set(ends)) != len(ends) or not all(g.has_edge(u, v) for u, v in edges):
        return False
    mask = sum(1 << v for v in ends)
    return sum((g.adj[v] & mask).bit_count() for v in ends) == 2 * len(edges)


def induced_matching_number(g: Graph) -> InvariantValue:
    """Largest set of edges whose endpoints induce exactly those edges.

    Depth-first over the edge list; picking ``uv`` forbids the closed
    neighbourhoods of both endpoints for all later edges.
    """
    edges = g.edges()
    closed = [nb | 1 << v for v, nb in enumerate(g.adj)]
    best: list[tuple[int, int]] = []
    chosen: list[tuple[int, int]] = []

    def rec(i: int, allowed: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + allowed.bit_count() // 2 <= len(best):
            return
        for j in range(i, len(edges)):
            u, v = edges[j]
            if allowed >> u & 1 and allowed >> v & 1:
                chosen.append((u, v))
                rec(j + 1, allowed & ~(closed[u] | closed[v]))
                chosen.pop()
                if len(chosen) + allowed.bit_count() // 2 <= len(best):
                    return

    rec(0, g.vertex_mask)
    return InvariantValue(len(best), tuple(best))


def wagon_bound(omega: int, t: int) -> int:
    """Chromatic bound omega**(2t-2) for graphs with no induced matching of size t."""
    if omega < 1 or t < 1:
        raise ValueError("wagon_bound needs omega >= 1 and t >= 1")
    return omega ** (2 * t - 2)
